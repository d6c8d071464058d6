import pytest

from crossedprod.errors import CapExceededError, NotAbelianError, SectionInvalidError
from crossedprod.groups import (
    Homomorphism,
    are_isomorphic,
    cyclic_group,
    dihedral_group,
    identify_group,
    make_group,
    normal_subgroups,
    quaternion_group,
    quotient,
    subgroup_as_group,
    symmetric_group,
)
from crossedprod.classify import are_equivalent_1, are_equivalent_2
from crossedprod.decompose import (
    Section,
    decompose,
    decompose_abelian,
    default_section,
    extension,
    extract_crossed_system,
    holder_cross_validate,
    holder_enumerate,
    is_simple,
    validate_section,
)
from crossedprod.products import build_product, build_semidirect
from crossedprod.systems import trivial_action, trivial_cocycle, validate_crossed_system, weak_action

C2 = cyclic_group(2)
C4 = cyclic_group(4)


def canonical_extension(prod):
    return extension(prod.group, prod.include_h, prod.project_g)


def test_extension_validation():
    s3 = symmetric_group(3)
    a3 = normal_subgroups(s3)[1]
    sub, incl = subgroup_as_group(a3)
    q, proj = quotient(s3, a3)
    ext = extension(s3, incl, proj)
    assert ext.h_image.elements == a3.elements
    # a non-exact pair is rejected: projection onto the wrong quotient
    with pytest.raises(SectionInvalidError):
        extension(s3, incl, Homomorphism(s3, q, (0, 0, 0, 0, 0, 0)))


def test_default_section_minimal_preimages():
    s3 = symmetric_group(3)
    a3 = normal_subgroups(s3)[1]
    _, incl = subgroup_as_group(a3)
    q, proj = quotient(s3, a3)
    ext = extension(s3, incl, proj)
    sec = default_section(ext)
    assert sec.table[0] == 0
    for qi in q.elements():
        preimages = [x for x in s3.elements() if proj.map[x] == qi]
        assert sec.table[qi] == min(preimages)
    validate_section(ext, sec)
    with pytest.raises(SectionInvalidError):
        validate_section(ext, Section(table=(1, sec.table[1])))


def test_default_section_of_direct_product_extension():
    c3 = cyclic_group(3)
    sys = validate_crossed_system(
        c3, C2, trivial_action(C2, c3), trivial_cocycle(C2, c3)
    )
    prod = build_product(sys)
    ext = canonical_extension(prod)
    sec = default_section(ext)
    assert sec.table == tuple(prod.encode(0, g) for g in C2.elements())


def test_extract_split_extension_has_trivial_cocycle():
    inv = tuple(cyclic_group(3).inv(x) for x in range(3))
    act = weak_action(C2, cyclic_group(3), [tuple(range(3)), inv])
    prod = build_semidirect(cyclic_group(3), C2, act)
    ext = canonical_extension(prod)
    sys, theta = extract_crossed_system(ext, default_section(ext))
    assert all(v == 0 for row in sys.cocycle.table for v in row)
    assert theta.is_bijective()


def test_extract_c4_over_c2_is_twisted():
    sub, incl = subgroup_as_group(normal_subgroups(C4)[1])  # {0, 2}
    q, proj = quotient(C4, normal_subgroups(C4)[1])
    ext = extension(C4, incl, proj)
    sec = default_section(ext)
    assert sec.table == (0, 1)
    sys, theta = extract_crossed_system(ext, sec)
    assert sys.normalized
    assert sys.action.is_trivial()
    assert sys.cocycle.table[1][1] == 1  # f(a, a) is the nontrivial element
    assert are_isomorphic(build_product(sys).group, C4) is not None


def test_extract_quaternion_matches_standard_system():
    q8 = quaternion_group()
    best = [s for s in normal_subgroups(q8) if s.order == 4][0]
    sub, incl = subgroup_as_group(best)
    q, proj = quotient(q8, best)
    ext = extension(q8, incl, proj)
    sys, theta = extract_crossed_system(ext, default_section(ext))
    # same underlying tables as the reference system, so equivalence applies
    assert sub.table == C4.table and q.table == C2.table
    inv = tuple(C4.inv(x) for x in C4.elements())
    from crossedprod.systems import cocycle

    reference = validate_crossed_system(
        C4, C2, weak_action(C2, C4, [tuple(range(4)), inv]),
        cocycle(C2, C4, [[0, 0], [0, 2]]),
    )
    assert are_equivalent_2(sys, reference) is not None


def test_theta_respects_projection_and_inclusion():
    s3 = symmetric_group(3)
    a3 = normal_subgroups(s3)[1]
    sub, incl = subgroup_as_group(a3)
    q, proj = quotient(s3, a3)
    ext = extension(s3, incl, proj)
    sys, theta = extract_crossed_system(ext, default_section(ext))
    prod = build_product(sys)
    for idx in prod.group.elements():
        assert proj.map[theta.map[idx]] == prod.project_g.map[idx]
    for h in sub.elements():
        assert theta.map[prod.include_h.map[h]] == incl.map[h]


def test_section_independence_up_to_equivalence_1():
    sub, incl = subgroup_as_group(normal_subgroups(C4)[1])
    q, proj = quotient(C4, normal_subgroups(C4)[1])
    ext = extension(C4, incl, proj)
    sys1, _ = extract_crossed_system(ext, Section(table=(0, 1)))
    sys2, _ = extract_crossed_system(ext, Section(table=(0, 3)))
    assert are_equivalent_1(sys1, sys2) is not None
    # and on a product extension with several candidate sections
    c2xc4 = make_group("product(cyclic:2,cyclic:4)")
    ns = [s for s in normal_subgroups(c2xc4) if s.order == 4]
    sub2, incl2 = subgroup_as_group(ns[0])
    q2, proj2 = quotient(c2xc4, ns[0])
    ext2 = extension(c2xc4, incl2, proj2)
    secs = []
    for x in c2xc4.elements():
        if proj2.map[x] == 1:
            secs.append(Section(table=(0, x)))
    extracted = [extract_crossed_system(ext2, s)[0] for s in secs]
    for other in extracted[1:]:
        assert are_equivalent_1(extracted[0], other) is not None


def test_is_simple():
    assert is_simple(cyclic_group(5))
    assert is_simple(cyclic_group(2))
    assert not is_simple(C4)
    assert not is_simple(symmetric_group(3))
    assert not is_simple(cyclic_group(1))


def test_decompose_prime_cyclic_is_leaf():
    tree = decompose(cyclic_group(7))
    assert tree.is_leaf
    assert tree.leaf_orders() == (7,)


def test_decompose_c4():
    tree = decompose(C4)
    assert not tree.is_leaf
    assert tree.leaf_orders() == (2, 2)
    assert any(v != 0 for row in tree.system.cocycle.table for v in row)
    assert tree.theta.is_bijective()


def test_decompose_quaternion():
    tree = decompose(quaternion_group())
    assert tree.leaf_orders() == (2, 2, 2)
    # the normal part is the C4 subgroup, itself a twisted product
    assert tree.left.group.order == 4
    assert not tree.left.is_leaf
    assert tree.right.is_leaf


def test_decompose_rebuild_soundness():
    for spec in ("cyclic:12", "symmetric:4", "dihedral:12", "quaternion:8",
                 "product(cyclic:2,cyclic:6)"):
        tree = decompose(make_group(spec))

        def walk(node):
            if node.is_leaf:
                assert node.group.order == 1 or is_simple(node.group)
                return
            rebuilt = build_product(node.system).group
            assert node.theta.is_bijective()
            assert are_isomorphic(rebuilt, node.group) is not None
            assert are_isomorphic(node.system.h, node.left.group) is not None
            assert are_isomorphic(node.system.g, node.right.group) is not None
            walk(node.left)
            walk(node.right)

        walk(tree)


def test_decompose_abelian_examples():
    tree = decompose_abelian(C4)
    assert tree.leaf_orders() == (2, 2)
    k4 = make_group("product(cyclic:2,cyclic:2)")
    tree = decompose_abelian(k4)
    assert all(v == 0 for row in tree.system.cocycle.table for v in row)
    tree = decompose_abelian(cyclic_group(12))
    assert tree.leaf_orders() == (2, 2, 3)
    with pytest.raises(NotAbelianError):
        decompose_abelian(symmetric_group(3))


def test_decompose_choice_is_maximal_normal_subgroup():
    s4 = symmetric_group(4)
    tree = decompose(s4)
    # maximal proper normal subgroup of S4 is A4
    assert tree.left.group.order == 12
    assert tree.right.group.order == 2


def test_holder_enumerate_3_2():
    pairs = holder_enumerate(3, 2)
    assert [(i, j) for (i, j, _) in pairs] == [(0, 1), (0, 2), (1, 1), (2, 1)]
    names = sorted(identify_group(grp) for (_, _, grp) in pairs)
    assert names == ["C6", "C6", "C6", "S3"]
    deduped = holder_enumerate(3, 2, dedupe=True)
    assert sorted(identify_group(g) for (_, _, g) in deduped) == ["C6", "S3"]


def test_holder_enumerate_degenerate_n1():
    for m in (1, 2, 5):
        pairs = holder_enumerate(1, m)
        assert len(pairs) == 1
        (i, j, grp) = pairs[0]
        assert (i, j) == (0, 0)
        assert are_isomorphic(grp, cyclic_group(m)) is not None


def test_holder_enumerate_4_2_contains_d8_and_q8():
    pairs = holder_enumerate(4, 2)
    by_ij = {(i, j): grp for (i, j, grp) in pairs}
    assert are_isomorphic(by_ij[(0, 3)], dihedral_group(8)) is not None
    assert are_isomorphic(by_ij[(2, 3)], quaternion_group()) is not None


def test_holder_cap():
    with pytest.raises(CapExceededError):
        holder_enumerate(10, 10)


def test_holder_cross_validate_spot_values():
    rep = holder_cross_validate(2, 2)
    assert rep["match"] and sorted(rep["presentation_types"]) == ["C2xC2", "C4"]
    rep = holder_cross_validate(3, 2)
    assert rep["match"] and sorted(rep["presentation_types"]) == ["C6", "S3"]
    rep = holder_cross_validate(1, 5)
    assert rep["match"] and rep["presentation_types"] == ["C5"]
    rep = holder_cross_validate(4, 2)
    assert rep["match"]
    assert sorted(rep["system_types"]) == ["C4xC2", "C8", "D8", "Q8"]
