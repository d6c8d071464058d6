import pytest

from crossedprod.errors import AxiomViolationError, InvalidTableError
from crossedprod.groups import (
    are_isomorphic,
    automorphism_group,
    center,
    cyclic_group,
    make_group,
    quaternion_group,
    symmetric_group,
)
from crossedprod.classify import enumerate_crossed_systems
from crossedprod.products import build_product
from crossedprod.systems import (
    cocycle,
    derived_identities_check,
    invariant_subgroup,
    is_symmetric,
    normalize,
    system_from_doc,
    system_to_doc,
    trivial_action,
    trivial_cocycle,
    validate_crossed_system,
    weak_action,
)

C2 = cyclic_group(2)
C4 = cyclic_group(4)
K4 = make_group("product(cyclic:2,cyclic:2)")


def inversion_action(actor, space):
    ident = tuple(range(space.order))
    inv = tuple(space.inv(x) for x in space.elements())
    return weak_action(actor, space, [ident if g == 0 else inv for g in actor.elements()])


def q8_system():
    # inversion action of C2 on C4 with the order-2 cocycle value
    return validate_crossed_system(
        C4, C2, inversion_action(C2, C4), cocycle(C2, C4, [[0, 0], [0, 2]])
    )


def twisted_c4_system():
    return validate_crossed_system(
        C2, C2, trivial_action(C2, C2), cocycle(C2, C2, [[0, 0], [0, 1]])
    )


def test_trivial_system_is_valid_and_normalized():
    for (h, g) in [(C2, C2), (C4, C2), (symmetric_group(3), C2), (K4, cyclic_group(3))]:
        sys = validate_crossed_system(h, g, trivial_action(g, h), trivial_cocycle(g, h))
        assert sys.normalized


def test_q8_system_is_valid_and_normalized():
    sys = q8_system()
    assert sys.normalized
    assert are_isomorphic(build_product(sys).group, quaternion_group()) is not None


def test_generator_valued_cocycle_is_rejected():
    # substituting a generator for the order-2 value breaks the cocycle law
    with pytest.raises(AxiomViolationError) as err:
        validate_crossed_system(
            C4, C2, inversion_action(C2, C4), cocycle(C2, C4, [[0, 0], [0, 1]])
        )
    assert err.value.equation == "cocycle-law"


def test_cocycle_violation_reports_first_tuple():
    f = cocycle(C2, C2, [[0, 1], [0, 1]])  # f(1,a) = a alongside f(a,a) = a
    with pytest.raises(AxiomViolationError) as err:
        validate_crossed_system(C2, C2, trivial_action(C2, C2), f)
    assert err.value.equation == "cocycle-law"
    assert len(err.value.witness) == 3


def test_weak_action_violation_detected():
    # an order-3 automorphism of K4 cannot satisfy the action axiom on C2
    three_cycle = next(
        a for a in automorphism_group(K4) if a.map != tuple(range(4)) and
        tuple(a.map[a.map[x]] for x in range(4)) != tuple(range(4))
    )
    act = weak_action(C2, K4, [tuple(range(4)), three_cycle.map])
    with pytest.raises(AxiomViolationError) as err:
        validate_crossed_system(K4, C2, act, trivial_cocycle(C2, K4))
    assert err.value.equation == "action-compatibility"


def test_weak_action_entries_must_be_automorphisms():
    with pytest.raises(InvalidTableError):
        weak_action(C2, C4, [tuple(range(4)), (0, 0, 0, 0)])
    with pytest.raises(InvalidTableError):
        weak_action(C2, C4, [tuple(range(4)), (0, 2, 1, 3)])  # bijective, not multiplicative


def test_derived_identities_on_normalized_systems():
    for sys in enumerate_crossed_systems(C4, C2):
        report = derived_identities_check(sys)
        assert all(report.values())
        assert report["normalized_units"]


def test_derived_identities_on_non_normalized_system():
    # constant central cocycle over the trivial quotient group
    c1 = cyclic_group(1)
    sys = validate_crossed_system(
        C4, c1, trivial_action(c1, C4), cocycle(c1, C4, [[2]])
    )
    assert not sys.normalized
    report = derived_identities_check(sys)
    assert all(report.values())


def test_normalize_is_identity_on_normalized_input():
    sys = q8_system()
    assert normalize(sys) == sys
    assert normalize(sys).cocycle.table == sys.cocycle.table


def test_normalize_constant_cocycle_over_trivial_group():
    c1 = cyclic_group(1)
    sys = validate_crossed_system(
        C4, c1, trivial_action(c1, C4), cocycle(c1, C4, [[2]])
    )
    normed = normalize(sys)
    assert normed.normalized
    assert normed.cocycle.table == ((0,),)


def test_normalize_preserves_product_up_to_isomorphism():
    # constant cocycle a on (C2, C2) with trivial action is a valid
    # non-normalized system
    const = validate_crossed_system(
        C2, C2, trivial_action(C2, C2), cocycle(C2, C2, [[1, 1], [1, 1]])
    )
    assert not const.normalized
    normed = normalize(const)
    assert normed.normalized
    before = build_product(const).group
    after = build_product(normed).group
    assert are_isomorphic(before, after) is not None
    # second non-normalized sample on (C4, C1)
    c1 = cyclic_group(1)
    sys = validate_crossed_system(C4, c1, trivial_action(c1, C4), cocycle(c1, C4, [[2]]))
    assert are_isomorphic(
        build_product(sys).group, build_product(normalize(sys)).group
    ) is not None


def test_normalize_idempotent():
    const = validate_crossed_system(
        C2, C2, trivial_action(C2, C2), cocycle(C2, C2, [[1, 1], [1, 1]])
    )
    once = normalize(const)
    assert normalize(once) == once


def test_is_symmetric():
    assert is_symmetric(trivial_cocycle(C2, C4))
    assert is_symmetric(cocycle(C2, C2, [[0, 0], [0, 1]]))
    assert not is_symmetric(cocycle(cyclic_group(3), C2, [[0, 0, 0], [0, 0, 1], [0, 0, 0]]))


def test_invariant_subgroup():
    sys = q8_system()
    assert invariant_subgroup(sys).elements == (0, 2)
    triv = validate_crossed_system(C4, C2, trivial_action(C2, C4), trivial_cocycle(C2, C4))
    assert invariant_subgroup(triv).elements == tuple(C4.elements())
    # the identity is invariant under every enumerated action
    for sys in enumerate_crossed_systems(K4, C2):
        assert 0 in invariant_subgroup(sys).elements


def test_central_cocycle_forces_multiplicative_action():
    zh = set(center(quaternion_group()).elements)
    q8 = quaternion_group()
    checked = 0
    for sys in enumerate_crossed_systems(q8, C2):
        if all(v in zh for row in sys.cocycle.table for v in row):
            act = sys.action.perms
            for g1 in C2.elements():
                for g2 in C2.elements():
                    g12 = C2.mul(g1, g2)
                    assert all(
                        act[g1][act[g2][x]] == act[g12][x] for x in q8.elements()
                    )
            checked += 1
    assert checked > 0


def test_system_document_round_trip():
    for sys in (q8_system(), twisted_c4_system()):
        doc = system_to_doc(sys)
        back = system_from_doc(doc)
        assert back == sys
        assert system_to_doc(back) == doc


def test_validate_rejects_mismatched_components():
    act = trivial_action(C2, C4)
    f = trivial_cocycle(C2, C2)  # wrong target group
    with pytest.raises(InvalidTableError):
        validate_crossed_system(C4, C2, act, f)
