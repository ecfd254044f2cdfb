import random
from math import comb, factorial

import pytest

from cregcert.codes import Code
from cregcert.designs import design_automorphisms
from cregcert.hamming import Vertex, ksubset_masks
from cregcert.symmetry import (
    GraphAutomorphism,
    GroupHandle,
    ResourceBudgetError,
    apply,
    apply_mask,
    closure,
    code_automorphism_group,
    compose,
    find_equivalence,
    find_family_isomorphism,
    format_automorphism,
    identity,
    inverse,
    orbit_of,
    orbits,
    orbits_on_ksubsets,
    parse_automorphism,
    project_group,
    projection_is_injective,
    setwise_stabilizer_perms,
    trivial_group,
    vertex_stabilizer,
)


def random_automorphism(rng, m):
    perm = list(range(m))
    rng.shuffle(perm)
    return GraphAutomorphism(rng.randrange(1 << m), tuple(perm))


def test_identity_fixes_everything():
    e = identity(6)
    for mask in range(64):
        assert apply_mask(e, mask) == mask


def test_pure_translation():
    x = GraphAutomorphism(0b0110, (0, 1, 2, 3))
    assert apply_mask(x, 0b0001) == 0b0111


def test_three_cycle_moves_supports():
    # coordinates 1 -> 2 -> 3 -> 1, no flips
    x = GraphAutomorphism(0, (1, 2, 0, 3))
    v = Vertex(0b0001, 4)
    assert apply(x, v) == Vertex(0b0010, 4)
    assert apply(x, Vertex(0b0100, 4)) == Vertex(0b0001, 4)


def test_composition_and_inverse_laws():
    rng = random.Random(21)
    for _ in range(1000):
        m = rng.randint(2, 12)
        x = random_automorphism(rng, m)
        y = random_automorphism(rng, m)
        a = rng.randrange(1 << m)
        assert apply_mask(compose(x, y), a) == apply_mask(y, apply_mask(x, a))
        assert apply_mask(compose(x, inverse(x)), a) == a
        assert compose(x, identity(m)) == x
        assert compose(identity(m), x) == x


def test_action_is_isometric():
    rng = random.Random(22)
    for _ in range(1000):
        m = rng.randint(2, 12)
        x = random_automorphism(rng, m)
        a, b = rng.randrange(1 << m), rng.randrange(1 << m)
        da = (apply_mask(x, a) ^ apply_mask(x, b)).bit_count()
        assert da == (a ^ b).bit_count()


def test_format_parse_roundtrip():
    rng = random.Random(23)
    for _ in range(50):
        x = random_automorphism(rng, 9)
        assert parse_automorphism(format_automorphism(x)) == x
    with pytest.raises(ValueError):
        parse_automorphism("0101")
    with pytest.raises(ValueError):
        parse_automorphism("0101|1 1 2 3")


def test_closure_trivial_and_small():
    assert closure([], 4).order == 1
    swap = GraphAutomorphism(0, (1, 0, 2))
    assert closure([swap]).order == 2


def test_closure_budget_error_names_the_budget():
    cyc = GraphAutomorphism(0, tuple((i + 1) % 8 for i in range(8)))
    flip = GraphAutomorphism(1, tuple(range(8)))
    with pytest.raises(ResourceBudgetError, match="37"):
        closure([cyc, flip], budget=37)


def test_orbits_trivial_group():
    parts = orbits(trivial_group(4))
    assert len(parts) == 16
    assert all(len(p) == 1 for p in parts)


def test_vertex_orbits_match_distance_partition(code12, aut12):
    parts = orbits(aut12)
    assert [len(p) for p in parts] == [24, 288, 1584, 1760, 440]
    cells = code12.distance_partition().cells
    assert [set(p) for p in parts] == [set(c) for c in cells]


def test_orbit_of_zero_is_the_code(code12, aut12):
    assert orbit_of(0, aut12.generators) == set(code12.words)


def test_orbit_sizes_divide_group_order(aut12, m11_stabilizer):
    for group in (aut12, m11_stabilizer):
        for orbit in orbits(group):
            assert group.order % len(orbit) == 0


def test_stabilizer_of_weight6_supports(m11_stabilizer):
    assert m11_stabilizer.order == 7920
    assert all(g.flips == 0 for g in m11_stabilizer.generators)


def test_stabilizer_of_weight5_supports(code11):
    stab = setwise_stabilizer_perms(code11.weight_class(5), 11)
    assert stab.order == 660


def test_stabilizer_of_singletons_is_symmetric_group():
    family = [1 << i for i in range(4)]
    stab = setwise_stabilizer_perms(family, 4)
    assert stab.order == factorial(4)


def test_m11_has_two_orbits_on_4_subsets(m11_stabilizer):
    parts = orbits_on_ksubsets(m11_stabilizer, 4)
    assert sorted(len(p) for p in parts) == [165, 330]


def test_point_stabilizer_transitive_on_small_spheres(m11_stabilizer):
    for k in (1, 2, 3):
        assert len(orbits_on_ksubsets(m11_stabilizer, k)) == 1


def test_psl_has_two_orbits_on_3_subsets(design11):
    group = design_automorphisms(design11)
    assert group.order == 660
    parts = orbits_on_ksubsets(group, 3)
    assert sorted(len(p) for p in parts) == [55, 110]


def test_full_symmetric_group_is_transitive_on_ksubsets():
    gens = [
        GraphAutomorphism(0, (1, 0, 2, 3, 4)),
        GraphAutomorphism(0, (1, 2, 3, 4, 0)),
    ]
    group = closure(gens)
    assert group.order == 120
    assert len(orbits_on_ksubsets(group, 2)) == 1


def test_orbits_on_ksubsets_rejects_translations():
    g = GraphAutomorphism(1, (0, 1, 2))
    with pytest.raises(ValueError):
        orbits_on_ksubsets(GroupHandle(3, (g,)), 2)


def test_code_automorphism_group_order(aut12):
    assert aut12.order == 190080
    assert aut12.order % (2**12) != 0  # sanity: not the full graph group
    assert (2**12) * factorial(12) % aut12.order == 0


def test_zero_stabilizer_has_index_24(aut12, code12):
    stab = vertex_stabilizer(aut12, 0)
    assert stab.order == 7920
    assert aut12.order // stab.order == 24 == code12.size


def test_punctured_group_order(aut11):
    assert aut11.order == 15840


def test_repetition_code_group_with_oracle():
    code = Code(3, [0b000, 0b111])
    group = code_automorphism_group(code)
    # oracle: walk all 2^3 * 3! graph automorphisms and count preservers
    count = 0
    words = set(code.words)
    import itertools

    for perm in itertools.permutations(range(3)):
        for flips in range(8):
            x = GraphAutomorphism(flips, perm)
            if {apply_mask(x, w) for w in words} == words:
                count += 1
    assert group.order == count == 12


def test_generators_stabilize_the_code(aut12, code12):
    words = set(code12.words)
    for g in aut12.generators:
        assert {apply_mask(g, w) for w in words} == words


def test_family_isomorphism_finds_relabelings(design11):
    rng = random.Random(24)
    perm = list(range(11))
    rng.shuffle(perm)
    relabeled = [
        sum(1 << perm[i] for i in range(11) if (b >> i) & 1) for b in design11.blocks
    ]
    found = find_family_isomorphism(relabeled, design11.blocks, 11)
    assert found is not None
    image = {
        sum(1 << found[i] for i in range(11) if (b >> i) & 1) for b in relabeled
    }
    assert image == set(design11.blocks)


def test_project_group_of_coordinate_stabilizer(aut12, code11, code12):
    from cregcert.symmetry import coordinate_stabilizer

    stab1 = coordinate_stabilizer(aut12, 1)
    assert stab1.order == 15840
    projected = project_group(stab1, range(2, 13))
    assert projected.length == 11
    # the projected group sits inside the punctured code's group and is
    # transitive on it
    words = set(code11.words)
    for g in projected.generators:
        assert {apply_mask(g, w) for w in words} == words
    assert orbit_of(0, projected.generators) == words


def test_projection_kernel_trivial_on_coordinate_stabilizer(aut12):
    from cregcert.symmetry import coordinate_stabilizer

    stab1 = coordinate_stabilizer(aut12, 1)
    assert projection_is_injective(stab1, range(2, 13))


def test_project_group_identity():
    e = identity(6)
    projected = project_group(GroupHandle(6, (e,), (e,), 1), [2, 3, 5])
    assert projected.generators == (identity(3),)


def test_project_group_rejects_movers():
    x = GraphAutomorphism(0, (1, 0, 2, 3))
    with pytest.raises(ValueError):
        project_group(GroupHandle(4, (x,)), [1, 3])


def test_find_equivalence_reflexive(code12):
    x = find_equivalence(code12, code12)
    assert x is not None
    assert {apply_mask(x, w) for w in code12.words} == set(code12.words)


def test_find_equivalence_after_relabeling(code12):
    rng = random.Random(25)
    perm = list(range(12))
    rng.shuffle(perm)
    sigma = GraphAutomorphism(rng.randrange(1 << 12), tuple(perm))
    relabeled = Code(12, (apply_mask(sigma, w) for w in code12.words))
    x = find_equivalence(code12, relabeled)
    assert x is not None
    assert {apply_mask(x, w) for w in code12.words} == set(relabeled.words)


def test_find_equivalence_absent(code12):
    # 24 even-weight words cannot be equivalent: distributions differ
    evens = [w for w in range(1 << 12) if w.bit_count() % 2 == 0][:24]
    other = Code(12, evens)
    assert find_equivalence(code12, other) is None


def test_ksubset_domain_sizes():
    assert len(list(ksubset_masks(12, 4))) == comb(12, 4)
