import random
from itertools import combinations
from math import comb

import pytest

from cregcert.certs import ContradictionError
from cregcert.designs import (
    Design,
    block_count,
    blocks_are_canonical,
    check_t_design,
    design_automorphisms,
    enumerate_designs,
    extend_design,
    fisher_check,
    lambda_i,
    t_design_lambda,
)
from cregcert.hamming import ksubset_masks
from cregcert.symmetry import find_family_isomorphism


def test_weight_classes_as_designs(code12, code11):
    assert t_design_lambda(code12.weight_class(6), 12, 3) == 2
    assert t_design_lambda(code11.weight_class(5), 11, 2) == 2
    assert t_design_lambda(code11.weight_class(6), 11, 2) == 3


def test_check_t_design_counterexample():
    blocks = [0b000111, 0b111000]
    lam, counterexample = check_t_design(blocks, 6, 2)
    assert lam is None
    assert counterexample is not None


def test_check_t_design_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        check_t_design([0b011, 0b111], 3, 2)


def test_lambda_arithmetic():
    assert lambda_i(2, 11, 5, 2, 2) == 2  # top index is the design index
    assert lambda_i(2, 11, 5, 2, 1) == 5
    assert lambda_i(3, 12, 6, 2, 1) == 11
    assert lambda_i(3, 12, 6, 2, 2) == 5
    with pytest.raises(ValueError):
        lambda_i(2, 11, 5, 2, 3)


def test_block_counts():
    assert block_count(3, 12, 6, 2) == 22
    assert block_count(2, 11, 5, 2) == 11
    assert block_count(2, 11, 6, 3) == 11


def test_parameter_consistency(design11, design12):
    # C(m, i) * lambda_i = b * C(k, i) for every verified design
    for d in (design11, design12):
        b = len(d.blocks)
        for i in range(d.strength + 1):
            li = lambda_i(d.strength, d.points, d.block_size, d.lam, i)
            assert comb(d.points, i) * li == b * comb(d.block_size, i)


def test_fisher_symmetric_case(design11):
    cert = fisher_check(design11)
    assert cert.passed
    assert cert.witness["blocks"] == cert.witness["points"] == 11


def test_fisher_rejects_too_few_blocks():
    # a hypothetical eight-block configuration, built without verification
    fake = Design(11, 5, 2, 2, tuple(list(ksubset_masks(11, 5))[:8]))
    cert = fisher_check(fake)
    assert not cert.passed


def test_fisher_complement_design(code11):
    comp = Design.verified(code11.weight_class(6), 11, 2)
    assert fisher_check(comp).passed


def test_enumerate_fano_with_brute_force_oracle():
    classes = enumerate_designs(2, 7, 3, 1)
    assert len(classes) == 1

    # oracle: unpruned exhaustive search over descending block sequences,
    # no isomorph rejection, then quotient by pairwise isomorphism
    candidates = list(ksubset_masks(7, 3))[::-1]
    cov = {}
    found = []

    def extend(start, chosen):
        if len(chosen) == 7:
            found.append(tuple(chosen))
            return
        for ci in range(start, len(candidates)):
            block = candidates[ci]
            pairs = [
                (1 << a) | (1 << b)
                for a, b in combinations([i for i in range(7) if block >> i & 1], 2)
            ]
            if any(cov.get(p, 0) >= 1 for p in pairs):
                continue
            for p in pairs:
                cov[p] = cov.get(p, 0) + 1
            chosen.append(block)
            extend(ci + 1, chosen)
            chosen.pop()
            for p in pairs:
                cov[p] -= 1

    extend(0, [])
    assert len(found) == 30  # labeled Fano planes with descending blocks
    reps = []
    for sol in found:
        if all(find_family_isomorphism(sol, r, 7) is None for r in reps):
            reps.append(sol)
    assert len(reps) == 1
    assert find_family_isomorphism(reps[0], classes[0].blocks, 7) is not None


def test_enumerate_unique_biplane(design11):
    assert (design11.points, design11.block_size, design11.lam) == (11, 5, 2)
    assert len(design11.blocks) == 11


def test_enumerate_unique_3_design(design12):
    assert (design12.points, design12.block_size, design12.lam) == (12, 6, 2)
    assert len(design12.blocks) == 22


def test_enumerate_infeasible_parameters_is_empty():
    # block count 7 * 6 / 4 is not an integer
    assert enumerate_designs(2, 7, 4, 1) == ()


def test_representatives_are_canonical(design11, design12):
    assert blocks_are_canonical(
        tuple(sorted(design11.blocks, reverse=True)), 11
    ) is True
    assert blocks_are_canonical(
        tuple(sorted(design12.blocks, reverse=True)), 12
    ) is True


def test_random_relabelings_are_recanonicalized(design11):
    rng = random.Random(31)
    for _ in range(5):
        perm = list(range(11))
        rng.shuffle(perm)
        relabeled = tuple(
            sorted(
                (
                    sum(1 << perm[i] for i in range(11) if (b >> i) & 1)
                    for b in design11.blocks
                ),
                reverse=True,
            )
        )
        # still isomorphic to the representative, and canonical only if equal
        assert find_family_isomorphism(relabeled, design11.blocks, 11) is not None
        expected = relabeled == tuple(sorted(design11.blocks, reverse=True))
        assert blocks_are_canonical(relabeled, 11) is expected


def test_extension_of_the_biplane(design11, design12):
    extended = extend_design(design11)
    assert (extended.points, extended.block_size, extended.strength) == (12, 6, 3)
    assert extended.lam == 2
    assert len(extended.blocks) == 22
    # extending the unique biplane gives the unique 3-design
    assert find_family_isomorphism(extended.blocks, design12.blocks, 12) is not None


def test_extension_restricts_back(design11):
    extended = extend_design(design11)
    new_point = 1 << 11
    through = [b ^ new_point for b in extended.blocks if b & new_point]
    assert sorted(through) == list(design11.blocks)


def test_extension_of_fano_is_a_3_design():
    # the classical small case: the 2-(7,3,1) design extends to 3-(8,4,1)
    fano = enumerate_designs(2, 7, 3, 1)[0]
    extended = extend_design(fano)
    assert (extended.points, extended.block_size, extended.lam) == (8, 4, 1)


def test_extension_rejects_bad_input():
    # symmetric 2-(3,2,1): the complement blocks have the wrong size
    triangle = Design.verified([0b011, 0b101, 0b110], 3, 2)
    with pytest.raises(ContradictionError):
        extend_design(triangle)
    with pytest.raises(ValueError):
        extend_design(Design.verified(list(ksubset_masks(5, 2)), 5, 2))


def test_design_automorphism_orders(design11, design12):
    assert design_automorphisms(design11).order == 660
    group = design_automorphisms(design12)
    assert group.order == 7920
    # 3-transitivity on the 12 points: one orbit on ordered triples is
    # equivalent to one orbit on 3-subsets together with a stabilizer check
    from cregcert.symmetry import orbits_on_ksubsets

    assert len(orbits_on_ksubsets(group, 1)) == 1
    assert len(orbits_on_ksubsets(group, 2)) == 1
    assert len(orbits_on_ksubsets(group, 3)) == 1


def test_all_ksubsets_design_has_symmetric_group():
    blocks = tuple(ksubset_masks(5, 2))
    design = Design.verified(blocks, 5, 2)
    assert design_automorphisms(design).order == 120


def test_covered_relation_matches_subset_counting(code11):
    # a weight-t word is covered by a block exactly when its support is a
    # subset, so direct counting over masks reproduces the design index
    from cregcert.designs import covered_by

    blocks = code11.weight_class(5)
    lam = t_design_lambda(blocks, 11, 2)
    for sub in ksubset_masks(11, 2):
        covering = sum(1 for b in blocks if covered_by(sub, b))
        assert covering == lam
    assert covered_by(0b0101, 0b1101)
    assert not covered_by(0b0101, 0b1001)


def test_design_file_roundtrip(design11):
    text = design11.to_text()
    assert Design.from_text(text) == design11


def test_verified_rejects_non_designs():
    with pytest.raises(ValueError):
        Design.verified([0b000111, 0b111000], 6, 2)
