"""t-designs on small point sets: verification, parameter arithmetic,
extension, automorphisms, and isomorph-free exhaustive enumeration.

Blocks are bitmasks over the point set (point i at bit i-1), and a
design's canonical labeling is the one whose sorted-descending
block-bitmask sequence is lexicographically greatest over all point
relabelings.  Enumeration is orderly generation: blocks are added in
strictly decreasing bitmask order, coverage counters and completion
horizons prune infeasible branches, partial solutions with a
proven-greater relabeling are pruned, and the surviving complete
solutions are reduced to one canonical representative per class.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .certs import FAIL, PASS, Certificate, ContradictionError
from .hamming import ksubset_masks, points_to_mask
from .symmetry import (
    GroupHandle,
    ResourceBudgetError,
    find_family_isomorphism,
    setwise_stabilizer_perms,
)


@dataclass(frozen=True)
class Design:
    """A verified t-(points, block_size, lam) design, blocks as bitmasks."""

    points: int
    block_size: int
    strength: int
    lam: int
    blocks: tuple[int, ...]

    @classmethod
    def verified(cls, blocks, points: int, strength: int) -> "Design":
        blocks = tuple(sorted({int(b) for b in blocks}))
        if not blocks:
            raise ValueError("a design needs at least one block")
        sizes = {b.bit_count() for b in blocks}
        if len(sizes) != 1:
            raise ValueError(f"blocks have unequal sizes {sorted(sizes)}")
        k = sizes.pop()
        lam, counterexample = check_t_design(blocks, points, strength)
        if lam is None:
            raise ValueError(
                f"not a {strength}-design: subsets {counterexample} are covered "
                "a different number of times"
            )
        expected_b = block_count(strength, points, k, lam)
        if expected_b != len(blocks):
            raise ValueError(
                f"block count {len(blocks)} contradicts the parameter arithmetic "
                f"({expected_b})"
            )
        return cls(points, k, strength, lam, blocks)

    def block_point_lists(self) -> list[list[int]]:
        return [
            [i + 1 for i in range(self.points) if (b >> i) & 1] for b in self.blocks
        ]

    def to_text(self) -> str:
        lines = [
            f"points={self.points} k={self.block_size} t={self.strength} "
            f"lambda={self.lam}"
        ]
        for pts in self.block_point_lists():
            lines.append(" ".join(str(p) for p in pts))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Design":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty design file")
        header = dict(tok.split("=") for tok in lines[0].split())
        points = int(header["points"])
        strength = int(header["t"])
        blocks = [points_to_mask(int(tok) for tok in ln.split()) for ln in lines[1:]]
        design = cls.verified(blocks, points, strength)
        if design.block_size != int(header["k"]) or design.lam != int(
            header["lambda"]
        ):
            raise ValueError("header does not match the verified parameters")
        return design


def check_t_design(blocks, points: int, t: int):
    """Return (lam, None) if every t-subset is covered the same number of
    times, else (None, (subset_a, subset_b)) for the first differing pair."""
    blocks = tuple(blocks)
    sizes = {b.bit_count() for b in blocks}
    if len(sizes) != 1:
        raise ValueError(f"blocks have unequal sizes {sorted(sizes)}")
    k = sizes.pop()
    if not 0 <= t <= k:
        raise ValueError(f"strength {t} out of range 0..{k}")
    counts: dict[int, int] = {}
    for b in blocks:
        bits = [i for i in range(points) if (b >> i) & 1]
        for sub in combinations(bits, t):
            mask = 0
            for i in sub:
                mask |= 1 << i
            counts[mask] = counts.get(mask, 0) + 1
    first = None
    lam = None
    for sub in ksubset_masks(points, t):
        c = counts.get(sub, 0)
        if lam is None:
            lam = c
            first = sub
        elif c != lam:
            return None, (first, sub)
    return lam, None


def t_design_lambda(blocks, points: int, t: int) -> int | None:
    lam, _ = check_t_design(blocks, points, t)
    return lam


def covered_by(a: int, b: int) -> bool:
    """Whether every nonzero coordinate of a agrees with b: over the
    binary alphabet this is containment of supports, which is why block
    families over vertices and over supports define the same designs."""
    return a & ~b == 0


def lambda_i(t: int, m: int, k: int, lam, i: int) -> Fraction:
    """The derived index of the induced i-design: lam * C(m-i, t-i) / C(k-i, t-i).

    Exact rational; integrality is the caller's separate feasibility check.
    """
    if not 0 <= i <= t:
        raise ValueError(f"index {i} out of range 0..{t}")
    return Fraction(lam) * comb(m - i, t - i) / comb(k - i, t - i)


def block_count(t: int, m: int, k: int, lam) -> Fraction:
    """b = lam * C(m, t) / C(k, t), the i = 0 case of the index arithmetic."""
    return lambda_i(t, m, k, lam, 0)


def fisher_check(design: Design) -> Certificate:
    """b >= points for any 2-design with block size below the point count."""
    if design.strength < 2:
        raise ValueError("the block-count bound applies to 2-designs")
    if design.block_size >= design.points:
        raise ValueError("the bound requires block size below the point count")
    b = len(design.blocks)
    witness = {"blocks": b, "points": design.points}
    if b >= design.points:
        return Certificate(
            "the design has at least as many blocks as points",
            "designs/block-count-bound",
            witness,
            PASS,
        )
    return Certificate(
        "the design has fewer blocks than points",
        "designs/block-count-bound",
        witness,
        FAIL,
    )


def extend_design(design: Design) -> Design:
    """Extend a symmetric 2-design by a new point: each block gains the
    new point, and each block's complement (in the old point set) joins.

    The output is re-verified as a design of strength 3; failure would
    contradict the construction and raises ContradictionError.
    """
    if design.strength != 2 or len(design.blocks) != design.points:
        raise ValueError("extension applies to symmetric 2-designs")
    new_point = 1 << design.points
    full = (1 << design.points) - 1
    blocks = [b | new_point for b in design.blocks]
    blocks += [full ^ b for b in design.blocks]
    try:
        return Design.verified(blocks, design.points + 1, 3)
    except ValueError as exc:
        raise ContradictionError(f"extension failed verification: {exc}") from None


def design_automorphisms(design: Design, element_budget: int = 10**6) -> GroupHandle:
    """The permutation group preserving the block family setwise."""
    return setwise_stabilizer_perms(design.blocks, design.points, element_budget)


# ---------------------------------------------------------------------------
# Canonicity: the sorted-descending block-bitmask sequence is compared
# lexicographically over all point relabelings; the canonical labeling of a
# design is the greatest.  Descending order makes every block through the
# top point rank ahead of all others, so generation fixes one point's whole
# star (a derived design, rigid for the parameters here) before anything
# else, which is what keeps the search tree small.
# ---------------------------------------------------------------------------


class _CanonBudget(Exception):
    pass


def _highest_bits(mask: int, count: int) -> int:
    out = 0
    for _ in range(count):
        top = 1 << (mask.bit_length() - 1)
        out |= top
        mask ^= top
    return out


def _image_greater_exists(blocks, m: int, node_budget: int | None = None) -> bool:
    """Whether some relabeling of the points maps the block family to a
    lexicographically greater sorted-descending bitmask sequence.

    Prefix-pruned search over which block realizes each image position.
    Instead of enumerating label bijections, the partial relabeling is a
    partition of old points against new-label sets (refined on every
    commitment), so the maximum realizable image of a block is computed
    per group and a commitment never branches.  Groups are kept in
    descending label order: numeric mask comparison is decided by the
    highest differing bit, so the scan stops at the first group where
    the maximum image and the target disagree.
    """
    blocks = tuple(blocks)
    r = len(blocks)
    full = (1 << m) - 1
    used = [False] * r
    # (old-points mask, new-labels mask) pairs with equal popcounts; any
    # bijection respecting every pair realizes the commitments so far
    groups: list[tuple[int, int]] = [(full, full)]
    nodes = 0
    highest = _highest_bits

    def stage(i: int) -> bool:
        nonlocal nodes, groups
        if i == r:
            return False  # image equals the sequence: nothing greater here
        target = blocks[i]
        gs = groups
        for bi in range(r):
            if used[bi]:
                continue
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise _CanonBudget
            block = blocks[bi]
            verdict = 0
            for pts, labs in gs:
                c = (block & pts).bit_count()
                tg = target & labs
                cg = highest(labs, c) if c else 0
                if cg != tg:
                    verdict = 1 if cg > tg else -1
                    break
            if verdict > 0:
                return True  # a realizable image beats the target
            if verdict < 0:
                continue
            refined = []
            for pts, labs in gs:
                hit_p = block & pts
                if hit_p:
                    refined.append((hit_p, target & labs))
                rest_p = pts & ~block
                if rest_p:
                    refined.append((rest_p, labs & ~target))
            refined.sort(key=lambda g: -g[1])
            groups = refined
            used[bi] = True
            found = stage(i + 1)
            groups = gs
            used[bi] = False
            if found:
                return True
        return False

    return stage(0)


def blocks_are_canonical(
    blocks, m: int, node_budget: int | None = None
) -> bool | None:
    """True/False when decided; None when the node budget ran out.

    Callers must treat an undecided partial solution as possibly
    canonical (and keep it); soundness of pruning only ever relies on
    proven-greater verdicts.
    """
    try:
        return not _image_greater_exists(tuple(blocks), m, node_budget)
    except _CanonBudget:
        return None


# ---------------------------------------------------------------------------
# Orderly enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_designs(
    t: int,
    m: int,
    k: int,
    lam: int,
    block_budget: int = 64,
    canon_node_budget: int = 30000,
) -> tuple[Design, ...]:
    """All t-(m, k, lam) designs up to isomorphism, one canonical
    representative each (the greatest labeling of its class).

    Returns an empty tuple when the parameter arithmetic already rules
    the designs out (fractional block count or derived index).  The
    complete solutions surviving the orderly search are reduced by
    pairwise isomorphism, so the output is duplicate-free even when a
    canonicity test hit its node budget.
    """
    if not 0 < t <= k <= m:
        raise ValueError(f"need 0 < t <= k <= m, got t={t} k={k} m={m}")
    if lam <= 0:
        raise ValueError(f"the design index must be positive, got {lam}")
    b_exact = block_count(t, m, k, lam)
    if b_exact.denominator != 1:
        return ()
    b = int(b_exact)
    if b > block_budget:
        raise ResourceBudgetError(
            f"{b} blocks exceed the enumeration block budget of {block_budget}"
        )
    caps = {}
    for s in range(1, t + 1):
        cap = lambda_i(t, m, k, lam, s)
        if cap.denominator != 1:
            return ()
        caps[s] = int(cap)

    candidates = tuple(reversed(tuple(ksubset_masks(m, k))))  # descending
    cand_subsets: list[tuple[tuple[int, ...], ...]] = []
    for c in candidates:
        bits = [i for i in range(m) if (c >> i) & 1]
        per_size = []
        for s in range(1, t + 1):
            masks = []
            for sub in combinations(bits, s):
                mask = 0
                for i in sub:
                    mask |= 1 << i
                masks.append(mask)
            per_size.append(tuple(masks))
        cand_subsets.append(tuple(per_size))

    cov = [0] * (1 << m)
    chosen: list[int] = []
    complete: list[tuple[int, ...]] = []
    point_cap = caps[1]
    first_block = ((1 << k) - 1) << (m - k)  # the greatest block opens
    cap_by_index = tuple(caps[s] for s in range(1, t + 1))

    # which candidates cover each small subset, for the horizon prune
    t_subsets = tuple(ksubset_masks(m, t))
    horizon_subsets = tuple(
        sub for s in range(1, t + 1) for sub in ksubset_masks(m, s)
    )
    coverer_lists: dict[int, list[int]] = {sub: [] for sub in horizon_subsets}
    for ci, per_size in enumerate(cand_subsets):
        for subs in per_size:
            for sub in subs:
                coverer_lists[sub].append(ci)
    coverers = {sub: tuple(v) for sub, v in coverer_lists.items()}
    cap_of = {}
    for s in range(1, t + 1):
        for sub in ksubset_masks(m, s):
            cap_of[sub] = caps[s]

    # flat (subset, cap) pairs per candidate for the admission test
    cand_checks = tuple(
        tuple(
            (sub, cap)
            for cap, subs in zip(cap_by_index, per_size)
            for sub in subs
        )
        for per_size in cand_subsets
    )

    def can_add(ci: int) -> bool:
        for sub, cap in cand_checks[ci]:
            if cov[sub] >= cap:
                return False
        return True

    def bump(ci: int, delta: int) -> None:
        for subs in cand_subsets[ci]:
            for sub in subs:
                cov[sub] += delta

    def forced_points() -> int:
        """Points every future block must contain, or -1 when some point
        can no longer reach its required degree."""
        remaining = b - len(chosen)
        forced = 0
        for p in range(m):
            deficit = point_cap - cov[1 << p]
            if deficit > remaining:
                return -1
            if deficit == remaining and remaining > 0:
                forced |= 1 << p
        return forced

    def horizon_ok(start: int) -> bool:
        """Every still-deficient subset must have enough covering
        candidates left at or beyond the next admissible index."""
        remaining = b - len(chosen)
        for sub in horizon_subsets:
            deficit = cap_of[sub] - cov[sub]
            if deficit > 0:
                if deficit > remaining:
                    return False
                lst = coverers[sub]
                if len(lst) - bisect_right(lst, start - 1) < deficit:
                    return False
        return True

    def extend(start: int) -> None:
        if len(chosen) == b:
            if all(cov[sub] == lam for sub in t_subsets):
                if blocks_are_canonical(tuple(chosen), m, canon_node_budget) is not False:
                    complete.append(tuple(chosen))
            return
        forced = forced_points()
        if forced < 0:
            return
        if not horizon_ok(start):
            return
        last_start = len(candidates) - (b - len(chosen)) + 1
        for ci in range(start, last_start):
            mask = candidates[ci]
            if not chosen and mask != first_block:
                break  # only the greatest block can open a canonical sequence
            if forced and (mask & forced) != forced:
                continue
            if not can_add(ci):
                continue
            bump(ci, 1)
            chosen.append(mask)
            if (
                len(chosen) == 1
                or blocks_are_canonical(tuple(chosen), m, canon_node_budget)
                is not False
            ):
                extend(ci + 1)
            chosen.pop()
            bump(ci, -1)

    extend(0)

    # every class contains its canonical (greatest) labeling and that one
    # is never pruned, so keeping the first of each isomorphism class in
    # descending sequence order keeps exactly the canonical representatives
    reps: list[tuple[int, ...]] = []
    for sol in sorted(complete, reverse=True):
        if all(find_family_isomorphism(sol, rep, m) is None for rep in reps):
            reps.append(sol)
    return tuple(Design.verified(sol, m, t) for sol in reps)
