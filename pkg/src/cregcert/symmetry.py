"""The automorphism group of H(m, 2) and searches inside it.

An automorphism is a coordinate-flip mask followed by a coordinate
permutation (the full group is the semidirect product of the 2^m flips
with S_m).  This module provides the group arithmetic, full closure
enumeration with an element budget, orbit computations, setwise
stabilizers of block families by individualization-refinement
backtracking, full code automorphism groups, projections onto
coordinate subsets, and code equivalence searches.

Composition convention, fixed globally: ``compose(x, y)`` means "apply
x first, then y", matching right-action exponent notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .codes import Code
from .hamming import LengthError, Vertex, format_mask, ksubset_masks, parse_mask

DEFAULT_ELEMENT_BUDGET = 10**6


class ResourceBudgetError(RuntimeError):
    """A closure or search exceeded its configured element budget."""


class GraphAutomorphism(NamedTuple):
    """Flip mask applied first, then the coordinate permutation.

    ``perm[i] = j`` moves coordinate i+1 to position j+1 (0-based
    internally, 1-based in the text format).
    """

    flips: int
    perm: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.perm)

    def __str__(self) -> str:
        return format_automorphism(self)


def identity(m: int) -> GraphAutomorphism:
    return GraphAutomorphism(0, tuple(range(m)))


def permute_mask(perm: Sequence[int], mask: int) -> int:
    """Move bit i to bit perm[i]."""
    out = 0
    for i, p in enumerate(perm):
        if (mask >> i) & 1:
            out |= 1 << p
    return out


def permute_mask_inv(perm: Sequence[int], mask: int) -> int:
    """Move bit perm[i] to bit i (the inverse permutation, no lookup table)."""
    out = 0
    for i, p in enumerate(perm):
        if (mask >> p) & 1:
            out |= 1 << i
    return out


def apply_mask(x: GraphAutomorphism, mask: int) -> int:
    return permute_mask(x.perm, mask ^ x.flips)


def apply(x: GraphAutomorphism, a: Vertex) -> Vertex:
    if x.degree != a.length:
        raise LengthError(f"automorphism degree {x.degree} vs vertex length {a.length}")
    return Vertex(apply_mask(x, a.bits), a.length)


def compose(x: GraphAutomorphism, y: GraphAutomorphism) -> GraphAutomorphism:
    """apply x first, then y."""
    xp, yp = x.perm, y.perm
    perm = tuple(yp[p] for p in xp)
    # the flips of y pulled back through x's permutation
    flips = x.flips ^ permute_mask_inv(xp, y.flips)
    return GraphAutomorphism(flips, perm)


def inverse(x: GraphAutomorphism) -> GraphAutomorphism:
    perm = [0] * len(x.perm)
    for i, p in enumerate(x.perm):
        perm[p] = i
    return GraphAutomorphism(permute_mask(x.perm, x.flips), tuple(perm))


def format_automorphism(x: GraphAutomorphism) -> str:
    mask = format_mask(x.flips, x.degree)
    images = " ".join(str(p + 1) for p in x.perm)
    return f"{mask}|{images}"


def parse_automorphism(text: str) -> GraphAutomorphism:
    try:
        mask_part, perm_part = text.strip().split("|")
    except ValueError:
        raise ValueError(f"expected '<mask>|<images>', got {text!r}") from None
    flips, m = parse_mask(mask_part)
    images = tuple(int(tok) - 1 for tok in perm_part.split())
    if sorted(images) != list(range(m)):
        raise ValueError(f"not a permutation of 1..{m}: {perm_part!r}")
    return GraphAutomorphism(flips, images)


@dataclass(frozen=True)
class GroupHandle:
    """A subgroup of the graph automorphism group, given by generators.

    ``elements`` and ``order`` are populated once a closure has been
    computed; the enumerated element list doubles as the certificate of
    the order claims made about it.
    """

    length: int
    generators: tuple[GraphAutomorphism, ...]
    elements: tuple[GraphAutomorphism, ...] | None = None
    order: int | None = None

    def require_elements(self) -> tuple[GraphAutomorphism, ...]:
        if self.elements is None:
            raise ValueError("group closure has not been computed")
        return self.elements


def trivial_group(m: int) -> GroupHandle:
    e = identity(m)
    return GroupHandle(m, (), (e,), 1)


def closure(
    group: GroupHandle | Iterable[GraphAutomorphism],
    m: int | None = None,
    budget: int = DEFAULT_ELEMENT_BUDGET,
) -> GroupHandle:
    """Enumerate the full subgroup generated by the given automorphisms.

    Breadth-first products over the generator set; in a finite group the
    generated semigroup is the subgroup, so no explicit inverses are
    needed.  Raises ResourceBudgetError past ``budget`` elements.
    """
    if isinstance(group, GroupHandle):
        gens = group.generators
        m = group.length
    else:
        gens = tuple(group)
        if m is None:
            if not gens:
                raise ValueError("cannot infer length from an empty generator list")
            m = gens[0].degree
    e = identity(m)
    gens = tuple(g for g in dict.fromkeys(gens) if g != e)
    seen = {e, *gens}
    if len(seen) > budget:
        raise ResourceBudgetError(f"closure exceeded the element budget of {budget}")
    frontier = list(gens)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                z = compose(x, g)
                if z not in seen:
                    seen.add(z)
                    if len(seen) > budget:
                        raise ResourceBudgetError(
                            f"closure exceeded the element budget of {budget}"
                        )
                    fresh.append(z)
        frontier = fresh
    elements = tuple(sorted(seen))
    return GroupHandle(m, gens, elements, len(elements))


def orbit_of(start: int, gens: Sequence[GraphAutomorphism]) -> frozenset[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for mask in frontier:
            for g in gens:
                image = apply_mask(g, mask)
                if image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh
    return frozenset(seen)


def orbits(
    group: GroupHandle, domain: Iterable[int] | None = None
) -> tuple[tuple[int, ...], ...]:
    """Partition of the domain into orbits under the generators.

    Default domain is all 2^m vertices.  Deterministic output: orbits
    are listed by ascending least element (which is the representative)
    and each orbit is sorted.  The domain must be invariant.
    """
    if domain is None:
        domain_list = list(range(1 << group.length))
    else:
        domain_list = sorted(set(domain))
    domain_set = set(domain_list)
    seen: set[int] = set()
    result = []
    for start in domain_list:
        if start in seen:
            continue
        orbit = orbit_of(start, group.generators)
        if not orbit <= domain_set:
            stray = min(orbit - domain_set)
            raise ValueError(f"domain is not invariant: reached {stray:#x}")
        seen |= orbit
        result.append(tuple(sorted(orbit)))
    return tuple(result)


def orbits_on_ksubsets(group: GroupHandle, k: int) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of all k-subsets under the induced permutation action.

    Every generator must be a pure permutation (zero flip mask).
    """
    for g in group.generators:
        if g.flips:
            raise ValueError(f"generator has a nonzero translation: {g}")
    return orbits(group, domain=ksubset_masks(group.length, k))


# ---------------------------------------------------------------------------
# Backtracking over coordinate permutations: family stabilizers and matchings
# ---------------------------------------------------------------------------


def _refine_point_colors(family: Sequence[int], m: int) -> tuple[int, ...]:
    """Iterated point coloring from block incidence, to a fixpoint.

    A point's signature combines its current color with the multiset of
    (size, member-color multiset) signatures of the blocks through it.
    """
    blocks_through = [[] for _ in range(m)]
    members = []
    for bi, block in enumerate(family):
        pts = [i for i in range(m) if (block >> i) & 1]
        members.append(pts)
        for p in pts:
            blocks_through[p].append(bi)
    colors = [0] * m
    while True:
        block_sigs = [
            (len(pts), tuple(sorted(colors[p] for p in pts))) for pts in members
        ]
        sigs = [
            (colors[p], tuple(sorted(block_sigs[bi] for bi in blocks_through[p])))
            for p in range(m)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        fresh = [remap[s] for s in sigs]
        if fresh == colors:
            return tuple(colors)
        colors = fresh


class _SearchBudget(Exception):
    pass


class _FamilyMatcher:
    """Backtracking search for permutations mapping one block family
    onto another (or itself, for setwise stabilizers).

    Points are assigned in ascending order; a candidate image survives
    only while every partially-mapped source block still fits inside
    some destination block of its size (exactly equal once complete).
    """

    def __init__(self, src: Sequence[int], dst: Sequence[int], m: int):
        self.m = m
        self.src = tuple(sorted(set(src)))
        self.dst = tuple(sorted(set(dst)))
        self.dst_set = frozenset(self.dst)
        self.sizes = [b.bit_count() for b in self.src]
        self.dst_by_size: dict[int, tuple[int, ...]] = {}
        for b in self.dst:
            self.dst_by_size.setdefault(b.bit_count(), [])
        for b in self.dst:
            self.dst_by_size[b.bit_count()].append(b)
        self.dst_by_size = {s: tuple(v) for s, v in self.dst_by_size.items()}
        self.blocks_through = [[] for _ in range(m)]
        for bi, block in enumerate(self.src):
            for i in range(m):
                if (block >> i) & 1:
                    self.blocks_through[i].append(bi)
        src_colors = _refine_point_colors(self.src, m)
        dst_colors = _refine_point_colors(self.dst, m)
        self.compatible = sorted(src_colors) == sorted(dst_colors) and len(
            self.src
        ) == len(self.dst)
        self.candidates = [
            tuple(q for q in range(m) if dst_colors[q] == src_colors[p])
            for p in range(m)
        ]

    def search(self, node_budget: int | None = None):
        """Yield image tuples (one per matching permutation)."""
        if not self.compatible:
            return
        m = self.m
        image = [-1] * m
        partial = [0] * len(self.src)
        free = list(self.sizes)
        used = 0
        nodes = 0

        def feasible(bi: int) -> bool:
            pmask = partial[bi]
            if free[bi] == 0:
                return pmask in self.dst_set
            for d in self.dst_by_size.get(self.sizes[bi], ()):
                if pmask & ~d == 0:
                    return True
            return False

        def extend(p: int):
            nonlocal used, nodes
            if p == m:
                yield tuple(image)
                return
            for q in self.candidates[p]:
                bit = 1 << q
                if used & bit:
                    continue
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise _SearchBudget
                image[p] = q
                used |= bit
                touched = self.blocks_through[p]
                for bi in touched:
                    partial[bi] |= bit
                    free[bi] -= 1
                if all(feasible(bi) for bi in touched):
                    yield from extend(p + 1)
                for bi in touched:
                    partial[bi] &= ~bit
                    free[bi] += 1
                image[p] = -1
                used &= ~bit

        yield from extend(0)


def find_family_isomorphism(
    src: Sequence[int], dst: Sequence[int], m: int
) -> tuple[int, ...] | None:
    """One permutation mapping the source block family onto the
    destination family, or None when the exhausted search proves there
    is none."""
    for perm in _FamilyMatcher(src, dst, m).search():
        return perm
    return None


def _perm_closure(gens, m, budget=None):
    e = tuple(range(m))
    seen = {e, *gens}
    frontier = [g for g in seen if g != e]
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                z = tuple(g[p] for p in a)
                if z not in seen:
                    seen.add(z)
                    if budget is not None and len(seen) > budget:
                        raise ResourceBudgetError(
                            f"closure exceeded the element budget of {budget}"
                        )
                    fresh.append(z)
        frontier = fresh
    return seen


def _reduce_perm_generators(elements: Sequence[tuple[int, ...]], m: int):
    """A small generating subset of an explicitly listed permutation group."""
    target = len(elements)
    gens: list[tuple[int, ...]] = []
    span = {tuple(range(m))}
    for e in sorted(elements):
        if e in span:
            continue
        gens.append(e)
        span = _perm_closure(gens, m)
        if len(span) == target:
            break
    # drop generators that became redundant
    for g in list(gens):
        if len(gens) == 1:
            break
        rest = [h for h in gens if h != g]
        if len(_perm_closure(rest, m)) == target:
            gens = rest
    return gens


def setwise_stabilizer_perms(
    family: Sequence[int],
    m: int,
    element_budget: int = DEFAULT_ELEMENT_BUDGET,
) -> GroupHandle:
    """All coordinate permutations preserving the block family setwise.

    Full enumeration by individualization-refinement backtracking; the
    element list is the order certificate.  The returned generators are
    a reduced subset whose closure was re-checked against the list.
    """
    if not family:
        raise ValueError("the block family must be nonempty")
    perms = []
    matcher = _FamilyMatcher(family, family, m)
    for perm in matcher.search():
        perms.append(perm)
        if len(perms) > element_budget:
            raise ResourceBudgetError(
                f"stabilizer exceeded the element budget of {element_budget}"
            )
    gens = _reduce_perm_generators(perms, m)
    span = _perm_closure(gens, m)
    if span != set(perms):
        raise AssertionError("stabilizer search did not return a closed set")
    elements = tuple(GraphAutomorphism(0, p) for p in sorted(perms))
    generators = tuple(GraphAutomorphism(0, p) for p in gens)
    return GroupHandle(m, generators, elements, len(elements))


def code_automorphism_group(
    code: Code, element_budget: int = DEFAULT_ELEMENT_BUDGET
) -> GroupHandle:
    """The setwise stabilizer of the code in the graph automorphism group.

    Computed as: the permutation stabilizer of the (zero-shifted) word
    family, one transversal element mapping the zero word to each
    reachable codeword, then full closure.  Every transversal witness is
    verified to lie in the enumerated closure.
    """
    m = code.length
    base = code.words[0]
    family = tuple(w ^ base for w in code.words)
    stab = setwise_stabilizer_perms(family, m, element_budget)
    stab_gens = list(stab.generators)

    transversals: list[GraphAutomorphism] = []
    for beta in family[1:]:
        perm = find_family_isomorphism(family, tuple(w ^ beta for w in family), m)
        if perm is None:
            continue
        x = GraphAutomorphism(permute_mask_inv(perm, beta), perm)
        if apply_mask(x, 0) != beta:
            raise AssertionError("transversal does not map 0 to its target")
        transversals.append(x)

    # a small generating set: stabilizer generators plus transversals
    # until the orbit of 0 covers every reachable codeword
    reachable = {0} | {apply_mask(x, 0) for x in transversals}
    chosen = list(stab_gens)
    for x in transversals:
        if orbit_of(0, chosen) >= reachable:
            break
        if apply_mask(x, 0) not in orbit_of(0, chosen):
            chosen.append(x)
    closed = closure(chosen, m, budget=element_budget)
    elements = set(closed.require_elements())
    for x in transversals:
        if x not in elements:
            raise AssertionError("transversal missing from the closure")
    generators = tuple(stab_gens + transversals)

    if base:
        # the pure translation by the least word is an involution carrying
        # the shifted family back onto the original code
        shift = GraphAutomorphism(base, tuple(range(m)))

        def conj(x: GraphAutomorphism) -> GraphAutomorphism:
            return compose(compose(shift, x), shift)

        generators = tuple(conj(x) for x in generators)
        elements = {conj(x) for x in elements}
    element_tuple = tuple(sorted(elements))
    for g in generators:
        image = {apply_mask(g, w) for w in code.words}
        if image != set(code.words):
            raise AssertionError("generator does not stabilize the code")
    return GroupHandle(m, generators, element_tuple, len(element_tuple))


def vertex_stabilizer(group: GroupHandle, mask: int) -> GroupHandle:
    """The subgroup fixing one vertex, filtered from an enumerated closure."""
    elements = tuple(
        x for x in group.require_elements() if apply_mask(x, mask) == mask
    )
    perms = [x.perm for x in elements if x.flips == 0]
    if len(perms) == len(elements):
        gens = tuple(
            GraphAutomorphism(0, p) for p in _reduce_perm_generators(perms, group.length)
        )
    else:
        gens = elements
    return GroupHandle(group.length, gens, elements, len(elements))


def coordinate_stabilizer(group: GroupHandle, coordinate: int) -> GroupHandle:
    """Elements whose permutation part fixes the given (1-based) coordinate."""
    c = coordinate - 1
    elements = tuple(x for x in group.require_elements() if x.perm[c] == c)
    return GroupHandle(group.length, elements, elements, len(elements))


def project_group(group: GroupHandle, coords) -> GroupHandle:
    """Induced action on the coordinates in ``coords`` (1-based).

    Every generator must stabilize the coordinate set; elements acting
    trivially on it map to the identity.
    """
    m = group.length
    js = sorted({c - 1 for c in coords})
    if not js or js[0] < 0 or js[-1] >= m:
        raise ValueError(f"coordinate set must be a nonempty subset of 1..{m}")
    index = {j: a for a, j in enumerate(js)}
    jset = set(js)

    def chi(x: GraphAutomorphism) -> GraphAutomorphism:
        for j in js:
            if x.perm[j] not in jset:
                raise ValueError(
                    f"generator moves coordinate {j + 1} outside the set: {x}"
                )
        perm = tuple(index[x.perm[j]] for j in js)
        flips = 0
        for a, j in enumerate(js):
            if (x.flips >> j) & 1:
                flips |= 1 << a
        return GraphAutomorphism(flips, perm)

    gens = tuple(chi(x) for x in group.generators)
    if group.elements is not None:
        images = sorted({chi(x) for x in group.elements})
        return GroupHandle(len(js), gens, tuple(images), len(images))
    return GroupHandle(len(js), gens)


def projection_is_injective(group: GroupHandle, coords) -> bool:
    """Whether the induced action separates the (closed) group's elements."""
    projected = project_group(group, coords)
    return projected.order == len(group.require_elements())


def find_equivalence(
    c1: Code, c2: Code, perms_only: bool = False
) -> GraphAutomorphism | None:
    """A graph automorphism mapping c1 onto c2, or a certified absence.

    Distance distributions are compared first as an invariant filter;
    the backtracking afterwards is exhaustive, so None means no
    equivalence exists.
    """
    if c1.length != c2.length:
        raise LengthError(f"length mismatch: {c1.length} vs {c2.length}")
    if c1.size != c2.size:
        return None
    if c1.size >= 2 and c1.distance_distribution != c2.distance_distribution:
        return None
    m = c1.length
    if perms_only:
        perm = find_family_isomorphism(c1.words, c2.words, m)
        return None if perm is None else GraphAutomorphism(0, perm)
    a1 = c1.words[0]
    fam1 = tuple(w ^ a1 for w in c1.words)
    for b2 in c2.words:
        perm = find_family_isomorphism(fam1, tuple(w ^ b2 for w in c2.words), m)
        if perm is not None:
            x = GraphAutomorphism(a1 ^ permute_mask_inv(perm, b2), perm)
            if {apply_mask(x, w) for w in c1.words} != set(c2.words):
                raise AssertionError("equivalence witness failed verification")
            return x
    return None
