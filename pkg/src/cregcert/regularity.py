"""Complete regularity and complete transitivity certifiers.

Complete regularity is decided by computing the full outer distribution
f_k(nu) = |Gamma_k(nu) cap C| for every vertex and checking each row is
constant on its distance-partition cell; the resulting intersection
table is the certificate.  Complete transitivity is decided by direct
orbit computation: a group stabilizing the code must have exactly the
partition cells as vertex orbits.  The stabilizer-orbit shortcut (orbit
of a sphere slice under a point stabilizer) is also provided, and its
conclusion always agrees with the direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certs import FAIL, PASS, Certificate
from .codes import Code
from .hamming import format_mask, ksubset_masks
from .symmetry import GroupHandle, apply_mask, orbit_of, orbits


@dataclass(frozen=True)
class OuterDistribution:
    """f_k(nu) for every vertex nu, with each vertex's cell index."""

    length: int
    rows: tuple[tuple[int, ...], ...]
    cell_index: tuple[int, ...]

    def row(self, mask: int) -> tuple[int, ...]:
        return self.rows[mask]


def outer_distribution(code: Code) -> OuterDistribution:
    m = code.length
    words = code.words
    rows = []
    cells = []
    for mask in range(1 << m):
        f = [0] * (m + 1)
        for w in words:
            f[(mask ^ w).bit_count()] += 1
        rows.append(tuple(f))
        cells.append(next(k for k, v in enumerate(f) if v))
    return OuterDistribution(m, tuple(rows), tuple(cells))


@dataclass(frozen=True)
class RegularityCertificate:
    """Verdict plus either the full intersection table or a counterexample.

    The counterexample is the first failing pair in scan order (cells
    ascending, vertices by ascending bitmask): two vertices in the same
    cell whose outer-distribution rows differ, with the first radius
    where they do.
    """

    completely_regular: bool
    covering_radius: int
    intersection_table: tuple[tuple[int, ...], ...] | None
    counterexample: tuple[int, int, int, int] | None  # (cell, vertex, vertex, k)

    def to_certificate(self, code: Code) -> Certificate:
        if self.completely_regular:
            witness = {
                "covering_radius": self.covering_radius,
                "intersection_table": [list(r) for r in self.intersection_table],
            }
            return Certificate(
                "the number of codewords at each distance from a vertex depends "
                "only on the vertex's distance to the code",
                "regularity/completely-regular",
                witness,
                PASS,
            )
        cell, v1, v2, k = self.counterexample
        witness = {
            "cell": cell,
            "vertices": [
                format_mask(v1, code.length),
                format_mask(v2, code.length),
            ],
            "radius": k,
        }
        return Certificate(
            "two vertices in one distance-partition cell see different "
            "codeword counts at some radius",
            "regularity/completely-regular",
            witness,
            FAIL,
        )


def certify_completely_regular(code: Code) -> RegularityCertificate:
    dist = outer_distribution(code)
    rho = max(dist.cell_index)
    reference: list[tuple[int, ...] | None] = [None] * (rho + 1)
    ref_vertex = [0] * (rho + 1)
    for mask in range(1 << code.length):
        i = dist.cell_index[mask]
        row = dist.rows[mask]
        if reference[i] is None:
            reference[i] = row
            ref_vertex[i] = mask
        elif row != reference[i]:
            k = next(a for a in range(code.length + 1) if row[a] != reference[i][a])
            return RegularityCertificate(False, rho, None, (i, ref_vertex[i], mask, k))
    return RegularityCertificate(True, rho, tuple(reference), None)


def certify_completely_transitive(code: Code, group: GroupHandle) -> Certificate:
    """PASS iff the group's vertex orbits are exactly the partition cells.

    Precondition: every generator stabilizes the code setwise; a
    violating generator is reported with a witness word.
    """
    word_set = set(code.words)
    for g in group.generators:
        image = {apply_mask(g, w) for w in code.words}
        if image != word_set:
            moved = min(image - word_set)
            return Certificate(
                "a generator moves the code off itself",
                "regularity/completely-transitive",
                {
                    "generator": str(g),
                    "stray_image": format_mask(moved, code.length),
                },
                FAIL,
            )
    cells = code.distance_partition().cells
    orbit_partition = orbits(group)
    cell_sets = [set(c) for c in cells]
    orbit_sets = [set(o) for o in orbit_partition]
    matches = all(o in cell_sets for o in orbit_sets) and len(orbit_sets) == len(
        cell_sets
    )
    witness = {
        "orbit_sizes": sorted(len(o) for o in orbit_partition),
        "cell_sizes": [len(c) for c in cells],
        "orbit_representatives": [
            format_mask(o[0], code.length) for o in orbit_partition
        ],
    }
    if matches:
        creg = certify_completely_regular(code)
        if not creg.completely_regular:
            raise AssertionError(
                "completely transitive but not completely regular: impossible"
            )
        witness["implies_completely_regular"] = True
        return Certificate(
            "each distance-partition cell is a single orbit of the group",
            "regularity/completely-transitive",
            witness,
            PASS,
        )
    return Certificate(
        "the orbit partition does not match the distance partition",
        "regularity/completely-transitive",
        witness,
        FAIL,
    )


def transitivity_by_stabilizer(
    code: Code, group: GroupHandle, cell: int, alpha: int | None = None
) -> Certificate:
    """Certify transitivity on cell C_i from a point-stabilizer orbit.

    If the group is transitive on the code and the stabilizer of a
    codeword alpha is transitive on Gamma_i(alpha) cap C_i, the group is
    transitive on C_i.  Both orbit computations are recorded.
    """
    if alpha is None:
        alpha = code.words[0]
    anchor = "regularity/transitivity-by-stabilizer"
    code_orbit = orbit_of(alpha, group.generators)
    if code_orbit != set(code.words):
        return Certificate(
            "the group is not transitive on the code",
            anchor,
            {
                "orbit_size": len(code_orbit),
                "code_size": code.size,
            },
            FAIL,
        )
    elements = group.require_elements()
    stabilizer = [x for x in elements if apply_mask(x, alpha) == alpha]
    cells = code.distance_partition().cells
    if not 0 <= cell < len(cells):
        raise ValueError(f"cell index {cell} out of range 0..{len(cells) - 1}")
    cell_set = set(cells[cell])
    slice_masks = sorted(
        alpha ^ off for off in ksubset_masks(code.length, cell) if alpha ^ off in cell_set
    )
    witness = {
        "cell": cell,
        "alpha": format_mask(alpha, code.length),
        "code_orbit_size": len(code_orbit),
        "stabilizer_order": len(stabilizer),
        "slice_size": len(slice_masks),
    }
    if cell == 0 or not slice_masks:
        witness["slice_orbit_count"] = 0 if not slice_masks else 1
        return Certificate(
            "transitivity on the cell holds trivially",
            anchor,
            witness,
            PASS,
        )
    seen: set[int] = set()
    orbit_count = 0
    for start in slice_masks:
        if start in seen:
            continue
        seen |= orbit_of(start, stabilizer)
        orbit_count += 1
    witness["slice_orbit_count"] = orbit_count
    if orbit_count == 1:
        return Certificate(
            "the point stabilizer is transitive on its sphere slice of the "
            "cell, so the group is transitive on the whole cell",
            anchor,
            witness,
            PASS,
        )
    return Certificate(
        "the point stabilizer splits the sphere slice of the cell",
        anchor,
        witness,
        FAIL,
    )
