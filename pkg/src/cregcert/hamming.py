"""Geometry of the binary Hamming graph H(m, 2) on integer bitmasks.

A binary word of length m is stored as an integer with coordinate i
(1-based) at bit i-1, so Hamming distance is one XOR plus a popcount and
vertex sets have a canonical (numeric) order for free.  Lengths up to 24
keep every mask inside a machine word with headroom; the codes studied
here only need m = 11 and 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MAX_LENGTH = 24


class LengthError(ValueError):
    """Operands from Hamming spaces of different lengths were mixed."""


def check_length(m: int) -> None:
    if not 1 <= m <= MAX_LENGTH:
        raise ValueError(f"word length must be in 1..{MAX_LENGTH}, got {m}")


@dataclass(frozen=True, order=True)
class Vertex:
    """A vertex of H(m, 2): bitmask plus explicit length."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        check_length(self.length)
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(
                f"bitmask {self.bits:#x} out of range for length {self.length}"
            )

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return format_mask(self.bits, self.length)


def _check_same_length(a: Vertex, b: Vertex) -> None:
    if a.length != b.length:
        raise LengthError(f"length mismatch: {a.length} vs {b.length}")


def dist(a: Vertex, b: Vertex) -> int:
    """Hamming distance: the number of coordinates where a and b differ."""
    _check_same_length(a, b)
    return (a.bits ^ b.bits).bit_count()


def support(a: Vertex) -> frozenset[int]:
    """The set of (1-based) coordinates where a is nonzero."""
    return frozenset(i + 1 for i in range(a.length) if (a.bits >> i) & 1)


def complement(a: Vertex) -> Vertex:
    """Flip every coordinate.  An involution at distance m from a."""
    return Vertex(a.bits ^ ((1 << a.length) - 1), a.length)


def sphere(center: Vertex, k: int) -> Iterator[Vertex]:
    """All vertices at distance exactly k from center.

    Yields each of the comb(m, k) vertices once, ordered by ascending
    XOR offset so golden tests see a fixed sequence.
    """
    if not 0 <= k <= center.length:
        raise ValueError(f"radius {k} out of range 0..{center.length}")
    for offset in ksubset_masks(center.length, k):
        yield Vertex(center.bits ^ offset, center.length)


def ksubset_masks(m: int, k: int) -> Iterator[int]:
    """All k-subset bitmasks of {1..m} in ascending numeric order.

    Gosper's hack walks same-popcount masks in increasing value.
    """
    if not 0 <= k <= m:
        raise ValueError(f"subset size {k} out of range 0..{m}")
    if k == 0:
        yield 0
        return
    v = (1 << k) - 1
    top = 1 << m
    while v < top:
        yield v
        low = v & -v
        ripple = v + low
        v = ripple | (((v ^ ripple) // low) >> 2)


def all_masks(m: int) -> range:
    return range(1 << m)


def mask_support(mask: int, m: int) -> tuple[int, ...]:
    """1-based coordinates set in mask, ascending."""
    return tuple(i + 1 for i in range(m) if (mask >> i) & 1)


def points_to_mask(points) -> int:
    mask = 0
    for p in points:
        mask |= 1 << (p - 1)
    return mask


def format_mask(mask: int, m: int) -> str:
    """Text form: m characters over {0,1}, coordinate 1 leftmost."""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(m))


def parse_mask(text: str) -> tuple[int, int]:
    """Inverse of format_mask; returns (mask, length)."""
    m = len(text)
    check_length(m)
    mask = 0
    for i, ch in enumerate(text):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid word character {ch!r} in {text!r}")
    return mask, m


def parse_vertex(text: str) -> Vertex:
    mask, m = parse_mask(text)
    return Vertex(mask, m)
