"""Binary codes as finite vertex sets of H(m, 2).

A Code is an immutable, sorted, deduplicated collection of bitmasks with
one shared length.  Everything derived from it (minimum distance,
covering radius, distance partition and distribution) is computed
exhaustively in exact arithmetic and cached on first use; at 2^m <= 4096
vertices the exhaustive scan *is* the certificate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .hamming import MAX_LENGTH, check_length, format_mask, parse_mask


class CodeFormatError(ValueError):
    """A code file failed to parse; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Code:
    """An (m, N, delta) binary code.

    Words are immutable after construction; derived parameters are
    computed at most once (``functools.cached_property``) and every
    query afterwards is read-only.
    """

    def __init__(self, length: int, words) -> None:
        check_length(length)
        ws = sorted({int(w) for w in words})
        if not ws:
            raise ValueError("a code needs at least one codeword")
        if ws[0] < 0 or ws[-1] >= (1 << length):
            raise ValueError(f"codeword out of range for length {length}")
        self.length = length
        self.words: tuple[int, ...] = tuple(ws)

    @property
    def size(self) -> int:
        return len(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, mask: int) -> bool:
        return mask in self._word_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Code)
            and self.length == other.length
            and self.words == other.words
        )

    def __hash__(self) -> int:
        return hash((self.length, self.words))

    def __repr__(self) -> str:
        delta = self.min_distance if self.size >= 2 else None
        return f"Code(m={self.length}, N={self.size}, delta={delta})"

    @cached_property
    def _word_set(self) -> frozenset[int]:
        return frozenset(self.words)

    # ---- parameters -----------------------------------------------------

    @cached_property
    def min_distance(self) -> int:
        """Smallest distance between distinct codewords (needs N >= 2)."""
        if self.size < 2:
            raise ValueError("minimum distance undefined for a single-word code")
        ws = self.words
        return min(
            (ws[i] ^ ws[j]).bit_count()
            for i in range(len(ws))
            for j in range(i + 1, len(ws))
        )

    def distance_to(self, mask: int) -> int:
        return min((mask ^ w).bit_count() for w in self.words)

    @cached_property
    def covering_radius(self) -> int:
        """Exhaustive maximum of d(gamma, C) over all 2^m vertices."""
        return len(self._cells) - 1

    @cached_property
    def _cells(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(self.length + 1)]
        for mask in range(1 << self.length):
            buckets[self.distance_to(mask)].append(mask)
        while buckets and not buckets[-1]:
            buckets.pop()
        return tuple(tuple(b) for b in buckets)

    def distance_partition(self) -> "DistancePartition":
        return DistancePartition(self.length, self._cells)

    @cached_property
    def distance_distribution(self) -> tuple[Fraction, ...]:
        """a_i = ordered codeword pairs at distance i, divided by N."""
        counts = [0] * (self.length + 1)
        ws = self.words
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                counts[(ws[i] ^ ws[j]).bit_count()] += 2
        counts[0] = len(ws)
        n = Fraction(len(ws))
        return tuple(Fraction(c) / n for c in counts)

    def weight_class(self, k: int) -> tuple[int, ...]:
        """All codewords of weight exactly k."""
        if not 0 <= k <= self.length:
            raise ValueError(f"weight {k} out of range 0..{self.length}")
        return tuple(w for w in self.words if w.bit_count() == k)

    def is_antipodal(self) -> bool:
        full = (1 << self.length) - 1
        return all((full ^ w) in self._word_set for w in self.words)

    # ---- derived codes --------------------------------------------------

    def puncture(self, p: int) -> "Code":
        """Delete coordinate p (1-based) from every codeword.

        Colliding words are deduplicated silently; use
        ``puncture_collides`` to ask whether any collision occurred.
        """
        if not 1 <= p <= self.length:
            raise ValueError(f"coordinate {p} out of range 1..{self.length}")
        if self.length == 1:
            raise ValueError("cannot puncture a length-1 code")
        q = p - 1
        low = (1 << q) - 1
        return Code(
            self.length - 1, ((w & low) | ((w >> 1) & ~low) for w in self.words)
        )

    def puncture_collides(self, p: int) -> bool:
        """Whether deleting coordinate p merges two codewords."""
        return self.puncture(p).size < self.size

    def project(self, coords) -> "Code":
        """Keep only the listed coordinates, preserving their order."""
        cs = sorted(set(coords))
        if not cs:
            raise ValueError("projection needs a nonempty coordinate set")
        if cs[0] < 1 or cs[-1] > self.length:
            raise ValueError(f"coordinates must lie in 1..{self.length}")
        return Code(
            len(cs),
            (
                sum(((w >> (c - 1)) & 1) << j for j, c in enumerate(cs))
                for w in self.words
            ),
        )

    def extend_parity(self, position: str = "back") -> "Code":
        """Append a parity bit so every output word has even weight."""
        if position not in ("front", "back"):
            raise ValueError(f"position must be 'front' or 'back', got {position!r}")
        if self.length + 1 > MAX_LENGTH:
            raise ValueError("extension exceeds the supported length")
        if position == "front":
            new = ((w << 1) | (w.bit_count() & 1) for w in self.words)
        else:
            new = (w | ((w.bit_count() & 1) << self.length) for w in self.words)
        return Code(self.length + 1, new)

    # ---- file format ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"m={self.length}"]
        lines.extend(format_mask(w, self.length) for w in self.words)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Code":
        length = None
        words = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if length is None:
                if not line.startswith("m="):
                    raise CodeFormatError("expected header 'm=<int>'", lineno)
                try:
                    length = int(line[2:])
                    check_length(length)
                except ValueError as exc:
                    raise CodeFormatError(str(exc), lineno) from None
                continue
            try:
                mask, m = parse_mask(line)
            except ValueError as exc:
                raise CodeFormatError(str(exc), lineno) from None
            if m != length:
                raise CodeFormatError(
                    f"word length {m} does not match header m={length}", lineno
                )
            words.append(mask)
        if length is None:
            raise CodeFormatError("missing header 'm=<int>'", 1)
        if not words:
            raise CodeFormatError("code file contains no codewords", 1)
        return cls(length, words)


class DistancePartition:
    """Cells C_0..C_rho of vertices grouped by distance to the code."""

    def __init__(self, length: int, cells: tuple[tuple[int, ...], ...]):
        self.length = length
        self.cells = cells

    @property
    def covering_radius(self) -> int:
        return len(self.cells) - 1

    def cell_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def cell_index_of(self, mask: int) -> int:
        for i, cell in enumerate(self.cells):
            if mask in cell:
                return i
        raise KeyError(mask)
