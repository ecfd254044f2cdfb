"""Structured verdicts shared by all certifiers.

A Certificate is a claim, a stable anchor identifying the kind of check,
a witness payload rich enough to re-verify the claim without repeating
the search that produced it, and a PASS/FAIL verdict.  Witness payloads
are built from JSON-ready values only (ints, strings, lists, dicts) so
reports serialize deterministically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = "creg-cert/1"

PASS = "PASS"
FAIL = "FAIL"


class ContradictionError(RuntimeError):
    """A verified-impossible situation occurred; indicates a broken input."""


@dataclass(frozen=True)
class Certificate:
    claim: str
    anchor: str
    witness: dict = field(default_factory=dict)
    verdict: str = PASS

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "anchor": self.anchor,
            "witness": self.witness,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(
            claim=data["claim"],
            anchor=data["anchor"],
            witness=data.get("witness", {}),
            verdict=data["verdict"],
        )


def certificate_json(payload: dict) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def fraction_str(value) -> str:
    """Fractions as 'p' or 'p/q' strings for exact, readable witnesses."""
    from fractions import Fraction

    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
