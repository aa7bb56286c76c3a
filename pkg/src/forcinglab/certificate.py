"""Disqualification certificates and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

REASONS = (
    "not_strongly_connected",
    "nontrivial_automorphism",
    "twins",
    "blowup_witness",
    "param_matrix",
    "split_weights",
    "external_reference",
)


class Rejected(Exception):
    """A candidate witness fails to establish the claimed inequality."""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details


class MalformedCertificate(ValueError):
    pass


def frac_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str) -> Fraction:
    if not isinstance(text, str):
        raise MalformedCertificate(f"expected a fraction string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedCertificate(f"bad fraction {text!r}") from exc


@dataclass
class Certificate:
    tournament: str
    k: int
    reason: str
    witness: dict[str, Any]
    dstar: Fraction
    threshold: Fraction
    notes: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        d = {
            "tournament": self.tournament,
            "k": self.k,
            "reason": self.reason,
            "witness": self.witness,
            "dstar": frac_str(self.dstar),
            "threshold": frac_str(self.threshold),
            "notes": self.notes,
        }
        d.update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Certificate":
        if not isinstance(d, dict):
            raise MalformedCertificate("certificate must be a JSON object")
        missing = {"tournament", "k", "reason", "witness", "dstar", "threshold"} - d.keys()
        if missing:
            raise MalformedCertificate(f"missing fields: {sorted(missing)}")
        if d["reason"] not in REASONS:
            raise MalformedCertificate(f"unknown reason {d['reason']!r}")
        if not isinstance(d["k"], int) or not isinstance(d["witness"], dict):
            raise MalformedCertificate("k must be an integer and witness an object")
        known = {"tournament", "k", "reason", "witness", "dstar", "threshold", "notes"}
        return cls(
            tournament=str(d["tournament"]),
            k=d["k"],
            reason=d["reason"],
            witness=d["witness"],
            dstar=parse_frac(d["dstar"]),
            threshold=parse_frac(d["threshold"]),
            notes=str(d.get("notes", "")),
            extra={key: v for key, v in d.items() if key not in known},
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise MalformedCertificate(str(exc)) from exc
