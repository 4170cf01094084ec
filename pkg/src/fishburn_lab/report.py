"""Verification reports and their text / JSON-lines serialisation."""

import json
from dataclasses import dataclass, field

VERIFIED = "verified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

THEOREM = "theorem"
CONJECTURE = "conjecture"

SCHEMA_VERSION = 1


@dataclass
class VerificationReport:
    claim_id: str
    parameters: dict
    status: str
    counterexamples: list = field(default_factory=list)
    checked_count: int = 0
    kind: str = THEOREM
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (VERIFIED, REFUTED, INCONCLUSIVE):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == REFUTED) != bool(self.counterexamples):
            raise ValueError("status must be 'refuted' exactly when counterexamples exist")

    @property
    def ok(self):
        return self.status != REFUTED

    def sort_key(self):
        return (self.claim_id, tuple(sorted(self.parameters.items())))

    def to_record(self):
        """Plain dict with fixed key order; big values become decimal strings."""
        return {
            "schema": SCHEMA_VERSION,
            "claim_id": self.claim_id,
            "kind": self.kind,
            "parameters": {k: self.parameters[k] for k in sorted(self.parameters)},
            "status": self.status,
            "checked_count": self.checked_count,
            "counterexamples": [
                {"input": list(inp), "observed": _stringify(obs)} for inp, obs in self.counterexamples
            ],
            "details": {k: _stringify(self.details[k]) for k in sorted(self.details)},
        }

    def to_json(self):
        return json.dumps(self.to_record(), separators=(",", ":"))

    def to_text(self):
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"[{self.status.upper()}] {self.claim_id} ({self.kind}) {params}",
                 f"  checked: {self.checked_count}"]
        for inp, obs in self.counterexamples[:20]:
            lines.append(f"  counterexample {tuple(inp)}: {_stringify(obs)}")
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        for k in sorted(self.details):
            lines.append(f"  {k}: {_text_value(self.details[k])}")
        return "\n".join(lines)


def _stringify(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_stringify(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _stringify(v[k]) for k in sorted(v, key=str)}
    return str(v)


def _text_value(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_text_value(v[k])}" for k in sorted(v, key=str)) + "}"
    return str(v)


def from_record(rec):
    """Inverse of ``to_record`` (values in details stay as strings)."""
    return VerificationReport(
        claim_id=rec["claim_id"],
        parameters=dict(rec["parameters"]),
        status=rec["status"],
        counterexamples=[(tuple(c["input"]), c["observed"]) for c in rec["counterexamples"]],
        checked_count=rec["checked_count"],
        kind=rec["kind"],
        details=dict(rec["details"]),
    )


def status_from(counterexamples, inconclusive=False):
    if counterexamples:
        return REFUTED
    return INCONCLUSIVE if inconclusive else VERIFIED
