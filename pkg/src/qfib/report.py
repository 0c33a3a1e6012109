"""Pass/fail reports for symbolic identity checks."""

from dataclasses import dataclass

from .polyring import Poly, diff_witness


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact polynomial identity check.

    passed is True iff lhs == rhs exactly; otherwise witness names the first
    differing monomial (in canonical term order) with both coefficients.
    """

    identity: str
    params: dict
    lhs: Poly
    rhs: Poly
    passed: bool
    witness: str | None

    @classmethod
    def compare(cls, identity: str, params: dict, lhs: Poly, rhs: Poly) -> "IdentityReport":
        witness = diff_witness(lhs, rhs)
        return cls(identity, dict(params), lhs, rhs, witness is None, witness)

    def describe(self) -> str:
        bits = " ".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        tail = "pass" if self.passed else f"FAIL ({self.witness})"
        return f"{self.identity} {bits}: {tail}"

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "verdict": "pass" if self.passed else "fail",
            "witness": self.witness,
            "lhs": self.lhs.to_json_dict(),
            "rhs": self.rhs.to_json_dict(),
        }
