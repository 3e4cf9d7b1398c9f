"""Digit fitting for the even-involution valuation in the open residue
class.

For n = 4k + 1 the exponent of two in the even-involution count has no
proven closed form.  The observed pattern is ord(k) = k for even k, and
ord(k) = k + 1 + v(k) for odd k where v(k) behaves like the 2-adic
valuation of k + rho for a fixed 2-adic integer rho.  Each odd k with
observed v(k) therefore pins rho modulo 2**(v(k)+1):

    v(k) = val2(k + rho)  <=>  rho = 2**v(k) - k  (mod 2**(v(k)+1)).

The scanner folds these congruences together, reports the digit prefix they
determine (never zero-filling beyond it), and records a structured
violation instead of asserting anything it did not observe.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Valuation, val2
from .valuations import even_involution_count

__all__ = [
    "even_count_val2",
    "Violation",
    "TwoAdicPrefix",
    "fit_shift_digits",
]


def even_count_val2(k: int) -> Valuation:
    """Exact exponent of two in the even-involution count at n = 4k + 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return val2(even_involution_count(4 * k + 1))


@dataclass(frozen=True)
class Violation:
    k: int
    kind: str
    message: str

    def to_json_obj(self) -> dict:
        return {"k": self.k, "kind": self.kind, "message": self.message}


@dataclass(frozen=True)
class TwoAdicPrefix:
    """Digit prefix of the fitted 2-adic shift.

    ``digits`` lists bits rho_0, rho_1, ... up to the smaller of the bit
    budget and what the constraints actually determine;
    ``undetermined_from`` is the first index with no digit information in
    this report (always len(digits)).
    """

    k_max: int
    bit_budget: int
    digits: tuple[int, ...]
    undetermined_from: int
    violations: tuple[Violation, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations

    def residue(self) -> int:
        """The fitted shift modulo 2**len(digits)."""
        return sum(bit << i for i, bit in enumerate(self.digits))

    def to_json_obj(self) -> dict:
        return {
            "k_max": self.k_max,
            "bit_budget": self.bit_budget,
            "digits": list(self.digits),
            "undetermined_from": self.undetermined_from,
            "violations": [v.to_json_obj() for v in self.violations],
        }


def fit_shift_digits(k_max: int, bit_budget: int = 11) -> TwoAdicPrefix:
    """Fit the shift's digit prefix from all k <= k_max.

    Even k (where the pattern predicts exponent exactly k) are verified as a
    side condition.  Odd-k constraints are merged in increasing k, so a
    contradictory constraint system is reported with the smallest failing k
    and the first conflicting digit.  Inside the fold the full determined
    precision is kept; only the report is trimmed to the bit budget.
    """
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    if bit_budget < 1:
        raise ValueError("bit_budget must be positive")
    residue = 0
    bits = 0
    violations: list[Violation] = []
    for k in range(k_max + 1):
        ord_k = even_count_val2(k)
        if k % 2 == 0:
            if ord_k != k:
                violations.append(
                    Violation(
                        k,
                        "even_exponent",
                        f"exponent at even k={k} is {ord_k}, expected {k}",
                    )
                )
            continue
        if not isinstance(ord_k, int):
            violations.append(
                Violation(k, "odd_exponent", f"count at odd k={k} vanished")
            )
            continue
        v = ord_k - k - 1
        if v < 0:
            violations.append(
                Violation(
                    k,
                    "odd_exponent",
                    f"exponent at odd k={k} is {ord_k}, below the floor {k + 1}",
                )
            )
            continue
        new_bits = v + 1
        new_residue = ((1 << v) - k) % (1 << new_bits)
        common = min(bits, new_bits)
        if (residue - new_residue) % (1 << common):
            conflict = val2((residue - new_residue) % (1 << common))
            violations.append(
                Violation(
                    k,
                    "digit_conflict",
                    f"constraint at k={k} forces digit {conflict} to "
                    f"{(new_residue >> conflict) & 1}, contradicting the "
                    f"digits fixed by smaller k",
                )
            )
            continue
        if new_bits > bits:
            residue, bits = new_residue, new_bits
    reported = min(bits, bit_budget)
    digits = tuple((residue >> i) & 1 for i in range(reported))
    return TwoAdicPrefix(
        k_max=k_max,
        bit_budget=bit_budget,
        digits=digits,
        undetermined_from=reported,
        violations=tuple(violations),
    )
