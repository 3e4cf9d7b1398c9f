"""Closed-form 2-adic (and p-adic) valuations of the involution counts.

Writing n = 4k + r with 0 <= r < 4, the exponent of two is known exactly for
the involution count itself and for the signed sum at every n, and for the
even/odd counts at every n except two residue classes: the odd count at
r = 0 and the even count at r = 1 have no proven closed form.  Those two
predictions are reported as None, never guessed; the digit-fitting scanner
in :mod:`involution_lab.conjecture` consumes the computed column instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import INFINITY, Valuation, val2, val_p
from .errors import ExactnessError
from .sequences import involution_count, pth_root_count, signed_involution_count

__all__ = [
    "chi_odd",
    "chi_even",
    "tau_valuation_bound",
    "involution_val2",
    "binomial_shift_bound_holds",
    "signed_val2_predicted",
    "even_involution_count",
    "odd_involution_count",
    "even_val2_predicted",
    "odd_val2_predicted",
    "ValuationReport",
    "REPORT_KINDS",
    "valuation_report",
    "valuation_table",
    "format_valuation",
    "table_fieldnames",
    "table_row",
]


def chi_odd(n: int) -> int:
    """1 on odd n, 0 on even (0 included)."""
    return n & 1


def chi_even(n: int) -> int:
    return 1 - (n & 1)


def tau_valuation_bound(n: int, p: int) -> int:
    """Proven lower bound floor(n/p) - floor(n/p**2) for the p-adic valuation
    of the p-th-root count."""
    return n // p - n // (p * p)


def involution_val2(n: int) -> int:
    """Exact exponent of two in the involution count:
    floor(n/2) - 2 floor(n/4) + floor((n+1)/4), i.e. k + r//2 + [r == 3]."""
    return n // 2 - 2 * (n // 4) + (n + 1) // 4


def binomial_shift_bound_holds(k: int, i: int) -> bool:
    """Check val2(2**i C(k, i)) >= val2(k) + i - val2(i) for positive k, i,
    together with its two working specializations (>= val2(k) + 1 always,
    and >= val2(k) + 3 once i >= 5)."""
    if k < 1 or i < 1:
        raise ValueError("k and i must be positive")
    lhs = val2((1 << i) * math.comb(k, i))
    vk = val2(k)
    if i > k:
        # C(k, i) = 0: the left side is infinite and every bound holds.
        return True
    if not lhs >= vk + i - val2(i):
        return False
    if not lhs >= vk + 1:
        return False
    if i >= 5 and not lhs >= vk + 3:
        return False
    return True


def signed_val2_predicted(n: int) -> Valuation:
    """Predicted exponent of two in the signed involution sum: k + r//2 for
    r != 2, and k + 3 + val2(k) for r = 2 (INFINITY at n = 2, where the
    signed sum is zero)."""
    k, r = divmod(n, 4)
    if r == 2:
        return k + 3 + val2(k)
    return k + r // 2


def even_involution_count(n: int) -> int:
    """(count + signed sum) / 2, exactly."""
    total = involution_count(n) + signed_involution_count(n)
    half, rem = divmod(total, 2)
    if rem:
        raise ExactnessError("count + signed sum is odd")
    return half


def odd_involution_count(n: int) -> int:
    """(count - signed sum) / 2, exactly."""
    total = involution_count(n) - signed_involution_count(n)
    half, rem = divmod(total, 2)
    if rem:
        raise ExactnessError("count - signed sum is odd")
    return half


def even_val2_predicted(n: int) -> Valuation | None:
    """Predicted exponent of two in the even-involution count, or None on
    the residue class (r = 1) with no proven closed form."""
    k, r = divmod(n, 4)
    if r == 0:
        return k + chi_odd(k)
    if r == 1:
        return None
    return k


def odd_val2_predicted(n: int) -> Valuation | None:
    """Predicted exponent of two in the odd-involution count, or None on the
    residue class (r = 0) with no proven closed form.  At n = 1 the count is
    zero and the prediction is INFINITY (val2(0) absorbs the sum)."""
    k, r = divmod(n, 4)
    if r == 0:
        return None
    if r == 1:
        return k + val2(k) + chi_even(k)
    return k


@dataclass(frozen=True)
class ValuationReport:
    """One computed-versus-predicted valuation cell."""

    n: int
    kind: str
    computed: Valuation
    predicted: Valuation | None
    matches: bool


REPORT_KINDS = ("t", "t_signed", "t_even", "t_odd")

_COMPUTED = {
    "t": involution_count,
    "t_signed": signed_involution_count,
    "t_even": even_involution_count,
    "t_odd": odd_involution_count,
}

_PREDICTED = {
    "t": involution_val2,
    "t_signed": signed_val2_predicted,
    "t_even": even_val2_predicted,
    "t_odd": odd_val2_predicted,
}


def valuation_report(n: int, kind: str, p: int = 2) -> ValuationReport:
    if kind == "tau":
        computed = val_p(pth_root_count(n, p), p)
        return ValuationReport(n, kind, computed, None, False)
    if kind not in REPORT_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    computed = val2(_COMPUTED[kind](n))
    predicted = _PREDICTED[kind](n)
    matches = predicted is not None and computed == predicted
    return ValuationReport(n, kind, computed, predicted, matches)


def valuation_table(k_max: int) -> list[ValuationReport]:
    """Reports for every n = 4k + r with k <= k_max and every kind, in
    (n, kind) order."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    out = []
    for n in range(4 * k_max + 4):
        for kind in REPORT_KINDS:
            out.append(valuation_report(n, kind))
    return out


def format_valuation(v: "Valuation | None") -> str:
    """Serialize a valuation: INFINITY as 'inf', a missing prediction as
    'unknown'."""
    if v is None:
        return "unknown"
    if v is INFINITY:
        return "inf"
    return str(v)


def table_fieldnames() -> list[str]:
    names = ["n", "k", "r"]
    names += [f"ord_{kind}" for kind in REPORT_KINDS]
    names += [f"predicted_{kind}" for kind in REPORT_KINDS]
    names += [f"match_{kind}" for kind in REPORT_KINDS]
    return names


def table_row(n: int) -> dict[str, str]:
    """One flat table row for the CSV/JSON emitters."""
    k, r = divmod(n, 4)
    row: dict[str, str] = {"n": str(n), "k": str(k), "r": str(r)}
    for kind in REPORT_KINDS:
        rep = valuation_report(n, kind)
        row[f"ord_{kind}"] = format_valuation(rep.computed)
        row[f"predicted_{kind}"] = format_valuation(rep.predicted)
        row[f"match_{kind}"] = str(rep.matches).lower()
    return row
