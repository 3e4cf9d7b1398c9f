"""Eventual-period analysis of the involution counts modulo m and of their
odd factors modulo powers of two.

Soundness model.  The reduced count stream is driven by the deterministic
finite state (n mod m, t(n-1) mod m, t(n) mod m), so the stream is
eventually periodic and a first repeated state yields hard bounds: the tail
is periodic from that state's position with a period dividing the state
period.  Minimization then only has to test divisors of the state period
and scan backwards for the true preperiod, and every rejected candidate is
stored with a concrete counterexample index.  The generic window detector
(for sequences without an attached state machine) requires the examined
window to cover the preperiod plus ``margin`` full periods; within that
precondition a periodicity-of-suffixes argument makes its answer exact, and
outside it the detector fails loudly rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import odd_part, val2
from .errors import InconclusiveError, VerificationError
from .sequences import involution_count

__all__ = [
    "PeriodReport",
    "detect_period",
    "verify_report_witnesses",
    "involution_mod_stream",
    "involution_mod_prefix",
    "involution_mod_period",
    "verify_odd_modulus",
    "verify_even_modulus",
    "odd_product_congruence",
    "odd_factor_mod_prefix",
    "odd_factor_shift_congruence",
    "odd_factor_period",
]


@dataclass(frozen=True)
class PeriodReport:
    """Minimal preperiod and period of an examined window, with witnesses.

    ``rejected_divisors`` holds one (candidate, index) pair per proper
    divisor of the period, where the sequence differs between index and
    index + candidate; ``preperiod_witness`` (when the preperiod is
    positive) is the index just before the tail where the period fails.
    """

    modulus: int
    preperiod: int
    period: int
    window_checked: int
    rejected_divisors: tuple[tuple[int, int], ...]
    preperiod_witness: int | None

    def to_json_obj(self) -> dict:
        return {
            "modulus": self.modulus,
            "preperiod": self.preperiod,
            "period": self.period,
            "window_checked": self.window_checked,
            "witnesses": {
                "rejected_divisors": [list(w) for w in self.rejected_divisors],
                "preperiod_index": self.preperiod_witness,
            },
        }


def _proper_divisors(d: int) -> list[int]:
    return [x for x in range(1, d) if d % x == 0]


def _finalize(values: Sequence[int], modulus: int, lam: int, d: int) -> PeriodReport:
    """Shrink the preperiod, re-verify periodicity across the window, and
    collect the minimality witnesses."""
    w = len(values)
    while lam > 0 and values[lam - 1] == values[lam - 1 + d]:
        lam -= 1
    for i in range(lam, w - d):
        if values[i] != values[i + d]:
            raise VerificationError(
                f"internal: period {d} fails at index {i} inside the window"
            )
    rejected = []
    for dd in _proper_divisors(d):
        for i in range(lam, w - dd):
            if values[i] != values[i + dd]:
                rejected.append((dd, i))
                break
        else:
            raise VerificationError(
                f"internal: divisor {dd} of {d} has no counterexample in window"
            )
    witness = lam - 1 if lam > 0 else None
    return PeriodReport(modulus, lam, d, w, tuple(rejected), witness)


def _prefix_function(seq: Sequence[int]) -> list[int]:
    # Classic border table: pf[i] = length of the longest proper border of
    # seq[:i+1].  Minimal string period of seq[:L] is L - pf[L-1].
    pf = [0] * len(seq)
    k = 0
    for i in range(1, len(seq)):
        while k and seq[i] != seq[k]:
            k = pf[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pf[i] = k
    return pf


def detect_period(values: Sequence[int], modulus: int, *, margin: int = 3) -> PeriodReport:
    """Minimal preperiod and period of an eventually periodic value window.

    Precondition: the window must cover the preperiod plus ``margin`` full
    true periods (the state-driven callers size their windows to guarantee
    this).  When no suffix of the window shows a period with that much slack
    the scan is inconclusive and raises; it never returns a guess.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if margin < 2:
        raise ValueError("margin must be at least 2")
    vals = [v % modulus for v in values]
    w = len(vals)
    if w < margin:
        raise InconclusiveError(f"window of {w} values is too small")
    rev = vals[::-1]
    pf = _prefix_function(rev)
    for length in range(w, 0, -1):
        d = length - pf[length - 1]
        if margin * d <= length:
            return _finalize(vals, modulus, w - length, d)
    raise InconclusiveError(
        f"no periodic suffix with margin {margin} in a window of {w} values"
    )


def verify_report_witnesses(report: PeriodReport, values: Sequence[int]) -> bool:
    """Re-check a report against a fresh window: tail periodicity, every
    rejected-divisor counterexample, and the preperiod witness."""
    vals = [v % report.modulus for v in values]
    w = min(len(vals), report.window_checked)
    lam, d = report.preperiod, report.period
    if any(vals[i] != vals[i + d] for i in range(lam, w - d)):
        return False
    rejected = dict(report.rejected_divisors)
    if sorted(rejected) != _proper_divisors(d):
        return False
    for dd, i in rejected.items():
        if i < lam or i + dd >= w or vals[i] == vals[i + dd]:
            return False
    if lam > 0:
        i = report.preperiod_witness
        if i != lam - 1 or vals[i] == vals[i + d]:
            return False
    elif report.preperiod_witness is not None:
        return False
    return True


def involution_mod_stream(m: int) -> Iterator[int]:
    """t(0) mod m, t(1) mod m, ... driven entirely in modular arithmetic."""
    if m < 1:
        raise ValueError("modulus must be positive")
    a, b = 1 % m, 1 % m
    yield a
    yield b
    n = 1
    while True:
        a, b = b, (b + n * a) % m
        n += 1
        yield b


def involution_mod_prefix(m: int, count: int) -> list[int]:
    out = []
    for v in involution_mod_stream(m):
        if len(out) == count:
            break
        out.append(v)
    return out


def involution_mod_period(m: int, *, state_cap: int | None = None) -> PeriodReport:
    """Exact minimal preperiod and period of the involution counts mod m.

    Runs the modular recurrence until the driving state first repeats
    (guaranteed within m**3 states), which bounds the preperiod and gives a
    multiple of the period; minimization and witnesses then work on a window
    of that size.  The cap only guards against absurd moduli.
    """
    if m < 1:
        raise ValueError("modulus must be positive")
    cap = state_cap if state_cap is not None else min(m**3 + 4 * m, 10**7)
    values = [1 % m, 1 % m]
    seen: dict[tuple[int, int, int], int] = {}
    a, b = values[0], values[1]
    n = 1
    while True:
        state = (n % m, a, b)
        hit = seen.get(state)
        if hit is not None:
            first, again = hit, n
            break
        seen[state] = n
        if len(seen) > cap:
            raise InconclusiveError(
                f"no state repetition within {cap} steps for modulus {m}"
            )
        a, b = b, (b + n * a) % m
        n += 1
        values.append(b)
    mu = again - first
    lam_bound = first - 1
    while len(values) < lam_bound + 2 * mu + 2:
        a, b = b, (b + n * a) % m
        n += 1
        values.append(b)
    for d in range(1, mu + 1):
        if mu % d:
            continue
        if all(values[i] == values[i + d] for i in range(lam_bound, lam_bound + mu)):
            return _finalize(values, m, lam_bound, d)
    raise VerificationError("internal: state period is not a value period")


def verify_odd_modulus(m: int, *, state_cap: int | None = None) -> bool:
    """True when the involution counts mod an odd m are purely periodic with
    smallest period exactly m."""
    if m % 2 == 0:
        raise ValueError("modulus must be odd")
    report = involution_mod_period(m, state_cap=state_cap)
    return report.preperiod == 0 and report.period == m


def verify_even_modulus(m: int, *, state_cap: int | None = None) -> PeriodReport:
    """Period report for an even modulus m = 2**k * ell, checked against the
    required preperiod 4k - 2 and period ell; a mismatch raises instead of
    passing silently."""
    if m < 2 or m % 2:
        raise ValueError("modulus must be even")
    k = val2(m)
    ell = m >> k
    report = involution_mod_period(m, state_cap=state_cap)
    if report.preperiod != 4 * k - 2 or report.period != ell:
        raise VerificationError(
            f"modulus {m}: expected preperiod {4 * k - 2} and period {ell}, "
            f"found preperiod {report.preperiod} and period {report.period}"
        )
    return report


def odd_product_congruence(s: int) -> bool:
    """Check that the product of the first 2**(s-1) odd integers is 1 modulo
    2**s (asserted only for s >= 3)."""
    if s < 3:
        raise ValueError("s must be at least 3")
    mod = 1 << s
    prod = 1
    for i in range(1 << (s - 1)):
        prod = prod * (2 * i + 1) % mod
    return prod == 1


def odd_factor_mod_prefix(s: int, count: int) -> list[int]:
    """First ``count`` odd factors of the involution counts, reduced modulo
    2**s.  Computed from the exact big-integer counts; a windowed-precision
    modular recurrence for the odd factors is deliberately not offered (its
    exponents dip below zero, and exact computation is cheap at this size).
    """
    if s < 1:
        raise ValueError("s must be positive")
    mask = (1 << s) - 1
    return [odd_part(involution_count(n)) & mask for n in range(count)]


def odd_factor_shift_congruence(s: int, n_max: int) -> bool:
    """Check beta(n + 2**(s+1)) = beta(n) modulo 2**s for all n <= n_max."""
    if s < 3:
        raise ValueError("s must be at least 3")
    shift = 1 << (s + 1)
    vals = odd_factor_mod_prefix(s, n_max + shift + 1)
    return all(vals[n + shift] == vals[n] for n in range(n_max + 1))


def odd_factor_period(s: int, *, window: int | None = None) -> PeriodReport:
    """Report that the odd factors mod 2**s are purely periodic with
    smallest period 2**(s+1).

    Candidate periods are exactly the divisors of 2**(s+1): the smallest
    period must divide any period, so verifying 2**(s+1) across the window
    and exhibiting a counterexample for every proper divisor pins minimality.
    """
    if s < 3:
        raise ValueError("s must be at least 3")
    period = 1 << (s + 1)
    w = window if window is not None else 3 * period
    if w < 2 * period + 2:
        raise InconclusiveError(
            f"window {w} cannot certify a period of {period}"
        )
    values = odd_factor_mod_prefix(s, w)
    for i in range(w - period):
        if values[i] != values[i + period]:
            raise VerificationError(
                f"odd factors mod 2**{s}: expected period {period} fails at "
                f"index {i}"
            )
    rejected = []
    for j in range(s + 1):
        dd = 1 << j
        for i in range(w - dd):
            if values[i] != values[i + dd]:
                rejected.append((dd, i))
                break
        else:
            raise VerificationError(
                f"odd factors mod 2**{s}: {dd} is also a period in-window, "
                f"so {period} is not minimal"
            )
    return PeriodReport(1 << s, 0, period, w, tuple(rejected), None)
