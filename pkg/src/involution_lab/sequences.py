"""Sequence engines: recurrences and closed forms for the involution counts
and their graph-side companions.

Several quantities are computed along two independent routes (a direct
recurrence and a closed form through the graph counts); the test suite pins
the routes against each other and against the enumeration oracles.
"""

from __future__ import annotations

import math
import threading
from typing import Callable

from .algebra import BivariatePoly, Dyadic, binomial, odd_part, odd_product_ratio
from .errors import ExactnessError

__all__ = [
    "SequenceCache",
    "involution_count",
    "involution_count_direct",
    "signed_involution_count",
    "pth_root_count",
    "involution_poly",
    "graph_poly",
    "graph_count",
    "graph_count_signed",
    "involution_count_via_graphs",
    "involution_poly_via_graphs",
    "odd_factor",
    "odd_factor_closed",
    "odd_factor_step",
]


class SequenceCache:
    """Append-only memo: values[n] never changes once written.

    A single lock serializes extension (single writer); reads of already
    computed entries take no lock, which is safe under the append-only
    discipline.  ``selftest`` recomputes a prefix from scratch and compares,
    guarding against cache corruption.
    """

    def __init__(self, step: Callable[[int, list], object]):
        self._step = step
        self._values: list = []
        self._lock = threading.Lock()

    def get(self, n: int):
        if n < 0:
            raise ValueError("index must be nonnegative")
        if n >= len(self._values):
            with self._lock:
                while len(self._values) <= n:
                    self._values.append(self._step(len(self._values), self._values))
        return self._values[n]

    def prefix(self, n: int) -> list:
        self.get(n)
        return self._values[: n + 1]

    def selftest(self, upto: int) -> bool:
        fresh: list = []
        for i in range(upto + 1):
            fresh.append(self._step(i, fresh))
        return fresh == self.prefix(upto)


def _t_step(n: int, values: list) -> int:
    return 1 if n < 2 else values[n - 1] + (n - 1) * values[n - 2]


def _signed_step(n: int, values: list) -> int:
    return 1 if n < 2 else values[n - 1] - (n - 1) * values[n - 2]


_t_cache = SequenceCache(_t_step)
_signed_cache = SequenceCache(_signed_step)


def involution_count(n: int) -> int:
    """Number of involutions on n letters, by the removal recurrence
    t(n) = t(n-1) + (n-1) t(n-2)."""
    return _t_cache.get(n)


def involution_count_direct(n: int) -> int:
    """Same count as the explicit sum over cycle types: the involutions with
    i transpositions and j fixed points number n!/(2**i i! j!)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    fact_n = math.factorial(n)
    for i in range(n // 2 + 1):
        j = n - 2 * i
        term, rem = divmod(fact_n, (1 << i) * math.factorial(i) * math.factorial(j))
        if rem:
            raise ExactnessError("cycle-type term is not an integer")
        total += term
    return total


def signed_involution_count(n: int) -> int:
    """Sum of signs over involutions (each involution contributes
    (-1)**transpositions); satisfies s(n) = s(n-1) - (n-1) s(n-2)."""
    return _signed_cache.get(n)


_tau_caches: dict[int, SequenceCache] = {}
_tau_lock = threading.Lock()


def pth_root_count(n: int, p: int) -> int:
    """Number of permutations of n letters whose p-th power is the identity.

    Counted by removing the cycle through the largest letter: it is fixed, or
    lies on a p-cycle with p-1 of the remaining letters in any order.
    """
    from .algebra import is_prime

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    with _tau_lock:
        cache = _tau_caches.get(p)
        if cache is None:
            cache = _tau_caches[p] = SequenceCache(
                lambda m, v: 1 if m < p else v[m - 1] + math.perm(m - 1, p - 1) * v[m - p]
            )
    return cache.get(n)


_X = BivariatePoly.monomial(1, 0)
_Y = BivariatePoly.monomial(0, 1)
_HALF_X2_PLUS_Y = BivariatePoly({(2, 0): Dyadic(1, 1), (0, 1): Dyadic(1, 1)})


def _t_poly_step(n: int, values: list) -> BivariatePoly:
    if n == 0:
        return BivariatePoly.one()
    if n == 1:
        return _X
    return _X * values[n - 1] + (n - 1) * (_Y * values[n - 2])


_t_poly_cache = SequenceCache(_t_poly_step)


def involution_poly(n: int) -> BivariatePoly:
    """Generating polynomial of involutions by x**(fixed points) *
    y**(transpositions); the coefficient of x**(n-2i) y**i is
    n!/(2**i i! (n-2i)!)."""
    return _t_poly_cache.get(n)


def _graph_poly_step(n: int, values: list) -> BivariatePoly:
    # Weight sum over the doubled-edge-free graphs.  Indexing below never
    # goes negative thanks to the explicit guards (absent terms are zero).
    def at(k: int) -> BivariatePoly:
        return values[k] if k >= 0 else BivariatePoly.zero()

    if n == 0:
        return BivariatePoly.one()
    if n % 2:
        m = (n - 1) // 2
        return _X * at(n - 1) + m * (_Y * at(n - 2))
    m = n // 2
    out = _HALF_X2_PLUS_Y * at(n - 2)
    if m >= 2:
        out = out + (m - 1) * (_X * _Y * at(n - 3))
        out = out + (2 * binomial(m - 1, 2)) * at(n - 4).shift(0, 2)
        if n >= 8:
            out = out + (3 * binomial(m - 1, 3)) * at(n - 8).shift(0, 4)
    return out


_graph_poly_cache = SequenceCache(_graph_poly_step)


def graph_poly(n: int) -> BivariatePoly:
    """Weight sum over the admissible graphs without doubled edges, by the
    degree-and-collapse recurrence; zero for negative n."""
    if n < 0:
        return BivariatePoly.zero()
    return _graph_poly_cache.get(n)


def _graph_scalar_cache(x: Dyadic, y: Dyadic) -> SequenceCache:
    # The same recurrence evaluated in the dyadic scalars instead of the
    # polynomial ring; O(1) work per index, which the polynomial route
    # cannot match for four-digit n.
    half_x2_plus_y = (x * x + y) / 2

    def step(n: int, values: list) -> Dyadic:
        def at(k: int) -> Dyadic:
            return values[k] if k >= 0 else Dyadic(0)

        if n == 0:
            return Dyadic(1)
        if n % 2:
            m = (n - 1) // 2
            return x * at(n - 1) + m * (y * at(n - 2))
        m = n // 2
        out = half_x2_plus_y * at(n - 2)
        if m >= 2:
            out = out + (m - 1) * (x * y * at(n - 3))
            out = out + (2 * binomial(m - 1, 2)) * (y * y * at(n - 4))
            if n >= 8:
                yy = y * y
                out = out + (3 * binomial(m - 1, 3)) * (yy * yy * at(n - 8))
        return out

    return SequenceCache(step)


_graph_at_one = _graph_scalar_cache(Dyadic(1), Dyadic(1))
_graph_at_minus_one = _graph_scalar_cache(Dyadic(1), Dyadic(-1))


def graph_count(n: int) -> int:
    """graph_poly(n) at (1, 1): the number of admissible graphs without
    doubled edges.  Integrality of the dyadic recurrence value is asserted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _graph_at_one.get(n).as_int()


def graph_count_signed(n: int) -> int:
    """graph_poly(n) at (1, -1), again integrality-asserted."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _graph_at_minus_one.get(n).as_int()


def involution_count_via_graphs(n: int) -> int:
    """Involution count reassembled from the doubled-edge-free graph counts:
    with n = 4k + r,

        t(n) = 2**(k + r//2) * sum_i 2**i C(k, i)
               [oddprod(k + r//2) / oddprod(i + r//2)] g(4i + r)

    where the odd-product ratio is computed as an explicit product, never by
    dividing factorials.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, r = divmod(n, 4)
    fl = r // 2
    total = 0
    for i in range(k + 1):
        total += (
            (1 << i)
            * binomial(k, i)
            * odd_product_ratio(i + fl, k + fl)
            * graph_count(4 * i + r)
        )
    return (1 << (k + fl)) * total


def involution_poly_via_graphs(n: int) -> BivariatePoly:
    """Polynomial analogue of involution_count_via_graphs: each graph term
    picks up y**(2k-2i) for its doubled edges."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, r = divmod(n, 4)
    fl = r // 2
    total = BivariatePoly.zero()
    for i in range(k + 1):
        scale = (1 << i) * binomial(k, i) * odd_product_ratio(i + fl, k + fl)
        total = total + scale * graph_poly(4 * i + r).shift(0, 2 * (k - i))
    return (1 << (k + fl)) * total


def odd_factor(n: int) -> int:
    """The involution count with its maximal power of two removed."""
    return odd_part(involution_count(n))


def _ord2_closed(n: int) -> int:
    # Exponent of two in the involution count; the floor form below is valid
    # down to n = -1, which the step recurrence needs.
    return n // 2 - 2 * (n // 4) + (n + 1) // 4


def odd_factor_closed(n: int) -> int:
    """Odd factor by the graph-count formula: with n = 4k + r,

        beta(n) = sum_i 2**(i - [r == 3]) C(k, i)
                  [oddprod(k + r//2) / oddprod(i + r//2)] g(4i + r).

    The i = 0, r = 3 term carries 2**(-1), so the sum is formed over dyadics
    and asserted integral at the end.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    k, r = divmod(n, 4)
    fl = r // 2
    delta = 1 if r == 3 else 0
    total = Dyadic(0)
    for i in range(k + 1):
        term = Dyadic(
            binomial(k, i)
            * odd_product_ratio(i + fl, k + fl)
            * graph_count(4 * i + r),
            delta - i,
        )
        total = total + term
    return total.as_int()


def odd_factor_step(n: int, prev: int, curr: int) -> int:
    """Next odd factor from the two before it: for n = 4k + r,

        beta(n+1) = 2**(h(r)-h(r+1)) beta(n) + 2**(h(r-1)-h(r+1)) n beta(n-1)

    with h the exponent-of-two closed form.  The dyadic two-term sum must be
    an integer; if not, the inputs were not genuine consecutive odd factors.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    r = n % 4
    e1 = _ord2_closed(r) - _ord2_closed(r + 1)
    e2 = _ord2_closed(r - 1) - _ord2_closed(r + 1)
    total = Dyadic(curr, -e1) + Dyadic(n * prev, -e2)
    try:
        return total.as_int()
    except ExactnessError:
        raise ValueError(
            f"inputs {prev}, {curr} are not consecutive odd factors at n={n}"
        ) from None
