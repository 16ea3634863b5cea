"""Theta and false theta functions, Andrews-Gordon multi-sums, and the
named q-series tails.

The two-variable series are

    f(a, b)   = sum_{i>=0} a^(i(i+1)/2) b^(i(i-1)/2)
              + sum_{i>=1} a^(i(i-1)/2) b^(i(i+1)/2),
    Psi(a, b) = same with the second sum subtracted,

evaluated at monomial arguments a = sign * q^e with e > 0 (denominator of e
at most 2, so intermediate supports live in half-integer powers of q).  The
Andrews-Gordon multi-sums share one truncation engine: an index l_j is
included while l_j (l_j + 1) <= order, which is sound because the term
degree sum_j i_j (i_j + 1) dominates every l_j (l_j + 1).

All series returned here live in Z[[q]]; assert_integer_coefficients makes
that checkable after any assembly that routes through rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RepresentationError
from .qcore import (
    QSeries,
    VLaurent,
    poch_finite,
    poch_inf,
    poch_inf_step,
    qbinom,
    series_div,
    series_mul,
    to_q_series,
)


@dataclass(frozen=True)
class MonomialArg:
    """A monomial argument sign * q**exponent with exponent > 0.

    The exponent is a rational with denominator 1 or 2, so every series
    below has support in half-integer powers of q; operations returning a
    QSeries verify that the final support is integral.
    """

    sign: int
    exponent: Fraction

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        e = Fraction(self.exponent)
        if e <= 0:
            raise DomainError("exponent must be positive")
        if e.denominator not in (1, 2):
            raise DomainError("exponent denominator must be 1 or 2")
        object.__setattr__(self, "exponent", e)

    @property
    def half_exponent(self) -> int:
        """The exponent measured in units of q**(1/2)."""
        return int(2 * self.exponent)


def _two_variable_series(
    a: MonomialArg, b: MonomialArg, order: int, second_sign: int
) -> QSeries:
    """Common engine for f(a, b) (second_sign +1) and Psi(a, b) (-1)."""
    if order < 0:
        raise DomainError("order must be non-negative")
    ea, eb = a.half_exponent, b.half_exponent
    limit = 2 * order  # work in half-exponent units
    acc: dict[int, int] = {}

    def tri(i: int) -> int:
        return i * (i + 1) // 2

    def add_terms(exp_a, exp_b, start: int, sign_factor: int) -> None:
        i = start
        while True:
            deg = ea * exp_a(i) + eb * exp_b(i)
            if deg > limit and i > start:
                break
            if deg > limit and ea * exp_a(i + 1) + eb * exp_b(i + 1) > limit:
                break
            if deg <= limit:
                coeff = (a.sign ** exp_a(i)) * (b.sign ** exp_b(i)) * sign_factor
                acc[deg] = acc.get(deg, 0) + coeff
            i += 1

    add_terms(lambda i: tri(i), lambda i: tri(i - 1), 0, 1)
    add_terms(lambda i: tri(i - 1), lambda i: tri(i), 1, second_sign)

    for deg, coeff in acc.items():
        if coeff and deg % 2:
            raise RepresentationError(
                "series support is not integral in q (half-integer exponent survives)"
            )
    cs = [Fraction(0)] * order
    for deg, coeff in acc.items():
        if coeff and deg // 2 < order:
            cs[deg // 2] += coeff
    return QSeries(0, cs)


def theta_general(a: MonomialArg, b: MonomialArg, order: int) -> QSeries:
    """The Ramanujan theta function f(a, b) truncated to the given order."""
    return _two_variable_series(a, b, order, +1)


def psi_general(a: MonomialArg, b: MonomialArg, order: int) -> QSeries:
    """The false theta function Psi(a, b) truncated to the given order."""
    return _two_variable_series(a, b, order, -1)


def theta_f(k: int, order: int) -> QSeries:
    """f(-q^(2k), -q): the theta specialization appearing as torus-knot tails.

    Direct summation of
        sum_{i>=0} (-1)^i q^(k(i^2+i) + i(i-1)/2)
      + sum_{i>=1} (-1)^i q^(k(i^2-i) + i(i+1)/2).
    """
    if k < 1:
        raise DomainError("theta_f needs k >= 1")
    if order < 0:
        raise DomainError("order must be non-negative")
    cs = [Fraction(0)] * order

    i = 0
    while True:
        d = k * (i * i + i) + i * (i - 1) // 2
        if d >= order and i > 0:
            break
        if d < order:
            cs[d] += (-1) ** i
        i += 1
    i = 1
    while True:
        d = k * (i * i - i) + i * (i + 1) // 2
        if d >= order and i > 1:
            break
        if d < order:
            cs[d] += (-1) ** i
        i += 1
    return QSeries(0, cs)


def false_theta(k: int, order: int) -> QSeries:
    """Psi(q^(2k-1), q) = sum_{i>=0} q^(ki^2+(k-1)i) - sum_{i>=1} q^(k(i^2-i)+i)."""
    if k < 1:
        raise DomainError("false_theta needs k >= 1")
    if order < 0:
        raise DomainError("order must be non-negative")
    cs = [Fraction(0)] * order
    i = 0
    while True:
        d = k * i * i + (k - 1) * i
        if d >= order and i > 0:
            break
        if d < order:
            cs[d] += 1
        i += 1
    i = 1
    while True:
        d = k * (i * i - i) + i
        if d >= order and i > 1:
            break
        if d < order:
            cs[d] -= 1
        i += 1
    return QSeries(0, cs)


# ---------------------------------------------------------------------------
# Andrews-Gordon multi-sums
# ---------------------------------------------------------------------------


def nested_sum_series(depth: int, order: int, *, square_last: bool) -> QSeries:
    """sum over l_1..l_depth >= 0 of q^(sum_j i_j (i_j+1)) / denom with
    i_j = l_j + ... + l_depth; denom = prod_j (q;q)_{l_j}, last factor
    squared when requested.  Empty sum (depth 0) is 1.

    Truncation: l_j included while l_j (l_j + 1) <= order; sound because
    the term degree dominates each l_j (l_j + 1).
    """
    if depth < 0:
        raise DomainError("depth must be >= 0")
    if depth == 0:
        return QSeries.one(order)
    lmax = 0
    while (lmax + 1) * (lmax + 2) <= order:
        lmax += 1
    inv_poch = []
    acc = QSeries.one(order)
    for l in range(lmax + 1):
        if l:
            factor = [Fraction(0)] * order
            factor[0] = Fraction(1)
            if l < order:
                factor[l] = Fraction(-1)
            acc = series_div(acc, QSeries(0, factor))
        inv_poch.append(acc)

    total = QSeries.zero(order)

    def rec(chosen: int, suffix: int, deg: int, prod: QSeries) -> None:
        nonlocal total
        if chosen == depth:
            total = total + prod.q_shifted(deg)
            return
        for l in range(lmax + 1):
            i_val = suffix + l
            d = deg + i_val * (i_val + 1)
            if d >= order:
                break
            piece = inv_poch[l]
            if square_last and chosen == 0:
                piece = series_mul(piece, inv_poch[l])
            rec(chosen + 1, i_val, d, series_mul(prod, piece).with_order(order))

    rec(0, 0, 0, QSeries.one(order))
    return total.with_order(order)


def ag_rhs(k: int, order: int) -> QSeries:
    """Right-hand side of the Andrews-Gordon identity for f(-q^(2k), -q):

        (q;q)_inf * sum_{l_1..l_{k-1}} q^(sum i_j(i_j+1)) / prod (q;q)_{l_j}.

    k = 1 gives (q;q)_inf; k = 2 is the second Rogers-Ramanujan shape.
    """
    if k < 1:
        raise DomainError("ag_rhs needs k >= 1")
    body = nested_sum_series(k - 1, order, square_last=False)
    return series_mul(poch_inf(1, order), body).with_order(order)


def false_ag_rhs(k: int, order: int) -> QSeries:
    """Right-hand side of the false-theta counterpart for Psi(q^(2k-1), q):

        (q;q)_inf * sum_{l_1..l_{k-1}} q^(sum i_j(i_j+1))
                    / ((q;q)_{l_{k-1}}^2 prod_{j<k-1} (q;q)_{l_j}).

    k = 2 is Ramanujan's Entry 9 shape.
    """
    if k < 2:
        raise DomainError("false_ag_rhs needs k >= 2")
    body = nested_sum_series(k - 1, order, square_last=True)
    return series_mul(poch_inf(1, order), body).with_order(order)


# ---------------------------------------------------------------------------
# Named tails
# ---------------------------------------------------------------------------


def lambda_series(order: int) -> QSeries:
    """The tetrahedron-over-theta tail

        Lambda(q) = (q;q)_inf^2 * sum_{i>=0} (-1)^i q^((i+3i^2)/2) / (q;q)_i^3.

    The i-th term has degree (i + 3 i^2)/2, so the sum is truncated once
    that exceeds the order.
    """
    if order < 0:
        raise DomainError("order must be non-negative")
    total = QSeries.zero(order)
    inv = QSeries.one(order)
    i = 0
    while True:
        d = (i + 3 * i * i) // 2
        if d > order or (order == 0 and i > 0):
            break
        if i:
            factor = [Fraction(0)] * max(order, 1)
            factor[0] = Fraction(1)
            if i < order:
                factor[i] = Fraction(-1)
            inv = series_div(inv, QSeries(0, factor))
        if d < order:
            term = series_mul(series_mul(inv, inv), inv).with_order(order)
            if i % 2:
                term = -term
            total = total + term.q_shifted(d)
        i += 1
    pp = poch_inf(1, order)
    return series_mul(series_mul(pp, pp), total).with_order(order)


def tail_85(order: int, k_max: int | None = None) -> QSeries:
    """The stable series of the 8_5 knot:

        (q^2;q)_inf (q;q)_inf * sum_k q^(k+k^2)/(q;q)_k
            * sum_{i=0}^{k} q^(-2i(k-i)) qbinom(k, i)^2.

    The k-th term's inner sum dips to q^(-2 floor(k^2/4)), so k is included
    while k + k^2 - 2*floor(k^2/4) <= order; each term is assembled exactly
    in v-exponent space before any truncation.  ``k_max`` extends the outer
    sum beyond the provably sufficient bound (the extra terms cannot touch
    retained coefficients; the knob exists for prefix-stability checks).
    """
    if order < 0:
        raise DomainError("order must be non-negative")
    total = QSeries.zero(order)
    k = 0
    while True:
        min_deg = k + k * k - 2 * (k * k // 4)
        needed = min_deg <= order
        if not needed and (k_max is None or k > k_max):
            break
        if order and (needed or k <= k_max):
            inner = VLaurent.zero()
            for i in range(k + 1):
                qb = qbinom(k, i)
                inner = inner + VLaurent.q_power(-2 * i * (k - i)) * (qb * qb)
            term_poly = VLaurent.q_power(k + k * k) * inner
            term = to_q_series(term_poly)
            den = to_q_series(poch_finite(1, 1, k))
            if term.shift < order:
                width = order - term.shift
                total = total + series_div(
                    term.with_order(width), den.with_order(width), order=width
                )
        k += 1
    out = series_mul(series_mul(poch_inf(2, order), poch_inf(1, order)), total)
    return out.with_order(order)


def assert_integer_coefficients(s: QSeries) -> QSeries:
    """Assert that every coefficient is an integer (tails live in Z[[q]])."""
    for c in s.coeffs:
        if c.denominator != 1:
            raise RepresentationError(f"non-integer coefficient {c}")
    return s


# ---------------------------------------------------------------------------
# Named-series registry (used by the CLI's series/verify commands)
# ---------------------------------------------------------------------------


def _arg(params: dict, key: str, default=None) -> int:
    if key in params:
        return int(params[key])
    if default is not None:
        return default
    raise DomainError(f"missing parameter {key!r}")


def _registry_theta_general(params: dict, order: int) -> QSeries:
    a = MonomialArg(_arg(params, "a_sign"), Fraction(_arg(params, "a_num"), _arg(params, "a_den", 1)))
    b = MonomialArg(_arg(params, "b_sign"), Fraction(_arg(params, "b_num"), _arg(params, "b_den", 1)))
    return theta_general(a, b, order)


SERIES_REGISTRY = {
    "theta_f": lambda p, N: theta_f(_arg(p, "k"), N),
    "false_theta": lambda p, N: false_theta(_arg(p, "k"), N),
    "ag_rhs": lambda p, N: ag_rhs(_arg(p, "k"), N),
    "false_ag_rhs": lambda p, N: false_ag_rhs(_arg(p, "k"), N),
    "theta_general": _registry_theta_general,
    "lambda": lambda p, N: lambda_series(N),
    "tail_85": lambda p, N: tail_85(N),
    "poch_inf": lambda p, N: poch_inf(_arg(p, "c", 1), N),
    "poch_inf_step": lambda p, N: poch_inf_step(_arg(p, "c"), _arg(p, "step"), N),
}


def named_series(name: str, params: dict, order: int) -> QSeries:
    """Evaluate a registry series; unknown names raise DomainError."""
    try:
        fn = SERIES_REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown series {name!r}") from None
    return fn(params, order)
