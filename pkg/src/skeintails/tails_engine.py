"""Tail extraction: the "first n coefficients agree" predicate, stabilization
reports for sequence families, and the tail product combinators.

A sequence P_1, P_2, ... of exact skein evaluations has a tail when the
first n coefficients of P_n stabilize (up to a common sign and power of q).
"Up to a common sign" is resolved by normalizing each series individually:
divide by +-q^s so the lowest term sits at q^0 with a positive coefficient.
The normalized representative is a complete invariant of the +-q^s orbit,
which makes the agreement predicate a genuine equivalence on prefixes.

Comparing beyond the computed order of a series raises PrecisionError; it
never silently returns False.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import DomainError, PrecisionError, RepresentationError
from .qcore import (
    QSeries,
    VFraction,
    VLaurent,
    fraction_to_q_series,
    poch_inf,
    series_div,
    series_mul,
    to_q_series,
)

SkeinValue = Union[VLaurent, VFraction, QSeries]


def normalize(p: SkeinValue, order: int | None = None) -> QSeries:
    """Divide by +-q^s so the series starts with a positive coefficient at q^0.

    The magnitude of the leading coefficient is preserved.  Exact Laurent
    polynomials normalize to exact series; rational functions need an
    explicit order.  Zero input and non-integral relative q-powers raise.
    """
    if isinstance(p, VLaurent):
        if p.is_zero():
            raise DomainError("cannot normalize zero")
        s = to_q_series(p)
    elif isinstance(p, VFraction):
        if p.is_zero():
            raise DomainError("cannot normalize zero")
        if order is None:
            raise DomainError("normalizing a rational function needs an order")
        # Each of num and den must individually be a q-series up to a global
        # power of A; the leftover A-residue is framing and is dropped below.
        num = to_q_series(p.num)
        den = to_q_series(p.den)
        s = series_div(num, den, order=order)
    elif isinstance(p, QSeries):
        if p.is_zero():
            raise DomainError("cannot normalize zero")
        s = p
    else:
        raise DomainError(f"cannot normalize {type(p).__name__}")
    # Shift to q^0 and fix the sign; drop any leftover v-residue (a global
    # power of A = q^(1/4) is part of the +-q^s framing ambiguity).
    cs = list(s.coeffs)
    if cs and cs[0] < 0:
        cs = [-c for c in cs]
    out = QSeries(0, cs, exact=s.exact)
    if order is not None:
        out = out.with_order(order)
    return out


def agree_to_order(a: QSeries, b: QSeries, n: int) -> bool:
    """True iff the first n coefficients agree after normalization.

    Requesting more coefficients than either operand carries raises
    PrecisionError: truncation must never masquerade as disagreement.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if a.v_shift or b.v_shift:
        raise RepresentationError("fractionally shifted series cannot be compared")
    na = normalize(a)
    nb = normalize(b)
    if na.order_or_inf() < n or nb.order_or_inf() < n:
        raise PrecisionError(
            f"agreement to {n} requested but orders are "
            f"{na.order_or_inf()} and {nb.order_or_inf()}"
        )
    for j in range(n):
        ca = na.coeffs[j] if j < len(na.coeffs) else Fraction(0)
        cb = nb.coeffs[j] if j < len(nb.coeffs) else Fraction(0)
        if ca != cb:
            return False
    return True


def sum_fraction_products_x(
    terms: list[list[VFraction]], q_order: int
) -> QSeries:
    """Exact series (in x = q**(1/2)) of a finite sum of products of
    rational functions, carried far enough for q_order q-coefficients past
    the sum's leading term.

    Summing rational functions through a common polynomial denominator is
    exponentially wasteful here (the chain-coefficient denominators barely
    overlap); expanding each product as a truncated x-series and aligning
    shifts costs O(order^2) per term instead.
    """
    from .qcore import fraction_to_x_series, to_x_series

    shifts = []
    for factors in terms:
        sh = 0
        for f in factors:
            if f.is_zero():
                sh = None
                break
            sh += to_x_series(f.num).shift - to_x_series(f.den).shift
        shifts.append(sh)
    live = [s for s in shifts if s is not None]
    if not live:
        return QSeries.zero(2 * q_order)
    lo = min(live)
    window_end = lo + 2 * q_order + 4
    total = QSeries(lo, [Fraction(0)] * (2 * q_order + 4))
    for factors, sh in zip(terms, shifts):
        if sh is None or sh >= window_end:
            continue
        need = window_end - sh
        prod = None
        for f in factors:
            s = fraction_to_x_series(f, need)
            prod = s if prod is None else series_mul(prod, s)
        total = total + prod
    return total


def x_series_to_normalized_q(s: QSeries, q_order: int) -> QSeries:
    """Normalize an x-series and reinterpret it in q; the normalized support
    must lie on even x-powers (odd residues would be a q^(1/2) leftover)."""
    if s.is_zero():
        raise DomainError("cannot normalize zero")
    cs = list(s.coeffs)
    if cs[0] < 0:
        cs = [-c for c in cs]
    if any(c for j, c in enumerate(cs) if j % 2):
        raise RepresentationError("normalized series has q^(1/2) support")
    qc = [cs[2 * j] for j in range(len(cs) // 2 + len(cs) % 2)]
    return QSeries(0, qc, exact=s.exact).with_order(
        min(q_order, (len(cs) + 1) // 2)
    )


# ---------------------------------------------------------------------------
# Stabilization reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesGenerator:
    """A named, pure rule n -> skein value whose tail is being studied."""

    name: str
    params: dict
    eval: Callable[[int], SkeinValue]

    def normalized(self, n: int) -> QSeries:
        return normalize(self.eval(n))


@dataclass(frozen=True)
class StabilizationReport:
    generator: str
    params: dict
    n_max: int
    verdicts: tuple[bool, ...]
    tail: QSeries

    @property
    def all_stable(self) -> bool:
        return all(self.verdicts)

    def to_json_obj(self) -> dict:
        return {
            "generator": self.generator,
            "params": dict(self.params),
            "n_max": self.n_max,
            "verdicts": list(self.verdicts),
            "tail": self.tail.to_json_obj(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def stabilization_report(
    g: SeriesGenerator, n_max: int, agreement_offset: int = 0
) -> StabilizationReport:
    """Check P_n = P_{n+1} on the first n (+offset) coefficients for n <= n_max.

    The tail field is the normalized order-n_max prefix of P_{n_max}.  The
    offset 0 is the always-valid reading of the stabilization criterion; 1
    asserts the stronger (n+1)-coefficient agreement of torus-knot chains.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    values = [g.normalized(n) for n in range(1, n_max + 2)]
    verdicts = []
    for n in range(1, n_max + 1):
        verdicts.append(
            agree_to_order(values[n - 1], values[n], n + agreement_offset)
        )
    tail = values[n_max - 1].with_order(n_max)
    return StabilizationReport(
        generator=g.name,
        params=dict(g.params),
        n_max=n_max,
        verdicts=tuple(verdicts),
        tail=tail,
    )


# ---------------------------------------------------------------------------
# Tail products
# ---------------------------------------------------------------------------


def tail_product_1(t1: QSeries, t2: QSeries, order: int) -> QSeries:
    """Tail of the theta-gluing of two graphs: T1 * T2 / (q^2; q)_inf."""
    prod = series_mul(t1.with_order(order), t2.with_order(order))
    return series_div(prod, poch_inf(2, order), order=order)


def tail_product_23(t1: QSeries, t2: QSeries, order: int) -> QSeries:
    """Tail of the edge-gluing (connect sum): (1 - q) * T1 * T2."""
    one_minus_q = QSeries(0, [1, -1], exact=True)
    prod = series_mul(t1.with_order(order), t2.with_order(order))
    return series_mul(prod, one_minus_q.with_order(order)).with_order(order)


# ---------------------------------------------------------------------------
# Named graph families with known tails
# ---------------------------------------------------------------------------


def graph_family_tail(family: str, params: dict, order: int) -> QSeries:
    """The stated tail of a named graph family, truncated to the order.

    Families:
      g_m               wheel of m triangles: Lambda(q)^m (q;q)_inf
      g_kl              Psi(q^(2k+1), q) * f(-q^(2l+2), q); pass
                        sign_fixed=1 for the f(-q^(2l+2), -q) reading
      inadequate_chain  (q^2;q)_inf (q;q)_inf^m
      theta             (q^2;q)_inf
      tet2n             Lambda(q) (q^2;q)_inf
      chain_even        delegated to chain_tail("even", k)
      chain_odd         delegated to chain_tail("odd", k)
    """
    from fractions import Fraction as F

    from .qidentities import MonomialArg, lambda_series, psi_general, theta_general
    from .skein_formulas import chain_tail

    if family == "g_m":
        m = int(params["m"])
        if m < 0:
            raise DomainError("g_m needs m >= 0")
        out = poch_inf(1, order)
        lam = lambda_series(order)
        for _ in range(m):
            out = series_mul(out, lam)
        return out.with_order(order)
    if family == "g_kl":
        k = int(params["k"])
        l = int(params.get("l", 0))
        if k < 1 or l < 0:
            raise DomainError("g_kl needs k >= 1 and l >= 0")
        psi = psi_general(MonomialArg(1, F(2 * k + 1)), MonomialArg(1, F(1)), order)
        b_sign = -1 if int(params.get("sign_fixed", 0)) else 1
        f = theta_general(
            MonomialArg(-1, F(2 * l + 2)), MonomialArg(b_sign, F(1)), order
        )
        return series_mul(psi, f).with_order(order)
    if family == "inadequate_chain":
        m = int(params["m"])
        if m < 0:
            raise DomainError("inadequate_chain needs m >= 0")
        out = poch_inf(2, order)
        pp = poch_inf(1, order)
        for _ in range(m):
            out = series_mul(out, pp)
        return out.with_order(order)
    if family == "theta":
        return poch_inf(2, order)
    if family == "tet2n":
        from .qidentities import lambda_series as lam_fn

        return series_mul(lam_fn(order), poch_inf(2, order)).with_order(order)
    if family == "chain_even":
        return chain_tail("even", int(params["k"]), order)
    if family == "chain_odd":
        return chain_tail("odd", int(params["k"]), order)
    raise DomainError(f"unknown graph family {family!r}")


# ---------------------------------------------------------------------------
# Generator registry
# ---------------------------------------------------------------------------


def torus_jones_generator(f: int) -> SeriesGenerator:
    """n -> normalized colored Jones of the (2, f) torus link."""
    from .skein_formulas import colored_jones_torus

    return SeriesGenerator(
        name="torus_jones",
        params={"f": f},
        eval=lambda n: colored_jones_torus(f, n),
    )


def theta_2n_generator() -> SeriesGenerator:
    from .skein_formulas import theta_2n

    def ev(n: int):
        v = theta_2n(n)
        return fraction_to_q_series(v, max(2 * n + 4, 8))

    return SeriesGenerator(name="theta_2n", params={}, eval=ev)


GENERATOR_REGISTRY = {
    "torus_jones": lambda p: torus_jones_generator(int(p["f"])),
    "theta_2n": lambda p: theta_2n_generator(),
}


def named_generator(name: str, params: dict) -> SeriesGenerator:
    try:
        fn = GENERATOR_REGISTRY[name]
    except KeyError:
        raise DomainError(f"unknown generator {name!r}") from None
    return fn(params)
