"""Exact arithmetic core: Laurent polynomials in v, their fractions, and
truncated q-power series.

Everything downstream computes in the single variable v with

    A = v,   q = v**4,

so that quantities like q**(1/2) (v**2) or q**((n*n - n)/4) (v**(n*n - n))
always have integer v-exponents and no fractional powers ever appear.
Coefficients are arbitrary-precision rationals; there is no floating point
anywhere in this package.

Three value types live here:

* ``VLaurent``    -- a sparse, exact Laurent polynomial in v.
* ``VFraction``   -- an exact ratio of two VLaurent values (skein evaluations
                     of closed networks with projectors are rational
                     functions of A, not polynomials).
* ``QSeries``     -- a truncated formal power series in q with an integer
                     shift; the value type of tails and q-identities.

The quantum/number-theoretic primitives (quantum integers, Delta_n,
quantum factorials, q-Pochhammer symbols, q-binomials) are built on top.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .errors import (
    ConsistencyError,
    DivergentProductError,
    DomainError,
    PrecisionError,
    RepresentationError,
)

Rat = Union[int, Fraction]


# ---------------------------------------------------------------------------
# VLaurent
# ---------------------------------------------------------------------------


class VLaurent:
    """Sparse exact Laurent polynomial in v (A = v, q = v**4).

    Invariants: no stored coefficient is zero; the zero polynomial is the
    empty mapping.  Instances are immutable; all arithmetic is exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Rat] | None = None):
        clean: dict[int, Rat] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, int):
                    c = Fraction(c)
                    if c.denominator == 1:
                        c = c.numerator
                if c:
                    clean[int(e)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "VLaurent":
        return VLaurent()

    @staticmethod
    def one() -> "VLaurent":
        return VLaurent({0: 1})

    @staticmethod
    def monomial(coeff: Rat, v_exp: int) -> "VLaurent":
        return VLaurent({v_exp: coeff})

    @staticmethod
    def q_power(q_exp: int, coeff: Rat = 1) -> "VLaurent":
        """coeff * q**q_exp, i.e. coeff * v**(4*q_exp)."""
        return VLaurent({4 * q_exp: coeff})

    @staticmethod
    def from_q_dict(qterms: Mapping[int, Rat]) -> "VLaurent":
        return VLaurent({4 * e: c for e, c in qterms.items()})

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        if not self.terms:
            raise DomainError("zero polynomial has no minimal exponent")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise DomainError("zero polynomial has no maximal exponent")
        return max(self.terms)

    def coeff(self, v_exp: int) -> Fraction:
        return Fraction(self.terms.get(v_exp, 0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = VLaurent({0: other})
        if not isinstance(other, VLaurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "VLaurent") -> "VLaurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = VLaurent.__new__(VLaurent)
        res.terms = out
        return res

    def __neg__(self) -> "VLaurent":
        res = VLaurent.__new__(VLaurent)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other: "VLaurent") -> "VLaurent":
        return self + (-other)

    def __mul__(self, other: "VLaurent | int | Fraction") -> "VLaurent":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[int, Rat] = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = VLaurent.__new__(VLaurent)
        res.terms = out
        return res

    __rmul__ = __mul__

    def scale(self, c: Rat) -> "VLaurent":
        if not isinstance(c, int):
            c = Fraction(c)
            if c.denominator == 1:
                c = c.numerator
        if not c:
            return VLaurent()
        res = VLaurent.__new__(VLaurent)
        res.terms = {}
        for e, k in self.terms.items():
            s = k * c
            if not isinstance(s, int) and s.denominator == 1:
                s = s.numerator
            res.terms[e] = s
        return res

    def shift(self, v_exp: int) -> "VLaurent":
        """Multiply by v**v_exp."""
        res = VLaurent.__new__(VLaurent)
        res.terms = {e + v_exp: c for e, c in self.terms.items()}
        return res

    def __pow__(self, n: int) -> "VLaurent":
        if n < 0:
            raise DomainError("negative powers need VFraction")
        out = VLaurent.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def mirror(self) -> "VLaurent":
        """Substitute v -> v**-1 (mirror image of a skein evaluation)."""
        return VLaurent({-e: c for e, c in self.terms.items()})

    # -- division ------------------------------------------------------------

    def divmod_by(self, other: "VLaurent") -> tuple["VLaurent", "VLaurent"]:
        """Long division; Laurent shifts are normalized away first."""
        if other.is_zero():
            raise DomainError("division by zero polynomial")
        if self.is_zero():
            return VLaurent(), VLaurent()
        # Shift both to ordinary polynomials with valuation 0.
        sa, sb = self.min_exp(), other.min_exp()
        num = {e - sa: c for e, c in self.terms.items()}
        den = {e - sb: c for e, c in other.terms.items()}
        dden = max(den)
        lead = den[dden]
        quot: dict[int, Fraction] = {}
        rem = dict(num)
        while rem:
            drem = max(rem)
            if drem < dden:
                break
            f = rem[drem] / lead
            quot[drem - dden] = f
            for e, c in den.items():
                k = e + drem - dden
                s = rem.get(k, Fraction(0)) - f * c
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        q = VLaurent(quot).shift(sa - sb)
        r = VLaurent(rem).shift(sa)
        return q, r

    def div_exact(self, other: "VLaurent") -> "VLaurent":
        """Exact division; a nonzero remainder raises ConsistencyError."""
        q, r = self.divmod_by(other)
        if not r.is_zero():
            raise ConsistencyError("expected exact polynomial division")
        return q

    # -- q-series view -------------------------------------------------------

    def q_support_ok(self) -> bool:
        """True when all relative exponents are divisible by 4."""
        if not self.terms:
            return True
        e0 = self.min_exp()
        return all((e - e0) % 4 == 0 for e in self.terms)

    # -- formatting ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"VLaurent({self.format()})"

    def format(self, var: str = "v") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                pw = var if e == 1 else f"{var}^{e}"
                body = pw if c == 1 else f"{c}*{pw}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> dict:
        return {
            "variable": "v",
            "terms": [
                [e, self.terms[e].numerator, self.terms[e].denominator]
                for e in sorted(self.terms)
            ],
        }

    @staticmethod
    def from_json_obj(obj: Mapping) -> "VLaurent":
        return VLaurent({e: Fraction(n, d) for e, n, d in obj["terms"]})


V_A = VLaurent.monomial(1, 1)
V_LOOP = VLaurent({2: -1, -2: -1})  # delta = -A**2 - A**-2
_ONE_TERMS_DEN = VLaurent.one()


# ---------------------------------------------------------------------------
# VFraction
# ---------------------------------------------------------------------------


def _primitive_int_poly(p: VLaurent) -> list[int]:
    """Dense primitive integer coefficient list, shift and content stripped."""
    import math

    lo = p.min_exp()
    lcm = 1
    for c in p.terms.values():
        d = c.denominator
        lcm = lcm * d // math.gcd(lcm, d)
    out = [0] * (p.max_exp() - lo + 1)
    for e, c in p.terms.items():
        out[e - lo] = int(c * lcm)
    content = 0
    for c in out:
        content = math.gcd(content, c)
    if content > 1:
        out = [c // content for c in out]
    return out


def _strip_valuation_and_content(r: list[int]) -> list[int]:
    import math

    lo = 0
    while lo < len(r) and r[lo] == 0:
        lo += 1
    hi = len(r)
    while hi > lo and r[hi - 1] == 0:
        hi -= 1
    r = r[lo:hi]
    content = 0
    for c in r:
        content = math.gcd(content, c)
    if content > 1:
        r = [c // content for c in r]
    return r


_gcd_cache: dict[tuple, VLaurent] = {}


def _poly_gcd(a: VLaurent, b: VLaurent) -> VLaurent:
    """Monic gcd in Q[v] of two Laurent polynomials (shifts ignored).

    Computed by a primitive pseudo-remainder sequence over the integers;
    Fraction arithmetic inside a Euclidean loop is ruinously slow.
    """
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    key = (frozenset(a.terms.items()), frozenset(b.terms.items()))
    hit = _gcd_cache.get(key)
    if hit is not None:
        return hit
    x = _primitive_int_poly(a)
    y = _primitive_int_poly(b)
    if len(y) > len(x):
        x, y = y, x
    while y:
        if len(y) == 1:  # a nonzero constant: the polynomials are coprime
            x = [1]
            break
        r = _pseudo_mod(x, y)
        x, y = y, _strip_valuation_and_content(r)
    lead = x[-1]
    result = VLaurent({e: Fraction(c, lead) for e, c in enumerate(x)})
    if len(_gcd_cache) > 200_000:
        _gcd_cache.clear()
    _gcd_cache[key] = result
    return result


def _pseudo_mod(u: list[int], v: list[int]) -> list[int]:
    """Pseudo-remainder of u by v over the integers (v nonzero)."""
    r = list(u)
    dv = len(v) - 1
    lv = v[-1]
    while len(r) - 1 >= dv:
        c = r[-1]
        if c == 0:
            r.pop()
            continue
        if lv in (1, -1):
            f = c * lv
        else:
            r = [lv * t for t in r]
            f = c
        off = len(r) - 1 - dv
        for j in range(dv + 1):
            r[off + j] -= f * v[j]
        while r and r[-1] == 0:
            r.pop()
    return r


class VFraction:
    """Exact ratio of two VLaurent polynomials.

    Small fractions are gcd-reduced to a canonical form (this keeps the
    Jones-Wenzl coefficients compact through the recursion); large ones are
    left unreduced because the Euclidean gcd would dominate the runtime.
    Equality always goes through cross-multiplication, so reduction is a
    performance matter, never a correctness one.
    """

    __slots__ = ("num", "den")

    _REDUCE_SPAN = 400  # max v-exponent span for automatic gcd reduction

    def __init__(
        self, num: VLaurent, den: VLaurent | None = None, *, reduce: bool | None = None
    ):
        den = VLaurent.one() if den is None else den
        if den.is_zero():
            raise DomainError("zero denominator")
        if num.is_zero():
            self.num = VLaurent()
            self.den = VLaurent.one()
            return
        if reduce is None:
            span = max(
                num.max_exp() - num.min_exp(), den.max_exp() - den.min_exp()
            )
            reduce = span <= self._REDUCE_SPAN and not den == VLaurent.one()
        if reduce:
            g = _poly_gcd(num, den)
            if g.terms != {0: 1}:
                num = num.div_exact(g)
                den = den.div_exact(g)
        # Move the denominator's v-shift and scale into the numerator.
        s = den.min_exp()
        den = den.shift(-s)
        num = num.shift(-s)
        lead = den.terms[den.max_exp()]
        # Rescale so den has integer content-1 coefficients, positive lead.
        denoms = [c.denominator for c in den.terms.values()]
        import math

        lcm = 1
        for d in denoms:
            lcm = lcm * d // math.gcd(lcm, d)
        den = den.scale(lcm)
        num = num.scale(lcm)
        g = 0
        for c in den.terms.values():
            g = math.gcd(g, abs(c.numerator))
        if g > 1:
            den = den.scale(Fraction(1, g))
            num = num.scale(Fraction(1, g))
        if den.terms[den.max_exp()] < 0:
            den = -den
            num = -num
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_poly(p: VLaurent) -> "VFraction":
        f = VFraction.__new__(VFraction)
        f.num = p
        f.den = VLaurent.one()
        return f

    @staticmethod
    def zero() -> "VFraction":
        return VFraction.from_poly(VLaurent())

    @staticmethod
    def one() -> "VFraction":
        return VFraction.from_poly(VLaurent.one())

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == VLaurent.one()

    def to_vlaurent(self) -> VLaurent:
        if self.den == VLaurent.one():
            return self.num
        q, r = self.num.divmod_by(self.den)
        if not r.is_zero():
            raise ConsistencyError("value is not a Laurent polynomial")
        return q

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VLaurent):
            other = VFraction.from_poly(other)
        if isinstance(other, int):
            other = VFraction.from_poly(VLaurent({0: other}))
        if not isinstance(other, VFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x: "VFraction | VLaurent | int | Fraction") -> "VFraction":
        if isinstance(x, VFraction):
            return x
        if isinstance(x, VLaurent):
            return VFraction.from_poly(x)
        return VFraction.from_poly(VLaurent({0: x}))

    def __add__(self, other) -> "VFraction":
        o = self._coerce(other)
        if self.den == o.den:
            return VFraction(self.num + o.num, self.den)
        return VFraction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "VFraction":
        f = VFraction.__new__(VFraction)
        f.num = -self.num
        f.den = self.den
        return f

    def __sub__(self, other) -> "VFraction":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "VFraction":
        o = self._coerce(other)
        if self.den == _ONE_TERMS_DEN and o.den == _ONE_TERMS_DEN:
            return VFraction.from_poly(self.num * o.num)
        return VFraction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "VFraction":
        o = self._coerce(other)
        if o.is_zero():
            raise DomainError("division by zero")
        return VFraction(self.num * o.den, self.den * o.num)

    def __pow__(self, n: int) -> "VFraction":
        if n < 0:
            return VFraction(self.den, self.num) ** (-n)
        return VFraction(self.num**n, self.den**n, reduce=False)

    def __repr__(self) -> str:
        if self.is_poly():
            return f"VFraction({self.num.format()})"
        return f"VFraction(({self.num.format()}) / ({self.den.format()}))"


# ---------------------------------------------------------------------------
# QSeries
# ---------------------------------------------------------------------------


class QSeries:
    """Truncated formal power series in q with rational coefficients.

    ``coeffs[j]`` is the coefficient of q**(shift + j).  ``order`` is the
    number of retained coefficients.  A series built from an exact Laurent
    polynomial is flagged ``exact``: all later coefficients are genuinely
    zero, so it behaves as if its order were infinite.

    ``v_shift`` records a leftover v-exponent residue (mod 4) when a
    v-Laurent value is only a q-series up to a fractional power of q;
    comparison operations refuse such series.
    """

    __slots__ = ("shift", "coeffs", "exact", "v_shift")

    def __init__(
        self,
        shift: int,
        coeffs: Sequence[Rat],
        *,
        exact: bool = False,
        v_shift: int = 0,
    ):
        cs = [Fraction(c) for c in coeffs]
        # Leading zeros carry no information: absorb them into the shift.
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        if k == len(cs):
            if exact:
                shift, cs = 0, []
            # a truncated all-zero series keeps its length as precision
        elif k:
            shift += k
            cs = cs[k:]
        if exact:
            while cs and cs[-1] == 0:
                cs.pop()
        self.shift = shift
        self.coeffs = tuple(cs)
        self.exact = exact
        self.v_shift = v_shift % 4

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(order: int = 0) -> "QSeries":
        return QSeries(0, [Fraction(0)] * order, exact=(order == 0))

    @staticmethod
    def one(order: int | None = None) -> "QSeries":
        if order is None:
            return QSeries(0, [1], exact=True)
        return QSeries(0, [1] + [0] * (order - 1)).with_order(order)

    # -- inspection ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def order_or_inf(self) -> float:
        return float("inf") if self.exact else len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coeff(self, q_exp: int) -> Fraction:
        """Coefficient of q**q_exp; raises PrecisionError beyond the order."""
        j = q_exp - self.shift
        if j < 0:
            return Fraction(0)
        if j >= len(self.coeffs):
            if self.exact:
                return Fraction(0)
            raise PrecisionError(f"coefficient of q^{q_exp} not computed")
        return self.coeffs[j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.shift == other.shift
            and self.coeffs == other.coeffs
            and self.v_shift == other.v_shift
        )

    def __hash__(self) -> int:
        return hash((self.shift, self.coeffs, self.v_shift))

    # -- order management ----------------------------------------------------

    def with_order(self, order: int) -> "QSeries":
        """Truncate (or, for exact series, zero-pad) to the given order."""
        if order < 0:
            raise DomainError("order must be non-negative")
        if order <= len(self.coeffs):
            s = QSeries(self.shift, self.coeffs[:order], v_shift=self.v_shift)
            return s
        if not self.exact:
            raise PrecisionError(
                f"series known to order {len(self.coeffs)}, requested {order}"
            )
        cs = list(self.coeffs) + [Fraction(0)] * (order - len(self.coeffs))
        return QSeries(self.shift, cs, v_shift=self.v_shift)

    def _aligned(self, other: "QSeries") -> tuple[int, int, "QSeries", "QSeries"]:
        if self.v_shift != other.v_shift:
            raise RepresentationError("incompatible fractional q-shifts")
        s = min(self.shift, other.shift)
        end = min(
            self.shift + self.order_or_inf(), other.shift + other.order_or_inf()
        )
        if end == float("inf"):
            end = max(
                self.shift + len(self.coeffs), other.shift + len(other.coeffs), s
            )
        return s, int(end), self, other

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        s, end, a, b = self._aligned(other)
        n = max(end - s, 0)
        cs = [Fraction(0)] * n
        for src in (a, b):
            for j, c in enumerate(src.coeffs):
                k = src.shift + j - s
                if 0 <= k < n:
                    cs[k] += c
        return QSeries(s, cs, exact=a.exact and b.exact, v_shift=self.v_shift)

    def __neg__(self) -> "QSeries":
        return QSeries(
            self.shift,
            [-c for c in self.coeffs],
            exact=self.exact,
            v_shift=self.v_shift,
        )

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other: "QSeries | int | Fraction") -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries(
                self.shift,
                [c * other for c in self.coeffs],
                exact=self.exact,
                v_shift=self.v_shift,
            )
        return series_mul(self, other)

    __rmul__ = __mul__

    def q_shifted(self, k: int) -> "QSeries":
        return QSeries(
            self.shift + k, self.coeffs, exact=self.exact, v_shift=self.v_shift
        )

    # -- formatting ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"QSeries({self.format()})"

    def format(self, max_terms: int = 12) -> str:
        parts = []
        shown = 0
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.shift + j
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if e == 0:
                body = str(c)
            else:
                pw = "q" if e == 1 else f"q^{e}"
                body = pw if c == 1 else f"{c}*{pw}"
            parts.append((sign, body))
            shown += 1
            if shown >= max_terms:
                parts.append(("+", "..."))
                break
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json_obj(self) -> dict:
        return {
            "variable": "q",
            "shift": self.shift,
            "order": self.order,
            "coefficients": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @staticmethod
    def from_json_obj(obj: Mapping) -> "QSeries":
        return QSeries(obj["shift"], [Fraction(n, d) for n, d in obj["coefficients"]])


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product; the result order is min of the operand orders."""
    if a.v_shift or b.v_shift:
        if a.v_shift and b.v_shift:
            raise RepresentationError("cannot multiply two fractionally shifted series")
    n: float = min(a.order_or_inf(), b.order_or_inf())
    if n == float("inf"):
        n = len(a.coeffs) + len(b.coeffs) - 1 if a.coeffs and b.coeffs else 0
    n = int(n)
    cs = [Fraction(0)] * n
    for i, ca in enumerate(a.coeffs):
        if ca == 0 or i >= n:
            continue
        for j, cb in enumerate(b.coeffs):
            k = i + j
            if k >= n:
                break
            cs[k] += ca * cb
    return QSeries(
        a.shift + b.shift,
        cs,
        exact=a.exact and b.exact,
        v_shift=(a.v_shift + b.v_shift) % 4,
    )


def series_div(a: QSeries, b: QSeries, order: int | None = None) -> QSeries:
    """Long division a / b, exact to the common order.

    ``b`` must be nonzero.  When both operands are exact polynomials the
    quotient is an infinite series, so an explicit ``order`` is required.
    """
    if b.is_zero():
        raise DomainError("division by zero series")
    n: float = min(a.order_or_inf(), b.order_or_inf())
    if order is not None:
        n = min(n, order)
    if n == float("inf"):
        raise DomainError("division of exact polynomials needs an explicit order")
    n = int(n)
    # b.coeffs[0] != 0 by the leading-zero normalization of nonzero series.
    binv0 = Fraction(1) / b.coeffs[0]
    ca = list(a.with_order(n).coeffs) if a.order_or_inf() >= n else list(a.coeffs[:n])
    ca += [Fraction(0)] * (n - len(ca))
    cb = list(b.coeffs[:n]) + [Fraction(0)] * max(0, n - len(b.coeffs))
    out = [Fraction(0)] * n
    for k in range(n):
        acc = ca[k]
        for j in range(1, k + 1):
            if cb[j]:
                acc -= cb[j] * out[k - j]
        out[k] = acc * binv0
    return QSeries(
        a.shift - b.shift,
        out,
        v_shift=(a.v_shift - b.v_shift) % 4,
    )


def to_q_series(p: VLaurent, order: int | None = None) -> QSeries:
    """View an exact v-Laurent polynomial as a q-series.

    The minimal v-exponent e0 is factored out; the remaining exponents must
    all be divisible by 4 or a RepresentationError is raised.  When e0 is
    not itself divisible by 4, the residue is kept as ``v_shift`` metadata
    and comparison operations will refuse the series.
    """
    if p.is_zero():
        raise DomainError("cannot view the zero polynomial as a pointed q-series")
    e0 = p.min_exp()
    if not p.q_support_ok():
        raise RepresentationError("relative v-exponents not divisible by 4")
    coeffs_by_q: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        coeffs_by_q[(e - e0) // 4] = c
    top = max(coeffs_by_q)
    cs = [coeffs_by_q.get(j, Fraction(0)) for j in range(top + 1)]
    base_shift, residue = divmod(e0, 4)
    s = QSeries(base_shift, cs, exact=True, v_shift=residue)
    if order is not None:
        s = s.with_order(order)
    return s


def fraction_to_q_series(f: VFraction, order: int) -> QSeries:
    """Expand an exact rational function of v as a q-series to given order."""
    if f.is_zero():
        return QSeries.zero(order)
    num = to_q_series(f.num)
    den = to_q_series(f.den)
    return series_div(num, den, order=order)


def to_x_series(p: VLaurent) -> QSeries:
    """View a polynomial with even v-support as a series in x = q**(1/2) = v**2.

    Every quantum integer, Delta, and q-power has even v-exponents, so the
    skein formulas all live in Z[x, x**-1]; this is the natural domain for
    exact summation of terms whose q-shifts differ by half-integers.
    """
    if p.is_zero():
        raise DomainError("cannot view zero as a pointed series")
    if any(e % 2 for e in p.terms):
        raise RepresentationError("v-support is not even; not a series in q^(1/2)")
    e0 = p.min_exp()
    by_x: dict[int, Fraction] = {(e - e0) // 2: c for e, c in p.terms.items()}
    cs = [by_x.get(j, Fraction(0)) for j in range(max(by_x) + 1)]
    return QSeries(e0 // 2, cs, exact=True)


def fraction_to_x_series(f: VFraction, order: int) -> QSeries:
    """Expand an exact rational function of v as a series in x = q**(1/2)."""
    if f.is_zero():
        return QSeries.zero(order)
    return series_div(to_x_series(f.num), to_x_series(f.den), order=order)


# ---------------------------------------------------------------------------
# Quantum / number-theoretic primitives
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def quantum_int(n: int) -> VLaurent:
    """Symmetric quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)).

    [0] = 0 and [n] = v^(2(n-1)) + v^(2(n-3)) + ... + v^(-2(n-1)); all
    v-exponents are even.
    """
    if n < 0:
        raise DomainError("quantum_int needs n >= 0")
    return VLaurent({2 * (n - 1 - 2 * j): 1 for j in range(n)})


def delta_n(n: int) -> VLaurent:
    """Delta_n = (-1)^n [n+1], the loop value of the closed n-colored projector."""
    if n < 0:
        raise DomainError("delta_n needs n >= 0")
    v = quantum_int(n + 1)
    return -v if n % 2 else v


@lru_cache(maxsize=None)
def quantum_fact(n: int) -> VLaurent:
    """[n]! = [1][2]...[n]; the empty product is 1."""
    if n < 0:
        raise DomainError("quantum_fact needs n >= 0")
    out = VLaurent.one()
    for i in range(1, n + 1):
        out = out * quantum_int(i)
    return out


@lru_cache(maxsize=None)
def poch_finite(sign: int, c: int, n: int) -> VLaurent:
    """Finite q-Pochhammer (sign*q^c; q)_n = prod_{j<n} (1 - sign*q^(c+j))."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if n < 0:
        raise DomainError("poch_finite needs n >= 0")
    out = VLaurent.one()
    for j in range(n):
        out = out * VLaurent({0: 1, 4 * (c + j): -sign})
    return out


def poch_inf(c: int, order: int) -> QSeries:
    """(q^c; q)_infinity truncated to the given number of coefficients.

    Exactly ``order`` factors are multiplied: once c + j >= order the factor
    1 - q^(c+j) is 1 modulo q^order, so the truncation is provably exact.
    """
    if c <= 0:
        raise DivergentProductError("(q^c; q)_inf needs c >= 1")
    if order < 0:
        raise DomainError("order must be non-negative")
    out = QSeries.one(order) if order else QSeries.zero(0)
    for j in range(order):
        if c + j >= order:
            break
        f = [Fraction(0)] * order
        f[0] = Fraction(1)
        f[c + j] = Fraction(-1)
        out = series_mul(out, QSeries(0, f))
    return out


def poch_inf_step(c: int, step: int, order: int) -> QSeries:
    """(q^c; q^step)_infinity truncated: prod_j (1 - q^(c + j*step))."""
    if c <= 0 or step <= 0:
        raise DivergentProductError("step product needs c >= 1 and step >= 1")
    out = QSeries.one(order) if order else QSeries.zero(0)
    j = 0
    while c + j * step < order:
        f = [Fraction(0)] * order
        f[0] = Fraction(1)
        f[c + j * step] = Fraction(-1)
        out = series_mul(out, QSeries(0, f))
        j += 1
    return out


def qbinom(n: int, i: int) -> VLaurent:
    """Gaussian binomial (q;q)_n / ((q;q)_i (q;q)_(n-i)) as an exact polynomial."""
    if not (0 <= i <= n):
        raise DomainError(f"qbinom needs 0 <= i <= n, got ({n}, {i})")
    num = poch_finite(1, 1, n)
    den = poch_finite(1, 1, i) * poch_finite(1, 1, n - i)
    return num.div_exact(den)
