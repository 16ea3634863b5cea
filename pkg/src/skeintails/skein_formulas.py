"""Closed-form skein evaluations.

This module houses the exact formulas that the brute-force oracle
cross-checks: admissibility of color triples, the bubble-expansion
coefficients

    ceil[m n; k l]_i = (-1)^(i+l) q^(i(i-l)/2)
        * prod_{j<l-i} [k-j] * prod_{s<i} [n-s][m-s]
          / prod_{t<l} [n+k-t][m+k-t]
        * qbinom(l, i) * prod_{j<l-i} [m+n+k-i-j+1],

the theta and all-equal tetrahedron evaluations, the P(n,i) chain
coefficients, the normalized colored Jones polynomial of (2, f) torus
links, and the multi-sum tails of the bubble chains.

Values here are exact rational functions of v (VFraction); genuinely
polynomial results (like the normalized colored Jones) are reduced to
VLaurent with a remainder assertion, never by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .qcore import (
    QSeries,
    VFraction,
    VLaurent,
    delta_n,
    poch_finite,
    poch_inf,
    qbinom,
    quantum_fact,
    quantum_int,
    series_mul,
)


# ---------------------------------------------------------------------------
# Admissibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissibleTriple:
    """An admissible color triple with its internal colors x, y, z."""

    a: int
    b: int
    c: int
    x: int
    y: int
    z: int


def admissible(a: int, b: int, c: int) -> AdmissibleTriple | None:
    """The triple (a, b, c) with internal colors, or None if inadmissible.

    Admissible means a + b + c is even and a + b >= c >= |a - b|; then
    x = (a+b-c)/2, y = (a+c-b)/2, z = (b+c-a)/2 are the internal colors.
    """
    if min(a, b, c) < 0:
        return None
    if (a + b + c) % 2:
        return None
    x2, y2, z2 = a + b - c, a + c - b, b + c - a
    if x2 < 0 or y2 < 0 or z2 < 0:
        return None
    return AdmissibleTriple(a, b, c, x2 // 2, y2 // 2, z2 // 2)


# ---------------------------------------------------------------------------
# Bubble expansion coefficients
# ---------------------------------------------------------------------------


def bubble_coeff(m: int, n: int, k: int, l: int, i: int) -> VFraction:
    """The bubble expansion coefficient ceil[m n; k l]_i.

    Stated for k >= l >= 1 only; no mirror symmetry is assumed for k < l.
    """
    if k < l or l < 1:
        raise DomainError("bubble_coeff is stated only for k >= l >= 1")
    if min(m, n) < 0:
        raise DomainError("colors must be non-negative")
    if not (0 <= i <= min(m, n, l)):
        raise DomainError(f"index i={i} outside 0..min(m, n, l)")
    sign = -1 if (i + l) % 2 else 1
    # q^(i(i-l)/2) has v-exponent 2 i (i - l).
    out = VFraction.from_poly(VLaurent.monomial(sign, 2 * i * (i - l)))
    num = VLaurent.one()
    for j in range(l - i):
        num = num * quantum_int(k - j)
    for s in range(i):
        num = num * quantum_int(n - s) * quantum_int(m - s)
    den = VLaurent.one()
    for t in range(l):
        den = den * quantum_int(n + k - t) * quantum_int(m + k - t)
    out = out * VFraction(num, den)
    out = out * VFraction.from_poly(qbinom(l, i))
    tail = VLaurent.one()
    for j in range(l - i):
        tail = tail * quantum_int(m + n + k - i - j + 1)
    return out * VFraction.from_poly(tail)


def theta_2n(n: int) -> VFraction:
    """Theta(2n, 2n, 2n) = ceil[n n; n n]_0 * Delta_2n; Theta(0,0,0) = 1."""
    if n < 0:
        raise DomainError("theta_2n needs n >= 0")
    if n == 0:
        return VFraction.one()
    return bubble_coeff(n, n, n, n, 0) * VFraction.from_poly(delta_n(2 * n))


def tet_2n(n: int) -> VFraction:
    """The tetrahedron with all six edges colored 2n.

    Tet = ([n]!)^12 / ([2n]!)^6 * sum_{i=3n}^{4n}
              (-1)^i [i+1]! / (([4n-i]!)^3 ([i-3n]!)^4).
    """
    if n < 0:
        raise DomainError("tet_2n needs n >= 0")
    acc = VFraction.zero()
    for i in range(3 * n, 4 * n + 1):
        num = quantum_fact(i + 1)
        if i % 2:
            num = -num
        den = quantum_fact(4 * n - i) ** 3 * quantum_fact(i - 3 * n) ** 4
        acc = acc + VFraction(num, den)
    pref = VFraction(quantum_fact(n) ** 12, quantum_fact(2 * n) ** 6)
    return pref * acc


def p_coeff(n: int, i: int) -> VFraction:
    """P(n, i) = ceil[n n; n n]_i * Delta_2n / Delta_{n+i}."""
    if n < 1:
        raise DomainError("p_coeff needs n >= 1")
    if not (0 <= i <= n):
        raise DomainError("p_coeff needs 0 <= i <= n")
    ratio = VFraction(delta_n(2 * n), delta_n(n + i))
    return bubble_coeff(n, n, n, n, i) * ratio


def nn_i_coeff(n: int, i: int, j: int) -> VFraction:
    """Closed form for ceil[n i; n n]_j.

    Equals (-1)^(j+n) q^(j^2 + j/2 - n/2)
        (q;q)_i^2 (q;q)_n^4 (q;q)_{2n+i-j+1}
        / ((q;q)_{i-j} (q;q)_j^2 (q;q)_{2n} (q;q)_{n+i} (q;q)_{n+i+1}
           (q;q)_{n-j}^2)

    and agrees with bubble_coeff(n, i, n, n, j) on its whole domain.
    """
    if j > i:
        raise DomainError("nn_i_coeff needs j <= i ((q;q)_{i-j} undefined)")
    if j < 0 or i < 0 or n < 0 or j > n or i > n:
        raise DomainError("nn_i_coeff needs 0 <= j <= i <= n")
    sign = -1 if (j + n) % 2 else 1
    # v-exponent of q^(j^2 + j/2 - n/2) is 4 j^2 + 2 j - 2 n.
    out = VFraction.from_poly(VLaurent.monomial(sign, 4 * j * j + 2 * j - 2 * n))
    pq = lambda t: poch_finite(1, 1, t)
    num = pq(i) ** 2 * pq(n) ** 4 * pq(2 * n + i - j + 1)
    den = (
        pq(i - j)
        * pq(j) ** 2
        * pq(2 * n)
        * pq(n + i)
        * pq(n + i + 1)
        * pq(n - j) ** 2
    )
    return out * VFraction(num, den)


# ---------------------------------------------------------------------------
# Torus knots
# ---------------------------------------------------------------------------


def colored_jones_torus(f: int, n: int) -> VLaurent:
    """Normalized colored Jones polynomial of the (2, f) torus link.

    J~_(n)/Delta_n = (1/Delta_n) sum_{i=0}^{n}
        (-1)^(f(n-i)) q^(f(2i + 2i^2 - 2n - n^2)/4) Delta_{2i}.

    The division by Delta_n is exact; a remainder raises ConsistencyError.
    The framing factor (a global power of +-A) is not fixed here; callers
    compare through normalization.
    """
    if f < 1:
        raise DomainError("colored_jones_torus needs f >= 1")
    if n < 0:
        raise DomainError("colored_jones_torus needs n >= 0")
    acc = VLaurent.zero()
    for i in range(n + 1):
        sign = -1 if (f * (n - i)) % 2 else 1
        mono = VLaurent.monomial(sign, f * (2 * i + 2 * i * i - 2 * n - n * n))
        acc = acc + mono * delta_n(2 * i)
    try:
        return acc.div_exact(delta_n(n))
    except ConsistencyError as exc:
        raise ConsistencyError("torus Jones sum not divisible by Delta_n") from exc


# ---------------------------------------------------------------------------
# Bubble chain tails
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainSpec:
    """A chain of bubbles, all strands one color, in the (n, n, 2n) frame.

    ``bubbles`` counts the bubbles (2k or 2k+1); ``color`` is 0 for the
    generic symbolic color n; ``outer`` records the framing of the chain.
    """

    bubbles: int
    color: int = 0
    outer: str = "n,n,2n"

    def __post_init__(self):
        if self.bubbles < 1:
            raise DomainError("a chain has at least one bubble")

    @property
    def parity(self) -> str:
        return "even" if self.bubbles % 2 == 0 else "odd"

    @property
    def k(self) -> int:
        return self.bubbles // 2 if self.parity == "even" else (self.bubbles - 1) // 2

    def tail(self, order: int) -> QSeries:
        """The chain's stable series (delegates to chain_tail).

        A single bubble is the 2-crossing torus chain, whose tail is the
        constant series 1 (the k >= 1 cases delegate to the multi-sums).
        """
        if self.bubbles == 1:
            return QSeries.one(order)
        return chain_tail(self.parity, self.k, order)


def chain_tail(parity: str, k: int, order: int) -> QSeries:
    """Tail series of the closed chain of bubbles around f(n).

    parity "even" is the chain with 2k bubbles:
        (q;q)_inf * sum_{l_1..l_{k-1}} q^(sum i_j(i_j+1)) / prod (q;q)_{l_j};
    parity "odd" is the chain with 2k+1 bubbles, the same sum over l_1..l_k
    with the last Pochhammer factor squared.  i_j is the suffix sum of the
    l's; an index l_j is included while l_j (l_j + 1) <= order, which is
    sound because the term degree dominates every l_j (l_j + 1).
    """
    from .qidentities import nested_sum_series

    if k < 1:
        raise DomainError("chain_tail needs k >= 1")
    if order < 0:
        raise DomainError("order must be non-negative")
    if parity == "even":
        body = nested_sum_series(k - 1, order, square_last=False)
    elif parity == "odd":
        body = nested_sum_series(k, order, square_last=True)
    else:
        raise DomainError("parity must be 'even' or 'odd'")
    return series_mul(poch_inf(1, order), body).with_order(order)
