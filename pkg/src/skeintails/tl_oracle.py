"""Brute-force Temperley-Lieb diagram algebra.

TL_n is modeled on 2n boundary points: 0..n-1 on the bottom row (left to
right) and n..2n-1 on the top row (left to right).  A ``Matching`` is a
fixed-point-free involution of these points that is realizable without
crossings inside the rectangle; there are Catalan(n) of them.
Multiplication stacks the second diagram on top of the first and replaces
every closed loop by the scalar delta = -A**2 - A**-2.

Jones-Wenzl projectors are built by Wenzl's recursion

    f(n) = f(n-1)x1 - (Delta_{n-2}/Delta_{n-1}) (f(n-1)x1) e_{n-1} (f(n-1)x1)

starting from f(1) = single strand, and memoized (the recursion reuses
f(n-1) heavily).  Everything here is an exact computation over VFraction
coefficients and serves as the independent oracle for the closed-form
formulas elsewhere in the package.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import CapacityError, DomainError
from .qcore import VFraction, VLaurent, delta_n


@dataclass(frozen=True)
class OracleConfig:
    """Size limits for the brute-force engine (Catalan/2^c blowup)."""

    max_box_color: int = 8
    max_crossings: int = 12
    max_frontier: int = 24


DEFAULT_CONFIG = OracleConfig()


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------


class Matching:
    """A crossingless perfect matching on the 2n boundary points of TL_n."""

    __slots__ = ("n", "pairs")

    def __init__(self, pairs: tuple[int, ...]):
        n2 = len(pairs)
        if n2 % 2:
            raise DomainError("matching needs an even number of points")
        self.n = n2 // 2
        self.pairs = pairs

    @staticmethod
    def from_pairs(n: int, pairlist) -> "Matching":
        pr = [-1] * (2 * n)
        for a, b in pairlist:
            pr[a], pr[b] = b, a
        if any(p < 0 for p in pr):
            raise DomainError("incomplete matching")
        return Matching(tuple(pr))

    @staticmethod
    def identity(n: int) -> "Matching":
        pr = [0] * (2 * n)
        for j in range(n):
            pr[j], pr[n + j] = n + j, j
        return Matching(tuple(pr))

    def partner(self, p: int) -> int:
        return self.pairs[p]

    def _cycle_pos(self, p: int) -> int:
        # Boundary cycle: bottom left-to-right, then top right-to-left.
        return p if p < self.n else 3 * self.n - 1 - p

    def is_planar(self) -> bool:
        n2 = 2 * self.n
        cyc = [0] * n2
        for p in range(n2):
            cyc[self._cycle_pos(p)] = self._cycle_pos(self.pairs[p])
        stack: list[int] = []
        for pos in range(n2):
            if stack and stack[-1] == pos:
                stack.pop()
            else:
                q = cyc[pos]
                if q < pos:
                    return False
                stack.append(q)
        return not stack

    def to_parens(self) -> str:
        """Balanced-parenthesis word over the boundary cycle (canonical)."""
        n2 = 2 * self.n
        out = []
        for pos in range(n2):
            p = pos if pos < self.n else 3 * self.n - 1 - pos
            out.append("(" if self._cycle_pos(self.pairs[p]) > pos else ")")
        return "".join(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __lt__(self, other: "Matching") -> bool:
        return self.to_parens() < other.to_parens()

    def __repr__(self) -> str:
        seen = set()
        arcs = []
        for p in range(2 * self.n):
            q = self.pairs[p]
            if p < q:
                arcs.append((p, q))
        return f"Matching({self.n}; {arcs})"


def enumerate_matchings(n: int) -> list[Matching]:
    """All crossingless matchings of TL_n, deterministically ordered."""
    n2 = 2 * n

    def rec(points: tuple[int, ...]):
        if not points:
            yield []
            return
        a = points[0]
        for idx in range(1, len(points), 2):
            b = points[idx]
            inside = points[1:idx]
            outside = points[idx + 1 :]
            for m1 in rec(inside):
                for m2 in rec(outside):
                    yield [(a, b)] + m1 + m2

    cycle = list(range(n)) + [3 * n - 1 - p for p in range(n, n2)]
    # cycle[i] is the point at cyclic position i
    pos_to_point = [0] * n2
    for p in range(n2):
        pos = p if p < n else 3 * n - 1 - p
        pos_to_point[pos] = p
    out = []
    for arcs in rec(tuple(range(n2))):
        pairs = [(pos_to_point[a], pos_to_point[b]) for a, b in arcs]
        out.append(Matching.from_pairs(n, pairs))
    out.sort()
    return out


def match_mul(a: Matching, b: Matching) -> tuple[Matching, int]:
    """Stack b on top of a; return (resulting matching, closed-loop count)."""
    if a.n != b.n:
        raise DomainError("strand-count mismatch")
    n = a.n
    # Composite points: bottom of a (0..n-1) and top of b (n..2n-1).
    # Interface: a's top point (n+j) is glued to b's bottom point j.
    def step(layer: str, p: int):
        # Returns (layer, point) after following one arc.
        m = a if layer == "a" else b
        return layer, m.pairs[p]

    result_pairs: dict[int, int] = {}
    visited_interface = set()

    def boundary_of(layer: str, p: int):
        if layer == "a" and p < n:
            return p
        if layer == "b" and p >= n:
            return p
        return None

    def walk(layer: str, start: int):
        lay, p = layer, start
        while True:
            lay, p = step(lay, p)
            bnd = boundary_of(lay, p)
            if bnd is not None:
                return bnd
            # Cross the interface.
            if lay == "a":
                visited_interface.add(p - n)
                lay, p = "b", p - n
            else:
                visited_interface.add(p)
                lay, p = "a", p + n

    for p in range(n):
        if p not in result_pairs:
            q = walk("a", p)
            result_pairs[p] = q
            result_pairs[q] = p
    for p in range(n, 2 * n):
        if p not in result_pairs:
            q = walk("b", p)
            result_pairs[p] = q
            result_pairs[q] = p

    loops = 0
    seen = set()
    for j in range(n):
        if j in visited_interface or j in seen:
            continue
        # Follow the closed cycle through interface point j.
        loops += 1
        lay, p = "b", j
        while True:
            lay, p = step(lay, p)
            if lay == "a":
                seen.add(p - n)
                lay, p = "b", p - n
            else:
                seen.add(p)
                lay, p = "a", p + n
            if p == j and lay == "b":
                break
    return Matching(tuple(result_pairs[p] for p in range(2 * n))), loops


# ---------------------------------------------------------------------------
# TL elements
# ---------------------------------------------------------------------------

_DELTA = VLaurent({2: -1, -2: -1})


class TLElement:
    """A VFraction-linear combination of crossingless matchings."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Matching, VFraction] | None = None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    @staticmethod
    def identity(n: int) -> "TLElement":
        return TLElement(n, {Matching.identity(n): VFraction.one()})

    @staticmethod
    def generator(n: int, i: int) -> "TLElement":
        """The cup-cap generator e_i (1 <= i <= n-1)."""
        if not (1 <= i <= n - 1):
            raise DomainError(f"e_{i} undefined in TL_{n}")
        pairs = {}
        for j in range(n):
            pairs[j] = n + j
        pairs[i - 1], pairs[i] = i, i - 1
        arcs = [(i - 1, i), (n + i - 1, n + i)]
        arcs += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
        return TLElement(n, {Matching.from_pairs(n, arcs): VFraction.one()})

    def __add__(self, other: "TLElement") -> "TLElement":
        if self.n != other.n:
            raise DomainError("strand-count mismatch")
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, VFraction.zero()) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return TLElement(self.n, out)

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + other.scale(VFraction.from_poly(VLaurent({0: -1})))

    def scale(self, c) -> "TLElement":
        c = VFraction._coerce(c)
        if c.is_zero():
            return TLElement(self.n)
        return TLElement(self.n, {m: k * c for m, k in self.terms.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        """Algebra product: other stacked on top of self."""
        if self.n != other.n:
            raise DomainError("strand-count mismatch")
        out: dict[Matching, VFraction] = {}
        delta = VFraction.from_poly(_DELTA)
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m, loops = match_mul(ma, mb)
                c = ca * cb
                if loops:
                    c = c * delta**loops
                s = out.get(m, VFraction.zero()) + c
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return TLElement(self.n, out)

    def tensor_strand(self) -> "TLElement":
        """Tensor with one identity strand on the right (TL_n -> TL_{n+1})."""
        n = self.n
        out = {}
        for m, c in self.terms.items():
            remap = lambda p: p if p < n else p + 1
            arcs = [
                (remap(p), remap(m.pairs[p]))
                for p in range(2 * n)
                if p < m.pairs[p]
            ]
            arcs.append((n, 2 * n + 1))
            out[Matching.from_pairs(n + 1, arcs)] = c
        return TLElement(n + 1, out)

    def tensor_with(self, other: "TLElement") -> "TLElement":
        """Side-by-side tensor product (self on the left)."""
        n1, n2 = self.n, other.n
        n = n1 + n2
        out: dict[Matching, VFraction] = {}

        def remap1(p: int) -> int:
            return p if p < n1 else p + n2

        def remap2(p: int) -> int:
            return n1 + p if p < n2 else n1 + n1 + p

        for m1, c1 in self.terms.items():
            arcs1 = [
                (remap1(p), remap1(m1.pairs[p]))
                for p in range(2 * n1)
                if p < m1.pairs[p]
            ]
            for m2, c2 in other.terms.items():
                arcs = arcs1 + [
                    (remap2(p), remap2(m2.pairs[p]))
                    for p in range(2 * n2)
                    if p < m2.pairs[p]
                ]
                key = Matching.from_pairs(n, arcs)
                c = c1 * c2
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
        return TLElement(n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        if self.n != other.n or set(self.terms) != set(other.terms):
            return False
        return all(self.terms[m] == other.terms[m] for m in self.terms)

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: kv[0])
        return f"TLElement(n={self.n}, {len(items)} diagrams)"

    # -- closures ------------------------------------------------------------

    def trace_close(self) -> VFraction:
        """Close bottom j to top n+j for all j; returns the skein value."""
        total = VFraction.zero()
        delta = VFraction.from_poly(_DELTA)
        for m, c in self.terms.items():
            loops = _count_closure_loops(m, list(range(self.n)))
            total = total + c * delta**loops
        return total

    def partial_close(self, m_strands: int) -> "TLElement":
        """Close the rightmost m_strands around (bottom j to top n+j).

        Returns an element of TL_{n - m_strands}.
        """
        n = self.n
        if not (0 <= m_strands <= n):
            raise DomainError("cannot close more strands than exist")
        keep = n - m_strands
        delta = VFraction.from_poly(_DELTA)
        out: dict[Matching, VFraction] = {}
        closed = list(range(keep, n))
        for m, c in self.terms.items():
            arcs, loops = _close_strands(m, closed)
            coeff = c * delta**loops if loops else c
            key = Matching.from_pairs(keep, arcs)
            s = out.get(key, VFraction.zero()) + coeff
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return TLElement(keep, out)


def _count_closure_loops(m: Matching, closed_strands: list[int]) -> int:
    arcs, loops = _close_strands(m, closed_strands)
    if arcs:
        raise DomainError("full closure expected")
    return loops


def _close_strands(m: Matching, closed: list[int]) -> tuple[list[tuple[int, int]], int]:
    """Glue bottom j to top n+j for j in ``closed``; relabel the rest.

    Returns (arcs among surviving points relabeled into TL_{keep}, loops).
    """
    n = m.n
    closed_set = set(closed)
    # Adjacency: matching arcs + closure arcs (bottom j -- top n+j).
    def closure_partner(p: int) -> int | None:
        if p < n and p in closed_set:
            return p + n
        if p >= n and (p - n) in closed_set:
            return p - n
        return None

    surviving = [p for p in range(n) if p not in closed_set] + [
        p for p in range(n, 2 * n) if (p - n) not in closed_set
    ]
    relabel = {}
    keep = n - len(closed)
    bot = [p for p in range(n) if p not in closed_set]
    top = [p for p in range(n, 2 * n) if (p - n) not in closed_set]
    for j, p in enumerate(bot):
        relabel[p] = j
    for j, p in enumerate(top):
        relabel[p] = keep + j
    arcs = []
    visited = set()
    for start in surviving:
        if start in visited:
            continue
        visited.add(start)
        p = m.pairs[start]
        while True:
            cp = closure_partner(p)
            if cp is None:
                break
            visited.add(p)
            visited.add(cp)
            p = m.pairs[cp]
        visited.add(p)
        arcs.append((relabel[start], relabel[p]))
    loops = 0
    seen = set()
    for start in range(2 * n):
        if start in seen or start in visited:
            continue
        # Closed cycle alternating matching arcs and closure arcs.
        loops += 1
        p = start
        while True:
            seen.add(p)
            q = m.pairs[p]
            seen.add(q)
            p = closure_partner(q)
            if p is None:
                raise DomainError("internal: broken closure walk")
            if p == start:
                break
    return arcs, loops


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors
# ---------------------------------------------------------------------------

_jw_cache: dict[int, TLElement] = {}
_jw_lock = threading.Lock()


def jones_wenzl(n: int, config: OracleConfig = DEFAULT_CONFIG) -> TLElement:
    """The n-th Jones-Wenzl projector via Wenzl's recursion (memoized)."""
    if n < 0:
        raise DomainError("jones_wenzl needs n >= 0")
    if n > config.max_box_color:
        raise CapacityError(
            f"projector color {n} exceeds configured limit {config.max_box_color}"
        )
    with _jw_lock:
        return _jones_wenzl_locked(n)


def _jones_wenzl_locked(n: int) -> TLElement:
    if n in _jw_cache:
        return _jw_cache[n]
    if n == 0:
        el = TLElement(0, {Matching(()): VFraction.one()})
    elif n == 1:
        el = TLElement.identity(1)
    else:
        prev = _jones_wenzl_locked(n - 1).tensor_strand()
        e = TLElement.generator(n, n - 1)
        ratio = VFraction(delta_n(n - 2), delta_n(n - 1))
        el = prev - (prev * e * prev).scale(ratio)
    _jw_cache[n] = el
    return el


def coeff_of(e: TLElement, d: Matching) -> VFraction:
    """The coefficient of the diagram d in e (zero if absent)."""
    if e.n != d.n:
        raise DomainError("strand-count mismatch")
    return e.terms.get(d, VFraction.zero())


def hook_matching(n: int) -> Matching:
    """The fully nested turn-back diagram in TL_{2n}: n nested caps on the
    bottom row and n nested cups on the top row."""
    if n < 1:
        raise DomainError("hook_matching needs n >= 1")
    arcs = [(j, 2 * n - 1 - j) for j in range(n)]
    arcs += [(2 * n + j, 4 * n - 1 - j) for j in range(n)]
    return Matching.from_pairs(2 * n, arcs)
