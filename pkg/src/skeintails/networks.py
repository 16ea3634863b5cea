"""Closed planar networks: crossings, projector boxes, and their bracket.

A ``ClosedNetwork`` is a combinatorial closed diagram: nodes are projector
boxes (each holding a Jones-Wenzl projector of some color) and crossings;
arcs join node ports so that every port is used exactly once.  Evaluation
follows the two Kauffman relations: each crossing resolves into
A * (A-smoothing) + A**-1 * (B-smoothing), each box expands into its
projector, and each closed loop contributes delta = -A**2 - A**-2.

Box ports: a box of color n has ports a0..a(n-1) on side A and b0..b(n-1)
on side B; the projector's identity diagram joins a_j to b_j.  Crossing
ports are nw, ne, se, sw; the over-strand is declared as the "nwse" or
"nesw" diagonal.  With the over-strand on "nesw", the A-smoothing joins
sw-nw and se-ne (turn left along the over-strand).

The module also contains the network builders used by the test oracle
(theta and tetrahedral spin networks, bubble-expansion sides, (2,f) torus
knot diagrams) and a small text format with a parser/serializer; the
grammar is documented in docs/network-format.md.
"""

from __future__ import annotations

import itertools
from collections import deque

from .errors import CapacityError, DomainError
from .qcore import VFraction, VLaurent
from .tl_oracle import DEFAULT_CONFIG, OracleConfig, jones_wenzl

_CROSS_PORTS = ("nw", "ne", "se", "sw")

# Smoothings by over-strand declaration: lists of port-name pairs.
_SMOOTHINGS = {
    "nesw": ({("sw", "nw"), ("se", "ne")}, {("nw", "ne"), ("se", "sw")}),
    "nwse": ({("nw", "ne"), ("se", "sw")}, {("sw", "nw"), ("se", "ne")}),
}


class ClosedNetwork:
    """A closed diagram built from projector boxes, crossings, and arcs."""

    def __init__(self) -> None:
        self.boxes: dict[str, int] = {}
        self.crossings: dict[str, str] = {}
        self.arcs: list[tuple[tuple[str, str], tuple[str, str]]] = []
        self.free_loops = 0

    # -- construction --------------------------------------------------------

    def add_box(self, name: str, color: int) -> str:
        if color < 1:
            raise DomainError("box color must be >= 1")
        if name in self.boxes or name in self.crossings:
            raise DomainError(f"duplicate node name {name!r}")
        self.boxes[name] = color
        return name

    def add_crossing(self, name: str, over: str = "nesw") -> str:
        if over not in _SMOOTHINGS:
            raise DomainError("over must be 'nwse' or 'nesw'")
        if name in self.boxes or name in self.crossings:
            raise DomainError(f"duplicate node name {name!r}")
        self.crossings[name] = over
        return name

    def add_arc(self, end1: tuple[str, str], end2: tuple[str, str]) -> None:
        self.arcs.append((end1, end2))

    def add_loops(self, k: int) -> None:
        if k < 0:
            raise DomainError("loop count must be >= 0")
        self.free_loops += k

    # -- ports ---------------------------------------------------------------

    def ports_of(self, name: str) -> list[str]:
        if name in self.boxes:
            n = self.boxes[name]
            return [f"a{j}" for j in range(n)] + [f"b{j}" for j in range(n)]
        if name in self.crossings:
            return list(_CROSS_PORTS)
        raise DomainError(f"unknown node {name!r}")

    def validate(self) -> None:
        seen: dict[tuple[str, str], int] = {}
        for e1, e2 in self.arcs:
            for e in (e1, e2):
                node, port = e
                if port not in self.ports_of(node):
                    raise DomainError(f"no port {port!r} on node {node!r}")
                seen[e] = seen.get(e, 0) + 1
        for name in itertools.chain(self.boxes, self.crossings):
            for port in self.ports_of(name):
                if seen.get((name, port), 0) != 1:
                    raise DomainError(
                        f"port {name}.{port} used {seen.get((name, port), 0)} times"
                    )
        if len(seen) != 2 * len(self.arcs):
            raise DomainError("an arc endpoint is repeated")

    # -- text format ----------------------------------------------------------

    def serialize(self) -> str:
        lines = []
        for name in sorted(self.boxes):
            lines.append(f"box {name} color {self.boxes[name]}")
        for name in sorted(self.crossings):
            lines.append(f"cross {name} over {self.crossings[name]}")
        for (n1, p1), (n2, p2) in self.arcs:
            lines.append(f"arc {n1}.{p1} {n2}.{p2}")
        if self.free_loops:
            lines.append(f"loops {self.free_loops}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text: str) -> "ClosedNetwork":
        net = ClosedNetwork()

        def endpoint(tok: str) -> tuple[str, str]:
            if "." not in tok:
                raise DomainError(f"bad endpoint {tok!r} (want node.port)")
            node, port = tok.split(".", 1)
            return node, port

        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            toks = line.split()
            try:
                if toks[0] == "box" and len(toks) == 4 and toks[2] == "color":
                    net.add_box(toks[1], int(toks[3]))
                elif toks[0] == "cross" and len(toks) == 4 and toks[2] == "over":
                    net.add_crossing(toks[1], toks[3])
                elif toks[0] == "arc" and len(toks) == 3:
                    net.add_arc(endpoint(toks[1]), endpoint(toks[2]))
                elif toks[0] == "loops" and len(toks) == 2:
                    net.add_loops(int(toks[1]))
                else:
                    raise DomainError(f"unrecognized statement {line!r}")
            except DomainError:
                raise
            except Exception as exc:  # int() failures etc.
                raise DomainError(f"line {lineno}: {exc}") from exc
        return net


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

_DELTA = VLaurent({2: -1, -2: -1})


def bracket_closed(
    net: ClosedNetwork, config: OracleConfig = DEFAULT_CONFIG
) -> VFraction:
    """Kauffman bracket of a closed network, as an exact rational function."""
    net.validate()
    for name, color in net.boxes.items():
        if color > config.max_box_color:
            raise CapacityError(f"box {name} color {color} exceeds limit")
    if len(net.crossings) > config.max_crossings:
        raise CapacityError(
            f"{len(net.crossings)} crossings exceed limit {config.max_crossings}"
        )
    if sum(2 * c for c in net.boxes.values()) > 2 * config.max_frontier:
        raise CapacityError("total box boundary points exceed the frontier limit")

    # Integer ids for ports.
    pid: dict[tuple[str, str], int] = {}
    for name in itertools.chain(net.boxes, net.crossings):
        for port in net.ports_of(name):
            pid[(name, port)] = len(pid)
    arc_adj: dict[int, int] = {}
    for e1, e2 in net.arcs:
        arc_adj[pid[e1]] = pid[e2]
        arc_adj[pid[e2]] = pid[e1]

    box_ports: dict[str, list[int]] = {
        name: [pid[(name, p)] for p in net.ports_of(name)] for name in net.boxes
    }
    box_port_set = {p for ports in box_ports.values() for p in ports}

    crossings = sorted(net.crossings)
    delta = VFraction.from_poly(_DELTA)
    total = VFraction.zero()
    amono = {s: VFraction.from_poly(VLaurent.monomial(1, s)) for s in range(-64, 65)}

    for state in itertools.product((0, 1), repeat=len(crossings)):
        smooth: dict[int, int] = {}
        weight = 0
        for choice, name in zip(state, crossings):
            pairs = _SMOOTHINGS[net.crossings[name]][choice]
            weight += 1 if choice == 0 else -1
            for p1, p2 in pairs:
                a, b = pid[(name, p1)], pid[(name, p2)]
                smooth[a] = b
                smooth[b] = a

        # Resolve to a pairing on box ports plus closed loops.
        pairing: dict[int, int] = {}
        loops = net.free_loops
        visited: set[int] = set()
        for p in box_port_set:
            if p in visited:
                continue
            q = arc_adj[p]
            while q not in box_port_set:
                q = arc_adj[smooth[q]]
            pairing[p] = q
            pairing[q] = p
            visited.add(p)
            visited.add(q)
        seen: set[int] = set()
        for p in smooth:
            if p in seen:
                continue
            # Follow the arc/smoothing cycle through this crossing port.
            cyc = set()
            q = p
            touched_box = False
            while q not in cyc:
                cyc.add(q)
                q2 = arc_adj[q]
                if q2 in box_port_set:
                    touched_box = True
                    break
                cyc.add(q2)
                q = smooth[q2]
            seen |= cyc
            if not touched_box:
                loops += 1
        term = _contract_boxes(net, box_ports, pairing, config)
        coeff = delta**loops
        total = total + amono.get(weight, VFraction.from_poly(VLaurent.monomial(1, weight))) * coeff * term
    return total


def _canon(pairing: dict[int, int]) -> tuple:
    return tuple(sorted((p, q) for p, q in pairing.items() if p < q))


def _contract_boxes(
    net: ClosedNetwork,
    box_ports: dict[str, list[int]],
    pairing: dict[int, int],
    config: OracleConfig,
) -> VFraction:
    """Sum over projector expansions of all boxes, with state aggregation."""
    if not box_ports:
        return VFraction.one()

    # BFS order over the box adjacency keeps intermediate states local.
    adj: dict[str, set[str]] = {b: set() for b in box_ports}
    owner = {p: b for b, ports in box_ports.items() for p in ports}
    for p, q in pairing.items():
        if owner[p] != owner[q]:
            adj[owner[p]].add(owner[q])
    order: list[str] = []
    left = set(box_ports)
    while left:
        start = min(left)
        queue = deque([start])
        left.discard(start)
        while queue:
            b = queue.popleft()
            order.append(b)
            for nb in sorted(adj[b]):
                if nb in left:
                    left.discard(nb)
                    queue.append(nb)

    delta = VFraction.from_poly(_DELTA)
    states: dict[tuple, VFraction] = {_canon(pairing): VFraction.one()}
    for bname in order:
        color = net.boxes[bname]
        ports = box_ports[bname]
        port_set = set(ports)
        element = jones_wenzl(color, config)
        new_states: dict[tuple, VFraction] = {}
        for key, coeff in states.items():
            pr = {}
            for p, q in key:
                pr[p] = q
                pr[q] = p
            for matching, mcoeff in element.terms.items():
                mp = {ports[i]: ports[matching.pairs[i]] for i in range(2 * color)}
                out_pairs: dict[int, int] = {}
                loops = 0
                used: set[int] = set()
                for u in pr:
                    if u in port_set or u in out_pairs:
                        continue
                    v = pr[u]
                    if v not in port_set:
                        out_pairs[u] = v
                        out_pairs[v] = u
                        continue
                    # Walk from outside port u through the box.
                    while v in port_set:
                        used.add(v)
                        v2 = mp[v]
                        used.add(v2)
                        v = pr[v2]
                    out_pairs[u] = v
                    out_pairs[v] = u
                for w0 in port_set:
                    if w0 in used:
                        continue
                    # A closed cycle alternating matching and pairing arcs.
                    loops += 1
                    w = w0
                    while True:
                        used.add(w)
                        w2 = mp[w]
                        used.add(w2)
                        w = pr[w2]
                        if w == w0:
                            break
                c = coeff * mcoeff
                if loops:
                    c = c * delta**loops
                k = _canon(out_pairs)
                s = new_states.get(k)
                new_states[k] = c if s is None else s + c
        states = new_states
    # All boxes expanded: only the empty pairing remains.
    return states.get((), VFraction.zero())


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def loop_network(k: int = 1) -> ClosedNetwork:
    net = ClosedNetwork()
    net.add_loops(k)
    return net


def kinked_loop(over: str = "nesw") -> ClosedNetwork:
    """A single unknotted loop with one Reidemeister-I kink."""
    net = ClosedNetwork()
    net.add_crossing("x", over)
    net.add_arc(("x", "ne"), ("x", "se"))
    net.add_arc(("x", "nw"), ("x", "sw"))
    return net


def closed_projector(n: int) -> ClosedNetwork:
    """Trace closure of f(n); evaluates to Delta_n."""
    net = ClosedNetwork()
    net.add_box("p", n)
    for j in range(n):
        net.add_arc(("p", f"a{j}"), ("p", f"b{j}"))
    return net


def _end_ports(net: ClosedNetwork, box: str, side: str) -> list[tuple[str, str]]:
    n = net.boxes[box]
    ports = [(box, f"{side}{j}") for j in range(n)]
    # Side b is listed reversed so that, seen from its own vertex, the ports
    # run in the same rotational direction as side a does from its vertex.
    return ports if side == "a" else ports[::-1]


def _wire_vertex(net: ClosedNetwork, ends: list[list[tuple[str, str]]]) -> None:
    """Wire a trivalent vertex.

    ``ends`` are the three edge-ends in clockwise order around the vertex,
    each a port list in clockwise order.  Adjacent ends are joined by nested
    arcs; the triple must be admissible.
    """
    sizes = [len(e) for e in ends]
    for k in range(3):
        a, b, c = sizes[k], sizes[(k + 1) % 3], sizes[(k + 2) % 3]
        t = a + b - c
        if t < 0 or t % 2:
            raise DomainError(f"inadmissible vertex colors {sizes}")
    for k in range(3):
        t = (sizes[k] + sizes[(k + 1) % 3] - sizes[(k + 2) % 3]) // 2
        e0, e1 = ends[k], ends[(k + 1) % 3]
        for j in range(t):
            net.add_arc(e0[len(e0) - 1 - j], e1[j])


def theta_network(a: int, b: int, c: int) -> ClosedNetwork:
    """The theta spin network with edge colors (a, b, c)."""
    net = ClosedNetwork()
    for name, color in (("A", a), ("B", b), ("C", c)):
        if color:
            net.add_box(name, color)
    def end(box, side, color):
        return _end_ports(net, box, side) if color else []
    left = [end("A", "a", a), end("B", "a", b), end("C", "a", c)]
    right = [end("C", "b", c), end("B", "b", b), end("A", "b", a)]
    _wire_vertex(net, left)
    _wire_vertex(net, right)
    return net


_TET_EDGES = ("e12", "e13", "e14", "e23", "e24", "e34")

# Clockwise edge-ends around each vertex of the planar K4 (V1 top, V2
# bottom-left, V3 bottom-right, V4 center); "a" sides face the
# lower-numbered vertex.
_TET_VERTICES = (
    (("e13", "a"), ("e14", "a"), ("e12", "a")),
    (("e12", "b"), ("e24", "a"), ("e23", "a")),
    (("e23", "b"), ("e34", "a"), ("e13", "b")),
    (("e34", "b"), ("e24", "b"), ("e14", "b")),
)


def tet_network(colors: dict[str, int] | int) -> ClosedNetwork:
    """The tetrahedral spin network.

    ``colors`` maps edge names e12, e13, e14, e23, e24, e34 to colors, or a
    single integer colors every edge the same.
    """
    if isinstance(colors, int):
        colors = {e: colors for e in _TET_EDGES}
    net = ClosedNetwork()
    for e in _TET_EDGES:
        if colors[e]:
            net.add_box(e, colors[e])
    for vertex in _TET_VERTICES:
        ends = [
            _end_ports(net, e, side) if colors[e] else []
            for e, side in vertex
        ]
        _wire_vertex(net, ends)
    return net


# -- bubble expansion networks ----------------------------------------------
#
# The bubble element: two projector boxes (colors m+k and n+k) joined by two
# parallel bands, k strands over the lens and l strands under it, with
# boundary cables m, n (top corners) and m', n' (bottom corners); it exists
# when m + k = m' + l and n + k = n' + l.  The expansion replaces it by
# elements with i nested turn-backs joining the top cables, k-l+i joining
# the bottom cables, and through strands on both sides.  Boundary projector
# boxes of colors m, n, m', n' are part of both sides.


def _bubble_check(m: int, n: int, mp: int, np_: int, k: int, l: int) -> None:
    if k < l or l < 1:
        raise DomainError("bubble needs k >= l >= 1")
    if m + k != mp + l or n + k != np_ + l:
        raise DomainError("bubble colors must satisfy m+k = m'+l and n+k = n'+l")
    if min(m, n, mp, np_) < 0:
        raise DomainError("negative colors")


def _add_cable_boxes(net: ClosedNetwork, m: int, n: int, mp: int, np_: int):
    for name, color in (("pm", m), ("pn", n), ("pmp", mp), ("pnp", np_)):
        if color:
            net.add_box(name, color)


def bubble_lhs_network(
    m: int, n: int, mp: int, np_: int, k: int, l: int, closure: str
) -> ClosedNetwork:
    """Closure of the bubble skein element itself."""
    _bubble_check(m, n, mp, np_, k, l)
    net = ClosedNetwork()
    net.add_box("L", m + k)
    net.add_box("R", n + k)
    _add_cable_boxes(net, m, n, mp, np_)
    # Bands over and under the lens (nested, innermost between the boxes).
    for j in range(k):
        net.add_arc(("L", f"a{m + j}"), ("R", f"a{k - 1 - j}"))
    for j in range(l):
        net.add_arc(("L", f"b{mp + j}"), ("R", f"b{l - 1 - j}"))
    # Corner cables through their boundary projectors (side b = inner).
    for j in range(m):
        net.add_arc(("pm", f"b{j}"), ("L", f"a{j}"))
    for j in range(n):
        net.add_arc(("pn", f"b{j}"), ("R", f"a{k + j}"))
    for j in range(mp):
        net.add_arc(("pmp", f"b{j}"), ("L", f"b{j}"))
    for j in range(np_):
        net.add_arc(("pnp", f"b{j}"), ("R", f"b{l + j}"))
    _bubble_closure(net, m, n, mp, np_, closure)
    return net


def bubble_rhs_network(
    m: int, n: int, mp: int, np_: int, k: int, l: int, i: int, closure: str
) -> ClosedNetwork:
    """Closure of the i-th expansion element (turn-backs and throughs)."""
    _bubble_check(m, n, mp, np_, k, l)
    if not (0 <= i <= min(m, n)) or k - l + i > min(mp, np_):
        raise DomainError(f"expansion index {i} out of range")
    net = ClosedNetwork()
    _add_cable_boxes(net, m, n, mp, np_)
    tb, bb = i, k - l + i
    # Top turn-backs: innermost (rightmost of pm / leftmost of pn) first.
    for j in range(tb):
        net.add_arc(("pm", f"b{m - 1 - j}"), ("pn", f"b{j}"))
    for j in range(bb):
        net.add_arc(("pmp", f"b{mp - 1 - j}"), ("pnp", f"b{j}"))
    for j in range(m - tb):
        net.add_arc(("pm", f"b{j}"), ("pmp", f"b{j}"))
    for j in range(n - tb):
        net.add_arc(("pn", f"b{tb + j}"), ("pnp", f"b{bb + j}"))
    _bubble_closure(net, m, n, mp, np_, closure)
    return net


def _bubble_closure(net, m: int, n: int, mp: int, np_: int, closure: str) -> None:
    if closure == "topbottom":
        if m != n or mp != np_:
            raise DomainError("topbottom closure needs m = n and m' = n'")
        for j in range(m):
            net.add_arc(("pm", f"a{j}"), ("pn", f"a{n - 1 - j}"))
        for j in range(mp):
            net.add_arc(("pmp", f"a{j}"), ("pnp", f"a{np_ - 1 - j}"))
    elif closure == "leftright":
        if m != mp or n != np_:
            raise DomainError("leftright closure needs m = m' and n = n'")
        for j in range(m):
            net.add_arc(("pm", f"a{j}"), ("pmp", f"a{j}"))
        for j in range(n):
            net.add_arc(("pn", f"a{j}"), ("pnp", f"a{j}"))
    else:
        raise DomainError(f"unknown closure {closure!r}")


# -- torus knots --------------------------------------------------------------


def torus_knot_network(f: int, n: int, over: str = "nesw") -> ClosedNetwork:
    """The (2, f) torus link diagram, both cables colored n.

    Built as the trace closure of the 2-cabled braid sigma_1**f with an
    f(n) box inserted in each cable's closure arcs; f * n**2 crossings.
    """
    if f < 1 or n < 0:
        raise DomainError("need f >= 1 and n >= 0")
    net = ClosedNetwork()
    if n == 0:
        return net
    width = 2 * n
    # strand[p] = open endpoint (node, port) at the top of column p.
    net.add_box("cl", n)
    net.add_box("cr", n)
    strand: list[tuple[str, str]] = [("cl", f"b{j}") for j in range(n)] + [
        ("cr", f"b{j}") for j in range(n)
    ]
    cid = 0
    for _block in range(f):
        # One cabled sigma_1: the left cable crosses the right cable.
        for a in range(n):
            for b in range(n):
                p = n - 1 - a + b
                name = f"x{cid}"
                cid += 1
                net.add_crossing(name, over)
                net.add_arc(strand[p], (name, "sw"))
                net.add_arc(strand[p + 1], (name, "se"))
                strand[p] = (name, "nw")
                strand[p + 1] = (name, "ne")
    for j in range(n):
        net.add_arc(strand[j], ("cl", f"a{j}"))
    for j in range(n):
        net.add_arc(strand[n + j], ("cr", f"a{j}"))
    return net
