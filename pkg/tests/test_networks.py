"""Closed-network brackets: Kauffman relations, spin networks, text format."""

import pytest

from skeintails.errors import CapacityError, DomainError
from skeintails.networks import (
    ClosedNetwork,
    bracket_closed,
    bubble_lhs_network,
    bubble_rhs_network,
    closed_projector,
    kinked_loop,
    loop_network,
    tet_network,
    theta_network,
    torus_knot_network,
)
from skeintails.qcore import VFraction, VLaurent, delta_n, quantum_int
from skeintails.tl_oracle import OracleConfig

DELTA = VFraction.from_poly(VLaurent({2: -1, -2: -1}))


class TestKauffmanRelations:
    def test_empty_link_is_one(self):
        assert bracket_closed(ClosedNetwork()) == VFraction.one()

    def test_single_loop(self):
        assert bracket_closed(loop_network()) == DELTA

    def test_many_loops(self):
        assert bracket_closed(loop_network(3)) == DELTA**3

    def test_kinks(self):
        pos = bracket_closed(kinked_loop("nesw"))
        neg = bracket_closed(kinked_loop("nwse"))
        assert pos == VFraction.from_poly(VLaurent.monomial(-1, 3)) * DELTA
        assert neg == VFraction.from_poly(VLaurent.monomial(-1, -3)) * DELTA

    def test_closed_projectors(self):
        for n in range(1, 5):
            got = bracket_closed(closed_projector(n))
            assert got == VFraction.from_poly(delta_n(n))

    def test_hopf_link_value(self):
        # <sigma_1^2 trace closure> = -A^4 - A^-4 times one loop factor
        net = torus_knot_network(2, 1)
        want = VFraction.from_poly(VLaurent({4: -1, -4: -1})) * DELTA
        assert bracket_closed(net) == want


class TestSpinNetworks:
    def test_theta_small_values(self):
        # Theta(1,1,2) = [3]; Theta(2,2,2) = -[4][3]/[2]^2
        assert bracket_closed(theta_network(1, 1, 2)) == VFraction.from_poly(
            quantum_int(3)
        )
        want = VFraction(
            (quantum_int(4) * quantum_int(3)).scale(-1), quantum_int(2) ** 2
        )
        assert bracket_closed(theta_network(2, 2, 2)) == want

    def test_theta_degenerate_edge(self):
        # Theta(n, n, 0) is the closed n-projector
        assert bracket_closed(theta_network(2, 2, 0)) == VFraction.from_poly(delta_n(2))

    def test_inadmissible_vertex_rejected(self):
        with pytest.raises(DomainError):
            theta_network(1, 1, 1)
        with pytest.raises(DomainError):
            theta_network(1, 2, 5)

    def test_tet_inadmissible(self):
        # All edges colored 1 gives odd vertex sums
        with pytest.raises(DomainError):
            tet_network(1)


class TestCapacity:
    def test_crossing_limit(self):
        net = torus_knot_network(5, 1)
        with pytest.raises(CapacityError):
            bracket_closed(net, OracleConfig(max_crossings=4))

    def test_box_color_limit(self):
        with pytest.raises(CapacityError):
            bracket_closed(closed_projector(4), OracleConfig(max_box_color=3))

    def test_frontier_limit(self):
        with pytest.raises(CapacityError):
            bracket_closed(theta_network(4, 4, 4), OracleConfig(max_frontier=5))


class TestValidation:
    def test_unused_port(self):
        net = ClosedNetwork()
        net.add_box("p", 1)
        with pytest.raises(DomainError):
            bracket_closed(net)

    def test_double_used_port(self):
        net = ClosedNetwork()
        net.add_box("p", 1)
        net.add_arc(("p", "a0"), ("p", "b0"))
        net.add_arc(("p", "a0"), ("p", "b0"))
        with pytest.raises(DomainError):
            net.validate()

    def test_duplicate_names(self):
        net = ClosedNetwork()
        net.add_box("p", 1)
        with pytest.raises(DomainError):
            net.add_crossing("p")


class TestTextFormat:
    def test_round_trip(self):
        net = torus_knot_network(3, 1)
        text = net.serialize()
        again = ClosedNetwork.parse(text)
        assert again.serialize() == text
        assert bracket_closed(again) == bracket_closed(net)

    def test_round_trip_with_loops_and_boxes(self):
        net = theta_network(2, 2, 2)
        net.add_loops(2)
        again = ClosedNetwork.parse(net.serialize())
        assert bracket_closed(again) == bracket_closed(net)

    def test_comments_and_errors(self):
        net = ClosedNetwork.parse(
            "# a lone loop\nloops 1\n"
        )
        assert bracket_closed(net) == DELTA
        with pytest.raises(DomainError):
            ClosedNetwork.parse("bogus statement here\n")
        with pytest.raises(DomainError):
            ClosedNetwork.parse("box p color x\n")
        with pytest.raises(DomainError):
            ClosedNetwork.parse("arc p.a0\n")


class TestBubbleNetworks:
    def test_existence_constraints(self):
        with pytest.raises(DomainError):
            bubble_lhs_network(1, 1, 1, 1, 2, 1, "topbottom")  # m' must be 2
        with pytest.raises(DomainError):
            bubble_rhs_network(1, 1, 1, 1, 1, 1, 3, "leftright")

    def test_smallest_bubble_closures(self):
        # (1,1,1,1;1,1) closed top-bottom is the two-bead necklace, whose
        # value is Theta(1,1,2) = [3]; the left-right closure traces the
        # corner cables the other way and gives a different link.
        want = VFraction.from_poly(quantum_int(3))
        top = bracket_closed(bubble_lhs_network(1, 1, 1, 1, 1, 1, "topbottom"))
        assert top == want
        lhs = bracket_closed(bubble_lhs_network(1, 1, 1, 1, 1, 1, "leftright"))
        assert lhs != want
