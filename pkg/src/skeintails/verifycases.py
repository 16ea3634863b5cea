"""Named verification checks: the bridge between acceptance criteria,
builtin CLI suites, and the test suite.

Every check is a pure function params -> (ok, detail).  The detail string
names the first failing comparison (for series, the first mismatching
exponent), so a red case is immediately actionable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import SkeinError
from .qcore import (
    QSeries,
    VFraction,
    VLaurent,
    fraction_to_x_series,
    poch_finite,
    poch_inf,
    poch_inf_step,
    quantum_fact,
    series_div,
    series_mul,
    to_q_series,
)
from . import networks, qidentities, skein_formulas, tails_engine, tl_oracle

CheckResult = tuple[bool, str]


def _series_diff_detail(a: QSeries, b: QSeries) -> str:
    lo = min(a.shift, b.shift)
    hi = max(a.shift + a.order, b.shift + b.order)
    for e in range(lo, hi):
        try:
            ca, cb = a.coeff(e), b.coeff(e)
        except SkeinError:
            break
        if ca != cb:
            return f"first mismatch at exponent q^{e}: {ca} != {cb}"
    return "series differ in shift/order metadata"


def _eq_series(a: QSeries, b: QSeries, label: str) -> CheckResult:
    if a == b:
        return True, f"{label}: equal ({a.order} coefficients)"
    return False, f"{label}: {_series_diff_detail(a, b)}"


def _resolve_series(spec: dict, order: int) -> QSeries:
    spec = dict(spec)
    if "family" in spec:
        family = spec.pop("family")
        return tails_engine.graph_family_tail(family, spec, order)
    if "chain" in spec:
        parity = spec.pop("chain")
        return skein_formulas.chain_tail(parity, int(spec["k"]), order)
    name = spec.pop("series")
    return qidentities.named_series(name, spec, order)


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------


def check_series_equal(params: dict) -> CheckResult:
    order = int(params["order"])
    a = _resolve_series(params["a"], order)
    b = _resolve_series(params["b"], order)
    return _eq_series(a, b, f"{params['a']} vs {params['b']}")


def check_andrews_gordon(params: dict) -> CheckResult:
    k, order = int(params["k"]), int(params["order"])
    return _eq_series(
        qidentities.theta_f(k, order),
        qidentities.ag_rhs(k, order),
        f"theta_f({k}) vs ag_rhs({k}) at order {order}",
    )


def check_false_theta_identity(params: dict) -> CheckResult:
    k, order = int(params["k"]), int(params["order"])
    return _eq_series(
        qidentities.false_theta(k, order),
        qidentities.false_ag_rhs(k, order),
        f"false_theta({k}) vs false_ag_rhs({k}) at order {order}",
    )


def check_jacobi_triple(params: dict) -> CheckResult:
    order = int(params.get("order", 40))
    a = qidentities.MonomialArg(-1, Fraction(2))
    b = qidentities.MonomialArg(-1, Fraction(1))
    lhs = qidentities.theta_general(a, b, order)
    return _eq_series(lhs, poch_inf(1, order), f"f(-q^2,-q) vs (q;q)_inf at {order}")


def check_theta_symmetry(params: dict) -> CheckResult:
    order = int(params.get("order", 30))
    a = qidentities.MonomialArg(-1, Fraction(4))
    b = qidentities.MonomialArg(-1, Fraction(1))
    lhs = qidentities.theta_general(a, b, order)
    rhs = qidentities.theta_general(b, a, order)
    return _eq_series(lhs, rhs, "f(a,b) vs f(b,a)")


def check_jacobi_step5(params: dict) -> CheckResult:
    order = int(params.get("order", 25))
    lhs = qidentities.theta_general(
        qidentities.MonomialArg(-1, Fraction(3)),
        qidentities.MonomialArg(-1, Fraction(2)),
        order,
    )
    rhs = series_mul(
        series_mul(poch_inf_step(3, 5, order), poch_inf_step(2, 5, order)),
        poch_inf_step(5, 5, order),
    ).with_order(order)
    return _eq_series(lhs, rhs, "f(-q^3,-q^2) vs 5-step products")


# ---------------------------------------------------------------------------
# Projector-law checks
# ---------------------------------------------------------------------------


def check_morrison(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 3))
    for n in range(1, n_max + 1):
        got = tl_oracle.coeff_of(
            tl_oracle.jones_wenzl(2 * n), tl_oracle.hook_matching(n)
        )
        want = VFraction(quantum_fact(n) ** 2, quantum_fact(2 * n))
        if got != want:
            return False, f"hook coefficient in f({2*n}) differs at n={n}"
    return True, f"hook coefficient equals ([n]!)^2/[2n]! for n <= {n_max}"


def check_jw_laws(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 6))
    from .qcore import delta_n

    for n in range(1, n_max + 1):
        f = tl_oracle.jones_wenzl(n)
        if not (f * f) == f:
            return False, f"f({n}) not idempotent"
        for i in range(1, n):
            e = tl_oracle.TLElement.generator(n, i)
            if not (e * f).is_zero() or not (f * e).is_zero():
                return False, f"annihilation fails for e_{i} f({n})"
        if f.trace_close() != VFraction.from_poly(delta_n(n)):
            return False, f"trace of f({n}) is not Delta_{n}"
    for total in range(2, n_max + 1):
        for m in range(1, total):
            n = total - m
            closed = tl_oracle.jones_wenzl(total).partial_close(m)
            target = tl_oracle.jones_wenzl(n).scale(
                VFraction(delta_n(total), delta_n(n))
            )
            if closed != target:
                return False, f"partial closure fails for ({m},{n})"
            tensor = tl_oracle.jones_wenzl(m).tensor_with(tl_oracle.jones_wenzl(n))
            if tl_oracle.jones_wenzl(total) * tensor != tl_oracle.jones_wenzl(total):
                return False, f"absorption fails for ({m},{n})"
    return True, f"idempotence, annihilation, trace, closure, absorption to n={n_max}"


# ---------------------------------------------------------------------------
# Oracle equivalence checks
# ---------------------------------------------------------------------------


def bubble_sweep_cases(max_param: int = 2):
    for k in range(1, max_param + 1):
        for l in range(1, k + 1):
            for m in range(0, max_param + 1):
                for n in range(0, max_param + 1):
                    mp, np_ = m + k - l, n + k - l
                    if max(mp, np_) > max_param:
                        continue
                    if m == n and mp == np_:
                        yield (m, n, mp, np_, k, l, "topbottom")
                    if m == mp and n == np_:
                        yield (m, n, mp, np_, k, l, "leftright")


def check_bubble_oracle(params: dict) -> CheckResult:
    max_param = int(params.get("max_param", 2))
    count = 0
    for m, n, mp, np_, k, l, closure in bubble_sweep_cases(max_param):
        lhs = networks.bracket_closed(
            networks.bubble_lhs_network(m, n, mp, np_, k, l, closure)
        )
        rhs = VFraction.zero()
        for i in range(0, min(m, n, l) + 1):
            rhs = rhs + skein_formulas.bubble_coeff(m, n, k, l, i) * networks.bracket_closed(
                networks.bubble_rhs_network(m, n, mp, np_, k, l, i, closure)
            )
        if lhs != rhs:
            return False, f"bubble expansion fails at {(m, n, mp, np_, k, l, closure)}"
        count += 1
    return True, f"bubble expansion matches the oracle on {count} closures"


def check_torus_oracle(params: dict) -> CheckResult:
    from .qcore import delta_n

    f, n = int(params["f"]), int(params["n"])
    bracket = networks.bracket_closed(networks.torus_knot_network(f, n))
    poly = bracket.to_vlaurent().div_exact(delta_n(n))
    lhs = tails_engine.normalize(poly)
    rhs = tails_engine.normalize(skein_formulas.colored_jones_torus(f, n))
    if lhs == rhs:
        return True, f"(2,{f}) torus diagram matches the formula at color {n}"
    return False, f"(2,{f}) n={n}: oracle and formula normalize differently"


def check_theta_oracle(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 2))
    for n in range(1, n_max + 1):
        got = networks.bracket_closed(networks.theta_network(2 * n, 2 * n, 2 * n))
        if got != skein_formulas.theta_2n(n):
            return False, f"theta network differs from theta_2n at n={n}"
    return True, f"theta_2n matches the theta-network bracket for n <= {n_max}"


def check_tet_oracle(params: dict) -> CheckResult:
    n = int(params.get("n", 1))
    got = networks.bracket_closed(networks.tet_network(2 * n))
    want = skein_formulas.tet_2n(n)
    if got == want:
        return True, f"tet_2n({n}) matches the tetrahedron bracket"
    return False, f"tet_2n({n}) differs from the tetrahedron bracket"


def check_oracle_basics(params: dict) -> CheckResult:
    delta = VFraction.from_poly(VLaurent({2: -1, -2: -1}))
    if networks.bracket_closed(networks.loop_network()) != delta:
        return False, "a single loop is not delta"
    a3 = VFraction.from_poly(VLaurent.monomial(-1, 3)) * delta
    am3 = VFraction.from_poly(VLaurent.monomial(-1, -3)) * delta
    if (
        networks.bracket_closed(networks.kinked_loop("nesw")) != a3
        or networks.bracket_closed(networks.kinked_loop("nwse")) != am3
    ):
        return False, "kinked loops do not give -A^(+-3) delta"
    from .qcore import delta_n

    for n in range(1, 5):
        if networks.bracket_closed(networks.closed_projector(n)) != VFraction.from_poly(
            delta_n(n)
        ):
            return False, f"closed f({n}) is not Delta_{n}"
    return True, "loop, kinks, and closed projectors evaluate correctly"


# ---------------------------------------------------------------------------
# Tail checks
# ---------------------------------------------------------------------------


def check_tail_lemma_fact(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 20))
    for n in range(1, n_max + 1):
        val = VFraction(quantum_fact(n) ** 2, quantum_fact(2 * n))
        s = tails_engine.normalize(val, order=n + 1)
        tgt = to_q_series(poch_finite(1, 1, n)).with_order(n + 1)
        if not tails_engine.agree_to_order(s, tgt, n):
            return False, f"([n]!)^2/[2n]! tail fails at n={n}"
    return True, f"([n]!)^2/[2n]! agrees with (q;q)_n to order n for n <= {n_max}"


def check_tail_lemma_bubble0(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 20))
    for n in range(1, n_max + 1):
        s = tails_engine.normalize(
            skein_formulas.bubble_coeff(n, n, n, n, 0), order=n + 1
        )
        tgt = to_q_series(poch_finite(1, 1, n)).with_order(n + 1)
        if not tails_engine.agree_to_order(s, tgt, n):
            return False, f"bubble coefficient tail fails at n={n}"
    return True, f"ceil[n n; n n]_0 agrees with (q;q)_n to order n for n <= {n_max}"


def check_tail_lemma_psum(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 12))
    for n in range(1, n_max + 1):
        terms = [[skein_formulas.p_coeff(n, i)] for i in range(n + 1)]
        sx = tails_engine.sum_fraction_products_x(terms, n + 1)
        sq = tails_engine.x_series_to_normalized_q(sx, n + 1)
        if not tails_engine.agree_to_order(sq, qidentities.false_theta(2, n + 1), n):
            return False, f"sum of P(n,i) tail fails at n={n}"
    return True, f"sum_i P(n,i) agrees with Psi(q^3,q) to order n for n <= {n_max}"


def check_tail_lemma_psum_nn0(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 12))
    for n in range(1, n_max + 1):
        terms = [
            [skein_formulas.p_coeff(n, i), skein_formulas.nn_i_coeff(n, i, 0)]
            for i in range(n + 1)
        ]
        sx = tails_engine.sum_fraction_products_x(terms, n + 1)
        sq = tails_engine.x_series_to_normalized_q(sx, n + 1)
        if not tails_engine.agree_to_order(sq, qidentities.theta_f(2, n + 1), n):
            return False, f"sum of P(n,i) ceil[n i; n n]_0 tail fails at n={n}"
    return True, f"sum_i P(n,i) ceil_0 agrees with f(-q^4,-q) to order n for n <= {n_max}"


def check_nn_i_sweep(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 4))
    for n in range(1, n_max + 1):
        for i in range(0, n + 1):
            for j in range(0, i + 1):
                if skein_formulas.nn_i_coeff(n, i, j) != skein_formulas.bubble_coeff(
                    n, i, n, n, j
                ):
                    return False, f"nn_i_coeff differs from bubble_coeff at {(n,i,j)}"
    return True, f"nn_i_coeff matches bubble_coeff(n,i,n,n,j) for n <= {n_max}"


def check_torus_stabilization(params: dict) -> CheckResult:
    k_max = int(params.get("k_max", 3))
    n_max = int(params.get("n_max", 12))
    for k in range(1, k_max + 1):
        rep = tails_engine.stabilization_report(
            tails_engine.torus_jones_generator(2 * k + 1), n_max
        )
        want = qidentities.theta_f(k, n_max)
        if not rep.all_stable:
            return False, f"f={2*k+1} does not stabilize"
        if rep.tail != want:
            return False, f"f={2*k+1} tail is not theta_f({k})"
        if skein_formulas.chain_tail("even", k, n_max) != want:
            return False, f"even chain k={k} differs from theta_f({k})"
        rep = tails_engine.stabilization_report(
            tails_engine.torus_jones_generator(2 * k), n_max
        )
        want = qidentities.false_theta(k, n_max)
        if not rep.all_stable:
            return False, f"f={2*k} does not stabilize"
        if rep.tail != want:
            return False, f"f={2*k} tail is not false_theta({k})"
        if k >= 2 and skein_formulas.chain_tail("odd", k - 1, n_max) != want:
            return False, f"odd chain k={k-1} differs from false_theta({k})"
    return True, f"torus tails and chains agree for k <= {k_max}, {n_max} coefficients"


def check_lambda_theorem(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 6))
    lam = qidentities.lambda_series(n_max + 2)
    for n in range(1, n_max + 1):
        ratio = skein_formulas.tet_2n(n) / skein_formulas.theta_2n(n)
        rx = fraction_to_x_series(ratio, 2 * (n + 2) + 4)
        rq = tails_engine.x_series_to_normalized_q(rx, n + 2)
        if not tails_engine.agree_to_order(rq, lam, n):
            return False, f"tet/theta ratio differs from Lambda at n={n}"
    return True, f"tet_2n/theta_2n agrees with Lambda(q) to order n for n <= {n_max}"


def check_theta_tail(params: dict) -> CheckResult:
    n_max = int(params.get("n_max", 15))
    for n in range(1, n_max + 1):
        s = tails_engine.normalize(skein_formulas.theta_2n(n), order=n + 1)
        tgt = to_q_series(poch_finite(1, 2, n)).with_order(n + 1)
        if not tails_engine.agree_to_order(s, tgt, n):
            return False, f"theta_2n tail fails at n={n}"
    return True, f"theta_2n(n) agrees with (q^2;q)_n to order n for n <= {n_max}"


def check_product_laws(params: dict) -> CheckResult:
    order = int(params.get("order", 30))
    t = qidentities.theta_f(2, order)
    unit1 = tails_engine.tail_product_1(t, poch_inf(2, order), order)
    if unit1 != t.with_order(order):
        return False, "tail_product_1 unit law fails"
    inv_1mq = series_div(QSeries.one(order), QSeries(0, [1, -1], exact=True), order=order)
    unit23 = tails_engine.tail_product_23(t, inv_1mq, order)
    if unit23 != t.with_order(order):
        return False, "tail_product_23 unit law fails"
    # Wheel with four triangles: glue four tetrahedral sectors along the
    # shared triangle, then one edge gluing: Lambda^4 (q;q)_inf.
    tet = tails_engine.graph_family_tail("tet2n", {}, order)
    glued = tet
    for _ in range(3):
        glued = tails_engine.tail_product_1(glued, tet, order)
    wheel = tails_engine.tail_product_23(glued, QSeries.one(order), order)
    direct = tails_engine.graph_family_tail("g_m", {"m": 4}, order)
    lam = qidentities.lambda_series(order)
    explicit = poch_inf(1, order)
    for _ in range(4):
        explicit = series_mul(explicit, lam).with_order(order)
    if wheel != direct or direct != explicit:
        return False, "wheel tail Lambda^4 (q;q)_inf not reproduced"
    return True, f"unit laws and the four-triangle wheel hold at order {order}"


def check_tail85(params: dict) -> CheckResult:
    order = int(params.get("order", 30))
    s = qidentities.tail_85(order)
    qidentities.assert_integer_coefficients(s)
    if s.shift != 0 or s.coeffs[0] != 1:
        return False, "8_5 tail does not start with 1 at q^0"
    if s != qidentities.tail_85(order, k_max=12):
        return False, "8_5 tail not stable under a larger summation bound"
    return True, f"8_5 tail: integral, leading 1, prefix-stable at order {order}"


def check_chain_examples(params: dict) -> CheckResult:
    order = int(params.get("order", 30))
    if skein_formulas.chain_tail("even", 1, order) != poch_inf(1, order):
        return False, "even chain k=1 is not (q;q)_inf"
    if skein_formulas.chain_tail("odd", 1, order) != qidentities.false_ag_rhs(2, order):
        return False, "odd chain k=1 is not the Entry-9 sum"
    if skein_formulas.chain_tail("even", 2, order) != qidentities.theta_f(2, order):
        return False, "even chain k=2 is not f(-q^4,-q)"
    return True, "chain tails match their named series"


CHECKS: dict[str, Callable[[dict], CheckResult]] = {
    "series_equal": check_series_equal,
    "andrews_gordon": check_andrews_gordon,
    "false_theta_identity": check_false_theta_identity,
    "jacobi_triple": check_jacobi_triple,
    "theta_symmetry": check_theta_symmetry,
    "jacobi_step5": check_jacobi_step5,
    "morrison": check_morrison,
    "jw_laws": check_jw_laws,
    "bubble_oracle": check_bubble_oracle,
    "torus_oracle": check_torus_oracle,
    "theta_oracle": check_theta_oracle,
    "tet_oracle": check_tet_oracle,
    "oracle_basics": check_oracle_basics,
    "tail_lemma_fact": check_tail_lemma_fact,
    "tail_lemma_bubble0": check_tail_lemma_bubble0,
    "tail_lemma_psum": check_tail_lemma_psum,
    "tail_lemma_psum_nn0": check_tail_lemma_psum_nn0,
    "nn_i_sweep": check_nn_i_sweep,
    "torus_stabilization": check_torus_stabilization,
    "lambda_theorem": check_lambda_theorem,
    "theta_tail": check_theta_tail,
    "product_laws": check_product_laws,
    "tail85": check_tail85,
    "chain_examples": check_chain_examples,
}


def run_check(name: str, params: dict) -> CheckResult:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise SkeinError(f"unknown check {name!r}") from None
    return fn(params)
