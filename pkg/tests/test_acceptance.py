"""Acceptance gate: every criterion runs exactly, tolerance zero.

One test per criterion; each prints a single pass/fail line.  The same
checks back the builtin:acceptance CLI suite, so CI and the command line
exercise identical code.
"""

import pytest

from skeintails.verifycases import run_check


def _criterion(number: int, label: str, check: str, params: dict) -> None:
    ok, detail = run_check(check, params)
    print(f"ACCEPTANCE {number:02d} [{'PASS' if ok else 'FAIL'}] {label}: {detail}")
    assert ok, f"criterion {number} ({label}): {detail}"


def test_c01_andrews_gordon_identities():
    for k in (2, 3, 4, 5):
        _criterion(1, f"Andrews-Gordon k={k}", "andrews_gordon", {"k": k, "order": 50})


def test_c02_false_theta_identities():
    for k in (2, 3, 4, 5):
        _criterion(
            2, f"false theta k={k}", "false_theta_identity", {"k": k, "order": 50}
        )


def test_c03_jacobi_triple_product():
    _criterion(3, "f(-q^2,-q) = (q;q)_inf", "jacobi_triple", {"order": 40})


def test_c04_morrison_coefficients():
    _criterion(4, "nested hook coefficients", "morrison", {"n_max": 3})


def test_c05_jones_wenzl_laws():
    _criterion(5, "projector laws to n=6", "jw_laws", {"n_max": 6})


def test_c06_bubble_expansion_oracle():
    _criterion(6, "bubble expansion vs oracle", "bubble_oracle", {"max_param": 2})


def test_c07_tail_lemmas():
    _criterion(7, "([n]!)^2/[2n]! tail", "tail_lemma_fact", {"n_max": 20})
    _criterion(7, "bubble_0 tail", "tail_lemma_bubble0", {"n_max": 20})
    _criterion(7, "sum P(n,i) tail", "tail_lemma_psum", {"n_max": 12})
    _criterion(7, "sum P(n,i) ceil_0 tail", "tail_lemma_psum_nn0", {"n_max": 12})


@pytest.mark.parametrize("f,n", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1)])
def test_c08_torus_formula_vs_oracle(f, n):
    _criterion(8, f"(2,{f}) color {n}", "torus_oracle", {"f": f, "n": n})


def test_c09_stabilization_and_chains():
    _criterion(
        9, "torus tails & chains k<=3", "torus_stabilization", {"k_max": 3, "n_max": 12}
    )


def test_c10_lambda_theorem():
    _criterion(10, "tet/theta vs Lambda n<=6", "lambda_theorem", {"n_max": 6})
    _criterion(10, "tet_2n(1) vs oracle", "tet_oracle", {"n": 1})


def test_c11_theta_tail():
    _criterion(11, "theta_2n vs (q^2;q)_n n<=15", "theta_tail", {"n_max": 15})


def test_c12_product_combinators():
    _criterion(12, "unit laws & 4-wheel", "product_laws", {"order": 30})


def test_c13_85_tail():
    _criterion(13, "8_5 series checks", "tail85", {"order": 30})
