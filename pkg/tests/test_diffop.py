"""DiffOp composition/application against the nesting identity and H examples."""

import random
from fractions import Fraction

import pytest

from octasphere.diffop import (DiffOp, KINETIC, apply, build_hamiltonian,
                               build_phi1_block, compose, is_zero_op, op_from_obj,
                               op_to_json, pv)
from octasphere.operators import build_first_order
from octasphere.trigpoly import COS1, ONE, SIN1, TAN1, TrigPoly, is_zero

F = Fraction
HALF = F(1, 2)


def mono(c, a, b, cc, d):
    return TrigPoly.monomial(c, (F(a), F(b), F(cc), F(d)))


D1 = DiffOp({(1, 0): ONE})
D2 = DiffOp({(0, 1): ONE})


def test_compose_derivatives():
    assert compose(D1, D1) == DiffOp({(2, 0): ONE})


def test_compose_noncommutative_by_sec_squared():
    tan_mult = DiffOp.multiplication(TAN1)
    left = compose(tan_mult, D1)
    right = compose(D1, tan_mult)
    diff = right - left  # [d1, tan] = sec^2
    sec2 = DiffOp.multiplication(mono(1, -2, 0, 0, 0))
    assert is_zero_op(diff - sec2)


def test_factorization_identity_at_sector():
    # A+ A- + (l0+l1+1)^2 = phi1 block, checked at (1, 1, 0)
    ell = pv(1, 1, 0)
    aplus = build_first_order("A", "+", ell)
    aminus = build_first_order("A", "-", ell)
    lam0 = F(9)
    lhs = compose(aplus, aminus) + DiffOp.identity().scale(lam0)
    assert is_zero_op(lhs - build_phi1_block(1, 1))


def test_apply_annihilates_ground_state():
    aminus = build_first_order("A", "-", pv(0, 0, 0))
    ground = mono(1, HALF, HALF, 0, 0)
    assert is_zero(apply(aminus, ground))


def test_apply_identity_and_derivative():
    p = mono(3, 1, 2, 0, 1)
    assert apply(DiffOp.identity(), p) == p
    assert apply(D1, SIN1) == COS1


def test_hamiltonian_pure_kinetic_at_half_sector():
    h = build_hamiltonian(pv(HALF, HALF, HALF))
    assert is_zero_op(h - KINETIC)


def test_hamiltonian_eigenvalue_examples():
    # (0,0,1) on the q=1 fundamental state -> 35/4
    psi = mono(1, HALF, HALF, 1, F(3, 2))
    h = build_hamiltonian(pv(0, 0, 1))
    assert is_zero(apply(h, psi) - psi.scale(F(35, 4)))
    # (0,0,0) on the q=0 state -> 15/4
    psi0 = mono(1, HALF, HALF, 1, HALF)
    h0 = build_hamiltonian(pv(0, 0, 0))
    assert is_zero(apply(h0, psi0) - psi0.scale(F(15, 4)))


def test_compose_matches_nested_apply_randomized():
    rng = random.Random(7)

    def rand_poly():
        acc = TrigPoly.zero()
        for _ in range(rng.randint(1, 3)):
            e = tuple(F(rng.randint(-4, 4), rng.choice((1, 2))) for _ in range(4))
            acc = acc + TrigPoly.monomial(F(rng.randint(-3, 3) or 1), e)
        return acc

    def rand_op(max_order):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            k1 = rng.randint(0, max_order)
            k2 = rng.randint(0, max_order - k1)
            terms[(k1, k2)] = rand_poly()
        return DiffOp(terms)

    for _ in range(100):
        x, y = rand_op(2), rand_op(2)
        f = rand_poly()
        assert is_zero(apply(compose(x, y), f) - apply(x, apply(y, f)))


def test_order_cap_enforced():
    with pytest.raises(ValueError):
        DiffOp({(3, 2): ONE})
    with pytest.raises(ValueError):
        compose(DiffOp({(2, 1): ONE}), DiffOp({(2, 0): ONE}))


def test_operator_serialization_round_trip():
    h = build_hamiltonian(pv(1, 2, 3))
    s = op_to_json(h, (1, 1, 0))
    import json
    op, shift = op_from_obj(json.loads(s))
    assert op == h and shift == (1, 1, 0)
    assert op_to_json(op, shift) == s
