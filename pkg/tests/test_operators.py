"""Graded operator families: printed forms, intertwining, the multiplier solver,
reflections, commutators and the Casimir identities."""

from fractions import Fraction

import pytest

from octasphere.diffop import DiffOp, is_zero_op, pv
from octasphere.operators import (GradedOp, MultiplierSolveError, build_first_order,
                                  casimir_identity, constant_part, diagonal, graded,
                                  graded_commutator, intertwine_residual,
                                  is_exact_intertwiner, multiplier_ansatz,
                                  printed_delta_report, reflect_conjugate,
                                  solve_multiplier, structure_table)
from octasphere.trigpoly import ONE, TrigPoly, TrigTerm, is_zero

F = Fraction
HALF = F(1, 2)


def mono(c, a, b, cc, d):
    return TrigPoly.monomial(c, (F(a), F(b), F(cc), F(d)))


def first_order_op(vec_terms, mult):
    terms = dict(vec_terms)
    terms[(0, 0)] = mult
    return DiffOp(terms)


# -- printed constructors -------------------------------------------------------

def test_printed_A_minus_at_1_2_0():
    got = build_first_order("A", "-", pv(1, 2, 0))
    want = first_order_op({(1, 0): ONE.scale(-1)},
                          mono(-F(3, 2), -1, 1, 0, 0) + mono(F(5, 2), 1, -1, 0, 0))
    assert got == want


def test_printed_B_plus_at_origin():
    got = build_first_order("B", "+", pv(0, 0, 0))
    want = first_order_op(
        {(1, 0): mono(1, 0, 1, -1, 1), (0, 1): mono(1, 1, 0, 0, 0)},
        mono(-HALF, 1, 0, 1, -1) + mono(HALF, -1, 0, -1, 1))
    assert got == want


def test_printed_M_minus_at_origin():
    got = build_first_order("M", "-", pv(0, 0, 0), m=0)
    want = first_order_op({(0, 1): ONE.scale(-1)},
                          mono(-1, 0, 0, -1, 1) + mono(HALF, 0, 0, 1, -1))
    assert got == want


def test_A1d_is_shifted_A():
    assert build_first_order("A1d", "-", pv(1, 0, 2), m=2) == \
        build_first_order("A", "-", pv(3, 2, 2))


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        build_first_order("Q", "-", pv(0, 0, 0))


# -- intertwining -----------------------------------------------------------------

def test_A_minus_residual_zero():
    assert is_zero_op(intertwine_residual(graded("A-"), pv(1, 1, 2)))


def test_printed_C_minus_residual_nonzero():
    assert not is_zero_op(intertwine_residual(graded("C-", "printed"), pv(1, 1, 1)))


def test_identity_graded_residual_zero():
    ident = GradedOp(name="1", shift=(0, 0, 0), factory=lambda ell: DiffOp.identity(),
                     scale=F(1))
    assert is_zero_op(intertwine_residual(ident, pv(2, -1, 3)))


@pytest.mark.parametrize("name", ["A-", "A+", "B-", "B+", "C-", "C+",
                                  "At-", "At+", "Bt-", "Bt+", "Ct-", "Ct+"])
def test_corrected_families_intertwine_on_box(name):
    # unit-scale box; the acceptance suite sweeps the larger +-3 / +-2 boxes
    op = graded(name, "corrected")
    for i in range(-1, 2):
        for j in range(-1, 2):
            for k in range(-1, 2):
                assert is_exact_intertwiner(op, pv(i, j, k)), (name, i, j, k)


def test_printed_B_C_swap_is_the_correction():
    # corrected X^s equals printed X^(-s): the superscripts are exchanged
    for base in ("B", "C"):
        for sign, other in (("+", "-"), ("-", "+")):
            ell = pv(2, -1, 1)
            assert build_first_order(base, sign, ell, variant="corrected") == \
                build_first_order(base, other, ell, variant="printed")


# -- multiplier solver ---------------------------------------------------------------

def test_solver_recovers_A_multiplier():
    vector = DiffOp({(1, 0): ONE.scale(-1)})
    ansatz = [TrigTerm(F(1), (F(-1), F(1), F(0), F(0))),
              TrigTerm(F(1), (F(1), F(-1), F(0), F(0)))]
    got = solve_multiplier(vector, (1, 1, 0), ansatz, pv(1, 2, 0))
    assert got == mono(-F(3, 2), -1, 1, 0, 0) + mono(F(5, 2), 1, -1, 0, 0)


def test_solver_C_with_printed_vector():
    # printed C- vector kept fixed; the unique multiplier for the claimed shift
    # (0,-1,1) at (1,1,1) is -(1/2) csc tan - (3/2) sin cot, i.e. minus the
    # printed multiplier -- exact evidence that only the vector sign is off.
    vector = DiffOp({(1, 0): mono(-1, 1, 0, -1, 1), (0, 1): mono(1, 0, 1, 0, 0)})
    ansatz = [TrigTerm(F(1), (F(0), F(-1), F(-1), F(1))),
              TrigTerm(F(1), (F(0), F(1), F(-1), F(1))),
              TrigTerm(F(1), (F(0), F(1), F(1), F(-1))),
              TrigTerm(F(1), (F(0), F(-1), F(1), F(-1)))]
    got = solve_multiplier(vector, (0, -1, 1), ansatz, pv(1, 1, 1))
    want = mono(-HALF, 0, -1, -1, 1) + mono(-F(3, 2), 0, 1, 1, -1)
    assert got == want
    printed_mult = build_first_order("C", "-", pv(1, 1, 1)).coeff((0, 0))
    assert is_zero(got + printed_mult)


def test_solver_empty_ansatz_fails():
    with pytest.raises(MultiplierSolveError):
        solve_multiplier(DiffOp({(1, 0): ONE}), (1, 1, 0), [], pv(0, 0, 0))


def test_solver_inconsistent_system_fails():
    # no multiplier makes a bare d2 intertwine along the A shift
    with pytest.raises(MultiplierSolveError):
        solve_multiplier(DiffOp({(0, 1): ONE}), (1, 1, 0),
                         multiplier_ansatz("A"), pv(1, 0, 0))


# -- reflections -----------------------------------------------------------------------

def test_reflect_A_matches_printed_tilde():
    refl = reflect_conjugate(graded("A-"), 0)
    for ell in (pv(1, 2, 0), pv(-1, 3, 2)):
        assert refl.at(ell) == build_first_order("At", "-", ell)
    assert refl.shift == (-1, 1, 0)


def test_reflect_is_involution():
    op = graded("B+")
    twice = reflect_conjugate(reflect_conjugate(op, 1), 1)
    for ell in (pv(1, 1, 1), pv(0, -2, 3)):
        assert twice.at(ell) == op.at(ell)
    assert twice.shift == op.shift


def test_reflect_shift_rule():
    assert reflect_conjugate(graded("C-"), 1).shift == (0, 1, 1)


def test_reflect_preserves_intertwining():
    for axis in (0, 1, 2):
        refl = reflect_conjugate(graded("C-"), axis)
        for ell in (pv(1, 1, 1), pv(2, 0, -1)):
            assert is_exact_intertwiner(refl, ell)


def test_reflection_fixes_untouched_families():
    # I0 leaves C alone; I2 leaves A alone
    for ell in (pv(1, 2, 3), pv(-1, 0, 2)):
        assert reflect_conjugate(graded("C-"), 0).at(ell) == graded("C-").at(ell)
        assert reflect_conjugate(graded("A+"), 2).at(ell) == graded("A+").at(ell)


# -- commutators --------------------------------------------------------------------------

def test_diag_commutator_with_raising():
    from octasphere.operators import commutator_with_diagonal
    a = diagonal("A")
    aplus = graded("A+")
    for ell in (pv(0, 0, 0), pv(2, -1, 3)):
        got = commutator_with_diagonal(a, aplus, ell)
        assert is_zero_op(got - aplus.scaled_at(ell))


def test_lowering_raising_commutator_is_minus_two_diag():
    for base in ("A", "B", "C"):
        minus, plus = graded(base + "-"), graded(base + "+")
        d = diagonal(base)
        for ell in (pv(1, 1, 1), pv(2, 0, -1), pv(-2, 3, 1)):
            op, shift = graded_commutator(minus, plus, ell)
            assert shift == (0, 0, 0)
            assert constant_part(op) == -2 * d.value(ell)


def test_self_commutator_vanishes():
    op, _ = graded_commutator(graded("B-"), graded("B-"), pv(1, 2, 3))
    assert is_zero_op(op)


def test_central_D_commutes():
    from octasphere.operators import commutator_with_diagonal
    d = diagonal("D")
    for name in ("A-", "A+", "B-", "B+", "C-", "C+"):
        for ell in (pv(1, 1, 1), pv(0, 2, -1)):
            assert is_zero_op(commutator_with_diagonal(d, graded(name), ell))


def test_structure_table_closure_and_entries():
    st = structure_table(box=1)
    assert st["unmatched"] == []
    t = st["table"]
    assert t["A-,A+"] == [("-2", "A")]
    assert t["B-,B+"] == [("-2", "B")]
    assert t["C-,C+"] == [("-2", "C")]
    assert t["A-,C-"] == [("1", "B-")]
    assert t["A+,C+"] == [("-1", "B+")]
    assert t["A+,B-"] == [("1", "C-")]
    assert t["A-,B+"] == [("-1", "C+")]
    assert t["B+,C-"] == [("-1", "A+")]
    assert t["B-,C+"] == [("1", "A-")]
    assert t["A-,B-"] == [] and t["B+,C+"] == [] and t["A+,C-"] == []


def test_diagonal_relation():
    a, b, c = diagonal("A"), diagonal("B"), diagonal("C")
    for i in range(-3, 4):
        for j in range(-3, 4):
            for k in range(-3, 4):
                ell = pv(i, j, k)
                assert c.value(ell) == b.value(ell) - a.value(ell)


# -- casimir identities ---------------------------------------------------------------------

def test_su3_casimir_identity():
    assert is_zero_op(casimir_identity("su3_esp", pv(2, 0, 1)))


def test_so4_casimir_identity():
    assert is_zero_op(casimir_identity("so4_ca", pv(1, 1, 0)))


def test_so6_casimir_identity_corrected_constant():
    assert is_zero_op(casimir_identity("so6_cass", pv(1, 1, 1)))


def test_so6_printed_constant_residual():
    resid = casimir_identity("so6_cass", pv(1, 1, 1), printed_constant=True)
    assert constant_part(resid) == F(-1, 3)


def test_printed_delta_report_has_exact_evidence():
    deltas = printed_delta_report()
    assert {d["operator"] for d in deltas} == {"B-", "B+", "C-", "C+"}
    assert all(d["corrected_residual_zero"] for d in deltas)


# -- the phi2 chain ------------------------------------------------------------------------

def test_phi2_chain_factorization():
    # H_(n) = M+_n M-_n + mu_n with mu_n = (s+2n+3/2)(s+2n+5/2), s = l0+l1+l2+2m
    from octasphere.diffop import build_phi2_operator, compose
    ell, m = pv(1, 0, 1), 1
    s = F(1 + 0 + 1 + 2 * m)
    for n in range(4):
        mp = build_first_order("M", "+", ell, m=m, n=n)
        mm = build_first_order("M", "-", ell, m=m, n=n)
        mu = (s + 2 * n + F(3, 2)) * (s + 2 * n + F(5, 2))
        h_n = build_phi2_operator(1 + 0 + 2 * m + n + 1, 1 + n)
        assert is_zero_op(compose(mp, mm) + DiffOp.identity().scale(mu) - h_n)


def test_phi2_chain_intertwining():
    from octasphere.diffop import build_phi2_operator, compose
    ell, m = pv(0, 0, 0), 0
    for n in range(3):
        mm = build_first_order("M", "-", ell, m=m, n=n)
        h1 = build_phi2_operator(n + 1, n)
        h2 = build_phi2_operator(n + 2, n + 1)
        assert is_zero_op(compose(mm, h1) - compose(h2, mm))


def test_phi2_chain_commutator_value():
    # [M-, M+] with the 1/2-scaled convention is (l0+l1+l2+2m+2n+1) * id;
    # the printed value -4(...) has the unscaled magnitude and the wrong sign
    from octasphere.diffop import compose
    ell, m, n = pv(1, 1, 0), 0, 1
    mm_prev = build_first_order("M", "-", ell, m=m, n=n - 1).scale(HALF)
    mp_prev = build_first_order("M", "+", ell, m=m, n=n - 1).scale(HALF)
    mm_n = build_first_order("M", "-", ell, m=m, n=n).scale(HALF)
    mp_n = build_first_order("M", "+", ell, m=m, n=n).scale(HALF)
    comm = compose(mm_prev, mp_prev) - compose(mp_n, mm_n)
    want = F(1 + 1 + 0 + 2 * m + 2 * n + 1)
    assert constant_part(comm) == want


# -- composite two-unit intertwiners ----------------------------------------------------------

def test_two_unit_composites_intertwine():
    # A+ At+ shifts l1 by -2; A+ At- shifts l0 by -2; both stay exact
    from octasphere.operators import graded_product
    x_plus = graded_product(graded("A+"), graded("At+"))
    assert x_plus.shift == (0, -2, 0)
    y_plus = graded_product(graded("A+"), graded("At-"))
    assert y_plus.shift == (-2, 0, 0)
    for op in (x_plus, y_plus):
        for ell in (pv(1, 1, 0), pv(2, -1, 3), pv(0, 2, 1)):
            assert is_exact_intertwiner(op, ell)
