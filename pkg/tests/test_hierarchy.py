"""States, spectra, Jacobi closed forms, ladders and representation lattices."""

from fractions import Fraction

import pytest

from octasphere.diffop import apply, build_hamiltonian, pv
from octasphere.hierarchy import (closed_form_state, energy,
                                  ground_state, iso_energy_decomposition,
                                  iur_lattice, iur_states, jacobi, jacobi_eval,
                                  ladder_build, lattice_to_csv, make_state,
                                  phi2_closed_form, proportionality,
                                  so6_dimension, state_to_obj)
from octasphere.trigpoly import TrigPoly, is_zero

F = Fraction
HALF = F(1, 2)


def mono(c, a, b, cc, d):
    return TrigPoly.monomial(c, (F(a), F(b), F(cc), F(d)))


# -- jacobi ------------------------------------------------------------------------

def test_jacobi_p0_is_one():
    assert jacobi(0, F(3, 2), F(7)).coeffs == (F(1),)


def test_jacobi_p1_formula():
    for a, b in ((F(2), F(1)), (F(1, 2), F(3)), (F(0), F(0))):
        jp = jacobi(1, a, b)
        assert jp.coeffs == ((a - b) / 2, (a + b + 2) / 2)


def test_jacobi_p2_legendre():
    assert jacobi(2, 0, 0).coeffs == (F(-1, 2), F(0), F(3, 2))


def test_jacobi_three_term_consistency():
    # recurrence output matches the hypergeometric series at sample points
    jp = jacobi(4, F(1, 2), F(3))
    # P_n^{(a,b)}(1) = C(n+a, n)
    assert jacobi_eval(jp, F(1)) == F(9 * 7 * 5 * 3, 2 ** 4 * 24)


def test_jacobi_negative_degree_rejected():
    with pytest.raises(ValueError):
        jacobi(-1, 0, 0)


# -- ground states --------------------------------------------------------------------

def test_u3_ground_state_2_1():
    st = ground_state("u3", (2, 1))
    assert st.wavefunction == mono(1, F(5, 2), HALF, 3, F(3, 2))
    assert st.energy == F(99, 4)
    assert tuple(st.params) == (2, 0, 1)


def test_so4_ground_state():
    st = ground_state("so4", (2,))
    assert st.wavefunction == mono(1, HALF, F(5, 2), 0, 0)
    assert st.energy == 9 and st.onedim


def test_so6_odd_ground_state():
    st = ground_state("so6_odd", (1,))
    assert st.wavefunction == mono(1, HALF, HALF, 1, F(3, 2))
    assert st.energy == F(35, 4)


def test_so6_parity_enforced():
    with pytest.raises(ValueError):
        ground_state("so6_even", (1,))
    with pytest.raises(ValueError):
        ground_state("so6_odd", (2,))


def test_negative_labels_rejected():
    with pytest.raises(ValueError):
        ground_state("u3", (-1, 0))


def test_make_state_rejects_wrong_energy():
    st = ground_state("u3", (0, 0))
    with pytest.raises(ValueError):
        make_state(st.params, {}, st.wavefunction, st.energy + 1)


# -- ladders -----------------------------------------------------------------------------

def test_raise_ground_one_step():
    # f0 at (l0+1, l1+1) raised by A+ is an eigenstate at (l0, l1) with
    # eigenvalue (l0+l1+3)^2
    l0, l1 = 1, 2
    st = ground_state("phi1_1d", (l0, l1, 1))
    assert tuple(st.params) == (l0 + 1, l1 + 1, 0)
    up = ladder_build(st, ["A+"])
    assert up is not None
    assert tuple(up.params) == (l0, l1, 0)
    assert up.energy == (l0 + l1 + 3) ** 2


def test_lowering_annihilates_fundamental():
    st = ground_state("u3", (1, 2))
    assert ladder_build(st, ["A-"]) is None


def test_empty_path_is_identity():
    st = ground_state("u3", (0, 1))
    assert ladder_build(st, []) is st


# -- closed forms ---------------------------------------------------------------------------

def test_phi1_excited_m0_is_ground_monomial():
    st = closed_form_state("phi1_excited", (1, 1, 0))
    assert st.wavefunction == mono(1, F(3, 2), F(3, 2), 0, 0)


def test_phi1_excited_m1_two_classes():
    st = closed_form_state("phi1_excited", (1, 1, 1))
    assert len(list(st.wavefunction.terms())) > 1
    assert st.energy == 25


def test_separated_2d_energy():
    st = closed_form_state("separated_2d", ((0, 0, 0), 1, 1))
    assert st.energy == energy("E_mn", ell=(0, 0, 0), m=1, n=1)


def test_printed_phi2_jacobi_parameter_fails():
    f_part = mono(1, HALF, HALF, 0, 0)
    bad = f_part * phi2_closed_form((0, 0, 0), 0, 1, printed_parameter=True)
    h = build_hamiltonian(pv(0, 0, 0))
    e = energy("E_mn", ell=(0, 0, 0), m=0, n=1)
    assert not is_zero(apply(h, bad) - bad.scale(e))


# -- energies ---------------------------------------------------------------------------------

def test_energy_values():
    assert energy("lambda_m", l0=1, l1=2, m=0) == 16
    assert energy("E_mn", ell=(0, 0, 0), m=0, n=0) == F(15, 4)
    assert energy("E_q", q=1) == F(35, 4)


def test_energy_degeneracy_across_m_n():
    vals = {energy("E_mn", ell=(0, 0, 0), m=m, n=q - m)
            for q in range(5) for m in range(q + 1)}
    assert len(vals) == 5  # one energy per q


def test_ladder_jacobi_equivalence_sample():
    for l0, l1, m in ((0, 0, 2), (1, 2, 3), (3, 1, 1)):
        start = ground_state("phi1_1d", (l0, l1, m))
        laddered = ladder_build(start, ["A+"] * m)
        closed = closed_form_state("phi1_excited", (l0, l1, m))
        c = proportionality(laddered.wavefunction, closed.wavefunction)
        assert c is not None and c != 0


def test_phi2_ladder_jacobi_equivalence():
    from octasphere.diffop import apply as apply_op
    from octasphere.operators import build_first_order
    from octasphere.hierarchy import _monomial_state
    l0, l1, l2, m = 1, 0, 1, 0
    root = l0 + l1 + 2 * m + 1
    for n in range(1, 4):
        g = _monomial_state(1, 0, 0, root + n, l2 + n + HALF)  # chain ground at level n
        for k in range(n - 1, -1, -1):
            g = apply_op(build_first_order("M", "+", pv(l0, l1, l2), m=m, n=k), g)
        closed = phi2_closed_form((l0, l1, l2), m, n)
        c = proportionality(g, closed)
        assert c is not None and c != 0, n


# -- lattices -----------------------------------------------------------------------------------

def test_u3_lattice_1_0():
    lat = iur_lattice("u3", (1, 0))
    assert lat.dimension == 3
    assert lat.points == (((0, -1, 0), 1), ((0, 0, -1), 1), ((1, 0, 0), 1))


def test_u3_lattice_adjoint_center_multiplicity():
    lat = iur_lattice("u3", (1, 1))
    assert lat.dimension == 8
    assert dict(lat.points)[(0, 0, 0)] == 2


def test_u3_lattice_on_plane():
    for m, n in ((2, 1), (0, 3)):
        lat = iur_lattice("u3", (m, n))
        assert all(p[0] - p[1] - p[2] == m - n for p, _ in lat.points)


def test_so4_lattice_square():
    lat = iur_lattice("so4", (3,))
    assert lat.dimension == 16 and len(lat.points) == 16


def test_so6_lattice_q1_q3():
    lat1 = iur_lattice("so6", (1,))
    assert lat1.dimension == 6 and len(lat1.points) == 6
    lat3 = iur_lattice("so6", (3,))
    assert lat3.dimension == 50 and len(lat3.points) == 44
    outer = [p for p, mult in lat3.points if abs(p[0]) + abs(p[1]) + abs(p[2]) == 3]
    inner = [(p, mult) for p, mult in lat3.points if abs(p[0]) + abs(p[1]) + abs(p[2]) == 1]
    assert len(outer) == 38 and len(inner) == 6
    assert all(mult == 2 for _, mult in inner)


def test_so6_shell_parity():
    lat = iur_lattice("so6", (4,))
    for p, _ in lat.points:
        s = abs(p[0]) + abs(p[1]) + abs(p[2])
        assert s <= 4 and s % 2 == 0


def test_dimension_cross_sum_up_to_q8():
    for q in range(9):
        dec = iso_energy_decomposition(q)
        assert sum(r["dimension"] for r in dec) == so6_dimension(q)
        assert iur_lattice("so6", (q,)).dimension == so6_dimension(q)


def test_negative_lattice_labels_rejected():
    with pytest.raises(ValueError):
        iur_lattice("so6", (-1,))
    with pytest.raises(ValueError):
        iso_energy_decomposition(-2)


# -- laddered IUR state families -------------------------------------------------------------

def test_u3_states_1_0():
    sts = iur_states("u3", (1, 0))
    assert len(sts) == 3
    assert {s.energy for s in sts} == {F(35, 4)}


def test_so6_states_q1():
    sts = iur_states("so6", (1,))
    assert len(sts) == 6
    assert {s.energy for s in sts} == {F(35, 4)}
    assert {tuple(int(x) for x in s.params) for s in sts} == {
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}


def test_u3_states_adjoint_has_two_at_center():
    sts = iur_states("u3", (1, 1))
    center = [s for s in sts if tuple(int(x) for x in s.params) == (0, 0, 0)]
    assert len(center) == 2


# -- serialization -----------------------------------------------------------------------------

def test_state_json_schema():
    st = ground_state("u3", (1, 0))
    obj = state_to_obj(st)
    assert obj["params"] == ["1/1", "0/1", "0/1"]
    assert obj["energy"] == "35/4"
    assert obj["labels"] == {"m": 1, "n": 0}
    assert obj["wavefunction"]["terms"][0]["coeff"] == "1/1"


def test_lattice_csv_format():
    csv_text = lattice_to_csv(iur_lattice("so6", (1,)))
    lines = csv_text.strip().splitlines()
    assert lines[0] == "l0,l1,l2,multiplicity,shell"
    assert len(lines) == 7
