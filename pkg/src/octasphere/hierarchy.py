"""Eigenstates, exact spectra and representation lattices of the hierarchy.

Everything here is exact: StateRecords verify their eigenvalue equation at
construction, the Jacobi closed forms are expanded over the monomial algebra,
and the lattices (u(3) triangles/hexagons, so(4) squares, so(6) octahedra)
carry integer multiplicities that are cross-checked against the closed
dimension formulas.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .diffop import (DiffOp, ParamVector, apply, build_hamiltonian,
                     build_phi1_block, pv)
from .operators import GradedOp, graded
from .trigpoly import (TrigPoly, coordinate_vectors, frac_to_str, is_zero,
                       to_obj)

F0 = Fraction(0)
F1 = Fraction(1)
HALF = Fraction(1, 2)


# -- Jacobi polynomials --------------------------------------------------------

@dataclass(frozen=True)
class JacobiPoly:
    """Exact Jacobi polynomial P_n^(alpha,beta); coeffs ascending in x."""
    n: int
    alpha: Fraction
    beta: Fraction
    coeffs: tuple[Fraction, ...]


def _poly_mul_affine(p: list[Fraction], a: Fraction, b: Fraction) -> list[Fraction]:
    # p(x) * (a + b x)
    out = [F0] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] += a * c
        out[i + 1] += b * c
    return out


def jacobi(n: int, alpha, beta) -> JacobiPoly:
    """Exact coefficients via the standard three-term recurrence."""
    if n < 0:
        raise ValueError("jacobi degree must be >= 0")
    a, b = Fraction(alpha), Fraction(beta)
    p0 = [F1]
    if n == 0:
        return JacobiPoly(0, a, b, tuple(p0))
    p1 = [(a - b) / 2, (a + b + 2) / 2]
    if n == 1:
        return JacobiPoly(1, a, b, tuple(p1))
    for k in range(2, n + 1):
        c1 = 2 * k * (k + a + b) * (2 * k + a + b - 2)
        c2 = (2 * k + a + b - 1) * (a * a - b * b)
        c3 = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2)
        c4 = 2 * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        nxt = _poly_mul_affine(p1, c2, c3)
        nxt = [x / c1 for x in nxt]
        for i, c in enumerate(p0):
            nxt[i] -= c4 * c / c1
        p0, p1 = p1, nxt
    return JacobiPoly(n, a, b, tuple(p1))


def jacobi_eval(jp: JacobiPoly, x: Fraction) -> Fraction:
    acc = F0
    for c in reversed(jp.coeffs):
        acc = acc * x + c
    return acc


def jacobi_in_cos2(jp: JacobiPoly, var: int) -> TrigPoly:
    """Substitute x = cos(2 phi) = cos^2 phi - sin^2 phi in the given angle."""
    if var == 1:
        x = TrigPoly.monomial(1, (2, F0, F0, F0)) + TrigPoly.monomial(-1, (F0, 2, F0, F0))
    else:
        x = TrigPoly.monomial(1, (F0, F0, 2, F0)) + TrigPoly.monomial(-1, (F0, F0, F0, 2))
    out = TrigPoly.zero()
    power = TrigPoly.constant(1)
    for c in jp.coeffs:
        out = out + power.scale(c)
        power = power * x
    return out


# -- energies --------------------------------------------------------------------

def energy(kind: str, **params) -> Fraction:
    """Exact spectral values: lambda_m, E_mn, or E_q."""
    if kind == "lambda_m":
        l0, l1, m = Fraction(params["l0"]), Fraction(params["l1"]), params["m"]
        if m < 0:
            raise ValueError("m must be >= 0")
        return (l0 + l1 + 2 * m + 1) ** 2
    if kind == "E_mn":
        ell = pv(*params["ell"])
        m, n = params["m"], params["n"]
        if m < 0 or n < 0:
            raise ValueError("quantum numbers must be >= 0")
        s = ell[0] + ell[1] + ell[2] + 2 * n + 2 * m
        return (s + Fraction(3, 2)) * (s + Fraction(5, 2))
    if kind == "E_q":
        q = params["q"]
        if q < 0:
            raise ValueError("q must be >= 0")
        return (q + Fraction(3, 2)) * (q + Fraction(5, 2))
    raise ValueError(f"unknown energy kind {kind!r}")


# -- state records ----------------------------------------------------------------

@dataclass(frozen=True)
class StateRecord:
    """An exact eigenstate: parameters, quantum labels, wavefunction, energy.

    onedim records are phi1-hierarchy states checked against the phi1 block
    instead of the full Hamiltonian.
    """
    params: ParamVector
    labels: dict
    wavefunction: TrigPoly
    energy: Fraction
    onedim: bool = False

    def hamiltonian(self) -> DiffOp:
        if self.onedim:
            return build_phi1_block(self.params[0], self.params[1])
        return build_hamiltonian(self.params)


def make_state(params, labels, wavefunction: TrigPoly, energy_val,
               onedim: bool = False) -> StateRecord:
    """Build a StateRecord, verifying H psi = E psi exactly."""
    params = pv(*params)
    energy_val = Fraction(energy_val)
    if not wavefunction:
        raise ValueError("state wavefunction must be nonzero")
    rec = StateRecord(params, dict(labels), wavefunction, energy_val, onedim)
    resid = apply(rec.hamiltonian(), wavefunction) - wavefunction.scale(energy_val)
    if not is_zero(resid):
        raise ValueError(f"eigenvalue equation fails at {params} with E={energy_val}")
    return rec


def _monomial_state(coeff, a, b, c, d) -> TrigPoly:
    return TrigPoly.monomial(coeff, (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))


def _check_annihilated(op_name: str, ell, psi: TrigPoly) -> None:
    op = graded(op_name, "corrected")
    if not is_zero(apply(op.at(pv(*ell)), psi)):
        raise ValueError(f"{op_name} does not annihilate the candidate state at {ell}")


def ground_state(kind: str, params) -> StateRecord:
    """Fundamental (lowest-weight) states, annihilation-verified at construction.

    kinds: phi1_1d (l0, l1, m) -- phi1 chain member, a one-variable record;
           u3 (m, n)           -- lowest weight of the u(3) IUR (m, n);
           so4 (n,)            -- lowest weight of the so(4) square, one-variable;
           so6_even / so6_odd (n,) -- lowest weight of the so(6) IUR q = n.
    """
    if kind == "phi1_1d":
        l0, l1, m = params
        if m < 0:
            raise ValueError("m must be >= 0")
        l0, l1 = Fraction(l0), Fraction(l1)
        psi = _monomial_state(1, l0 + m + HALF, l1 + m + HALF, 0, 0)
        lam = energy("lambda_m", l0=l0, l1=l1, m=m)
        _check_annihilated("A-", (l0 + m, l1 + m, 0), psi)
        return make_state((l0 + m, l1 + m, 0), {"m": m, "su2_j": (l0 + l1 + 2 * m) / 2},
                          psi, lam, onedim=True)
    if kind == "u3":
        m, n = params
        if m < 0 or n < 0:
            raise ValueError("labels must be >= 0")
        ell = pv(m, 0, n)
        psi = _monomial_state(1, m + HALF, HALF, m + 1, n + HALF)
        e = energy("E_q", q=m + n)
        _check_annihilated("A-", ell, psi)
        _check_annihilated("C-", ell, psi)
        return make_state(ell, {"m": m, "n": n}, psi, e)
    if kind == "so4":
        (n,) = params if isinstance(params, (tuple, list)) else (params,)
        if n < 0:
            raise ValueError("n must be >= 0")
        psi = _monomial_state(1, HALF, n + HALF, 0, 0)
        ell = pv(0, n, 0)
        _check_annihilated("A-", ell, psi)
        _check_annihilated("At-", ell, psi)
        return make_state(ell, {"n": n, "su2_j": Fraction(n, 2)}, psi,
                          Fraction((n + 1) ** 2), onedim=True)
    if kind in ("so6_even", "so6_odd"):
        (n,) = params if isinstance(params, (tuple, list)) else (params,)
        if n < 0:
            raise ValueError("n must be >= 0")
        want_odd = kind == "so6_odd"
        if (n % 2 == 1) != want_odd:
            raise ValueError(f"{kind} requires n of matching parity, got {n}")
        ell = pv(0, 0, n)
        psi = _monomial_state(1, HALF, HALF, 1, n + HALF)
        e = energy("E_q", q=n)
        for nm in ("A-", "C-", "At-"):
            _check_annihilated(nm, ell, psi)
        return make_state(ell, {"q": n}, psi, e)
    raise ValueError(f"unknown ground-state kind {kind!r}")


def ladder_build(start: StateRecord, path: Sequence[str | GradedOp]) -> StateRecord | None:
    """Apply graded operators left-to-right with parameter bookkeeping.

    Returns None when the state is annihilated along the way; otherwise the
    resulting StateRecord at the shifted sector (energy rechecked exactly).
    """
    state = start
    for step in path:
        op = graded(step, "corrected") if isinstance(step, str) else step
        psi = apply(op.scaled_at(state.params), state.wavefunction)
        if is_zero(psi):
            return None
        target = tuple(e + s for e, s in zip(state.params, op.shift))
        state = make_state(target, state.labels, psi, state.energy, onedim=state.onedim)
    return state


def closed_form_state(kind: str, params) -> StateRecord:
    """Jacobi-polynomial closed forms.

    phi1_excited (l0, l1, m): cos^(l0+1/2) sin^(l1+1/2) P_m^(l1,l0)(cos 2 phi1);
    separated_2d (ell, m, n): product of the phi1 form and the phi2 form with
    Jacobi parameters (l2+1/2, l0+l1+2m+1).
    """
    if kind == "phi1_excited":
        l0, l1, m = params
        if m < 0:
            raise ValueError("m must be >= 0")
        l0, l1 = Fraction(l0), Fraction(l1)
        pref = _monomial_state(1, l0 + HALF, l1 + HALF, 0, 0)
        psi = pref * jacobi_in_cos2(jacobi(m, l1, l0), var=1)
        lam = energy("lambda_m", l0=l0, l1=l1, m=m)
        return make_state((l0, l1, 0), {"m": m}, psi, lam, onedim=True)
    if kind == "separated_2d":
        ell, m, n = params
        ell = pv(*ell)
        if m < 0 or n < 0:
            raise ValueError("quantum numbers must be >= 0")
        l0, l1, l2 = ell
        f_part = _monomial_state(1, l0 + HALF, l1 + HALF, 0, 0) \
            * jacobi_in_cos2(jacobi(m, l1, l0), var=1)
        # phi2 Jacobi parameters (l2, l0+l1+2m+1): the parameter printed as
        # l2 + 1/2 fails the eigenvalue equation for n >= 1 (see phi2_closed_form)
        psi = f_part * phi2_closed_form(ell, m, n)
        e = energy("E_mn", ell=ell, m=m, n=n)
        return make_state(ell, {"m": m, "n": n}, psi, e)
    raise ValueError(f"unknown closed-form kind {kind!r}")


def phi2_closed_form(ell, m: int, n: int, printed_parameter: bool = False) -> TrigPoly:
    """phi2 factor cos^(l0+l1+2m+1) sin^(l2+1/2) P_n^(alpha, l0+l1+2m+1)(cos 2 phi2).

    alpha = l2 makes this an exact eigenfunction factor; printed_parameter
    requests the printed alpha = l2 + 1/2 (kept for the errata audit, where it
    is shown to fail for n >= 1).
    """
    l0, l1, l2 = pv(*ell)
    alpha = l2 + HALF if printed_parameter else l2
    root = l0 + l1 + 2 * m + 1
    pref = _monomial_state(1, 0, 0, root, l2 + HALF)
    return pref * jacobi_in_cos2(jacobi(n, alpha, root), var=2)


def proportionality(p: TrigPoly, q: TrigPoly) -> Fraction | None:
    """c with p == c q as functions, or None (q nonzero)."""
    vp, vq = coordinate_vectors([p, q])
    key, v = next(((k, v) for k, v in vq.items() if v != 0), (None, None))
    if key is None:
        return None
    c = vp.get(key, F0) / v
    return c if is_zero(p - q.scale(c)) else None


# -- representation lattices ------------------------------------------------------

@dataclass(frozen=True)
class IurLattice:
    algebra: str
    label: tuple
    points: tuple  # ((l0, l1, l2), multiplicity), sorted
    dimension: int

    def multiplicity_sum(self) -> int:
        return sum(m for _, m in self.points)


def u3_dimension(m: int, n: int) -> int:
    return (m + 1) * (n + 1) * (m + n + 2) // 2


def so6_dimension(q: int) -> int:
    return (q + 1) * (q + 2) ** 2 * (q + 3) // 12


def iur_lattice(algebra: str, label) -> IurLattice:
    """Parameter-space support of one IUR with multiplicities.

    u3 (m, n): Gelfand-Tsetlin enumeration of the weight diagram mapped onto
    the plane D = m - n; so4 (n,): the (n+1)^2 square; so6 (q,): nested
    octahedral shells |l0|+|l1|+|l2| = q - 2t with multiplicity t + 1.
    """
    if algebra == "u3":
        m, n = label
        if m < 0 or n < 0:
            raise ValueError("u3 labels must be >= 0")
        counts: dict[tuple, int] = {}
        lam1, lam2 = m + n, m
        for a in range(lam2, lam1 + 1):
            for b in range(0, lam2 + 1):
                for c in range(b, a + 1):
                    w = (c, a + b - c, lam1 + lam2 - a - b)
                    pt = (m - w[0], w[1] - m, w[2] - m)
                    counts[pt] = counts.get(pt, 0) + 1
        points = tuple(sorted((pt, mult) for pt, mult in counts.items()))
        dim = sum(counts.values())
        assert dim == u3_dimension(m, n)
        return IurLattice("u3", (m, n), points, dim)
    if algebra == "so4":
        (n,) = label if isinstance(label, (tuple, list)) else (label,)
        if n < 0:
            raise ValueError("so4 label must be >= 0")
        points = tuple(sorted(((b - a, n - a - b, 0), 1)
                              for a in range(n + 1) for b in range(n + 1)))
        return IurLattice("so4", (n,), points, (n + 1) ** 2)
    if algebra == "so6":
        (q,) = label if isinstance(label, (tuple, list)) else (label,)
        if q < 0:
            raise ValueError("so6 label must be >= 0")
        counts = {}
        for t in range(q // 2 + 1):
            s = q - 2 * t
            for l0 in range(-s, s + 1):
                for l1 in range(-(s - abs(l0)), s - abs(l0) + 1):
                    l2a = s - abs(l0) - abs(l1)
                    for l2 in ({l2a, -l2a} if l2a else {0}):
                        counts[(l0, l1, l2)] = t + 1
        points = tuple(sorted(counts.items()))
        dim = sum(counts.values())
        assert dim == so6_dimension(q)
        return IurLattice("so6", (q,), points, dim)
    raise ValueError(f"unknown algebra {algebra!r}")


def iso_energy_decomposition(q: int) -> list[dict]:
    """All u(3) labels (m, n) with m + n = q and their dimensions."""
    if q < 0:
        raise ValueError("q must be >= 0")
    out = []
    for m in range(q + 1):
        n = q - m
        out.append({"m": m, "n": n, "dimension": (m + 1) * (n + 1) * (q + 2) // 2})
    assert sum(r["dimension"] for r in out) == so6_dimension(q)
    return out


# -- state families over a lattice -------------------------------------------------

U3_RAISING = ["A+", "B+", "C+"]
SO6_RAISING = ["A+", "B+", "C+", "At+", "Bt+", "Ct+"]


def _independent_add(states: list[TrigPoly], cand: TrigPoly) -> bool:
    """True (and append) if cand is exactly independent of the collected states."""
    vecs = coordinate_vectors(states + [cand])
    keys = sorted({k for v in vecs for k in v})
    rows = [[v.get(k, F0) for k in keys] for v in vecs]
    if linalg.rank_exact(rows) > linalg.rank_exact(rows[:-1]):
        states.append(cand)
        return True
    return False


def iur_states(algebra: str, label, raising: Iterable[str] | None = None) -> list[StateRecord]:
    """Ladder out a whole IUR from its fundamental state.

    States are collected per lattice point; at points with multiplicity > 1 an
    exactly independent set of the required size is kept.  The breadth-first
    sweep applies the raising operators to every newly added state until the
    lattice is saturated (counts verified against the IUR multiplicities).
    """
    if algebra == "u3":
        lattice = iur_lattice("u3", label)
        fund = ground_state("u3", label)
        ops = raising or U3_RAISING
    elif algebra == "so4":
        lattice = iur_lattice("so4", label)
        fund = ground_state("so4", label)
        ops = raising or ["A+", "At+"]
    elif algebra == "so6":
        lattice = iur_lattice("so6", label)
        (q,) = label if isinstance(label, (tuple, list)) else (label,)
        fund = ground_state("so6_odd" if q % 2 else "so6_even", (q,))
        ops = raising or SO6_RAISING
    else:
        raise ValueError(f"unknown algebra {algebra!r}")

    want = {pt: mult for pt, mult in lattice.points}
    have: dict[tuple, list[TrigPoly]] = {tuple(fund.params): [fund.wavefunction]}
    records: dict[tuple, list[StateRecord]] = {tuple(fund.params): [fund]}
    frontier = [fund]
    while frontier:
        new_frontier = []
        for st in frontier:
            for name in ops:
                nxt = ladder_build(st, [name])
                if nxt is None:
                    continue
                pt = tuple(nxt.params)
                if pt not in want:
                    raise AssertionError(f"ladder left the lattice at {pt}")
                bucket = have.setdefault(pt, [])
                if len(bucket) >= want[pt]:
                    continue
                if _independent_add(bucket, nxt.wavefunction):
                    records.setdefault(pt, []).append(nxt)
                    new_frontier.append(nxt)
        frontier = new_frontier
    got = {pt: len(v) for pt, v in have.items()}
    if got != want:
        missing = {pt: (want[pt], got.get(pt, 0)) for pt in want if got.get(pt) != want[pt]}
        raise AssertionError(f"lattice not saturated: want/got {missing}")
    out = []
    for pt in sorted(records):
        out.extend(records[pt])
    return out


# -- serialization ------------------------------------------------------------------

def state_to_obj(s: StateRecord) -> dict:
    labels = {k: (frac_to_str(v) if isinstance(v, Fraction) else v)
              for k, v in sorted(s.labels.items())}
    return {"params": [frac_to_str(x) for x in s.params],
            "labels": labels,
            "energy": frac_to_str(s.energy),
            "wavefunction": to_obj(s.wavefunction)}


def lattice_to_obj(lat: IurLattice) -> dict:
    return {"algebra": lat.algebra,
            "label": list(lat.label),
            "dimension": lat.dimension,
            "points": [{"l0": p[0], "l1": p[1], "l2": p[2], "multiplicity": m,
                        "shell": abs(p[0]) + abs(p[1]) + abs(p[2])}
                       for p, m in lat.points]}


def lattice_to_csv(lat: IurLattice) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["l0", "l1", "l2", "multiplicity", "shell"])
    for p, m in lat.points:
        w.writerow([p[0], p[1], p[2], m, abs(p[0]) + abs(p[1]) + abs(p[2])])
    return buf.getvalue()
