"""Verification suites: every identity the engine certifies, plus the errata.

Each suite returns a deterministic report dict; corrected operators are used
for the algebraic content and every difference from the printed formulas is
listed under "paper_deltas" with exact evidence.  Sector sweeps honor the
OCTA_THREADS environment variable.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .diffop import DiffOp, apply, build_hamiltonian, is_zero_op, pv
from .hierarchy import closed_form_state, energy, ground_state
from .inner import (adjoint_residual, inner, mono_inner, mono_inner_quadrature,
                    norm, numeric_oracle_check)
from .operators import (LADDER_NAMES, TILDE_NAMES, SO6_CONSTANT,
                        SO6_CONSTANT_PRINTED, casimir_identity, constant_part,
                        graded, graded_commutator, intertwine_residual,
                        is_exact_intertwiner, multiplier_ansatz,
                        printed_delta_report, solve_multiplier, structure_table)
from .superpotential import (family_multiplier, kinetic_rotation_check,
                             riccati_check, riccati_lambda_fit,
                             simultaneous_superpotentials)
from .trigpoly import TrigPoly, TrigTerm, frac_to_str, is_zero

SUITE_NAMES = ["algebra", "intertwine", "casimir", "riccati", "hermiticity"]


def _sector_box(r: int):
    return [pv(i, j, k) for i in range(-r, r + 1)
            for j in range(-r, r + 1) for k in range(-r, r + 1)]


def _map_sectors(fn, sectors):
    threads = int(os.environ.get("OCTA_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, sectors))
    return [fn(s) for s in sectors]


def _check(name: str, passed: bool, **detail) -> dict:
    return {"name": name, "passed": bool(passed), **detail}


# -- intertwine ------------------------------------------------------------------

def suite_intertwine(rng: int) -> dict:
    checks = []
    box = _sector_box(rng)

    for name in LADDER_NAMES + TILDE_NAMES:
        op = graded(name, "corrected")
        bad = [s for s, ok in zip(box, _map_sectors(
            lambda ell, op=op: is_exact_intertwiner(op, ell), box)) if not ok]
        checks.append(_check(f"corrected {name} intertwines exactly on box ±{rng}",
                             not bad, failures=[[str(x) for x in s] for s in bad[:3]]))

    # printed audit: B/C printed superscripts intertwine the wrong way
    for name in ("B-", "B+", "C-", "C+"):
        printed = graded(name, "printed")
        ell = pv(1, 1, 1)
        resid = intertwine_residual(printed, ell)
        checks.append(_check(f"printed {name} fails its claimed direction at (1,1,1)",
                             not is_zero_op(resid)))

    # the multiplier solver reproduces every corrected multiplier from scratch
    for fam, delta in (("A", (1, 1, 0)), ("B", (1, 0, 1)), ("C", (0, -1, 1))):
        for ell in (pv(1, 2, 0), pv(1, 1, 1), pv(2, 0, 1)):
            op = graded(fam + "-", "corrected")
            vector = DiffOp({k: c for k, c in op.at(ell).items() if k != (0, 0)})
            got = solve_multiplier(vector, delta, multiplier_ansatz(fam), ell)
            want = family_multiplier(fam, ell)
            checks.append(_check(
                f"solve_multiplier rebuilds corrected {fam}- multiplier at {tuple(map(str, ell))}",
                is_zero(got - want)))

    # fundamental-state annihilations, m, n <= 4
    ann_ok = True
    for m in range(5):
        for n in range(5):
            st = ground_state("u3", (m, n))
            for nm in ("A-", "C-"):
                op = graded(nm, "corrected")
                if not is_zero(apply(op.at(st.params), st.wavefunction)):
                    ann_ok = False
    checks.append(_check("A- and C- annihilate u(3) fundamental states, m,n <= 4", ann_ok))

    deltas = printed_delta_report()
    return _report("intertwine", rng, checks, deltas)


# -- algebra ---------------------------------------------------------------------

_PRINTED_TABLE_CONFLICTS = [
    {"entry": "[A-,A+]",
     "printed": "-2A in the su(2) commutator display but +2A in the full table",
     "computed": "-2A",
     "issue": "sign inconsistency between the two printed sources"},
    {"entry": "[A+,C+]",
     "printed": "listed twice, as -B+ and as B-",
     "computed": "-B+",
     "issue": "duplicated table row with conflicting right-hand sides"},
    {"entry": "[B-,C+]",
     "printed": "C+/2",
     "computed": "A-",
     "issue": "printed right-hand side has the wrong generator"},
]


def suite_algebra(rng: int) -> dict:
    checks = []
    box_r = min(rng, 2)
    st = structure_table(box=box_r)
    table = st["table"]
    checks.append(_check(f"pairwise commutators close over box ±{box_r}",
                         not st["unmatched"], unmatched=st["unmatched"]))

    for base in ("A", "B", "C"):
        got = table.get(f"{base}-,{base}+")
        checks.append(_check(f"[{base}-,{base}+] = -2{base}",
                             got == [("-2", base)], got=got))

    for key, want in (("A-,C-", [("1", "B-")]), ("A+,C+", [("-1", "B+")]),
                      ("A+,B-", [("1", "C-")]), ("A-,B+", [("-1", "C+")]),
                      ("B+,C-", [("-1", "A+")]), ("B-,C+", [("1", "A-")])):
        checks.append(_check(f"[{key}] = {want[0][0]}*{want[0][1]}",
                             table.get(key) == want, got=table.get(key)))

    # antisymmetry: recompute a sample of swapped pairs explicitly
    anti_ok = True
    lads = {n: graded(n) for n in LADDER_NAMES}
    for xn, yn in (("A-", "B+"), ("B-", "C+"), ("A+", "C+")):
        for ell in (pv(1, 0, 1), pv(-1, 2, 0)):
            xy, _ = graded_commutator(lads[xn], lads[yn], ell)
            yx, _ = graded_commutator(lads[yn], lads[xn], ell)
            if not is_zero_op(xy + yx):
                anti_ok = False
    checks.append(_check("antisymmetry on sampled pairs", anti_ok))

    # Jacobi identity on sampled triples
    from .operators import GradedOp
    def bracket(x, y):
        shift = tuple(a + b for a, b in zip(x.shift, y.shift))
        return GradedOp(name=f"[{x.name},{y.name}]", shift=shift, scale=Fraction(1),
                        factory=lambda ell: graded_commutator(x, y, ell)[0])
    jac_ok = True
    for tr in (("A-", "A+", "B-"), ("A-", "B+", "C-"), ("B-", "C+", "A+")):
        x, y, z = (lads[n] for n in tr)
        for ell in (pv(1, 1, 1), pv(0, 2, -1)):
            total = graded_commutator(bracket(x, y), z, ell)[0] \
                + graded_commutator(bracket(y, z), x, ell)[0] \
                + graded_commutator(bracket(z, x), y, ell)[0]
            if not is_zero_op(total):
                jac_ok = False
    checks.append(_check("Jacobi identity on sampled triples", jac_ok))

    # diagonal relation C = B - A
    from .operators import diagonal
    a, b, c = diagonal("A"), diagonal("B"), diagonal("C")
    cb_ok = all(c.value(ell) == b.value(ell) - a.value(ell) for ell in _sector_box(2))
    checks.append(_check("C = B - A on all sectors", cb_ok))

    deltas = [dict(d, evidence="exact sector-wise commutator computation")
              for d in _PRINTED_TABLE_CONFLICTS]
    rep = _report("algebra", rng, checks, deltas)
    rep["structure_constants"] = {k: [list(e) for e in v] for k, v in sorted(table.items())}
    return rep


# -- casimir ---------------------------------------------------------------------

def suite_casimir(rng: int) -> dict:
    checks = []
    box = _sector_box(min(rng, 2))
    for kind in ("su3_esp", "so4_ca", "so6_cass"):
        bad = [s for s, ok in zip(box, _map_sectors(
            lambda ell, kind=kind: is_zero_op(casimir_identity(kind, ell)), box)) if not ok]
        checks.append(_check(f"{kind} residual exactly zero on box", not bad,
                             failures=[[str(x) for x in s] for s in bad[:3]]))

    # printed so(6) constant leaves the exact residual (41/12 - 15/4) = -1/3
    resid = casimir_identity("so6_cass", pv(1, 1, 1), printed_constant=True)
    cval = constant_part(resid)
    checks.append(_check("printed so(6) constant 41/12 leaves residual -1/3 exactly",
                         cval == Fraction(-1, 3), got=str(cval)))

    deltas = [{
        "entry": "so(6) symmetrized casimir constant",
        "printed": frac_to_str(SO6_CONSTANT_PRINTED),
        "computed": frac_to_str(SO6_CONSTANT),
        "issue": "printed constant fails the exact identity; engine value makes the "
                 "residual vanish on every sector tested",
    }]
    return _report("casimir", rng, checks, deltas)


# -- riccati ---------------------------------------------------------------------

def suite_riccati(rng: int) -> dict:
    checks = []
    r = min(rng, 3)
    sectors = [pv(i, j, k) for i in range(r + 1) for j in range(r + 1) for k in range(r + 1)]
    lam_by_sector = {}
    ok = True
    for ell in sectors:
        resid, lam = riccati_check(ell)
        if resid:
            ok = False
        lam_by_sector[tuple(ell)] = lam
    checks.append(_check(f"riccati residual exactly zero on {{0..{r}}}^3", ok))

    fit = riccati_lambda_fit(sectors)
    checks.append(_check("lambda_l fits an exact polynomial of degree <= 2",
                         fit is not None,
                         closed_form={str(k): frac_to_str(v) for k, v in (fit or {}).items()}))

    kin = kinetic_rotation_check()
    checks.append(_check("vector fields rebuild the kinetic operator", kin["kinetic_identity"]))
    checks.append(_check("raising vector fields close so(3)", kin["so3_closure"],
                         table=kin["commutator_table"]))

    sim_ok = all(all(simultaneous_superpotentials(m, n).values())
                 for m in range(3) for n in range(3))
    checks.append(_check("one fundamental state feeds all three superpotentials (m,n <= 2)",
                         sim_ok))

    rep = _report("riccati", rng, checks, [])
    rep["lambda_samples"] = [{"sector": [str(x) for x in k], "lambda": frac_to_str(v),
                              "riccati_residual_zero": True}
                             for k, v in sorted(lam_by_sector.items())[:8]]
    return rep


# -- hermiticity / numerics ---------------------------------------------------------

def suite_hermiticity(rng: int) -> dict:
    checks = []

    # orthogonality of distinct-energy eigenstates of one Hamiltonian
    worst = 0.0
    states = [closed_form_state("separated_2d", ((0, 0, 0), m, n))
              for m in range(3) for n in range(3 - m)]
    for i, s1 in enumerate(states):
        for s2 in states[i + 1:]:
            if s1.energy == s2.energy:
                continue
            val = abs(inner(s1.wavefunction, s2.wavefunction))
            val /= norm(s1.wavefunction) * norm(s2.wavefunction)
            worst = max(worst, val)
    checks.append(_check("distinct-energy states orthogonal (<= 1e-10 normalized)",
                         worst <= 1e-10, worst=worst))

    # hermiticity of the corrected ladder pairs on admissible states
    worst = 0.0
    pairs = []
    for fam, delta in (("A", (1, 1, 0)), ("B", (1, 0, 1)), ("C", (0, -1, 1))):
        for ell in (pv(1, 1, 1), pv(2, 1, 0), pv(0, 1, 2)):
            target = tuple(e + d for e, d in zip(ell, delta))
            if min(target) < 0 or min(ell) < 0:
                continue
            f = closed_form_state("separated_2d", (ell, 1, 0)).wavefunction
            g = closed_form_state("separated_2d", (target, 0, 1)).wavefunction
            val = adjoint_residual(fam, ell, f, g) / (norm(f) * norm(g))
            pairs.append((fam, tuple(ell), val))
            worst = max(worst, val)
    checks.append(_check("adjoint residuals <= 1e-10 * scale", worst <= 1e-10, worst=worst))

    # beta-function integrals against adaptive quadrature
    rng_state = random.Random(20200515)
    worst = 0.0
    for _ in range(50):
        exps = []
        for _i in range(8):
            exps.append(Fraction(rng_state.randint(-1, 8), rng_state.choice((1, 2))))
        t1 = TrigTerm(Fraction(rng_state.randint(1, 5), rng_state.randint(1, 3)), tuple(exps[:4]))
        t2 = TrigTerm(Fraction(1), tuple(exps[4:]))
        try:
            exact = mono_inner(t1, t2)
        except ValueError:
            continue
        quadv = mono_inner_quadrature(t1, t2)
        worst = max(worst, abs(exact - quadv) / max(abs(exact), 1e-300))
    checks.append(_check("beta vs quadrature <= 1e-9 relative on random pairs",
                         worst <= 1e-9, worst=worst))

    # symbolic vs finite-difference application
    pts = [(0.4, 0.7), (0.9, 0.5), (1.1, 1.0)]
    q1 = ground_state("so6_odd", (1,))
    dev = numeric_oracle_check(build_hamiltonian(q1.params), q1.wavefunction, pts)
    checks.append(_check("finite-difference oracle on H (q=1 state) <= 1e-6", dev <= 1e-6,
                         deviation=dev))
    from .trigpoly import SIN1
    dev = numeric_oracle_check(DiffOp({(1, 0): TrigPoly.constant(1)}), SIN1, pts)
    checks.append(_check("finite-difference oracle on d/dphi1 <= 1e-7", dev <= 1e-7,
                         deviation=dev))

    return _report("hermiticity", rng, checks, [])


# -- assembly ------------------------------------------------------------------------

def spectral_delta_report() -> list[dict]:
    """Spectral/closed-form errata, each re-established by exact computation."""
    from .hierarchy import phi2_closed_form
    deltas = []

    # figure-caption energies vs the exact spectrum
    st1 = ground_state("so6_odd", (1,))
    st3 = ground_state("so6_odd", (3,))
    assert st1.energy == Fraction(35, 4) and st3.energy == Fraction(99, 4)
    deltas.append({
        "entry": "figure-1 caption energies",
        "printed": "E = 5/2 * 3/2 for q=1 and E = 7/2 * 5/2 for q=3",
        "computed": f"E_1 = {frac_to_str(st1.energy)} and E_3 = {frac_to_str(st3.energy)}",
        "issue": "caption energies conflict with E_q = (q+3/2)(q+5/2); engine values "
                 "from exact application of H to the fundamental states",
    })

    # phi2 Jacobi parameter in the separated closed form
    from .hierarchy import _monomial_state
    f_part = _monomial_state(1, Fraction(1, 2), Fraction(1, 2), 0, 0)
    bad = f_part * phi2_closed_form((0, 0, 0), 0, 1, printed_parameter=True)
    h = build_hamiltonian(pv(0, 0, 0))
    e = energy("E_mn", ell=(0, 0, 0), m=0, n=1)
    printed_fails = not is_zero(apply(h, bad) - bad.scale(e))
    good = closed_form_state("separated_2d", ((0, 0, 0), 0, 1))  # construction verifies
    assert printed_fails and good is not None
    deltas.append({
        "entry": "phi2 Jacobi parameter in the separated eigenfunctions",
        "printed": "P_n^(l2+1/2, l0+l1+2m+1)(cos 2 phi2)",
        "computed": "P_n^(l2, l0+l1+2m+1)(cos 2 phi2)",
        "issue": "printed first parameter fails the eigenvalue equation for n >= 1; "
                 "corrected value verified exactly and against the phi2 ladder",
    })

    # phi2 chain ground-state exponent (garbled in print)
    from .operators import build_first_order
    g0 = _monomial_state(1, 0, 0, 2, Fraction(5, 2))  # l=(0,0,1), m=0, n=1 reading
    mm = build_first_order("M", "-", pv(0, 0, 1), m=0, n=1)
    assert is_zero(apply(mm, g0))
    deltas.append({
        "entry": "phi2 chain fundamental-state cosine exponent",
        "printed": "cos^(l1+l0 phi2+2m+1) (garbled)",
        "computed": "cos^(l0+l1+2m+n+1)",
        "issue": "read as l0+l1+2m+n+1; verified by exact annihilation under the "
                 "chain lowering operator",
    })
    return deltas


def _report(suite: str, rng: int, checks: list, deltas: list) -> dict:
    return {"suite": suite, "range": rng,
            "passed": all(c["passed"] for c in checks),
            "checks": checks, "paper_deltas": deltas}


def run_suite(name: str, rng: int) -> dict:
    fns = {"algebra": suite_algebra, "intertwine": suite_intertwine,
           "casimir": suite_casimir, "riccati": suite_riccati,
           "hermiticity": suite_hermiticity}
    if name == "all":
        reports = [fns[n](rng) for n in SUITE_NAMES]
        deltas = [d for r in reports for d in r["paper_deltas"]] + spectral_delta_report()
        return {"suite": "all", "range": rng,
                "passed": all(r["passed"] for r in reports),
                "suites": reports, "paper_deltas": deltas}
    if name not in fns:
        raise ValueError(f"unknown suite {name!r}")
    return fns[name](rng)
