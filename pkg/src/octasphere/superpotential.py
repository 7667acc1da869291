"""Vector-field / multiplier decomposition of the first-order intertwiners.

The three corrected ladder pairs share one multiplier function per family
(X^± = x^± + w with x^- = -x^+), the multipliers are logarithmic actions of
the vector fields on fundamental states, and the squared multipliers rebuild
the potential up to a sector constant -- the two-variable analogue of the
Riccati equation.  This module computes all of that exactly and reports the
sign conventions it finds.
"""

from __future__ import annotations

from fractions import Fraction

from .diffop import DiffOp, KINETIC, apply, compose, hamiltonian_potential, is_zero_op, pv
from .operators import build_first_order, constant_value
from .trigpoly import TrigPoly, TrigTerm, divide_by_monomial, is_zero

F0 = Fraction(0)


def decompose(x: DiffOp) -> tuple[DiffOp, TrigPoly]:
    """Split an order-<=1 operator into (vector part, multiplier)."""
    if x.order() > 1:
        raise ValueError("decompose expects an operator of order <= 1")
    mult = x.coeff((0, 0))
    vector = DiffOp({k: c for k, c in x.items() if k != (0, 0)})
    return vector, mult


def superpot_from_state(vector: DiffOp, phi0: TrigTerm | TrigPoly) -> TrigPoly:
    """-(vector phi0) / phi0 for a single-monomial fundamental state."""
    if isinstance(phi0, TrigTerm):
        mono = phi0
        poly = TrigPoly.monomial(phi0.coeff, phi0.exps)
    else:
        terms = list(phi0.terms())
        if len(terms) != 1:
            raise ValueError("superpotential extraction needs a monomial state")
        mono = terms[0]
        poly = phi0
    if mono.coeff == 0:
        raise ValueError("zero state")
    return divide_by_monomial(apply(vector, poly), mono).scale(-1)


def family_vectors() -> dict[str, DiffOp]:
    """Vector parts x^+ of the corrected raising operators (sector independent)."""
    out = {}
    for name in ("A", "B", "C"):
        op = build_first_order(name, "+", pv(0, 0, 0), variant="corrected")
        out[name], _ = decompose(op)
    return out


def family_multiplier(name: str, ell) -> TrigPoly:
    """The shared multiplier w of the corrected pair X^± at a sector."""
    ell = pv(*ell)
    _, w_minus = decompose(build_first_order(name, "-", ell, variant="corrected"))
    _, w_plus = decompose(build_first_order(name, "+", ell, variant="corrected"))
    if not is_zero(w_minus - w_plus):
        raise AssertionError(f"{name} pair does not share a multiplier at {ell}")
    return w_minus


def riccati_check(ell) -> tuple[TrigPoly, Fraction]:
    """Potential identity V = a^2 + (x+ a) + ... + lambda, solved for lambda.

    Returns (residual, lambda): residual is exactly zero when the multiplier
    combination differs from the potential by a constant, and lambda is that
    constant.  A nonzero residual is the failure signal.
    """
    ell = pv(*ell)
    v = hamiltonian_potential(ell)
    vecs = family_vectors()
    comb = TrigPoly.zero()
    for name in ("A", "B", "C"):
        w = family_multiplier(name, ell)
        comb = comb + w * w + apply(vecs[name], w)
    diff = v - comb
    lam = constant_value(diff)
    if lam is None:
        return diff, F0
    return TrigPoly.zero(), lam


def riccati_lambda_fit(sectors) -> dict | None:
    """Exact degree-<=2 polynomial in (l0,l1,l2) through the computed lambdas."""
    from . import linalg
    vals = []
    for ell in sectors:
        resid, lam = riccati_check(ell)
        if resid:
            return None
        vals.append(lam)
    return linalg.fit_poly2([tuple(pv(*s)) for s in sectors], vals)


def kinetic_rotation_check() -> dict:
    """Exact checks that the vector parts rebuild the kinetic term and close so(3).

    Returns a report with the residual status of x+ x- summed over the three
    families against the kinetic operator, and the signed so(3) table of the
    raising vector fields.
    """
    vecs = family_vectors()
    total = DiffOp.zero()
    for name in ("A", "B", "C"):
        plus = vecs[name]
        minus = plus.scale(-1)
        total = total + compose(plus, minus)
    kinetic_ok = is_zero_op(total - KINETIC)

    names = ["A", "B", "C"]
    table = {}
    closure_ok = True
    for i, xn in enumerate(names):
        for yn in names[i + 1:]:
            comm = compose(vecs[xn], vecs[yn]) - compose(vecs[yn], vecs[xn])
            entry = None
            for zn in names:
                for sign in (1, -1):
                    if is_zero_op(comm - vecs[zn].scale(sign)):
                        entry = ("+" if sign > 0 else "-") + zn.lower() + "+"
                        break
                if entry:
                    break
            if entry is None:
                closure_ok = False
                entry = "unclosed"
            table[f"[{xn.lower()}+,{yn.lower()}+]"] = entry
    return {"kinetic_identity": kinetic_ok, "so3_closure": closure_ok,
            "commutator_table": table}


def simultaneous_superpotentials(m: int, n: int) -> dict:
    """Case (i): one u(3) fundamental state feeds all three multipliers.

    For the fundamental state at (m, 0, n) the logarithmic action of each
    lowering vector field reproduces the corrected multiplier of its family
    exactly; returns the per-family booleans.
    """
    from .hierarchy import ground_state
    st = ground_state("u3", (m, n))
    vecs = family_vectors()
    out = {}
    for name in ("A", "B", "C"):
        w_from_state = superpot_from_state(vecs[name].scale(-1), st.wavefunction)
        w_family = family_multiplier(name, st.params)
        out[name] = is_zero(w_from_state - w_family)
    return out
