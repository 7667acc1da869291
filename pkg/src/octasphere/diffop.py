"""Differential operators with TrigPoly coefficients.

    DiffOp ~ dict[(k1, k2) -> TrigPoly]   meaning   sum coeff * d^k1_phi1 d^k2_phi2

Composition uses the generalized Leibniz rule and is exact.  Total order is
capped at 4, which covers every workflow here (quadratic Casimir elements of
first-order ladder operators).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from .trigpoly import (PHI1, PHI2, ONE, TrigPoly, differentiate, from_obj,
                       is_zero, to_obj)

MAX_ORDER = 4

ParamVector = tuple[Fraction, Fraction, Fraction]


def pv(l0, l1, l2) -> ParamVector:
    return (Fraction(l0), Fraction(l1), Fraction(l2))


class DiffOp:
    """Finite sum of (TrigPoly coefficient) * (mixed partial derivative)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[int, int], TrigPoly] | None = None):
        clean: dict[tuple[int, int], TrigPoly] = {}
        for (k1, k2), c in (terms or {}).items():
            if k1 < 0 or k2 < 0:
                raise ValueError("negative derivative order")
            if k1 + k2 > MAX_ORDER:
                raise ValueError(f"order {k1 + k2} exceeds cap {MAX_ORDER}")
            if not isinstance(c, TrigPoly):
                c = TrigPoly.constant(c)
            if c:
                prev = clean.get((k1, k2))
                clean[(k1, k2)] = prev + c if prev is not None else c
        self._terms = {k: v for k, v in clean.items() if v}

    @staticmethod
    def zero() -> "DiffOp":
        return DiffOp()

    @staticmethod
    def identity() -> "DiffOp":
        return DiffOp({(0, 0): ONE})

    @staticmethod
    def multiplication(p: TrigPoly) -> "DiffOp":
        return DiffOp({(0, 0): p})

    def items(self):
        return self._terms.items()

    def coeff(self, order: tuple[int, int]) -> TrigPoly:
        return self._terms.get(order, TrigPoly.zero())

    def order(self) -> int:
        return max((k1 + k2 for (k1, k2) in self._terms), default=0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "DiffOp(0)"
        bits = [f"d1^{k1} d2^{k2}: {c!r}" for (k1, k2), c in sorted(self._terms.items())]
        return "DiffOp{" + "; ".join(bits) + "}"

    def __add__(self, other: "DiffOp") -> "DiffOp":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return DiffOp(acc)

    def __neg__(self) -> "DiffOp":
        return DiffOp({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self + (-other)

    def scale(self, c) -> "DiffOp":
        c = Fraction(c)
        if c == 0:
            return DiffOp()
        return DiffOp({k: v.scale(c) for k, v in self._terms.items()})


def apply(op: DiffOp, f: TrigPoly) -> TrigPoly:
    """Exact application of op to f."""
    out = TrigPoly.zero()
    for (k1, k2), c in op.items():
        g = f
        for _ in range(k1):
            g = differentiate(g, PHI1)
        for _ in range(k2):
            g = differentiate(g, PHI2)
        out = out + c * g
    return out


def compose(x: DiffOp, y: DiffOp) -> DiffOp:
    """Exact composition x∘y via the generalized Leibniz expansion.

    apply(compose(x, y), f) == apply(x, apply(y, f)) for every f.
    """
    acc: dict[tuple[int, int], TrigPoly] = {}
    for (k1, k2), cx in x.items():
        for (m1, m2), cy in y.items():
            if k1 + m1 + k2 + m2 > MAX_ORDER:
                raise ValueError("composition exceeds order cap")
            # d^k (cy * d^m f) = sum_j C(k, j) (d^j cy) d^(k-j+m) f, per variable
            for j1 in range(k1 + 1):
                dj = cy
                for _ in range(j1):
                    dj = differentiate(dj, PHI1)
                if not dj:
                    continue
                b1 = math.comb(k1, j1)
                for j2 in range(k2 + 1):
                    dj2 = dj
                    for _ in range(j2):
                        dj2 = differentiate(dj2, PHI2)
                    if not dj2:
                        continue
                    b = Fraction(b1 * math.comb(k2, j2))
                    key = (k1 - j1 + m1, k2 - j2 + m2)
                    add = cx * dj2.scale(b)
                    acc[key] = acc[key] + add if key in acc else add
    return DiffOp(acc)


def is_zero_op(op: DiffOp) -> bool:
    """True iff every coefficient is the zero function."""
    return all(is_zero(c) for _, c in op.items())


# -- the Hamiltonian family ---------------------------------------------------

def _sq(x: Fraction) -> Fraction:
    return x * x


def build_hamiltonian(ell: ParamVector) -> DiffOp:
    """Separated two-sphere Hamiltonian at parameters (l0, l1, l2).

    -d2^2 + tan(phi2) d2 + (l2^2-1/4) csc^2 phi2
        + sec^2 phi2 [ -d1^2 + (l0^2-1/4) sec^2 phi1 + (l1^2-1/4) csc^2 phi1 ]
    """
    l0, l1, l2 = (Fraction(x) for x in ell)
    q = Fraction(1, 4)
    f0, f2 = Fraction(0), Fraction(2)
    terms = {
        (0, 2): TrigPoly.constant(-1),
        (0, 1): TrigPoly.monomial(1, (f0, f0, -1, 1)),
        (2, 0): TrigPoly.monomial(-1, (f0, f0, -f2, f0)),
    }
    pot = TrigPoly({
        (f0, f0, f0, -f2): _sq(l2) - q,
        (-f2, f0, -f2, f0): _sq(l0) - q,
        (f0, -f2, -f2, f0): _sq(l1) - q,
    })
    terms[(0, 0)] = pot
    return DiffOp(terms)


def build_phi1_block(l0, l1) -> DiffOp:
    """One-dimensional block -d1^2 + (l0^2-1/4) sec^2 phi1 + (l1^2-1/4) csc^2 phi1."""
    l0, l1 = Fraction(l0), Fraction(l1)
    q = Fraction(1, 4)
    f0, f2 = Fraction(0), Fraction(2)
    return DiffOp({
        (2, 0): TrigPoly.constant(-1),
        (0, 0): TrigPoly({(-f2, f0, f0, f0): _sq(l0) - q,
                          (f0, -f2, f0, f0): _sq(l1) - q}),
    })


def build_phi2_operator(alpha_root, l2) -> DiffOp:
    """phi2-hierarchy member -d2^2 + tan phi2 d2 + a^2 sec^2 phi2 + (l2^2-1/4) csc^2 phi2.

    alpha_root is the square root of the sec^2 coupling (the separation
    constant enters as alpha_root^2).
    """
    a, l2 = Fraction(alpha_root), Fraction(l2)
    q = Fraction(1, 4)
    f0, f2 = Fraction(0), Fraction(2)
    return DiffOp({
        (0, 2): TrigPoly.constant(-1),
        (0, 1): TrigPoly.monomial(1, (f0, f0, -1, 1)),
        (0, 0): TrigPoly({(f0, f0, -f2, f0): _sq(a),
                          (f0, f0, f0, -f2): _sq(l2) - q}),
    })


def hamiltonian_potential(ell: ParamVector) -> TrigPoly:
    """Multiplicative part of the Hamiltonian (its (0,0) coefficient)."""
    return build_hamiltonian(ell).coeff((0, 0))


KINETIC = DiffOp({
    (0, 2): TrigPoly.constant(-1),
    (0, 1): TrigPoly.monomial(1, (Fraction(0), Fraction(0), -1, 1)),
    (2, 0): TrigPoly.monomial(-1, (Fraction(0), Fraction(0), Fraction(-2), Fraction(0))),
})


# -- serialization -------------------------------------------------------------

def op_to_obj(op: DiffOp, shift: tuple[int, int, int] = (0, 0, 0)) -> dict:
    return {"shift": list(shift),
            "terms": [{"order": [k1, k2], "coeff": to_obj(c)}
                      for (k1, k2), c in sorted(op.items())]}


def op_from_obj(obj: dict) -> tuple[DiffOp, tuple[int, int, int]]:
    terms = {}
    for t in obj["terms"]:
        k1, k2 = t["order"]
        terms[(int(k1), int(k2))] = from_obj(t["coeff"])
    return DiffOp(terms), tuple(obj.get("shift", (0, 0, 0)))


def op_to_json(op: DiffOp, shift: tuple[int, int, int] = (0, 0, 0)) -> str:
    return json.dumps(op_to_obj(op, shift), separators=(",", ":"))
