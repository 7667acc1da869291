"""Exact algebra of trigonometric monomials in two angles.

A function is represented as a finite sum of monomials

    coeff * cos(phi1)**a * sin(phi1)**b * cos(phi2)**c * sin(phi2)**d

with rational coefficients and rational exponents whose denominators are 1
or 2 (the ladder construction on the sphere only ever produces integer and
half-integer powers; negative exponents encode tan/cot/sec/csc factors).

    TrigPoly ~ dict[(a, b, c, d) -> Fraction]    (exponents as Fractions)

The stored ("canonical") form only merges identical exponent tuples and drops
zero coefficients, so `p == q` is cheap structural equality.  The semantic
zero test `is_zero` is where sin**2 + cos**2 = 1 is taken into account: terms
are grouped into classes by their exponents mod 2, each class is rewritten as
a polynomial in s1 = sin(phi1)**2 and s2 = sin(phi2)**2 (after clearing a
common monomial factor), and the function vanishes on the open octant
(0, pi/2)^2 iff every class polynomial is identically zero.  Monomial
families from distinct classes are linearly independent there, which the
test suite additionally guards by random-point sampling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Exps = tuple[Fraction, Fraction, Fraction, Fraction]

PHI1, PHI2 = 1, 2


def _exp(x) -> Fraction:
    f = Fraction(x)
    if f.denominator not in (1, 2):
        raise ValueError(f"exponent {f} has denominator {f.denominator}; only 1 or 2 allowed")
    return f


def _exps(exps) -> Exps:
    a, b, c, d = exps
    return (_exp(a), _exp(b), _exp(c), _exp(d))


@dataclass(frozen=True)
class TrigTerm:
    """One monomial: coeff * cos^a(phi1) sin^b(phi1) cos^c(phi2) sin^d(phi2)."""

    coeff: Fraction
    exps: Exps

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "exps", _exps(self.exps))


class TrigPoly:
    """Canonical linear combination of trigonometric monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Exps, Fraction] | None = None, *, _raw: bool = False):
        if terms is None:
            self._terms: dict[Exps, Fraction] = {}
        elif _raw:
            self._terms = terms
        else:
            clean: dict[Exps, Fraction] = {}
            for e, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                e = _exps(e)
                c0 = clean.get(e)
                if c0 is None:
                    clean[e] = c
                else:
                    c0 = c0 + c
                    if c0 == 0:
                        del clean[e]
                    else:
                        clean[e] = c0
            self._terms = clean

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> "TrigPoly":
        return TrigPoly()

    @staticmethod
    def constant(c) -> "TrigPoly":
        c = Fraction(c)
        if c == 0:
            return TrigPoly()
        z = Fraction(0)
        return TrigPoly({(z, z, z, z): c}, _raw=True)

    @staticmethod
    def monomial(coeff, exps) -> "TrigPoly":
        coeff = Fraction(coeff)
        if coeff == 0:
            return TrigPoly()
        return TrigPoly({_exps(exps): coeff}, _raw=True)

    @staticmethod
    def from_terms(terms: Iterable[TrigTerm]) -> "TrigPoly":
        acc: dict[Exps, Fraction] = {}
        for t in terms:
            acc[t.exps] = acc.get(t.exps, Fraction(0)) + t.coeff
        return TrigPoly(acc)

    # -- canonical views -----------------------------------------------------

    def terms(self) -> Iterator[TrigTerm]:
        """Terms in the canonical (lexicographic exponent) order."""
        for e in sorted(self._terms):
            yield TrigTerm(self._terms[e], e)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return "TrigPoly(0)"
        bits = []
        for t in self.terms():
            bits.append(f"{t.coeff}*c1^{t.exps[0]} s1^{t.exps[1]} c2^{t.exps[2]} s2^{t.exps[3]}")
        return "TrigPoly(" + " + ".join(bits) + ")"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "TrigPoly") -> "TrigPoly":
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for e, c in other._terms.items():
            c0 = acc.get(e)
            if c0 is None:
                acc[e] = c
            else:
                c0 = c0 + c
                if c0 == 0:
                    del acc[e]
                else:
                    acc[e] = c0
        return TrigPoly(acc, _raw=True)

    def __neg__(self) -> "TrigPoly":
        return TrigPoly({e: -c for e, c in self._terms.items()}, _raw=True)

    def __sub__(self, other: "TrigPoly") -> "TrigPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TrigPoly):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "TrigPoly":
        c = Fraction(c)
        if c == 0:
            return TrigPoly()
        return TrigPoly({e: c * v for e, v in self._terms.items()}, _raw=True)


def linear_combine(pairs: Sequence[tuple[Fraction, TrigPoly]]) -> TrigPoly:
    """Canonical sum of c_i * p_i."""
    acc: dict[Exps, Fraction] = {}
    for c, p in pairs:
        c = Fraction(c)
        if c == 0:
            continue
        for e, v in p._terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c * v
    return TrigPoly(acc)


def mul(p: TrigPoly, q: TrigPoly) -> TrigPoly:
    """Exact product; exponents add componentwise."""
    if not p._terms or not q._terms:
        return TrigPoly()
    acc: dict[Exps, Fraction] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
            acc[e] = acc.get(e, Fraction(0)) + c1 * c2
    return TrigPoly(acc)


def differentiate(p: TrigPoly, var: int) -> TrigPoly:
    """Exact partial derivative, var in {PHI1, PHI2}.

    Per term: d/dphi cos^a sin^b = -a cos^(a-1) sin^(b+1) + b cos^(a+1) sin^(b-1).
    """
    if var not in (PHI1, PHI2):
        raise ValueError(f"unknown variable {var!r}")
    ci, si = (0, 1) if var == PHI1 else (2, 3)
    acc: dict[Exps, Fraction] = {}
    one = Fraction(1)
    for e, c in p._terms.items():
        a, b = e[ci], e[si]
        if a != 0:
            e1 = list(e)
            e1[ci], e1[si] = a - one, b + one
            k = tuple(e1)
            acc[k] = acc.get(k, Fraction(0)) - a * c
        if b != 0:
            e2 = list(e)
            e2[ci], e2[si] = a + one, b - one
            k = tuple(e2)
            acc[k] = acc.get(k, Fraction(0)) + b * c
    return TrigPoly(acc)


def divide_by_monomial(p: TrigPoly, t: TrigTerm) -> TrigPoly:
    """Exact termwise division by a single monomial."""
    if t.coeff == 0:
        raise ZeroDivisionError("division by zero monomial")
    acc = {}
    for e, c in p._terms.items():
        e2 = (e[0] - t.exps[0], e[1] - t.exps[1], e[2] - t.exps[2], e[3] - t.exps[3])
        acc[e2] = c / t.coeff
    return TrigPoly(acc, _raw=True)


# -- semantic zero test ------------------------------------------------------

ClassKey = tuple[Fraction, Fraction, Fraction, Fraction]
Poly2 = dict[tuple[int, int], Fraction]


def _split(e: Fraction) -> tuple[Fraction, int]:
    """e = residue + 2*offset with residue in [0, 2)."""
    off = e // 2
    return e - 2 * off, int(off)


def _binom_pows(n: int) -> list[Fraction]:
    # coefficients of (1 - s)^n
    return [Fraction((-1) ** k * math.comb(n, k)) for k in range(n + 1)]


def class_split(p: TrigPoly) -> dict[ClassKey, list[tuple[Fraction, tuple[int, int, int, int]]]]:
    """Group terms by exponent residues mod 2; values carry integer offsets."""
    out: dict[ClassKey, list] = {}
    for e, c in p.items():
        ra, ia = _split(e[0])
        rb, ib = _split(e[1])
        rc, ic = _split(e[2])
        rd, idd = _split(e[3])
        out.setdefault((ra, rb, rc, rd), []).append((c, (ia, ib, ic, idd)))
    return out


def _expand_class(entries, mins) -> Poly2:
    """Rewrite sum c*(1-s1)^i s1^j (1-s2)^k s2^l, offsets shifted by mins,
    as a polynomial in (s1, s2)."""
    poly: Poly2 = {}
    for c, (i, j, k, l) in entries:
        di, dj = i - mins[0], j - mins[1]
        dk, dl = k - mins[2], l - mins[3]
        bi, bk = _binom_pows(di), _binom_pows(dk)
        for u, cu in enumerate(bi):
            for v, cv in enumerate(bk):
                key = (u + dj, v + dl)
                poly[key] = poly.get(key, Fraction(0)) + c * cu * cv
    return {k: v for k, v in poly.items() if v != 0}


def class_reduce(p: TrigPoly) -> dict[ClassKey, Poly2]:
    """Per-class polynomial in (s1, s2) after clearing the class monomial factor."""
    out = {}
    for key, entries in class_split(p).items():
        mins = tuple(min(t[1][i] for t in entries) for i in range(4))
        out[key] = _expand_class(entries, mins)
    return out


def is_zero(p: TrigPoly) -> bool:
    """True iff p is the zero function on the open octant (0, pi/2)^2."""
    if not p:
        return True
    return all(not poly for poly in class_reduce(p).values())


def coordinate_vectors(polys: Sequence[TrigPoly]) -> list[dict]:
    """Exact linear coordinates of several polys in one shared basis.

    All inputs are class-reduced with common per-class offset normalization, so
    any rational linear combination of the inputs is the zero function iff the
    same combination of the returned coordinate dicts vanishes.  Used by the
    multiplier solver.
    """
    all_entries: dict[ClassKey, list] = {}
    splits = [class_split(p) for p in polys]
    for sp in splits:
        for key, entries in sp.items():
            all_entries.setdefault(key, []).extend(entries)
    mins = {key: tuple(min(t[1][i] for t in entries) for i in range(4))
            for key, entries in all_entries.items()}
    out = []
    for sp in splits:
        coords: dict = {}
        for key, entries in sp.items():
            for (e1, e2), v in _expand_class(entries, mins[key]).items():
                coords[(key, e1, e2)] = v
        out.append(coords)
    return out


# -- numeric evaluation ------------------------------------------------------

def eval_numeric(p: TrigPoly, phi1: float, phi2: float) -> float:
    """Floating-point value of p at an interior point.

    Relative error is ~1e-13 per term for |exponents| <= 20.  Points outside
    the open octant raise, since negative/fractional powers are singular at
    the boundary.
    """
    half_pi = math.pi / 2
    if not (0.0 < phi1 < half_pi) or not (0.0 < phi2 < half_pi):
        raise ValueError("singular evaluation: point outside open octant (0, pi/2)^2")
    c1, s1 = math.cos(phi1), math.sin(phi1)
    c2, s2 = math.cos(phi2), math.sin(phi2)
    total = 0.0
    for e, c in p.items():
        total += float(c) * c1 ** float(e[0]) * s1 ** float(e[1]) \
            * c2 ** float(e[2]) * s2 ** float(e[3])
    return total


# -- JSON serialization ------------------------------------------------------

def frac_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def frac_from_str(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def to_obj(p: TrigPoly) -> dict:
    return {"terms": [{"coeff": frac_to_str(t.coeff),
                       "exps": [frac_to_str(e) for e in t.exps]}
                      for t in p.terms()]}


def from_obj(obj: dict) -> TrigPoly:
    acc = {}
    for t in obj["terms"]:
        exps = _exps(tuple(frac_from_str(e) for e in t["exps"]))
        acc[exps] = acc.get(exps, Fraction(0)) + frac_from_str(t["coeff"])
    return TrigPoly(acc)


def to_json(p: TrigPoly) -> str:
    return json.dumps(to_obj(p), separators=(",", ":"))


def from_json(s: str) -> TrigPoly:
    return from_obj(json.loads(s))


# -- common monomials --------------------------------------------------------

_F0, _F1 = Fraction(0), Fraction(1)
ONE = TrigPoly.constant(1)
COS1 = TrigPoly.monomial(1, (_F1, _F0, _F0, _F0))
SIN1 = TrigPoly.monomial(1, (_F0, _F1, _F0, _F0))
COS2 = TrigPoly.monomial(1, (_F0, _F0, _F1, _F0))
SIN2 = TrigPoly.monomial(1, (_F0, _F0, _F0, _F1))
TAN1 = TrigPoly.monomial(1, (-_F1, _F1, _F0, _F0))
COT1 = TrigPoly.monomial(1, (_F1, -_F1, _F0, _F0))
TAN2 = TrigPoly.monomial(1, (_F0, _F0, -_F1, _F1))
COT2 = TrigPoly.monomial(1, (_F0, _F0, _F1, -_F1))
