"""Finite-dimensional Hopf algebras over cyclotomic fields.

An algebra is given by exact sparse structure constants (multiplication,
comultiplication, unit, counit, antipode, optional R-matrix) with CycNum
coefficients.  Every construction path runs the full axiom verifier; the
three built-in instances are the group algebra kG, its dual k^G, and the
Drinfeld double D(G).

Elements of H and functionals on H are thin wrappers (HElem / HFunc)
around sparse coefficient dicts; the module-level operations (mult,
comult, hit actions, adjoint action, integrals, the Frobenius map and
its inverse, central primitive idempotents with characters) realize the
standard semisimple structure theory, with all derived data re-verified
exactly before it is returned.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import runlog
from ._linalg import Echelon, Solver, nullspace, vec_axpy, vec_scale
from ._modp import (
    common_eigenvectors,
    element_of_order,
    lift_root,
    lll_reduce,
    next_prime_in_ap,
    solve as solve_mod,
)
from .chartab import dixon_character_table, group_central_idempotents
from .errors import (
    BadPrime,
    DenominatorCollision,
    DimMismatch,
    NoIntegral,
    NonIntegerDegree,
    VerificationFailed,
)
from .exactnum import CycNum, Rational, cyclotomic_poly, euler_phi
from .group import FiniteGroup

Vec = dict  # {basis index: nonzero CycNum}
Tensor = dict  # {(i, j): nonzero CycNum}

_ZERO = CycNum.rational(0)
_ONE = CycNum.rational(1)


def _cy(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    return CycNum.rational(x)


# ---------------------------------------------------------------------------
# the algebra


class HopfAlgebra:
    """A Hopf algebra given by exact structure constants.

    mult[(i, j)]   = ((k, c), ...)        e_i e_j   = sum c e_k
    comult[i]      = (((j, k), c), ...)   Delta e_i = sum c e_j (x) e_k
    antipode[i]    = ((j, c), ...)        S e_i     = sum c e_j
    unit, counit   = sparse vectors

    All axioms are checked exactly on basis elements at construction
    (pass ``check=False`` only to build deliberately broken instances for
    the negative tests of the verifier).
    """

    def __init__(self, *, dim, mult, comult, unit, counit, antipode,
                 cyc_order=1, r_matrix=None, labels=None, kind="custom",
                 group=None, check=True):
        self.dim = dim
        self.cyc_order = cyc_order
        self.kind = kind
        self.group = group
        self.labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(dim))
        self.mult = {
            key: tuple((k, _cy(c)) for k, c in terms if _cy(c))
            for key, terms in mult.items()
        }
        self.mult = {key: terms for key, terms in self.mult.items() if terms}
        self.comult = {
            i: tuple((jk, _cy(c)) for jk, c in terms if _cy(c))
            for i, terms in comult.items()
        }
        self.antipode = {
            i: tuple((j, _cy(c)) for j, c in terms if _cy(c))
            for i, terms in antipode.items()
        }
        self.unit_vec = {i: _cy(c) for i, c in unit.items() if _cy(c)}
        self.counit_vec = {i: _cy(c) for i, c in counit.items() if _cy(c)}
        self.r_matrix = None
        if r_matrix is not None:
            self.r_matrix = {k: _cy(c) for k, c in r_matrix.items() if _cy(c)}
        self.irred = None  # IrredData, attached by builders or on demand
        self._integral_cache = None
        if check:
            report = verify_hopf_axioms(self)
            bad = [r for r in report if r["status"] == "fail"]
            if bad:
                raise VerificationFailed(
                    f"Hopf axiom '{bad[0]['check']}' fails at {bad[0]['witness']}")

    # -- raw sparse operations (dict in, dict out) --

    def mul_raw(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        mult = self.mult
        for i, cu in u.items():
            for j, cv in v.items():
                terms = mult.get((i, j))
                if not terms:
                    continue
                c = cu * cv
                for k, ck in terms:
                    s = out.get(k)
                    s = c * ck if s is None else s + c * ck
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def comult_raw(self, u: Vec) -> Tensor:
        out: Tensor = {}
        for i, cu in u.items():
            for jk, c in self.comult.get(i, ()):
                s = out.get(jk)
                s = cu * c if s is None else s + cu * c
                if s:
                    out[jk] = s
                elif jk in out:
                    del out[jk]
        return out

    def antipode_raw(self, u: Vec) -> Vec:
        out: Vec = {}
        for i, cu in u.items():
            for j, c in self.antipode.get(i, ()):
                s = out.get(j)
                s = cu * c if s is None else s + cu * c
                if s:
                    out[j] = s
                elif j in out:
                    del out[j]
        return out

    def counit_raw(self, u: Vec) -> CycNum:
        acc = _ZERO
        for i, cu in u.items():
            c = self.counit_vec.get(i)
            if c is not None:
                acc = acc + cu * c
        return acc

    # -- functional (H*) operations --

    def func_mul_raw(self, p: Vec, q: Vec) -> Vec:
        # <pq, e_i> = sum <p, e_i(1)><q, e_i(2)>
        out: Vec = {}
        for i, terms in self.comult.items():
            acc = _ZERO
            for (j, k), c in terms:
                pj = p.get(j)
                if pj is None:
                    continue
                qk = q.get(k)
                if qk is None:
                    continue
                acc = acc + c * pj * qk
            if acc:
                out[i] = acc
        return out

    def func_antipode_raw(self, p: Vec) -> Vec:
        # <s(p), e_i> = <p, S(e_i)>
        out: Vec = {}
        for i in range(self.dim):
            acc = _ZERO
            for j, c in self.antipode.get(i, ()):
                pj = p.get(j)
                if pj is not None:
                    acc = acc + c * pj
            if acc:
                out[i] = acc
        return out

    # -- hit actions --

    def right_hit_raw(self, h: Vec, p: Vec) -> Vec:
        # h <- p = sum <p, h_1> h_2
        out: Vec = {}
        for i, ci in h.items():
            for (j, k), c in self.comult.get(i, ()):
                pj = p.get(j)
                if pj is None:
                    continue
                s = out.get(k)
                t = ci * c * pj
                s = t if s is None else s + t
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return out

    def left_hit_raw(self, p: Vec, h: Vec) -> Vec:
        # p -> h = sum h_1 <p, h_2>
        out: Vec = {}
        for i, ci in h.items():
            for (j, k), c in self.comult.get(i, ()):
                pk = p.get(k)
                if pk is None:
                    continue
                s = out.get(j)
                t = ci * c * pk
                s = t if s is None else s + t
                if s:
                    out[j] = s
                elif j in out:
                    del out[j]
        return out

    def func_right_hit_raw(self, p: Vec, a: Vec) -> Vec:
        # <p <- a, a'> = <p, a a'>
        out: Vec = {}
        for i, ci in a.items():
            for j in range(self.dim):
                terms = self.mult.get((i, j))
                if not terms:
                    continue
                acc = _ZERO
                for k, c in terms:
                    pk = p.get(k)
                    if pk is not None:
                        acc = acc + c * pk
                if acc:
                    t = ci * acc
                    s = out.get(j)
                    s = t if s is None else s + t
                    if s:
                        out[j] = s
                    elif j in out:
                        del out[j]
        return out

    def func_left_hit_raw(self, a: Vec, p: Vec) -> Vec:
        # <a -> p, a'> = <p, a' a>
        out: Vec = {}
        for i, ci in a.items():
            for j in range(self.dim):
                terms = self.mult.get((j, i))
                if not terms:
                    continue
                acc = _ZERO
                for k, c in terms:
                    pk = p.get(k)
                    if pk is not None:
                        acc = acc + c * pk
                if acc:
                    t = ci * acc
                    s = out.get(j)
                    s = t if s is None else s + t
                    if s:
                        out[j] = s
                    elif j in out:
                        del out[j]
        return out

    def adjoint_raw(self, h: Vec, a: Vec) -> Vec:
        # h .ad a = sum h_1 a S(h_2)
        out: Vec = {}
        for i, ci in h.items():
            for (j, k), c in self.comult.get(i, ()):
                left = self.mul_raw({j: _ONE}, a)
                term = self.mul_raw(left, dict(self.antipode.get(k, ())))
                vec_axpy(out, ci * c, term)
        return out

    def basis_vec(self, i: int) -> Vec:
        return {i: _ONE}

    def elem(self, vec: Vec) -> "HElem":
        return HElem(self, {i: c for i, c in vec.items() if c})

    def func(self, vec: Vec) -> "HFunc":
        return HFunc(self, {i: c for i, c in vec.items() if c})

    def one(self) -> "HElem":
        return self.elem(dict(self.unit_vec))

    def eps(self) -> "HFunc":
        return self.func(dict(self.counit_vec))

    def __repr__(self):
        return f"HopfAlgebra(kind={self.kind!r}, dim={self.dim})"


def _format_vec(vec: Vec, labels) -> str:
    if not vec:
        return "0"
    parts = []
    for i in sorted(vec):
        c = vec[i]
        parts.append(f"({c})*{labels[i]}")
    return " + ".join(parts)


class HElem:
    """An element of H: sparse coefficient vector over the algebra basis."""

    __slots__ = ("H", "vec")

    def __init__(self, H: HopfAlgebra, vec: Vec):
        self.H = H
        self.vec = vec

    def coeff(self, i: int) -> CycNum:
        return self.vec.get(i, _ZERO)

    def coeff_list(self) -> list[CycNum]:
        return [self.vec.get(i, _ZERO) for i in range(self.H.dim)]

    def __add__(self, other: "HElem") -> "HElem":
        _same(self, other)
        out = dict(self.vec)
        vec_axpy(out, _ONE, other.vec)
        return HElem(self.H, out)

    def __sub__(self, other: "HElem") -> "HElem":
        _same(self, other)
        out = dict(self.vec)
        vec_axpy(out, -_ONE, other.vec)
        return HElem(self.H, out)

    def __neg__(self) -> "HElem":
        return HElem(self.H, vec_scale(self.vec, -_ONE))

    def __mul__(self, other):
        if isinstance(other, HElem):
            _same(self, other)
            return HElem(self.H, self.H.mul_raw(self.vec, other.vec))
        return HElem(self.H, vec_scale(self.vec, _cy(other)))

    def __rmul__(self, other):
        return HElem(self.H, vec_scale(self.vec, _cy(other)))

    def __pow__(self, n: int) -> "HElem":
        if n < 0:
            raise ValueError("negative powers require an explicit inverse")
        acc = self.H.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return (isinstance(other, HElem) and self.H.dim == other.H.dim
                and self.vec == other.vec)

    def __bool__(self):
        return bool(self.vec)

    def __repr__(self):
        return _format_vec(self.vec, self.H.labels)


class HFunc:
    """A functional on H: <p, e_i> = vec[i]; callable on HElem."""

    __slots__ = ("H", "vec")

    def __init__(self, H: HopfAlgebra, vec: Vec):
        self.H = H
        self.vec = vec

    def __call__(self, a: HElem) -> CycNum:
        _same(self, a)
        acc = _ZERO
        for i, c in a.vec.items():
            pi = self.vec.get(i)
            if pi is not None:
                acc = acc + pi * c
        return acc

    def coeff_list(self) -> list[CycNum]:
        return [self.vec.get(i, _ZERO) for i in range(self.H.dim)]

    def __add__(self, other: "HFunc") -> "HFunc":
        _same(self, other)
        out = dict(self.vec)
        vec_axpy(out, _ONE, other.vec)
        return HFunc(self.H, out)

    def __sub__(self, other: "HFunc") -> "HFunc":
        _same(self, other)
        out = dict(self.vec)
        vec_axpy(out, -_ONE, other.vec)
        return HFunc(self.H, out)

    def __neg__(self) -> "HFunc":
        return HFunc(self.H, vec_scale(self.vec, -_ONE))

    def __mul__(self, other):
        if isinstance(other, HFunc):
            _same(self, other)
            return HFunc(self.H, self.H.func_mul_raw(self.vec, other.vec))
        return HFunc(self.H, vec_scale(self.vec, _cy(other)))

    def __rmul__(self, other):
        return HFunc(self.H, vec_scale(self.vec, _cy(other)))

    def __pow__(self, n: int) -> "HFunc":
        if n < 0:
            raise ValueError("negative powers not supported")
        acc = self.H.eps()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return (isinstance(other, HFunc) and self.H.dim == other.H.dim
                and self.vec == other.vec)

    def __bool__(self):
        return bool(self.vec)

    def __repr__(self):
        return "func: " + _format_vec(self.vec, self.H.labels)


def _same(a, b):
    if a.H.dim != b.H.dim:
        raise DimMismatch(f"dimension {a.H.dim} vs {b.H.dim}")


# ---------------------------------------------------------------------------
# module-level operations (the public algebra/coalgebra surface)


def mult(a: HElem, b: HElem) -> HElem:
    _same(a, b)
    return a * b


def comult(a: HElem) -> Tensor:
    return a.H.comult_raw(a.vec)


def antipode(a: HElem) -> HElem:
    return HElem(a.H, a.H.antipode_raw(a.vec))


def counit(a: HElem) -> CycNum:
    return a.H.counit_raw(a.vec)


def func_mult(p: HFunc, q: HFunc) -> HFunc:
    _same(p, q)
    return p * q


def func_antipode_s(p: HFunc) -> HFunc:
    return HFunc(p.H, p.H.func_antipode_raw(p.vec))


def pair(p: HFunc, a: HElem) -> CycNum:
    return p(a)


def left_hit(p: HFunc, h: HElem) -> HElem:
    _same(p, h)
    return HElem(h.H, h.H.left_hit_raw(p.vec, h.vec))


def right_hit(h: HElem, p: HFunc) -> HElem:
    _same(h, p)
    return HElem(h.H, h.H.right_hit_raw(h.vec, p.vec))


def func_left_hit(a: HElem, p: HFunc) -> HFunc:
    _same(a, p)
    return HFunc(p.H, p.H.func_left_hit_raw(a.vec, p.vec))


def func_right_hit(p: HFunc, a: HElem) -> HFunc:
    _same(p, a)
    return HFunc(p.H, p.H.func_right_hit_raw(p.vec, a.vec))


def adjoint(h: HElem, a: HElem) -> HElem:
    _same(h, a)
    return HElem(h.H, h.H.adjoint_raw(h.vec, a.vec))


# ---------------------------------------------------------------------------
# tensors in H (x) H


def tensor_of(a: HElem, b: HElem) -> Tensor:
    out: Tensor = {}
    for i, ci in a.vec.items():
        for j, cj in b.vec.items():
            out[(i, j)] = ci * cj
    return out


def tensor_mult(H: HopfAlgebra, s: Tensor, t: Tensor) -> Tensor:
    """Componentwise product in H (x) H."""
    out: Tensor = {}
    for (a, b), cs in s.items():
        for (c, d), ct in t.items():
            left = H.mult.get((a, c))
            if not left:
                continue
            right = H.mult.get((b, d))
            if not right:
                continue
            coeff = cs * ct
            for k1, c1 in left:
                for k2, c2 in right:
                    key = (k1, k2)
                    v = out.get(key)
                    w = coeff * c1 * c2
                    v = w if v is None else v + w
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
    return out


def tensor_flatten(H: HopfAlgebra, t: Tensor) -> Vec:
    """Apply multiplication: sum t[(i,j)] e_i e_j."""
    out: Vec = {}
    for (i, j), c in t.items():
        term = H.mult.get((i, j))
        if term:
            for k, ck in term:
                s = out.get(k)
                w = c * ck
                s = w if s is None else s + w
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
    return out


def tensor_antipode_right(H: HopfAlgebra, t: Tensor) -> Tensor:
    out: Tensor = {}
    for (i, j), c in t.items():
        for k, ck in H.antipode.get(j, ()):
            key = (i, k)
            v = out.get(key)
            w = c * ck
            v = w if v is None else v + w
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def tensor_swap(t: Tensor) -> Tensor:
    return {(j, i): c for (i, j), c in t.items()}


def tensor_pair_first(p: HFunc, t: Tensor) -> Vec:
    """(p (x) id)(t) as a vector."""
    out: Vec = {}
    for (i, j), c in t.items():
        pi = p.vec.get(i)
        if pi is None:
            continue
        s = out.get(j)
        w = pi * c
        s = w if s is None else s + w
        if s:
            out[j] = s
        elif j in out:
            del out[j]
    return out


def tensor_pair_second(t: Tensor, p: HFunc) -> Vec:
    """(id (x) p)(t) as a vector."""
    out: Vec = {}
    for (i, j), c in t.items():
        pj = p.vec.get(j)
        if pj is None:
            continue
        s = out.get(i)
        w = pj * c
        s = w if s is None else s + w
        if s:
            out[i] = s
        elif i in out:
            del out[i]
    return out


def casimir_tensor(H: HopfAlgebra) -> Tensor:
    """sum Lambda_1 (x) S(Lambda_2), the Casimir tensor of the form
    beta(h, h') = <lambda, h h'>."""
    lam, _ = integrals(H)
    return tensor_antipode_right(H, H.comult_raw(lam.vec))


# ---------------------------------------------------------------------------
# axiom verification


def _check_all(name, it, report):
    for witness, ok in it:
        if not ok:
            report.append({"check": name, "status": "fail", "witness": witness})
            return
    report.append({"check": name, "status": "pass"})


def verify_hopf_axioms(H: HopfAlgebra) -> list[dict]:
    """Exact basis-element verification of all Hopf axioms; returns a
    report with one entry per axiom, failures carrying a witness."""
    d = H.dim
    report: list[dict] = []
    basis = [H.basis_vec(i) for i in range(d)]

    def assoc():
        for i in range(d):
            for j in range(d):
                ij = H.mul_raw(basis[i], basis[j])
                for k in range(d):
                    left = H.mul_raw(ij, basis[k])
                    right = H.mul_raw(basis[i], H.mul_raw(basis[j], basis[k]))
                    yield (i, j, k), left == right

    _check_all("associativity", assoc(), report)

    def unit_law():
        one = H.unit_vec
        for i in range(d):
            yield i, H.mul_raw(one, basis[i]) == basis[i] == H.mul_raw(basis[i], one)

    _check_all("unit", unit_law(), report)

    def coassoc():
        for i in range(d):
            left: dict = {}
            right: dict = {}
            for (j, k), c in H.comult.get(i, ()):
                for (a, b), c2 in H.comult.get(j, ()):
                    key = (a, b, k)
                    left[key] = left.get(key, _ZERO) + c * c2
                for (a, b), c2 in H.comult.get(k, ()):
                    key = (j, a, b)
                    right[key] = right.get(key, _ZERO) + c * c2
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            yield i, left == right

    _check_all("coassociativity", coassoc(), report)

    def counit_law():
        for i in range(d):
            lhs: Vec = {}
            rhs: Vec = {}
            for (j, k), c in H.comult.get(i, ()):
                ej = H.counit_vec.get(j)
                if ej is not None:
                    w = c * ej
                    lhs[k] = lhs.get(k, _ZERO) + w
                ek = H.counit_vec.get(k)
                if ek is not None:
                    w = c * ek
                    rhs[j] = rhs.get(j, _ZERO) + w
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {k: v for k, v in rhs.items() if v}
            yield i, lhs == basis[i] == rhs

    _check_all("counit", counit_law(), report)

    def comult_map():
        one_tensor = {k: v for k, v in
                      {(i, j): ci * cj for i, ci in H.unit_vec.items()
                       for j, cj in H.unit_vec.items()}.items() if v}
        yield "unit", H.comult_raw(H.unit_vec) == one_tensor
        for i in range(d):
            di = H.comult_raw(basis[i])
            for j in range(d):
                lhs = H.comult_raw(H.mul_raw(basis[i], basis[j]))
                rhs = tensor_mult(H, di, H.comult_raw(basis[j]))
                yield (i, j), lhs == rhs

    _check_all("comult_algebra_map", comult_map(), report)

    def counit_map():
        yield "unit", H.counit_raw(H.unit_vec) == _ONE
        for i in range(d):
            ei = H.counit_raw(basis[i])
            for j in range(d):
                lhs = H.counit_raw(H.mul_raw(basis[i], basis[j]))
                yield (i, j), lhs == ei * H.counit_raw(basis[j])

    _check_all("counit_algebra_map", counit_map(), report)

    def antipode_axiom():
        for i in range(d):
            lhs: Vec = {}
            rhs: Vec = {}
            for (j, k), c in H.comult.get(i, ()):
                vec_axpy(lhs, c, H.mul_raw(H.antipode_raw(basis[j]), basis[k]))
                vec_axpy(rhs, c, H.mul_raw(basis[j], H.antipode_raw(basis[k])))
            want = vec_scale(H.unit_vec, H.counit_raw(basis[i]))
            yield i, lhs == want == rhs

    _check_all("antipode", antipode_axiom(), report)

    def s_squared():
        for i in range(d):
            yield i, H.antipode_raw(H.antipode_raw(basis[i])) == basis[i]

    _check_all("antipode_involutive", s_squared(), report)
    return report


# ---------------------------------------------------------------------------
# integrals and the Frobenius map


def integrals(H: HopfAlgebra) -> tuple[HElem, HFunc]:
    """(Lambda, lambda): the idempotent integral and the dual integral.

    Lambda is the one-dimensional solution space of h*Lambda = eps(h)*Lambda,
    normalised by eps(Lambda) = 1; lambda is the regular character
    (trace of left multiplication), which satisfies <lambda, Lambda> = 1.
    """
    if H._integral_cache is not None:
        lam_vec, lam_func = H._integral_cache
        return HElem(H, dict(lam_vec)), HFunc(H, dict(lam_func))
    d = H.dim
    rows = []
    for i in range(d):
        eps_i = H.counit_raw(H.basis_vec(i))
        cols: dict[int, Vec] = {}
        for j in range(d):
            for k, c in H.mult.get((i, j), ()):
                row = cols.setdefault(k, {})
                row[j] = row.get(j, _ZERO) + c
        if eps_i:
            for k in range(d):
                row = cols.setdefault(k, {})
                row[k] = row.get(k, _ZERO) - eps_i
        rows.extend({j: c for j, c in row.items() if c} for row in cols.values())
    space = nullspace(rows, d, _ONE)
    if len(space) != 1:
        raise NoIntegral(
            f"integral space has dimension {len(space)} (expected 1)")
    cand = space[0]
    scale = H.counit_raw(cand)
    if not scale:
        raise NoIntegral("integral candidate has vanishing counit")
    lam_vec = vec_scale(cand, scale.inverse())
    if H.mul_raw(lam_vec, lam_vec) != lam_vec:
        raise NoIntegral("normalised integral is not idempotent")
    for i in range(d):
        want = vec_scale(lam_vec, H.counit_raw(H.basis_vec(i)))
        if H.mul_raw(lam_vec, H.basis_vec(i)) != want:
            raise NoIntegral(f"integral is not two-sided (basis {i})")
    # regular character: <lambda, e_i> = Tr(L_{e_i})
    lam_func: Vec = {}
    for i in range(d):
        acc = _ZERO
        for j in range(d):
            for k, c in H.mult.get((i, j), ()):
                if k == j:
                    acc = acc + c
        if acc:
            lam_func[i] = acc
    pairing = _ZERO
    for i, c in lam_vec.items():
        t = lam_func.get(i)
        if t is not None:
            pairing = pairing + t * c
    if pairing != _ONE:
        raise NoIntegral(f"<lambda, Lambda> = {pairing}, expected 1")
    H._integral_cache = (lam_vec, lam_func)
    return HElem(H, dict(lam_vec)), HFunc(H, dict(lam_func))


def frobenius_psi(H: HopfAlgebra, h: HElem) -> HFunc:
    """Psi(h) = lambda <- S(h), the Frobenius bijection H -> H*."""
    _, lam = integrals(H)
    return HFunc(H, H.func_right_hit_raw(lam.vec, H.antipode_raw(h.vec)))


def psi_inv(H: HopfAlgebra, p: HFunc) -> HElem:
    """Psi^{-1}(p) = Lambda <- p."""
    integral, _ = integrals(H)
    return HElem(H, H.right_hit_raw(integral.vec, p.vec))


# ---------------------------------------------------------------------------
# irreducible data


@dataclass(frozen=True)
class IrredData:
    """Central primitive idempotents E_i, degrees d_i, characters chi_i;
    index 0 is the trivial representation (E_0 = Lambda, chi_0 = eps)."""

    idempotents: tuple
    degrees: tuple
    characters: tuple

    def __len__(self):
        return len(self.degrees)


def _verify_irred(H: HopfAlgebra, idems, degrees, chars):
    d = H.dim
    n = len(idems)
    if sum(x * x for x in degrees) != d:
        raise VerificationFailed("sum of squared degrees != dim")
    total: Vec = {}
    for i in range(n):
        vec_axpy(total, _ONE, idems[i].vec)
        for j in range(n):
            prod = H.mul_raw(idems[i].vec, idems[j].vec)
            want = idems[i].vec if i == j else {}
            if prod != want:
                raise VerificationFailed(f"E_{i}E_{j} != {'E_' + str(i) if i == j else '0'}")
    if total != H.unit_vec:
        raise VerificationFailed("idempotents do not sum to 1")
    for k in range(d):
        bk = H.basis_vec(k)
        for i in range(n):
            if H.mul_raw(bk, idems[i].vec) != H.mul_raw(idems[i].vec, bk):
                raise VerificationFailed(f"E_{i} is not central (basis {k})")
    for i in range(n):
        for j in range(n):
            want = CycNum.rational(degrees[j] if i == j else 0)
            if chars[i](idems[j]) != want:
                raise VerificationFailed(f"<chi_{i}, E_{j}> != {want}")
    integral, _ = integrals(H)
    for i in range(n):
        for j in range(n):
            sj = func_antipode_s(chars[j])
            got = (chars[i] * sj)(integral)
            want = _ONE if i == j else _ZERO
            if got != want:
                raise VerificationFailed(
                    f"<chi_{i} s(chi_{j}), Lambda> = {got}, expected {want}")
    if idems[0] != integral:
        raise VerificationFailed("E_0 != Lambda")
    if chars[0] != H.eps():
        raise VerificationFailed("chi_0 != eps")


def _cyc_residue(x: CycNum, w: int, ambient: int, modulus: int) -> int:
    """Image of x in Z/modulus, sending zeta_ambient -> w (x.order must
    divide ambient; denominators must be invertible)."""
    if ambient % x.order:
        raise BadPrime(f"value of order {x.order} outside Q(zeta_{ambient})")
    step = ambient // x.order
    acc = 0
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        try:
            inv = pow(c.denominator, -1, modulus)
        except ValueError:
            raise DenominatorCollision(
                f"denominator {c.denominator} not invertible mod {modulus}")
        acc += c.numerator * inv * pow(w, j * step, modulus)
    return acc % modulus


def split_commutative(mul, unit_coords, dim, cyc_order, rng):
    """Primitive idempotents of a commutative semisimple algebra.

    The algebra is given by ``mul`` on coordinate lists (length ``dim``,
    CycNum entries, in its own basis) and the coordinates of its unit.
    Idempotents are found over F_p (p = 1 mod cyc_order), Hensel-lifted
    to p^k, recognised in Q(zeta_cyc_order) by lattice reduction, and
    verified exactly; retries move to new primes/precisions.
    """
    if dim == 1:
        return [list(unit_coords)]
    basis = [[_ONE if i == j else _ZERO for i in range(dim)] for j in range(dim)]
    struct = [[mul(basis[a], basis[b]) for b in range(dim)] for a in range(dim)]
    N = max(cyc_order, 1)
    phi = euler_phi(N)
    cpoly = list(cyclotomic_poly(N))
    p = next_prime_in_ap(max(2 * dim, 16, N), N)
    last_error = None
    for attempt in range(5):
        k = 24 if attempt % 2 == 0 else 48
        try:
            result = _split_attempt(struct, unit_coords, dim, N, phi, cpoly,
                                    p, k, rng, mul)
            if result is not None:
                runlog.record("split_commutative", dim=dim, prime=p,
                              precision=k, outcome="ok")
                return result
            last_error = VerificationFailed(f"p={p}, k={k}: reconstruction failed")
            runlog.record("split_commutative", dim=dim, prime=p,
                          precision=k, outcome="reconstruction_failed")
        except (BadPrime, DenominatorCollision, ValueError) as exc:
            last_error = exc
            runlog.record("split_commutative", dim=dim, prime=p,
                          precision=k, outcome=type(exc).__name__)
        if attempt % 2 == 1:
            p = next_prime_in_ap(p, N)
    raise VerificationFailed(
        f"could not split commutative algebra after 5 attempts: {last_error}")


def _split_attempt(struct, unit_coords, dim, N, phi, cpoly, p, k, rng, mul):
    w1 = element_of_order(N, p, rng)
    mats = []
    for a in range(dim):
        mat = [[_cyc_residue(struct[a][b][c], w1, N, p) for b in range(dim)]
               for c in range(dim)]
        mats.append(mat)
    vecs = common_eigenvectors(mats, dim, p, rng)
    if vecs is None:
        return None
    # Characters of the algebra: phi_t(z_a) = eigenvalue of M_a on v_t.
    chars = []
    for v in vecs:
        pivot = next(j for j in range(dim) if v[j] % p)
        inv = pow(v[pivot], -1, p)
        row = []
        for a in range(dim):
            img = sum(mats[a][pivot][b] * v[b] for b in range(dim)) % p
            row.append(img * inv % p)
        chars.append(row)
    idems_mod_p = []
    for t in range(dim):
        rhs = [1 if s == t else 0 for s in range(dim)]
        x = solve_mod(chars, rhs, p)
        if x is None:
            return None
        idems_mod_p.append(x)
    # Hensel-lift idempotents and the root of unity to mod p^k.
    modulus = p**k
    wk = 1 if N == 1 else lift_root(cpoly, w1, p, k)
    struct_residues = [[[_cyc_residue(struct[a][b][c], wk, N, modulus)
                         for c in range(dim)] for b in range(dim)]
                       for a in range(dim)]

    def mul_mod(x, y, m):
        out = [0] * dim
        for a in range(dim):
            xa = x[a]
            if not xa:
                continue
            row = struct_residues[a]
            for b in range(dim):
                yb = y[b]
                if not yb:
                    continue
                f = xa * yb
                col = row[b]
                for c in range(dim):
                    if col[c]:
                        out[c] += f * col[c]
        return [v % m for v in out]

    lifted = []
    for e in idems_mod_p:
        prec = 1
        cur = list(e)
        while prec < k:
            prec = min(2 * prec, k)
            m = p**prec
            sq = mul_mod(cur, cur, m)
            cube = mul_mod(sq, cur, m)
            cur = [(3 * a - 2 * b) % m for a, b in zip(sq, cube)]
        lifted.append(cur)
    # Recognise each coordinate in Q(zeta_N) via the lattice of small
    # (a_0..a_{phi-1}, b) with sum a_j w^j = b * residue (mod p^k).
    cache: dict[int, CycNum | None] = {}

    def recognise(c: int) -> CycNum | None:
        if c in cache:
            return cache[c]
        size = phi + 1
        rows = [[0] * size for _ in range(size)]
        rows[0][0] = modulus
        for j in range(1, phi):
            rows[j][0] = (-pow(wk, j, modulus)) % modulus
            rows[j][j] = 1
        rows[phi][0] = c
        rows[phi][phi] = 1
        reduced = lll_reduce(rows)
        best = None
        best_norm = None
        for v in reduced:
            if v[-1] == 0:
                continue
            norm = sum(x * x for x in v)
            if best_norm is None or norm < best_norm:
                best, best_norm = v, norm
        if best is None:
            cache[c] = None
            return None
        if best[-1] < 0:
            best = [-x for x in best]
        b = best[-1]
        val = CycNum.rational(Fraction(best[0], b))
        for j in range(1, phi):
            if best[j]:
                val = val + CycNum.rational(Fraction(best[j], b)) * CycNum.zeta(N, j)
        cache[c] = val
        return val

    exact = []
    for cur in lifted:
        coords = []
        for c in cur:
            val = recognise(c)
            if val is None:
                return None
            coords.append(val)
        exact.append(coords)
    # Exact verification in the commutative algebra.
    zero = [_ZERO] * dim
    total = list(zero)
    for t, e in enumerate(exact):
        if mul(e, e) != e:
            return None
        total = [a + b for a, b in zip(total, e)]
        for s in range(t + 1, dim):
            prod = mul(e, exact[s])
            if any(prod):
                return None
    if total != list(unit_coords):
        return None
    return exact


def irreducibles_generic(H: HopfAlgebra, seed: int = 0) -> IrredData:
    """Central primitive idempotents, degrees, and irreducible characters,
    computed from the structure constants alone: the center is split by
    lift-and-verify, degrees come from d_i^2 = Tr(L_{E_i}), characters
    from chi_i(h) = Tr(L_{h E_i}) / d_i.  Everything re-verified exactly.
    """
    d = H.dim
    rng = random.Random(seed)
    # center: elements commuting with every basis element
    rows = []
    for i in range(d):
        cols: dict[int, Vec] = {}
        for j in range(d):
            for k, c in H.mult.get((i, j), ()):
                row = cols.setdefault(k, {})
                row[j] = row.get(j, _ZERO) + c
            for k, c in H.mult.get((j, i), ()):
                row = cols.setdefault(k, {})
                row[j] = row.get(j, _ZERO) - c
        rows.extend({j: c for j, c in row.items() if c} for row in cols.values())
    center = nullspace(rows, d, _ONE)
    m = len(center)
    solver = Solver()
    for t, z in enumerate(center):
        solver.insert(z, t)

    def to_center(vec: Vec) -> list[CycNum]:
        combo = solver.express(vec)
        if combo is None:
            raise VerificationFailed("center is not multiplicatively closed")
        return [combo.get(t, _ZERO) for t in range(m)]

    def from_center(coords) -> Vec:
        out: Vec = {}
        for t, c in enumerate(coords):
            if c:
                vec_axpy(out, c, center[t])
        return out

    def mul_center(x, y):
        return to_center(H.mul_raw(from_center(x), from_center(y)))

    unit_coords = to_center(H.unit_vec)
    idem_coords = split_commutative(mul_center, unit_coords, m, H.cyc_order, rng)
    integral, lam = integrals(H)
    entries = []
    for coords in idem_coords:
        evec = from_center(coords)
        tr = lam(HElem(H, evec))  # Tr(L_E) = <lambda, E>
        q = tr.as_rational()
        if q is None or q.denominator != 1 or q <= 0:
            raise NonIntegerDegree(f"Tr(L_E) = {tr} is not a positive integer")
        deg = math.isqrt(q.numerator)
        if deg * deg != q.numerator:
            raise NonIntegerDegree(f"Tr(L_E) = {q.numerator} is not a perfect square")
        chi: Vec = {}
        inv_deg = CycNum.rational(Rational(1, deg))
        for j in range(d):
            val = lam(HElem(H, H.mul_raw(H.basis_vec(j), evec)))
            if val:
                chi[j] = val * inv_deg
        entries.append((evec, deg, chi))
    trivial = [e for e in entries if e[0] == integral.vec]
    if len(trivial) != 1:
        raise VerificationFailed("no idempotent equals the integral")
    rest = [e for e in entries if e[0] != integral.vec]
    rest.sort(key=lambda e: (
        e[1],
        tuple(e[2].get(j, _ZERO).sort_key() for j in range(d)),
    ))
    ordered = trivial + rest
    idems = tuple(HElem(H, e[0]) for e in ordered)
    degrees = tuple(e[1] for e in ordered)
    chars = tuple(HFunc(H, e[2]) for e in ordered)
    _verify_irred(H, idems, degrees, chars)
    return IrredData(idempotents=idems, degrees=degrees, characters=chars)


def require_irred(H: HopfAlgebra, seed: int = 0) -> IrredData:
    """The instance's IrredData, computing and caching it if absent."""
    if H.irred is None:
        H.irred = irreducibles_generic(H, seed)
    return H.irred


def grouplike_functionals(H: HopfAlgebra) -> list[HFunc]:
    """The grouplike elements of H*: exactly the degree-1 irreducible
    characters, each verified multiplicative with sigma(1) = 1."""
    irred = require_irred(H)
    out = []
    for deg, chi in zip(irred.degrees, irred.characters):
        if deg != 1:
            continue
        if chi(H.one()) != _ONE:
            raise VerificationFailed("grouplike candidate fails at the unit")
        for i in range(H.dim):
            bi = HElem(H, H.basis_vec(i))
            ci = chi(bi)
            for j in range(H.dim):
                prod = HElem(H, H.mul_raw(H.basis_vec(i), H.basis_vec(j)))
                if chi(prod) != ci * chi(HElem(H, H.basis_vec(j))):
                    raise VerificationFailed(
                        f"degree-1 character not multiplicative at ({i},{j})")
        out.append(chi)
    return out


# ---------------------------------------------------------------------------
# randomised elements (for the identity suites)


def random_element(H: HopfAlgebra, rng: random.Random, density=1.0) -> HElem:
    vec: Vec = {}
    for i in range(H.dim):
        if density < 1.0 and rng.random() > density:
            continue
        c = rng.randrange(-4, 5)
        if c:
            vec[i] = CycNum.rational(c)
    if not vec:
        vec[rng.randrange(H.dim)] = _ONE
    return HElem(H, vec)


def random_functional(H: HopfAlgebra, rng: random.Random) -> HFunc:
    vec: Vec = {}
    for i in range(H.dim):
        c = rng.randrange(-4, 5)
        if c:
            vec[i] = CycNum.rational(c)
    if not vec:
        vec[rng.randrange(H.dim)] = _ONE
    return HFunc(H, vec)


# ---------------------------------------------------------------------------
# structure-level theorem suite


def _suite_entry(report, name, ok, witness=None):
    item = {"check": name, "status": "pass" if ok else "fail"}
    if witness is not None and not ok:
        item["witness"] = witness
    report.append(item)


def theorem_suite_sec1(H: HopfAlgebra, seed: int = 0) -> list[dict]:
    """Exact checks of the Frobenius/integral layer: axiom report, two-sided
    idempotent integrals, the trace form of lambda, Psi bijectivity, and the
    dual-basis (Casimir) identities of the integral tensor."""
    rng = random.Random(seed)
    report: list[dict] = []
    d = H.dim

    axioms = verify_hopf_axioms(H)
    bad = [a for a in axioms if a["status"] != "pass"]
    _suite_entry(report, "hopf_axioms_pass", not bad, bad[:1] or None)

    integral, lam = integrals(H)
    ok = integral * integral == integral and all(
        H.elem(H.basis_vec(k)) * integral == integral * H.counit_raw(H.basis_vec(k))
        and integral * H.elem(H.basis_vec(k))
        == integral * H.counit_raw(H.basis_vec(k))
        for k in range(d))
    _suite_entry(report, "integral_two_sided_idempotent", ok)
    _suite_entry(report, "integral_pairing_normalized",
                 lam(integral) == _ONE and H.counit_raw(integral.vec) == _ONE)
    _suite_entry(report, "antipode_fixes_integrals",
                 H.antipode_raw(integral.vec) == integral.vec
                 and H.func_antipode_raw(lam.vec) == lam.vec)

    ok = True
    witness = None
    for i in range(d):
        for j in range(i):
            bi, bj = H.basis_vec(i), H.basis_vec(j)
            lhs = sum((c * lam.vec.get(k, _ZERO)
                       for k, c in H.mul_raw(bi, bj).items()), _ZERO)
            rhs = sum((c * lam.vec.get(k, _ZERO)
                       for k, c in H.mul_raw(bj, bi).items()), _ZERO)
            if lhs != rhs:
                ok = False
                witness = {"pair": [i, j]}
                break
        if not ok:
            break
    _suite_entry(report, "dual_integral_is_trace_form", ok, witness)

    samples = [H.elem(H.basis_vec(k)) for k in range(d)]
    samples += [random_element(H, rng) for _ in range(5)]
    ok = all(psi_inv(H, frobenius_psi(H, h)) == h for h in samples)
    _suite_entry(report, "psi_round_trip", ok)

    ir = require_irred(H)
    ok = all(
        frobenius_psi(H, ir.idempotents[i])
        == func_antipode_s(ir.characters[i]) * CycNum.rational(ir.degrees[i])
        for i in range(len(ir)))
    _suite_entry(report, "psi_of_idempotent_is_scaled_character", ok)

    center_image = Echelon()
    for e in ir.idempotents:
        center_image.insert(frobenius_psi(H, e).vec)
    char_span = Echelon()
    for chi in ir.characters:
        char_span.insert(chi.vec)
    _suite_entry(report, "psi_carries_center_onto_characters",
                 center_image == char_span)

    cas = casimir_tensor(H)
    ok = True
    witness = None
    for k in range(d):
        bk = H.basis_vec(k)
        acc: Vec = {}
        for (i, j), c in cas.items():
            w = sum((x * lam.vec.get(m, _ZERO)
                     for m, x in H.mul_raw(bk, {i: _ONE}).items()), _ZERO)
            if w:
                vec_axpy(acc, c * w, {j: _ONE})
        if acc != bk:
            ok = False
            witness = {"basis": k}
            break
    _suite_entry(report, "casimir_reproduces_basis", ok, witness)

    ok = True
    witness = None
    for k in range(d):
        a = {k: _ONE}
        slid_l: Tensor = {}
        slid_r: Tensor = {}
        moved_l: Tensor = {}
        moved_r: Tensor = {}
        for (i, j), c in cas.items():
            for x, cx in H.mul_raw({i: _ONE}, a).items():
                _tensor_add(slid_l, (x, j), c * cx)
            for x, cx in H.mul_raw(a, {j: _ONE}).items():
                _tensor_add(slid_r, (i, x), c * cx)
            for x, cx in H.mul_raw(a, {i: _ONE}).items():
                _tensor_add(moved_l, (x, j), c * cx)
            for x, cx in H.mul_raw({j: _ONE}, a).items():
                _tensor_add(moved_r, (i, x), c * cx)
        if slid_l != slid_r or moved_l != moved_r:
            ok = False
            witness = {"basis": k}
            break
    _suite_entry(report, "casimir_slide_moves", ok, witness)

    report.sort(key=lambda e: e["check"])
    return report


def _tensor_add(acc: Tensor, key, c):
    prev = acc.get(key)
    val = c if prev is None else prev + c
    if val:
        acc[key] = val
    elif prev is not None:
        del acc[key]


# ---------------------------------------------------------------------------
# built-in instances


def build_group_algebra(G: FiniteGroup, seed: int = 0):
    """kG with grouplike basis, plus IrredData from the character table."""
    n = G.order
    mult = {(i, j): ((G.table[i][j], 1),) for i in range(n) for j in range(n)}
    comult = {i: (((i, i), 1),) for i in range(n)}
    antipode = {i: ((G.inverse(i), 1),) for i in range(n)}
    H = HopfAlgebra(
        dim=n,
        mult=mult,
        comult=comult,
        unit={G.identity: 1},
        counit={i: 1 for i in range(n)},
        antipode=antipode,
        cyc_order=G.exponent(),
        labels=G.labels,
        kind="group",
        group=G,
    )
    table = dixon_character_table(G, seed)
    idem_vecs = group_central_idempotents(G, table)
    cls = table.classes.class_of
    idems = tuple(
        HElem(H, {g: c for g, c in enumerate(vec) if c}) for vec in idem_vecs)
    chars = tuple(
        HFunc(H, {g: table.values[i][cls[g]] for g in range(n)
                  if table.values[i][cls[g]]})
        for i in range(len(table.degrees)))
    irred = IrredData(idempotents=idems, degrees=tuple(table.degrees),
                      characters=chars)
    _verify_irred(H, idems, irred.degrees, chars)
    H.irred = irred
    return H, irred


def build_dual_group_algebra(G: FiniteGroup):
    """k^G: projections p_g with pointwise product; all degrees 1."""
    n = G.order
    mult = {(i, i): ((i, 1),) for i in range(n)}
    comult = {}
    for g in range(n):
        terms = []
        for a in range(n):
            b = G.mul(G.inverse(a), g)
            terms.append(((a, b), 1))
        comult[g] = tuple(terms)
    antipode = {i: ((G.inverse(i), 1),) for i in range(n)}
    H = HopfAlgebra(
        dim=n,
        mult=mult,
        comult=comult,
        unit={i: 1 for i in range(n)},
        counit={G.identity: 1},
        antipode=antipode,
        cyc_order=1,
        labels=tuple(f"p_{lbl}" for lbl in G.labels),
        kind="dualgroup",
        group=G,
    )
    # E_g = p_g; chi_g = evaluation at g; trivial (= eps) is g = identity.
    order = [G.identity] + [g for g in range(n) if g != G.identity]
    idems = tuple(HElem(H, {g: _ONE}) for g in order)
    chars = tuple(HFunc(H, {g: _ONE}) for g in order)
    irred = IrredData(idempotents=idems, degrees=(1,) * n, characters=chars)
    _verify_irred(H, idems, irred.degrees, chars)
    H.irred = irred
    return H, irred


def build_drinfeld_double(G: FiniteGroup, seed: int = 0):
    """D(G) on the basis {p_g (x) h}, indexed g*|G| + h, with the canonical
    R-matrix; IrredData from the centralizer construction, verified exactly.
    """
    n = G.order
    dim = n * n
    mult = {}
    for g in range(n):
        for h in range(n):
            i = g * n + h
            for h2 in range(n):
                # (p_g (x) h)(p_g' (x) h') = [g' = h^-1 g h] p_g (x) h h'
                gp = G.conj(g, G.inverse(h))
                mult[(i, gp * n + h2)] = ((g * n + G.mul(h, h2), 1),)
    comult = {}
    for g in range(n):
        for h in range(n):
            terms = []
            for a in range(n):
                b = G.mul(G.inverse(a), g)
                terms.append(((a * n + h, b * n + h), 1))
            comult[g * n + h] = tuple(terms)
    antipode = {}
    for g in range(n):
        for h in range(n):
            hinv = G.inverse(h)
            tg = G.conj(G.inverse(g), hinv)
            antipode[g * n + h] = ((tg * n + hinv, 1),)
    unit = {g * n + G.identity: 1 for g in range(n)}
    counit = {G.identity * n + h: 1 for h in range(n)}
    r_matrix = {}
    for g in range(n):
        for gp in range(n):
            r_matrix[(g * n + G.identity, gp * n + g)] = _ONE
    labels = tuple(
        f"p_{G.labels[g]}*{G.labels[h]}" for g in range(n) for h in range(n))
    H = HopfAlgebra(
        dim=dim,
        mult=mult,
        comult=comult,
        unit=unit,
        counit=counit,
        antipode=antipode,
        cyc_order=G.exponent(),
        r_matrix=r_matrix,
        labels=labels,
        kind="double",
        group=G,
    )
    irred = _double_irreducibles(G, H, seed)
    H.irred = irred
    return H, irred


def _double_irreducibles(G: FiniteGroup, H: HopfAlgebra, seed: int) -> IrredData:
    """Irreducibles of D(G): one per (conjugacy class C, irreducible of the
    centralizer of a representative); characters are assembled from the
    centralizer tables, idempotents realised via E = d * (Lambda <- s(chi))
    and then verified against all IrredData invariants."""
    n = G.order
    conj = G.conjugacy_data()
    entries = []
    for ci in range(conj.n_classes):
        rep = conj.reps[ci]
        members = conj.elements[ci]
        K, parent = G.subgroup(G.centralizer(rep))
        parent_index = {p: i for i, p in enumerate(parent)}
        ktab = dixon_character_table(K, seed)
        kcls = ktab.classes.class_of
        # coset representatives: k_x rep k_x^{-1} = x
        kx = {}
        for x in members:
            kx[x] = next(g for g in range(n) if G.conj(rep, g) == x)
        for row in range(len(ktab.degrees)):
            deg = len(members) * ktab.degrees[row]
            chi: Vec = {}
            for g in members:
                kg_inv = G.inverse(kx[g])
                for h in range(n):
                    if G.mul(h, g) != G.mul(g, h):
                        continue
                    u = G.mul(G.mul(kg_inv, h), kx[g])
                    val = ktab.values[row][kcls[parent_index[u]]]
                    if val:
                        chi[g * n + h] = val
            entries.append((deg, chi))
    integral, _ = integrals(H)
    built = []
    for deg, chi in entries:
        s_chi = H.func_antipode_raw(chi)
        evec = vec_scale(H.right_hit_raw(integral.vec, s_chi), CycNum.rational(deg))
        built.append((evec, deg, chi))
    trivial = [e for e in built if e[0] == integral.vec]
    if len(trivial) != 1:
        raise VerificationFailed("double construction: E_0 != Lambda")
    rest = [e for e in built if e[0] != integral.vec]
    rest.sort(key=lambda e: (
        e[1],
        tuple(e[2].get(j, _ZERO).sort_key() for j in range(H.dim)),
    ))
    ordered = trivial + rest
    idems = tuple(HElem(H, e[0]) for e in ordered)
    degrees = tuple(e[1] for e in ordered)
    chars = tuple(HFunc(H, e[2]) for e in ordered)
    _verify_irred(H, idems, degrees, chars)
    return IrredData(idempotents=idems, degrees=degrees, characters=chars)


# ---------------------------------------------------------------------------
# JSON round trip


def _coeff_to_json(c: CycNum):
    q = c.as_rational()
    if q is not None:
        return str(q)
    return c.to_dict()


def _coeff_from_json(x) -> CycNum:
    if isinstance(x, dict):
        return CycNum.from_dict(x)
    return CycNum.rational(Fraction(x))


def hopf_to_dict(H: HopfAlgebra) -> dict:
    mult = [[i, j, k, _coeff_to_json(c)]
            for (i, j) in sorted(H.mult) for k, c in H.mult[(i, j)]]
    comult = [[i, j, k, _coeff_to_json(c)]
              for i in sorted(H.comult) for (j, k), c in H.comult[i]]
    antipode = [[i, j, _coeff_to_json(c)]
                for i in sorted(H.antipode) for j, c in H.antipode[i]]
    out = {
        "schema": "hopfcomm/1",
        "dim": H.dim,
        "cyc_order": H.cyc_order,
        "kind": H.kind,
        "labels": list(H.labels),
        "mult": mult,
        "comult": comult,
        "unit": [[i, _coeff_to_json(c)] for i, c in sorted(H.unit_vec.items())],
        "counit": [[i, _coeff_to_json(c)] for i, c in sorted(H.counit_vec.items())],
        "antipode": antipode,
    }
    if H.r_matrix is not None:
        out["r_matrix"] = [[i, j, _coeff_to_json(c)]
                           for (i, j), c in sorted(H.r_matrix.items())]
    return out


def hopf_from_dict(data: dict) -> HopfAlgebra:
    """Rebuild an algebra from its JSON dump; runs the full axiom verifier."""
    try:
        dim = int(data["dim"])
        mult: dict = {}
        for i, j, k, c in data["mult"]:
            mult.setdefault((i, j), []).append((k, _coeff_from_json(c)))
        comult: dict = {}
        for i, j, k, c in data["comult"]:
            comult.setdefault(i, []).append(((j, k), _coeff_from_json(c)))
        antipode: dict = {}
        for i, j, c in data["antipode"]:
            antipode.setdefault(i, []).append((j, _coeff_from_json(c)))
        unit = {i: _coeff_from_json(c) for i, c in data["unit"]}
        counit = {i: _coeff_from_json(c) for i, c in data["counit"]}
        r_matrix = None
        if "r_matrix" in data:
            r_matrix = {(i, j): _coeff_from_json(c)
                        for i, j, c in data["r_matrix"]}
        labels = data.get("labels")
        kind = data.get("kind", "custom")
        cyc_order = int(data.get("cyc_order", 1))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed hopf dump: {exc}") from exc
    return HopfAlgebra(
        dim=dim,
        mult={k: tuple(v) for k, v in mult.items()},
        comult={k: tuple(v) for k, v in comult.items()},
        unit=unit,
        counit=counit,
        antipode={k: tuple(v) for k, v in antipode.items()},
        cyc_order=cyc_order,
        r_matrix=r_matrix,
        labels=labels,
        kind=kind,
    )


def irred_to_dict(irred: IrredData) -> dict:
    return {
        "degrees": list(irred.degrees),
        "idempotents": [
            [[i, _coeff_to_json(c)] for i, c in sorted(e.vec.items())]
            for e in irred.idempotents
        ],
        "characters": [
            [[i, _coeff_to_json(c)] for i, c in sorted(f.vec.items())]
            for f in irred.characters
        ],
    }


def irred_from_dict(H: HopfAlgebra, data: dict) -> IrredData:
    degrees = tuple(int(x) for x in data["degrees"])
    idems = tuple(
        HElem(H, {i: _coeff_from_json(c) for i, c in entry})
        for entry in data["idempotents"])
    chars = tuple(
        HFunc(H, {i: _coeff_from_json(c) for i, c in entry})
        for entry in data["characters"])
    _verify_irred(H, idems, degrees, chars)
    return IrredData(idempotents=idems, degrees=degrees, characters=chars)
