"""Hopf commutator calculus.

The commutator of a, b in H is {a,b} = sum a_1 b_1 S(a_2) S(b_2); the
n-th commutator generalises it to n arguments.  This module computes
the spans Com_n, the central elements z_n (n-th commutators of the
integral), the insertion maps Z_n, coideal and algebra closures, and
the commutator subalgebra H' by two independent routes; a theorem
suite checks every identity of the calculus on a given instance, and a
probe gathers evidence on the open question whether Com = z_2 <- H*.

Internally an n-th commutator is the multiplication map applied to the
product U(a^1) ... U(a^n) in H (x) H, where U(a) = sum a_1 (x) S(a_2);
this keeps the work polynomial in dim H instead of exponential in n.
"""

from __future__ import annotations

import random

from ._linalg import Echelon, nullspace, vec_axpy
from .caps import enum_cap
from .errors import EnumerationCapExceeded, RouteMismatch, VerificationFailed
from .exactnum import CycNum, Rational
from .hopf import (
    HElem,
    HopfAlgebra,
    grouplike_functionals,
    integrals,
    random_element,
    require_irred,
    tensor_antipode_right,
    tensor_flatten,
    tensor_mult,
)

_ONE = CycNum.rational(1)
_ZERO = CycNum.rational(0)


def _as_vec_list(vecs) -> list[dict]:
    if isinstance(vecs, Subspace):
        return vecs.basis_vecs()
    return [v if isinstance(v, dict) else v.vec for v in vecs]


class Subspace:
    """A subspace of H (or of H*), held as a canonical reduced-echelon
    basis; equality of subspaces is equality of those bases."""

    def __init__(self, H: HopfAlgebra, vecs=()):
        self.H = H
        self.ech = Echelon()
        for v in _as_vec_list(vecs):
            self.ech.insert(v)

    def add(self, vec) -> bool:
        return self.ech.insert(vec if isinstance(vec, dict) else vec.vec)

    def contains(self, vec) -> bool:
        return self.ech.contains(vec if isinstance(vec, dict) else vec.vec)

    @property
    def dim(self) -> int:
        return self.ech.rank

    def basis_vecs(self) -> list[dict]:
        return self.ech.basis()

    def elements(self) -> list[HElem]:
        return [HElem(self.H, v) for v in self.basis_vecs()]

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ech == other.ech

    def __le__(self, other: "Subspace") -> bool:
        return self.ech <= other.ech

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.H.dim})"


# ---------------------------------------------------------------------------
# commutators


def hopf_commutator(a: HElem, b: HElem) -> HElem:
    """{a, b} = sum a_1 b_1 S(a_2) S(b_2), straight from the comultiplication."""
    H = a.H
    out: dict = {}
    for (i, j), ca in H.comult_raw(a.vec).items():
        sj = H.antipode_raw({j: _ONE})
        for (k, l), cb in H.comult_raw(b.vec).items():
            term = H.mul_raw({i: _ONE}, {k: _ONE})
            term = H.mul_raw(term, sj)
            term = H.mul_raw(term, H.antipode_raw({l: _ONE}))
            vec_axpy(out, ca * cb, term)
    return HElem(H, out)


def _u_tensor(H: HopfAlgebra, vec: dict) -> dict:
    """U(a) = sum a_1 (x) S(a_2) in H (x) H."""
    return tensor_antipode_right(H, H.comult_raw(vec))


def n_commutator(elems) -> HElem:
    """sum a^1_1...a^n_1 S(a^1_2)...S(a^n_2) for elems = (a^1, ..., a^n)."""
    elems = list(elems)
    if not elems:
        raise ValueError("n_commutator needs at least one argument")
    H = elems[0].H
    acc = _u_tensor(H, elems[0].vec)
    for a in elems[1:]:
        acc = tensor_mult(H, acc, _u_tensor(H, a.vec))
    return HElem(H, tensor_flatten(H, acc))


def z_n(H: HopfAlgebra, n: int) -> HElem:
    """The n-th commutator of n copies of the integral; z_0 = 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return H.one()
    lam, _ = integrals(H)
    return n_commutator([lam] * n)


def Z_n_map(H: HopfAlgebra, n: int, h: HElem) -> HElem:
    """Z_n(h) = sum L^1_1...L^n_1 h S(L^1_2)...S(L^n_2) with n copies of the
    integral sandwiching h; Z_0(h) = h."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return HElem(H, dict(h.vec))
    lam, _ = integrals(H)
    sandwich = _u_tensor(H, lam.vec)
    acc = sandwich
    for _ in range(n - 1):
        acc = tensor_mult(H, acc, sandwich)
    out: dict = {}
    for (i, j), c in acc.items():
        term = H.mul_raw(H.mul_raw({i: _ONE}, h.vec), {j: _ONE})
        vec_axpy(out, c, term)
    return HElem(H, out)


# ---------------------------------------------------------------------------
# spans and closures


def com_span(H: HopfAlgebra, n: int, cap=None) -> Subspace:
    """Span of all n-th commutators (n = 2 gives Com).

    Multilinearity reduces the span to basis tuples; the U-tensor trick
    reduces those to products of novel tensors, so the work is bounded
    by rank growth rather than dim^n.  The nominal dim^n tuple count is
    still capped.
    """
    if n < 2:
        raise ValueError("com_span needs n >= 2")
    d = H.dim
    limit = cap if cap is not None else enum_cap()
    if d**n > limit:
        raise EnumerationCapExceeded(f"{d}^{n} basis tuples exceed cap {limit}")
    gens = [_u_tensor(H, {i: _ONE}) for i in range(d)]
    level = Echelon()
    novel = []
    for g in gens:
        if level.insert(g):
            novel.append(g)
    for _ in range(n - 1):
        nxt = Echelon()
        nxt_novel = []
        for t in novel:
            for g in gens:
                prod = tensor_mult(H, t, g)
                if nxt.insert(prod):
                    nxt_novel.append(prod)
        level, novel = nxt, nxt_novel
    out = Subspace(H)
    for row in level.basis():
        out.add(tensor_flatten(H, row))
    return out


def com_span_sampled(H: HopfAlgebra, n: int, seed: int = 0,
                     patience: int = 40) -> Subspace:
    """Lower bound for com_span(H, n) from random tuples: stops after
    ``patience`` consecutive samples without rank growth."""
    rng = random.Random(seed)
    out = Subspace(H)
    stale = 0
    while stale < patience:
        tup = [random_element(H, rng) for _ in range(n)]
        if out.add(n_commutator(tup)):
            stale = 0
        else:
            stale += 1
    return out


def coideal_closure(H: HopfAlgebra, vecs) -> Subspace:
    """Smallest left coideal containing the given vectors: closure under
    all components (p (x) id)(Delta v), i.e. under v <- p for p in H*."""
    space = Subspace(H, vecs)
    queue = list(space.basis_vecs())
    while queue:
        v = queue.pop()
        by_first: dict[int, dict] = {}
        for (i, j), c in H.comult_raw(v).items():
            row = by_first.setdefault(i, {})
            row[j] = row.get(j, _ZERO) + c
        for row in by_first.values():
            row = {j: c for j, c in row.items() if c}
            if row and space.add(row):
                queue.append(row)
    return space


def algebra_closure(H: HopfAlgebra, vecs) -> Subspace:
    """Smallest unital subalgebra containing the given vectors."""
    space = Subspace(H, [dict(H.unit_vec)])
    fresh = []
    for v in _as_vec_list(vecs):
        if space.add(v):
            fresh.append(v)
    while fresh:
        basis = space.basis_vecs()
        new = []
        for u in basis:
            for v in fresh:
                for prod in (H.mul_raw(u, v), H.mul_raw(v, u)):
                    if space.add(prod):
                        new.append(prod)
        fresh = new
    return space


def is_left_coideal(H: HopfAlgebra, space: Subspace) -> bool:
    """Delta(C) subset of H (x) C, checked leg by leg."""
    for v in space.basis_vecs():
        by_first: dict[int, dict] = {}
        for (i, j), c in H.comult_raw(v).items():
            row = by_first.setdefault(i, {})
            row[j] = row.get(j, _ZERO) + c
        for row in by_first.values():
            row = {j: c for j, c in row.items() if c}
            if row and not space.contains(row):
                return False
    return True


def commutator_subalgebra(H: HopfAlgebra) -> Subspace:
    """H', computed two ways and cross-checked:

    route A: the algebra generated by Com;
    route B: the joint fixed points of sigma -> (left hit) over all
             grouplikes sigma of H*.

    The agreed result is verified to be a unital subalgebra, a left
    coideal, and stable under the adjoint action.
    """
    com = com_span(H, 2)
    route_a = algebra_closure(H, com.basis_vecs())
    rows = []
    for sigma in grouplike_functionals(H):
        cols: dict[int, dict] = {}
        for j in range(H.dim):
            img = H.left_hit_raw(sigma.vec, {j: _ONE})
            img[j] = img.get(j, _ZERO) - _ONE
            for i, c in img.items():
                if c:
                    cols.setdefault(i, {})[j] = c
        rows.extend(cols.values())
    route_b = Subspace(H, nullspace(rows, H.dim, _ONE))
    if route_a != route_b:
        raise RouteMismatch(
            f"H' routes disagree: algebra of Com has dim {route_a.dim}, "
            f"grouplike fixed points dim {route_b.dim}")
    space = route_a
    if not space.contains(dict(H.unit_vec)):
        raise VerificationFailed("H' does not contain 1")
    basis = space.basis_vecs()
    for u in basis:
        for v in basis:
            if not space.contains(H.mul_raw(u, v)):
                raise VerificationFailed("H' is not closed under multiplication")
    if not is_left_coideal(H, space):
        raise VerificationFailed("H' is not a left coideal")
    for k in range(H.dim):
        for v in basis:
            if not space.contains(H.adjoint_raw({k: _ONE}, v)):
                raise VerificationFailed("H' is not stable under the adjoint action")
    return space


def _is_scalar_line(H: HopfAlgebra, space: Subspace) -> bool:
    return space.dim == 1 and space.contains(dict(H.unit_vec))


def _is_commutative(H: HopfAlgebra) -> bool:
    for (i, j) in H.mult:
        if i < j and H.mult.get((i, j)) != H.mult.get((j, i)):
            return False
    return True


def is_central(H: HopfAlgebra, vec) -> bool:
    v = vec if isinstance(vec, dict) else vec.vec
    for k in range(H.dim):
        if H.mul_raw({k: _ONE}, v) != H.mul_raw(v, {k: _ONE}):
            return False
    return True


def augmentation_ideal_span(H: HopfAlgebra, space: Subspace) -> Subspace:
    """H * S+ where S+ = ker(counit) restricted to the subspace S."""
    basis = space.basis_vecs()
    eps_vals = [H.counit_raw(v) for v in basis]
    plus = []
    anchor = next((t for t, e in enumerate(eps_vals) if e), None)
    for t, v in enumerate(basis):
        if not eps_vals[t]:
            plus.append(v)
        elif t != anchor:
            w = dict(v)
            vec_axpy(w, -(eps_vals[t] * eps_vals[anchor].inverse()), basis[anchor])
            plus.append(w)
    ideal = Subspace(H)
    for w in plus:
        for k in range(H.dim):
            ideal.add(H.mul_raw({k: _ONE}, w))
    return ideal


# ---------------------------------------------------------------------------
# theorem suite


def _entry(report, name, ok, witness=None):
    item = {"check": name, "status": "pass" if ok else "fail"}
    if witness is not None and not ok:
        item["witness"] = witness
    report.append(item)


def theorem_suite_sec2(H: HopfAlgebra, seed: int = 0) -> list[dict]:
    """Exact checks of the commutator-calculus identities on one instance.

    Report entries are {"check", "status", "witness"?}; all checks are
    pass/fail.
    """
    rng = random.Random(seed)
    report: list[dict] = []
    irred = require_irred(H)
    lam, _ = integrals(H)
    z = {n: z_n(H, n) for n in range(7)}

    _entry(report, "z1_is_unit", z[1] == H.one())

    ok = all(z[n] == z[2] ** (n // 2) for n in range(7))
    _entry(report, "zn_is_z2_power", ok,
           None if ok else [n for n in range(7) if z[n] != z[2] ** (n // 2)])

    def idem_form(n):
        out = HElem(H, {})
        for deg, E in zip(irred.degrees, irred.idempotents):
            out = out + CycNum.rational(Rational(1, deg ** (n - n % 2))) * E
        return out

    ok = all(z[n] == idem_form(n) for n in range(2, 6))
    _entry(report, "zn_idempotent_expansion", ok)

    _entry(report, "z2_central", is_central(H, z[2]))

    z2_inv = HElem(H, {})
    for deg, E in zip(irred.degrees, irred.idempotents):
        z2_inv = z2_inv + CycNum.rational(deg * deg) * E
    _entry(report, "z2_invertible", z[2] * z2_inv == H.one()
           and z2_inv * z[2] == H.one())

    _entry(report, "z2_antipode_fixed",
           HElem(H, H.antipode_raw(z[2].vec)) == z[2])

    ok = all(chi(z[2]) == CycNum.rational(Rational(1, deg))
             for deg, chi in zip(irred.degrees, irred.characters))
    _entry(report, "chi_of_z2_is_inverse_degree", ok)

    commutative = _is_commutative(H)
    scalar = z[2].vec == H.unit_vec
    _entry(report, "z2_scalar_iff_commutative", scalar == commutative,
           {"z2_scalar": scalar, "commutative": commutative})

    samples = [random_element(H, rng) for _ in range(3)]
    ok = True
    witness = None
    for n in (2, 3, 4, 5):
        for h in samples:
            if Z_n_map(H, n, h) != z[2] * Z_n_map(H, n - 2, h):
                ok = False
                witness = {"n": n}
    _entry(report, "Zn_recursion", ok, witness)

    ok = all(Z_n_map(H, 2 * k, h) == z[2 * k] * h
             for k in (0, 1, 2) for h in samples)
    _entry(report, "Z_even_multiplies", ok)

    ok = all(is_central(H, Z_n_map(H, 2 * k + 1, h))
             for k in (0, 1, 2) for h in samples)
    _entry(report, "Z_odd_central", ok)

    ok = all(Z_n_map(H, 1, h) == HElem(H, H.adjoint_raw(lam.vec, h.vec))
             for h in samples)
    _entry(report, "Z1_is_adjoint_of_integral", ok)

    powers = {-1: z2_inv, 0: H.one(), 1: z[2], 2: z[2] * z[2]}
    ok = all(is_central(H, hopf_commutator(lam, powers[k]))
             for k in (-1, 0, 1, 2))
    _entry(report, "lambda_z2_power_commutator_central", ok)

    ok = True
    for _ in range(3):
        zc = HElem(H, {})
        for E in irred.idempotents:
            zc = zc + CycNum.rational(rng.randrange(-3, 4)) * E
        if not is_central(H, hopf_commutator(zc, lam)):
            ok = False
    _entry(report, "central_lambda_commutator_central", ok)

    pair_cache: dict = {}

    def basis_commutator(i, k):
        if (i, k) not in pair_cache:
            pair_cache[(i, k)] = hopf_commutator(
                HElem(H, {i: _ONE}), HElem(H, {k: _ONE})).vec
        return pair_cache[(i, k)]

    density = 1.0 if H.dim <= 12 else 0.3
    ok = True
    for _ in range(3):
        a = random_element(H, rng, density)
        b = random_element(H, rng, density)
        rhs: dict = {}
        for (i, j), ca in H.comult_raw(a.vec).items():
            for (k, l), cb in H.comult_raw(b.vec).items():
                tail = H.mul_raw({l: _ONE}, {j: _ONE})
                vec_axpy(rhs, ca * cb, H.mul_raw(basis_commutator(i, k), tail))
        if rhs != (a * b).vec:
            ok = False
    _entry(report, "product_from_commutators_identity", ok)

    com2 = com_span(H, 2)
    if H.dim > 36:
        com3 = com_span_sampled(H, 3, seed=seed)
        report.append({"check": "com3_lower_bound_sampled", "status": "evidence",
                       "witness": {"dim_lower_bound": com3.dim}})
    else:
        com3 = com_span(H, 3)
    _entry(report, "com_is_left_coideal", is_left_coideal(H, com2))
    _entry(report, "com2_in_com3", com2 <= com3)

    _entry(report, "com_scalar_iff_commutative",
           _is_scalar_line(H, com2) == commutative)

    hprime = None
    try:
        hprime = commutator_subalgebra(H)
        _entry(report, "hprime_routes_agree", True)
    except (RouteMismatch, VerificationFailed) as exc:
        _entry(report, "hprime_routes_agree", False, str(exc))

    if hprime is not None:
        ok = all(algebra_closure(H, coideal_closure(H, [z[n].vec])) == hprime
                 for n in (2, 3, 4))
        _entry(report, "hprime_from_zn_closures", ok)

        ok = all(hprime.contains(v) for v in com3.basis_vecs())
        _entry(report, "com3_in_hprime", ok)

        ok = all(hprime.contains(H.adjoint_raw({k: _ONE}, v))
                 for k in range(H.dim) for v in com2.basis_vecs())
        _entry(report, "adjoint_maps_com_into_hprime", ok)

        ideal = augmentation_ideal_span(H, hprime)
        ok = True
        for _ in range(5):
            a, b = random_element(H, rng), random_element(H, rng)
            if not ideal.contains((a * b - b * a).vec):
                ok = False
        _entry(report, "quotient_by_hprime_ideal_commutative", ok)
    else:
        for name in ("hprime_from_zn_closures", "com3_in_hprime",
                     "adjoint_maps_com_into_hprime",
                     "quotient_by_hprime_ideal_commutative"):
            _entry(report, name, False, "H' unavailable")

    ok = True
    for sigma in grouplike_functionals(H):
        for v in com2.basis_vecs() + com3.basis_vecs():
            if H.left_hit_raw(sigma.vec, v) != v:
                ok = False
    _entry(report, "grouplikes_fix_com", ok)

    iterated = Subspace(H)
    for u in com2.basis_vecs():
        for k in range(H.dim):
            iterated.add(hopf_commutator(HElem(H, u), HElem(H, {k: _ONE})).vec)
    iterated_scalar = _is_scalar_line(H, iterated)
    com_central = all(is_central(H, v) for v in com2.basis_vecs())
    _entry(report, "iterated_scalar_iff_com_central",
           iterated_scalar == com_central,
           {"iterated_scalar": iterated_scalar, "com_central": com_central})

    report.sort(key=lambda r: r["check"])
    return report


def probe_question_31(H: HopfAlgebra) -> list[dict]:
    """Evidence on the open question whether Com equals z_2 <- H*.

    Both subspaces are computed exactly; the report never fails."""
    com = com_span(H, 2)
    z2 = z_n(H, 2)
    hit = coideal_closure(H, [z2.vec])
    return [{
        "check": "question_com_equals_z2_hit",
        "status": "evidence",
        "witness": {
            "dim_com": com.dim,
            "dim_z2_hit": hit.dim,
            "z2_hit_in_com": hit <= com,
            "com_in_z2_hit": com <= hit,
            "equal": com == hit,
        },
    }]
