"""Exact character tables of finite groups and group-algebra idempotents.

The table is computed by the Burnside-Dixon mod-p method: the commuting
class-sum matrices are simultaneously diagonalised over F_p (p == 1 mod
exponent(G), p > 2|G|), degrees and character values are read off mod p,
and each value is lifted to the cyclotomic field Q(zeta_exponent) by a
discrete Fourier transform on the eigenvalue multiplicities.  The mod-p
phase is untrusted scaffolding: every lifted table is re-verified exactly
(degrees, both orthogonality relations, and the central-character
identity against the class algebra) before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import runlog
from ._modp import common_eigenvectors, element_of_order, next_prime_in_ap
from .errors import BadPrime, VerificationFailed
from .exactnum import CycNum, Rational
from .group import ClassPartition, FiniteGroup, power_map

_MAX_PRIME_RETRIES = 5


@dataclass(frozen=True)
class ClassAlgebra:
    """Structure constants of the class algebra: C_i C_j = sum_k a[i][j][k] C_k."""

    classes: ClassPartition
    constants: tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class CharacterTable:
    classes: ClassPartition
    class_labels: tuple[str, ...]
    degrees: tuple[int, ...]
    values: tuple[tuple[CycNum, ...], ...]

    @property
    def n_irreducibles(self) -> int:
        return len(self.degrees)

    @property
    def group_order(self) -> int:
        return sum(self.classes.sizes)

    def value(self, i: int, class_index: int) -> CycNum:
        return self.values[i][class_index]

    def to_dict(self) -> dict:
        return {
            "classes": {
                "reps": list(self.classes.reps),
                "sizes": list(self.classes.sizes),
                "labels": list(self.class_labels),
                "inverse_class": list(self.classes.inverse_class),
            },
            "degrees": list(self.degrees),
            "values": [[v.to_dict() for v in row] for row in self.values],
        }

    def markdown(self) -> str:
        head = ["chi \\ class"] + [
            f"{lbl} ({sz})"
            for lbl, sz in zip(self.class_labels, self.classes.sizes)
        ]
        lines = ["| " + " | ".join(head) + " |",
                 "|" + "---|" * len(head)]
        for i, row in enumerate(self.values):
            cells = [f"chi_{i}"] + [str(v) for v in row]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines)


def class_structure_constants(G: FiniteGroup) -> ClassAlgebra:
    """Exact integer tensor a_{ijk} with C_i C_j = sum_k a_{ijk} C_k."""
    conj = G.conjugacy_data()
    n = conj.n_classes
    cls = conj.class_of
    counts = [[[0] * n for _ in range(n)] for _ in range(n)]
    for x in range(G.order):
        row = G.table[x]
        ci = cls[x]
        for y in range(G.order):
            counts[ci][cls[y]][cls[row[y]]] += 1
    const = []
    for i in range(n):
        rows = []
        for j in range(n):
            rows.append(tuple(counts[i][j][k] // conj.sizes[k] for k in range(n)))
            for k in range(n):
                if counts[i][j][k] % conj.sizes[k]:
                    raise VerificationFailed(
                        f"class product count not class-constant at ({i},{j},{k})")
        const.append(tuple(rows))
    return ClassAlgebra(classes=conj, constants=tuple(const))


# ---------------------------------------------------------------------------
# Dixon lift


def _central_character_vectors(mats, n, p, rng):
    """Joint eigenvectors of the class-sum matrices, normalised so the
    identity-class coordinate is 1; None when the prime fails to split."""
    vecs = common_eigenvectors(mats, n, p, rng)
    if vecs is None:
        return None
    out = []
    for v in vecs:
        if v[0] % p == 0:
            return None
        inv = pow(v[0], -1, p)
        out.append([x * inv % p for x in v])
    if len({tuple(v) for v in out}) != n:
        return None
    return out


def _isqrt_exact(n: int):
    r = int(n**0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def _lift_table(G, algebra, p, rng):
    """One Dixon attempt at prime p; returns (degrees, values) or None."""
    conj = algebra.classes
    n = conj.n_classes
    order = G.order
    e = G.exponent()
    mats = []
    for i in range(1, n):
        mats.append([[algebra.constants[i][j][k] % p for k in range(n)]
                     for j in range(n)])
    if not mats:  # trivial group
        vecs = [[1]]
    else:
        vecs = _central_character_vectors(mats, n, p, rng)
        if vecs is None:
            return None
    z = element_of_order(e, p, rng)
    zpow = [pow(z, t, p) for t in range(e)]
    zinv = [pow(z, -t % e, p) for t in range(e)]
    inv_e = pow(e, -1, p)
    powers = [[power_map(G, j, s) for s in range(e)] for j in range(n)]

    rows = []
    for v in vecs:
        s = sum(v[j] * v[conj.inverse_class[j]] * pow(conj.sizes[j], -1, p)
                for j in range(n)) % p
        if s == 0:
            return None
        dd = order * pow(s, -1, p) % p
        d = _isqrt_exact(dd) if dd <= order else None
        if d is None or d == 0:
            return None
        theta = [d * v[j] * pow(conj.sizes[j], -1, p) % p for j in range(n)]
        values = []
        for j in range(n):
            mults = []
            for t in range(e):
                m = sum(theta[powers[j][s]] * zinv[(t * s) % e] for s in range(e))
                m = m * inv_e % p
                if m > d:
                    return None
                mults.append(m)
            if sum(mults) != d:
                return None
            val = CycNum.rational(mults[0])
            for t in range(1, e):
                if mults[t]:
                    val = val + CycNum.zeta(e, t) * CycNum.rational(mults[t])
            values.append(val)
        rows.append((d, tuple(values)))

    one = CycNum.rational(1)
    rows.sort(key=lambda row: (
        0 if all(v == one for v in row[1]) else 1,
        row[0],
        tuple(v.sort_key() for v in row[1]),
    ))
    degrees = tuple(r[0] for r in rows)
    values = tuple(r[1] for r in rows)
    return degrees, values


def _verify_table(G, algebra, degrees, values):
    conj = algebra.classes
    n = conj.n_classes
    order = G.order
    one = CycNum.rational(1)
    if len(degrees) != n:
        raise VerificationFailed("wrong number of irreducibles")
    if any(v != one for v in values[0]):
        raise VerificationFailed("first row is not the trivial character")
    if sum(d * d for d in degrees) != order:
        raise VerificationFailed("degree squares do not sum to |G|")
    for i, d in enumerate(degrees):
        if d <= 0 or order % d:
            raise VerificationFailed(f"degree {d} of row {i} does not divide |G|")
        if values[i][0] != CycNum.rational(d):
            raise VerificationFailed(f"row {i} value at identity != degree")
    inv = conj.inverse_class
    for i in range(n):
        for i2 in range(i, n):
            acc = CycNum.rational(0)
            for j in range(n):
                acc = acc + CycNum.rational(conj.sizes[j]) * values[i][j] * values[i2][inv[j]]
            want = CycNum.rational(order if i == i2 else 0)
            if acc != want:
                raise VerificationFailed(f"row orthogonality fails at ({i},{i2})")
    for j in range(n):
        for j2 in range(n):
            acc = CycNum.rational(0)
            for i in range(n):
                acc = acc + values[i][j] * values[i][inv[j2]]
            want = CycNum.rational(Rational(order, conj.sizes[j]) if j == j2 else 0)
            if acc != want:
                raise VerificationFailed(f"column orthogonality fails at ({j},{j2})")
    # Central characters omega_i(C_j) = size_j chi_i(g_j)/d_i must represent
    # the class algebra.
    for i in range(n):
        d = Rational(1, degrees[i])
        omega = [CycNum.rational(Rational(conj.sizes[j], 1) * d) * values[i][j]
                 for j in range(n)]
        for a in range(n):
            for b in range(n):
                acc = CycNum.rational(0)
                for k in range(n):
                    c = algebra.constants[a][b][k]
                    if c:
                        acc = acc + CycNum.rational(c) * omega[k]
                if acc != omega[a] * omega[b]:
                    raise VerificationFailed(
                        f"central character identity fails at row {i}, ({a},{b})")


def dixon_character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    """Exact character table of G, rows sorted with the trivial character
    first and the remaining rows by (degree, value key)."""
    algebra = class_structure_constants(G)
    rng = random.Random(seed)
    e = G.exponent()
    p = next_prime_in_ap(max(2 * G.order, e, 2), e)
    last_error: Exception | None = None
    for _ in range(_MAX_PRIME_RETRIES):
        try:
            lifted = _lift_table(G, algebra, p, rng)
        except BadPrime as exc:
            lifted = None
            last_error = exc
            runlog.record("dixon", group=G.name, prime=p, outcome="bad_prime")
        if lifted is not None:
            degrees, values = lifted
            try:
                _verify_table(G, algebra, degrees, values)
            except VerificationFailed as exc:
                last_error = exc
                runlog.record("dixon", group=G.name, prime=p,
                              outcome="verification_failed")
            else:
                runlog.record("dixon", group=G.name, prime=p, outcome="ok")
                labels = tuple(G.labels[r] for r in algebra.classes.reps)
                return CharacterTable(
                    classes=algebra.classes,
                    class_labels=labels,
                    degrees=degrees,
                    values=values,
                )
        p = next_prime_in_ap(p, e)
    raise VerificationFailed(
        f"character table of {G.name} failed verification after "
        f"{_MAX_PRIME_RETRIES} primes: {last_error}")


# ---------------------------------------------------------------------------
# central primitive idempotents of kG


def _convolve(G: FiniteGroup, u: list[CycNum], v: list[CycNum]) -> list[CycNum]:
    zero = CycNum.rational(0)
    out = [zero] * G.order
    for g, cu in enumerate(u):
        if not cu:
            continue
        row = G.table[g]
        for h, cv in enumerate(v):
            if cv:
                k = row[h]
                out[k] = out[k] + cu * cv
    return out


def group_central_idempotents(G: FiniteGroup, table: CharacterTable) -> list[list[CycNum]]:
    """Central primitive idempotents E_i = (d_i/|G|) sum_g chi_i(g^-1) g of
    the group algebra, as coefficient vectors over the group-element basis.
    Verified exactly: pairwise orthogonal idempotents summing to 1."""
    conj = table.classes
    order = G.order
    idempotents = []
    for i, d in enumerate(table.degrees):
        scale = CycNum.rational(Rational(d, order))
        vec = [scale * table.values[i][conj.class_of[G.inverse(g)]]
               for g in range(order)]
        idempotents.append(vec)
    zero = CycNum.rational(0)
    total = [zero] * order
    for i, ei in enumerate(idempotents):
        for j, ej in enumerate(idempotents):
            prod = _convolve(G, ei, ej)
            want = ei if i == j else [zero] * order
            if prod != want:
                raise VerificationFailed(f"idempotent product E_{i}E_{j} is wrong")
        total = [a + b for a, b in zip(total, ei)]
    unit = [zero] * order
    unit[G.identity] = CycNum.rational(1)
    if total != unit:
        raise VerificationFailed("central idempotents do not sum to 1")
    return idempotents
