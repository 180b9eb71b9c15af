"""Exact sparse linear algebra over any field-like scalar (CycNum, Fraction).

Vectors are dicts {index: nonzero scalar}.  Echelon keeps a reduced row
echelon basis, so a subspace has exactly one representation and subspace
equality is plain row comparison.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Optional

Vec = dict


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for j, x in b.items():
        if j in out:
            s = out[j] + x
            if s:
                out[j] = s
            else:
                del out[j]
        else:
            out[j] = x
    return out


def vec_sub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for j, x in b.items():
        if j in out:
            s = out[j] - x
            if s:
                out[j] = s
            else:
                del out[j]
        else:
            out[j] = -x
    return out


def vec_scale(a: Vec, c) -> Vec:
    if not c:
        return {}
    return {j: x * c for j, x in a.items()}


def vec_axpy(out: Vec, c, a: Vec) -> None:
    # out += c*a, in place
    if not c:
        return
    for j, x in a.items():
        v = c * x
        if j in out:
            s = out[j] + v
            if s:
                out[j] = s
            else:
                del out[j]
        else:
            out[j] = v


class Echelon:
    """A growing reduced-row-echelon basis; rows indexed by pivot column."""

    def __init__(self):
        self.rows: dict = {}  # pivot column -> row vec (pivot coefficient 1)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        """Residual of v after eliminating all pivot columns."""
        out = dict(v)
        # Reduced rows only touch columns >= their pivot, so one ascending
        # pass over the pivots present suffices.
        for p in sorted(self.rows):
            c = out.get(p)
            if c:
                row = self.rows[p]
                for j, x in row.items():
                    if j == p:
                        continue
                    cx = c * x
                    if j in out:
                        s = out[j] - cx
                        if s:
                            out[j] = s
                        else:
                            del out[j]
                    else:
                        out[j] = -cx
                del out[p]
        return out

    def insert(self, v: Vec) -> bool:
        """Add v to the span; returns True if the rank grew."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        c = r[p]
        row = {j: x / c for j, x in r.items()}
        for q, other in self.rows.items():
            f = other.get(p)
            if f:
                for j, x in row.items():
                    if j == p:
                        del other[p]
                        continue
                    fx = f * x
                    if j in other:
                        s = other[j] - fx
                        if s:
                            other[j] = s
                        else:
                            del other[j]
                    else:
                        other[j] = -fx
        self.rows[p] = row
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def basis(self) -> list[Vec]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, Echelon):
            return NotImplemented
        return self.rows == other.rows

    def __le__(self, other: "Echelon") -> bool:
        return all(other.contains(row) for row in self.rows.values())


class Solver:
    """Echelon with combination tracking: expresses vectors in an inserted
    spanning set."""

    def __init__(self):
        self.rows: dict = {}  # pivot -> (row, combo over tags)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Vec):
        out = dict(v)
        combo: dict = {}
        for p in sorted(self.rows):
            c = out.get(p)
            if c:
                row, rc = self.rows[p]
                for j, x in row.items():
                    if j == p:
                        continue
                    cx = c * x
                    if j in out:
                        s = out[j] - cx
                        if s:
                            out[j] = s
                        else:
                            del out[j]
                    else:
                        out[j] = -cx
                del out[p]
                for t, x in rc.items():
                    cx = c * x
                    if t in combo:
                        s = combo[t] + cx
                        if s:
                            combo[t] = s
                        else:
                            del combo[t]
                    else:
                        combo[t] = cx
        return out, combo

    def insert(self, v: Vec, tag: Hashable) -> bool:
        res, combo = self._reduce(v)
        if not res:
            return False
        p = min(res)
        c = res[p]
        row = {j: x / c for j, x in res.items()}
        # res = v - sum(combo*b); row combo = (e_tag - combo)/c
        rcombo = {t: -x / c for t, x in combo.items()}
        one = c / c
        rcombo[tag] = rcombo.get(tag, one - one) + one / c
        if not rcombo[tag]:
            del rcombo[tag]
        for q, (other, oc) in self.rows.items():
            f = other.get(p)
            if f:
                for j, x in row.items():
                    if j == p:
                        del other[p]
                        continue
                    fx = f * x
                    if j in other:
                        s = other[j] - fx
                        if s:
                            other[j] = s
                        else:
                            del other[j]
                    else:
                        other[j] = -fx
                for t, x in rcombo.items():
                    fx = f * x
                    if t in oc:
                        s = oc[t] - fx
                        if s:
                            oc[t] = s
                        else:
                            del oc[t]
                    else:
                        oc[t] = -fx
        self.rows[p] = (row, rcombo)
        return True

    def express(self, v: Vec) -> Optional[dict]:
        """Coefficients writing v in the inserted set, or None."""
        res, combo = self._reduce(v)
        if res:
            return None
        return combo


def rank(vecs: Iterable[Vec]) -> int:
    ech = Echelon()
    for v in vecs:
        ech.insert(v)
    return ech.rank


def nullspace(constraint_rows: Iterable[Vec], ncols: int, one) -> list[Vec]:
    """Basis of {x in k^ncols : row . x = 0 for every constraint row}.

    ``one`` is the multiplicative unit of the scalar field.
    """
    ech = Echelon()
    for row in constraint_rows:
        ech.insert(row)
    pivots = set(ech.rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec: Vec = {f: one}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis
