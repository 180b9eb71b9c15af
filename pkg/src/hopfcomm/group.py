"""Finite groups as multiplication tables, a free-group word DSL, and the
brute-force word-counting oracle N_w."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import caps
from .errors import (ArityMismatch, ClosureCapExceeded, EnumerationCapExceeded,
                     NotAssociative, NotLatinSquare, WordSyntaxError)


class FiniteGroup:
    """A finite group given by its 0-based multiplication table."""

    def __init__(self, name: str, table: Sequence[Sequence[int]],
                 labels: Optional[Sequence[str]] = None, *, _trusted: bool = False):
        self.name = str(name)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        n = self.order
        if labels is None:
            labels = [f"g{i}" for i in range(n)]
        if len(labels) != n:
            raise ValueError("labels length does not match group order")
        self.labels = tuple(str(s) for s in labels)
        if not _trusted:
            self._validate_latin()
        self.identity = self._find_identity()
        self.inv = self._build_inverses()
        if not _trusted:
            self._validate_associative()
        self._classes: Optional[ClassPartition] = None

    # --- validation ---

    def _validate_latin(self):
        n = self.order
        if n == 0:
            raise NotLatinSquare("empty table")
        full = frozenset(range(n))
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise NotLatinSquare(f"row {i} has length {len(row)}, expected {n}")
            if frozenset(row) != full:
                raise NotLatinSquare(f"row {i} is not a permutation")
        for j in range(n):
            if frozenset(row[j] for row in self.table) != full:
                raise NotLatinSquare(f"column {j} is not a permutation")

    def _find_identity(self) -> int:
        n = self.order
        ident = tuple(range(n))
        for e in range(n):
            if self.table[e] == ident and tuple(self.table[a][e] for a in range(n)) == ident:
                return e
        raise NotAssociative("no two-sided identity element")

    def _build_inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(self.table[a].index(e) for a in range(self.order))

    def _validate_associative(self):
        n = self.order
        if n > 256:
            # Beyond desk scale the exhaustive n^3 sweep is skipped; loads of
            # this size come from generator closures, which are associative
            # by construction.
            return
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                if list(tab) != [ta[x] for x in tb]:
                    c = next(c for c in range(n) if tab[c] != ta[tb[c]])
                    raise NotAssociative(
                        f"(a*b)*c != a*(b*c) at a={a}, b={b}, c={c}")

    # --- basic operations ---

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, a: int, g: int) -> int:
        # g a g^-1
        return self.table[self.table[g][a]][self.inv[g]]

    def elements(self) -> range:
        return range(self.order)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[a], -k)
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != self.identity:
            acc = self.table[acc][a]
            k += 1
        return k

    def exponent(self) -> int:
        out = 1
        for a in self.elements():
            out = math.lcm(out, self.element_order(a))
        return out

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements() for b in self.elements())

    def centralizer(self, a: int) -> list[int]:
        t = self.table
        return [g for g in self.elements() if t[g][a] == t[a][g]]

    def subgroup(self, members: Iterable[int]) -> tuple["FiniteGroup", list[int]]:
        """The subgroup on the given (closed) element set, plus the map from
        subgroup indices back to parent indices."""
        members = sorted(set(members))
        pos = {g: i for i, g in enumerate(members)}
        try:
            table = [[pos[self.table[a][b]] for b in members] for a in members]
        except KeyError:
            raise ValueError("element set is not closed under multiplication")
        sub = FiniteGroup(f"{self.name}-sub{len(members)}", table,
                          [self.labels[g] for g in members], _trusted=True)
        return sub, members

    # --- conjugacy data ---

    def conjugacy_data(self) -> "ClassPartition":
        if self._classes is None:
            self._classes = _conjugacy_partition(self)
        return self._classes

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class ClassPartition:
    """Conjugacy classes; class 0 is the class of the identity."""

    class_of: tuple[int, ...]
    reps: tuple[int, ...]
    sizes: tuple[int, ...]
    elements: tuple[tuple[int, ...], ...]
    centralizer_orders: tuple[int, ...]
    inverse_class: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.reps)


def _conjugacy_partition(G: FiniteGroup) -> ClassPartition:
    seen = [False] * G.order
    raw = []
    for a in G.elements():
        if seen[a]:
            continue
        orbit = sorted({G.conj(a, g) for g in G.elements()})
        for x in orbit:
            seen[x] = True
        raw.append(orbit)
    # Identity class first, then by (size, smallest member).
    raw.sort(key=lambda orb: (orb[0] != G.identity, len(orb), orb[0]))
    class_of = [0] * G.order
    for idx, orb in enumerate(raw):
        for x in orb:
            class_of[x] = idx
    reps = tuple(orb[0] for orb in raw)
    sizes = tuple(len(orb) for orb in raw)
    cents = tuple(G.order // s for s in sizes)
    inv_class = tuple(class_of[G.inv[r]] for r in reps)
    assert sum(sizes) == G.order
    return ClassPartition(tuple(class_of), reps, sizes,
                          tuple(tuple(orb) for orb in raw), cents, inv_class)


def power_map(G: FiniteGroup, class_index: int, t: int) -> int:
    """The class containing g^t for g in the given class."""
    cl = G.conjugacy_data()
    return cl.class_of[G.power(cl.reps[class_index], t)]


# --- construction ---

def _perm_from_cycles(cycles: Sequence[Sequence[int]], npoints: int) -> tuple[int, ...]:
    perm = list(range(npoints))
    used: set = set()
    for cycle in cycles:
        pts = [int(p) - 1 for p in cycle]
        if any(p < 0 for p in pts):
            raise ValueError(f"cycle points are 1-based, got {list(cycle)}")
        if len(set(pts)) != len(pts) or used & set(pts):
            raise ValueError(f"cycles of one generator must be disjoint: {list(cycle)}")
        used.update(pts)
        for i, p in enumerate(pts):
            perm[p] = pts[(i + 1) % len(pts)]
    return tuple(perm)


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"


def from_perm_generators(name: str, generators: Sequence[Sequence[Sequence[int]]],
                         cap: Optional[int] = None) -> FiniteGroup:
    """Closure of permutation generators (cycles, 1-based points)."""
    cap = caps.dim_cap() if cap is None else cap
    npoints = 1
    for gen in generators:
        for cycle in gen:
            for p in cycle:
                npoints = max(npoints, int(p))
    gens = [_perm_from_cycles(g, npoints) for g in generators]
    ident = tuple(range(npoints))
    index = {ident: 0}
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(npoints))  # p . g
                if q not in index:
                    if len(elems) >= cap:
                        raise ClosureCapExceeded(
                            f"closure exceeded cap {cap}")
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    table = []
    for p in elems:
        row = []
        for q in elems:
            pq = tuple(p[q[i]] for i in range(npoints))  # (p.q)(x) = p(q(x))
            row.append(index[pq])
        table.append(row)
    return FiniteGroup(name, table, [_cycle_notation(p) for p in elems], _trusted=True)


def from_cayley(name: str, table: Sequence[Sequence[int]],
                labels: Optional[Sequence[str]] = None) -> FiniteGroup:
    return FiniteGroup(name, table, labels)


def load_group(spec: dict, cap: Optional[int] = None) -> FiniteGroup:
    """Build a group from a GroupSpec mapping."""
    if not isinstance(spec, dict):
        raise ValueError("group spec must be a JSON object")
    name = spec.get("name", "G")
    if "cayley" in spec:
        return from_cayley(name, spec["cayley"], spec.get("labels"))
    if "perm_generators" in spec:
        return from_perm_generators(name, spec["perm_generators"], cap=cap)
    raise ValueError("group spec needs a 'cayley' table or 'perm_generators'")


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(f"C{n}", table, [f"r{i}" if i else "e" for i in range(n)],
                       _trusted=True)


def quaternion_group() -> FiniteGroup:
    """Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k."""
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # basis product table for 1, i, j, k: (axis, sign)
    basis = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }

    def idx(axis, sign):
        return axis * 2 + (0 if sign == 1 else 1)

    def unpack(i):
        return i // 2, 1 if i % 2 == 0 else -1

    table = []
    for a in range(8):
        ax_a, s_a = unpack(a)
        row = []
        for b in range(8):
            ax_b, s_b = unpack(b)
            ax, s = basis[(ax_a, ax_b)]
            row.append(idx(ax, s * s_a * s_b))
        table.append(row)
    return FiniteGroup("Q8", table, labels)


# --- word DSL ---

@dataclass(frozen=True)
class Letter:
    index: int  # 1-based


@dataclass(frozen=True)
class Inverse:
    word: "Word"


@dataclass(frozen=True)
class Concat:
    parts: tuple["Word", ...]


@dataclass(frozen=True)
class Commutator:
    left: "Word"
    right: "Word"


Word = Letter | Inverse | Concat | Commutator


def arity(w: Word) -> int:
    if isinstance(w, Letter):
        return w.index
    if isinstance(w, Inverse):
        return arity(w.word)
    if isinstance(w, Concat):
        return max(arity(p) for p in w.parts)
    return max(arity(w.left), arity(w.right))


def word_to_str(w: Word) -> str:
    if isinstance(w, Letter):
        return f"x{w.index}"
    if isinstance(w, Inverse):
        inner = word_to_str(w.word)
        if isinstance(w.word, (Letter, Commutator)):
            return f"{inner}^-1"
        return f"({inner})^-1"
    if isinstance(w, Concat):
        # Nested concatenations keep parentheses so parsing is exact.
        return "".join(
            f"({word_to_str(p)})" if isinstance(p, Concat) else word_to_str(p)
            for p in w.parts)
    return f"[{word_to_str(w.left)},{word_to_str(w.right)}]"


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def error(self, message: str):
        raise WordSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_word(self, stop: str = "") -> Word:
        parts = [self.parse_term()]
        while True:
            c = self.peek()
            if not c or c in stop:
                break
            parts.append(self.parse_term())
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def parse_term(self) -> Word:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            k = self.parse_int()
            if k == 0:
                self.error("zero exponent is not a word")
            return _power(atom, k)
        return atom

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.src) and self.src[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.src[start:self.pos] == "-":
            self.error("expected an integer exponent")
        return int(self.src[start:self.pos])

    def parse_atom(self) -> Word:
        c = self.peek()
        if c == "x":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.src) and self.src[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                self.error("expected digits after 'x'")
            return Letter(int(self.src[start:self.pos]))
        if c == "[":
            self.pos += 1
            left = self.parse_word(stop=",")
            self.expect(",")
            right = self.parse_word(stop="]")
            self.expect("]")
            return Commutator(left, right)
        if c == "(":
            self.pos += 1
            inner = self.parse_word(stop=")")
            self.expect(")")
            return inner
        self.error("expected 'x<digits>', '[' or '('")


def _power(atom: Word, k: int) -> Word:
    if k == 1:
        return atom
    if k == -1:
        return Inverse(atom)
    if k < 0:
        return Inverse(_power(atom, -k))
    return Concat(tuple(atom for _ in range(k)))


def parse_word(src: str) -> Word:
    parser = _Parser(src)
    word = parser.parse_word()
    parser.skip_ws()
    if parser.pos != len(src):
        parser.error("trailing input")
    return word


def eval_word(w: Word, g_tuple: Sequence[int], G: FiniteGroup) -> int:
    if arity(w) > len(g_tuple):
        raise ArityMismatch(f"word needs {arity(w)} letters, got {len(g_tuple)}")
    return _eval(w, g_tuple, G)


def _eval(w: Word, t: Sequence[int], G: FiniteGroup) -> int:
    if isinstance(w, Letter):
        return t[w.index - 1]
    if isinstance(w, Inverse):
        return G.inv[_eval(w.word, t, G)]
    if isinstance(w, Concat):
        acc = G.identity
        for p in w.parts:
            acc = G.table[acc][_eval(p, t, G)]
        return acc
    a = _eval(w.left, t, G)
    b = _eval(w.right, t, G)
    # [a, b] = a b a^-1 b^-1
    return G.table[G.table[G.table[a][b]][G.inv[a]]][G.inv[b]]


def count_word(G: FiniteGroup, w: Word, cap: Optional[int] = None) -> tuple[int, ...]:
    """N_w: for each group element, the number of tuples mapping to it."""
    cap = caps.enum_cap() if cap is None else cap
    r = arity(w)
    total = G.order ** r
    if total > cap:
        raise EnumerationCapExceeded(f"{total} tuples exceeds cap {cap}")
    counts = [0] * G.order
    for t in itertools.product(G.elements(), repeat=r):
        counts[_eval(w, t, G)] += 1
    return tuple(counts)
