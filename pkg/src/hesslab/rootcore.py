"""Root systems together with their Weyl groups and Chevalley structure constants.

Roots are integer tuples over the simple roots (Bourbaki numbering). Positive
roots get indices ``0..N-1`` ordered by height, simple roots first in order; the
negative of root ``k`` has *full index* ``k + N``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .qlaurent import QPoly, qprod


class CapabilityError(ValueError):
    """Requested root system or size is outside what this library supports."""


SUPPORTED = {"A": 8, "B": 4, "C": 4, "D": 4, "G": 2}

Root = tuple


def cartan_matrix(typ: str, n: int) -> list[list[int]]:
    """``A[i][j] = <alpha_j, alpha_i^vee>``."""
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if typ in "ABCD":
        for i in range(n - 1):
            A[i][i + 1] = A[i + 1][i] = -1
    if typ == "B":
        A[n - 1][n - 2] = -2   # alpha_n short
    elif typ == "C":
        A[n - 2][n - 1] = -2   # alpha_n long
    elif typ == "D":
        # alpha_{n-2} branches to alpha_{n-1} and alpha_n
        A[n - 2][n - 1] = A[n - 1][n - 2] = 0
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1
    elif typ == "G":
        A = [[2, -3], [-1, 2]]  # alpha_1 short
    return A


def parse_system(label: str) -> tuple[str, int]:
    label = label.strip().upper()
    if len(label) < 2 or not label[1:].isdigit():
        raise CapabilityError(f"cannot parse root system label {label!r}")
    return label[0], int(label[1:])


@dataclass(frozen=True, eq=False)
class WeylElt:
    """A Weyl group element stored by its action on the full root index set.

    ``act[k]`` is the full index of ``w(root k)`` for positive ``k``.
    """

    act: bytes
    word: tuple[int, ...] = ()
    length: int = 0

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.act == other.act

    def __hash__(self):
        return hash(self.act)

    def __repr__(self):
        return f"WeylElt(word={''.join(str(i + 1) for i in self.word) or 'e'})"


@dataclass(eq=False)
class RootSystem:
    typ: str
    rank: int
    cartan: list[list[int]]
    positive: list[Root]
    index: dict[Root, int]
    root_len2: list[Fraction]            # (alpha_i, alpha_i) for simple roots
    _weyl: list | None = field(default=None, repr=False)

    # -- basic data ------------------------------------------------------
    @property
    def label(self) -> str:
        return f"{self.typ}{self.rank}"

    @property
    def N(self) -> int:
        return len(self.positive)

    @property
    def simple(self) -> list[int]:
        return list(range(self.rank))

    def root(self, full: int) -> Root:
        N = self.N
        if full < N:
            return self.positive[full]
        return tuple(-c for c in self.positive[full - N])

    def find(self, r: Sequence[int]) -> int | None:
        """Full index of a root given by coordinates, or None if not a root."""
        r = tuple(r)
        k = self.index.get(r)
        if k is not None:
            return k
        k = self.index.get(tuple(-c for c in r))
        return None if k is None else k + self.N

    def neg(self, full: int) -> int:
        return full + self.N if full < self.N else full - self.N

    def is_positive(self, full: int) -> bool:
        return full < self.N

    def height(self, k: int) -> int:
        return sum(self.root(k))

    def key(self, k: int) -> str:
        """Coefficient string such as ``'122'``."""
        return "".join(str(c) for c in self.root(k))

    def pairing(self, beta: Sequence[int], i: int) -> int:
        """``<beta, alpha_i^vee>`` for a simple root index ``i``."""
        if not 0 <= i < self.rank:
            raise ValueError("pairing needs a simple root index")
        return sum(b * self.cartan[i][j] for j, b in enumerate(beta))

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        tot = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        tot += ai * bj * self.cartan[i][j] * self.root_len2[i] / 2
        return tot

    def len2(self, k: int) -> Fraction:
        r = self.root(k)
        return self.inner(r, r)

    def reflect(self, beta: Sequence[int], i: int) -> Root:
        c = self.pairing(beta, i)
        b = list(beta)
        b[i] -= c
        return tuple(b)

    def add(self, a: int, b: int) -> int | None:
        """Full index of root a + root b, or None."""
        return self.find(tuple(x + y for x, y in zip(self.root(a), self.root(b))))

    # -- invariants --------------------------------------------------------
    @cached_property
    def heights(self) -> list[int]:
        return [sum(r) for r in self.positive]

    @cached_property
    def coxeter_number(self) -> int:
        return max(self.heights) + 1

    @cached_property
    def degrees(self) -> list[int]:
        """Fundamental degrees from the height partition of the positive roots."""
        counts = [0] * (max(self.heights) + 1)
        for h in self.heights:
            counts[h] += 1
        parts = [c for c in counts[1:]]
        # exponents form the conjugate of the partition of root counts per height
        exps = []
        for e in range(1, len(parts) + 1):
            exps.extend([e] * (parts[e - 1] - (parts[e] if e < len(parts) else 0)))
        return sorted(e + 1 for e in exps)

    def poincare_GB(self) -> QPoly:
        return qprod(self.degrees)

    # -- Weyl group -------------------------------------------------------
    @cached_property
    def _simple_refl(self) -> list[list[int]]:
        """Full-index permutation for each simple reflection."""
        out = []
        N = self.N
        for i in range(self.rank):
            perm = [0] * (2 * N)
            for k in range(N):
                img = self.find(self.reflect(self.positive[k], i))
                perm[k] = img
                perm[k + N] = self.neg(img)
            out.append(perm)
        return out

    def identity(self) -> WeylElt:
        return WeylElt(bytes(range(self.N)), (), 0)

    def _full(self, w: WeylElt, k: int) -> int:
        N = self.N
        if k < N:
            return w.act[k]
        return self.neg(w.act[k - N])

    def apply(self, w: WeylElt, k: int) -> int:
        """Full index of ``w(root k)``."""
        return self._full(w, k)

    def apply_vec(self, w: WeylElt, v: Sequence[int]) -> tuple[int, ...]:
        """Action on an arbitrary vector of the root lattice (simple-root coords)."""
        out = [0] * self.rank
        for i, c in enumerate(v):
            if c:
                img = self.root(w.act[i])
                for j in range(self.rank):
                    out[j] += c * img[j]
        return tuple(out)

    def mul_simple(self, w: WeylElt, i: int) -> WeylElt:
        """Right multiplication ``w * s_i``."""
        s = self._simple_refl[i]
        act = bytes(self._full(w, s[k]) for k in range(self.N))
        ln = sum(1 for a in act if a >= self.N)
        return WeylElt(act, w.word + (i,), ln)

    def compose(self, u: WeylElt, v: WeylElt) -> WeylElt:
        """``u * v`` (apply v first). The stored word is a concatenation, not reduced."""
        act = bytes(self._full(u, v.act[k]) for k in range(self.N))
        ln = sum(1 for a in act if a >= self.N)
        return WeylElt(act, u.word + v.word, ln)

    def inverse(self, w: WeylElt) -> WeylElt:
        N = self.N
        inv = [0] * N
        for k in range(N):
            img = w.act[k]
            if img < N:
                inv[img] = k
            else:
                inv[img - N] = k + N
        return WeylElt(bytes(inv), tuple(reversed(w.word)), w.length)

    def from_word(self, word: Iterable[int]) -> WeylElt:
        w = self.identity()
        for i in word:
            w = self.mul_simple(w, i)
        return w

    def inversions(self, w: WeylElt) -> list[int]:
        """Positive roots sent to negative roots."""
        return [k for k in range(self.N) if w.act[k] >= self.N]

    def matrix(self, w: WeylElt) -> list[list[int]]:
        """Matrix on the simple-root basis; column j is ``w(alpha_j)``."""
        cols = [self.root(w.act[j]) for j in range(self.rank)]
        return [[cols[j][i] for j in range(self.rank)] for i in range(self.rank)]

    def weyl_size(self) -> int:
        t, n = self.typ, self.rank
        return {"A": factorial(n + 1), "B": 2 ** n * factorial(n), "C": 2 ** n * factorial(n),
                "D": 2 ** (n - 1) * factorial(n), "G": 12}[t]


def build_root_system(typ: str, rank: int | None = None) -> RootSystem:
    if rank is None:
        typ, rank = parse_system(typ)
    typ = typ.upper()
    lim = SUPPORTED.get(typ)
    ok = lim is not None and 1 <= rank <= lim
    if typ in "BC" and rank < 2 or typ == "D" and rank < 3 or typ == "G" and rank != 2:
        ok = False
    if not ok:
        raise CapabilityError(f"unsupported root system {typ}{rank}")
    A = cartan_matrix(typ, rank)
    n = rank

    def pair(beta, i):
        return sum(b * A[i][j] for j, b in enumerate(beta))

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i string through beta: beta - p alpha_i, ..., beta + q alpha_i
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in roots:
                        p += 1
                    else:
                        break
                qq = p - pair(beta, i)
                if qq > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    positive = sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))
    index = {r: k for k, r in enumerate(positive)}
    # symmetrize the Cartan matrix to get squared lengths of simple roots
    L: list[Fraction | None] = [None] * n
    L[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and A[i][j] and L[j] is None:
                # A[i][j] L_i = A[j][i] L_j
                L[j] = L[i] * A[i][j] / A[j][i]
                stack.append(j)
    top = max(L)
    L = [x * 2 / top for x in L]  # long roots have squared length 2
    return RootSystem(typ, n, A, positive, index, L)


def weyl_enumerate(rs: RootSystem, guard: int = 10 ** 7) -> list[WeylElt]:
    """All Weyl group elements, by breadth-first right multiplication."""
    if rs._weyl is not None:
        return rs._weyl
    if rs.weyl_size() > guard:
        raise CapabilityError(f"|W({rs.label})| = {rs.weyl_size()} exceeds guard {guard}")
    e = rs.identity()
    seen = {e.act: e}
    out = [e]
    dq = deque([e])
    while dq:
        w = dq.popleft()
        for i in range(rs.rank):
            if w.act[i] >= rs.N:   # w s_i shorter than w
                continue
            v = rs.mul_simple(w, i)
            if v.act not in seen:
                seen[v.act] = v
                out.append(v)
                dq.append(v)
    rs._weyl = out
    return out


def weyl_poincare(rs: RootSystem) -> QPoly:
    c: dict[int, int] = {}
    for w in weyl_enumerate(rs):
        c[w.length] = c.get(w.length, 0) + 1
    return QPoly(c)


def parabolic_subgroup(rs: RootSystem, levi: Iterable[int]) -> list[WeylElt]:
    """W_L for a subset of simple roots: elements whose inversions lie in Phi_L."""
    L = set(levi)
    inL = [all(c == 0 or i in L for i, c in enumerate(r)) for r in rs.positive]
    return [w for w in weyl_enumerate(rs) if all(inL[k] for k in rs.inversions(w))]


def min_coset_reps(rs: RootSystem, delta0: Iterable[int]) -> list[WeylElt]:
    """Elements w with ``w^{-1}(alpha) > 0`` for all alpha in ``delta0``."""
    d0 = list(delta0)
    out = []
    for w in weyl_enumerate(rs):
        winv = rs.inverse(w)
        if all(winv.act[i] < rs.N for i in d0):
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# Chevalley basis

class ChevalleyBasis:
    """Structure constants by the extraspecial-pair construction.

    Basis ordering for coordinate lists: full root indices ``0..2N-1``
    followed by the Cartan elements ``h_1..h_n`` (simple coroots).
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        N = rs.N
        self.dim = 2 * N + rs.rank
        self._pos: dict[tuple[int, int], Fraction] = {}
        order = list(range(N))  # already by height then lex
        by_sum: dict[int, list[tuple[int, int]]] = {}
        for a in order:
            for b in order:
                if a < b:
                    s = rs.add(a, b)
                    if s is not None:
                        by_sum.setdefault(s, []).append((a, b))
        for xi in sorted(by_sum, key=lambda k: rs.heights[k]):
            pairs = sorted(by_sum[xi])
            g, d = pairs[0]                     # extraspecial pair
            self._pos[(g, d)] = Fraction(self._p(g, d) + 1)
            self._pos[(d, g)] = -self._pos[(g, d)]
            lxi = rs.len2(xi)
            for a, b in pairs[1:]:
                tot = Fraction(0)
                # four-term relation with r=a, s=b, t=-g, u=-d
                for x, y, z, w in ((b, rs.neg(g), a, rs.neg(d)), (rs.neg(g), a, b, rs.neg(d))):
                    sxy = rs.add(x, y)
                    if sxy is not None:
                        tot += self.N(x, y) * self.N(z, w) / rs.len2(sxy)
                val = -tot * lxi / self.N(rs.neg(g), rs.neg(d))
                self._pos[(a, b)] = val
                self._pos[(b, a)] = -val

    def _p(self, a: int, b: int) -> int:
        """Largest p with root_b - p root_a a root."""
        rs = self.rs
        ra, rb = rs.root(a), rs.root(b)
        p = 0
        while rs.find(tuple(y - (p + 1) * x for x, y in zip(ra, rb))) is not None:
            p += 1
        return p

    def N(self, r: int, s: int) -> Fraction:
        """Structure constant for full root indices with ``r + s`` a root."""
        rs = self.rs
        Np = rs.N
        if r < Np and s < Np:
            return self._pos[(r, s)]
        if r >= Np and s >= Np:
            return -self._pos[(r - Np, s - Np)]
        t = rs.find(tuple(-(x + y) for x, y in zip(rs.root(r), rs.root(s))))
        # r + s + t = 0:  N_rs/(t,t) = N_st/(r,r) = N_tr/(s,s)
        if (s < Np) == (t < Np):
            return rs.len2(t) / rs.len2(r) * self.N(s, t)
        return rs.len2(t) / rs.len2(s) * self.N(t, r)

    def structure_constant(self, r: int, s: int) -> int:
        v = self.N(r, s)
        assert v.denominator == 1
        return v.numerator

    def coroot(self, k: int) -> list[Fraction]:
        """``h_gamma`` in the basis of simple coroots."""
        rs = self.rs
        r = rs.root(k)
        lk = rs.len2(k)
        return [c * rs.root_len2[i] / lk for i, c in enumerate(r)]

    def bracket_basis(self, a: int, b: int) -> dict[int, Fraction]:
        """Bracket of two basis elements as a sparse coordinate dict."""
        rs = self.rs
        Np = rs.N
        R = 2 * Np
        if a >= R and b >= R:
            return {}
        if a >= R:
            i = a - R
            c = rs.pairing(rs.root(b), i)
            return {b: Fraction(c)} if c else {}
        if b >= R:
            out = self.bracket_basis(b, a)
            return {k: -v for k, v in out.items()}
        if b == rs.neg(a):
            return {R + i: c for i, c in enumerate(self.coroot(a)) if c}
        s = rs.add(a, b)
        if s is None:
            return {}
        return {s: self.N(a, b)}

    def bracket(self, x: Sequence, y: Sequence) -> list:
        """Bracket of two dense coordinate lists."""
        out = [Fraction(0)] * self.dim
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if not yb:
                    continue
                for k, v in self.bracket_basis(a, b).items():
                    out[k] += xa * yb * v
        return out


def chevalley_basis(rs: RootSystem) -> ChevalleyBasis:
    return ChevalleyBasis(rs)


def chevalley_bracket(cb: ChevalleyBasis, x: Sequence, y: Sequence) -> list:
    return cb.bracket(x, y)


def classical_degrees(typ: str, n: int) -> list[int]:
    if typ == "A":
        return list(range(2, n + 2))
    if typ in "BC":
        return list(range(2, 2 * n + 1, 2))
    if typ == "D":
        return sorted(list(range(2, 2 * n - 1, 2)) + [n])
    if typ == "G":
        return [2, 6]
    raise CapabilityError(typ)


def to_eps(rs: RootSystem, r: Sequence[int]) -> tuple[int, ...]:
    """Epsilon coordinates of a root lattice vector for classical types."""
    n = rs.rank
    if rs.typ == "A":
        v = [0] * (n + 1)
        for i, c in enumerate(r):
            v[i] += c
            v[i + 1] -= c
        return tuple(v)
    v = [0] * n
    if rs.typ not in "BCD":
        raise CapabilityError(f"no epsilon coordinates for {rs.label}")
    for i, c in enumerate(r):
        if rs.typ in "BC" and i == n - 1:
            v[i] += c * (1 if rs.typ == "B" else 2)
        elif rs.typ == "D" and i == n - 1:
            v[n - 2] += c
            v[n - 1] += c
        else:
            v[i] += c
            v[i + 1] -= c
    return tuple(v)
