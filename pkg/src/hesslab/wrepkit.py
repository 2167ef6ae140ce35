"""Weyl group characters, coinvariant graded characters, Green matrices in
type A, and the linear algebra linking f-vectors, fiber Poincare polynomials
and LLT representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .combin import (bip_char, bipartitions, hook_dim, kostka_foulkes, mn_char,
                     n_stat, partitions)
from .qlaurent import (ONE, ZERO, QPoly, QPolyMatrix, qp_det,
                       qp_solve_upper_triangular, q)
from .rootcore import (CapabilityError, RootSystem, WeylElt,
                       parabolic_subgroup, to_eps, weyl_enumerate)


# -- conjugacy classes ---------------------------------------------------------

def _perm_typeA(rs: RootSystem, w: WeylElt) -> list[int]:
    """sigma with w(eps_i - eps_j) = eps_sigma(i) - eps_sigma(j), 0-based."""
    n = rs.rank + 1
    sigma = []
    for i in range(n):
        j = i + 1 if i + 1 < n else i - 1
        r = [0] * rs.rank
        a, b = min(i, j), max(i, j)
        for t in range(a, b):
            r[t] = 1
        k = rs.index[tuple(r)]
        img = to_eps(rs, rs.root(rs.apply(w, k)))
        # image is eps_sigma(a) - eps_sigma(b)
        plus = img.index(1)
        minus = img.index(-1)
        sigma.append(plus if i == a else minus)
    return sigma


def _signed_perm(rs: RootSystem, w: WeylElt) -> list[tuple[int, int]]:
    """For B/C: w(eps_i) = sign * eps_sigma(i); returns [(sigma(i), sign)]."""
    n = rs.rank
    scale = 1 if rs.typ == "B" else 2
    eps_root = {}
    for k in range(rs.N):
        e = to_eps(rs, rs.positive[k])
        nz = [t for t, x in enumerate(e) if x]
        if len(nz) == 1 and e[nz[0]] == scale:
            eps_root[nz[0]] = k
    out = []
    for i in range(n):
        img = to_eps(rs, rs.root(rs.apply(w, eps_root[i])))
        j = next(t for t, x in enumerate(img) if x)
        out.append((j, 1 if img[j] > 0 else -1))
    return out


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if not seen[s]:
            ln, x = 0, s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                ln += 1
            out.append(ln)
    return tuple(sorted(out, reverse=True))


def signed_cycle_type(sp: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    seen = [False] * len(sp)
    pos, neg = [], []
    for s in range(len(sp)):
        if not seen[s]:
            ln, sg, x = 0, 1, s
            while not seen[x]:
                seen[x] = True
                sg *= sp[x][1]
                x = sp[x][0]
                ln += 1
            (pos if sg > 0 else neg).append(ln)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def class_key(rs: RootSystem, w: WeylElt):
    if rs.typ == "A":
        return cycle_type(_perm_typeA(rs, w))
    if rs.typ in "BC":
        return signed_cycle_type(_signed_perm(rs, w))
    raise CapabilityError(f"no labelled classes for {rs.label}")


# -- character tables ------------------------------------------------------------

def fmt_label(lab) -> str:
    if lab and isinstance(lab[0], tuple):
        l, m = lab
        return f"({','.join(map(str, l))}|{','.join(map(str, m))})"
    return "(" + ",".join(map(str, lab)) + ")"


@dataclass
class CharTable:
    rs: RootSystem
    labels: list                    # irreducible labels
    class_keys: list                # conjugacy class labels
    class_sizes: list[int]
    class_reps: list[WeylElt]
    values: list[list[int]]         # values[phi][c]
    elt_class: dict = field(repr=False, default_factory=dict)  # act bytes -> class idx

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    def index(self, label) -> int:
        return self.labels.index(label)

    def chi(self, phi: int, w: WeylElt) -> int:
        return self.values[phi][self.elt_class[w.act]]

    def dims(self) -> list[int]:
        ident = self.elt_class[self.rs.identity().act]
        return [row[ident] for row in self.values]

    @property
    def sgn(self) -> int:
        target = [(-1) ** r.length for r in self.class_reps]
        return next(i for i, row in enumerate(self.values) if row == target)

    @property
    def triv(self) -> int:
        return next(i for i, row in enumerate(self.values) if all(v == 1 for v in row))

    def tensor_sgn(self, phi: int) -> int:
        s = self.values[self.sgn]
        target = [a * b for a, b in zip(self.values[phi], s)]
        return next(i for i, row in enumerate(self.values) if row == target)

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        tot = sum(Fraction(s) * x * y for s, x, y in zip(self.class_sizes, a, b))
        return tot / self.order

    def class_index(self, w: WeylElt) -> int:
        return self.elt_class[w.act]


_CT_CACHE: dict[str, CharTable] = {}


def char_table(rs: RootSystem) -> CharTable:
    if rs.label in _CT_CACHE:
        return _CT_CACHE[rs.label]
    if rs.typ not in "ABC":
        raise CapabilityError(f"character tables are implemented for types A, B, C only, not {rs.label}")
    W = weyl_enumerate(rs)
    keys: dict = {}
    reps, sizes, elt_class = [], [], {}
    for w in W:
        k = class_key(rs, w)
        if k not in keys:
            keys[k] = len(reps)
            reps.append(w)
            sizes.append(0)
        sizes[keys[k]] += 1
        elt_class[w.act] = keys[k]
    class_keys = list(keys)
    if rs.typ == "A":
        labels = list(partitions(rs.rank + 1))
        values = [[mn_char(lam, ck) for ck in class_keys] for lam in labels]
    else:
        labels = bipartitions(rs.rank)
        values = [[bip_char(l, m, ck[0], ck[1]) for ck in class_keys] for (l, m) in labels]
    ct = CharTable(rs, labels, class_keys, sizes, reps, values, elt_class)
    _CT_CACHE[rs.label] = ct
    return ct


def labelled_dim(label) -> int:
    if label and isinstance(label[0], tuple):
        l, m = label
        return comb(sum(l) + sum(m), sum(l)) * hook_dim(l) * hook_dim(m)
    return hook_dim(label)


# -- graded class functions ----------------------------------------------------------

@dataclass
class GradedClassFn:
    ct: CharTable
    values: list[QPoly]     # per class

    def at_one(self) -> list:
        return [v(1) for v in self.values]

    def multiplicity(self, phi: int) -> QPoly:
        tot = ZERO
        for s, x, v in zip(self.ct.class_sizes, self.ct.values[phi], self.values):
            if x:
                tot = tot + v * (s * x)
        return tot.div_int(self.ct.order)


def _det_one_minus_qw(rs: RootSystem, w: WeylElt, sub: Sequence[int] | None = None) -> QPoly:
    M = rs.matrix(w)
    idx = list(range(rs.rank)) if sub is None else list(sub)
    rows = [[(ONE if i == j else ZERO) - q * M[i][j] for j in idx] for i in idx]
    return qp_det(rows)


def coinvariant_graded_char(rs: RootSystem, ct: CharTable | None = None) -> GradedClassFn:
    """Graded trace of the coinvariant algebra on each class."""
    ct = ct or char_table(rs)
    num = rs.poincare_GB() * (ONE - q) ** rs.rank
    vals = [num.exact_div(_det_one_minus_qw(rs, w)) for w in ct.class_reps]
    return GradedClassFn(ct, vals)


def omega_matrix(ct: CharTable) -> QPolyMatrix:
    C = coinvariant_graded_char(ct.rs, ct)
    n = len(ct.labels)
    out = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            tot = ZERO
            for s, x, y, v in zip(ct.class_sizes, ct.values[a], ct.values[b], C.values):
                if x * y:
                    tot = tot + v * (s * x * y)
            out[a][b] = out[b][a] = tot.div_int(ct.order)
    return QPolyMatrix(out)


# -- parabolic formula -------------------------------------------------------------------

def induced_sign_mults(ct: CharTable, levi: Sequence[int]) -> dict:
    WL = parabolic_subgroup(ct.rs, levi)
    out = {}
    for phi, lab in enumerate(ct.labels):
        tot = sum(ct.chi(phi, w) * (-1) ** w.length for w in WL)
        assert tot % len(WL) == 0
        out[lab] = tot // len(WL)
    return out


def parabolic_poincare(rs: RootSystem, levi: Sequence[int]) -> QPoly:
    c: dict[int, int] = {}
    for w in parabolic_subgroup(rs, levi):
        c[w.length] = c.get(w.length, 0) + 1
    return QPoly(c)


def parabolic_f(rs: RootSystem, ct: CharTable, levi: Sequence[int]) -> dict:
    P = parabolic_poincare(rs, levi)
    return {lab: P * m for lab, m in induced_sign_mults(ct, levi).items()}


# -- type A Green matrix ---------------------------------------------------------------------

def irr_order(n: int) -> list[tuple]:
    """Partitions of n by orbit dimension ascending, ties lexicographic."""
    return sorted(partitions(n), key=lambda lam: (-n_stat(lam), lam))


@lru_cache(maxsize=None)
def modified_kf(lam: tuple, mu: tuple) -> QPoly:
    """``q^{n(mu)} K_{lam,mu}(1/q)``."""
    raw = kostka_foulkes(lam, mu)
    return QPoly({n_stat(mu) - e: c for e, c in raw.items()})


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> QPolyMatrix:
    """Rows: irreducibles phi; columns: orbits; both in :func:`irr_order`."""
    order = irr_order(n)
    return QPolyMatrix([[modified_kf(lam, mu) for mu in order] for lam in order])


class DataInconsistency(ValueError):
    pass


def P_from_f(K: QPolyMatrix, f: Sequence[QPoly], c_I: int) -> list[QPoly]:
    """``P_x = q^{-c_I} sum_phi f_phi K_{phi,x}`` for each column x."""
    out = []
    for x in range(K.cols):
        tot = ZERO
        for phi in range(K.rows):
            if f[phi] and K[phi, x]:
                tot = tot + f[phi] * K[phi, x]
        out.append(tot.shift(-c_I))
    return out


def f_from_P(K: QPolyMatrix, P: Sequence[QPoly], c_I: int) -> list[QPoly]:
    """Invert :func:`P_from_f`; results must be palindromic in N[q]."""
    rhs = [p.shift(c_I) for p in P]
    f = qp_solve_upper_triangular(K.transpose(), rhs)
    for v in f:
        if not v.is_nonnegative() or not v.is_polynomial() or not v.is_palindromic(c_I):
            raise DataInconsistency(f"f entry {v} is not a palindromic N[q] polynomial about {c_I}/2")
    return f


# -- LLT ------------------------------------------------------------------------------------

def llt_rep(rs: RootSystem, ct: CharTable, f: Mapping, omega: QPolyMatrix | None = None) -> dict:
    """Graded multiplicities g^H_phi (degree j counted as q^j) from the f-vector of H^perp.

    ``f`` maps irreducible labels to QPoly.
    """
    omega = omega or omega_matrix(ct)
    PGB = rs.poincare_GB()
    out = {}
    for phi, lab in enumerate(ct.labels):
        tot = ZERO
        for psi, lab2 in enumerate(ct.labels):
            v = f.get(lab2, ZERO)
            if v:
                tot = tot + v * omega[phi, ct.tensor_sgn(psi)]
        g = tot.exact_div(PGB)
        if g and g.low_degree < 0:
            raise DataInconsistency(f"LLT multiplicity {g} has negative degree")
        out[lab] = g
    return out


def parabolic_llt(rs: RootSystem, ct: CharTable, levi: Sequence[int]) -> dict:
    """Graded multiplicities of Ind_{W_L}^W of the coinvariant algebra of W_L."""
    WL = parabolic_subgroup(rs, levi)
    PL = parabolic_poincare(rs, levi)
    num = PL * (ONE - q) ** rs.rank
    cache: dict[int, QPoly] = {}
    vals = []
    for w in WL:
        c = ct.class_index(w)
        # det(1 - qw) depends only on the class in W, which is enough here
        if c not in cache:
            cache[c] = _det_one_minus_qw(rs, w)
        vals.append((w, num.exact_div(cache[c])))
    out = {}
    for phi, lab in enumerate(ct.labels):
        tot = ZERO
        for w, v in vals:
            x = ct.chi(phi, w)
            if x:
                tot = tot + v * x
        out[lab] = tot.div_int(len(WL))
    return out


def dims_regular_check(ct: CharTable, g: Mapping) -> bool:
    """g at q=1 carries each irreducible with multiplicity dim phi."""
    dims = ct.dims()
    return all(g[lab](1) == d for lab, d in zip(ct.labels, dims))
