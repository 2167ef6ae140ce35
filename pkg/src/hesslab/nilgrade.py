"""Gradings from weighted Dynkin diagrams and the cell decomposition data
(W^0, Psi, t, g_{M,U}) for nilpotent Hessenberg varieties."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .combin import Partition, conjugate
from .idealkit import Ideal, HessSpace, enumerate_upsets, make_ideal
from .qlaurent import QPoly, ZERO
from .rootcore import ChevalleyBasis, RootSystem, WeylElt, min_coset_reps

PRIME = (1 << 62) - 57


@dataclass(eq=False)
class Grading:
    rs: RootSystem
    labels: tuple[int, ...]
    degree: list[int] = field(init=False)   # per positive root

    def __post_init__(self):
        if len(self.labels) != self.rs.rank or any(x not in (0, 1, 2) for x in self.labels):
            raise ValueError(f"bad weighted Dynkin labels {self.labels}")
        self.degree = [sum(c * h for c, h in zip(r, self.labels)) for r in self.rs.positive]

    def deg(self, full: int) -> int:
        N = self.rs.N
        return self.degree[full] if full < N else -self.degree[full - N]

    def phi(self, j: int) -> list[int]:
        """Full root indices of degree j."""
        return [k for k in range(2 * self.rs.N) if self.deg(k) == j]

    @cached_property
    def phi0_pos(self) -> list[int]:
        return [k for k in range(self.rs.N) if self.degree[k] == 0]

    @cached_property
    def phi2(self) -> list[int]:
        return [k for k in range(self.rs.N) if self.degree[k] == 2]

    @cached_property
    def delta0(self) -> list[int]:
        return [i for i in range(self.rs.rank) if self.labels[i] == 0]

    def dim_g(self, j: int) -> int:
        return len(self.phi(j)) + (self.rs.rank if j == 0 else 0)

    @property
    def is_zero(self) -> bool:
        return not any(self.labels)

    def orbit_dim(self) -> int:
        rs = self.rs
        return 2 * rs.N + rs.rank - self.dim_g(0) - self.dim_g(1)

    def label_str(self) -> str:
        return "".join(map(str, self.labels))

    def __repr__(self):
        return f"Grading({self.rs.label}, {self.label_str()})"


def grading_from_wdd(rs: RootSystem, labels: Sequence[int] | str) -> Grading:
    if isinstance(labels, str):
        labels = [int(c) for c in labels if c.isdigit()]
    g = Grading(rs, tuple(labels))
    for j in range(1, 5):
        assert g.dim_g(j) == g.dim_g(-j)
    return g


def valid_orbit_partition(typ: str, rank: int, lam: Partition) -> bool:
    from collections import Counter
    size = {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank}[typ]
    if sum(lam) != size or any(p <= 0 for p in lam):
        return False
    mult = Counter(lam)
    if typ == "B":
        return all(m % 2 == 0 for p, m in mult.items() if p % 2 == 0)
    if typ == "C":
        return all(m % 2 == 0 for p, m in mult.items() if p % 2 == 1)
    return True


def orbit_partitions(typ: str, rank: int) -> list[Partition]:
    from .combin import partitions
    size = {"A": rank + 1, "B": 2 * rank + 1, "C": 2 * rank}[typ]
    return [lam for lam in partitions(size) if valid_orbit_partition(typ, rank, lam)]


def wdd_from_partition(typ: str, rank: int, lam: Sequence[int]) -> tuple[int, ...]:
    """Weighted Dynkin labels of the nilpotent orbit with Jordan type ``lam``.

    ``rank`` is the rank of the root system; ``lam`` partitions the dimension of
    the natural representation (``rank + 1`` in type A).
    """
    typ = typ.upper()
    lam = tuple(sorted(lam, reverse=True))
    if typ not in "ABC":
        raise ValueError(f"partition labels not supported for type {typ}")
    if not valid_orbit_partition(typ, rank, lam):
        raise ValueError(f"{lam} is not an orbit partition for {typ}{rank}")
    eig = sorted((l - 1 - 2 * k for l in lam for k in range(l)), reverse=True)
    if typ == "A":
        return tuple(eig[i] - eig[i + 1] for i in range(rank))
    h = eig[:rank]
    labels = [h[i] - h[i + 1] for i in range(rank - 1)]
    labels.append(h[-1] if typ == "B" else 2 * h[-1])
    return tuple(labels)


def grading_for_partition(rs: RootSystem, lam: Sequence[int]) -> Grading:
    g = grading_from_wdd(rs, wdd_from_partition(rs.typ, rs.rank, lam))
    if rs.typ in "ABC":
        assert g.orbit_dim() == partition_orbit_dim(rs.typ, rs.rank, lam), (lam, g)
    return g


def partition_orbit_dim(typ: str, rank: int, lam: Sequence[int]) -> int:
    """Classical dimension formulas for nilpotent orbits."""
    lam = tuple(sorted(lam, reverse=True))
    lt = conjugate(lam)
    s2 = sum(x * x for x in lt)
    odd = sum(1 for p in lam if p % 2)
    if typ == "A":
        n = rank + 1
        return n * n - s2
    if typ == "B":
        n = 2 * rank + 1
        return (n * (n - 1) - s2 + odd) // 2
    n = 2 * rank
    return (n * (n + 1) - s2 - odd) // 2


# -- Hessenberg data ----------------------------------------------------------

def _in_M(M, full: int, N: int) -> bool:
    if isinstance(M, Ideal):
        return full < N and bool(M.mask >> full & 1)
    if isinstance(M, HessSpace):
        return M.contains(full)
    raise TypeError("M must be an Ideal or HessSpace")


@dataclass(frozen=True)
class G2Subspace:
    """A subset of Phi_2 (bitmask over positive root indices)."""

    mask: int

    def roots(self) -> list[int]:
        return [k for k in range(self.mask.bit_length()) if self.mask >> k & 1]


def w0_reps(rs: RootSystem, grading: Grading) -> list[WeylElt]:
    return min_coset_reps(rs, grading.delta0)


def _check_w0(rs, grading, w):
    winv = rs.inverse(w)
    if any(winv.act[i] >= rs.N for i in grading.delta0):
        raise ValueError(f"{w} is not a minimal coset representative")


def psi(rs: RootSystem, grading: Grading, w: WeylElt, M, check: bool = True) -> G2Subspace:
    if check:
        _check_w0(rs, grading, w)
    winv = rs.inverse(w)
    mask = 0
    for k in grading.phi2:
        if _in_M(M, winv.act[k], rs.N):
            mask |= 1 << k
    return G2Subspace(mask)


def t_of_w(rs: RootSystem, grading: Grading, w: WeylElt, M) -> int:
    winv = rs.inverse(w)
    corr = sum(1 for k in range(rs.N) if grading.degree[k] >= 3 and not _in_M(M, winv.act[k], rs.N))
    return w.length - corr


def cell_dim(rs: RootSystem, grading: Grading, w: WeylElt, M) -> int:
    winv = rs.inverse(w)
    corr = sum(1 for k in range(rs.N) if grading.degree[k] >= 2 and not _in_M(M, winv.act[k], rs.N))
    return w.length + len(grading.phi0_pos) - corr


def id2_subspaces(rs: RootSystem, grading: Grading) -> list[G2Subspace]:
    """B_0-stable subspaces of g_2, i.e. subsets of Phi_2 closed under adding Phi_0^+."""
    phi2 = grading.phi2
    ups = {k: [] for k in phi2}
    for k in phi2:
        for a in grading.phi0_pos:
            s = rs.add(k, a)
            if s is not None:
                ups[k].append(s)
    order = sorted(phi2, key=lambda k: -rs.heights[k])
    ups_list = [[] for _ in range(rs.N)]
    for k in phi2:
        ups_list[k] = ups[k]
    return [G2Subspace(m) for m in enumerate_upsets(rs.N, ups_list, order)]


def is_b0_stable(rs: RootSystem, grading: Grading, U: G2Subspace) -> bool:
    for k in U.roots():
        for a in grading.phi0_pos:
            s = rs.add(k, a)
            if s is not None and not U.mask >> s & 1:
                return False
    return True


def _rank_mod_p(rows: list[list[int]], p: int = PRIME) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
    return rank


def adjoint_rank(cb: ChevalleyBasis, grading: Grading, U: G2Subspace, rng: random.Random) -> int:
    """Rank of z -> [z, u] from g_0 to g_2 at a random point u of U, mod p."""
    rs = cb.rs
    R = 2 * rs.N
    coeff = {k: rng.randrange(1, PRIME) for k in U.roots()}
    targets = grading.phi2
    tpos = {k: i for i, k in enumerate(targets)}
    source = [k for k in range(R) if grading.deg(k) == 0] + [R + i for i in range(rs.rank)]
    rows = []
    for z in source:
        row = [0] * len(targets)
        for k, c in coeff.items():
            for t, v in cb.bracket_basis(z, k).items():
                if t in tpos:
                    # structure constants are integers; reduce the rational value mod p
                    row[tpos[t]] = (row[tpos[t]] + c * (v.numerator * pow(v.denominator, -1, PRIME))) % PRIME
        rows.append(row)
    if not targets:
        return 0
    return _rank_mod_p(rows)


def is_generic(cb: ChevalleyBasis, grading: Grading, U: G2Subspace, seed: int = 0, trials: int = 3) -> bool:
    """U meets the dense G_0-orbit in g_2, decided by the adjoint rank criterion."""
    target = len(grading.phi2)
    if target == 0:
        return True
    rng = random.Random(f"{seed}:{grading.label_str()}:{U.mask}")
    for _ in range(trials):
        if adjoint_rank(cb, grading, U, rng) == target:
            return True
    return False


def generic_subspaces(cb: ChevalleyBasis, grading: Grading, seed: int = 0) -> list[G2Subspace]:
    return [U for U in id2_subspaces(cb.rs, grading) if is_generic(cb, grading, U, seed)]


class Decomposition:
    """Cached per-grading data: W^0 and the inverse elements."""

    def __init__(self, rs: RootSystem, grading: Grading):
        self.rs = rs
        self.grading = grading
        self.reps = w0_reps(rs, grading)
        self.invs = [rs.inverse(w) for w in self.reps]
        self._ge2 = [k for k in range(rs.N) if grading.degree[k] >= 2]
        self._ge3 = [k for k in range(rs.N) if grading.degree[k] >= 3]

    def g_polys(self, M) -> dict[G2Subspace, QPoly]:
        """U -> g_{M,U} for every U hit by Psi."""
        N = self.rs.N
        acc: dict[int, dict[int, int]] = {}
        phi2 = self.grading.phi2
        for w, winv in zip(self.reps, self.invs):
            mask = 0
            for k in phi2:
                if _in_M(M, winv.act[k], N):
                    mask |= 1 << k
            t = w.length - sum(1 for k in self._ge3 if not _in_M(M, winv.act[k], N))
            d = acc.setdefault(mask, {})
            d[t] = d.get(t, 0) + 1
        return {G2Subspace(m): QPoly(c) for m, c in acc.items()}

    def max_cell_dim(self, M) -> int:
        N = self.rs.N
        return max(w.length + len(self.grading.phi0_pos)
                   - sum(1 for k in self._ge2 if not _in_M(M, winv.act[k], N))
                   for w, winv in zip(self.reps, self.invs))


def g_poly(rs: RootSystem, grading: Grading, M, U: G2Subspace) -> QPoly:
    return Decomposition(rs, grading).g_polys(M).get(U, ZERO)


class MissingBlock(KeyError):
    pass


def dclp_poincare(rs: RootSystem, grading: Grading, M, blocks: Mapping[G2Subspace, QPoly],
                  generic: Sequence[G2Subspace] | None = None, decomp: Decomposition | None = None) -> QPoly:
    """Sum of g_{M,U} * blocks[U] over generic U.

    ``generic`` defaults to the keys of ``blocks``; a generic U with nonzero
    g but no block raises :class:`MissingBlock`.
    """
    if grading.is_zero:
        return rs.poincare_GB()
    decomp = decomp or Decomposition(rs, grading)
    gen = set(blocks) if generic is None else set(generic)
    total = ZERO
    for U, g in decomp.g_polys(M).items():
        if U not in gen:
            continue
        if U not in blocks:
            raise MissingBlock(f"no block for generic U with roots {[rs.key(k) for k in U.roots()]}")
        total = total + g * blocks[U]
    return total


def block_ideal(rs: RootSystem, grading: Grading, U: G2Subspace) -> Ideal:
    """The ideal U + g_{>=3}, whose Hessenberg variety is the block X_U."""
    roots = U.roots() + [k for k in range(rs.N) if grading.degree[k] >= 3]
    return make_ideal(rs, roots)


def psi_surjective(rs: RootSystem, grading: Grading) -> bool:
    """Every B_0-stable U is Psi(w) for some w in W^0, with M = u."""
    u = make_ideal(rs, range(rs.N))
    hit = set(Decomposition(rs, grading).g_polys(u))
    return all(U in hit for U in id2_subspaces(rs, grading))
