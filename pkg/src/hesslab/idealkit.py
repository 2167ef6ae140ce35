"""Ad-nilpotent ideals and Hessenberg spaces, with the type A dictionary to Hessenberg functions.

An ideal is an upward-closed set of positive roots, stored as a bitmask over
positive root indices. Its canonical key is the sorted tuple of minimal-root
coefficient strings, e.g. ``('010', '001')``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from fractions import Fraction
from typing import Iterable, Sequence

from .rootcore import RootSystem, build_root_system


@dataclass(frozen=True)
class Ideal:
    mask: int
    minimal: tuple[int, ...]

    def __contains__(self, k: int) -> bool:
        return bool(self.mask >> k & 1)

    def roots(self) -> list[int]:
        m, out, k = self.mask, [], 0
        while m:
            if m & 1:
                out.append(k)
            m >>= 1
            k += 1
        return out

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")


@dataclass(frozen=True)
class HessSpace:
    """Phi_H = all positive roots plus the negatives recorded in ``negmask``."""

    negmask: int
    N: int

    def contains(self, full: int) -> bool:
        if full < self.N:
            return True
        return bool(self.negmask >> (full - self.N) & 1)

    @property
    def dim_over_b(self) -> int:
        return bin(self.negmask).count("1")


def _up_table(rs: RootSystem) -> list[list[int]]:
    """For each positive root, the positive roots gamma + alpha_i."""
    ups = []
    for k in range(rs.N):
        row = []
        for i in range(rs.rank):
            j = rs.add(k, i)
            if j is not None and j < rs.N:
                row.append(j)
        ups.append(row)
    return ups


def _down_table(rs: RootSystem) -> list[list[int]]:
    downs: list[list[int]] = [[] for _ in range(rs.N)]
    for k, row in enumerate(_up_table(rs)):
        for j in row:
            downs[j].append(k)
    return downs


def minimal_roots_of_mask(rs: RootSystem, mask: int, downs=None) -> tuple[int, ...]:
    downs = downs or _down_table(rs)
    return tuple(k for k in range(rs.N)
                 if mask >> k & 1 and not any(mask >> d & 1 for d in downs[k]))


def make_ideal(rs: RootSystem, roots: Iterable[int]) -> Ideal:
    mask = 0
    for k in roots:
        mask |= 1 << k
    if not is_upward_closed(rs, mask):
        raise ValueError("root set is not upward closed")
    return Ideal(mask, minimal_roots_of_mask(rs, mask))


def is_upward_closed(rs: RootSystem, mask: int) -> bool:
    for k, row in enumerate(_up_table(rs)):
        if mask >> k & 1 and any(not mask >> j & 1 for j in row):
            return False
    return True


def ideal_from_minimal(rs: RootSystem, minimal: Iterable[int]) -> Ideal:
    """Upward closure of the given roots."""
    ups = _up_table(rs)
    mask = 0
    stack = list(minimal)
    while stack:
        k = stack.pop()
        if not mask >> k & 1:
            mask |= 1 << k
            stack.extend(ups[k])
    return Ideal(mask, minimal_roots_of_mask(rs, mask))


def enumerate_upsets(N: int, ups: Sequence[Sequence[int]], order: Sequence[int]) -> list[int]:
    """All subsets closed under ``ups``; ``order`` must list every element after
    all elements of its ``ups`` list (top-down)."""
    out = []

    def rec(pos: int, mask: int):
        if pos == len(order):
            out.append(mask)
            return
        k = order[pos]
        rec(pos + 1, mask)
        if all(mask >> j & 1 for j in ups[k]):
            rec(pos + 1, mask | 1 << k)

    rec(0, 0)
    return out


def enumerate_ideals(rs: RootSystem) -> list[Ideal]:
    """All ad-nilpotent ideals, sorted by decreasing size then minimal-root key."""
    ups = _up_table(rs)
    downs = _down_table(rs)
    order = sorted(range(rs.N), key=lambda k: -rs.heights[k])
    masks = enumerate_upsets(rs.N, ups, order)
    ideals = [Ideal(m, minimal_roots_of_mask(rs, m, downs)) for m in masks]
    ideals.sort(key=lambda I: (-I.size, I.minimal))
    return ideals


def w_catalan(rs: RootSystem) -> int:
    h = rs.coxeter_number
    v = prod(Fraction(d + h, d) for d in rs.degrees)
    assert v.denominator == 1
    return v.numerator


def ideal_key(rs: RootSystem, I: Ideal) -> tuple[str, ...]:
    return tuple(sorted(rs.key(k) for k in I.minimal))


def format_key(rs: RootSystem, I: Ideal) -> str:
    if not I.minimal:
        return "0"
    if sorted(I.minimal) == list(range(rs.rank)):
        return "D"
    return ",".join(rs.key(k) for k in I.minimal)


def c_of(rs: RootSystem, I: Ideal) -> int:
    """Codimension of I in the nilradical."""
    return rs.N - I.size


def ideal_complement(rs: RootSystem, I: Ideal) -> HessSpace:
    full = (1 << rs.N) - 1
    return HessSpace(full & ~I.mask, rs.N)


def hess_complement(rs: RootSystem, H: HessSpace) -> Ideal:
    full = (1 << rs.N) - 1
    mask = full & ~H.negmask
    return Ideal(mask, minimal_roots_of_mask(rs, mask))


def connectivity_set(rs: RootSystem, H: HessSpace) -> list[int]:
    return [i for i in range(rs.rank) if H.contains(rs.neg(i))]


def is_minimal(rs: RootSystem, I: Ideal, k: int) -> bool:
    return k in I.minimal


def minimal_roots(I: Ideal) -> tuple[int, ...]:
    return I.minimal


# -- type A dictionary -------------------------------------------------------

HessFn = tuple


def validate_hessfn(h: Sequence[int]) -> HessFn:
    h = tuple(int(x) for x in h)
    n = len(h)
    for i, v in enumerate(h, start=1):
        if not i <= v <= n:
            raise ValueError(f"h({i}) = {v} outside [{i}, {n}]")
    if any(a > b for a, b in zip(h, h[1:])):
        raise ValueError(f"{h} is not weakly increasing")
    return h


@lru_cache(maxsize=None)
def hessenberg_functions(n: int) -> tuple[HessFn, ...]:
    out = []

    def rec(i, prev, cur):
        if i > n:
            out.append(tuple(cur))
            return
        for v in range(max(i, prev), n + 1):
            rec(i + 1, v, cur + [v])

    rec(1, 1, [])
    return tuple(out)


def eps_root_index(rs: RootSystem, i: int, j: int) -> int:
    """Index of eps_i - eps_j (1-based, i < j) in A_{n-1}."""
    r = [0] * rs.rank
    for t in range(i - 1, j - 1):
        r[t] = 1
    return rs.index[tuple(r)]


def hessfn_to_ideal(n: int, h: Sequence[int], rs: RootSystem | None = None) -> Ideal:
    h = validate_hessfn(h)
    if len(h) != n:
        raise ValueError("length of h must be n")
    rs = rs or build_root_system("A", n - 1)
    roots = [eps_root_index(rs, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if h[i - 1] < j]
    return make_ideal(rs, roots)


def ideal_to_hessfn(n: int, I: Ideal, rs: RootSystem | None = None) -> HessFn:
    rs = rs or build_root_system("A", n - 1)
    h = []
    for i in range(1, n + 1):
        v = n
        for j in range(i + 1, n + 1):
            if eps_root_index(rs, i, j) in I:
                v = j - 1
                break
        h.append(v)
    return validate_hessfn(h)


def hessfn_of_composition(mu: Sequence[int]) -> HessFn:
    """``h^(mu)``: block-diagonal Hessenberg function (disjoint complete graphs)."""
    out = []
    s = 0
    for m in mu:
        s += m
        out.extend([s] * m)
    return tuple(out)
