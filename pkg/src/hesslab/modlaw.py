"""Modular triples of ideals and the modular law ``(1+q) F1 = F2 + q F0``.

Values handed to the checker and solver only need ``+``, ``-``, left
multiplication by a :class:`QPoly`, ``exact_div(QPoly)`` and ``==``.
:class:`QVec` wraps a mapping of QPoly values so vectors of polynomials
qualify; ``symkit.SymFunc`` does too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Mapping, Sequence

from .idealkit import (Ideal, enumerate_ideals, hessenberg_functions,
                       hessfn_to_ideal, validate_hessfn)
from .qlaurent import ONE, ZERO, QPoly, InexactDivision, q, qp_gcd
from .rootcore import RootSystem, build_root_system

ONE_PLUS_Q = ONE + q


@dataclass(frozen=True)
class Triple:
    """Ideals I0 > I1 > I2 with ``Phi_I0 = Phi_I1 + {beta}`` and
    ``Phi_I1 = Phi_I2 + {alpha + beta}``."""

    I0: Ideal
    I1: Ideal
    I2: Ideal
    alpha: int          # simple root index
    beta: int           # positive root index

    def ids(self, id_of: Mapping[int, Any]) -> tuple:
        return (id_of[self.I0.mask], id_of[self.I1.mask], id_of[self.I2.mask])


def s_alpha_invariant(rs: RootSystem, mask: int, i: int) -> bool:
    for k in range(rs.N):
        if mask >> k & 1:
            img = rs.find(rs.reflect(rs.positive[k], i))
            if img >= rs.N or not mask >> img & 1:
                return False
    return True


def enumerate_triples(rs: RootSystem, ideals: Sequence[Ideal] | None = None) -> list[Triple]:
    ideals = ideals if ideals is not None else enumerate_ideals(rs)
    by_mask = {I.mask: I for I in ideals}
    out = []
    for I0 in ideals:
        for i in range(rs.rank):
            if not s_alpha_invariant(rs, I0.mask, i):
                continue
            for b in I0.minimal:
                if rs.pairing(rs.positive[b], i) != -1:
                    continue
                ab = rs.add(b, i)
                I1 = by_mask[I0.mask & ~(1 << b)]
                # alpha + beta is a minimal root of I1
                assert ab is not None and ab in I1.minimal, (I0, b, i)
                I2 = by_mask[I1.mask & ~(1 << ab)]
                out.append(Triple(I0, I1, I2, i, b))
    return out


# -- value modules -----------------------------------------------------------

class QVec:
    """Finite mapping ``label -> QPoly`` with module operations over QPoly."""

    __slots__ = ("data",)

    def __init__(self, data: Mapping[Hashable, QPoly] | None = None):
        self.data = {k: QPoly.coerce(v) for k, v in (data or {}).items() if v}

    def __add__(self, other: "QVec") -> "QVec":
        d = dict(self.data)
        for k, v in other.data.items():
            d[k] = d.get(k, QPoly()) + v
        return QVec(d)

    def __sub__(self, other: "QVec") -> "QVec":
        return self + (-1) * other

    def __rmul__(self, c) -> "QVec":
        return QVec({k: v * c if isinstance(c, int) else c * v for k, v in self.data.items()})

    def exact_div(self, p) -> "QVec":
        return QVec({k: v.exact_div(p) for k, v in self.data.items()})

    def __eq__(self, other):
        return isinstance(other, QVec) and self.data == other.data

    def __getitem__(self, k):
        return self.data.get(k, QPoly())

    def __repr__(self):
        return "QVec(" + ", ".join(f"{k}: {v}" for k, v in self.data.items()) + ")"

    def is_zero(self) -> bool:
        return not self.data


def _is_zero(v) -> bool:
    if isinstance(v, QPoly):
        return v.is_zero()
    return v.is_zero()


def law_residual(F0, F1, F2):
    """``(1+q) F1 - F2 - q F0``."""
    return ONE_PLUS_Q * F1 - F2 - q * F0


@dataclass
class Violation:
    triple: tuple
    residual: Any


def check_modular(triples: Sequence[tuple], F: Mapping[Hashable, Any]) -> list[Violation]:
    """``triples`` are ``(id0, id1, id2)`` tuples; an empty result means the law holds."""
    out = []
    for t in triples:
        i0, i1, i2 = t[:3]
        r = law_residual(F[i0], F[i1], F[i2])
        if not _is_zero(r):
            out.append(Violation(tuple(t[:3]), r))
    return out


@dataclass
class SolveResult:
    values: dict
    undetermined: set
    inconsistent: bool = False
    certificate: list = field(default_factory=list)


def solve_modular(triples: Sequence[tuple], known: Mapping[Hashable, Any],
                  universe: Sequence[Hashable] | None = None) -> SolveResult:
    """Propagate known values through the modular law until nothing changes,
    then solve the remaining linear system jointly."""
    vals = dict(known)
    universe = list(universe) if universe is not None else sorted(
        {x for t in triples for x in t[:3]} | set(known), key=repr)
    cert = []
    bad = False
    by_id: dict[Hashable, list[tuple]] = {}
    for t in triples:
        for x in t[:3]:
            by_id.setdefault(x, []).append(tuple(t[:3]))
    work = list(dict.fromkeys(tuple(t[:3]) for t in triples))
    queued = set(work)
    while work:
        t = work.pop()
        queued.discard(t)
        i0, i1, i2 = t
        have = [x in vals for x in t]
        new = None
        try:
            if have == [True, True, False]:
                new = (i2, ONE_PLUS_Q * vals[i1] - q * vals[i0])
            elif have == [True, False, True]:
                new = (i1, (vals[i2] + q * vals[i0]).exact_div(ONE_PLUS_Q))
            elif have == [False, True, True]:
                new = (i0, (ONE_PLUS_Q * vals[i1] - vals[i2]).exact_div(q))
            elif all(have):
                r = law_residual(vals[i0], vals[i1], vals[i2])
                if not _is_zero(r):
                    bad = True
                    cert.append(("conflict", t, r))
        except InexactDivision as exc:
            bad = True
            cert.append(("inexact", t, str(exc)))
        if new is not None:
            k, v = new
            vals[k] = v
            for t2 in by_id.get(k, []):
                if t2 not in queued:
                    work.append(t2)
                    queued.add(t2)
    undetermined = {x for x in universe if x not in vals}
    if undetermined and not bad and vals:
        solved, conflicts = _joint_solve(triples, vals)
        if conflicts:
            bad = True
            cert.extend(conflicts)
        elif solved:
            # new values may unlock more single-step propagation
            merged = dict(vals)
            merged.update(solved)
            return solve_modular(triples, merged, universe)
    return SolveResult(vals, undetermined, bad, cert)


_LAW = (-q, ONE_PLUS_Q, -ONE)


def _combine(row, piv, pv):
    """Eliminate ``pv`` from ``row`` using ``piv``; both are (coeffs, rhs, tag)."""
    coeffs, rhs, t = row
    pc, pr, _ = piv
    c, p = coeffs[pv], pc[pv]
    if p.is_monomial():
        a, b = ONE, c.exact_div(p)
    else:
        g = qp_gcd(p, c)
        a, b = p.exact_div(g), c.exact_div(g)
    new = {k: a * v for k, v in coeffs.items()} if a != ONE else dict(coeffs)
    for k, v in pc.items():
        new[k] = new.get(k, ZERO) - b * v
    new = {k: v for k, v in new.items() if v}
    rhs = (a * rhs if a != ONE else rhs) - b * pr
    if new and a != ONE:
        # strip the polynomial content so entries stay small
        g = ZERO
        for v in new.values():
            g = qp_gcd(g, v)
        if g.degree:
            new = {k: v.exact_div(g) for k, v in new.items()}
            rhs = rhs.exact_div(g)
    return new, rhs, t


def _joint_solve(triples: Sequence[tuple], vals: dict) -> tuple[dict, list]:
    """Gauss-Jordan elimination over the unknowns left after propagation.
    Coefficients are QPolys and right-hand sides live in the value module.
    Unit pivots are preferred; otherwise rows are combined through a gcd."""
    zero = ZERO * next(iter(vals.values()))
    rows = []
    for t in dict.fromkeys(tuple(t[:3]) for t in triples):
        coeffs: dict = {}
        rhs = zero
        for x, c in zip(t, _LAW):
            if x in vals:
                rhs = rhs - c * vals[x]
            else:
                coeffs[x] = coeffs.get(x, ZERO) + c
        coeffs = {k: v for k, v in coeffs.items() if v}
        if coeffs:
            rows.append((coeffs, rhs, t))
    # rows with fewer unknowns first keeps fill-in down
    rows.sort(key=lambda r: -len(r[0]))
    done: dict = {}
    try:
        while rows:
            row = rows.pop()
            for pv in [k for k in row[0] if k in done]:
                if pv in row[0]:
                    row = _combine(row, done[pv], pv)
            coeffs, rhs, t = row
            if not coeffs:
                if not _is_zero(rhs):
                    return {}, [("conflict", t, rhs)]
                continue
            pv = min(coeffs, key=lambda k: (not coeffs[k].is_monomial(), len(coeffs[k]._c), repr(k)))
            for k in list(done):
                if pv in done[k][0]:
                    done[k] = _combine(done[k], row, pv)
            done[pv] = row
    except InexactDivision as exc:
        return {}, [("inexact", None, str(exc))]
    solved = {}
    for pv, (pc, pr, t) in done.items():
        if len(pc) == 1:
            try:
                solved[pv] = pr.exact_div(pc[pv])
            except InexactDivision as exc:
                return {}, [("inexact", t, str(exc))]
    return solved, []


# -- type A combinatorial triples ---------------------------------------------

def combinatorial_triples(n: int) -> list[tuple[tuple, tuple, tuple]]:
    """Hessenberg function triples ``(h0, h1, h2)`` from the two basic patterns."""
    out = []
    for h1 in hessenberg_functions(n):
        H = (0,) + h1   # 1-based with h(0) = 0
        for i in range(1, n):
            # pattern 1
            if H[i - 1] < H[i] < H[i + 1] and H[i] < n and H[H[i]] == H[H[i] + 1]:
                h0 = list(h1)
                h2 = list(h1)
                h0[i - 1] = H[i] - 1
                h2[i - 1] = H[i] + 1
                out.append((validate_hessfn(h0), h1, validate_hessfn(h2)))
            # pattern 2
            if H[i + 1] == H[i] + 1 and i not in h1:
                h0 = list(h1)
                h2 = list(h1)
                h0[i] = H[i]
                h2[i - 1] = H[i + 1]
                out.append((validate_hessfn(h0), h1, validate_hessfn(h2)))
    return out


def combinatorial_triples_agree(n: int) -> bool:
    """The combinatorial triples match the root-theoretic ones for A_{n-1}."""
    if n < 2:
        return True
    rs = build_root_system("A", n - 1)
    comb = {tuple(hessfn_to_ideal(n, h, rs).mask for h in t) for t in combinatorial_triples(n)}
    geo = {(t.I0.mask, t.I1.mask, t.I2.mask) for t in enumerate_triples(rs)}
    return comb == geo and len(comb) == len(combinatorial_triples(n))
