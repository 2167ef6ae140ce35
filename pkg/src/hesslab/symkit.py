"""Symmetric functions of fixed degree with QPoly coefficients, brute-force
chromatic quasisymmetric and unicellular LLT functions, and the modular-law
route to chromatic functions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Mapping, Sequence

from .combin import (compositions, conjugate, kostka_number, mn_char,
                     partitions, z_lambda)
from .idealkit import (hessenberg_functions, hessfn_of_composition,
                       validate_hessfn)
from .modlaw import combinatorial_triples, solve_modular
from .qlaurent import ONE, ZERO, QPoly, qfactorial

BASES = ("schur", "monomial", "elementary", "homogeneous", "power")


class DefinitionMismatch(ValueError):
    pass


class SymFunc:
    """Degree-n symmetric function, stored in the Schur basis.

    ``coeffs`` in other bases are converted on construction via
    :meth:`from_basis`; :meth:`to_basis` goes the other way.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[tuple, QPoly] | None = None):
        self.n = n
        self.coeffs = {lam: QPoly.coerce(v) for lam, v in (coeffs or {}).items() if v}

    # module operations
    def __add__(self, other: "SymFunc") -> "SymFunc":
        d = dict(self.coeffs)
        for k, v in other.coeffs.items():
            d[k] = d.get(k, ZERO) + v
        return SymFunc(self.n, d)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-1) * other

    def __rmul__(self, c) -> "SymFunc":
        return SymFunc(self.n, {k: v * c if isinstance(c, (int, Fraction)) else c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return sym_product(self, other)
        return self.__rmul__(other)

    def exact_div(self, p) -> "SymFunc":
        return SymFunc(self.n, {k: v.exact_div(p) for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def schur(self, lam) -> QPoly:
        return self.coeffs.get(tuple(lam), ZERO)

    def at_one(self) -> dict:
        return {k: v(1) for k, v in self.coeffs.items()}

    def is_schur_positive(self) -> bool:
        return all(v.is_nonnegative() and v.is_polynomial() for v in self.coeffs.values())

    @classmethod
    def from_basis(cls, n: int, basis: str, coeffs: Mapping[tuple, QPoly]) -> "SymFunc":
        M = to_schur_matrix(n, basis)
        out: dict[tuple, QPoly] = {}
        for mu, c in coeffs.items():
            for lam, a in M[tuple(mu)].items():
                out[lam] = out.get(lam, ZERO) + c * a
        return cls(n, out)

    def to_basis(self, basis: str) -> dict[tuple, QPoly]:
        M = from_schur_matrix(self.n, basis)
        out: dict[tuple, QPoly] = {}
        for lam, c in self.coeffs.items():
            for mu, a in M[lam].items():
                out[mu] = out.get(mu, ZERO) + c * a
        return {k: v for k, v in out.items() if v}

    def to_json(self, basis: str = "schur") -> dict:
        basis = BASIS_ALIASES.get(basis, basis)
        data = self.coeffs if basis == "schur" else self.to_basis(basis)
        return {"basis": basis, "n": self.n,
                "coeffs": {",".join(map(str, k)): v.to_json() for k, v in sorted(data.items(), reverse=True)}}

    def __repr__(self):
        terms = [f"({v})s[{','.join(map(str, k))}]" for k, v in sorted(self.coeffs.items(), reverse=True)]
        return " + ".join(terms) or "0"


# -- transition matrices -------------------------------------------------------------

BASIS_ALIASES = {"s": "schur", "e": "elementary", "h": "homogeneous", "m": "monomial", "p": "power"}

@lru_cache(maxsize=None)
def to_schur_matrix(n: int, basis: str) -> dict:
    """basis element mu -> {lambda: coefficient of s_lambda}."""
    basis = BASIS_ALIASES.get(basis, basis)
    P = partitions(n)
    if basis == "schur":
        return {mu: {mu: 1} for mu in P}
    if basis == "homogeneous":
        return {mu: {lam: kostka_number(lam, mu) for lam in P if kostka_number(lam, mu)} for mu in P}
    if basis == "elementary":
        return {mu: {lam: kostka_number(conjugate(lam), mu) for lam in P if kostka_number(conjugate(lam), mu)}
                for mu in P}
    if basis == "power":
        return {rho: {lam: mn_char(lam, rho) for lam in P if mn_char(lam, rho)} for rho in P}
    if basis == "monomial":
        inv = from_schur_matrix(n, "monomial")   # s -> m is the Kostka matrix
        return _invert(P, inv)
    raise ValueError(f"unknown basis {basis}")


@lru_cache(maxsize=None)
def from_schur_matrix(n: int, basis: str) -> dict:
    """lambda -> {mu: coefficient of basis element mu in s_lambda}."""
    basis = BASIS_ALIASES.get(basis, basis)
    P = partitions(n)
    if basis == "monomial":
        return {lam: {mu: kostka_number(lam, mu) for mu in P if kostka_number(lam, mu)} for lam in P}
    if basis == "power":
        return {lam: {rho: Fraction(mn_char(lam, rho), z_lambda(rho)) for rho in P if mn_char(lam, rho)}
                for lam in P}
    if basis == "schur":
        return {mu: {mu: 1} for mu in P}
    return _invert(P, to_schur_matrix(n, basis))


def _invert(P, M: dict) -> dict:
    """Invert a transition given as row dicts, by exact Gauss-Jordan elimination."""
    n = len(P)
    A = [[Fraction(M[P[i]].get(P[j], 0)) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c])
        A[c], A[piv] = A[piv], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    out = {}
    for i, p in enumerate(P):
        row = {}
        for j, pp in enumerate(P):
            v = A[i][n + j]
            if v:
                row[pp] = v.numerator if v.denominator == 1 else v
        out[p] = row
    return out


def sym_product(a: SymFunc, b: SymFunc) -> SymFunc:
    """Product through the power-sum basis."""
    pa, pb = a.to_basis("power"), b.to_basis("power")
    prod_p: dict[tuple, QPoly] = {}
    for r1, c1 in pa.items():
        for r2, c2 in pb.items():
            r = tuple(sorted(r1 + r2, reverse=True))
            prod_p[r] = prod_p.get(r, ZERO) + c1 * c2
    return SymFunc.from_basis(a.n + b.n, "power", prod_p)


def e_basis(mu: Sequence[int], coef: QPoly = ONE) -> SymFunc:
    mu = tuple(sorted(mu, reverse=True))
    return SymFunc.from_basis(sum(mu), "elementary", {mu: coef})


# -- graded representations ------------------------------------------------------------

@dataclass
class GradedSnRep:
    """Graded class function on S_n: cycle type -> graded trace."""

    n: int
    values: dict[tuple, QPoly]


class InvalidRepresentation(ValueError):
    pass


def frobenius(rep: GradedSnRep) -> SymFunc:
    n = rep.n
    out = {}
    for lam in partitions(n):
        tot = ZERO
        for rho in partitions(n):
            v = rep.values.get(rho, ZERO)
            x = mn_char(lam, rho)
            if v and x:
                tot = tot + v * Fraction(x, z_lambda(rho))
        if not tot.is_integral():
            raise InvalidRepresentation(f"non-integral multiplicity {tot} for {lam}")
        out[lam] = tot
    return SymFunc(n, out)


def frobenius_of_multiplicities(n: int, mult: Mapping[tuple, QPoly]) -> SymFunc:
    """Frobenius image of a graded representation given by irreducible multiplicities."""
    return SymFunc(n, dict(mult))


# -- brute force --------------------------------------------------------------------------

def _earlier_neighbours(h: Sequence[int]) -> list[list[int]]:
    n = len(h)
    # edge {j < i} iff i <= h(j)
    return [[j for j in range(i) if h[j] >= i + 1] for i in range(n)]


def _coloring_sum(h: Sequence[int], proper: bool) -> dict[tuple, dict[int, int]]:
    n = len(h)
    nb = _earlier_neighbours(h)
    acc: dict[tuple, dict[int, int]] = {}
    kappa = [0] * n
    counts = [0] * n

    def rec(i: int, asc: int):
        if i == n:
            key = tuple(counts)
            d = acc.setdefault(key, {})
            d[asc] = d.get(asc, 0) + 1
            return
        for c in range(n):
            a = asc
            ok = True
            for j in nb[i]:
                if kappa[j] == c:
                    if proper:
                        ok = False
                        break
                elif kappa[j] < c:
                    a += 1
            if not ok:
                continue
            kappa[i] = c
            counts[c] += 1
            rec(i + 1, a)
            counts[c] -= 1

    rec(0, 0)
    return acc


def _monomial_to_schur(n: int, acc: dict[tuple, dict[int, int]], what: str) -> SymFunc:
    mono: dict[tuple, QPoly] = {}
    for key, d in acc.items():
        mu = tuple(sorted((c for c in key if c), reverse=True))
        val = QPoly(d)
        if mu in mono:
            if mono[mu] != val:
                raise DefinitionMismatch(f"{what} is not symmetric at content {key}")
        else:
            mono[mu] = val
    for mu in partitions(n):
        mono.setdefault(mu, ZERO)
    # every arrangement of each content must carry the same coefficient
    for mu, v in mono.items():
        for perm in set(permutations(mu + (0,) * (n - len(mu)))):
            if QPoly(acc.get(perm, {})) != v:
                raise DefinitionMismatch(f"{what} is not symmetric at content {perm}")
    return SymFunc.from_basis(n, "monomial", mono)


def csf_bruteforce(n: int, h: Sequence[int]) -> SymFunc:
    """Chromatic quasisymmetric function: proper colourings weighted by q^asc."""
    h = validate_hessfn(h)
    if len(h) != n:
        raise ValueError("h must have length n")
    return _monomial_to_schur(n, _coloring_sum(h, True), "chromatic function")


def llt_bruteforce(n: int, h: Sequence[int]) -> SymFunc:
    """Unicellular LLT polynomial: all colourings weighted by q^asc."""
    h = validate_hessfn(h)
    if len(h) != n:
        raise ValueError("h must have length n")
    return _monomial_to_schur(n, _coloring_sum(h, False), "unicellular LLT function")


# -- modular law route ----------------------------------------------------------------------

def csf_base_value(mu: Sequence[int]) -> SymFunc:
    """prod [mu_i]! e_mu for the disjoint union of complete graphs."""
    c = ONE
    for m in mu:
        c = c * qfactorial(m)
    return e_basis(mu, c)


@lru_cache(maxsize=None)
def _an_family(n: int) -> dict:
    base = {}
    for mu in compositions(n):
        base[hessfn_of_composition(mu)] = csf_base_value(mu)
    res = solve_modular(combinatorial_triples(n), base, universe=hessenberg_functions(n))
    if res.inconsistent:
        raise ArithmeticError(f"modular law propagation inconsistent: {res.certificate[:1]}")
    if res.undetermined:
        raise ArithmeticError(f"Hessenberg functions left undetermined: {sorted(res.undetermined)}")
    return res.values


def abreu_nigro_csf(n: int, h: Sequence[int]) -> SymFunc:
    """Chromatic function obtained from base values and the modular law only."""
    return _an_family(n)[validate_hessfn(h)]


def schur_f_extract(n: int, h: Sequence[int], csf: SymFunc | None = None) -> dict:
    """f^{I_h} indexed by partitions: the Schur coefficients of the chromatic function."""
    h = validate_hessfn(h)
    csf = csf or abreu_nigro_csf(n, h)
    c_I = sum(h) - n * (n + 1) // 2   # codimension of I_h in u
    out = {}
    for lam in partitions(n):
        v = csf.schur(lam)
        if not v.is_palindromic(c_I):
            raise ArithmeticError(f"f_{lam} = {v} is not palindromic about {c_I}/2")
        out[lam] = v
    return out


def parse_hess(text: str) -> tuple:
    return validate_hessfn(parse_partition_keep_order(text))


def parse_partition_keep_order(text: str) -> tuple:
    text = text.strip().strip("[]()")
    return tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
