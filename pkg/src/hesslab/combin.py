"""Partition and tableau helpers shared by the representation and symmetric function code."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod

Partition = tuple


@lru_cache(maxsize=None)
def partitions(n: int, maxpart: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order (``(n)`` first)."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


def compositions(n: int):
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for rest in compositions(n - k):
            yield (k,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def n_stat(lam: Partition) -> int:
    """``n(lambda) = sum (i-1) lambda_i``."""
    return sum(i * p for i, p in enumerate(lam))


def dominates(lam: Partition, mu: Partition) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_dim(lam: Partition) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks


def z_lambda(rho: Partition) -> int:
    c = Counter(rho)
    return prod(k ** m * factorial(m) for k, m in c.items())


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // z_lambda(rho)


def fmt_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("[]()")
    if not text:
        return ()
    return tuple(sorted((int(t) for t in text.replace(" ", ",").split(",") if t), reverse=True))


# -- Murnaghan-Nakayama ------------------------------------------------------

def _rim_hooks(lam: Partition, k: int):
    """Yield (smaller partition, leg length) for every rim hook of size k.

    Uses beta-numbers: removing a k-hook = moving a bead from b to b-k.
    """
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    for idx, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        leg = sum(1 for x in beta if nb < x < b)
        newbeta = sorted([x for x in beta if x != b] + [nb], reverse=True)
        new = tuple(x - (L - 1 - i) for i, x in enumerate(newbeta))
        yield tuple(p for p in new if p > 0), leg


@lru_cache(maxsize=None)
def mn_char(lam: Partition, rho: Partition) -> int:
    """Irreducible S_n character chi^lam at cycle type rho; ``(n)`` is trivial."""
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    tot = 0
    for smaller, leg in _rim_hooks(lam, k):
        tot += (-1) ** leg * mn_char(smaller, rest)
    return tot


@lru_cache(maxsize=None)
def bip_char(lam: Partition, mu: Partition, pos: Partition, neg: Partition) -> int:
    """Hyperoctahedral character chi^(lam, mu) at the class with positive cycle
    lengths ``pos`` and negative cycle lengths ``neg``.

    ``((n), ())`` is trivial and ``((), (1^n))`` is the sign character.
    """
    if not pos and not neg:
        return 1 if not lam and not mu else 0
    if neg:
        k, sgn, pos2, neg2 = neg[0], -1, pos, neg[1:]
    else:
        k, sgn, pos2, neg2 = pos[0], 1, pos[1:], neg
    tot = 0
    for smaller, leg in _rim_hooks(lam, k):
        tot += (-1) ** leg * bip_char(smaller, mu, pos2, neg2)
    for smaller, leg in _rim_hooks(mu, k):
        tot += sgn * (-1) ** leg * bip_char(lam, smaller, pos2, neg2)
    return tot


def bipartitions(n: int):
    out = []
    for a in range(n, -1, -1):
        for lam in partitions(a):
            for mu in partitions(n - a):
                out.append((lam, mu))
    return out


# -- tableaux and charge -----------------------------------------------------

def ssyt(shape: Partition, content: Partition):
    """Semistandard tableaux of the given shape and content, as lists of rows."""
    content = tuple(content)
    m = len(content)

    def rec(letter: int, cur: tuple):
        if letter > m:
            if cur == tuple(shape):
                yield []
            return
        need = content[letter - 1]
        # add a horizontal strip of size `need` to cur inside shape
        rows = len(shape)
        curl = list(cur) + [0] * (rows - len(cur))

        def strips(i, left, new):
            if i == rows:
                if left == 0:
                    yield tuple(new)
                return
            hi = shape[i] if i == 0 else min(shape[i], curl[i - 1])
            for add in range(min(left, hi - curl[i]), -1, -1):
                yield from strips(i + 1, left - add, new + [curl[i] + add])

        for nxt in strips(0, need, []):
            for tail in rec(letter + 1, nxt):
                yield [(letter, tuple(nxt))] + tail

    for steps in rec(1, ()):
        rowsT = [[] for _ in shape]
        prev = [0] * len(shape)
        for letter, sh in steps:
            for i, ln in enumerate(sh):
                rowsT[i].extend([letter] * (ln - prev[i]))
            prev = list(sh)
        yield [tuple(r) for r in rowsT]


@lru_cache(maxsize=None)
def kostka_number(lam: Partition, mu: Partition) -> int:
    return sum(1 for _ in ssyt(lam, mu))


def reading_word(T) -> list[int]:
    word = []
    for row in reversed(T):
        word.extend(row)
    return word


def charge(word) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content."""
    w = list(word)
    total = 0
    while w:
        n = len(w)
        used = [False] * n
        # extract a standard subword: 1, 2, ... reading cyclically leftwards
        pos = n
        idx = 0
        letter = 1
        picked = []
        while True:
            found = None
            # search leftwards from pos-1, wrapping around
            for step in range(1, n + 1):
                j = (pos - step) % n
                if not used[j] and w[j] == letter:
                    found = j
                    break
            if found is None:
                break
            if picked and found > pos:
                idx += 1   # wrapped around: letter sits to the right of its predecessor
            used[found] = True
            picked.append(found)
            total += idx
            pos = found
            letter += 1
        w = [x for j, x in enumerate(w) if not used[j]]
    return total


def kostka_foulkes(lam: Partition, mu: Partition):
    """Charge generating function ``K_{lam,mu}(t)`` as an exponent->count dict."""
    out: dict[int, int] = {}
    for T in ssyt(lam, mu):
        c = charge(reading_word(T))
        out[c] = out.get(c, 0) + 1
    return out
