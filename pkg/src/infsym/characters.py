"""Exact character theory of the finite symmetric groups S(n).

Induced characters of Young subgroups, irreducible characters via both
the border-strip recursion and the determinant of induced characters,
inner products, and normalized values on single cycles.  Everything is
an exact integer or Fraction.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, partitions_of


class ClassFunction:
    """A central function on S(n): one exact value per conjugacy class."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict[Partition, Fraction]):
        classes = set(partitions_of(n))
        if set(values) != classes:
            missing = classes - set(values)
            raise ValueError(f"missing classes: {sorted(missing)[:3]}")
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "values", {k: Fraction(v) for k, v in values.items()})

    def __setattr__(self, *a):
        raise AttributeError("ClassFunction is immutable")

    def __call__(self, rho: Partition) -> Fraction:
        return self.values[rho]

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.n == other.n
                and self.values == other.values)


def eta_character(mu: Partition, rho: Partition) -> int:
    """Value on class rho of the character induced from the trivial
    character of the Young subgroup S(mu_1) x S(mu_2) x ...

    Counts the ways of distributing the cycle multiset of rho into
    ordered blocks of sizes mu_i, weighted by binomial multiplicities.
    """
    if mu.size != rho.size:
        raise ValueError(f"|mu|={mu.size} != |rho|={rho.size}")
    sizes = sorted(mu.parts)  # order of blocks is immaterial for the count
    mult = tuple(sorted(rho.multiplicities().items()))
    return _eta_count(tuple(sizes), mult)


@lru_cache(maxsize=None)
def _eta_count(block_sizes: tuple[int, ...],
               cycle_mult: tuple[tuple[int, int], ...]) -> int:
    if not block_sizes:
        return 1 if all(m == 0 for _, m in cycle_mult) else 0
    target = block_sizes[0]
    rest = block_sizes[1:]
    total = 0
    lengths = [c for c, _ in cycle_mult]
    counts = [m for _, m in cycle_mult]
    # choose how many cycles of each length go into the first block
    for choice in _bounded_compositions(target, lengths, counts):
        weight = 1
        for (length, avail), take in zip(cycle_mult, choice):
            weight *= _binom(avail, take)
        remaining = tuple(
            (length, avail - take)
            for (length, avail), take in zip(cycle_mult, choice))
        total += weight * _eta_count(rest, remaining)
    return total


def _bounded_compositions(target, lengths, counts, idx=0):
    """All ways (a_1,..) with a_i <= counts[i] and sum a_i*lengths[i] = target."""
    if idx == len(lengths):
        if target == 0:
            yield ()
        return
    length, avail = lengths[idx], counts[idx]
    for take in range(min(avail, target // length) + 1):
        for rest in _bounded_compositions(
                target - take * length, lengths, counts, idx + 1):
            yield (take,) + rest


def _binom(n, k):
    import math
    return math.comb(n, k)


def frobenius_character(lam: Partition, rho: Partition) -> int:
    """chi^lambda(rho) as the signed sum of induced characters over the
    expansion of the determinant [eta^{lambda_i - i + j}]."""
    if lam.size != rho.size:
        raise ValueError(f"|lambda|={lam.size} != |rho|={rho.size}")
    r = lam.length
    if r == 0:
        return 1
    total = 0
    for w in itertools.permutations(range(r)):
        entries = [lam.parts[i] - i + w[i] for i in range(r)]
        if any(e < 0 for e in entries):
            continue
        sign = _perm_sign(w)
        mu = Partition.from_unsorted(e for e in entries if e > 0)
        total += sign * eta_character(mu, rho)
    return total


def _perm_sign(w) -> int:
    sign = 1
    seen = [False] * len(w)
    for i in range(len(w)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = w[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def mn_character(lam: Partition, rho: Partition) -> int:
    """chi^lambda(rho) by the border-strip recursion.

    Peels the non-unit cycles of rho largest-first; once only fixed
    points remain, the value is the number of standard tableaux of the
    remaining shape.
    """
    if lam.size != rho.size:
        raise ValueError(f"|lambda|={lam.size} != |rho|={rho.size}")
    nonunit = tuple(p for p in rho.parts if p > 1)
    return _mn(lam.parts, nonunit)


@lru_cache(maxsize=None)
def _mn(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return Partition(parts).dim_syt()
    k = cycles[0]
    rest = cycles[1:]
    total = 0
    for shape, height in _strip_removals(parts, k):
        total += (-1) ** height * _mn(shape, rest)
    return total


def _strip_removals(parts: tuple[int, ...], k: int):
    """All shapes obtained by removing a border strip of size k, with the
    strip height (rows spanned minus one).  Beta-number formulation."""
    ell = len(parts)
    beta = [parts[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    for idx, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_parts = tuple(
            x - (len(new_beta) - 1 - i) for i, x in enumerate(new_beta))
        new_parts = tuple(p for p in new_parts if p > 0)
        yield new_parts, height


def character_table(n: int) -> dict[Partition, ClassFunction]:
    """Full character table of S(n): shape -> class function."""
    classes = list(partitions_of(n))
    table = {}
    for lam in classes:
        vals = {rho: Fraction(mn_character(lam, rho)) for rho in classes}
        table[lam] = ClassFunction(n, vals)
    return table


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """The S(n) inner product, as a sum over classes weighted by 1/z."""
    if f.n != g.n:
        raise ValueError(f"sizes differ: {f.n} != {g.n}")
    total = Fraction(0)
    for rho in partitions_of(f.n):
        total += f(rho) * g(rho) / rho.z()
    return total


def eta_class_function(mu: Partition) -> ClassFunction:
    n = mu.size
    return ClassFunction(
        n, {rho: Fraction(eta_character(mu, rho)) for rho in partitions_of(n)})


def irreducible_class_function(lam: Partition) -> ClassFunction:
    n = lam.size
    return ClassFunction(
        n, {rho: Fraction(mn_character(lam, rho)) for rho in partitions_of(n)})


def normalized_cycle_char(lam: Partition, k: int) -> Fraction:
    """chi^lambda on a single k-cycle class, divided by the dimension.

    Enumerates removable k-strips directly; no recursion over the
    remaining fixed points.
    """
    n = lam.size
    if not 2 <= k <= n:
        raise ValueError(f"cycle length {k} out of range 2..{n}")
    total = 0
    for shape, height in _strip_removals(lam.parts, k):
        total += (-1) ** height * Partition(shape).dim_syt()
    return Fraction(total, lam.dim_syt())


def eta_brute_force(mu: Partition, rho: Partition) -> int:
    """Oracle: induced trivial character by explicit coset counting.

    Counts ordered set partitions of {1..n} into blocks of sizes mu_i
    fixed by a permutation of cycle type rho.  Usable for n <= 7.
    """
    if mu.size != rho.size:
        raise ValueError("size mismatch")
    n = mu.size
    # build one permutation of cycle type rho
    g = {}
    next_pt = 1
    for c in rho.parts:
        pts = list(range(next_pt, next_pt + c))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            g[a] = b
        next_pt += c
    count = 0
    for assignment in _ordered_set_partitions(tuple(range(1, n + 1)),
                                              tuple(mu.parts)):
        if all(frozenset(g[i] for i in blk) == blk for blk in assignment):
            count += 1
    return count


def _ordered_set_partitions(points: tuple[int, ...], sizes: tuple[int, ...]):
    if not sizes:
        yield ()
        return
    first_size = sizes[0]
    for blk in itertools.combinations(points, first_size):
        blk_set = frozenset(blk)
        rest_points = tuple(p for p in points if p not in blk_set)
        for rest in _ordered_set_partitions(rest_points, sizes[1:]):
            yield (blk_set,) + rest
