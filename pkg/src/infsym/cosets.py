"""Double cosets of the hyperoctahedral subgroup inside the symmetric
group of the signed points {±1,...,±n}.

The coset of g is classified by a partition of n: join the base
matching {i,-i} with its image matching {g(i),g(-i)} and halve the
block sizes.  Closed-form coset sizes, the generating polynomial in
the number of blocks, the spherical extension of a character, and a
positivity sum, all with brute-force census oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .partitions import Partition, Permutation, permutations_of_points
from .thoma import ThomaMeasure

CENSUS_LIMIT = 4


def signed_points(n: int) -> list[int]:
    return [i for i in range(-n, n + 1) if i != 0]


def in_signed_group(g: Permutation, n: int) -> bool:
    """Does g permute {±1..±n} (fixing everything else)?"""
    return g.support <= set(signed_points(n))


class _UnionFind:
    def __init__(self, points):
        self.parent = {p: p for p in points}

    def find(self, p):
        while self.parent[p] != p:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        return p

    def join(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def coset_type(g: Permutation, n: int) -> Partition:
    """Partition of n with parts the half-sizes of the blocks of the
    join of {{i,-i}} with {{g(i),g(-i)}}."""
    if not in_signed_group(g, n):
        raise ValueError(
            f"support {sorted(g.support)} not within ±1..±{n}")
    pts = signed_points(n)
    uf = _UnionFind(pts)
    for i in range(1, n + 1):
        uf.join(i, -i)
        uf.join(g(i), g(-i))
    sizes: dict[int, int] = {}
    for p in pts:
        r = uf.find(p)
        sizes[r] = sizes.get(r, 0) + 1
    halves = []
    for s in sizes.values():
        if s % 2:
            raise AssertionError("join block of odd size")
        halves.append(s // 2)
    return Partition.from_unsorted(halves)


def coset_size(lam: Partition, n: int) -> int:
    """|K lam K| = 2^(2n - l(lam)) (n!)^2 / z_lam."""
    if lam.size != n:
        raise ValueError(f"|lambda|={lam.size} != n={n}")
    num = 2 ** (2 * n - lam.length) * math.factorial(n) ** 2
    if num % lam.z():
        raise AssertionError("coset size is not integral")
    return num // lam.z()


def coset_poly(n: int) -> dict[int, int]:
    """Coefficients of n! 2^n t(t+2)(t+4)...(t+2n-2), the generating
    polynomial of the number of blocks over the whole group."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [0, 1]  # the polynomial t
    for j in range(1, n):
        shift = 2 * j
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += shift * c
            nxt[k + 1] += c
        coeffs = nxt
    scale = math.factorial(n) * 2 ** n
    return {k: scale * c for k, c in enumerate(coeffs) if c}


def census(n: int, force: bool = False) -> dict[Partition, int]:
    """Exhaustive tally of coset types over all (2n)! permutations of
    the signed points.  Guarded at n <= 4 unless force is set."""
    if n > (5 if force else CENSUS_LIMIT):
        raise ValueError(f"census guarded at n <= {CENSUS_LIMIT} "
                         "(pass force=True for n=5)")
    out: dict[Partition, int] = {}
    for g in permutations_of_points(signed_points(n)):
        lam = coset_type(g, n)
        out[lam] = out.get(lam, 0) + 1
    return out


def spherical_value_E(mu: ThomaMeasure, g: Permutation,
                      n: int) -> Fraction:
    """Biinvariant extension of the character with moment sequence from
    mu: the product of moments c_k over the parts of the coset type.
    Parts of size 1 contribute c_1 = 1."""
    lam = coset_type(g, n)
    out = Fraction(1)
    for k in lam.parts:
        out *= mu.moment(k)
    return out


def theorem4_sum(x, n: int,
                 brute: bool = False) -> tuple[Fraction, Fraction | None]:
    """Sum of x^(n - number of blocks) over the whole signed group.

    Closed form n! 2^n (1+2x)(1+4x)...(1+(2n-2)x); the brute sum
    enumerates (2n)! permutations and is available for n <= 3.
    """
    x = Fraction(x)
    if x == 0 or not -1 <= x <= 1:
        raise ValueError("x must be a nonzero point of [-1,1]")
    closed = Fraction(math.factorial(n) * 2 ** n)
    for j in range(1, n):
        closed *= 1 + 2 * j * x
    brute_val = None
    if brute:
        if n > 3:
            raise ValueError("brute sum guarded at n <= 3")
        brute_val = Fraction(0)
        for g in permutations_of_points(signed_points(n)):
            brute_val += x ** (n - coset_type(g, n).length)
    return closed, brute_val
