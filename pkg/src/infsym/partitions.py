"""Integer partitions, Young diagram combinatorics, finitely supported
permutations of the integers, and Young distributions.

These are the shared vocabulary of the whole package.  All values are
immutable and hashable.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache


class Partition:
    """An integer partition: weakly decreasing positive parts.

    The empty partition is a first-class value.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, *a):
        raise AttributeError("Partition is immutable")

    @staticmethod
    def from_unsorted(parts) -> "Partition":
        """Build a partition from an unordered iterable of positive parts."""
        return Partition(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def part(self, i: int) -> int:
        """The i-th part (1-based); zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose the Young diagram (column lengths)."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def multiplicities(self) -> dict[int, int]:
        """Map part-size -> multiplicity."""
        m: dict[int, int] = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def z(self) -> int:
        """The centralizer order prod i^{m_i} m_i! of a permutation with
        this cycle type."""
        out = 1
        for i, m in self.multiplicities().items():
            out *= i**m * math.factorial(m)
        return out

    def dim_syt(self) -> int:
        """Number of standard Young tableaux of this shape (hook lengths)."""
        return _dim_syt(self.parts)

    def covers_down(self) -> list["Partition"]:
        """All diagrams obtained by removing one corner box."""
        out = []
        p = self.parts
        for i in range(len(p)):
            if i == len(p) - 1 or p[i] > p[i + 1]:
                if p[i] == 1:
                    out.append(Partition(p[:i]))
                else:
                    out.append(Partition(p[:i] + (p[i] - 1,) + p[i + 1:]))
        return out

    def covers_up(self) -> list["Partition"]:
        """All diagrams obtained by adding one box."""
        out = []
        p = self.parts
        for i in range(len(p) + 1):
            if i == 0 or (i < len(p) and p[i] < p[i - 1]) or (i == len(p)):
                if i == len(p):
                    out.append(Partition(p + (1,)))
                elif i == 0 or p[i] < p[i - 1]:
                    out.append(Partition(p[:i] + (p[i] + 1,) + p[i + 1:]))
        return out

    def union(self, other: "Partition") -> "Partition":
        """Multiset union of parts."""
        return Partition.from_unsorted(self.parts + other.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @staticmethod
    def from_json(data) -> "Partition":
        return Partition(data)


@lru_cache(maxsize=None)
def _dim_syt(parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    n = sum(parts)
    num = math.factorial(n)
    for i, row in enumerate(parts):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            num //= hook
    return num


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n in reverse-lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


class Permutation:
    """A finite bijection of the integers, stored by its support map.

    All unlisted points are fixed.  Zero may appear in the support only
    where the ambient group permits it.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: dict[int, int] | None = None):
        mapping = dict(mapping or {})
        mapping = {k: v for k, v in mapping.items() if k != v}
        if set(mapping) != set(mapping.values()):
            raise ValueError("mapping is not a bijection of its support")
        object.__setattr__(self, "mapping", mapping)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def from_cycles(*cycles) -> "Permutation":
        m: dict[int, int] = {}
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in m:
                    raise ValueError("cycles are not disjoint")
                m[a] = b
        return Permutation(m)

    @staticmethod
    def identity() -> "Permutation":
        return Permutation({})

    def __call__(self, i: int) -> int:
        return self.mapping.get(i, i)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self.mapping.items()})

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self * other)(i) = self(other(i))."""
        pts = self.support | other.support
        return Permutation({i: self(other(i)) for i in pts})

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    def __repr__(self):
        return f"Permutation({self.mapping})"

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its minimum."""
        seen = set()
        out = []
        for start in sorted(self.mapping):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self, ambient_n: int) -> tuple[Partition, Partition]:
        """Cycle type within S(ambient_n) acting on {1..n}.

        Returns (full, nontrivial): full includes fixed points and is a
        partition of n; nontrivial keeps only lengths >= 2.
        """
        ambient = set(range(1, ambient_n + 1))
        if not self.support <= ambient:
            raise ValueError(
                f"support {sorted(self.support)} not within 1..{ambient_n}")
        lens = sorted((len(c) for c in self.cycles()), reverse=True)
        fixed = ambient_n - sum(lens)
        full = Partition(lens + [1] * fixed)
        return full, Partition(lens)

    def sign(self) -> int:
        s = 1
        for c in self.cycles():
            if len(c) % 2 == 0:
                s = -s
        return s

    def num_cycles_on(self, n: int) -> int:
        """Number of cycles (including fixed points) on {1..n}."""
        nontrivial = self.cycles()
        return n - sum(len(c) - 1 for c in nontrivial)

    # Membership predicates for the three ambient groups and the
    # symmetry subgroup K (pointwise conditions).
    def in_GO(self) -> bool:
        return True

    def in_GE(self) -> bool:
        return self(0) == 0

    def in_GD(self) -> bool:
        return self(0) == 0 and all(
            (i > 0) == (self(i) > 0) for i in self.support)

    def in_K(self) -> bool:
        pts = self.support | {-i for i in self.support}
        return all(self(-i) == -self(i) for i in pts)


class YoungDistribution:
    """A finitely supported map from rational points of [-1,1] to
    non-empty partitions."""

    __slots__ = ("entries",)

    def __init__(self, entries: dict[Fraction, Partition] | None = None):
        clean: dict[Fraction, Partition] = {}
        for x, lam in (entries or {}).items():
            x = Fraction(x)
            if not -1 <= x <= 1:
                raise ValueError(f"point {x} outside [-1,1]")
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if lam.size == 0:
                continue
            clean[x] = lam
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, *a):
        raise AttributeError("YoungDistribution is immutable")

    @property
    def support(self) -> set[Fraction]:
        return set(self.entries)

    @property
    def size(self) -> int:
        return sum(lam.size for lam in self.entries.values())

    def shape_at(self, x) -> Partition:
        return self.entries.get(Fraction(x), Partition())

    def __eq__(self, other):
        return (isinstance(other, YoungDistribution)
                and self.entries == other.entries)

    def __repr__(self):
        return f"YoungDistribution({self.entries})"

    def scale(self, p) -> "YoungDistribution":
        """Move the entry at y to the point p*y, for 0 < p <= 1."""
        p = Fraction(p)
        if not 0 < p <= 1:
            raise ValueError("scale factor must be in (0,1]")
        out: dict[Fraction, Partition] = {}
        for x, lam in self.entries.items():
            y = p * x
            out[y] = out[y].union(lam) if y in out else lam
        return YoungDistribution(out)

    def union(self, other: "YoungDistribution") -> "YoungDistribution":
        """Pointwise multiset union of part lists."""
        out = dict(self.entries)
        for x, lam in other.entries.items():
            out[x] = out[x].union(lam) if x in out else lam
        return YoungDistribution(out)

    def rho(self) -> Partition:
        """The partition of |distribution| formed by the entry sizes."""
        return Partition.from_unsorted(
            lam.size for lam in self.entries.values())

    def to_json(self) -> list[dict]:
        from .rationals import format_rational
        return [
            {"x": format_rational(x), "shape": lam.to_json()}
            for x, lam in sorted(self.entries.items())
        ]

    @staticmethod
    def from_json(data) -> "YoungDistribution":
        from .rationals import parse_rational
        entries: dict[Fraction, Partition] = {}
        for item in data:
            x = parse_rational(item["x"])
            lam = Partition.from_json(item["shape"])
            entries[x] = entries[x].union(lam) if x in entries else lam
        return YoungDistribution(entries)


def permutations_of_points(points):
    """Yield every bijection of the given finite point set as a
    Permutation.  Exhaustive: len(points)! elements."""
    points = list(points)
    for images in itertools.permutations(points):
        yield Permutation(dict(zip(points, images)))
