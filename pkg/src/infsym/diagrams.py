"""Finite-window wiring diagrams with rational strand lengths.

A diagram on window N is a perfect matching of the 4N boundary points
(top and bottom copies of {±1,...,±N}), each strand carrying a
nonnegative rational length, together with a multiset of closed-loop
lengths.  Composition glues bottom to top, adds lengths along glued
strands, and collects closed components as loops; loops of length
exactly 1 are deleted on sight, which keeps diagrams in normal form.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .partitions import Permutation
from .rationals import format_rational, parse_rational

Point = tuple[str, int]  # ("T" or "B", index in ±1..±N)


def _check_point(pt: Point, window: int):
    side, idx = pt
    if side not in ("T", "B") or idx == 0 or abs(idx) > window:
        raise ValueError(f"bad boundary point {pt} for window {window}")


def _all_points(window: int):
    for side in ("T", "B"):
        for idx in range(-window, window + 1):
            if idx != 0:
                yield (side, idx)


class WiringDiagram:
    """Immutable diagram: window, matching with lengths, loop multiset."""

    __slots__ = ("window", "pairs", "loops")

    def __init__(self, window: int, pairs, loops=()):
        if window < 1:
            raise ValueError("window must be >= 1")
        matching: dict[frozenset, Fraction] = {}
        seen: set[Point] = set()
        for entry in pairs:
            if len(entry) == 3:
                a, b, ln = entry
            else:
                (a, b), ln = entry
            _check_point(a, window)
            _check_point(b, window)
            if a == b:
                raise ValueError(f"strand endpoints coincide: {a}")
            ln = Fraction(ln)
            if ln < 0:
                raise ValueError(f"negative strand length {ln}")
            key = frozenset((a, b))
            if a in seen or b in seen:
                raise ValueError(f"point matched twice: {a} or {b}")
            seen.update((a, b))
            matching[key] = ln
        expected = set(_all_points(window))
        if seen != expected:
            missing = expected - seen
            raise ValueError(f"not a perfect matching, unmatched: "
                             f"{sorted(missing)[:4]}")
        clean_loops = []
        for ln in loops:
            ln = Fraction(ln)
            if ln < 0:
                raise ValueError(f"negative loop length {ln}")
            if ln != 1:
                clean_loops.append(ln)
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "pairs", dict(matching))
        object.__setattr__(self, "loops", tuple(sorted(clean_loops)))

    def __setattr__(self, *a):
        raise AttributeError("WiringDiagram is immutable")

    def _key(self):
        return (self.window,
                frozenset((k, v) for k, v in self.pairs.items()),
                self.loops)

    def __eq__(self, other):
        return (isinstance(other, WiringDiagram)
                and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"WiringDiagram(window={self.window}, "
                f"strands={len(self.pairs)}, loops={list(self.loops)})")

    def partner(self, pt: Point) -> tuple[Point, Fraction]:
        for key, ln in self.pairs.items():
            if pt in key:
                (other,) = key - {pt} if len(key) == 2 else (pt,)
                return other, ln
        raise KeyError(pt)

    def _partner_map(self) -> dict[Point, tuple[Point, Fraction]]:
        out = {}
        for key, ln in self.pairs.items():
            a, b = tuple(key)
            out[a] = (b, ln)
            out[b] = (a, ln)
        return out

    def star(self) -> "WiringDiagram":
        """Reflect top and bottom; lengths and loops are unchanged."""
        flip = {"T": "B", "B": "T"}
        pairs = []
        for key, ln in self.pairs.items():
            a, b = tuple(key)
            pairs.append(((flip[a[0]], a[1]), (flip[b[0]], b[1]), ln))
        return WiringDiagram(self.window, pairs, self.loops)

    def to_json(self) -> dict:
        def enc(pt: Point) -> str:
            return f"{pt[0]}{'+' if pt[1] > 0 else ''}{pt[1]}"

        pair_list = []
        for key, ln in self.pairs.items():
            a, b = sorted(key)
            pair_list.append(
                {"a": enc(a), "b": enc(b), "len": format_rational(ln)})
        pair_list.sort(key=lambda d: (d["a"], d["b"]))
        return {
            "window": self.window,
            "pairs": pair_list,
            "loops": [format_rational(x) for x in self.loops],
        }

    @staticmethod
    def from_json(data) -> "WiringDiagram":
        def dec(s: str) -> Point:
            side = s[0]
            if side not in ("T", "B"):
                raise ValueError(f"bad point string {s!r}")
            return (side, int(s[1:]))

        pairs = [(dec(p["a"]), dec(p["b"]), parse_rational(p["len"]))
                 for p in data["pairs"]]
        loops = [parse_rational(x) for x in data.get("loops", [])]
        return WiringDiagram(int(data["window"]), pairs, loops)


def compose(d1: WiringDiagram, d2: WiringDiagram) -> WiringDiagram:
    """Glue the bottom of d1 to the top of d2.

    Strand lengths along a glued path add; components trapped in the
    middle become loops (length-1 loops are dropped by the constructor).
    """
    if d1.window != d2.window:
        raise ValueError(
            f"window mismatch: {d1.window} != {d2.window}")
    n = d1.window
    m1 = d1._partner_map()
    m2 = d2._partner_map()

    # Walk from a point of the composite boundary through the glued
    # middle.  Points of d1 are tagged 1, points of d2 tagged 2.
    def step(tag, pt):
        """Cross the glue: bottom of d1 <-> top of d2."""
        if tag == 1 and pt[0] == "B":
            return (2, ("T", pt[1]))
        if tag == 2 and pt[0] == "T":
            return (1, ("B", pt[1]))
        return None

    used: set[tuple[int, Point]] = set()
    pairs = []
    starts = ([(1, ("T", i)) for i in range(-n, n + 1) if i != 0]
              + [(2, ("B", i)) for i in range(-n, n + 1) if i != 0])
    for tag0, pt0 in starts:
        if (tag0, pt0) in used:
            continue
        used.add((tag0, pt0))
        tag, pt = tag0, pt0
        length = Fraction(0)
        while True:
            nxt, ln = (m1 if tag == 1 else m2)[pt]
            length += ln
            used.add((tag, pt))
            used.add((tag, nxt))
            crossed = step(tag, nxt)
            if crossed is None:
                break
            tag, pt = crossed
            used.add((tag, pt))
        end = ("T", nxt[1]) if tag == 1 else ("B", nxt[1])
        pairs.append(((("T", pt0[1]) if tag0 == 1 else ("B", pt0[1])),
                      end, length))

    # anything unused sits in closed middle components
    loops = list(d1.loops) + list(d2.loops)
    for tag0 in (1, 2):
        pmap = m1 if tag0 == 1 else m2
        for pt0 in pmap:
            if (tag0, pt0) in used:
                continue
            tag, pt = tag0, pt0
            length = Fraction(0)
            while (tag, pt) not in used:
                used.add((tag, pt))
                nxt, ln = (m1 if tag == 1 else m2)[pt]
                length += ln
                used.add((tag, nxt))
                tag, pt = step(tag, nxt)
            loops.append(length)
    return WiringDiagram(n, pairs, loops)


def compose_many(*diagrams: WiringDiagram) -> WiringDiagram:
    if not diagrams:
        raise ValueError("need at least one diagram")
    out = diagrams[0]
    for d in diagrams[1:]:
        out = compose(out, d)
    return out


# ---------------------------------------------------------------------------
# generators

def identity_diagram(window: int) -> WiringDiagram:
    return perm_diagram(Permutation.identity(), window)


def perm_diagram(g: Permutation, window: int) -> WiringDiagram:
    """Top point s joins bottom point g^{-1}(s) with length 0, so that
    composition of diagrams matches composition of permutations."""
    idx = [i for i in range(-window, window + 1) if i != 0]
    if not g.support <= set(idx):
        raise ValueError(
            f"support {sorted(g.support)} outside window {window}")
    ginv = g.inverse()
    return WiringDiagram(
        window, [(("T", s), ("B", ginv(s)), 0) for s in idx])


def a_diagram(i: int, window: int) -> WiringDiagram:
    """Identity wiring whose single strand through i has length 1."""
    if i == 0 or abs(i) > window:
        raise ValueError(f"index {i} outside window {window}")
    idx = [s for s in range(-window, window + 1) if s != 0]
    return WiringDiagram(
        window,
        [(("T", s), ("B", s), 1 if s == i else 0) for s in idx])


def c_diagram(length, window: int) -> WiringDiagram:
    """Identity wiring plus one loop of the given length."""
    base = identity_diagram(window)
    return WiringDiagram(window, [(*tuple(k), v)
                                  for k, v in base.pairs.items()],
                         [Fraction(length)])


def p_diagram(n: int, window: int) -> WiringDiagram:
    """Vertical strands of length 0 for |i| <= n; for n < |i| <= window,
    arcs top i—top(-i) and bottom i—bottom(-i), each of length 1/2."""
    if not 0 <= n < window:
        raise ValueError(f"need 0 <= n < window, got n={n}")
    pairs = []
    for i in range(1, window + 1):
        if i <= n:
            pairs.append((("T", i), ("B", i), 0))
            pairs.append((("T", -i), ("B", -i), 0))
        else:
            pairs.append((("T", i), ("T", -i), Fraction(1, 2)))
            pairs.append((("B", i), ("B", -i), Fraction(1, 2)))
    return WiringDiagram(window, pairs)


def generator(kind: str, window: int, **kw) -> WiringDiagram:
    """Uniform front door: kind in {perm, A, C, P}."""
    if kind == "perm":
        return perm_diagram(kw["g"], window)
    if kind == "A":
        return a_diagram(kw["i"], window)
    if kind == "C":
        return c_diagram(kw["length"], window)
    if kind == "P":
        return p_diagram(kw["n"], window)
    raise ValueError(f"unknown generator kind {kind!r}")


def random_diagram(window: int, rng: random.Random) -> WiringDiagram:
    """A random perfect matching with small rational lengths and a few
    loops; used by the property suites."""
    pts = list(_all_points(window))
    rng.shuffle(pts)
    lengths = [Fraction(rng.randrange(0, 5), rng.choice([1, 2]))
               for _ in range(len(pts) // 2)]
    pairs = [(pts[2 * k], pts[2 * k + 1], lengths[k])
             for k in range(len(pts) // 2)]
    loops = [Fraction(rng.randrange(2, 6)) for _ in range(rng.randrange(3))]
    return WiringDiagram(window, pairs, loops)


# ---------------------------------------------------------------------------
# relation suite

def verify_relations(window: int) -> list[dict]:
    """Exhaustively instantiate the seven semigroup identities over all
    legal index tuples in the window.  Returns one report entry per
    instance; entry["ok"] is False on a failure.
    """
    if window < 3:
        raise ValueError("window must be >= 3")
    N = window
    idx = [i for i in range(-N, N + 1) if i != 0]
    report = []

    def check(name, inst, lhs, rhs):
        report.append({"relation": name, "instance": inst,
                       "ok": lhs == rhs})

    A = {i: a_diagram(i, N) for i in idx}
    P = {n: p_diagram(n, N) for n in range(N)}

    # commuting length markers
    for i, j in itertools.combinations(idx, 2):
        check("A_i A_j = A_j A_i", f"i={i},j={j}",
              compose(A[i], A[j]), compose(A[j], A[i]))

    # conjugation moves the marker: g A_i g^{-1} = A_{g(i)}
    gens = [Permutation.from_cycles((a, b))
            for a, b in itertools.combinations(idx, 2)]
    gens.append(Permutation.from_cycles((1, 2, 3)))
    gens.append(Permutation.from_cycles((1, -1), (2, 3)))
    for g in gens:
        dg = perm_diagram(g, N)
        dginv = perm_diagram(g.inverse(), N)
        for i in idx:
            check("g A_i g^-1 = A_{g(i)}", f"g={g.mapping},i={i}",
                  compose_many(dg, A[i], dginv), A[g(i)])

    # marker inside the projection window commutes with it
    for n in range(N):
        for i in idx:
            if abs(i) <= n:
                check("A_i P_n = P_n A_i", f"i={i},n={n}",
                      compose(A[i], P[n]), compose(P[n], A[i]))
            else:
                check("A_i P_n = A_-i P_n", f"i={i},n={n}",
                      compose(A[i], P[n]), compose(A[-i], P[n]))

    # P_n A_i P_n = P_n (i,k) P_n for |i| <= n < |k|
    for n in range(N):
        for i in idx:
            if abs(i) > n:
                continue
            for k in idx:
                if abs(k) <= n:
                    continue
                t = perm_diagram(Permutation.from_cycles((i, k)), N)
                check("P_n A_i P_n = P_n (i,k) P_n",
                      f"n={n},i={i},k={k}",
                      compose_many(P[n], A[i], P[n]),
                      compose_many(P[n], t, P[n]))

    # powers of distinct outside markers close into loops
    for n in range(N - 1):
        outside = [i for i in range(n + 1, N + 1)]
        for r in (1, 2):
            for subset in itertools.combinations(outside, r):
                for powers in itertools.product((1, 2, 3), repeat=r):
                    word = [P[n]]
                    for i, k in zip(subset, powers):
                        word.extend([A[i]] * k)
                    word.append(P[n])
                    rhs = P[n]
                    for k in powers:
                        rhs = compose(rhs, c_diagram(k + 1, N))
                    check("P_n prod A_i^k P_n = P_n prod C_{k+1}",
                          f"n={n},i={subset},k={powers}",
                          compose_many(*word), rhs)

    # sandwiching a permutation between rank-0 projections reads off
    # its cycle lengths as loops
    sigmas = [Permutation.from_cycles((1, 2)),
              Permutation.from_cycles((1, 2, 3)),
              Permutation.from_cycles((1, 2), (3,)),
              Permutation.identity()]
    if N >= 4:
        sigmas.append(Permutation.from_cycles((1, 2, 3, 4)))
        sigmas.append(Permutation.from_cycles((1, 2), (3, 4)))
    for s in sigmas:
        ds = perm_diagram(s, N)
        rhs = P[0]
        for cyc in s.cycles():
            rhs = compose(rhs, c_diagram(len(cyc), N))
        check("P_0 sigma P_0 = P_0 prod C_k", f"sigma={s.mapping}",
              compose_many(P[0], ds, P[0]), rhs)

    return report
