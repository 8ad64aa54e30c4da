"""Admissibility of representation labels, boundary projection norms,
the mixture calculus on labels, root-space dimensions, and the
ergodic-limit harness for characters along growing diagrams.

A label is a pair tag (D, E, or O), a depth, a spectral measure, and
one or two Young distributions.  classify applies the admissibility
conditions cheapest-first and reports the first failure.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .characters import normalized_cycle_char
from .partitions import Partition, YoungDistribution
from .thoma import ThomaMeasure, ThomaParams
from .series import PowerSeries
from .thoma import h_from_moments


class ReprLabel:
    """pair in {D,E,O}; depth d >= 0; measure; distribution(s)."""

    __slots__ = ("pair", "depth", "measure", "lam_dist", "mu_dist")

    def __init__(self, pair: str, depth: int, measure: ThomaMeasure,
                 lam_dist: YoungDistribution,
                 mu_dist: YoungDistribution | None = None):
        if pair not in ("D", "E", "O"):
            raise ValueError(f"pair tag must be D, E, or O, got {pair!r}")
        if depth < 0:
            raise ValueError("depth must be nonnegative")
        if pair == "D":
            if mu_dist is None:
                mu_dist = YoungDistribution()
        elif mu_dist is not None and mu_dist.size:
            raise ValueError("second distribution is for pair D only")
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "depth", int(depth))
        object.__setattr__(self, "measure", measure)
        object.__setattr__(self, "lam_dist", lam_dist)
        object.__setattr__(self, "mu_dist", mu_dist)

    def __setattr__(self, *a):
        raise AttributeError("ReprLabel is immutable")

    def __repr__(self):
        return (f"ReprLabel({self.pair}, d={self.depth}, "
                f"lam={self.lam_dist.entries})")

    def to_json(self) -> dict:
        out = {
            "pair": self.pair,
            "depth": self.depth,
            "measure": self.measure.to_json(),
            "lambda": self.lam_dist.to_json(),
        }
        if self.pair == "D":
            out["mu"] = self.mu_dist.to_json()
        return out

    @staticmethod
    def from_json(data) -> "ReprLabel":
        return ReprLabel(
            data["pair"], int(data["depth"]),
            ThomaMeasure.from_json(data["measure"]),
            YoungDistribution.from_json(data.get("lambda", [])),
            YoungDistribution.from_json(data["mu"])
            if "mu" in data else None)


def is_thoma_measure(mu: ThomaMeasure) -> tuple[bool, list[Fraction]]:
    bad = mu.integrality_violations()
    return (not bad, bad)


def classify(label: ReprLabel) -> tuple[bool, str | None]:
    """Admissibility verdict with the first violated condition.

    Order: measure integrality, parity at negative atoms (E/O only),
    support of the distributions, size-versus-depth, then the
    pair-specific row/column inequalities at each support point.
    Points at 0 are exempt from the inequalities.
    """
    mu = label.measure
    ok, bad = is_thoma_measure(mu)
    if not ok:
        return False, f"measure: nu non-integral at {bad}"

    if label.pair in ("E", "O"):
        odd = [x for x in mu.atoms if x < 0 and int(mu.nu(x)) % 2]
        if odd:
            return False, f"parity: nu odd at negative atoms {odd}"

    allowed = set(mu.atoms) | {Fraction(0)}
    stray = label.lam_dist.support - allowed
    if stray:
        return False, f"support: lambda at non-atoms {sorted(stray)}"
    if label.pair == "D":
        stray = label.mu_dist.support - allowed
        if stray:
            return False, f"support: second dist at non-atoms {sorted(stray)}"

    d = label.depth
    if label.pair == "D":
        if label.lam_dist.size != d or label.mu_dist.size != d:
            return False, (f"size: |lambda|={label.lam_dist.size}, "
                           f"|mu|={label.mu_dist.size}, depth={d}")
    elif label.pair == "E":
        if label.lam_dist.size != 2 * d:
            return False, (f"size: |lambda|={label.lam_dist.size} "
                           f"!= 2*depth={2 * d}")
    else:
        if label.lam_dist.size != 2 * d + 1:
            return False, (f"size: |lambda|={label.lam_dist.size} "
                           f"!= 2*depth+1={2 * d + 1}")

    points = set(label.lam_dist.support)
    if label.pair == "D":
        points |= label.mu_dist.support
    for x in sorted(points):
        if x == 0:
            continue
        nu = mu.nu(x)
        lam = label.lam_dist.shape_at(x)
        if label.pair == "D":
            m = label.mu_dist.shape_at(x)
            if x > 0:
                if lam.length + m.length > nu:
                    return False, (f"rows: l(lam)+l(mu) = "
                                   f"{lam.length + m.length} > nu({x})={nu}")
            else:
                if lam.part(1) + m.part(1) > nu:
                    return False, (f"columns: lam_1+mu_1 = "
                                   f"{lam.part(1) + m.part(1)} > nu({x})={nu}")
        else:
            if x > 0:
                conj = lam.conjugate()
                if conj.part(1) + conj.part(2) > nu:
                    return False, (f"columns: lam'_1+lam'_2 = "
                                   f"{conj.part(1) + conj.part(2)} "
                                   f"> nu({x})={nu}")
            else:
                if lam.part(1) > nu / 2:
                    return False, (f"rows: lam_1 = {lam.part(1)} "
                                   f"> nu({x})/2 = {nu / 2}")
    return True, None


def boundary_values(kind: str, x, nu, l1: int,
                    l2: int | None = None) -> Fraction:
    """Projection-norm closed forms at the admissibility boundary.

    altD:  x (nu - l1 - l2) / ((l1+1)(l2+1))       (row condition, pair D)
    symE:  2|x| (nu - 2 l1) / ((l1+1)(l1+2))       (row condition, pair E)
    Sign 0 means the configuration sits exactly on the boundary;
    negative means the corresponding label is rejected.
    """
    x, nu = Fraction(x), Fraction(nu)
    if x == 0:
        raise ValueError("x must be nonzero")
    if l1 < 0 or (l2 is not None and l2 < 0):
        raise ValueError("l's must be nonnegative")
    if kind == "altD":
        if l2 is None:
            raise ValueError("altD needs l1 and l2")
        return x * (nu - l1 - l2) / ((l1 + 1) * (l2 + 1))
    if kind == "symE":
        return 2 * abs(x) * (nu - 2 * l1) / ((l1 + 1) * (l1 + 2))
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# mixtures

class MixtureSpec:
    """Weighted components; weights are positive rationals summing to 1."""

    __slots__ = ("components",)

    def __init__(self, components):
        comps = []
        for label, p in components:
            p = Fraction(p)
            if p <= 0:
                raise ValueError(f"weights must be positive, got {p}")
            comps.append((label, p))
        if not comps:
            raise ValueError("at least one component required")
        total = sum(p for _, p in comps)
        if total != 1:
            raise ValueError(f"weights must sum to 1, got {total}")
        tags = {label.pair for label, _ in comps}
        if "D" in tags and tags != {"D"}:
            raise ValueError("pair D mixes only with pair D")
        object.__setattr__(self, "components", tuple(comps))

    def __setattr__(self, *a):
        raise AttributeError("MixtureSpec is immutable")

    def to_json(self) -> dict:
        from .rationals import format_rational
        return {"components": [
            {"label": label.to_json(), "weight": format_rational(p)}
            for label, p in self.components]}

    @staticmethod
    def from_json(data) -> "MixtureSpec":
        from .rationals import parse_rational
        return MixtureSpec([
            (ReprLabel.from_json(c["label"]), parse_rational(c["weight"]))
            for c in data["components"]])


def scale_measure(mu: ThomaMeasure, p) -> dict:
    """Atoms of the p-scaled copy: mass p*m at point p*x.  The ratio
    mass/|point| is unchanged, so integrality is preserved."""
    p = Fraction(p)
    return {p * x: p * m for x, m in mu.atoms.items()}


def mixture(spec: MixtureSpec) -> tuple[ReprLabel, bool]:
    """Superpose the p-scaled measures and distributions.

    The result is irreducible exactly when the scaled lambda-supports
    are pairwise disjoint.  Pair tags combine as E with E or O (and O
    with O gives E); D only with D.
    """
    atoms: dict[Fraction, Fraction] = {}
    zero_mass = Fraction(0)
    lam = YoungDistribution()
    mud = YoungDistribution()
    supports = []
    for label, p in spec.components:
        for x, m in scale_measure(label.measure, p).items():
            atoms[x] = atoms.get(x, Fraction(0)) + m
        zero_mass += p * label.measure.zero_mass
        scaled = label.lam_dist.scale(p)
        supports.append(scaled.support)
        lam = lam.union(scaled)
        if label.pair == "D":
            mud = mud.union(label.mu_dist.scale(p))
    measure = ThomaMeasure(atoms, zero_mass)

    tags = [label.pair for label, _ in spec.components]
    if tags[0] == "D":
        pair = "D"
        depth = lam.size
    else:
        pair = "O" if tags.count("O") % 2 else "E"
        depth = (lam.size - (1 if pair == "O" else 0)) // 2

    irreducible = True
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            if supports[i] & supports[j]:
                irreducible = False
    out = ReprLabel(pair, depth, measure, lam,
                    mud if pair == "D" else None)
    return out, irreducible


def mixture_moment_check(spec: MixtureSpec, order: int) -> bool:
    """Two exact identities of the mixture: moment superposition
    c_k = sum p_i^k c_k^(i), and the product rule for the coefficient
    series H(t) = prod H_i(p_i t), both through the given order."""
    mixed, _ = mixture(spec)
    c_mix = mixed.measure.moment_sequence(order)
    for k in range(1, order + 1):
        expect = sum((p ** k * label.measure.moment(k)
                      for label, p in spec.components), Fraction(0))
        if c_mix[k - 1] != expect:
            return False
    h_mix = h_from_moments(c_mix, order)
    prod = PowerSeries.one(order)
    for label, p in spec.components:
        h_i = h_from_moments(label.measure.moment_sequence(order), order)
        prod = prod * h_i.scale_argument(p)
    return h_mix == prod.truncate(order)


# ---------------------------------------------------------------------------
# dimensions

def dim_distribution(dist: YoungDistribution) -> int:
    """(|dist|! / prod |dist(x)|!) * prod dim_syt(dist(x))."""
    out = math.factorial(dist.size)
    for lam in dist.entries.values():
        out //= math.factorial(lam.size)
        out *= lam.dim_syt()
    return out


def dim_root(label: ReprLabel) -> int:
    """Dimension of the depth subspace determined by the label."""
    out = dim_distribution(label.lam_dist)
    if label.pair == "D":
        out *= dim_distribution(label.mu_dist)
    return out


def mixture_dim(d1: int, m1: int, d2: int, m2: int) -> int:
    """binom(2(d1+d2), 2 d1) * m1 * m2."""
    return math.comb(2 * (d1 + d2), 2 * d1) * m1 * m2


# ---------------------------------------------------------------------------
# ergodic harness

def ergodic_shape(p: ThomaParams, n: int) -> Partition:
    """A diagram of n boxes whose row fractions track alpha, column
    fractions track beta, and whose remainder sits in a near-square
    block so both its fractions vanish in the limit."""
    if n < len(p.alpha) + len(p.beta):
        raise ValueError(f"n={n} smaller than the number of parameters")
    rows = [int(a * n) for a in p.alpha]
    cols = [int(b * n) for b in p.beta]
    rows = [r for r in rows if r > 0]
    cols = [c for c in cols if c > 0]
    col_parts = Partition.from_unsorted(cols).conjugate().parts \
        if cols else ()
    used = sum(rows) + sum(cols)
    r = n - used
    if r < 0:
        raise AssertionError("floor assembly exceeded n")
    block = []
    if r > 0:
        s = math.isqrt(r)
        leftover = r - s * s
        block = [s] * s
        if leftover:
            if leftover <= s:
                block = [s + 1] * leftover + [s] * (s - leftover)
            else:
                block = block + [leftover]
    shape = Partition.from_unsorted(list(rows) + list(col_parts) + block)
    if shape.size != n:
        raise AssertionError(f"assembled {shape.size} boxes, wanted {n}")
    return shape


def ergodic_converge(p: ThomaParams, k: int, ns: list[int]):
    """Normalized character on a k-cycle along the diagram sequence,
    with exact deviations from the limiting moment."""
    target = p.cycle_value(k)
    out = []
    for n in ns:
        if n < k:
            raise ValueError(f"n={n} smaller than cycle length {k}")
        chi = normalized_cycle_char(ergodic_shape(p, n), k)
        out.append((n, chi, abs(chi - target)))
    return out


# ---------------------------------------------------------------------------
# positive-definiteness spot check (floating-point diagnostic)

def gram_psd_check(values: list[list[Fraction]],
                   tol: float = 1e-9) -> bool:
    """Is the symmetric matrix positive semidefinite, within a relative
    tolerance?  Pivot test on the float image; the one floating-point
    surface of this module."""
    n = len(values)
    a = [[float(values[i][j]) for j in range(n)] for i in range(n)]
    norm = max((abs(x) for row in a for x in row), default=0.0)
    eps = tol * max(norm, 1.0)
    for k in range(n):
        if a[k][k] < -eps:
            return False
        if a[k][k] <= eps:
            # a PSD matrix with a null pivot has a null row
            if any(abs(a[k][j]) > eps for j in range(k, n)):
                return False
            continue
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True
