"""Thoma parameters and measures, moment sequences, generalized moments,
the H-series algebra, Fourier coefficients via the Jacobi-Trudi style
determinant, total positivity testing, coherence and multiplicativity
checks, the geometric peel-off of an H-series, and the integrality
falsifier.

All arithmetic is exact rational; the only approximate output in this
module is the limit estimate produced by the peel-off on non-rationally
structured input.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import eta_character
from .partitions import Partition, Permutation, partitions_of
from .series import PowerSeries


class ThomaParams:
    """Two weakly decreasing lists of positive rationals and the deficit
    gamma, normalized so that sum(alpha) + sum(beta) + gamma = 1."""

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha=(), beta=(), gamma=None):
        alpha = tuple(sorted((Fraction(a) for a in alpha), reverse=True))
        beta = tuple(sorted((Fraction(b) for b in beta), reverse=True))
        if any(a <= 0 for a in alpha) or any(b <= 0 for b in beta):
            raise ValueError("alpha and beta entries must be positive")
        s = sum(alpha) + sum(beta)
        if gamma is None:
            gamma = 1 - s
        gamma = Fraction(gamma)
        if gamma < 0 or s + gamma != 1:
            raise ValueError(
                f"sum(alpha)+sum(beta)+gamma must equal 1, got {s + gamma}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)

    def __setattr__(self, *a):
        raise AttributeError("ThomaParams is immutable")

    def __eq__(self, other):
        return (isinstance(other, ThomaParams)
                and (self.alpha, self.beta, self.gamma)
                == (other.alpha, other.beta, other.gamma))

    def __repr__(self):
        return (f"ThomaParams(alpha={self.alpha}, beta={self.beta}, "
                f"gamma={self.gamma})")

    def cycle_value(self, k: int) -> Fraction:
        """Character value on a single k-cycle."""
        if k < 2:
            raise ValueError("cycle length must be >= 2")
        return (sum((a**k for a in self.alpha), Fraction(0))
                + (-1) ** (k - 1)
                * sum((b**k for b in self.beta), Fraction(0)))

    def to_measure(self) -> "ThomaMeasure":
        atoms: dict[Fraction, Fraction] = {}
        for a in self.alpha:
            atoms[a] = atoms.get(a, Fraction(0)) + a
        for b in self.beta:
            atoms[-b] = atoms.get(-b, Fraction(0)) + b
        return ThomaMeasure(atoms, self.gamma)


class ThomaMeasure:
    """A discrete probability measure on [-1,1]: finitely many atoms at
    nonzero rational points plus a mass at zero.

    Validity in the sense of the integrality condition (mass(x)/|x| a
    positive integer) is a predicate, not a construction constraint.
    """

    __slots__ = ("atoms", "zero_mass")

    def __init__(self, atoms: dict, zero_mass=0):
        clean: dict[Fraction, Fraction] = {}
        for x, m in atoms.items():
            x, m = Fraction(x), Fraction(m)
            if x == 0:
                raise ValueError("use zero_mass for the atom at 0")
            if not -1 <= x <= 1:
                raise ValueError(f"atom {x} outside [-1,1]")
            if m <= 0:
                raise ValueError(f"atom masses must be positive, got {m}")
            clean[x] = m
        zero_mass = Fraction(zero_mass)
        if zero_mass < 0:
            raise ValueError("zero_mass must be nonnegative")
        total = sum(clean.values()) + zero_mass
        if total != 1:
            raise ValueError(f"total mass must be 1, got {total}")
        object.__setattr__(self, "atoms", clean)
        object.__setattr__(self, "zero_mass", zero_mass)

    def __setattr__(self, *a):
        raise AttributeError("ThomaMeasure is immutable")

    def __eq__(self, other):
        return (isinstance(other, ThomaMeasure)
                and self.atoms == other.atoms
                and self.zero_mass == other.zero_mass)

    def __repr__(self):
        return f"ThomaMeasure({self.atoms}, zero_mass={self.zero_mass})"

    def nu(self, x) -> Fraction:
        """mass(x)/|x| for a nonzero point (0 for non-atoms)."""
        x = Fraction(x)
        if x == 0:
            raise ValueError("nu is defined at nonzero points only")
        return self.atoms.get(x, Fraction(0)) / abs(x)

    def integrality_violations(self) -> list[Fraction]:
        """Atoms where mass(x)/|x| is not a positive integer."""
        return [x for x in self.atoms if self.nu(x).denominator != 1]

    def is_thoma(self) -> bool:
        return not self.integrality_violations()

    def moment(self, k: int) -> Fraction:
        """c_k = integral of t^(k-1); c_1 is the total mass 1."""
        if k < 1:
            raise ValueError("moments are indexed from 1")
        total = sum((x ** (k - 1) * m for x, m in self.atoms.items()),
                    Fraction(0))
        if k == 1:
            total += self.zero_mass
        return total

    def moment_sequence(self, kmax: int) -> list[Fraction]:
        return [self.moment(k) for k in range(1, kmax + 1)]

    def to_params(self) -> ThomaParams:
        """Multiset expansion; requires integral nu at every atom."""
        bad = self.integrality_violations()
        if bad:
            raise ValueError(
                f"not a Thoma measure, nu is non-integral at {bad}")
        alpha, beta = [], []
        for x, m in self.atoms.items():
            reps = int(self.nu(x))
            if x > 0:
                alpha.extend([x] * reps)
            else:
                beta.extend([-x] * reps)
        return ThomaParams(alpha, beta, self.zero_mass)

    def to_json(self) -> dict:
        from .rationals import format_rational
        return {
            "atoms": [
                {"x": format_rational(x), "mass": format_rational(m)}
                for x, m in sorted(self.atoms.items())
            ],
            "zero_mass": format_rational(self.zero_mass),
        }

    @staticmethod
    def from_json(data) -> "ThomaMeasure":
        from .rationals import parse_rational
        atoms = {
            parse_rational(a["x"]): parse_rational(a["mass"])
            for a in data.get("atoms", [])
        }
        return ThomaMeasure(atoms, parse_rational(data.get("zero_mass", 0)))


def thoma_char_value(p: ThomaParams, cycles: Partition) -> Fraction:
    """Character value on a permutation with the given non-trivial cycle
    lengths; the empty product is 1."""
    if any(k < 2 for k in cycles):
        raise ValueError("all cycle lengths must be >= 2")
    out = Fraction(1)
    for k in cycles:
        out *= p.cycle_value(k)
    return out


# ---------------------------------------------------------------------------
# generalized moments

class Poly:
    """A polynomial test function on [-1,1]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out


class AtomIndicator:
    """The function equal to 1 at a single point and 0 elsewhere,
    represented by an explicit value table on the atom set."""

    __slots__ = ("point",)

    def __init__(self, point):
        object.__setattr__(self, "point", Fraction(point))

    def __setattr__(self, *a):
        raise AttributeError("AtomIndicator is immutable")

    def eval(self, x) -> Fraction:
        return Fraction(1) if Fraction(x) == self.point else Fraction(0)


ONE = Poly([1])


def generalized_moment(mu: ThomaMeasure, sigma: Permutation,
                       funcs: dict[int, object] | None = None) -> Fraction:
    """Product over the orbits of sigma on the positive integers of the
    integrals  t^(|p|-1) * prod_{j in p} f_j(t)  against mu.

    funcs maps positions to test functions (Poly or AtomIndicator);
    unlisted positions carry the constant function 1.
    """
    funcs = dict(funcs or {})
    pts = {i for i in sigma.support if i > 0} | set(funcs)
    if any(i <= 0 for i in funcs):
        raise ValueError("test functions live on positive positions")
    orbits = []
    seen = set()
    for start in sorted(pts):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        j = sigma(start)
        while j != start:
            orbit.append(j)
            seen.add(j)
            j = sigma(j)
        orbits.append(orbit)
    out = Fraction(1)
    for orbit in orbits:
        fs = [funcs.get(j, ONE) for j in orbit]
        val = Fraction(0)
        for x, m in mu.atoms.items():
            term = x ** (len(orbit) - 1) * m
            for f in fs:
                term *= f.eval(x)
            val += term
        if len(orbit) == 1 and mu.zero_mass:
            term = mu.zero_mass
            for f in fs:
                term *= f.eval(0)
            val += term
        out *= val
    return out


# ---------------------------------------------------------------------------
# H-series

def h_from_params(p: ThomaParams, order: int) -> PowerSeries:
    """H(t) = exp(gamma t) * prod (1 + beta_i t)/(1 - alpha_i t)."""
    h = PowerSeries.exp_linear(p.gamma, order)
    for a in p.alpha:
        h = h * PowerSeries.geometric(a, order)
    for b in p.beta:
        h = h * PowerSeries.linear(b, order)
    return h


def h_from_moments(c: list[Fraction], order: int) -> PowerSeries:
    """H(t) = exp(sum c_i t^i / i) via the Newton recurrence
    k*m(k) = sum_{j=1}^{k} c_j m(k-j)."""
    if len(c) < order:
        raise ValueError(f"need {order} moments, got {len(c)}")
    m = [Fraction(1)]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += Fraction(c[j - 1]) * m[k - j]
        m.append(acc / k)
    return PowerSeries(m)


def c_from_h(h: PowerSeries) -> list[Fraction]:
    """Moment sequence from a series with H(0)=1: the coefficients of
    H'(t)/H(t), shifted so that c_1 is the constant term."""
    if h[0] != 1:
        raise ValueError("series must have constant term 1")
    ratio = h.derivative() / h.truncate(h.order - 1)
    return list(ratio.coeffs)


def sign_transform(h: PowerSeries) -> PowerSeries:
    """H(-t)^{-1}: the H-series of the sign-twisted character."""
    if h[0] == 0:
        raise ValueError("series must have nonzero constant term")
    return h.scale_argument(-1).reciprocal()


# ---------------------------------------------------------------------------
# determinants and Fourier coefficients

def det_fraction(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] * inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def m_lambda(mseq: list[Fraction], lam: Partition) -> Fraction:
    """The determinant det[m(lambda_i - i + j)] with m(k)=0 for k<0.

    mseq[k] is m(k); it must reach index lambda_1 + l(lambda) - 1.
    """
    ell = lam.length
    if ell == 0:
        return Fraction(1)
    need = lam.parts[0] + ell - 1
    if len(mseq) <= need:
        raise ValueError(f"moment list too short: need index {need}")

    def m(k):
        return Fraction(mseq[k]) if k >= 0 else Fraction(0)

    matrix = [[m(lam.parts[i] - (i + 1) + (j + 1)) for j in range(ell)]
              for i in range(ell)]
    return det_fraction(matrix)


def coherence_check(mseq: list[Fraction], nmax: int) -> bool:
    """Verify m(lambda) = sum over one-box extensions of m(Lambda) for
    every partition of every n < nmax."""
    if len(mseq) < 2 or Fraction(mseq[0]) != 1 or Fraction(mseq[1]) != 1:
        raise ValueError("need m(0) = m(1) = 1")
    for n in range(nmax):
        for lam in partitions_of(n):
            lhs = m_lambda(mseq, lam)
            rhs = sum((m_lambda(mseq, big) for big in lam.covers_up()),
                      Fraction(0))
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# total positivity

@dataclass(frozen=True)
class TPWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction


def is_totally_positive(a: list[Fraction], window: int,
                        max_order: int) -> tuple[bool, TPWitness | None]:
    """Test the minors of the Toeplitz matrix [a_{j-i}] restricted to
    indices < window, up to the given minor order.

    Returns (True, None) or (False, witness of the first negative minor
    found, searching small orders first).
    """
    a = [Fraction(x) for x in a]
    if not a or a[0] <= 0:
        raise ValueError("a_0 must be positive")

    def entry(i, j):
        k = j - i
        return a[k] if 0 <= k < len(a) else Fraction(0)

    idx = range(window)
    for order in range(1, max_order + 1):
        for rows in itertools.combinations(idx, order):
            for cols in itertools.combinations(idx, order):
                minor = det_fraction(
                    [[entry(i, j) for j in cols] for i in rows])
                if minor < 0:
                    return False, TPWitness(rows, cols, minor)
    return True, None


# ---------------------------------------------------------------------------
# multiplicativity (cycle factorization) check

def restriction_from_params(p: ThomaParams, n: int):
    """Values of the character's restriction to S(n), by class."""
    return {rho: thoma_char_value(
        p, Partition(tuple(k for k in rho.parts if k > 1)))
        for rho in partitions_of(n)}


def _eta_pairing(phi_values: dict[Partition, Fraction],
                 mu: Partition) -> Fraction:
    """<phi|_{S(n)}, eta^mu> as a sum over classes weighted by 1/z."""
    total = Fraction(0)
    for rho, val in phi_values.items():
        total += val * eta_character(mu, rho) / rho.z()
    return total


def multiplicativity_check(phi, n1: int, n2: int) -> bool:
    """Check the product rule for the pairing with the eta basis:
    <phi, eta^{mu union nu}> = <phi, eta^mu><phi, eta^nu>.

    phi is either ThomaParams or a callable Partition(class) -> value
    defined on every class of S(m) for m <= n1+n2.
    """
    if isinstance(phi, ThomaParams):
        params = phi

        def phi_fn(rho: Partition) -> Fraction:
            return thoma_char_value(
                params, Partition(tuple(k for k in rho.parts if k > 1)))
    else:
        phi_fn = phi

    def values(n):
        return {rho: Fraction(phi_fn(rho)) for rho in partitions_of(n)}

    v1, v2, v12 = values(n1), values(n2), values(n1 + n2)
    for mu in partitions_of(n1):
        for nu in partitions_of(n2):
            lhs = _eta_pairing(v12, mu.union(nu))
            rhs = _eta_pairing(v1, mu) * _eta_pairing(v2, nu)
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# geometric peel-off

@dataclass(frozen=True)
class PeelResult:
    alpha: Fraction | float
    exact: bool
    converged: bool
    peeled: list[Fraction] | None
    residual: list[Fraction] | None


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _fit_recurrence(m: list[Fraction], order: int) -> Fraction | None:
    """If the tail of m satisfies an exact constant-coefficient linear
    recurrence of the given order, return the largest rational root of
    its characteristic polynomial (None otherwise)."""
    n = len(m)
    if n < 2 * order + 3:
        return None
    # solve for the coefficients from the last `order` equations
    rows = [[m[k - j] for j in range(1, order + 1)] for k in
            range(n - order, n)]
    rhs = [m[k] for k in range(n - order, n)]
    coeffs = _solve_linear(rows, rhs)
    if coeffs is None:
        return None
    # verify on a longer tail
    for k in range(max(order, n - 2 * order - 2), n):
        if m[k] != sum(coeffs[j - 1] * m[k - j]
                       for j in range(1, order + 1)):
            return None
    if order == 1:
        return coeffs[0]
    if order == 2:
        c1, c2 = coeffs
        disc = _rational_sqrt(c1 * c1 + 4 * c2)
        if disc is None:
            return None
        return max((c1 + disc) / 2, (c1 - disc) / 2)
    return None


def _solve_linear(rows, rhs) -> list[Fraction] | None:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b)]
           for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def edrei_peel(mseq: list[Fraction], n_terms: int,
               tol: Fraction = Fraction(1, 10**9)) -> PeelResult:
    """Estimate the dominant geometric factor of an H-series from its
    coefficients and peel it off.

    The ratio limit is recovered exactly when the tail satisfies a short
    rational recurrence (pure geometric or a sum of two geometrics);
    otherwise the last ratio is used, and convergence of the last three
    ratios within tol is required.
    """
    m = [Fraction(x) for x in mseq[:n_terms + 1]]
    if len(m) < 5:
        raise ValueError("need at least five coefficients")
    if any(x <= 0 for x in m):
        raise ValueError("coefficients must be positive up to the cutoff")

    alpha = None
    exact = False
    for order in (1, 2):
        root = _fit_recurrence(m, order)
        if root is not None:
            alpha, exact = root, True
            break

    ratios = [m[k] / m[k - 1] for k in range(1, len(m))]
    if alpha is None:
        r3 = ratios[-3:]
        if max(r3) - min(r3) <= tol:
            alpha, exact = ratios[-1], False
        else:
            return PeelResult(float(ratios[-1]), False, False, None, None)

    if alpha >= 1:
        if alpha > 1:
            raise ValueError(f"ratio estimate {alpha} exceeds 1")
        # pure geometric factor: H = 1/(1-t), nothing left to peel
        return PeelResult(Fraction(1), exact, True, None, None)

    peeled = [(1 - alpha) ** (-k) * (m[k] - alpha * m[k - 1])
              for k in range(1, len(m))]
    peeled = [Fraction(1)] + peeled
    order = len(m) - 1
    h = PowerSeries(m)
    h1 = PowerSeries.geometric(alpha, order)
    h_tilde = PowerSeries(peeled).scale_argument(1 - alpha)
    residual = (h - h1 * h_tilde).coeffs
    return PeelResult(alpha, exact, True, peeled, list(residual))


# ---------------------------------------------------------------------------
# integrality falsifier

def falling_product(nu: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for j in range(m):
        out *= (Fraction(nu) - j)
    return out


def alt_falsifier(x: Fraction, nu: Fraction,
                  m: int) -> tuple[Fraction, Fraction]:
    """Antisymmetrized single-atom moment, two ways.

    closed: x^m * nu(nu-1)...(nu-m+1) / m!.
    brute:  (1/m!) sum over S(m) of sgn(sigma) times the generalized
    moment with every test function the indicator of the atom at |x|,
    times sign(x)^m.  The sign factor converts the unsigned atom mass
    nu*|x| into the signed convention mass = nu*x that the closed form
    uses.  The two must coincide; a negative common value falsifies
    integrality of nu.
    """
    x, nu = Fraction(x), Fraction(nu)
    if x == 0:
        raise ValueError("x must be nonzero")
    if m > 9:
        raise ValueError("m is capped at 9 (enumerates S(m))")
    closed = x**m * falling_product(nu, m) / math.factorial(m)

    ax = abs(x)
    mass = nu * ax
    if not 0 < mass <= 1:
        raise ValueError(f"atom mass nu*|x| must lie in (0,1], got {mass}")
    mu = ThomaMeasure({ax: mass}, 1 - mass)
    funcs = {i: AtomIndicator(ax) for i in range(1, m + 1)}
    total = Fraction(0)
    for images in itertools.permutations(range(1, m + 1)):
        sigma = Permutation(dict(zip(range(1, m + 1), images)))
        total += sigma.sign() * generalized_moment(mu, sigma, funcs)
    sign = 1 if x > 0 or m % 2 == 0 else -1
    brute = sign * total / math.factorial(m)
    return closed, brute


def stirling_identity_brute(x: Fraction, m: int) -> tuple[Fraction, Fraction]:
    """Sum of x^{cycles(sigma)} over S(m) versus the rising factorial
    x(x+1)...(x+m-1), both computed independently."""
    x = Fraction(x)
    total = Fraction(0)
    for images in itertools.permutations(range(1, m + 1)):
        sigma = Permutation(dict(zip(range(1, m + 1), images)))
        total += x ** sigma.num_cycles_on(m)
    rising = Fraction(1)
    for j in range(m):
        rising *= (x + j)
    return total, rising
