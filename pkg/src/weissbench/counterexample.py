"""Endpoint witness for weak-type admissibility.

Builds the explicit diagonal system whose observed orbit decays like
t^(-1/2) up to a slowly varying logarithmic factor: the basis coefficients
xi_n come from oscillatory fractional-power integrals, the orbit is bounded
below on dyadic-4 intervals, its weak-L2 norm stabilizes while every
stronger Lorentz norm diverges logarithmically, and the basis is Hilbertian
but not Besselian. Everything reduces to the quadrature and semigroup
primitives; random draws use a documented 64-bit linear generator.
"""
import math
from typing import NamedTuple

import numpy as np

from .errors import BoundViolated, DomainError
from .lorentz import StepFunction, lorentz_norm
from .quadrature import (DEFAULT_SPEC, GAUSS_ORDER, gamma_function,
                         powcos_quadrature, singular_oscillatory_detail,
                         singular_oscillatory_integral)
from .semigroup import (CoefficientVector, DiagonalSystem, orbit_callable,
                        orbit_observation)
from ._kernels import powcos_panels

__all__ = [
    "CounterexampleParams",
    "BasisIndexMap",
    "xi_coefficient",
    "XiTable",
    "xi_asymptotic",
    "xi_period_decomposition",
    "envelope",
    "envelope_norm_q",
    "state_norm",
    "WitnessSystem",
    "witness_system",
    "divergence_profile",
    "LowerBoundReport",
    "orbit_lower_bound_check",
    "gram_entry",
    "GramCache",
    "bessel_failure_witness",
    "hilbertian_constant_estimate",
]


class CounterexampleParams:
    """Exponents of the witness, all derived from the Lorentz index q."""

    __slots__ = ("q", "q_conj", "beta", "gamma")

    def __init__(self, q):
        q = float(q)
        if not (2.0 < q < math.inf):
            raise DomainError(f"q must lie in (2, inf), got {q}")
        self.q = q
        self.q_conj = q / (q - 1.0)
        self.beta = 1.0 / (2.0 * self.q_conj)
        self.gamma = 1.0 - 2.0 * self.beta

    def __repr__(self):
        return (f"CounterexampleParams(q={self.q!r}, beta={self.beta!r}, "
                f"gamma={self.gamma!r})")


class BasisIndexMap:
    """Enumeration of integer frequencies: 0, -1, +1, -2, +2, ...

    Collapsing the two length-biased copies of the zero frequency into a
    single index keeps the family a genuine basis; coefficient, eigenvalue,
    and observation laws stay functions of the plain index k.
    """

    @staticmethod
    def frequency(k):
        if k != int(k) or k < 0:
            raise DomainError(f"index must be a nonnegative integer, got {k}")
        k = int(k)
        m = (k + 1) // 2
        return -m if k % 2 == 1 else m

    @staticmethod
    def index(nu):
        if nu != int(nu):
            raise DomainError(f"frequency must be an integer, got {nu}")
        nu = int(nu)
        return -2 * nu - 1 if nu < 0 else (2 * nu if nu > 0 else 0)

    @staticmethod
    def frequencies(n):
        """First n frequencies as an int array."""
        k = np.arange(n)
        m = (k + 1) // 2
        return np.where(k % 2 == 1, -m, m)


def xi_coefficient(n, params, spec=DEFAULT_SPEC):
    """(1/pi) * integral of s^(gamma-1) cos(n s) over (0, pi).

    Even and odd basis indices share the value at |frequency|; the symmetric
    half-line form absorbs both sine and cosine pairings.
    """
    return singular_oscillatory_integral(params.gamma, n, spec) / math.pi


def xi_asymptotic(n, params):
    """Leading term (1/pi) n^(-gamma) cos(gamma pi/2) Gamma(gamma)."""
    if n != int(n) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    g = params.gamma
    return n ** (-g) * math.cos(0.5 * math.pi * g) * gamma_function(g) / math.pi


class XiTable:
    """Coefficients xi(0..n_max) via one cumulative substitution sweep.

    With u = n s the coefficient becomes (1/pi) n^(-gamma) F(n pi) where
    F(X) integrates u^(gamma-1) cos u from 0; F advances by one smooth
    half-period panel pair per n, so the whole table costs O(n_max) panel
    evaluations instead of O(n_max) full graded meshes. cross_check compares
    selected entries against the direct one-integral route.
    """

    __slots__ = ("params", "values", "estimate")

    def __init__(self, params, n_max, spec=DEFAULT_SPEC):
        if n_max != int(n_max) or n_max < 1:
            raise DomainError(f"n_max must be a positive integer, got {n_max}")
        n_max = int(n_max)
        g = params.gamma
        a = g - 1.0
        nodes = tuple(np.ascontiguousarray(a) for a in
                      np.polynomial.legendre.leggauss(GAUSS_ORDER))
        head, head_est = singular_oscillatory_detail(g, 1, spec)
        increments = np.empty(n_max)
        increments[0] = head
        est = head_est
        eps = float(np.finfo(float).eps)
        for n in range(2, n_max + 1):
            lo = (n - 1) * math.pi
            edges = np.array([lo, lo + 0.5 * math.pi, lo + math.pi])
            coarse, _ = powcos_panels(a, 0.0, 1.0, edges, *nodes)
            fine_edges = np.array([lo, lo + 0.25 * math.pi, lo + 0.5 * math.pi,
                                   lo + 0.75 * math.pi, lo + math.pi])
            fine, abssum = powcos_panels(a, 0.0, 1.0, fine_edges, *nodes)
            increments[n - 1] = fine
            est += abs(fine - coarse) + 64.0 * eps * abssum
        partial = np.cumsum(increments)
        n = np.arange(1, n_max + 1, dtype=float)
        values = np.empty(n_max + 1)
        values[0] = math.pi ** (g - 1.0) / g
        values[1:] = n ** (-g) * partial / math.pi
        self.params = params
        self.values = values
        self.estimate = est / math.pi

    def __len__(self):
        return self.values.size

    def __getitem__(self, n):
        return float(self.values[n])

    def cross_check(self, indices, spec=DEFAULT_SPEC):
        """Worst relative gap against the direct quadrature route."""
        worst = 0.0
        for n in indices:
            direct = xi_coefficient(n, self.params, spec)
            worst = max(worst, abs(direct - self.values[n]) / abs(direct))
        return worst


def xi_period_decomposition(n, params, spec=DEFAULT_SPEC):
    """Per-period integrals I_l of (2 pi l + x)^(gamma-1) cos x, l < n.

    Each I_l is nonnegative and the sequence decreases: the even-index
    reconciliation xi(2m) = (2m)^(-gamma)/pi * sum_{l<m} I_l ties the
    decomposition back to xi_coefficient exactly (substitute u = 2m s and
    split (0, 2 pi m) into whole periods).
    """
    if n != int(n) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    a = params.gamma - 1.0
    out = np.empty(int(n))
    for l in range(int(n)):
        value, _ = powcos_quadrature(a, 2.0 * math.pi * l, 1.0,
                                     2.0 * math.pi, spec)
        out[l] = value
    return out


def envelope(t, params):
    """(1 + |log t|)^(-1/q) t^(-1/2), the orbit's decay envelope."""
    t = np.asarray(t, dtype=float)
    if not np.all(t > 0.0):
        raise DomainError("envelope needs t > 0")
    value = (1.0 + np.abs(np.log(t))) ** (-1.0 / params.q) / np.sqrt(t)
    return float(value) if value.ndim == 0 else value


def envelope_norm_q(eps, tau, params):
    """Closed-form Lorentz (2, q) norm of the envelope over (eps, tau).

    The q-th power telescopes to log((1+log(1/eps))/(1+log(1/tau))): the
    integrand (t^(1/2) f(t))^q dt/t is exactly d log(1+log(1/t)). Divergence
    as eps shrinks is this expression's affine growth in log(1+log(1/eps)).
    """
    if not 0.0 < eps < tau <= 1.0:
        raise DomainError("need 0 < eps < tau <= 1")
    ratio = (1.0 + math.log(1.0 / eps)) / (1.0 + math.log(1.0 / tau))
    return math.log(ratio) ** (1.0 / params.q)


def state_norm(params):
    """Closed-form state norm (2 pi^gamma / gamma)^(1/2)."""
    g = params.gamma
    return math.sqrt(2.0 * math.pi**g / g)


class WitnessSystem(NamedTuple):
    system: DiagonalSystem
    xi: CoefficientVector
    x_norm: float
    table: XiTable


def witness_system(params, n_modes=60, spec=DEFAULT_SPEC):
    """Default diagonal system carrying the witness coefficients.

    xi_k is the coefficient at |frequency(k)|; every value is nonnegative
    and bounded by the n = 0 coefficient (the integrand loses its
    oscillation), which certifies the tail for truncation bounds.
    """
    if n_modes < 2:
        raise DomainError("n_modes must be at least 2")
    table = XiTable(params, (n_modes + 1) // 2 + 1, spec)
    nu = np.abs(BasisIndexMap.frequencies(n_modes))
    xi = CoefficientVector(table.values[nu], tail_sup=table.values[0])
    system = DiagonalSystem.default(n_active=n_modes)
    return WitnessSystem(system, xi, state_norm(params), table)


def _orbit_steps(orbit, eps, tau, per_decade):
    """Left-sampled step approximation of the orbit on a log grid."""
    count = int(math.ceil(math.log10(tau / eps) * per_decade)) + 1
    grid = np.logspace(math.log10(eps), math.log10(tau), count)
    values = orbit(grid[:-1])
    return StepFunction(grid, values)


def divergence_profile(params, eps_list, tau=1.0, witness=None,
                       per_decade=64, spec=DEFAULT_SPEC):
    """Norm growth table over shrinking left endpoints.

    Columns: eps, closed-form envelope Lorentz (2,q) norm, sampled-orbit
    Lorentz (2,q) norm, sampled-orbit weak-L2 norm, all over (eps, tau).
    The weak column stabilizes while both (2,q) columns diverge like
    log(1+log(1/eps))^(1/q): the quantitative endpoint separation.
    """
    eps_arr = np.asarray(eps_list, dtype=float)
    if eps_arr.size == 0 or not np.all(np.diff(eps_arr) < 0.0):
        raise DomainError("eps_list must be strictly decreasing")
    if not (np.all(eps_arr > 0.0) and np.all(eps_arr < tau) and tau <= 1.0):
        raise DomainError("need 0 < eps < tau <= 1 for every eps")
    if per_decade < 64:
        raise DomainError("per_decade must be at least 64")
    if witness is None:
        witness = witness_system(params, spec=spec)
    orbit = orbit_callable(witness.system, witness.xi)
    out = np.empty((eps_arr.size, 4))
    for i, eps in enumerate(eps_arr):
        steps = _orbit_steps(orbit, float(eps), tau, per_decade)
        out[i] = (eps,
                  envelope_norm_q(float(eps), tau, params),
                  lorentz_norm(steps, (2.0, params.q)),
                  lorentz_norm(steps, (2.0, math.inf)))
    return out


class LowerBoundReport(NamedTuple):
    worst_slack: float
    worst_n: int
    worst_t: float
    samples: int


def orbit_lower_bound_check(params, n_range, samples_per_interval,
                            tail_tolerance=1e-9, witness=None,
                            spec=DEFAULT_SPEC):
    """Certify orbit(t) >= xi_n 2^n e^{-1} on each interval [4^{-n-1}, 4^{-n}).

    The bound keeps only the k = n mode, whose exponent stays above e^{-1}
    there; nonnegativity of every other term makes it a lower bound. Slack
    below -tail_tolerance raises BoundViolated naming the offending (n, t).
    """
    n_lo, n_hi = (int(n_range[0]), int(n_range[1]))
    if not (0 <= n_lo <= n_hi):
        raise DomainError("n_range must be 0 <= lo <= hi")
    if samples_per_interval < 1:
        raise DomainError("samples_per_interval must be positive")
    if witness is None:
        witness = witness_system(params, n_modes=max(2 * (n_hi + 1), 60),
                                 spec=spec)
    if np.any(witness.xi.values < 0.0):
        raise DomainError("lower bound needs nonnegative coefficients")
    worst = (math.inf, -1, math.nan)
    count = 0
    for n in range(n_lo, n_hi + 1):
        offsets = np.arange(samples_per_interval) / samples_per_interval
        ts = 4.0 ** (-n - 1) * (1.0 + 3.0 * offsets)
        bound = witness.xi.values[n] * 2.0**n / math.e
        for t in ts:
            obs = orbit_observation(witness.system, witness.xi, float(t),
                                    tail_tolerance)
            slack = float(obs.value) - bound
            count += 1
            if slack < worst[0]:
                worst = (slack, n, float(t))
            if slack < -tail_tolerance:
                raise BoundViolated(
                    f"orbit fell below its certified bound at n={n}, "
                    f"t={t:.6e} (slack {slack:.3e})", n=n, t=float(t))
    return LowerBoundReport(worst[0], worst[1], worst[2], count)


def gram_entry(j, k, params, spec=DEFAULT_SPEC):
    """Inner product of basis elements j and k.

    Equals 2 * integral of s^(2 beta) cos((nu_j - nu_k) s) over (0, pi):
    real by the symmetric domain, so the complex return carries zero
    imaginary part; the exponent 2 beta + 1 lies in (3/2, 2).
    """
    delta = abs(BasisIndexMap.frequency(j) - BasisIndexMap.frequency(k))
    value = 2.0 * singular_oscillatory_integral(2.0 * params.beta + 1.0,
                                                delta, spec)
    return complex(value)


class GramCache:
    """Dense Gram blocks from O(N) distinct integrals.

    Entries depend only on the frequency difference, so one table of
    integrals indexed by |nu_j - nu_k| serves every block up to n_basis.
    """

    __slots__ = ("params", "n_basis", "_nu", "_by_delta")

    def __init__(self, params, n_basis, spec=DEFAULT_SPEC):
        if not 1 <= n_basis <= 2048:
            raise DomainError("n_basis must lie in [1, 2048] "
                              "(dense evaluation budget)")
        nu = BasisIndexMap.frequencies(n_basis)
        dmax = int(np.max(nu) - np.min(nu))
        g = 2.0 * params.beta + 1.0
        by_delta = np.empty(dmax + 1)
        for d in range(dmax + 1):
            by_delta[d] = 2.0 * singular_oscillatory_integral(g, d, spec)
        self.params = params
        self.n_basis = int(n_basis)
        self._nu = nu
        self._by_delta = by_delta

    @property
    def diagonal(self):
        return float(self._by_delta[0])

    def matrix(self, n=None):
        """Leading n x n Gram block as a real symmetric array."""
        n = self.n_basis if n is None else int(n)
        if not 1 <= n <= self.n_basis:
            raise DomainError(f"block size must lie in [1, {self.n_basis}]")
        nu = self._nu[:n]
        return self._by_delta[np.abs(nu[:, None] - nu[None, :])]


def bessel_failure_witness(params, N_list, spec=DEFAULT_SPEC, gram=None,
                           table=None):
    """Table (N, sum of xi_k^2, quadratic form xi* G xi) over k < N.

    The coefficient column grows like N^(1 - 2/q) while the quadratic form
    converges to the squared state norm: their ratio diverges, refuting any
    lower frame constant.
    """
    sizes = [int(N) for N in N_list]
    if not sizes or any(b <= a for a, b in zip(sizes, sizes[1:])) \
            or sizes[0] < 1:
        raise DomainError("N_list must be strictly increasing positive ints")
    n_max = sizes[-1]
    if gram is None:
        gram = GramCache(params, n_max, spec)
    if table is None:
        table = XiTable(params, (n_max + 1) // 2 + 1, spec)
    nu = np.abs(BasisIndexMap.frequencies(n_max))
    xi = table.values[nu]
    full = gram.matrix(n_max)
    out = np.empty((len(sizes), 3))
    for i, n in enumerate(sizes):
        head = xi[:n]
        out[i] = (n, math.fsum(head**2),
                  float(head @ full[:n, :n] @ head))
    return out


def _lcg_uniform(seed, count):
    """Deterministic uniforms on [0, 1): 64-bit LCG, multiplier
    6364136223846793005, increment 1442695040888963407, top 53 bits."""
    mask = (1 << 64) - 1
    state = seed & mask
    out = np.empty(count)
    for i in range(count):
        state = (6364136223846793005 * state + 1442695040888963407) & mask
        out[i] = (state >> 11) / float(1 << 53)
    return out


def hilbertian_constant_estimate(params, trials, N, seed=20259,
                                 spec=DEFAULT_SPEC, gram=None):
    """Max over random draws of (a* G a)^(1/2) / (sum a_k^2)^(1/2).

    Coefficients are uniform on [-1, 1] from the documented linear
    generator; the statistic lower-bounds the upper frame constant and
    stays bounded as N grows because the basis is Hilbertian.
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    if N < 1:
        raise DomainError("N must be at least 1")
    if gram is None:
        gram = GramCache(params, N, spec)
    G = gram.matrix(N)
    draws = _lcg_uniform(seed, trials * N).reshape(trials, N)
    best = 0.0
    for row in draws:
        a = 2.0 * row - 1.0
        best = max(best, math.sqrt((a @ G @ a) / (a @ a)))
    return best
