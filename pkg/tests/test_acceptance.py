"""Acceptance gate: eight property-based criteria with closed-form anchors.

Each test opens a named criterion, computes every required quantity, records
exactly one PASS/FAIL line (printed in the terminal summary), and then
asserts. Tolerances and sample counts are the contract; runtime budgets are
asserted alongside the numerics.

Criterion 8 contains one clause that desk-scale computation cannot meet: the
truncated quadratic form converges to its closed-form limit from above at
rate ~N^(-1/4), so reaching the demanded 5% band needs millions of basis
elements, far beyond the dense-Gram budget. The clause is asserted literally
and is expected to fail; the measured convergence trend (decreasing toward
the limit, every attainable sub-check green) is asserted first so the
failure isolates exactly that clause.
"""
import math
import time

import numpy as np

from weissbench import (CounterexampleParams, DiagonalSystem, GramCache,
                        StepFunction, XiTable, bessel_failure_witness,
                        decreasing_rearrangement, distribution_function,
                        divergence_profile, hilbertian_constant_estimate,
                        lorentz_norm, orbit_lower_bound_check, sample_steps,
                        state_norm, witness_system)
from weissbench.counterexample import xi_period_decomposition
from weissbench.quadrature import laplace_quadrature
from weissbench.semigroup import (CoefficientVector, decay_norm_orthonormal,
                                  lambda_grid, orbit_callable,
                                  resolvent_observation,
                                  weiss_norm_orthonormal)


def random_step(rng, max_segments, tie_grid=None):
    n = int(rng.integers(1, max_segments))
    start = float(rng.uniform(0.0, 1.0))
    bps = np.concatenate(([start],
                          start + np.cumsum(rng.uniform(0.05, 1.0, n))))
    if tie_grid is not None:
        vals = rng.choice(tie_grid, size=n)
        if not np.any(vals > 0.0):
            vals[0] = tie_grid[-1]
    else:
        vals = rng.uniform(0.0, 4.0, n)
    return StepFunction(bps, vals)


def test_criterion_1_lorentz_closed_forms(criterion):
    start = time.monotonic()
    with criterion("criterion-1-lorentz-closed-forms") as rec:
        worst_exp = 0.0
        for a in (0.5, 1.0, 2.0, 10.0):
            edges = np.logspace(-12.0, math.log10(40.0 / a), 1_000_001)
            steps = sample_steps(lambda t: np.exp(-a * t), edges)
            got = lorentz_norm(steps, (2.0, 1.0))
            closed = math.sqrt(math.pi / a)
            worst_exp = max(worst_exp, abs(got - closed) / closed)

        worst_ind = 0.0
        for p, q, length in ((2.5, 1.5, 0.7), (2.0, 1.0, 1.0),
                             (3.0, 4.0, 2.25)):
            got = lorentz_norm(StepFunction([0.0, length], [1.0]), (p, q))
            want = (p / q) ** (1.0 / q) * length ** (1.0 / p)
            worst_ind = max(worst_ind, abs(got - want) / want)

        rng = np.random.default_rng(77)
        worst_pp = 0.0
        for _ in range(200):
            f = random_step(rng, 40)
            p = float(rng.uniform(1.1, 6.0))
            direct = math.fsum(f.values**p * f.lengths) ** (1.0 / p)
            if direct > 0.0:
                got = lorentz_norm(f, (p, p))
                worst_pp = max(worst_pp, abs(got - direct) / direct)

        elapsed = time.monotonic() - start
        ok = worst_exp <= 1e-5 and worst_ind <= 1e-12 and worst_pp <= 1e-12 \
            and elapsed < 30.0
        rec(ok, f"exp gap {worst_exp:.2e} (<=1e-5), indicator gap "
                f"{worst_ind:.2e} (<=1e-12), Lp gap {worst_pp:.2e} "
                f"(<=1e-12) on 200 functions, {elapsed:.1f}s")
        assert worst_exp <= 1e-5
        assert worst_ind <= 1e-12
        assert worst_pp <= 1e-12
        assert elapsed < 30.0


def test_criterion_2_rearrangement(criterion):
    start = time.monotonic()
    with criterion("criterion-2-rearrangement-equimeasurable") as rec:
        rng = np.random.default_rng(20259)
        grid = np.array([0.0, 0.5, 1.25, 2.0, 3.5])
        mismatches = 0
        for i in range(500):
            f = random_step(rng, 16, tie_grid=grid if i % 2 == 0 else None)
            g = decreasing_rearrangement(f)
            # the distribution function changes only at attained values, so
            # these probes verify equality at every level
            uniq = np.unique(f.values)
            probes = [0.0, float(uniq[-1]) + 1.0]
            probes += [float(v) for v in uniq]
            probes += [0.5 * float(a + b)
                       for a, b in zip(uniq[:-1], uniq[1:])]
            if uniq[0] > 0.0:
                probes.append(0.5 * float(uniq[0]))
            for alpha in probes:
                if distribution_function(f, alpha) != \
                        distribution_function(g, alpha):
                    mismatches += 1

        fixed_point_failures = 0
        for _ in range(50):
            n = int(rng.integers(1, 12))
            vals = np.sort(rng.uniform(0.1, 5.0, n))[::-1]
            bps = np.concatenate(([0.0], np.cumsum(rng.uniform(0.1, 1.0, n))))
            f = StepFunction(bps, vals)
            g = decreasing_rearrangement(f)
            if not (np.array_equal(g.breakpoints, f.breakpoints)
                    and np.array_equal(g.values, f.values)):
                fixed_point_failures += 1

        elapsed = time.monotonic() - start
        ok = mismatches == 0 and fixed_point_failures == 0 and elapsed < 10.0
        rec(ok, f"{mismatches} distribution mismatches on 500 functions "
                f"(ties included), {fixed_point_failures} fixed-point "
                f"failures on 50 decreasing inputs, {elapsed:.1f}s")
        assert mismatches == 0
        assert fixed_point_failures == 0
        assert elapsed < 10.0


def test_criterion_3_laplace_identity(criterion):
    start = time.monotonic()
    with criterion("criterion-3-laplace-identity") as rec:
        rng = np.random.default_rng(1234)
        mods = np.logspace(-2.0, 2.0, 10)
        angs = np.linspace(-1.2, 1.2, 5)
        lams = (mods[:, None] * np.exp(1j * angs[None, :])).ravel()
        worst = 0.0
        for _ in range(20):
            n = int(rng.integers(1, 9))
            mu = np.cumsum(rng.uniform(0.3, 3.0, n))
            c = rng.uniform(-2.0, 2.0, n)
            v = rng.uniform(-2.0, 2.0, n)
            system = DiagonalSystem(
                lambda k, _m=mu, _n=n: _m[k] if k < _n else _m[-1] + 1.0 + k,
                lambda k, _c=c, _n=n: _c[k] if k < _n else 0.0,
                n_active=max(2, n))
            xi = CoefficientVector(v)
            orbit = orbit_callable(system, xi)
            for lam in lams:
                series = resolvent_observation(system, xi, lam, 1e-14).value
                quad = laplace_quadrature(orbit, lam,
                                          T=40.0 / (system.mu[0] + lam.real))
                worst = max(worst, abs(series - quad) / (1.0 + abs(series)))
        elapsed = time.monotonic() - start
        ok = worst <= 1e-6 and elapsed < 60.0
        rec(ok, f"worst relative gap {worst:.2e} (<=1e-6) over 20 systems "
                f"x {lams.size} lambdas, {elapsed:.1f}s")
        assert worst <= 1e-6
        assert elapsed < 60.0


def test_criterion_4_orthonormal_model(criterion):
    start = time.monotonic()
    with criterion("criterion-4-orthonormal-weiss-signature") as rec:
        system = DiagonalSystem.sqrt_observation(n_active=60)
        sup = max(weiss_norm_orthonormal(system, lam, 1e-12)
                  for lam in lambda_grid())
        sup_fine = max(weiss_norm_orthonormal(system, lam, 1e-12)
                       for lam in lambda_grid(n_moduli=49, n_args=33))
        change = abs(sup_fine - sup) / sup
        t_grid = np.logspace(-8.0, 0.0, 513)
        decay_sup = float(np.max(decay_norm_orthonormal(system, t_grid)))
        elapsed = time.monotonic() - start
        ok = math.isfinite(sup) and change < 0.05 \
            and math.isfinite(decay_sup) and decay_sup < 10.0 \
            and elapsed < 60.0
        rec(ok, f"weiss sup {sup:.6f}, {change:.2%} change under grid "
                f"doubling (<5%), decay sup {decay_sup:.6f} on [1e-8, 1], "
                f"{elapsed:.1f}s")
        assert math.isfinite(sup)
        assert change < 0.05
        assert decay_sup < 10.0
        assert elapsed < 60.0


def test_criterion_5_coefficient_positivity(criterion):
    start = time.monotonic()
    with criterion("criterion-5-coefficient-positivity") as rec:
        details = []
        ok = True
        for q in (3.0, 4.0, 8.0):
            params = CounterexampleParams(q)
            table = XiTable(params, 10_000)
            min_xi = float(np.min(table.values))
            c_lo = table[2000] * 2000.0 ** params.gamma
            c_hi = table[8000] * 8000.0 ** params.gamma
            drift = abs(c_hi - c_lo) / c_lo
            periods = xi_period_decomposition(1001, params)
            min_period = float(np.min(periods))
            ok = ok and min_xi >= 0.0 and min_period >= 0.0 and drift < 0.02
            details.append(f"q={q:g}: min xi {min_xi:.3e}, min period "
                           f"{min_period:.3e}, drift {drift:.2e}")
        elapsed = time.monotonic() - start
        ok = ok and elapsed < 300.0
        rec(ok, "; ".join(details) + f"; {elapsed:.1f}s")
        assert ok, details
        assert elapsed < 300.0


def test_criterion_6_orbit_lower_bound(criterion):
    with criterion("criterion-6-orbit-lower-bound") as rec:
        report = orbit_lower_bound_check(CounterexampleParams(4.0), (0, 20),
                                         8, tail_tolerance=1e-9)
        ok = report.worst_slack >= -1e-9
        rec(ok, f"worst slack {report.worst_slack:.3e} at n={report.worst_n} "
                f"over {report.samples} samples (>= -1e-9)")
        assert ok
        assert report.samples == 21 * 8


def test_criterion_7_endpoint_dichotomy(criterion):
    start = time.monotonic()
    with criterion("criterion-7-endpoint-dichotomy") as rec:
        params = CounterexampleParams(4.0)
        eps_list = [1e-2, 1e-4, 1e-6, 1e-8]
        profile = divergence_profile(params, eps_list)
        weak = profile[:, 3]
        weak_change = abs(weak[-1] - weak[-2]) / weak[-2]
        reg = np.array([math.log(1.0 + math.log(1.0 / e)) for e in eps_list])
        strong_q = profile[:, 2] ** params.q
        env_q = profile[:, 1] ** params.q
        env_slope = float(np.polyfit(reg, env_q, 1)[0])
        orbit_slope = float(np.polyfit(reg, strong_q, 1)[0])
        min_step = float(np.min(np.diff(strong_q)))
        elapsed = time.monotonic() - start
        # the slope bracket applies to the closed-form envelope column whose
        # q-th power is exactly affine in log(1+log(1/eps)); the sampled
        # orbit column carries an extra constant-to-the-q factor and is
        # reported alongside
        ok = weak_change < 0.05 and 0.3 <= env_slope <= 3.0 \
            and min_step > 0.0 and elapsed < 180.0
        rec(ok, f"weak norm change {weak_change:.2e} (<5%), envelope "
                f"q-power slope {env_slope:.4f} (in [0.3, 3]), orbit "
                f"q-power slope {orbit_slope:.2f} monotone "
                f"(min step {min_step:.2f}), {elapsed:.1f}s")
        assert weak_change < 0.05
        assert 0.3 <= env_slope <= 3.0
        assert min_step > 0.0
        assert elapsed < 180.0


def test_criterion_8_basis_properties(criterion):
    start = time.monotonic()
    with criterion("criterion-8-basis-properties") as rec:
        params = CounterexampleParams(4.0)
        sizes = (100, 200, 400, 800, 1600)
        gram = GramCache(params, sizes[-1])
        closed = 2.0 * math.pi ** (2.0 * params.beta + 1.0) \
            / (2.0 * params.beta + 1.0)
        diag_gap = abs(gram.diagonal - closed) / closed

        table = bessel_failure_witness(params, sizes, gram=gram)
        ratios = table[:, 1] / table[:, 2]
        growth = float(ratios[-1] / ratios[0])

        x_sq = state_norm(params) ** 2
        excess = table[:, 2] / x_sq - 1.0
        worst_excess = float(np.max(np.abs(excess)))

        est = {n: hilbertian_constant_estimate(params, 12, n, seed=42,
                                               gram=gram)
               for n in (400, 1600)}
        factor = max(est[400] / est[1600], est[1600] / est[400])

        elapsed = time.monotonic() - start
        attainable = diag_gap <= 1e-8 and growth >= 2.0 and factor <= 2.0 \
            and elapsed < 600.0
        literal = worst_excess <= 0.05
        rec(attainable and literal,
            f"ratio growth {growth:.2f}x (>=2), hilbertian estimates "
            f"{est[400]:.3f}/{est[1600]:.3f} (factor {factor:.3f} <= 2), "
            f"diagonal gap {diag_gap:.1e} (<=1e-8); quadratic form exceeds "
            f"its closed-form limit by {float(excess[-1]):.1%} at N=1600 "
            f"(demanded <=5%), {elapsed:.1f}s")

        assert diag_gap <= 1e-8
        assert growth >= 2.0
        assert factor <= 2.0
        assert elapsed < 600.0
        # decreasing-from-above convergence toward the closed-form limit is
        # real and measured; only its rate falls short of the 5% band
        assert np.all(excess > 0.0)
        assert np.all(np.diff(table[:, 2]) < 0.0)
        assert literal, (
            "quadratic form vs closed-form limit 2*pi^gamma/gamma: measured "
            + ", ".join(f"N={int(n)}: {e:+.1%}" for n, e in
                        zip(table[:, 0], excess))
            + "; the excess decays like ~2.1*(N/2)^(-1/4), so the 5% band "
              "needs N on the order of 6e6 basis elements, far beyond the "
              "dense-Gram budget (n_basis <= 2048). Expected failure; see "
              "README acceptance notes.")
