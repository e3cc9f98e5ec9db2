#!/usr/bin/env python3
"""Tagged pilot run: measures every regression-gated statistic once and
freezes the values into the packaged baselines file.

The underlying limits are qualitative (no rates are known), so these
numbers are implementation regression gates, not theory claims.  Re-run
deliberately, and only when the sequence engines or the statistics change;
CI compares against baseline * 1.05.
"""

import json
import sys
import time
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cocyclelab import __version__
from cocyclelab.arith import mobius_sieve
from cocyclelab.cocycle import AffineOrbit, FourierCocycle, TailModel, ergodicity_criterion
from cocyclelab.experiments import (
    baseline_key,
    birkhoff_distribution,
    kbsz_correlation,
    orthogonality_average,
    parity_observable,
    short_interval_statistic,
    strong_momo_statistic,
    weyl_sum,
)
from cocyclelab.surd import QuadraticSurd, cf_expand, preset

OUT = Path(__file__).resolve().parent.parent / "src" / "cocyclelab" / "baselines" / "pilot.json"

N_FULL = 10**6
N_KBSZ = 10**5
MOMO_BLOCKS = 800


def main() -> None:
    golden, sqrt2m1 = preset("golden"), preset("sqrt2m1")
    entries: dict = {}

    t0 = time.time()
    orbit = AffineOrbit(golden, sqrt2m1, N_FULL, engine="wrap")
    c = orbit.c_float
    a = orbit.a_array()
    mu = mobius_sieve(N_FULL).values.astype(np.complex128)
    print(f"sequence + sieve: {time.time() - t0:.1f} s")

    for theta in (1.0, float(QuadraticSurd.sqrt_int(2))):
        series = weyl_sum(c[1 : N_FULL + 1], theta, [10**3, N_FULL])
        key = baseline_key("weyl", alpha="golden", beta="sqrt2m1", theta=theta, n=N_FULL)
        entries[key] = float(series.magnitudes[-1])
        print(key, "->", entries[key], "(vs", float(series.magnitudes[0]), "at 1e3)")

    res = orthogonality_average(parity_observable(a[1:]), mu[1:], [N_FULL])
    key = baseline_key(
        "orth", alpha="golden", beta="sqrt2m1", obs="parity", u="mobius", n=N_FULL
    )
    entries[key] = float(res.raw.magnitudes[-1])
    print(key, "->", entries[key], "| empirical mean", res.empirical_mean)

    values = np.exp(2j * np.pi * c)
    for r, s in ((2, 3), (3, 5)):
        series = kbsz_correlation(values, r, s, [N_KBSZ])
        key = baseline_key(
            "kbsz", alpha="golden", beta="sqrt2m1", r=r, s=s, n=N_KBSZ
        )
        entries[key] = float(series.magnitudes[-1])
        print(key, "->", entries[key])

    m_lower = 10**5
    par = parity_observable(a)
    for window in (10, 316):
        value = short_interval_statistic(par, mu, m_lower, window)
        key = baseline_key(
            "short",
            alpha="golden",
            beta="sqrt2m1",
            obs="parity",
            u="mobius",
            M=m_lower,
            H=window,
        )
        entries[key] = float(value)
        print(key, "->", entries[key])

    def adversarial(k, ns):
        base = par[ns]
        total = (base * mu[ns]).sum()
        if total == 0:
            return base
        return base * (total.conjugate() / abs(total))

    momo = strong_momo_statistic(adversarial, mu, [MOMO_BLOCKS])
    key = baseline_key(
        "momo",
        alpha="golden",
        beta="sqrt2m1",
        obs="parity",
        u="mobius",
        blocks=MOMO_BLOCKS,
    )
    entries[key] = float(momo.magnitudes[-1])
    print(key, "->", entries[key])

    # denominator-growth criterion ratio table, |k|^-2.5 model, K = 2^16
    kmax = 2**16
    coeffs = {k: k**-2.5 for k in range(1, kmax + 1)}
    f = FourierCocycle(
        golden, coeffs, tail=TailModel(1.0, 2.5, kmax), claimed_nonpolynomial=True
    )
    qs = sorted(set(cf_expand(golden, 24).denominators_up_to(10**4)))
    report = ergodicity_criterion(f, qs, constant=2.0)
    key = "criterion:alpha=golden,fhat=power2.5,kmax=65536,qmax=10000"
    entries[key] = [[row.q, row.ratio] for row in report.rows]
    print(key, "-> table of", len(report.rows), "ratios; max",
          max(r.ratio for r in report.rows))

    # non-atomicity scale of the full-range component (informational)
    zero_orbit = AffineOrbit(golden, QuadraticSurd.from_int(0), 31_000)
    dist = birkhoff_distribution(zero_orbit, "theta", q=6765, r=3, samples=10_000)
    key = "hist:alpha=golden,component=theta,q=6765,r=3,maxmass"
    entries[key] = float(dist.histogram.masses.max())
    print(key, "->", entries[key])

    payload = {
        "version": 1,
        "code_version": __version__,
        "note": "pilot regression gates; limits are qualitative, no rates",
        "entries": entries,
    }
    OUT.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"\nwrote {OUT}")


if __name__ == "__main__":
    main()
