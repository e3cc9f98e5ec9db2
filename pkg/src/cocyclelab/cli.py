"""Command-line entry point.

One process per run.  A run is a pure function of (config, mode, code
version): metadata sidecars carry no clocks, so re-running a config in
exact mode reproduces every output byte.

Exit codes: 0 success, 1 statistic exceeded its stored pilot baseline,
2 invalid input or configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .arith import liouville_sieve, mobius_sieve, nit_function
from .cocycle import (
    AffineCocycle,
    AffineOrbit,
    FourierCocycle,
    TailModel,
    ergodicity_criterion,
)
from .experiments import (
    BaselineCheck,
    StatisticSeries,
    baseline_key,
    birkhoff_distribution,
    check_against_baseline,
    circle_flow_observable,
    default_block_schedule,
    kbsz_correlation,
    orthogonality_average,
    parity_observable,
    residue_character_observable,
    short_interval_statistic,
    strong_momo_statistic,
    weyl_sum,
)
from .surd import (
    FixedPointReal,
    PRESETS,
    QuadraticSurd,
    cf_expand,
    from_quadruple,
    preset,
)

EXIT_OK = 0
EXIT_BASELINE = 1
EXIT_INVALID = 2


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending field."""


# ---------------------------------------------------------------------------
# scalar and config resolution
# ---------------------------------------------------------------------------


def resolve_scalar(spec, mode: str = "exact", fieldname: str = "value"):
    """Turn a config entry into a rotation-number scalar.

    Accepted forms: preset name, {"a","b","c","d"} quadruple,
    {"partial_quotients": [...]} (fixed mode only), plain number
    (fixed mode only).
    """
    if isinstance(spec, str):
        try:
            value = preset(spec)
        except KeyError as exc:
            raise ConfigError(f"{fieldname}: {exc.args[0]}") from None
        return value if mode == "exact" else FixedPointReal.from_surd(value)
    if isinstance(spec, dict):
        if "partial_quotients" in spec:
            if mode == "exact":
                raise ConfigError(
                    f"{fieldname}: partial-quotient input has no exact surd form; "
                    "use mode=fixed"
                )
            return FixedPointReal.from_partial_quotients(
                [int(a) for a in spec["partial_quotients"]]
            )
        try:
            value = from_quadruple(spec)
        except ValueError as exc:
            raise ConfigError(f"{fieldname}: {exc}") from None
        return value if mode == "exact" else FixedPointReal.from_surd(value)
    if isinstance(spec, (int, float)):
        if mode == "exact":
            if isinstance(spec, int) or float(spec).is_integer():
                return QuadraticSurd.from_int(int(spec))
            raise ConfigError(
                f"{fieldname}: float input is not exact; use a preset, a "
                "quadruple, or mode=fixed"
            )
        return FixedPointReal.from_fraction(Fraction(float(spec)).limit_denominator(10**12))
    raise ConfigError(f"{fieldname}: unsupported scalar spec {spec!r}")


def resolve_theta(spec) -> float:
    if isinstance(spec, str):
        try:
            return float(spec)
        except ValueError:
            pass
        try:
            return float(preset(spec))
        except KeyError:
            raise ConfigError(f"theta: not a number or preset: {spec!r}") from None
    return float(spec)


def load_config(path: str | None) -> dict:
    if not path:
        return {}
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config: file {path} does not exist")
    with open(p) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ConfigError("config: top level must be an object")
    return data


def merged_options(args: argparse.Namespace, config: dict) -> dict:
    """Config fields overridden by explicitly passed CLI flags."""
    cli = {k: v for k, v in vars(args).items() if v is not None}
    merged = {**config, **cli}
    return merged


def require(options: dict, key: str, fieldname: str | None = None):
    if key not in options or options[key] is None:
        raise ConfigError(f"{fieldname or key}: required option missing")
    return options[key]


def parse_checkpoints(spec, n: int) -> list[int]:
    if spec in (None, "decades"):
        points = []
        p = 1000
        while p < n:
            points.append(p)
            p *= 10
        points.append(n)
        return sorted(set(pt for pt in points if pt <= n))
    if isinstance(spec, str):
        try:
            points = [int(tok) for tok in spec.split(",") if tok]
        except ValueError:
            raise ConfigError(f"checkpoints: cannot parse {spec!r}") from None
    else:
        points = [int(x) for x in spec]
    if not points or points != sorted(set(points)) or points[-1] > n:
        raise ConfigError("checkpoints: must be ascending and bounded by n")
    return points


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def write_metadata(out: str, command: str, params: dict, checks: list[BaselineCheck]):
    meta = {
        "command": command,
        "version": __version__,
        "params": params,
        "baseline_checks": [
            {
                "key": c.key,
                "value": c.value,
                "baseline": c.baseline,
                "ok": c.ok,
            }
            for c in checks
        ],
    }
    with open(str(out) + ".meta.json", "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")


def finish_statistic(series: StatisticSeries, out, command, params, key) -> int:
    series.write_csv(out)
    check = check_against_baseline(key, float(series.magnitudes[-1]))
    write_metadata(out, command, params, [check])
    print(check)
    return EXIT_OK if check.ok else EXIT_BASELINE


def scalar_repr(spec):
    return spec if isinstance(spec, (str, int, float)) else dict(spec)


def spec_token(spec) -> str:
    """Deterministic short token for a scalar spec inside baseline keys."""
    if isinstance(spec, (str, int, float)):
        return str(spec)
    return json.dumps(spec, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_sieve(options: dict) -> int:
    fn = require(options, "fn")
    n = int(require(options, "n"))
    out = require(options, "out")
    if fn == "mobius":
        table = mobius_sieve(n, workers=int(options.get("workers") or 1))
    elif fn == "liouville":
        table = liouville_sieve(n, workers=int(options.get("workers") or 1))
    else:
        raise ConfigError(f"fn: unknown sieve {fn!r}")
    with open(out, "w", newline="") as fh:
        fh.write("n,value\n")
        for k in range(1, n + 1):
            fh.write(f"{k},{int(table.values[k])}\n")
    write_metadata(out, "sieve", {"fn": fn, "n": n}, [])
    return EXIT_OK


def _decimal_expansion(value, digits: int = 30) -> str:
    scaled = (value * 10**digits).floor() if not isinstance(value, Fraction) else None
    if scaled is None:
        scaled = int(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    m = abs(scaled)
    return f"{sign}{m // 10**digits}.{m % 10**digits:0{digits}d}"


def cmd_seq(options: dict) -> int:
    mode = options.get("mode", "exact")
    if mode not in ("exact", "fixed"):
        raise ConfigError(f"mode: must be exact or fixed, got {mode!r}")
    n = int(require(options, "n"))
    out = require(options, "out")
    alpha_spec = require(options, "alpha")
    beta_spec = require(options, "beta")
    if mode == "exact":
        alpha = resolve_scalar(alpha_spec, "exact", "alpha")
        beta = resolve_scalar(beta_spec, "exact", "beta")
        orbit = AffineOrbit(alpha, beta, n, engine="wrap")
        with open(out, "w", newline="") as fh:
            fh.write("n,c_n,a_n\n")
            for k in range(1, n + 1):
                c = orbit.c_exact(k)
                fh.write(f"{k},{_decimal_expansion(c)},{orbit.a_value(k)}\n")
    else:
        alpha = resolve_scalar(alpha_spec, "fixed", "alpha")
        beta = resolve_scalar(beta_spec, "fixed", "beta")
        half = FixedPointReal.from_fraction(Fraction(1, 2))
        y = beta.frac()
        total = FixedPointReal.from_int(0)
        with open(out, "w", newline="") as fh:
            fh.write("n,c_n,a_n\n")
            for k in range(1, n + 1):
                total = total + (y - half)
                y = (y + alpha).frac()
                fh.write(f"{k},{total.to_float():.17g},{total.floor()}\n")
    write_metadata(
        out,
        "seq",
        {
            "alpha": scalar_repr(alpha_spec),
            "beta": scalar_repr(beta_spec),
            "n": n,
            "mode": mode,
        },
        [],
    )
    return EXIT_OK


def cmd_sturmian(options: dict) -> int:
    from .dynsys import sturmian_code

    n = int(require(options, "n"))
    out = require(options, "out")
    alpha = resolve_scalar(require(options, "alpha"), "exact", "alpha")
    x = resolve_scalar(options.get("x", 0), "exact", "x")
    cut_name = options.get("cut", "half")
    if cut_name == "half":
        cut = Fraction(1, 2)
    elif cut_name == "classical":
        cut = 1 - alpha
    else:
        raise ConfigError(f"cut: must be half or classical, got {cut_name!r}")
    word = sturmian_code(x, alpha, n, cut=cut)
    with open(out, "w", newline="") as fh:
        fh.write("k,symbol\n")
        for k, w in enumerate(word):
            fh.write(f"{k},{int(w)}\n")
    write_metadata(
        out,
        "sturmian",
        {
            "alpha": scalar_repr(options.get("alpha")),
            "x": scalar_repr(options.get("x", 0)),
            "n": n,
            "cut": cut_name,
        },
        [],
    )
    return EXIT_OK


def _sequence_orbit(options: dict, n: int, mode: str) -> AffineOrbit:
    alpha = resolve_scalar(require(options, "alpha"), "exact", "alpha")
    beta = resolve_scalar(options.get("beta", 0), "exact", "beta")
    if mode != "exact":
        raise ConfigError("mode: statistics require mode=exact sequences")
    return AffineOrbit(alpha, beta, n, engine="wrap")


def _weight_table(options: dict, n: int) -> np.ndarray:
    name = options.get("u", "mobius")
    if name == "mobius":
        return mobius_sieve(n).values.astype(np.complex128)
    if name == "liouville":
        return liouville_sieve(n).values.astype(np.complex128)
    if isinstance(name, str) and name.startswith("nit:"):
        return nit_function(float(name.split(":", 1)[1]), n).values
    raise ConfigError(f"u: unknown multiplicative function {name!r}")


def _observable(options: dict, orbit: AffineOrbit, upto: int) -> tuple[np.ndarray, str]:
    """Observable values indexed directly by n (entry 0 unused)."""
    spec = options.get("observable", "parity")
    if spec == "parity":
        return parity_observable(orbit.a_array(upto)), "parity"
    if isinstance(spec, str) and spec.startswith("residue:"):
        modulus = int(spec.split(":", 1)[1])
        return residue_character_observable(orbit.a_array(upto), modulus), spec
    if isinstance(spec, str) and spec.startswith("flow:"):
        speed = resolve_theta(spec.split(":", 1)[1])
        return circle_flow_observable(orbit.c_float[: upto + 1], speed), spec
    raise ConfigError(f"observable: unknown spec {spec!r}")


def cmd_weyl(options: dict) -> int:
    n = int(require(options, "n"))
    theta = resolve_theta(require(options, "theta"))
    checkpoints = parse_checkpoints(options.get("checkpoints"), n)
    out = require(options, "out")
    orbit = _sequence_orbit(options, n, options.get("mode", "exact"))
    series = weyl_sum(orbit.c_float[1:], theta, checkpoints)
    params = {
        "alpha": scalar_repr(options.get("alpha")),
        "beta": scalar_repr(options.get("beta", 0)),
        "theta": theta,
        "n": n,
        "mode": options.get("mode", "exact"),
    }
    key = baseline_key(
        "weyl",
        alpha=spec_token(options.get("alpha")),
        beta=spec_token(options.get("beta", 0)),
        theta=theta,
        n=n,
    )
    return finish_statistic(series, out, "weyl", params, key)


def cmd_kbsz(options: dict) -> int:
    n = int(require(options, "n"))
    r, s = int(require(options, "r")), int(require(options, "s"))
    out = require(options, "out")
    checkpoints = parse_checkpoints(options.get("checkpoints"), n)
    theta = resolve_theta(options.get("theta", 1.0))
    orbit = _sequence_orbit(options, max(r, s) * n, options.get("mode", "exact"))
    values = np.exp(2j * np.pi * theta * orbit.c_float)
    series = kbsz_correlation(values, r, s, checkpoints)
    params = {
        "alpha": scalar_repr(options.get("alpha")),
        "beta": scalar_repr(options.get("beta", 0)),
        "r": r,
        "s": s,
        "theta": theta,
        "n": n,
        "mode": options.get("mode", "exact"),
    }
    key = baseline_key(
        "kbsz",
        alpha=spec_token(options.get("alpha")),
        beta=spec_token(options.get("beta", 0)),
        r=r,
        s=s,
        n=n,
    )
    return finish_statistic(series, out, "kbsz", params, key)


def cmd_mobius(options: dict) -> int:
    n = int(require(options, "n"))
    out = require(options, "out")
    checkpoints = parse_checkpoints(options.get("checkpoints"), n)
    orbit = _sequence_orbit(options, n, options.get("mode", "exact"))
    weight = _weight_table(options, n)
    obs, obs_name = _observable(options, orbit, n)
    result = orthogonality_average(obs[1:], weight[1:], checkpoints)
    params = {
        "alpha": scalar_repr(options.get("alpha")),
        "beta": scalar_repr(options.get("beta", 0)),
        "observable": obs_name,
        "u": options.get("u", "mobius"),
        "n": n,
        "empirical_mean_re": result.empirical_mean.real,
        "empirical_mean_im": result.empirical_mean.imag,
        "centered_final_abs": float(result.centered.magnitudes[-1]),
        "mode": options.get("mode", "exact"),
    }
    key = baseline_key(
        "orth",
        alpha=spec_token(options.get("alpha")),
        beta=spec_token(options.get("beta", 0)),
        obs=obs_name,
        u=options.get("u", "mobius"),
        n=n,
    )
    return finish_statistic(result.raw, out, "mobius", params, key)


def cmd_momo(options: dict) -> int:
    blocks = int(require(options, "blocks"))
    out = require(options, "out")
    b_top = default_block_schedule(blocks + 1)
    orbit = _sequence_orbit(options, b_top, options.get("mode", "exact"))
    weight = _weight_table(options, b_top)
    obs, obs_name = _observable(options, orbit, b_top)
    checkpoints = parse_checkpoints(options.get("checkpoints"), blocks)

    adversarial = bool(options.get("adversarial", True))

    def block_values(k: int, ns: np.ndarray) -> np.ndarray:
        base = obs[ns]
        if not adversarial:
            return base
        total = (base * weight[ns]).sum()
        if total == 0:
            return base
        # rotate the block by the unit phase that maximizes the real part
        return base * (total.conjugate() / abs(total))

    series = strong_momo_statistic(block_values, weight, checkpoints)
    params = {
        "alpha": scalar_repr(options.get("alpha")),
        "beta": scalar_repr(options.get("beta", 0)),
        "observable": obs_name,
        "u": options.get("u", "mobius"),
        "blocks": blocks,
        "adversarial": adversarial,
        "mode": options.get("mode", "exact"),
    }
    key = baseline_key(
        "momo",
        alpha=spec_token(options.get("alpha")),
        beta=spec_token(options.get("beta", 0)),
        obs=obs_name,
        u=options.get("u", "mobius"),
        blocks=blocks,
    )
    return finish_statistic(series, out, "momo", params, key)


def cmd_short(options: dict) -> int:
    m_lower = int(require(options, "m"))
    hs = options.get("h", "10,100,316")
    if isinstance(hs, str):
        h_list = [int(tok) for tok in hs.split(",") if tok]
    else:
        h_list = [int(h) for h in hs]
    out = require(options, "out")
    top = 2 * m_lower + max(h_list)
    orbit = _sequence_orbit(options, top, options.get("mode", "exact"))
    weight = _weight_table(options, top)
    obs, obs_name = _observable(options, orbit, top)
    values = [
        short_interval_statistic(obs, weight, m_lower, h) for h in h_list
    ]
    series = StatisticSeries(
        {"statistic": "short_interval", "M": m_lower},
        h_list,
        np.array(values, dtype=np.complex128),
    )
    params = {
        "alpha": scalar_repr(options.get("alpha")),
        "beta": scalar_repr(options.get("beta", 0)),
        "observable": obs_name,
        "u": options.get("u", "mobius"),
        "M": m_lower,
        "H": h_list,
        "mode": options.get("mode", "exact"),
    }
    key = baseline_key(
        "short",
        alpha=spec_token(options.get("alpha")),
        beta=spec_token(options.get("beta", 0)),
        obs=obs_name,
        u=options.get("u", "mobius"),
        M=m_lower,
        H=max(h_list),
    )
    return finish_statistic(series, out, "short", params, key)


def cmd_hist(options: dict) -> int:
    component = options.get("component", "full")
    r = int(options.get("r", 1))
    qn_index = int(require(options, "qn_index"))
    samples = int(options.get("samples", 10_000))
    bins = int(options.get("bins", 64))
    out = require(options, "out")
    alpha = resolve_scalar(require(options, "alpha"), "exact", "alpha")
    cf = cf_expand(alpha, max(qn_index + 2, 8))
    qs = cf.denominators
    if qn_index >= len(qs):
        raise ConfigError(f"qn_index: only {len(qs)} denominators expanded")
    q = qs[qn_index]
    need = max(q + samples, r * (samples - 1) + r * q + 1)
    orbit = AffineOrbit(alpha, QuadraticSurd.from_int(0), need, engine="wrap")
    dist = birkhoff_distribution(
        orbit, component, q=q, r=r, samples=samples, bins=bins
    )
    dist.histogram.write_csv(out)
    params = {
        "alpha": scalar_repr(options.get("alpha")),
        "component": component,
        "r": r,
        "qn_index": qn_index,
        "q": q,
        "samples": samples,
        "bins": bins,
        "support_radius": dist.support_radius,
        "atoms": dist.histogram.atoms,
    }
    if dist.distinct_values is not None:
        params["distinct_value_count"] = len(dist.distinct_values)
    write_metadata(out, "hist", params, [])
    return EXIT_OK


def cmd_criterion(options: dict) -> int:
    out = require(options, "out")
    fhat = options.get("fhat", "power:2.5")
    kmax = int(options.get("kmax", 2**16))
    levels = int(options.get("levels", 20))
    constant = float(options.get("constant", 2.0))
    if isinstance(fhat, str) and fhat.startswith("power:"):
        exponent = float(fhat.split(":", 1)[1])
        coeffs = {k: k ** (-exponent) for k in range(1, kmax + 1)}
        tail = TailModel(amplitude=1.0, exponent=exponent, cutoff=kmax)
    else:
        raise ConfigError(f"fhat: unknown coefficient model {fhat!r}")
    alpha_spec = require(options, "alpha")
    mode = options.get("mode", "exact")
    alpha = resolve_scalar(alpha_spec, mode, "alpha")
    if isinstance(alpha, QuadraticSurd):
        qs = cf_expand(alpha, levels + 2).denominators
    else:
        pq = options.get("partial_quotients") or (
            alpha_spec.get("partial_quotients") if isinstance(alpha_spec, dict) else None
        )
        if pq is None:
            raise ConfigError("alpha: criterion in fixed mode needs partial quotients")
        qs = []
        q0, q1 = 0, None
        for a in [int(v) for v in pq][:levels + 2]:
            if q1 is None:
                q1 = 1
            else:
                q0, q1 = q1, a * q1 + q0
            qs.append(q1)
        qs = qs[:levels]
    qs = sorted(set(qs))[:levels]  # drop the duplicate early denominator
    f = FourierCocycle(alpha, coeffs, tail=tail, claimed_nonpolynomial=True)
    report = ergodicity_criterion(f, qs, constant)
    with open(out, "w", newline="") as fh:
        fh.write("q,coefficient_sum,l2_norm,ratio,satisfied,degenerate\n")
        for row in report.rows:
            ratio = "" if row.ratio is None else f"{row.ratio:.17g}"
            fh.write(
                f"{row.q},{row.coefficient_sum:.17g},{row.l2_norm:.17g},"
                f"{ratio},{int(row.satisfied)},{int(row.degenerate)}\n"
            )
    write_metadata(
        out,
        "criterion",
        {
            "fhat": fhat,
            "kmax": kmax,
            "alpha": scalar_repr(alpha_spec),
            "levels": levels,
            "constant": constant,
            "norms_decreasing": report.norms_decreasing,
            "all_satisfied": report.all_satisfied,
            "degenerate_count": report.degenerate_count,
        },
        [],
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

COMMANDS = {
    "sieve": cmd_sieve,
    "seq": cmd_seq,
    "sturmian": cmd_sturmian,
    "weyl": cmd_weyl,
    "kbsz": cmd_kbsz,
    "mobius": cmd_mobius,
    "momo": cmd_momo,
    "short": cmd_short,
    "hist": cmd_hist,
    "criterion": cmd_criterion,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocyclelab",
        description="Numerical laboratory for integer sequences from rotation cocycles",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, sequence=False):
        p.add_argument("--config", help="JSON config file; flags override fields")
        p.add_argument("--out", help="output CSV path")
        p.add_argument("--workers", type=int, help="worker count for sieving")
        if sequence:
            p.add_argument("--alpha", help="rotation number preset or quadruple")
            p.add_argument("--beta", help="base point preset or quadruple")
            p.add_argument("--mode", choices=["exact", "fixed"])
            p.add_argument("--checkpoints", help="comma list or 'decades'")
            p.add_argument("--u", help="mobius | liouville | nit:T")
            p.add_argument(
                "--observable", help="parity | residue:L | flow:SPEED"
            )

    p = sub.add_parser("sieve", help="tabulate a multiplicative function")
    common(p)
    p.add_argument("--fn", choices=["mobius", "liouville"])
    p.add_argument("--n", type=int)

    p = sub.add_parser("seq", help="emit the sequence c_n, a_n")
    common(p, sequence=True)
    p.add_argument("--n", type=int)

    p = sub.add_parser("sturmian", help="binary coding of a rotation orbit")
    common(p)
    p.add_argument("--alpha")
    p.add_argument("--x", help="starting point preset (default 0)")
    p.add_argument("--n", type=int)
    p.add_argument("--cut", choices=["half", "classical"])

    p = sub.add_parser("weyl", help="equidistribution averages of e^(2 pi i theta c_n)")
    common(p, sequence=True)
    p.add_argument("--theta", help="frequency (number or preset)")
    p.add_argument("--n", type=int)

    p = sub.add_parser("kbsz", help="prime-dilation correlations")
    common(p, sequence=True)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--theta", help="observable frequency (default 1)")
    p.add_argument("--n", type=int)

    p = sub.add_parser("mobius", help="orthogonality averages against a multiplicative function")
    common(p, sequence=True)
    p.add_argument("--n", type=int)

    p = sub.add_parser("momo", help="blockwise absolute orthogonality statistic")
    common(p, sequence=True)
    p.add_argument("--blocks", type=int, help="number of blocks K")
    p.add_argument(
        "--adversarial",
        type=lambda v: v.lower() in ("1", "true", "yes"),
        help="rotate each block to maximize its contribution (default true)",
    )

    p = sub.add_parser("short", help="short-interval double averages")
    common(p, sequence=True)
    p.add_argument("--m", type=int, help="M: intervals start in [M, 2M)")
    p.add_argument("--h", help="comma list of window lengths H")

    p = sub.add_parser("hist", help="distribution of Birkhoff sums at a denominator")
    common(p)
    p.add_argument("--alpha")
    p.add_argument("--component", choices=["full", "theta", "psi"])
    p.add_argument("--r", type=int)
    p.add_argument("--qn-index", dest="qn_index", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--bins", type=int)

    p = sub.add_parser("criterion", help="denominator-growth ergodicity report")
    common(p)
    p.add_argument("--alpha")
    p.add_argument("--fhat", help="coefficient model, e.g. power:2.5")
    p.add_argument("--kmax", type=int)
    p.add_argument("--levels", type=int)
    p.add_argument("--constant", type=float)
    p.add_argument("--mode", choices=["exact", "fixed"])

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        options = merged_options(args, config)
        options.pop("config", None)
        options.pop("command", None)
        return COMMANDS[args.command](options)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OverflowError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
