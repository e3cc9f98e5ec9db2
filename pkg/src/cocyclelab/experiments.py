"""Desk-scale statistics for ergodic integer sequences.

Every statistic here is a normalized average of unit-modulus terms, so the
absolute value can never exceed 1 (up to float roundoff); that bound is
enforced at construction.  The underlying theory proves only qualitative
decay with no rates, so numeric acceptance is regression-style: a tagged
pilot run freezes each target into a versioned baselines file, and later
runs must stay within ``baseline * 1.05``.

Reductions use fixed 4096-element chunk boundaries folded pairwise in index
order, which makes every result invariant under re-partitioning the index
range across workers.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .cocycle import AffineOrbit

_CHUNK = 4096
ABS_TOLERANCE = 1e-12


# ---------------------------------------------------------------------------
# deterministic reduction
# ---------------------------------------------------------------------------


def tree_sum(values: np.ndarray):
    """Pairwise fold over fixed 4096-element chunks, in index order.

    The chunk boundaries are a property of the array alone, so any
    contiguous partition of the index range across workers reproduces the
    same partial sums and therefore the same bits.
    """
    values = np.asarray(values)
    sums = [
        np.add.reduce(values[i : i + _CHUNK]) for i in range(0, len(values), _CHUNK)
    ]
    if not sums:
        return values.dtype.type(0)
    while len(sums) > 1:
        paired = [
            sums[i] + sums[i + 1] if i + 1 < len(sums) else sums[i]
            for i in range(0, len(sums), 2)
        ]
        sums = paired
    return sums[0]


def partitioned_mean(values: np.ndarray, workers: int = 1):
    """Mean via :func:`tree_sum`; ``workers`` only names a contiguous
    partition of the chunk list, which cannot change the result."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    n = len(values)
    if n == 0:
        raise ValueError("empty value array")
    chunk_sums = [
        np.add.reduce(values[i : i + _CHUNK]) for i in range(0, n, _CHUNK)
    ]
    bounds = np.linspace(0, len(chunk_sums), workers + 1, dtype=int)
    per_worker = [chunk_sums[a:b] for a, b in zip(bounds, bounds[1:])]
    ordered = [s for part in per_worker for s in part]
    while len(ordered) > 1:
        ordered = [
            ordered[i] + ordered[i + 1] if i + 1 < len(ordered) else ordered[i]
            for i in range(0, len(ordered), 2)
        ]
    return ordered[0] / n


# ---------------------------------------------------------------------------
# result containers
# ---------------------------------------------------------------------------


@dataclass
class StatisticSeries:
    """(checkpoint, complex value) records of one convergence experiment.

    ``modulus_bound`` is 1 for plain averages of unit-modulus terms; a
    centered variant may carry a larger documented bound.
    """

    params: dict
    checkpoints: list[int]
    values: np.ndarray  # complex128, parallel to checkpoints
    modulus_bound: float = 1.0

    def __post_init__(self):
        if list(self.checkpoints) != sorted(set(self.checkpoints)):
            raise ValueError("checkpoints must be strictly increasing")
        self.values = np.asarray(self.values, dtype=np.complex128)
        if len(self.values) != len(self.checkpoints):
            raise ValueError("one value per checkpoint required")
        if len(self.values) and float(np.abs(self.values).max()) > (
            self.modulus_bound + ABS_TOLERANCE
        ):
            raise ValueError("normalized average exceeded its modulus bound")

    @property
    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    def final(self) -> complex:
        return complex(self.values[-1])

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write("checkpoint,re,im,abs\n")
            for n, v in zip(self.checkpoints, self.values):
                fh.write(f"{n},{v.real:.17g},{v.imag:.17g},{abs(v):.17g}\n")

    @classmethod
    def read_csv(cls, path, params=None) -> "StatisticSeries":
        checkpoints, values = [], []
        with open(path, newline="") as fh:
            header = fh.readline().strip()
            if header != "checkpoint,re,im,abs":
                raise ValueError(f"unexpected series header {header!r}")
            for line in fh:
                n, re, im, _ = line.strip().split(",")
                checkpoints.append(int(n))
                values.append(complex(float(re), float(im)))
        return cls(params or {}, checkpoints, np.array(values))


@dataclass
class Histogram:
    """Uniform-width histogram with mass normalization and atom flags."""

    bin_edges: np.ndarray
    masses: np.ndarray
    total_count: int
    atom_threshold: float = 0.1
    atoms: list[int] = field(default_factory=list)

    def __post_init__(self):
        if abs(float(self.masses.sum()) - 1.0) > ABS_TOLERANCE:
            raise ValueError("histogram masses must sum to 1")
        widths = np.diff(self.bin_edges)
        if not np.allclose(widths, widths[0]):
            raise ValueError("bins must have uniform width")
        self.atoms = [i for i, m in enumerate(self.masses) if m > self.atom_threshold]

    @classmethod
    def from_values(
        cls, values: np.ndarray, bins: int = 64, atom_threshold: float = 0.1
    ) -> "Histogram":
        values = np.asarray(values, dtype=np.float64)
        lo, hi = float(values.min()), float(values.max())
        if hi - lo < 1e-12:
            lo, hi = lo - 0.5, hi + 0.5
        counts, edges = np.histogram(values, bins=bins, range=(lo, hi))
        return cls(edges, counts / len(values), len(values), atom_threshold)

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write("bin_lo,bin_hi,mass\n")
            for lo, hi, m in zip(self.bin_edges, self.bin_edges[1:], self.masses):
                fh.write(f"{lo:.17g},{hi:.17g},{m:.17g}\n")

    @classmethod
    def read_csv(cls, path) -> "Histogram":
        lows, highs, masses = [], [], []
        with open(path, newline="") as fh:
            header = fh.readline().strip()
            if header != "bin_lo,bin_hi,mass":
                raise ValueError(f"unexpected histogram header {header!r}")
            for line in fh:
                lo, hi, m = line.strip().split(",")
                lows.append(float(lo))
                highs.append(float(hi))
                masses.append(float(m))
        edges = np.array(lows + [highs[-1]])
        # the sample count is not part of the schema; 0 marks "unknown"
        return cls(edges, np.array(masses), total_count=0)


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------


def _validate_checkpoints(checkpoints, available):
    checkpoints = [int(n) for n in checkpoints]
    if not checkpoints:
        raise ValueError("need at least one checkpoint")
    if checkpoints != sorted(set(checkpoints)):
        raise ValueError("checkpoints must be strictly increasing")
    if checkpoints[-1] > available:
        raise ValueError(
            f"stream of length {available} shorter than final checkpoint "
            f"{checkpoints[-1]}"
        )
    return checkpoints


def _partial_means(terms: np.ndarray, checkpoints: list[int]) -> np.ndarray:
    """(1/N) sum_{n<=N} terms[n-1] at each checkpoint N, via chunked sums."""
    out = np.empty(len(checkpoints), dtype=np.complex128)
    prev_n = 0
    acc = np.complex128(0)
    for i, n in enumerate(checkpoints):
        acc = acc + tree_sum(terms[prev_n:n])
        prev_n = n
        out[i] = acc / n
    return out


def weyl_sum(sequence_values: np.ndarray, theta: float, checkpoints) -> StatisticSeries:
    """Partial averages (1/N) sum_{n<=N} e^{2 pi i theta c_n}.

    ``sequence_values`` holds c_1..c_N in order (index 0 = c_1).
    """
    checkpoints = _validate_checkpoints(checkpoints, len(sequence_values))
    terms = np.exp(2j * np.pi * theta * np.asarray(sequence_values, dtype=np.float64))
    values = _partial_means(terms, checkpoints)
    return StatisticSeries(
        {"statistic": "weyl", "theta": theta}, checkpoints, values
    )


@dataclass
class OrthogonalityResult:
    raw: StatisticSeries
    centered: StatisticSeries
    empirical_mean: complex


def orthogonality_average(
    observable: np.ndarray, weight: np.ndarray, checkpoints, params=None
) -> OrthogonalityResult:
    """Partial averages (1/N) sum_{n<=N} observable(n) * weight(n).

    ``observable[k]`` is the term at n = k+1 and ``weight`` is aligned the
    same way (pass a multiplicative-function table sliced from index 1).
    The caller asserts the observable has zero mean under the invariant
    measure; the empirical mean is subtracted in a companion series so both
    are reported.  Normalization is by N, zero weights included.
    """
    n_max = min(len(observable), len(weight))
    checkpoints = _validate_checkpoints(checkpoints, n_max)
    obs = np.asarray(observable[:n_max], dtype=np.complex128)
    w = np.asarray(weight[:n_max], dtype=np.complex128)
    mean = complex(partitioned_mean(obs))
    params = dict(params or {})
    raw = StatisticSeries(
        {**params, "statistic": "orthogonality", "centering": "none"},
        checkpoints,
        _partial_means(obs * w, checkpoints),
    )
    centered = StatisticSeries(
        {**params, "statistic": "orthogonality", "centering": "empirical"},
        checkpoints,
        _partial_means((obs - mean) * w, checkpoints),
        modulus_bound=1 + abs(mean),
    )
    return OrthogonalityResult(raw, centered, mean)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def kbsz_correlation(
    values: np.ndarray, r: int, s: int, checkpoints, params=None
) -> StatisticSeries:
    """Prime-dilation correlations (1/N) sum_{n<=N} a_{rn} * conj(a_{sn}).

    ``values[n]`` must hold a_n for 1 <= n <= s_max * N_final (index 0
    unused); a shorter stream is an explicit error.
    """
    if r == s:
        raise ValueError("dilations r and s must differ")
    if not (_is_prime(r) and _is_prime(s)):
        raise ValueError("dilations r and s must be prime")
    checkpoints = _validate_checkpoints(
        checkpoints, (len(values) - 1) // max(r, s)
    )
    n_final = checkpoints[-1]
    n = np.arange(1, n_final + 1)
    vals = np.asarray(values, dtype=np.complex128)
    terms = vals[r * n] * np.conj(vals[s * n])
    series = _partial_means(terms, checkpoints)
    return StatisticSeries(
        {**(params or {}), "statistic": "kbsz", "r": r, "s": s},
        checkpoints,
        series,
    )


def default_block_schedule(k: int) -> int:
    """b_k = floor(k^(3/2)): strictly increasing with gaps growing to
    infinity, the minimal structure block statistics require."""
    return int(k**1.5)


def strong_momo_statistic(
    block_observable,
    weight: np.ndarray,
    block_counts,
    schedule=default_block_schedule,
    params=None,
) -> StatisticSeries:
    """Blockwise absolute orthogonality statistic.

    For each K in ``block_counts`` computes

        (1 / b_{K+1}) * sum_{k<=K} | sum_{b_k <= n < b_{k+1}}
                                     block_observable(k, n) * weight(n) |,

    where ``block_observable(k, ns)`` returns the observable values f(S_{a_n}
    y_k) for the k-th block's index array ns (the block point y_k is chosen
    by the callable).  ``weight[n]`` is indexed directly by n.
    """
    ks = sorted(set(int(k) for k in block_counts))
    if not ks or ks[0] < 1:
        raise ValueError("block counts must be positive")
    k_max = ks[-1]
    bounds = [schedule(k) for k in range(1, k_max + 2)]
    if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
        raise ValueError("block schedule must be strictly increasing")
    if bounds[-1] > len(weight):
        raise ValueError(
            f"weight table of length {len(weight)} too short for b_K+1 = {bounds[-1]}"
        )
    block_abs = np.empty(k_max, dtype=np.float64)
    for k in range(1, k_max + 1):
        ns = np.arange(bounds[k - 1], bounds[k])
        terms = np.asarray(block_observable(k, ns), dtype=np.complex128) * weight[ns]
        block_abs[k - 1] = abs(tree_sum(terms))
    out = np.empty(len(ks), dtype=np.complex128)
    for i, k in enumerate(ks):
        out[i] = tree_sum(block_abs[:k]) / bounds[k]
    return StatisticSeries(
        {**(params or {}), "statistic": "strong_momo"}, ks, out
    )


def short_interval_statistic(
    observable: np.ndarray, weight: np.ndarray, m_lower: int, window: int
) -> float:
    """Double average (1/M) sum_{M<=m<2M} |(1/H) sum_{m<=h<m+H} obs(h) w(h)|.

    ``observable[h]`` and ``weight[h]`` are indexed directly by h and must
    reach h = 2M + H - 2.
    """
    m_count, h_len = int(m_lower), int(window)
    if h_len < 1:
        raise ValueError("window H must be >= 1")
    if h_len > m_count:
        raise ValueError("window H must not exceed M")
    need = 2 * m_count + h_len - 1
    if len(observable) < need or len(weight) < need:
        raise ValueError(f"streams must reach index {need - 1}")
    w = (
        np.asarray(observable[:need], dtype=np.complex128)
        * np.asarray(weight[:need], dtype=np.complex128)
    )
    cums = np.concatenate(([0], np.cumsum(w)))
    ms = np.arange(m_count, 2 * m_count)
    block = np.abs(cums[ms + h_len] - cums[ms]) / h_len
    return float(tree_sum(block) / m_count)


# ---------------------------------------------------------------------------
# distribution of Birkhoff sums along denominators
# ---------------------------------------------------------------------------


@dataclass
class BirkhoffDistribution:
    component: str
    r: int
    q: int
    histogram: Histogram
    support_radius: float
    distinct_values: dict | None = None  # exact census, step component only


def birkhoff_distribution(
    orbit: AffineOrbit,
    component: str,
    q: int,
    r: int = 1,
    samples: int = 10_000,
    bins: int = 64,
    atom_threshold: float = 0.1,
    exact_census: bool | None = None,
) -> BirkhoffDistribution:
    """Empirical distribution of q-step Birkhoff sums over a Kronecker grid.

    The grid is the orbit prefix itself (x_k = {k alpha}), so every value is
    a difference c_{k+q} - c_k of orbit sums -- exact where the orbit is.

    components: "full" (the sawtooth cocycle), "theta" (full-range part of
    the r-dilated sum; equals r^2 times the full one), "psi" (step part;
    for it the exact distinct-value census is also collected).
    """
    if component not in ("full", "theta", "psi"):
        raise ValueError(f"unknown component {component!r}")
    from .surd import cf_expand

    if q not in cf_expand(orbit.alpha, 64).denominators_up_to(q):
        raise ValueError(f"q={q} is not a continued-fraction denominator of alpha")
    if component == "full":
        r = 1
    full = orbit.window_sums_float(q, samples)
    if component == "full":
        values = full
    elif component == "theta":
        values = (r * r) * full
    else:
        # psi^(q)(x) = r^2 * phi^(q)(x) - phi^(rq)(r x); on the grid
        # x = {k alpha} the second term is a window at index r k.
        c = orbit.c_float
        if r * (samples - 1) + r * q > orbit.count:
            raise ValueError("orbit prefix too short for the step component")
        ks = np.arange(samples)
        values = (r * r) * full - (c[r * ks + r * q] - c[r * ks])
    census = None
    want_census = exact_census if exact_census is not None else component == "psi"
    if want_census:
        census = {}
        for k in range(samples):
            if component == "psi":
                v = (r * r) * orbit.window_sum_exact(k, q) - orbit.window_sum_exact(
                    r * k, r * q
                )
            else:
                v = orbit.window_sum_exact(k, q)
                if component == "theta":
                    v = (r * r) * v
            census[v] = census.get(v, 0) + 1
    hist = Histogram.from_values(values, bins=bins, atom_threshold=atom_threshold)
    return BirkhoffDistribution(
        component=component,
        r=r,
        q=q,
        histogram=hist,
        support_radius=float(np.abs(values).max()),
        distinct_values=census,
    )


# ---------------------------------------------------------------------------
# pilot baselines
# ---------------------------------------------------------------------------

BASELINE_ENV = "COCYCLELAB_BASELINE_DIR"
BASELINE_SLACK = 1.05


def baseline_path() -> Path:
    override = os.environ.get(BASELINE_ENV)
    if override:
        return Path(override) / "pilot.json"
    return Path(__file__).parent / "baselines" / "pilot.json"


def load_baselines() -> dict:
    path = baseline_path()
    if not path.exists():
        return {}
    with open(path) as fh:
        data = json.load(fh)
    return data.get("entries", {})


@dataclass(frozen=True)
class BaselineCheck:
    key: str
    value: float
    baseline: float | None
    ok: bool

    def __str__(self):
        if self.baseline is None:
            return f"{self.key}: {self.value:.6g} (no baseline recorded)"
        verdict = "ok" if self.ok else "EXCEEDED"
        return (
            f"{self.key}: {self.value:.6g} vs baseline {self.baseline:.6g} "
            f"* {BASELINE_SLACK} [{verdict}]"
        )


def baseline_key(kind: str, **params) -> str:
    """Canonical baseline key: kind plus sorted key=value parameter parts."""
    parts = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, float):
            v = f"{v:g}"
        parts.append(f"{k}={v}")
    return f"{kind}:" + ",".join(parts)


def check_against_baseline(key: str, value: float) -> BaselineCheck:
    """Regression gate: value must not exceed the stored pilot value * 1.05.

    A missing key is reported as ok=True with baseline None (first run /
    pilot mode); the caller decides whether that is acceptable.
    """
    baselines = load_baselines()
    base = baselines.get(key)
    if base is None:
        return BaselineCheck(key, float(value), None, True)
    return BaselineCheck(key, float(value), float(base), value <= base * BASELINE_SLACK)


# ---------------------------------------------------------------------------
# observables along integer sequences
# ---------------------------------------------------------------------------


def parity_observable(a_values: np.ndarray) -> np.ndarray:
    """(-1)^(a_n): the order-two rotation observable b(R^a 0)."""
    return np.where(np.asarray(a_values) % 2 == 0, 1.0, -1.0).astype(np.complex128)


def residue_character_observable(a_values: np.ndarray, modulus: int) -> np.ndarray:
    """e^{2 pi i a_n / m}: character of the rotation by one on Z/mZ."""
    residues = np.mod(np.asarray(a_values), modulus)
    return np.exp(2j * np.pi * residues / modulus)


def circle_flow_observable(c_values: np.ndarray, speed: float, y0: float = 0.0) -> np.ndarray:
    """e^{2 pi i (y0 + speed * c_n)}: unit character sampled along the flow
    orbit S_{c_n} y0 of the circle translation flow."""
    return np.exp(2j * np.pi * (y0 + speed * np.asarray(c_values, dtype=np.float64)))
