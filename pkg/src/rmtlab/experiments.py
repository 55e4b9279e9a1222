"""Named, seeded experiments, each checking one distributional identity or
limit, and the replicate runner they share.

Replicate ``r`` of an experiment draws from ``RngStream(seed, r)`` (with
``child`` sub-streams for the independent samples being compared). Work is
cut into fixed blocks of replicates, so output does not depend on the number
of worker processes.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable

import numpy as np
from scipy import special

from rmtlab import ensembles, linalg, lpp, pathfun, rsk
from rmtlab.errors import ValidationError
from rmtlab.rng import RngStream
from rmtlab.stats import KsResult, ks_against_cdf, ks_two_sample, moment_summary

BLOCK = 250
# grid sups undershoot by O(sqrt(1/steps)) per path switch; 2000 steps leaves a
# KS-visible bias at N = 4, 8000 does not
DEFAULT_STEPS = 8000


def replicate_map(kernel: Callable, count: int, seed: int, workers: int = 1, offset: int = 0) -> np.ndarray:
    """Run ``kernel(seed, start, stop)`` over blocks of replicate ids and stack in order."""
    blocks = [(offset + a, offset + min(a + BLOCK, count)) for a in range(0, count, BLOCK)]
    if workers <= 1 or len(blocks) == 1:
        parts = [kernel(seed, a, b) for a, b in blocks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_call_block, itertools.repeat(kernel), itertools.repeat(seed), blocks))
    return np.concatenate(parts, axis=0)


def _call_block(kernel, seed, block):
    return kernel(seed, *block)


# -- per-block kernels (module level so they pickle) -------------------------


def _gue_spectra(n, channel, seed, start, stop):
    return np.array([linalg.eigenvalues_sorted(ensembles.sample_gue(n, RngStream(seed, r).child(channel)))
                     for r in range(start, stop)])


def _lue_spectra(n, m, channel, seed, start, stop):
    return np.array([linalg.eigenvalues_sorted(ensembles.sample_lue(n, m, RngStream(seed, r).child(channel)))
                     for r in range(start, stop)])


def _rescaled_lue_max(n, m, channel, seed, start, stop):
    out = np.empty(stop - start)
    for i, r in enumerate(range(start, stop)):
        y = ensembles.sample_lue(n, m, RngStream(seed, r).child(channel))
        out[i] = linalg.eigenvalues_sorted(ensembles.rescale_lue(y, m))[-1]
    return out


def _lpp_disjoint_all(m, n, channel, seed, start, stop):
    grids = np.stack([ensembles.sample_exp_grid(m, n, RngStream(seed, r).child(channel))
                      for r in range(start, stop)])
    return np.stack([lpp.last_passage_disjoint(grids, k) for k in range(1, n + 1)], axis=-1)


def _geom_top(m, n, q, channel, seed, start, stop):
    scale = 1.0 - q
    out = np.empty(stop - start)
    for i, r in enumerate(range(start, stop)):
        a = ensembles.sample_geom_matrix(m, n, q, RngStream(seed, r).child(channel))
        shape = rsk.rsk_shape(a)
        out[i] = rsk.h_form(shape, n)[0] * scale
    return out


def _bundles(n, steps, channel, seed, start, stop):
    return np.stack([pathfun.sample_bm_bundle(n, steps, RngStream(seed, r).child(channel))
                     for r in range(start, stop)])


def _omega_block(n, k, steps, channel, seed, start, stop):
    return pathfun.omega_k(_bundles(n, steps, channel, seed, start, stop), k)


def _gamma_terminal(n, steps, channel, seed, start, stop):
    return pathfun.gamma(_bundles(n, steps, channel, seed, start, stop))[..., -1]


def _gamma_top_block(n, k, steps, channel, seed, start, stop):
    return pathfun.gamma_top_sum(_bundles(n, steps, channel, seed, start, stop), k)


def _shared_bundle_discrepancy(n, k, steps, channel, seed, start, stop):
    b = _bundles(n, steps, channel, seed, start, stop)
    g = pathfun.gamma_top_sum(b, k)
    return np.stack([g - pathfun.omega_k(b, k), g - pathfun.omega_k(b[..., ::-1, :], k)], axis=-1)


def _laguerre_diag(n, m, times, channel, seed, start, stop):
    grid = np.concatenate([[0.0], times])
    out = np.empty((stop - start, len(times)))
    for i, r in enumerate(range(start, stop)):
        path = ensembles.sample_laguerre_path(n, m, grid, RngStream(seed, r).child(channel))
        z = ensembles.rescale_laguerre_path(path, m)
        out[i] = z.values[1:, 0, 0].real
    return out


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class Param:
    kind: type
    default: Any
    check: Callable[[Any], bool]
    rule: str


def _pos(v):
    return v >= 1


def _prob(v):
    return 0.0 < v < 1.0


@dataclass(frozen=True)
class Experiment:
    name: str
    claim: str
    params: dict[str, Param]
    thresholds: dict[str, float]
    primary: str
    body: Callable
    cross_checks: tuple[Callable[[dict], str | None], ...] = field(default=())


@dataclass
class Outcome:
    ks: dict[str, KsResult] = field(default_factory=dict)
    moments: dict[str, Any] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)
    passed: bool = False
    samples: dict[str, np.ndarray] = field(default_factory=dict)


def _moments(values) -> dict[str, float]:
    m = moment_summary(values)
    return {"mean": m.mean, "variance": m.variance, "standard_error": m.standard_error}


def greene_verify(p, th, seed, workers) -> Outcome:
    mismatches = 0
    checked = 0
    for m in range(1, p["m"] + 1):
        for n in range(1, p["n"] + 1):
            grids = np.array(list(itertools.product(range(p["entry_max"] + 1), repeat=m * n)),
                             dtype=np.int64).reshape(-1, m, n)
            mismatches += _greene_mismatches(grids)
            checked += len(grids)
    side = p["random_size"]
    rand = np.stack([RngStream(seed, r).generator().integers(0, p["random_entry_max"] + 1, size=(side, side))
                     for r in range(p["samples"])])
    mismatches += _greene_mismatches(rand)
    checked += len(rand)
    return Outcome(details={"grids_checked": checked, "mismatches": int(mismatches)}, passed=mismatches == 0)


def _greene_mismatches(grids: np.ndarray) -> int:
    n = grids.shape[-1]
    shapes = [rsk.rsk_shape(g) for g in grids]
    bad = 0
    for k in range(1, n + 1):
        partial_sums = np.array([sum(s[:k]) for s in shapes])
        bad += int(np.sum(lpp.brute_force_disjoint(grids, k) != partial_sums))
    return bad


def rsk_count_verify(p, th, seed, workers) -> Outcome:
    checked = bad = 0
    for size in range(p["max_size"] + 1):
        for shape in rsk.partitions(size):
            for m in range(1, p["m"] + 1):
                for n in range(1, p["n"] + 1):
                    checked += 1
                    if rsk.l_count(shape, m, n) != rsk.ssyt_count(shape, m) * rsk.ssyt_count(shape, n):
                        bad += 1
    return Outcome(details={"cases_checked": checked, "mismatches": bad}, passed=bad == 0)


def exact_laws(p, th, seed, workers) -> Outcome:
    m, count, trials = p["m"], p["samples"], p["trials"]
    lue_p, exp_p = [], []
    for t in range(trials):
        stream = RngStream(seed, t)
        lue = ensembles.sample_lue(1, m, stream.child(0), size=count)[:, 0, 0].real
        cells = ensembles.sample_exp_grid(1, 1, stream.child(1), size=count)[:, 0, 0]
        lue_p.append(ks_against_cdf(lue, lambda x: special.gammainc(m, np.maximum(x, 0))).p_value)
        exp_p.append(ks_against_cdf(cells, lambda x: -np.expm1(-np.maximum(x, 0))).p_value)
    alpha = th["alpha"]
    frac_lue = float(np.mean(np.array(lue_p) > alpha))
    frac_exp = float(np.mean(np.array(exp_p) > alpha))
    return Outcome(
        details={"p_values_lue": lue_p, "p_values_exp": exp_p,
                 "fraction_above_alpha_lue": frac_lue, "fraction_above_alpha_exp": frac_exp},
        passed=frac_lue >= th["min_fraction"] and frac_exp >= th["min_fraction"],
    )


def clt_static(p, th, seed, workers) -> Outcome:
    n, m, count = p["n"], p["m"], p["samples"]
    lue = replicate_map(partial(_rescaled_lue_max, n, m, 0), count, seed, workers)
    gue = replicate_map(partial(_gue_spectra, n, 1), count, seed, workers)[:, -1]
    ks = ks_two_sample(lue, gue)
    return Outcome(ks={"lambda_max": ks}, moments={"rescaled_lue_max": _moments(lue), "gue_max": _moments(gue)},
                   passed=ks.statistic < th["ks"], samples={"rescaled_lue_max": lue, "gue_max": gue})


def clt_process(p, th, seed, workers) -> Outcome:
    n, m, count = p["n"], p["m"], p["samples"]
    times = (0.5, 1.0)
    diag = replicate_map(partial(_laguerre_diag, n, m, times, 0), count, seed, workers)
    moments, rel = {}, {}
    for i, t in enumerate(times):
        moments[f"t={t}"] = _moments(diag[:, i])
        rel[f"t={t}"] = abs(moments[f"t={t}"]["variance"] / t**2 - 1.0)
    return Outcome(moments=moments, details={"relative_variance_error": rel, "target_variance": [t**2 for t in times]},
                   passed=all(v <= th["rel_tol"] for v in rel.values()),
                   samples={f"z11_t{t}": diag[:, i] for i, t in enumerate(times)})


def density_convergence(p, th, seed, workers) -> Outcome:
    h = np.diag([0.5, -0.5])
    target = math.exp(ensembles.log_density_gue(h))
    errors = {}
    for exponent in (2, 4, 6):
        mm = 10**exponent
        errors[str(mm)] = abs(math.exp(ensembles.log_density_psi_m(h, mm)) - target) / target
    vals = list(errors.values())
    decreasing = all(a > b for a, b in zip(vals, vals[1:]))
    return Outcome(details={"relative_error": errors, "gue_density": target},
                   passed=decreasing and vals[-1] < th["rel_tol"])


def lpp_vs_lue(p, th, seed, workers) -> Outcome:
    n, m, count = p["n"], p["m"], p["samples"]
    h = replicate_map(partial(_lpp_disjoint_all, m, n, 0), count, seed, workers)[:, 0]
    mu = replicate_map(partial(_lue_spectra, n, m, 1), count, seed, workers)[:, -1]
    ks = ks_two_sample(h, mu)
    return Outcome(ks={"H_vs_mu_max": ks}, moments={"H": _moments(h), "mu_max": _moments(mu)},
                   passed=ks.p_value > th["alpha"], samples={"H": h, "mu_max": mu})


def lppk_vs_lue(p, th, seed, workers) -> Outcome:
    n, m, count = p["n"], p["m"], p["samples"]
    ks_values = [p["k"]] if p["k"] else list(range(1, n + 1))
    hk = replicate_map(partial(_lpp_disjoint_all, m, n, 0), count, seed, workers)
    spectra = replicate_map(partial(_lue_spectra, n, m, 1), count, seed, workers)
    out = Outcome()
    for k in ks_values:
        top = spectra[:, n - k:].sum(axis=1)
        out.ks[f"k={k}"] = ks_two_sample(hk[:, k - 1], top)
        out.moments[f"H_{k}"] = _moments(hk[:, k - 1])
        out.moments[f"top_{k}_sum"] = _moments(top)
        out.samples[f"H_{k}"] = hk[:, k - 1]
        out.samples[f"top_{k}_sum"] = top
    out.passed = all(r.p_value > th["alpha"] for r in out.ks.values())
    return out


def geom_limit(p, th, seed, workers) -> Outcome:
    n, m, q, count = p["n"], p["m"], p["q"], p["samples"]
    top = replicate_map(partial(_geom_top, m, n, q, 0), count, seed, workers)
    mu = replicate_map(partial(_lue_spectra, n, m, 1), count, seed, workers)[:, -1]
    ks = ks_two_sample(top, mu)
    return Outcome(ks={"h1_over_L_vs_mu_max": ks}, moments={"h1_over_L": _moments(top), "mu_max": _moments(mu)},
                   details={"L": 1.0 / (1.0 - q)}, passed=ks.statistic < th["ks"],
                   samples={"h1_over_L": top, "mu_max": mu})


def omega1_vs_gue(p, th, seed, workers) -> Outcome:
    n, steps, count = p["n"], p["steps"], p["samples"]
    om = replicate_map(partial(_omega_block, n, 1, steps, 0), count, seed, workers)
    lam = replicate_map(partial(_gue_spectra, n, 1), count, seed, workers)[:, -1]
    ks = ks_two_sample(om, lam)
    return Outcome(ks={"omega_1_vs_lambda_max": ks}, moments={"omega_1": _moments(om), "lambda_max": _moments(lam)},
                   passed=ks.statistic < th["ks"], samples={"omega_1": om, "lambda_max": lam})


def omegak_vs_gue(p, th, seed, workers) -> Outcome:
    n, k, steps, count = p["n"], p["k"], p["steps"], p["samples"]
    om = replicate_map(partial(_omega_block, n, k, steps, 0), count, seed, workers)
    top = replicate_map(partial(_gue_spectra, n, 1), count, seed, workers)[:, n - k:].sum(axis=1)
    ks = ks_two_sample(om, top)
    return Outcome(ks={f"omega_{k}_vs_top_{k}_sum": ks},
                   moments={f"omega_{k}": _moments(om), f"top_{k}_sum": _moments(top)},
                   passed=ks.statistic < th["ks"], samples={f"omega_{k}": om, f"top_{k}_sum": top})


def gamma_vs_gue(p, th, seed, workers) -> Outcome:
    n, steps, count = p["n"], p["steps"], p["samples"]
    g = replicate_map(partial(_gamma_terminal, n, steps, 0), count, seed, workers)
    lam = replicate_map(partial(_gue_spectra, n, 1), count, seed, workers)
    out = Outcome()
    for i in range(n):
        out.ks[f"component_{i + 1}"] = ks_two_sample(g[:, i], lam[:, i])
        out.moments[f"gamma_{i + 1}"] = _moments(g[:, i])
        out.moments[f"lambda_{i + 1}"] = _moments(lam[:, i])
        out.samples[f"gamma_{i + 1}"] = g[:, i]
        out.samples[f"lambda_{i + 1}"] = lam[:, i]
    ordered = float(np.mean(np.all(np.diff(g, axis=1) >= 0, axis=1)))
    out.details["fraction_ordered"] = ordered
    out.passed = all(r.statistic < th["ks"] for r in out.ks.values())
    return out


def gamma_vs_omega(p, th, seed, workers) -> Outcome:
    n, k, steps, count = p["n"], p["k"], p["steps"], p["samples"]
    g = replicate_map(partial(_gamma_top_block, n, k, steps, 0), count, seed, workers)
    om = replicate_map(partial(_omega_block, n, k, steps, 1), count, seed, workers)
    ks = ks_two_sample(g, om)
    shared = replicate_map(partial(_shared_bundle_discrepancy, n, k, steps, 2), p["shared_samples"], seed, workers)
    absdiff = np.abs(shared)
    details = {
        "pathwise_max_discrepancy": float(absdiff[:, 0].max()),
        "pathwise_fraction_equal": float(np.mean(absdiff[:, 0] <= 1e-9)),
        "pathwise_max_discrepancy_reversed_order": float(absdiff[:, 1].max()),
        "pathwise_fraction_equal_reversed_order": float(np.mean(absdiff[:, 1] <= 1e-9)),
        "shared_bundles": int(p["shared_samples"]),
    }
    return Outcome(ks={f"gamma_top_{k}_vs_omega_{k}": ks},
                   moments={"gamma_top_sum": _moments(g), "omega_k": _moments(om)},
                   details=details, passed=ks.statistic < th["ks"],
                   samples={"gamma_top_sum": g, "omega_k": om})


def omega_oracle(p, th, seed, workers) -> Outcome:
    worst = 0.0
    checked = 0
    for r in range(p["samples"]):
        gen = RngStream(seed, r).generator()
        n = int(gen.integers(1, p["n"] + 1))
        steps = int(gen.integers(1, p["steps"] + 1))
        b = pathfun.sample_bm_bundle(n, steps, gen)
        for k in range(1, min(n, p["k"]) + 1):
            worst = max(worst, abs(pathfun.omega_k(b, k) - pathfun.brute_force_omega(b, k)))
            checked += 1
        worst = max(worst, abs(pathfun.omega_1(b) - pathfun.brute_force_omega(b, 1)))
    return Outcome(details={"max_abs_error": worst, "cases_checked": checked}, passed=worst <= th["atol"])


def _int(default, check=_pos, rule=">= 1"):
    return Param(int, default, check, rule)


REGISTRY: dict[str, Experiment] = {}


def _register(name, claim, params, thresholds, primary, body, cross_checks=()):
    REGISTRY[name] = Experiment(name, claim, params, thresholds, primary, body, tuple(cross_checks))


def _m_ge_n(p):
    return None if p["m"] >= p["n"] else "m must be >= n"


def _k_le_n(p):
    return None if not p.get("k") or p["k"] <= p["n"] else "k must be <= n"


_register("greene-verify", "RSK shape partial sums equal k-disjoint-path maxima (Greene)",
          {"m": _int(3), "n": _int(3), "entry_max": Param(int, 2, lambda v: v >= 0, ">= 0"),
           "samples": Param(int, 200, lambda v: v >= 0, ">= 0"),
           "random_size": Param(int, 4, lambda v: 1 <= v and v * v <= lpp.BRUTE_FORCE_MAX_SITES, "side^2 <= 16"),
           "random_entry_max": Param(int, 5, lambda v: v >= 0, ">= 0")},
          {}, "mismatches", greene_verify,
          [lambda p: None if p["m"] * p["n"] <= lpp.BRUTE_FORCE_MAX_SITES else "m*n must be <= 16"])
_register("rsk-count-verify", "closed product formula for the number of matrices with a given RSK shape",
          {"max_size": Param(int, 4, lambda v: v >= 0, ">= 0"), "m": _int(3), "n": _int(3)},
          {}, "mismatches", rsk_count_verify)
_register("exact-laws", "LUE(1,m) is Gamma(m, 1) and grid cells are Exp(1), one-sample KS",
          {"m": _int(5), "samples": _int(10_000), "trials": _int(20)},
          {"alpha": 0.01, "min_fraction": 0.95}, "min_fraction", exact_laws)
_register("clt-static", "(LUE(n,m) - m I)/sqrt(m) -> GUE(n): KS on the largest eigenvalue",
          {"n": _int(3), "m": _int(2000), "samples": _int(20_000)},
          {"ks": 0.03}, "ks", clt_static, [_m_ge_n])
_register("clt-process", "rescaled Laguerre process diagonal entry has variance t^2",
          {"n": _int(2), "m": _int(2000), "samples": _int(10_000)},
          {"rel_tol": 0.05}, "rel_tol", clt_process, [_m_ge_n])
_register("density-convergence", "rescaled LUE density converges to the GUE density at diag(0.5, -0.5)",
          {}, {"rel_tol": 0.01}, "rel_tol", density_convergence)
_register("lpp-vs-lue", "exponential last-passage time H(m,n) has the law of the LUE(n,m) top eigenvalue",
          {"n": _int(3), "m": _int(5), "samples": _int(10_000)},
          {"alpha": 0.001}, "alpha", lpp_vs_lue, [_m_ge_n])
_register("lppk-vs-lue", "k-disjoint-path last passage has the law of the top-k LUE eigenvalue sum",
          {"n": _int(3), "m": _int(5), "k": Param(int, 0, lambda v: v >= 0, ">= 0 (0 = all k)"),
           "samples": _int(10_000)},
          {"alpha": 0.001}, "alpha", lppk_vs_lue, [_m_ge_n, _k_le_n])
_register("geom-limit", "RSK shape of geometric(1 - 1/L) matrices, scaled by 1/L, tends to the LUE spectrum",
          {"n": _int(2), "m": _int(3), "q": Param(float, 0.995, _prob, "in (0, 1)"), "samples": _int(10_000)},
          {"ks": 0.04}, "ks", geom_limit, [_m_ge_n])
_register("omega1-vs-gue", "Brownian last-passage functional has the law of the GUE top eigenvalue",
          {"n": _int(4), "steps": _int(DEFAULT_STEPS), "samples": _int(10_000)},
          {"ks": 0.03}, "ks", omega1_vs_gue)
_register("omegak-vs-gue", "k-walker Brownian functional has the law of the top-k GUE eigenvalue sum",
          {"n": _int(4), "k": _int(2), "steps": _int(DEFAULT_STEPS), "samples": _int(10_000)},
          {"ks": 0.03}, "ks", omegak_vs_gue, [_k_le_n])
_register("gamma-vs-gue", "terminal values of the inf/sup path transform have the law of the ordered GUE spectrum",
          {"n": Param(int, 3, lambda v: v >= 2, ">= 2"), "steps": _int(DEFAULT_STEPS), "samples": _int(10_000)},
          {"ks": 0.03}, "ks", gamma_vs_gue)
_register("gamma-vs-omega", "top-k sums of the path transform vs the k-walker functional (law; pathwise reported only)",
          {"n": Param(int, 3, lambda v: v >= 2, ">= 2"), "k": _int(2), "steps": _int(DEFAULT_STEPS), "samples": _int(10_000),
           "shared_samples": _int(1000)},
          {"ks": 0.03}, "ks", gamma_vs_omega, [_k_le_n])
_register("omega-oracle", "walker DP equals exhaustive nested-subdivision enumeration",
          {"n": Param(int, 3, lambda v: 1 <= v <= 3, "1..3"), "k": Param(int, 2, lambda v: 1 <= v <= 3, "1..3"),
           "steps": Param(int, 5, lambda v: 1 <= v <= 6, "1..6"), "samples": _int(100)},
          {"atol": 1e-9}, "atol", omega_oracle)


def list_experiments() -> list[dict[str, Any]]:
    return [
        {
            "name": e.name,
            "claim": e.claim,
            "parameters": {k: {"type": p.kind.__name__, "default": p.default, "rule": p.rule}
                           for k, p in e.params.items()},
            "thresholds": dict(e.thresholds),
        }
        for e in REGISTRY.values()
    ]


def resolve_params(name: str, given: dict[str, Any]) -> dict[str, Any]:
    if name not in REGISTRY:
        raise ValidationError(f"unknown experiment {name!r}; known: {', '.join(REGISTRY)}")
    exp = REGISTRY[name]
    unknown = sorted(set(given) - set(exp.params))
    if unknown:
        raise ValidationError(f"{name} does not take parameter(s): {', '.join(unknown)}")
    params = {}
    for key, spec in exp.params.items():
        value = given.get(key, spec.default)
        try:
            value = spec.kind(value)
        except (TypeError, ValueError):
            raise ValidationError(f"{key} must be {spec.kind.__name__}") from None
        if not spec.check(value):
            raise ValidationError(f"{key}={value} violates {spec.rule}")
        params[key] = value
    for check in exp.cross_checks:
        msg = check(params)
        if msg:
            raise ValidationError(msg)
    return params


def _ks_dict(ks: dict[str, KsResult]) -> tuple[dict, dict]:
    return ({k: v.statistic for k, v in ks.items()}, {k: v.p_value for k, v in ks.items()})


def run(name: str, params: dict[str, Any] | None = None, seed: int = 0, workers: int = 1,
        threshold: float | None = None) -> tuple[dict[str, Any], dict[str, np.ndarray]]:
    """Run one experiment; return the JSON-ready report and the raw samples."""
    params = resolve_params(name, params or {})
    if int(workers) < 1:
        raise ValidationError("workers must be >= 1")
    RngStream(seed)  # validates the seed range
    exp = REGISTRY[name]
    thresholds = dict(exp.thresholds)
    if threshold is not None:
        if exp.primary not in thresholds:
            raise ValidationError(f"{name} is an exact check and has no tunable threshold")
        thresholds[exp.primary] = float(threshold)
    start = time.perf_counter()
    outcome = exp.body(params, thresholds, int(seed), int(workers))
    elapsed = (time.perf_counter() - start) * 1000.0
    stats_, pvals = _ks_dict(outcome.ks)
    report = {
        "experiment": name,
        "parameters": params,
        "ks_statistic": stats_,
        "p_value": pvals,
        "moments": outcome.moments,
        "details": outcome.details,
        "thresholds": thresholds,
        "pass": bool(outcome.passed),
        "elapsed_ms": round(elapsed, 3),
        "seed": int(seed),
    }
    return report, outcome.samples
