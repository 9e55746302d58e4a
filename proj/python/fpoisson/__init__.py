"""Limiting spectral moments of sample covariance matrices.

Exact noncrossing-partition moment predictions, seeded Monte Carlo
simulation of random-vector ensembles, and brute-force verification of the
two-cover graph lemmas. Thin wrapper over the compiled `_core` module;
report-producing runners return parsed dictionaries.
"""

import json as _json

from fpoisson import _core
from fpoisson._core import (
    ArityError,
    ConfigError,
    ExperimentError,
    HypothesisError,
    NumericalError,
    PreconditionError,
    SizeLimitError,
    ValidationError,
    __version__,
    assemble,
    bell_number,
    binomial_moment,
    build_matching_lemma24,
    catalan_number,
    check_lemma21,
    check_lemma22,
    check_lemma23,
    check_lemma25,
    classical_moment,
    enumerate_noncrossing,
    enumerate_set_partitions,
    esd_histogram,
    estimate_cumulant_deviation,
    estimate_l4_constant,
    estimate_norm_moments,
    free_cumulants_from_moments,
    free_moment,
    free_moments_up_to,
    has_interval_block,
    is_noncrossing,
    kernel,
    mc_moments,
    partition_contribution,
    predicted_cumulants,
    random_two_cover,
    sample_vectors,
    set_max_threads,
    sorted_residuals,
    spectrum,
    trace_moments,
    trace_moments_oracle,
)


def predict_table(p_max, cumulants):
    """Rows of {p, predicted_free, predicted_classical}."""
    return _json.loads(_core.predict_table(p_max, cumulants))["rows"]


def run_lemma_suite(seed, random_count=1000, exhaustive=True):
    return _json.loads(_core.run_lemma_suite(seed, random_count, exhaustive))


def run_convergence(ensemble, lambda_, n_grid, p_max, trials, seed, **kwargs):
    return _json.loads(
        _core.run_convergence(ensemble, lambda_, n_grid, p_max, trials, seed, **kwargs)
    )


def run_counterexample(n_grid, p_max, trials, seed):
    return _json.loads(_core.run_counterexample(n_grid, p_max, trials, seed))


def run_crossing_decay(blocks, ensemble, lambda_, n_grid, trials, seed, **kwargs):
    return _json.loads(
        _core.run_crossing_decay(blocks, ensemble, lambda_, n_grid, trials, seed, **kwargs)
    )


__all__ = [name for name in dir() if not name.startswith("_")]
