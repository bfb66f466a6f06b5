"""Cointegration toolkit for regional price panels (C++ core)."""

import json

from ._core import (
    DataError,
    Error,
    ModelError,
    NumericalError,
    adf_test,
    fit_var,
    fit_vecm,
    granger,
    johansen,
    johansen_pvalue,
    lag_order_selection,
    mackinnon_pvalue,
    pairwise_lop,
    pp_test,
    restriction_test,
    run_pipeline_json,
    simulate,
    weak_exogeneity_test,
)


def run_pipeline(config, out_dir=None):
    """Run the full analysis for a config file and return the summary as a dict.

    Tables are written to `out_dir` when it is given.
    """
    return json.loads(run_pipeline_json(str(config), None if out_dir is None else str(out_dir)))

