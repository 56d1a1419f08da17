# Copyright 2026 The gra-engine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Graph-rewriting automata on binary-state 3-regular graphs."""

import json as _json

from . import _core
from ._core import (
    EvolutionTrace,
    GraError,
    Graph,
    Rule,
    StepOutcome,
    apply_divisions,
    canonical_g0,
    complement_rule,
    complement_states,
    configuration_census,
    configuration_vector,
    decode,
    divide_vertex,
    encode,
    evolve,
    export_graph,
    format_graph_text,
    graph_digest,
    increment_periodicity,
    increment_support,
    k4_one_alive,
    load_initial_graph,
    parse_graph_text,
    parse_rule_number,
    preset_names,
    reference_step_dense,
    single_division_subset,
    state_fingerprint,
    step,
    zero_growth_intervals,
)

__version__ = "0.1.0"


def error_code(exc):
    """Library error code ("Parse", "ConfigMismatch", ...) of a GraError."""
    return exc.args[1] if len(exc.args) > 1 else None


def classify(trace_or_orders, cycle_period=None, **thresholds):
    """Growth classification as a dict.

    Accepts an EvolutionTrace or a plain sequence of orders; keyword
    arguments override classifier thresholds (linear_r2, fit_fraction, ...).
    """
    t = _json.dumps(thresholds)
    if isinstance(trace_or_orders, EvolutionTrace):
        return _json.loads(_core._classify(trace_or_orders, t))
    return _json.loads(_core._classify_orders(list(trace_or_orders), cycle_period, t))


def fit_growth(orders, begin=0, end=None, time_origin=0.0, nonlinear_refinement=False):
    """Linear, power and exponential least-squares fits over orders[begin:end]."""
    orders = list(orders)
    end = len(orders) if end is None else end
    return _json.loads(
        _core._fit_growth(orders, begin, end, time_origin, nonlinear_refinement))


def run_sweep(rules, initial=None, initial_name="custom", max_steps=1000,
              max_order=5_000_000, wall_clock_seconds=60.0, cycle_window=100_000,
              thresholds=None, workers=1, journal=None, resume=False):
    """Evolve and classify each rule from a shared initial graph.

    Returns the consolidated report as a dict. With resume=True the journal
    is completed instead of started afresh.
    """
    return _json.loads(_core._run_sweep(
        list(rules), initial, initial_name, max_steps, max_order,
        wall_clock_seconds, cycle_window, _json.dumps(thresholds or {}),
        workers, journal, resume))


def preset(name):
    """Shipped sweep preset as a dict."""
    return _json.loads(_core._preset_text(name))

