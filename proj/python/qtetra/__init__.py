# Copyright 2026 The qtetra Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum tetrahedra toolkit."""

import json as _json

from ._qtetra import (
    amplitude_sweep,
    bloch_state,
    cg_coefficient,
    closure_defect,
    dihedral_closed_form,
    dihedral_expectation,
    fluctuation,
    fluctuation_from_operators,
    invariant_projector_rank,
    named_states,
    reconstruct,
    regular_points,
    run_command,
    simulate_experiment_json,
    table1,
    vertex_amplitude,
    vertex_amplitude_bruteforce,
)


def simulate_experiment(states, p=0.02, sd=0.05, seed=20190425, epsilon=1e-5):
    """Experiment report as a dict."""
    return _json.loads(simulate_experiment_json(list(states), p, sd, seed, epsilon))


__version__ = "0.1.0"
