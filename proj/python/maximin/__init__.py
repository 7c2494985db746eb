# Copyright 2026 The Maximin Authors.
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

"""Approximate maximin-share allocation with exact rational arithmetic."""

import json

from maximin._core import (
    generate,
    is_ef1,
    is_efx,
    mms_exact,
    mms_exact_table,
    multilinear_exact,
    multilinear_monte_carlo,
    solve_additive,
    solve_chores,
    solve_report,
    verify_report,
    verify_submodular,
)

__all__ = [
    "generate",
    "is_ef1",
    "is_efx",
    "mms_exact",
    "mms_exact_table",
    "multilinear_exact",
    "multilinear_monte_carlo",
    "solve",
    "solve_additive",
    "solve_chores",
    "solve_report",
    "verify",
    "verify_report",
    "verify_submodular",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def solve(instance, command, delta="1/20"):
    """Solves an instance (dict or file text) and returns the report dict."""
    return json.loads(solve_report(_text(instance), command, str(delta)))


def verify(instance, delta="1/20"):
    """Checks the allocation stored in an instance; returns the report dict."""
    return json.loads(verify_report(_text(instance), str(delta)))
