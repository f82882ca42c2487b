# Copyright 2026 The burnkit Authors
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

"""Burning numbers of graphs: exact search, closed forms and unicyclic tables."""

from burnkit._burnkit import (
    Graph,
    InvalidInput,
    burning_number,
    check_sequence,
    enumerate_sweep,
    extract_partition,
    normalize_family,
    qr_decompose,
    sweep,
    verify_sequence,
)

__all__ = [
    "Graph",
    "InvalidInput",
    "burning_number",
    "check_sequence",
    "enumerate_sweep",
    "extract_partition",
    "normalize_family",
    "qr_decompose",
    "sweep",
    "verify_sequence",
]
