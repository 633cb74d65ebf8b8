# Copyright 2026 The twofactor Authors.
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

"""Pseudo 2-factor isomorphism toolkit for cubic graphs."""

import json

from ._twofactor import (
    Graph,
    TwofactorError,
    automorphism_group_order,
    canonical_form,
    classify_json,
    constituents,
    count_perfect_matchings,
    cyclic_edge_connectivity,
    edge_connectivity,
    generate,
    girth,
    is_bipartite,
    is_connected,
    is_essentially_4_edge_connected,
    is_isomorphic,
    lifts,
    named,
    named_graphs,
)

__all__ = [
    "Graph",
    "TwofactorError",
    "automorphism_group_order",
    "canonical_form",
    "classify",
    "constituents",
    "count_perfect_matchings",
    "cyclic_edge_connectivity",
    "edge_connectivity",
    "generate",
    "girth",
    "is_bipartite",
    "is_connected",
    "is_essentially_4_edge_connected",
    "is_isomorphic",
    "lifts",
    "named",
    "named_graphs",
    "parse_graph6",
]


def parse_graph6(text):
    """Decodes one graph6 string."""
    return Graph.from_graph6(text.strip())


def classify(graph, mode="exhaustive", workers=1, seed=1, max_seconds=0.0,
             max_attempts=0, prune=True):
    """Classifies a connected cubic graph and returns the report as a dict.

    Verdicts are True, False or None (undecided within the budget).
    """
    if isinstance(graph, str):
        graph = parse_graph6(graph)
    return json.loads(classify_json(graph, mode, workers, seed, max_seconds,
                                    max_attempts, prune))
