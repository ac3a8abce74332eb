// Copyright 2026 The ccsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCSURF_MATCHING_H
#define CCSURF_MATCHING_H

#include <cstdint>
#include <vector>

namespace ccsurf {

enum class Matcher { Blossom, Greedy };

/// Symmetric non-negative costs on a complete graph with an even number of
/// nodes.
using CostMatrix = std::vector<std::vector<std::int64_t>>;

/// Minimum-cost perfect matching via Edmonds' weighted blossom algorithm.
/// Returns mate[i] for every node. Deterministic for a given matrix.
std::vector<int> min_weight_perfect_matching(const CostMatrix& cost);

/// Repeatedly matches the cheapest remaining pair, ties broken by lowest
/// (i, j). Fast but not optimal.
std::vector<int> greedy_perfect_matching(const CostMatrix& cost);

std::vector<int> perfect_matching(const CostMatrix& cost, Matcher matcher);

std::int64_t matching_cost(const CostMatrix& cost, const std::vector<int>& mate);

/// Maximum-weight matching on a general graph given as (u, v, weight)
/// triples. With max_cardinality set, only maximum-cardinality matchings
/// are considered. Returns mate[v] or -1.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    std::int64_t weight = 0;
};

std::vector<int> max_weight_matching(const std::vector<WeightedEdge>& edges, bool max_cardinality);

}  // namespace ccsurf

#endif
