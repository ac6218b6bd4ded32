// Copyright 2026 The lcadag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic subset enumeration.
//
// Within one cardinality, subsets come in colexicographic order, which is
// the ascending numeric order of their bitmasks. Across cardinalities the
// caller picks the direction:
//   - SizeOrder::ascending is used when searching for certificates, so the
//     smallest spanning set is the one reported;
//   - SizeOrder::descending is the canonical counterexample scan. Checkers
//     report the first failing set in this order, e.g. the 3-lca check on a
//     DAG whose pairs and triple both fail reports the triple.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lcadag/bitset.hpp"

namespace lcadag {

enum class SizeOrder { ascending, descending };

// Calls f(indices) for every r-combination of {0..m-1} in colex order.
// f returns false to stop; the function returns false iff stopped early.
template <typename F>
bool for_each_combination(std::size_t m, std::size_t r, F&& f) {
  if (r > m) return true;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    if (!f(std::span<const std::size_t>(c))) return false;
    // Advance: lowest position that can move up without colliding.
    std::size_t j = 0;
    while (j < r) {
      std::size_t limit = (j + 1 < r) ? c[j + 1] : m;
      if (c[j] + 1 < limit) break;
      ++j;
    }
    if (j == r) return true;
    ++c[j];
    for (std::size_t i = 0; i < j; ++i) c[i] = i;
  }
}

// Every subset T of `within` with min_size <= |T| <= max_size, in the given
// size order and colex within a size. f(const Subset&) returns false to stop.
template <typename Tag, typename F>
bool for_each_subset(const BasicBitset<Tag>& within, std::size_t min_size, std::size_t max_size,
                     SizeOrder order, F&& f) {
  const std::vector<std::size_t> pos = within.indices();
  if (max_size > pos.size()) max_size = pos.size();
  if (min_size > max_size) return true;
  auto run = [&](std::size_t r) {
    BasicBitset<Tag> t(within.size());
    return for_each_combination(pos.size(), r, [&](std::span<const std::size_t> idx) {
      t.clear();
      for (std::size_t i : idx) t.set(pos[i]);
      return f(static_cast<const BasicBitset<Tag>&>(t));
    });
  };
  if (order == SizeOrder::ascending) {
    for (std::size_t r = min_size; r <= max_size; ++r)
      if (!run(r)) return false;
  } else {
    for (std::size_t r = max_size + 1; r-- > min_size;)
      if (!run(r)) return false;
  }
  return true;
}

// The members of X^(k): every non-empty subset of an n-element ground set
// with at most k elements.
template <typename F>
bool for_each_small_subset(std::size_t n, std::size_t k, SizeOrder order, F&& f) {
  return for_each_subset(Subset::full(n), 1, k, order, std::forward<F>(f));
}

// Every non-empty subset of an n-element ground set.
template <typename F>
bool for_each_nonempty_subset(std::size_t n, SizeOrder order, F&& f) {
  return for_each_subset(Subset::full(n), 1, n, order, std::forward<F>(f));
}

}  // namespace lcadag
