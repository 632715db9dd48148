// Copyright 2026 The fcshand Authors
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

#pragma once

#include <optional>

namespace fcshand {

// Smallest index k in [0, last] with pred(k) true, assuming pred is monotone
// (false...false true...true). Bisection over indices, O(log last) calls.
template <typename Pred>
std::optional<long> first_true_bisect(Pred&& pred, long last) {
  if (!pred(last)) return std::nullopt;
  if (pred(0)) return 0;
  long lo = 0;     // false
  long hi = last;  // true
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Linear scan counterpart; no monotonicity assumption.
template <typename Pred>
std::optional<long> first_true_scan(Pred&& pred, long last) {
  for (long k = 0; k <= last; ++k) {
    if (pred(k)) return k;
  }
  return std::nullopt;
}

}  // namespace fcshand
