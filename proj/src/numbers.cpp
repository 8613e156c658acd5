// Copyright 2026 The bhatt Authors.
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

#include "bhatt/numbers.hpp"

#include <stdexcept>

namespace bhatt {

Integer binomial(long long n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  // C(n, i) = C(n, i-1) * (n - i + 1) / i, exact at every step.
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - i + 1;
    result /= i;
  }
  return result;
}

}  // namespace bhatt
