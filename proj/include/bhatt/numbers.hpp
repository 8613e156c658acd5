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

#ifndef BHATT_NUMBERS_HPP
#define BHATT_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace bhatt {

// All lengths and polynomial coefficients are exact. Table values grow like
// degree-d polynomials in (r, s), so nothing here is allowed to wrap.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) for n >= 0, k >= 0; zero when k > n.
Integer binomial(long long n, int k);

}  // namespace bhatt

#endif  // BHATT_NUMBERS_HPP
