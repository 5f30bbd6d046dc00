// Copyright 2026 The IRIS Simulator Authors
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

#ifndef IRIS_SRC_DYADIC_HPP
#define IRIS_SRC_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>

// Exact arithmetic over nonnegative dyadic rationals num * 2^exp2. Every
// finite double is one, so the digital decision routes can compare
// weighted counts without any rounding.
namespace iris::detail {

using BigInt = boost::multiprecision::cpp_int;

struct Dyadic {
  BigInt num;
  std::int64_t exp2 = 0;

  bool is_zero() const { return num == 0; }
};

inline Dyadic dyadic_from_double(double v) {
  if (!(std::isfinite(v)) || v < 0.0) {
    throw std::domain_error("dyadic_from_double: value must be finite and nonnegative");
  }
  if (v == 0.0) return Dyadic{0, 0};
  int e = 0;
  const double f = std::frexp(v, &e);  // v = f * 2^e, f in [0.5, 1)
  const auto mant = static_cast<std::int64_t>(std::ldexp(f, 53));
  return Dyadic{BigInt(mant), static_cast<std::int64_t>(e) - 53};
}

inline Dyadic mul(const Dyadic& a, const Dyadic& b) {
  return Dyadic{a.num * b.num, a.exp2 + b.exp2};
}

inline Dyadic mul_int(const Dyadic& a, std::int64_t k) { return Dyadic{a.num * k, a.exp2}; }

inline Dyadic add(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exp2, b.exp2);
  return Dyadic{(a.num << static_cast<unsigned>(a.exp2 - e)) +
                    (b.num << static_cast<unsigned>(b.exp2 - e)),
                e};
}

/// -1, 0, +1 as a < b, a == b, a > b.
inline int compare(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() && b.is_zero()) return 0;
  if (a.is_zero()) return b.is_zero() ? 0 : -1;
  if (b.is_zero()) return 1;
  const std::int64_t e = std::min(a.exp2, b.exp2);
  const BigInt an = a.num << static_cast<unsigned>(a.exp2 - e);
  const BigInt bn = b.num << static_cast<unsigned>(b.exp2 - e);
  if (an < bn) return -1;
  if (bn < an) return 1;
  return 0;
}

/// 1 - v for v in [0, 1].
inline Dyadic one_minus(const Dyadic& v) {
  if (v.is_zero()) return Dyadic{1, 0};
  if (v.exp2 > 0) throw std::domain_error("one_minus: value exceeds 1");
  const BigInt one_scaled = BigInt(1) << static_cast<unsigned>(-v.exp2);
  if (v.num > one_scaled) throw std::domain_error("one_minus: value exceeds 1");
  return Dyadic{one_scaled - v.num, v.exp2};
}

}  // namespace iris::detail

#endif  // IRIS_SRC_DYADIC_HPP
