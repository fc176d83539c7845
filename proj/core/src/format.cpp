// Copyright 2026 The Fermat Reals Authors
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

#include "fermat/format.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace fermat {

namespace {

template <typename Unit>
std::string join(const FermatReal& x, Unit unit) {
  std::string out;
  if (x.standard_part() != 0.0 || x.terms().empty()) out = format_double(x.standard_part());
  for (const auto& t : x.terms()) {
    const bool negative = std::signbit(t.coeff);
    const double magnitude = std::fabs(t.coeff);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1.0) out += format_double(magnitude) + "*";
    out += unit(t);
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string format(const FermatReal& x) {
  // terms are stored by ascending exponent, i.e. descending order
  return join(x, [](const Term& t) { return "dt[" + t.order().to_string() + "]"; });
}

std::string format_potential(const FermatReal& x) {
  return join(x, [](const Term& t) {
    return t.exp == Exponent(1) ? std::string("t") : "t^(" + t.exp.to_string() + ")";
  });
}

std::ostream& operator<<(std::ostream& os, const FermatReal& x) { return os << format(x); }

}  // namespace fermat
