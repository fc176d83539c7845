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

#pragma once

#include <iosfwd>
#include <string>

#include "fermat/fermat_real.hpp"

namespace fermat {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

/// Canonical text `<std> +- <c1>*dt[<b1>] +- ...` with strictly decreasing
/// orders, rational orders as p/q, coefficient 1 elided and a zero standard
/// part omitted unless the value is 0. parse + eval of the result gives back
/// the same value exactly.
std::string format(const FermatReal& x);

/// Potential form `<std> +- <c1>*t^(<a1>) +- ...` with ascending exponents.
std::string format_potential(const FermatReal& x);

std::ostream& operator<<(std::ostream& os, const FermatReal& x);

}  // namespace fermat
