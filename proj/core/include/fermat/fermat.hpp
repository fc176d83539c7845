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

/**
 * @file fermat.hpp
 * @brief Umbrella header for the Fermat reals library.
 *
 * @code
 * #include <fermat/fermat.hpp>
 *
 * using namespace fermat;
 * FermatReal x = 1.0 + dt(2);
 * FermatReal y = invert(x);              // 1 - dt[2] + dt[1]
 * FermatReal s = eval(parse("sin(h)"), {{"h", dt(3)}});
 * format(s);                             // "dt[3] - 0.16666666666666666*dt[1]"
 * compare(dt(2), 3.0 * dt(1));           // Verdict::GT
 * @endcode
 */

#include "fermat/calculus.hpp"
#include "fermat/elementary.hpp"
#include "fermat/errors.hpp"
#include "fermat/exponent.hpp"
#include "fermat/expr.hpp"
#include "fermat/fermat_real.hpp"
#include "fermat/format.hpp"
#include "fermat/order.hpp"
