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

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "fermat/fermat_real.hpp"

namespace fermat::cli {

struct GraphPoint {
  double value;
  double t;
};

/// Samples of the planar curve {(st x + sum coeff_i t^(1/order_i), t) : 0 <= t < delta}.
/// The value sits on the horizontal axis and t on the vertical one, so a
/// standard real draws as a vertical line through its value.
struct GraphSample {
  double delta = 0.0;
  std::vector<GraphPoint> points;
};

/// Value of the representing function of x at parameter t >= 0.
double representing_value(const FermatReal& x, double t);

/// `samples` points t_k = delta * k / samples, k = 0..samples-1. Throws
/// DomainError unless delta > 0 and samples >= 2.
GraphSample sample_graph(const FermatReal& x, double delta, std::size_t samples);

/// CSV with header `value,t`, LF line endings, shortest round-trip decimals.
void write_csv(std::ostream& os, const GraphSample& g);

/// Standalone SVG 1.1 document: real axis, t axis labels, and the curve.
/// Output depends only on the inputs, so it is byte-stable.
void write_svg(std::ostream& os, const GraphSample& g, std::string_view label);

}  // namespace fermat::cli
