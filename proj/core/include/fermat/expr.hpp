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

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/exponent.hpp"
#include "fermat/fermat_real.hpp"

namespace fermat {

/// Variable bindings used by eval.
using Env = std::map<std::string, FermatReal, std::less<>>;

/// Immutable expression tree. Copies share nodes.
///
/// Grammar (see docs/grammar.ebnf):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := number | 'dt' '[' order ']' | name '(' args ')' | name
///              | '(' expr ')'
class Expr {
 public:
  enum class Kind { Number, Dt, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

  static Expr number(double value, bool natural_literal = false);
  static Expr dt(Exponent order);
  static Expr variable(std::string name);
  static Expr negate(Expr operand);
  static Expr binary(Kind op, Expr lhs, Expr rhs);
  static Expr call(std::string function, std::vector<Expr> args);

  Kind kind() const;
  /// Number literal value.
  double number() const;
  /// True for a literal written with digits only, e.g. "3" but not "3.0".
  bool is_natural_literal() const;
  /// Order of a dt literal.
  const Exponent& dt_order() const;
  /// Variable or function name.
  const std::string& name() const;
  /// Operands of unary/binary operators and call arguments.
  const std::vector<Expr>& children() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses expression text. Throws ParseError (with the offset of the first
/// offending byte) on malformed input and NonPositiveOrder (also carrying an
/// offset) for dt[0] or negative orders.
Expr parse(std::string_view text);

/// Bottom-up evaluation. `/` is multiplication by the inverse; `^` uses
/// pow_nat for a natural literal exponent (invert + pow_nat for its negation),
/// pow_const for any other (possibly negated) numeric literal, and the general
/// pow otherwise.
/// Throws UnboundVariable, NotInvertible or DomainError.
FermatReal eval(const Expr& e, const Env& env = {});

std::set<std::string> free_variables(const Expr& e);

/// Names of the one- and two-argument functions accepted by the parser.
bool is_function_name(std::string_view name, std::size_t* arity = nullptr);

}  // namespace fermat
