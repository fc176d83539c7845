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

#include "fermat/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "fermat/calculus.hpp"
#include "fermat/elementary.hpp"
#include "fermat/errors.hpp"

namespace fermat {

struct Expr::Node {
  Kind kind;
  double number = 0.0;
  bool natural = false;
  Exponent order;
  std::string name;
  std::vector<Expr> children;
};

Expr Expr::number(double value, bool natural_literal) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->number = value;
  n->natural = natural_literal;
  return Expr(std::move(n));
}

Expr Expr::dt(Exponent order) {
  if (order.sign() <= 0) throw NonPositiveOrder("dt order must be positive, got " + order.to_string());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Dt;
  n->order = std::move(order);
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Negate;
  n->children.push_back(std::move(operand));
  return Expr(std::move(n));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
  if (op != Kind::Add && op != Kind::Sub && op != Kind::Mul && op != Kind::Div && op != Kind::Pow) {
    throw std::invalid_argument("Expr::binary: not a binary operator");
  }
  auto n = std::make_shared<Node>();
  n->kind = op;
  n->children = {std::move(lhs), std::move(rhs)};
  return Expr(std::move(n));
}

Expr Expr::call(std::string function, std::vector<Expr> args) {
  std::size_t arity = 0;
  if (!is_function_name(function, &arity)) {
    throw std::invalid_argument("unknown function: " + function);
  }
  if (args.size() != arity) throw std::invalid_argument("wrong arity for " + function);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Call;
  n->name = std::move(function);
  n->children = std::move(args);
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::number() const { return node_->number; }
bool Expr::is_natural_literal() const { return node_->kind == Kind::Number && node_->natural; }
const Exponent& Expr::dt_order() const { return node_->order; }
const std::string& Expr::name() const { return node_->name; }
const std::vector<Expr>& Expr::children() const { return node_->children; }

bool is_function_name(std::string_view name, std::size_t* arity) {
  std::size_t a = 0;
  if (ElementaryFn::by_name(name)) {
    a = 1;
  } else if (name == "pow" || name == "log") {
    a = 2;
  } else {
    return false;
  }
  if (arity != nullptr) *arity = a;
  return true;
}

namespace {

constexpr int kMaxDepth = 256;
constexpr std::size_t kMaxDecimalDigits = 12;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) fail(pos_, "operator or end of input");
    return e;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) p.fail(p.pos_, "shallower nesting");
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  [[noreturn]] void fail(std::size_t at, std::string expected) const {
    throw ParseError(at, std::move(expected), describe(at));
  }

  std::string describe(std::size_t at) const {
    if (at >= src_.size()) return "end of input";
    std::size_t end = at + 1;
    if (is_ident_char(src_[at])) {
      while (end < src_.size() && is_ident_char(src_[end])) ++end;
    }
    return "'" + std::string(src_.substr(at, end - at)) + "'";
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        lhs = Expr::binary(Expr::Kind::Add, lhs, parse_term());
      } else if (peek('-')) {
        ++pos_;
        lhs = Expr::binary(Expr::Kind::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        lhs = Expr::binary(Expr::Kind::Mul, lhs, parse_unary());
      } else if (peek('/')) {
        ++pos_;
        lhs = Expr::binary(Expr::Kind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (peek('-')) {
      DepthGuard guard(*this);
      ++pos_;
      return Expr::negate(parse_unary());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (peek('^')) {
      DepthGuard guard(*this);
      ++pos_;
      return Expr::binary(Expr::Kind::Pow, base, parse_unary());
    }
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail(pos_, "expression");
    const char c = src_[pos_];
    if (is_digit(c) || c == '.') return parse_number();
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "dt") return parse_dt();
      if (peek('(')) return parse_call(std::move(name), start);
      return Expr::variable(std::move(name));
    }
    if (c == '(') {
      DepthGuard guard(*this);
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    fail(pos_, "expression");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    bool natural = true;
    std::size_t mantissa_digits = 0;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_, ++mantissa_digits;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      natural = false;
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_, ++mantissa_digits;
    }
    if (mantissa_digits == 0) fail(start, "number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && is_digit(src_[look])) {
        natural = false;
        pos_ = look;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
    }
    double value = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      // underflow to zero/subnormal is fine; overflow is not
      value = std::strtod(std::string(first, last).c_str(), nullptr);
      if (std::isinf(value)) fail(start, "finite number");
    } else if (ec != std::errc() || ptr != last) {
      fail(start, "number");
    }
    return Expr::number(value, natural);
  }

  Expr parse_dt() {
    expect('[');
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) {
      negative = src_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits_start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    std::size_t whole_end = pos_;
    Exponent order;
    if (pos_ < src_.size() && src_[pos_] == '/') {
      if (whole_end == digits_start) fail(digits_start, "order");
      ++pos_;
      const std::size_t den_start = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      if (pos_ == den_start) fail(den_start, "denominator");
      auto den = src_.substr(den_start, pos_ - den_start);
      if (den.find_first_not_of('0') == std::string_view::npos) fail(den_start, "nonzero denominator");
      order = Exponent::parse(src_.substr(digits_start, pos_ - digits_start));
    } else {
      std::size_t frac_digits = 0;
      if (pos_ < src_.size() && src_[pos_] == '.') {
        ++pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_, ++frac_digits;
      }
      if (whole_end == digits_start && frac_digits == 0) fail(digits_start, "order");
      auto text = src_.substr(digits_start, pos_ - digits_start);
      if (frac_digits > 0) {
        std::string digits;
        for (char ch : text) {
          if (ch != '.') digits.push_back(ch);
        }
        auto first = digits.find_first_not_of('0');
        auto last = digits.find_last_not_of('0');
        std::size_t significant = first == std::string::npos ? 0 : last - first + 1;
        if (significant > kMaxDecimalDigits) {
          fail(digits_start, "decimal order with at most 12 significant digits");
        }
      }
      order = Exponent::parse(text);
    }
    if (negative) order = -order;
    if (order.sign() <= 0) {
      throw NonPositiveOrder("dt order must be positive, got " + order.to_string(), start);
    }
    expect(']');
    return Expr::dt(std::move(order));
  }

  Expr parse_call(std::string name, std::size_t name_start) {
    std::size_t arity = 0;
    if (!is_function_name(name, &arity)) fail(name_start, "function name");
    skip_ws();
    DepthGuard guard(*this);
    expect('(');
    const std::string want =
        std::to_string(arity) + (arity == 1 ? " argument" : " arguments") + " for " + name;
    std::vector<Expr> args;
    if (!peek(')')) {
      args.push_back(parse_expr());
      while (peek(',')) {
        if (args.size() == arity) fail(pos_, want);
        ++pos_;
        args.push_back(parse_expr());
      }
    }
    if (args.size() != arity) {
      skip_ws();
      fail(pos_, want);
    }
    expect(')');
    return Expr::call(std::move(name), std::move(args));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Exponent of `^` written as an integer literal n or as -n.
std::optional<std::pair<bool, std::uint64_t>> integer_exponent(const Expr& e) {
  constexpr double kLimit = 9.0e18;
  if (e.is_natural_literal() && e.number() < kLimit) {
    return std::pair{false, static_cast<std::uint64_t>(e.number())};
  }
  if (e.kind() == Expr::Kind::Negate && e.children()[0].is_natural_literal() &&
      e.children()[0].number() < kLimit) {
    return std::pair{true, static_cast<std::uint64_t>(e.children()[0].number())};
  }
  return std::nullopt;
}

FermatReal eval_pow(const Expr& base_expr, const Expr& exp_expr, const Env& env) {
  FermatReal base = eval(base_expr, env);
  if (auto n = integer_exponent(exp_expr)) {
    auto [negative, k] = *n;
    if (k == 0) return FermatReal(1.0);
    return pow_nat(negative ? invert(base) : base, k);
  }
  if (exp_expr.kind() == Expr::Kind::Number) {
    return ext_apply(ElementaryFn::pow_const(exp_expr.number()), base);
  }
  if (exp_expr.kind() == Expr::Kind::Negate && exp_expr.children()[0].kind() == Expr::Kind::Number) {
    return ext_apply(ElementaryFn::pow_const(-exp_expr.children()[0].number()), base);
  }
  return pow(base, eval(exp_expr, env));
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

FermatReal eval(const Expr& e, const Env& env) {
  using K = Expr::Kind;
  const auto& ch = e.children();
  switch (e.kind()) {
    case K::Number:
      return FermatReal(e.number());
    case K::Dt:
      return dt(e.dt_order());
    case K::Variable: {
      auto it = env.find(e.name());
      if (it == env.end()) throw UnboundVariable(e.name());
      return it->second;
    }
    case K::Negate:
      return -eval(ch[0], env);
    case K::Add:
      return eval(ch[0], env) + eval(ch[1], env);
    case K::Sub:
      return eval(ch[0], env) - eval(ch[1], env);
    case K::Mul:
      return eval(ch[0], env) * eval(ch[1], env);
    case K::Div: {
      FermatReal num = eval(ch[0], env);
      return num * invert(eval(ch[1], env));
    }
    case K::Pow:
      return eval_pow(ch[0], ch[1], env);
    case K::Call: {
      if (auto f = ElementaryFn::by_name(e.name())) return ext_apply(*f, eval(ch[0], env));
      if (e.name() == "pow") return pow(eval(ch[0], env), eval(ch[1], env));
      return log(eval(ch[0], env), eval(ch[1], env));
    }
  }
  throw std::logic_error("unreachable expression kind");
}

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  std::function<void(const Expr&)> walk = [&](const Expr& node) {
    if (node.kind() == Expr::Kind::Variable) out.insert(node.name());
    for (const auto& c : node.children()) walk(c);
  };
  walk(e);
  return out;
}

}  // namespace fermat
