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

#include "fermat/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/calculus.hpp"
#include "fermat/cli/graph.hpp"
#include "fermat/errors.hpp"
#include "fermat/expr.hpp"
#include "fermat/format.hpp"
#include "fermat/order.hpp"

namespace fermat::cli {

namespace {

using nlohmann::json;

/// Raised for a failure to write output; maps to kIoError.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Raised for malformed command-line values (not expression text).
class UsageError : public Error {
 public:
  using Error::Error;
};

json to_json(const FermatReal& x) {
  json terms = json::array();
  for (const auto& t : x.terms()) {
    terms.push_back({{"coeff", t.coeff}, {"order", t.order().to_string()}});
  }
  return {{"std", x.standard_part()}, {"terms", std::move(terms)}};
}

struct Options {
  std::vector<std::string> bindings;
  bool json = false;
};

Env bind_all(const std::vector<std::string>& bindings) {
  Env env;
  for (const auto& b : bindings) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("binding must have the form name=expr: " + b);
    }
    std::string name = b.substr(0, eq);
    bool valid = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
    for (char c : name) valid = valid && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!valid) throw UsageError("invalid variable name: " + name);
    // later bindings may refer to earlier ones
    env.insert_or_assign(name, eval(parse(std::string_view(b).substr(eq + 1)), env));
  }
  return env;
}

FermatReal evaluate(const std::string& text, const Options& opts) {
  Env env = bind_all(opts.bindings);
  return eval(parse(text), env);
}

void print_parse_error(std::ostream& err, const std::string& what, std::optional<std::size_t> offset,
                       const std::string& input) {
  err << what << '\n';
  if (offset && !input.empty()) {
    err << "  " << input << '\n';
    err << "  " << std::string(std::min(*offset, input.size()), ' ') << "^\n";
  }
}

std::vector<Exponent> parse_orders(const std::vector<std::string>& items) {
  std::vector<Exponent> out;
  for (const auto& s : items) {
    try {
      out.push_back(Exponent::parse(s));
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid order: " + s);
    }
  }
  return out;
}

std::vector<std::uint64_t> parse_naturals(const std::vector<std::string>& items) {
  std::vector<std::uint64_t> out;
  for (const auto& s : items) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("invalid natural number: " + s);
    }
    out.push_back(std::stoull(s));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermat reals: nilpotent infinitesimals of rational order", "fermat"};
  app.require_subcommand(1);

  Options opts;
  std::string expr_a;
  std::string expr_b;
  std::string var;
  double at = 0.0;
  std::string k_text;
  std::vector<std::string> orders_text;
  std::vector<std::string> exps_text;
  double delta = 0.01;
  std::size_t samples = 64;
  std::string out_path = "-";
  std::string plot_format = "svg";

  // The current input, echoed under parse errors.
  std::string current_input;
  std::function<void()> action;

  auto common = [&](CLI::App* sub, bool with_bindings = true) {
    if (with_bindings) {
      sub->add_option("-b,--bind", opts.bindings, "Bind a variable: name=expr (repeatable)");
    }
    sub->add_flag("--json", opts.json, "Machine-readable output");
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to canonical form");
  eval_cmd->add_option("expr", expr_a, "Expression")->required();
  common(eval_cmd);
  eval_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      FermatReal x = evaluate(expr_a, opts);
      if (opts.json) {
        out << to_json(x).dump() << '\n';
      } else {
        out << format(x) << '\n';
      }
    };
  });

  auto* canon_cmd = app.add_subcommand("canon", "Print the potential decomposition std + sum c*t^a");
  canon_cmd->add_option("expr", expr_a, "Expression")->required();
  common(canon_cmd);
  canon_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      FermatReal x = evaluate(expr_a, opts);
      if (opts.json) {
        json j = to_json(x);
        for (std::size_t i = 0; i < x.terms().size(); ++i) {
          j["terms"][i]["exp"] = x.terms()[i].exp.to_string();
        }
        out << j.dump() << '\n';
      } else {
        out << format_potential(x) << '\n';
      }
    };
  });

  auto* cmp_cmd = app.add_subcommand("cmp", "Compare two expressions: LT, EQ or GT");
  cmp_cmd->add_option("lhs", expr_a, "Left expression")->required();
  cmp_cmd->add_option("rhs", expr_b, "Right expression")->required();
  common(cmp_cmd);
  cmp_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      FermatReal x = evaluate(expr_a, opts);
      current_input = expr_b;
      FermatReal y = evaluate(expr_b, opts);
      auto v = to_string(compare(x, y));
      if (opts.json) {
        out << json{{"verdict", v}}.dump() << '\n';
      } else {
        out << v << '\n';
      }
    };
  });

  auto* order_cmd = app.add_subcommand("order", "Order omega(x) of the leading infinitesimal");
  order_cmd->add_option("expr", expr_a, "Expression")->required();
  common(order_cmd);
  order_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      auto w = order(evaluate(expr_a, opts)).to_string();
      if (opts.json) {
        out << json{{"order", w}}.dump() << '\n';
      } else {
        out << w << '\n';
      }
    };
  });

  auto* nil_cmd = app.add_subcommand("nilpotent", "Smallest k with x^k = 0, or none");
  nil_cmd->add_option("expr", expr_a, "Expression")->required();
  common(nil_cmd);
  nil_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      auto k = nilpotency_index(evaluate(expr_a, opts));
      if (opts.json) {
        out << json{{"nilpotency_index", k ? json(*k) : json(nullptr)}}.dump() << '\n';
      } else {
        out << (k ? std::to_string(*k) : std::string("none")) << '\n';
      }
    };
  });

  auto* diff_cmd = app.add_subcommand("diff", "Derivative of a one-variable expression at a point");
  diff_cmd->add_option("expr", expr_a, "Function body")->required();
  diff_cmd->add_option("--at", at, "Standard point")->required();
  diff_cmd->add_option("--var", var, "Variable (default: the only free variable)");
  common(diff_cmd);
  diff_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      Expr f = parse(expr_a);
      Env env = bind_all(opts.bindings);
      std::string v = var;
      if (v.empty()) {
        std::vector<std::string> free;
        for (const auto& name : free_variables(f)) {
          if (!env.contains(name)) free.push_back(name);
        }
        if (free.size() > 1) throw UsageError("several free variables; choose one with --var");
        v = free.empty() ? "t" : free.front();
      }
      double m = derive(f, v, at, env);
      if (opts.json) {
        out << json{{"derivative", m}}.dump() << '\n';
      } else {
        out << format_double(m) << '\n';
      }
    };
  });

  auto* prod_cmd = app.add_subcommand("prodzero", "Decide whether a product of powers vanishes");
  prod_cmd->add_option("--orders", orders_text, "Orders of the factors, comma separated")
      ->required()
      ->delimiter(',');
  prod_cmd->add_option("--exps", exps_text, "Exponents of the factors, comma separated")
      ->required()
      ->delimiter(',');
  common(prod_cmd, false);
  prod_cmd->callback([&] {
    action = [&] {
      auto ords = parse_orders(orders_text);
      auto exps = parse_naturals(exps_text);
      bool zero = product_power_zero(ords, exps);
      if (opts.json) {
        json j{{"zero", zero}};
        j["order"] = zero ? json(nullptr) : json(product_power_order(ords, exps).to_string());
        out << j.dump() << '\n';
      } else if (zero) {
        out << "zero\n";
      } else {
        out << "nonzero, order " << product_power_order(ords, exps).to_string() << '\n';
      }
    };
  });

  auto* iota_cmd = app.add_subcommand("iota", "Drop infinitesimal terms of order <= k");
  iota_cmd->add_option("expr", expr_a, "Expression")->required();
  iota_cmd->add_option("-k,--k", k_text, "Truncation order (rational or inf)")->required();
  common(iota_cmd);
  iota_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      std::optional<OrderBound> k;
      try {
        k = OrderBound::parse(k_text);
      } catch (const std::exception&) {
        throw UsageError("invalid truncation order: " + k_text);
      }
      FermatReal x = iota(evaluate(expr_a, opts), *k);
      if (opts.json) {
        out << to_json(x).dump() << '\n';
      } else {
        out << format(x) << '\n';
      }
    };
  });

  auto* plot_cmd = app.add_subcommand("plot", "Sample graph_delta(x) as SVG or CSV");
  plot_cmd->add_option("expr", expr_a, "Expression")->required();
  plot_cmd->add_option("--delta", delta, "Parameter range [0, delta)")->capture_default_str();
  plot_cmd->add_option("--samples", samples, "Number of samples")->capture_default_str();
  plot_cmd->add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();
  plot_cmd->add_option("--format", plot_format, "svg or csv")
      ->check(CLI::IsMember({"svg", "csv"}))
      ->capture_default_str();
  plot_cmd->add_option("-b,--bind", opts.bindings, "Bind a variable: name=expr (repeatable)");
  plot_cmd->callback([&] {
    action = [&] {
      current_input = expr_a;
      FermatReal x = evaluate(expr_a, opts);
      GraphSample g = sample_graph(x, delta, samples);
      std::ostringstream buf;
      if (plot_format == "csv") {
        write_csv(buf, g);
      } else {
        write_svg(buf, g, expr_a);
      }
      if (out_path == "-") {
        out << buf.str();
        return;
      }
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw IoError("cannot open " + out_path + " for writing");
      file << buf.str();
      file.close();
      if (!file) throw IoError("failed writing " + out_path);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  if (!action) return kParseError;
  try {
    action();
  } catch (const ParseError& e) {
    print_parse_error(err, e.what(), e.offset(), current_input);
    return kParseError;
  } catch (const NonPositiveOrder& e) {
    print_parse_error(err, e.what(), e.offset(), current_input);
    return kParseError;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kParseError;
  } catch (const IoError& e) {
    err << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kEvalError;
  }
  return kOk;
}

}  // namespace fermat::cli
