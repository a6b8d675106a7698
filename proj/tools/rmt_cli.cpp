// rmt-cli: command-line front end for the rmt library.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <rmt/rmt.hpp>

namespace {

using Json = nlohmann::ordered_json;
using Inputs = std::map<std::string, double>;

enum Exit { kOk = 0, kUsage = 1, kNonConvergence = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Texts {
  std::string phi = "1/gamma(r+1)";
  std::string sigma = "1/gamma(r+1)";
  std::string name;
};

struct Outcome {
  Inputs inputs;
  double value = std::numeric_limits<double>::quiet_NaN();
  double error_estimate = std::numeric_limits<double>::quiet_NaN();
  std::string classification = "direct";
  std::string status = "ok";
  std::string message;
};

struct OpInfo {
  std::vector<std::string> required;
  Inputs defaults;
};

const std::map<std::string, OpInfo>& op_table() {
  static const std::map<std::string, OpInfo> ops{
      {"eval", {{"x"}, {{"m", 1.0}}}},
      {"mellin", {{"nu"}, {{"m", 1.0}, {"k", 1.0}}}},
      {"gauss", {{"b"}, {}}},
      {"product", {{"a", "b"}, {}}},
      {"gamma2", {{"nu", "a", "b"}, {{"m", 2.0}}}},
      {"lambda", {{"nu", "a", "b"}, {}}},
      {"besselb", {{"nu", "a", "b"}, {}}},
      {"deriv", {{"n", "x"}, {{"a", 1.0}, {"b", 1.0}}}},
  };
  return ops;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

int as_int(const Inputs& in, const std::string& key) {
  const double v = in.at(key);
  if (v != std::floor(v) || std::fabs(v) > 1e6)
    throw rmt::DomainError("'" + key + "' must be an integer");
  return static_cast<int>(v);
}

rmt::CoefficientFn make_phi(const std::string& source, const Inputs& in) {
  return rmt::parse_phi(source, rmt::CoefficientFn::Params(in.begin(), in.end()));
}

void take_series(Outcome& out, const rmt::SeriesValue& s) {
  out.value = s.value;
  out.error_estimate = s.error_estimate;
  out.classification = std::string(rmt::to_string(s.classification));
  if (s.classification == rmt::Convergence::Diverged) out.status = "diverged";
}

void compute(const std::string& op, const Texts& texts, const rmt::SeriesOptions& so,
             std::optional<double> tol, Outcome& out) {
  const Inputs& in = out.inputs;
  if (op == "eval") {
    take_series(out, rmt::pseudo_exp(make_phi(texts.phi, in), in.at("x"), as_int(in, "m"), so));
  } else if (op == "mellin") {
    out.value = rmt::rmt_mellin(make_phi(texts.phi, in), in.at("nu"), as_int(in, "m"), in.at("k"));
  } else if (op == "gauss") {
    take_series(out, rmt::pseudo_gauss(make_phi(texts.phi, in), in.at("b"), so));
  } else if (op == "product") {
    take_series(out, rmt::product_integral(make_phi(texts.phi, in), make_phi(texts.sigma, in),
                                           in.at("a"), in.at("b"), so));
  } else if (op == "gamma2") {
    const int m = as_int(in, "m");
    if (m == 2)
      out.value = rmt::gamma_h(in.at("nu"), in.at("a"), in.at("b"), so);
    else
      out.value = rmt::gamma_h_m(in.at("nu"), in.at("a"), in.at("b"), m, tol.value_or(1e-12));
  } else if (op == "lambda") {
    out.value = rmt::lambda_l(in.at("nu"), in.at("a"), in.at("b"), so);
  } else if (op == "besselb") {
    out.value = rmt::bessel_b(in.at("nu"), in.at("a"), in.at("b"), so);
  } else if (op == "deriv") {
    const int n = as_int(in, "n");
    const double x = in.at("x"), a = in.at("a"), b = in.at("b");
    if (texts.name == "hermite_gauss")
      out.value = rmt::hermite_gauss_deriv(n, a, x);
    else if (texts.name == "j0")
      out.value = rmt::d_n_j0(n, x);
    else if (texts.name == "exp_j0")
      out.value = rmt::d_n_exp_j0(n, a, b, x);
    else if (texts.name == "j0_j0")
      out.value = rmt::d_n_j0_j0(n, a, b, x);
    else
      throw UsageError("unknown derivative '" + texts.name + "'");
  } else {
    throw UsageError("unknown operation '" + op + "'");
  }
}

Outcome evaluate(const std::string& op, Inputs inputs, const Texts& texts,
                 const rmt::SeriesOptions& so, std::optional<double> tol) {
  const OpInfo& info = op_table().at(op);
  for (const auto& [k, v] : info.defaults) inputs.emplace(k, v);
  for (const auto& k : info.required)
    if (!inputs.count(k)) throw UsageError(op + ": missing input '" + k + "'");

  Outcome out;
  out.inputs = std::move(inputs);
  try {
    compute(op, texts, so, tol, out);
  } catch (const rmt::ParseError&) {
    throw;
  } catch (const rmt::PoleError& e) {
    out.status = "pole";
    out.message = e.what();
  } catch (const rmt::DomainError& e) {
    out.status = "domain";
    out.message = e.what();
  } catch (const rmt::ConvergenceError& e) {
    out.status = "nonconvergence";
    out.message = e.what();
  }
  return out;
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void emit_results(const std::string& command, const std::vector<Outcome>& rows,
                  const std::string& format) {
  if (format == "json") {
    Json doc;
    doc["command"] = command;
    doc["results"] = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["inputs"] = Json::object();
      for (const auto& [k, v] : r.inputs) row["inputs"][k] = v;
      row["value"] = number_or_null(r.value);
      row["error_estimate"] = number_or_null(r.error_estimate);
      row["classification"] = r.classification;
      row["status"] = r.status;
      if (!r.message.empty()) row["message"] = r.message;
      doc["results"].push_back(std::move(row));
    }
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::set<std::string> names;
  for (const auto& r : rows)
    for (const auto& kv : r.inputs) names.insert(kv.first);
  for (const auto& n : names) std::cout << n << ',';
  std::cout << "value,error_estimate,classification,status\n";
  for (const auto& r : rows) {
    for (const auto& n : names) {
      auto it = r.inputs.find(n);
      std::cout << (it == r.inputs.end() ? "" : fmt(it->second)) << ',';
    }
    std::cout << fmt(r.value) << ',' << fmt(r.error_estimate) << ',' << r.classification << ','
              << r.status << '\n';
  }
}

int exit_for(const std::vector<Outcome>& rows, bool strict_domain) {
  int code = kOk;
  for (const auto& r : rows) {
    if (r.status == "diverged" || r.status == "nonconvergence") code = kNonConvergence;
    if (strict_domain && r.status == "domain" && code == kOk) {
      std::cerr << "error: " << r.message << '\n';
      code = kUsage;
    }
  }
  return code;
}

int emit_verify(const rmt::VerifyReport& report, const std::string& format) {
  if (format == "json") {
    Json doc;
    doc["command"] = "verify";
    doc["suite"] = report.suite;
    doc["summary"] = {{"total", report.cases.size()},
                      {"passed", report.passed},
                      {"failed", report.failed}};
    doc["results"] = Json::array();
    for (const auto& c : report.cases) {
      Json row;
      row["id"] = c.id;
      row["criterion"] = c.criterion;
      row["inputs"] = Json::object();
      for (const auto& [k, v] : c.params) row["inputs"][k] = v;
      row["lhs"] = number_or_null(c.lhs);
      row["rhs"] = number_or_null(c.rhs);
      row["residual"] = number_or_null(c.residual);
      row["tolerance"] = c.tolerance;
      row["pass"] = c.pass;
      row["status"] = c.status;
      doc["results"].push_back(std::move(row));
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "id,criterion,inputs,lhs,rhs,residual,tolerance,pass,status\n";
    for (const auto& c : report.cases) {
      std::string params;
      for (const auto& [k, v] : c.params) params += (params.empty() ? "" : ";") + k + "=" + fmt(v);
      std::cout << c.id << ',' << c.criterion << ',' << params << ',' << fmt(c.lhs) << ','
                << fmt(c.rhs) << ',' << fmt(c.residual) << ',' << fmt(c.tolerance) << ','
                << (c.pass ? "true" : "false") << ',' << c.status << '\n';
    }
  }
  return report.failed > 0 ? kVerifyFailed : kOk;
}

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("bad number '" + text + "' in " + what);
  return v;
}

std::pair<std::string, std::string> split_assign(const std::string& text, const char* what) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError(std::string("expected name=value for ") + what);
  return {text.substr(0, eq), text.substr(eq + 1)};
}

struct Grid {
  std::string name;
  std::vector<double> values;
};

Grid parse_grid(const std::string& text) {
  auto [name, range] = split_assign(text, "--grid");
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : range.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("expected --grid name=start:stop:count");
  const double start = parse_double(range.substr(0, c1), "--grid");
  const double stop = parse_double(range.substr(c1 + 1, c2 - c1 - 1), "--grid");
  const double count = parse_double(range.substr(c2 + 1), "--grid");
  if (count < 1 || count != std::floor(count) || count > 1e6) throw UsageError("grid count must be a positive integer");
  Grid g{name, {}};
  const int n = static_cast<int>(count);
  for (int i = 0; i < n; ++i)
    g.values.push_back(n == 1 ? start : (i == n - 1 ? stop : start + i * (stop - start) / (n - 1)));
  return g;
}

void expand(const std::vector<Grid>& grids, std::size_t level, Inputs& current, std::vector<Inputs>& out) {
  if (level == grids.size()) {
    out.push_back(current);
    return;
  }
  for (double v : grids[level].values) {
    current[grids[level].name] = v;
    expand(grids, level + 1, current, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Umbral Ramanujan Master Theorem toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::vector<std::string> param_args;
  std::optional<double> tol;
  Texts texts;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--param", param_args, "Parameter binding name=value (repeatable)");
  app.add_option("--tol", tol, "Override the default tolerance");

  std::map<std::string, Inputs> op_inputs;
  std::vector<double> eval_points;
  std::map<std::string, CLI::App*> subs;

  auto numeric = [&](CLI::App* sub, const std::string& op, const std::string& key, const char* help) {
    sub->add_option_function<double>("--" + key, [&op_inputs, op, key](double v) { op_inputs[op][key] = v; }, help);
  };

  {
    auto* s = subs["eval"] = app.add_subcommand("eval", "Pseudo-exponential series at points");
    s->add_option("--phi", texts.phi, "Coefficient functional phi(r)");
    s->add_option("--x", eval_points, "Evaluation points")->required()->expected(1, -1);
    numeric(s, "eval", "m", "Power of x in the exponent");
  }
  {
    auto* s = subs["mellin"] = app.add_subcommand("mellin", "Mellin transform of the pseudo-exponential");
    s->add_option("--phi", texts.phi, "Coefficient functional phi(r)");
    numeric(s, "mellin", "nu", "Mellin exponent");
    numeric(s, "mellin", "m", "Power of x in the exponent");
    numeric(s, "mellin", "k", "Weight exponent");
  }
  {
    auto* s = subs["gauss"] = app.add_subcommand("gauss", "Pseudo-Gaussian integral");
    s->add_option("--phi", texts.phi, "Coefficient functional phi(r)");
    numeric(s, "gauss", "b", "Linear coefficient");
  }
  {
    auto* s = subs["product"] = app.add_subcommand("product", "Product of pseudo-Gaussian and pseudo-exponential");
    s->add_option("--phi", texts.phi, "Coefficient functional phi(r)");
    s->add_option("--sigma", texts.sigma, "Coefficient functional sigma(s)");
    numeric(s, "product", "a", "Coefficient a");
    numeric(s, "product", "b", "Coefficient b");
  }
  for (const char* op : {"gamma2", "lambda", "besselb"}) {
    auto* s = subs[op] = app.add_subcommand(op, std::string(op) == "gamma2"   ? "Generalized gamma function"
                                                : std::string(op) == "lambda" ? "Laguerre-type gamma function"
                                                                              : "Bessel-type gamma function");
    numeric(s, op, "nu", "Order nu");
    numeric(s, op, "a", "Coefficient a");
    numeric(s, op, "b", "Coefficient b");
    if (std::string(op) == "gamma2") numeric(s, op, "m", "Power of x in the exponent");
  }
  {
    auto* s = subs["deriv"] = app.add_subcommand("deriv", "Closed-form n-th derivatives");
    s->add_option("--name", texts.name, "hermite_gauss | j0 | exp_j0 | j0_j0")
        ->required()
        ->check(CLI::IsMember({"hermite_gauss", "j0", "exp_j0", "j0_j0"}));
    numeric(s, "deriv", "n", "Derivative order");
    numeric(s, "deriv", "x", "Point");
    numeric(s, "deriv", "a", "Coefficient a");
    numeric(s, "deriv", "b", "Coefficient b");
  }
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(rmt::verify_suites()));

  std::string table_op;
  std::vector<std::string> grid_args;
  auto* table = app.add_subcommand("table", "Grid sweep of an operation");
  table->add_option("--op", table_op, "Operation to sweep")->required()->check(CLI::IsMember(
      std::vector<std::string>{"eval", "mellin", "gauss", "product", "gamma2", "lambda", "besselb", "deriv"}));
  table->add_option("--grid", grid_args, "Sweep name=start:stop:count (repeatable)");
  table->add_option("--phi", texts.phi, "Coefficient functional phi(r)");
  table->add_option("--sigma", texts.sigma, "Coefficient functional sigma(s)");
  table->add_option("--name", texts.name, "Derivative name for --op deriv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    rmt::SeriesOptions so;
    if (tol) so.tolerance = *tol;
    if (const char* env = std::getenv("RMT_MAX_TERMS")) {
      const double v = parse_double(env, "RMT_MAX_TERMS");
      if (v < 1 || v != std::floor(v)) throw UsageError("RMT_MAX_TERMS must be a positive integer");
      so.max_terms = static_cast<int>(v);
    }

    Inputs params;
    for (const auto& p : param_args) {
      auto [k, v] = split_assign(p, "--param");
      params[k] = parse_double(v, "--param");
    }

    if (verify->parsed()) return emit_verify(rmt::run_verify_suite(suite), format);

    std::string op;
    std::vector<Inputs> points;
    if (table->parsed()) {
      op = table_op;
      std::vector<Grid> grids;
      for (const auto& g : grid_args) grids.push_back(parse_grid(g));
      Inputs base = params;
      expand(grids, 0, base, points);
    } else {
      for (const auto& [name, sub] : subs)
        if (sub->parsed()) op = name;
      Inputs base = params;
      for (const auto& [k, v] : op_inputs[op]) base[k] = v;
      if (op == "eval") {
        for (double x : eval_points) {
          base["x"] = x;
          points.push_back(base);
        }
      } else {
        points.push_back(base);
      }
    }

    std::vector<Outcome> rows;
    rows.reserve(points.size());
    for (const auto& p : points) rows.push_back(evaluate(op, p, texts, so, tol));
    emit_results(table->parsed() ? "table" : op, rows, format);
    return exit_for(rows, !table->parsed());
  } catch (const rmt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const rmt::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
