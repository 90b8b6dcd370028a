#pragma once

// Command dispatch for the `sextic` tool. Kept in a header so the test
// suite can drive it in-process with captured streams.

#include <cmath>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sextic/sextic.hpp"

namespace sextic::cli {

enum ExitCode : int {
  kOk = 0,
  kNotSolvable = 2,
  kParseError = 3,
  kNumericalFailure = 4,
};

enum class OutputFormat { kText, kJson };

struct CliConfig {
  std::optional<double> rtol;
  std::optional<double> atol;
  OutputFormat format = OutputFormat::kText;
  int precision = 10;

  Tolerance tolerance(Tolerance defaults) const {
    if (rtol) defaults.rtol = *rtol;
    if (atol) defaults.atol = *atol;
    return defaults;
  }
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline double parse_decimal(const std::string& text, const std::string& whole) {
  if (text.empty()) throw InputError("empty number in '" + whole + "'");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw InputError("not a finite decimal number: '" + whole + "'");
  }
  // strtod also accepts hex floats and "inf"/"nan"; only plain decimals are valid here.
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '+' || ch == 'e' ||
          ch == 'E')) {
      throw InputError("not a decimal number: '" + whole + "'");
    }
  }
  return v;
}

}  // namespace detail

/// Decimal real, or a rational "p/q" of two decimals.
inline double parse_real(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return detail::parse_decimal(text, text);
  const double num = detail::parse_decimal(text.substr(0, slash), text);
  const double den = detail::parse_decimal(text.substr(slash + 1), text);
  if (den == 0.0) throw InputError("zero denominator in '" + text + "'");
  const double v = num / den;
  if (!std::isfinite(v)) throw InputError("value out of range: '" + text + "'");
  return v;
}

inline std::vector<double> parse_reals(const std::vector<std::string>& args, std::size_t expected,
                                       const char* what) {
  if (args.size() != expected) {
    throw InputError(std::string(what) + " expects " + std::to_string(expected) + " coefficients, got " +
                     std::to_string(args.size()));
  }
  std::vector<double> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(parse_real(a));
  return out;
}

/// Fixed notation with `precision` decimals, trailing zeros dropped, and
/// no sign on a value that rounds to zero.
inline std::string format_real(double x, int precision) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

/// `re`, or `re+imi` / `re-imi` when the imaginary part does not round to 0.
inline std::string format_complex(Complex z, int precision) {
  const std::string re = format_real(z.real(), precision);
  const std::string im = format_real(std::abs(z.imag()), precision);
  if (im == "0") return re;
  return re + (z.imag() < 0.0 ? "-" : "+") + im + "i";
}

namespace detail {

inline nlohmann::json to_json(Complex z) { return {{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

inline nlohmann::json to_json(std::span<const Complex> zs) {
  auto arr = nlohmann::json::array();
  for (Complex z : zs) arr.push_back(to_json(z));
  return arr;
}

inline nlohmann::json params_json(const MilanezParams& m) {
  return {{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

/// Five terms of x^5 + C x^3 + D x^2 + E x + F: {1, C, D, E, F}.
inline nlohmann::json resolvent_json(const QuinticDepressed& q) {
  const std::vector<Complex> terms{Complex(1.0), q.C, q.D, q.E, q.F};
  return to_json(std::span<const Complex>(terms));
}

inline std::string join(std::span<const Complex> zs, int precision) {
  std::string s;
  for (Complex z : zs) {
    if (!s.empty()) s += ' ';
    s += format_complex(z, precision);
  }
  return s;
}

inline std::string format_params(const MilanezParams& m, int precision) {
  return "a=" + format_complex(m.a, precision) + " b=" + format_complex(m.b, precision) +
         " c=" + format_complex(m.c, precision) + " d=" + format_complex(m.d, precision);
}

inline std::vector<Complex> resolvent_descending(const QuinticDepressed& q) {
  return {Complex(1.0), Complex(0.0), q.C, q.D, q.E, q.F};
}

inline std::string format_residual(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << r;
  return os.str();
}

class Reporter {
 public:
  Reporter(const CliConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  bool json() const { return cfg_.format == OutputFormat::kJson; }
  int precision() const { return cfg_.precision; }
  nlohmann::json& doc() { return doc_; }

  void line(const std::string& key, const std::string& value) {
    if (!json()) out_ << key << ": " << value << '\n';
  }
  void raw(const std::string& text) {
    if (!json()) out_ << text << '\n';
  }
  void diagnostic(const std::string& text) { err_ << text << '\n'; }

  int finish(int code, const std::string& status) {
    if (json()) {
      doc_["status"] = status;
      out_ << doc_.dump(2) << '\n';
    } else {
      out_ << "status: " << status << '\n';
    }
    return code;
  }

 private:
  const CliConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  nlohmann::json doc_ = nlohmann::json::object();
};

inline SexticMonic sextic_from_input(const std::vector<double>& descending) {
  if (descending.front() == 0.0) throw InputError("leading coefficient must be nonzero");
  std::vector<Complex> c(descending.begin(), descending.end());
  return SexticMonic::from_polynomial(Polynomial::from_descending(c));
}

enum class SexticCommand { kSolve, kCheck, kResolvent };

inline int run_sextic(SexticCommand cmd, const std::vector<double>& input, Reporter& rep, const CliConfig& cfg) {
  rep.doc()["input"] = input;
  const SexticMonic s = sextic_from_input(input);
  const Tolerance tol = cfg.tolerance(kRecoveryTolerance);
  const int prec = rep.precision();

  if (cmd != SexticCommand::kSolve) {
    const auto params = recover(s, tol);
    if (!params) {
      rep.raw("not Milanez-solvable");
      return rep.finish(kNotSolvable, "not_solvable");
    }
    rep.doc()["params"] = params_json(*params);
    rep.line("params", format_params(*params, prec));
    if (cmd == SexticCommand::kResolvent) {
      const QuinticDepressed q = resolvent_quintic(*params);
      rep.doc()["resolvent"] = resolvent_json(q);
      rep.line("resolvent", join(resolvent_descending(q), prec));
    }
    return rep.finish(kOk, "ok");
  }

  std::optional<SexticSolution> sol;
  int code = kOk;
  std::string status = "ok";
  try {
    sol = solve_sextic(s, tol);
  } catch (const ResidualFailure& e) {
    rep.diagnostic(e.what());
    sol = e.partial();
    code = kNumericalFailure;
    status = "numerical_failure";
  }
  if (!sol) {
    rep.raw("not Milanez-solvable");
    return rep.finish(kNotSolvable, "not_solvable");
  }
  auto& doc = rep.doc();
  doc["params"] = params_json(sol->params);
  doc["resolvent"] = resolvent_json(sol->resolvent);
  doc["quad_roots"] = to_json(sol->quad_roots);
  doc["cubic_roots"] = to_json(sol->cubic_roots);
  doc["roots"] = to_json(sol->roots);
  doc["residual_max"] = sol->residual_max;

  rep.line("params", format_params(sol->params, prec));
  rep.line("resolvent", join(resolvent_descending(sol->resolvent), prec));
  rep.line("quad_roots", join(sol->quad_roots, prec));
  rep.line("cubic_roots", join(sol->cubic_roots, prec));
  rep.raw("roots:");
  for (Complex r : sol->roots) rep.raw("  " + format_complex(r, prec));
  rep.line("residual_max", format_residual(sol->residual_max));
  return rep.finish(code, status);
}

inline QuinticDepressed quintic_from_input(const std::vector<double>& cdef) {
  return QuinticDepressed{cdef[0], cdef[1], cdef[2], cdef[3]};
}

inline int run_split(const std::vector<double>& input, Reporter& rep, const CliConfig& cfg) {
  rep.doc()["input"] = input;
  const QuinticDepressed q = quintic_from_input(input);
  const int prec = rep.precision();
  try {
    const SplitFactors s = split_quintic_auto(q, cfg.tolerance(Tolerance{}));
    auto& doc = rep.doc();
    doc["k"] = to_json(s.k);
    doc["n"] = to_json(s.n);
    doc["l"] = to_json(s.l);
    doc["m"] = to_json(s.m);
    doc["quadratic"] = to_json(s.quadratic().descending());
    doc["cubic"] = to_json(s.cubic().descending());
    doc["product_residual"] = s.product_residual;
    rep.line("k", format_complex(s.k, prec));
    rep.line("quadratic", join(s.quadratic().descending(), prec));
    rep.line("cubic", join(s.cubic().descending(), prec));
    rep.line("product_residual", format_residual(s.product_residual));
    return rep.finish(kOk, "ok");
  } catch (const SplitFailure& e) {
    rep.diagnostic(e.what());
    auto candidates = nlohmann::json::array();
    for (const SplitCandidate& c : e.candidates()) {
      nlohmann::json j = {{"k", to_json(c.k)}, {"reason", c.reason}};
      j["product_residual"] = std::isfinite(c.product_residual) ? nlohmann::json(c.product_residual) : nullptr;
      candidates.push_back(j);
      rep.diagnostic("  k=" + format_complex(c.k, prec) + " residual=" + format_residual(c.product_residual) +
                     (c.reason.empty() ? "" : " (" + c.reason + ")"));
    }
    rep.doc()["candidates"] = candidates;
    rep.raw("degenerate: no valid quadratic x cubic split");
    return rep.finish(kNumericalFailure, "numerical_failure");
  }
}

inline int run_martinelli(const std::vector<double>& input, Reporter& rep) {
  rep.doc()["input"] = input;
  const Polynomial m = martinelli_coeffs(quintic_from_input(input));
  // Always report all eleven coefficients, including trimmed high zeros.
  std::vector<Complex> asc(11);
  for (std::size_t j = 0; j < asc.size(); ++j) asc[j] = m[j];
  const std::vector<Complex> desc(asc.rbegin(), asc.rend());
  rep.doc()["ascending"] = to_json(std::span<const Complex>(asc));
  rep.doc()["descending"] = to_json(std::span<const Complex>(desc));
  rep.line("ascending", join(asc, rep.precision()));
  rep.line("descending", join(desc, rep.precision()));
  return rep.finish(kOk, "ok");
}

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form solver for sextics with a quadratic x cubic quintic resolvent", "sextic"};
  app.require_subcommand(1);

  CliConfig cfg;
  bool json = false;
  double rtol = 0.0, atol = 0.0;
  auto* rtol_opt = app.add_option("--rtol", rtol, "relative coefficient tolerance")->check(CLI::PositiveNumber);
  auto* atol_opt = app.add_option("--atol", atol, "absolute coefficient tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "emit a JSON report");
  app.add_option("--precision", cfg.precision, "decimal digits in text output")->check(CLI::Range(1, 17));

  struct Verb {
    const char* name;
    const char* help;
    std::size_t arity;
    std::vector<std::string> coeffs;
    CLI::App* sub = nullptr;
  };
  std::vector<Verb> verbs{
      {"solve", "solve a sextic (7 coefficients, descending)", 7, {}},
      {"check", "recover (a,b,c,d) for a sextic (7 coefficients, descending)", 7, {}},
      {"resolvent", "print the quintic resolvent of a sextic (7 coefficients, descending)", 7, {}},
      {"split", "split x^5 + Cx^3 + Dx^2 + Ex + F (4 coefficients C D E F)", 4, {}},
      {"martinelli", "pair-sum polynomial of x^5 + Cx^3 + Dx^2 + Ex + F (C D E F)", 4, {}},
  };
  for (Verb& v : verbs) {
    v.sub = app.add_subcommand(v.name, v.help);
    v.sub->fallthrough();
    v.sub->add_option("coefficients", v.coeffs, "coefficients; decimals or p/q rationals");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  if (*rtol_opt) cfg.rtol = rtol;
  if (*atol_opt) cfg.atol = atol;
  cfg.format = json ? OutputFormat::kJson : OutputFormat::kText;

  detail::Reporter rep(cfg, out, err);
  for (Verb& v : verbs) {
    if (!v.sub->parsed()) continue;
    rep.doc()["command"] = v.name;
    try {
      const std::vector<double> input = parse_reals(v.coeffs, v.arity, v.name);
      const std::string_view name = v.name;
      if (name == "solve") return detail::run_sextic(detail::SexticCommand::kSolve, input, rep, cfg);
      if (name == "check") return detail::run_sextic(detail::SexticCommand::kCheck, input, rep, cfg);
      if (name == "resolvent") return detail::run_sextic(detail::SexticCommand::kResolvent, input, rep, cfg);
      if (name == "split") return detail::run_split(input, rep, cfg);
      return detail::run_martinelli(input, rep);
    } catch (const InputError& e) {
      rep.diagnostic(std::string("error: ") + e.what());
      rep.doc()["message"] = e.what();
      return rep.finish(kParseError, "parse_error");
    } catch (const std::exception& e) {
      rep.diagnostic(std::string("error: ") + e.what());
      rep.doc()["message"] = e.what();
      return rep.finish(kNumericalFailure, "numerical_failure");
    }
  }
  err << "error: no command given\n";
  return kParseError;
}

}  // namespace sextic::cli
