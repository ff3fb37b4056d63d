#include "sipoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <sstream>

#include "sipoly/circle_count.hpp"
#include "sipoly/errors.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/interlacing.hpp"
#include "sipoly/io.hpp"
#include "sipoly/json.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"
#include "sipoly/real_line.hpp"
#include "sipoly/verify.hpp"

namespace sipoly {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string verb;
  std::string mode = "float";
  std::string output;
  std::optional<double> tol;
  std::string coeffs;
  std::string g;
  std::string h;
  std::string method;
  std::string kind;
  std::string matrix;
  bool line = false;
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 1;
};

/// Rendered result: JSON document plus its text-mode rendering.
struct Rendered {
  Json json;
  std::string text;
};

std::string key_values(const Json& j) {
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : j.items()) {
    out += k + std::string(width - k.size() + 2, ' ');
    out += v.is_string() ? v.get<std::string>() : v.dump();
    out += '\n';
  }
  return out;
}

template <Scalar S>
std::string grid(const Matrix<S>& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      cells.push_back(format_scalar(m(i, k)));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const std::string& c = cells[i * m.cols() + k];
      out += std::string(width - c.size() + (k == 0 ? 0 : 2), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

template <Scalar S>
Rendered render(const HermitianForm<S>& form) {
  std::ostringstream head;
  head << form.kind << "  n=" << form.n() << "  remainder_norm=" << form.remainder_norm << '\n';
  return {to_json(form), head.str() + grid(form.entries)};
}

Rendered render(const RootSet& rs) {
  Json j = to_json(rs);
  std::string text;
  for (const auto& r : j["roots"]) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%24.17g %24.17g  mult %d  %s\n", r["re"].get<double>(), r["im"].get<double>(),
                  r["mult"].get<int>(), r["tag"].is_null() ? "-" : r["tag"].get<std::string>().c_str());
    text += buf;
  }
  return {j, text};
}

template <class T>
Rendered render_plain(const T& value) {
  Json j = to_json(value);
  return {j, key_values(j)};
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

template <Scalar S>
Poly<S> poly_arg(const std::string& text, const char* flag, std::istream& in) {
  if (text.empty()) throw UsageError(std::string("missing ") + flag);
  if (text == "-") return parse_poly<S>(read_all(in));
  return parse_poly<S>(text);
}

template <Scalar S>
HermitianForm<S> build_form(const Options& o, std::istream& in) {
  const std::string& k = o.kind;
  auto one = [&] { return poly_arg<S>(o.coeffs.empty() ? o.g : o.coeffs, "--coeffs", in); };
  if (k == "schur-cohn") return build_circle_form<S>(SchurCohnOf<S>{one()});
  if (k == "power-sum") return build_circle_form<S>(PowerSumOf<S>{one()});
  if (k == "krein") return build_circle_form<S>(KreinOf<S>{one()});
  if (k == "pair")
    return build_circle_form<S>(PairOf<S>{poly_arg<S>(o.g, "--g", in), poly_arg<S>(o.h, "--h", in)});
  if (k == "hankel") return build_real_form<S>(HankelOf<S>{one()});
  if (k == "bezout") return build_real_form<S>(BezoutOf<S>{one()});
  if (k == "hermite-k1") return build_real_form<S>(HermiteK1Of<S>{one()});
  if (k == "hurwitz")
    return build_real_form<S>(HurwitzOf<S>{poly_arg<S>(o.g, "--g", in), poly_arg<S>(o.h, "--h", in)});
  if (k == "halfplane") return build_real_form<S>(HalfPlaneOf<S>{one()});
  if (k.empty()) throw UsageError("missing --kind");
  throw UsageError("unknown form kind '" + k + "'");
}

bool is_line_method(const std::string& m) {
  return m == "borchardt" || m == "hankel" || m == "bezout" || m == "hermite" || m == "halfplane";
}

template <Scalar S>
Rendered run_count(const Options& o, std::istream& in) {
  const Poly<S> g = poly_arg<S>(o.coeffs, "--coeffs", in);
  if (o.line || is_line_method(o.method)) {
    const std::string m = o.method.empty() ? "borchardt" : o.method;
    if (m == "halfplane") return render_plain(count_halfplane(g, o.tol));
    const auto method = parse_line_method(m);
    if (!method) throw UsageError("unknown line method '" + m + "'");
    return render_plain(count_real_line(g, *method, o.tol));
  }
  // The Schur-Cohn form vanishes on symmetric input, so those go to Krein.
  const bool symmetric = classify_symmetry(g).kind != SymmetryKind::None;
  const std::string m = !o.method.empty() ? o.method : symmetric ? "krein" : "schur-cohn";
  const auto method = parse_circle_method(m);
  if (!method) throw UsageError("unknown method '" + m + "'");
  return render_plain(count_circle(g, *method, o.tol));
}

template <Scalar S>
Rendered run_interlace(const Options& o, std::istream& in) {
  const Poly<S> g = poly_arg<S>(o.g, "--g", in);
  const Poly<S> h = poly_arg<S>(o.h, "--h", in);
  return render_plain(o.line ? real_interlace_test(g, h, o.tol) : interlace_test(g, h, o.tol));
}

template <Scalar S>
Rendered run_form(const Options& o, std::istream& in) {
  return render(build_form<S>(o, in));
}

template <Scalar S>
Rendered run_inertia(const Options& o, std::istream& in) {
  Inertia result;
  if (!o.matrix.empty()) {
    if (!o.coeffs.empty() || !o.kind.empty()) throw UsageError("--matrix excludes --coeffs and --kind");
    const Matrix<S> m = parse_matrix<S>(o.matrix == "-" ? read_all(in) : o.matrix);
    if constexpr (is_exact_v<S>) result = inertia(m);
    else result = inertia(m, o.tol);
  } else {
    result = inertia_of(build_form<S>(o, in), o.tol);
  }
  return render_plain(result);
}

template <Scalar S>
Rendered run_roots(const Options& o, std::istream& in) {
  const Poly<S> g = poly_arg<S>(o.coeffs, "--coeffs", in);
  const double rho = o.tol.value_or(kDefaultCircleTol);
  RootSet rs = find_roots(g);
  rs = o.line ? classify_line(std::move(rs), rho) : classify_circle(std::move(rs), rho);
  return render(rs);
}

template <Scalar S>
Rendered dispatch(const Options& o, std::istream& in) {
  if (o.verb == "count") return run_count<S>(o, in);
  if (o.verb == "interlace") return run_interlace<S>(o, in);
  if (o.verb == "form") return run_form<S>(o, in);
  if (o.verb == "inertia") return run_inertia<S>(o, in);
  return run_roots<S>(o, in);
}

Json report_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json e;
    e["trial"] = f.trial;
    e["reason"] = f.reason;
    e["replay"] = f.replay;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  return j;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "float or exact")->check(CLI::IsMember({"float", "exact"}));
  sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--tol", o.tol, "zero threshold for inertia (roots: circle/line tolerance)");
}

std::optional<double> env_tol() {
  const char* v = std::getenv("KREIN_TOL");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  const double t = std::strtod(v, &end);
  if (end == v || *end != '\0' || !(t >= 0.0)) throw UsageError(std::string("invalid KREIN_TOL '") + v + "'");
  return t;
}

}  // namespace

CliOutput run_cli(const std::vector<std::string>& args, std::istream& in) {
  CliOutput result;
  Options o;

  CLI::App app{"Root counting for polynomials relative to the unit circle and the real line", "sipoly"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");  // -h would collide with --h

  auto* count = app.add_subcommand("count", "count roots inside/on/outside |x| = 1, or on the real line");
  add_common(count, o);
  count->add_option("--coeffs", o.coeffs, "coefficients, ascending (- reads stdin)")->required();
  count->add_option("--method", o.method,
                    "schur-cohn | power-sum | krein | cohn | oracle | borchardt | bezout | hermite | halfplane");
  count->add_flag("--line", o.line, "count relative to the real line");

  auto* interlace = app.add_subcommand("interlace", "decide whether the roots of g and h interlace");
  add_common(interlace, o);
  interlace->add_option("--g", o.g, "first polynomial")->required();
  interlace->add_option("--h", o.h, "second polynomial")->required();
  interlace->add_flag("--line", o.line, "interlacing on the real line (Hurwitz form)");

  auto* form = app.add_subcommand("form", "dump a Hermitian form");
  add_common(form, o);
  form->add_option("--kind", o.kind,
                   "schur-cohn | power-sum | krein | pair | hankel | bezout | hermite-k1 | hurwitz | halfplane")
      ->required();
  form->add_option("--coeffs", o.coeffs, "polynomial (- reads stdin)");
  form->add_option("--g", o.g, "first polynomial of a pair");
  form->add_option("--h", o.h, "second polynomial of a pair");

  auto* inert = app.add_subcommand("inertia", "inertia of a Hermitian matrix or form");
  add_common(inert, o);
  inert->add_option("--matrix", o.matrix, "rows separated by ';'");
  inert->add_option("--kind", o.kind, "form kind, as for `form`");
  inert->add_option("--coeffs", o.coeffs, "polynomial for --kind");
  inert->add_option("--g", o.g, "first polynomial of a pair");
  inert->add_option("--h", o.h, "second polynomial of a pair");

  auto* roots = app.add_subcommand("roots", "numerical roots with multiplicities");
  add_common(roots, o);
  roots->add_option("--coeffs", o.coeffs, "coefficients, ascending (- reads stdin)")->required();
  roots->add_flag("--line", o.line, "classify relative to the real line");

  auto* verify = app.add_subcommand("verify", "run a property suite over generated inputs");
  add_common(verify, o);
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", o.trials, "number of trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "base seed");

  std::ostringstream out, err;
  std::vector<const char*> argv{"sipoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }
  o.verb = app.get_subcommands().front()->get_name();

  const bool exact = o.mode == "exact";
  try {
    if (!o.tol) o.tol = env_tol();
    if (o.verb == "verify") {
      SuiteOptions so;
      so.trials = o.trials;
      so.seed = o.seed;
      so.exact = exact;
      so.tol = o.tol;
      const SuiteReport report = run_suite(o.suite, so);
      out << (o.output == "json" ? report_json(report).dump() + "\n" : format_report(report));
      result.exit_code = report.ok() ? kExitOk : kExitPropertyFailure;
    } else {
      const Rendered r = exact ? dispatch<GaussRational>(o, in) : dispatch<Complex>(o, in);
      out << (o.output == "text" ? r.text : r.json.dump() + "\n");
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    result.exit_code = kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    result.exit_code = kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    result.exit_code = kExitUsage;
  } catch (const UnsupportedModeError& e) {
    err << "unsupported: " << e.what() << '\n';
    result.exit_code = kExitUsage;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << " (residual " << e.residual() << ")\n";
    result.exit_code = kExitNumeric;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    result.exit_code = kExitNumeric;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace sipoly
