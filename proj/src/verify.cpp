#include "sipoly/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <type_traits>

#include "sipoly/circle_count.hpp"
#include "sipoly/errors.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/interlacing.hpp"
#include "sipoly/io.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"
#include "sipoly/real_line.hpp"

namespace sipoly {

namespace {

// Float suites draw only pairs whose roots stay apart under rounding.
template <Scalar S>
constexpr bool kFloat = std::is_same_v<S, Complex>;

constexpr double kIdentityTol = 1e-9;
constexpr double kClosingTol = 1e-10;
constexpr int kPencilSamples = 21;
constexpr int kPropIIIPoints = 10;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return std::bernoulli_distribution(0.5)(engine_); }
  /// num/den with num uniform in [lo, hi].
  mpq_class ratio(int lo, int hi, int den) { return mpq_class(integer(lo, hi), den); }
  mpq_class nonzero_ratio(int hi, int den) {
    const int v = integer(1, hi);
    return mpq_class(coin() ? v : -v, den);
  }

 private:
  std::mt19937_64 engine_;
};

template <Scalar S>
Poly<S> as(const ExactPoly& g) {
  if constexpr (is_exact_v<S>) return g;
  else return to_float(g);
}

template <Scalar S>
S as(const GaussRational& z) {
  if constexpr (is_exact_v<S>) return z;
  else return z.to_complex();
}

/// Symmetric degree-n polynomial with a random split n = p + 2q.
ExactPoly random_symmetric(Draw& draw, int lo, int hi, std::uint64_t seed) {
  const int n = draw.integer(lo, hi);
  const int q = draw.integer(0, n / 2);
  return generate_symmetric({n - 2 * q, q, 1}, seed);
}

ExactPoly random_real(Draw& draw, int lo, int hi, std::uint64_t seed) {
  const int n = draw.integer(lo, hi);
  const int c = draw.integer(0, n / 2);
  return generate_real({n - 2 * c, c}, seed);
}

/// Complex polynomial whose roots keep |Im| >= 1/8 (no real roots, no
/// conjugate pairs by construction of distinct random imaginary parts).
ExactPoly random_offline(Draw& draw, int n) {
  std::vector<GaussRational> roots;
  for (int k = 0; k < n; ++k) {
    mpq_class im = draw.ratio(8, 128, 64);
    if (draw.coin()) im = -im;
    roots.emplace_back(draw.ratio(-128, 128, 64), im);
  }
  return from_roots(roots);
}

struct Context {
  int trial;
  std::uint64_t seed;
  const SuiteOptions& opts;

  std::string mode() const { return opts.exact ? "exact" : "float"; }
  std::string coeffs(const ExactPoly& g) const {
    return opts.exact ? format_poly(g) : format_poly(to_float(g));
  }
  std::string count(const ExactPoly& g, std::string_view method) const {
    return "sipoly count --mode " + mode() + " --method " + std::string(method) + " --coeffs \"" + coeffs(g) + "\"";
  }
  std::string form(const ExactPoly& g, std::string_view kind) const {
    return "sipoly form --mode " + mode() + " --kind " + std::string(kind) + " --coeffs \"" + coeffs(g) + "\"";
  }
  std::string pair(std::string_view verb, const ExactPoly& g, const ExactPoly& h, bool line) const {
    return "sipoly " + std::string(verb) + " --mode " + mode() + (line ? " --line" : "") + " --g \"" + coeffs(g) +
           "\" --h \"" + coeffs(h) + "\"";
  }
  std::string roots(const ExactPoly& g, bool line) const {
    return "sipoly roots --mode " + mode() + (line ? " --line" : "") + " --coeffs \"" + coeffs(g) + "\"";
  }
};

using Outcome = std::optional<TrialFailure>;

TrialFailure fail(const Context& ctx, std::string reason, std::vector<std::string> replay) {
  return TrialFailure{ctx.trial, std::move(reason), std::move(replay)};
}

bool identity_ok(double defect, const SuiteOptions& opts, double float_tol) {
  return opts.exact ? defect == 0.0 : defect <= float_tol;
}

std::string str(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::string str(const Inertia& in) {
  return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," + std::to_string(in.zero) + ")";
}

std::string str(const CircleCount& c) {
  return "inside " + std::to_string(c.inside) + " on " + std::to_string(c.on) + " outside " +
         std::to_string(c.outside) + (c.unresolved ? " unresolved " + std::to_string(c.unresolved) : "");
}

/// Random z with Re z != 0 (both signs) and arbitrary imaginary part.
GaussRational random_z_real_nonzero(Draw& draw) { return GaussRational(draw.nonzero_ratio(16, 8), draw.ratio(-16, 16, 8)); }
/// Random z with Im z != 0.
GaussRational random_z_imag_nonzero(Draw& draw) { return GaussRational(draw.ratio(-16, 16, 8), draw.nonzero_ratio(16, 8)); }
GaussRational random_z_upper(Draw& draw) { return GaussRational(draw.ratio(-16, 16, 8), draw.ratio(1, 16, 8)); }

// Suites ----------------------------------------------------------------------

template <Scalar S>
Outcome theorem1(const Context& ctx) {
  Draw draw(ctx.seed);
  const ExactPoly g = random_symmetric(draw, 2, 10, derive_seed(ctx.seed, 1));
  const Poly<S> gs = as<S>(g);
  const Inertia in_s = inertia_of(power_sum_form(gs), ctx.opts.tol);
  const Inertia in_k = inertia_of(krein_form(gs), ctx.opts.tol);
  const CircleCount oracle = oracle_circle_count(g);
  if (!(in_s == in_k))
    return fail(ctx, "power-sum inertia " + str(in_s) + " != Krein inertia " + str(in_k),
                {ctx.form(g, "power-sum"), ctx.form(g, "krein")});
  if (in_k.positive - in_k.negative != *oracle.distinct_on || in_k.negative != *oracle.distinct_pairs)
    return fail(ctx,
                "Krein inertia " + str(in_k) + " vs oracle distinct_on " + std::to_string(*oracle.distinct_on) +
                    " distinct_pairs " + std::to_string(*oracle.distinct_pairs),
                {ctx.count(g, "krein"), ctx.roots(g, false)});
  return std::nullopt;
}

template <Scalar S>
Outcome theorem3(const Context& ctx) {
  Draw draw(ctx.seed);
  const ExactPoly g = random_symmetric(draw, 2, 10, derive_seed(ctx.seed, 1));
  const GaussRational z = random_z_real_nonzero(draw);
  const Poly<S> gs = as<S>(g);
  const S zs = as<S>(z);
  const Theorem3Result r = theorem3_count(gs, zs, ctx.opts.tol);
  const ExactPoly f = delta(g) - g * Poly<GaussRational>::constant(z);
  if (!r.holds())
    return fail(ctx,
                "z = " + z.to_string() + ": f = g_delta - z g has " + std::to_string(r.observed) + " roots " +
                    (r.outside_side ? "outside" : "inside") + ", g has " + std::to_string(r.claimed) + " inside",
                {ctx.count(f, "schur-cohn"), ctx.count(g, "krein")});
  const double defect = delta_pencil_identity_defect(gs, zs);
  if (!identity_ok(defect, ctx.opts, kIdentityTol))
    return fail(ctx, "z = " + z.to_string() + ": H[g_delta - z g] = 2 Re(z) K[g] defect " + str(defect),
                {ctx.form(f, "schur-cohn"), ctx.form(g, "krein")});
  return std::nullopt;
}

template <Scalar S>
Outcome cohn(const Context& ctx) {
  Draw draw(ctx.seed);
  const ExactPoly g = random_symmetric(draw, 2, 10, derive_seed(ctx.seed, 1));
  const Poly<S> gs = as<S>(g);
  const CircleCount oracle = oracle_circle_count(g);
  const CircleCount oracle_d = oracle_circle_count(g.derivative());
  if (oracle.inside != oracle_d.outside)
    return fail(ctx, "oracle: g has " + std::to_string(oracle.inside) + " inside, g' has " +
                         std::to_string(oracle_d.outside) + " outside",
                {ctx.roots(g, false), ctx.roots(g.derivative(), false)});
  const CircleCount via = count_circle(gs, CircleMethod::CohnDerivative, ctx.opts.tol);
  if (!same_tally(via, oracle))
    return fail(ctx, "derivative route " + str(via) + " vs oracle " + str(oracle),
                {ctx.count(g, "cohn"), ctx.count(g.derivative(), "schur-cohn"), ctx.roots(g, false)});
  return std::nullopt;
}

template <Scalar S>
Outcome interlace4(const Context& ctx) {
  Draw draw(ctx.seed);
  const bool planted = ctx.trial % 2 == 0;
  // A separated non-interlacing pair needs n >= 2.
  const int n = draw.integer(planted ? 1 : 2, 8);
  const auto [g, h] = planted ? generate_interlacing_pair(n, derive_seed(ctx.seed, 1))
                              : generate_non_interlacing_pair(n, derive_seed(ctx.seed, 1), kFloat<S>);
  const InterlaceVerdict v = interlace_test(as<S>(g), as<S>(h), ctx.opts.tol);
  const InterlaceCheck o = oracle_interlace(g, h);
  if (v.interlacing != o.interlacing || o.interlacing != planted)
    return fail(ctx,
                std::string("form verdict ") + (v.interlacing ? "interlacing" : "not interlacing") + ", oracle " +
                    (o.interlacing ? "interlacing" : "not interlacing (" + o.reason + ")") + ", generated " +
                    (planted ? "interlacing" : "non-interlacing"),
                {ctx.pair("interlace", g, h, false), ctx.roots(g, false), ctx.roots(h, false)});
  return std::nullopt;
}

template <Scalar S>
Outcome markov5(const Context& ctx) {
  Draw draw(ctx.seed);
  const int n = draw.integer(2, 8);
  if (ctx.trial % 2 == 0) {
    const auto [g, h] = generate_interlacing_pair(n, derive_seed(ctx.seed, 1));
    const InterlaceVerdict v = derivative_interlace(as<S>(g), as<S>(h), ctx.opts.tol);
    const ExactPoly dg = delta(g) * Poly<GaussRational>::constant(GaussRational(0, 1));
    const ExactPoly dh = delta(h) * Poly<GaussRational>::constant(GaussRational(0, 1));
    const InterlaceCheck o = oracle_interlace(dg, dh);
    if (!v.interlacing || !o.interlacing)
      return fail(ctx,
                  std::string("circle: i g_delta, i h_delta form verdict ") + (v.interlacing ? "yes" : "no") +
                      ", oracle " + (o.interlacing ? "yes" : "no (" + o.reason + ")"),
                  {ctx.pair("interlace", g, h, false), ctx.pair("interlace", dg, dh, false)});
  } else {
    const auto [f, F] = generate_real_interlacing_pair(n, derive_seed(ctx.seed, 1));
    const InterlaceVerdict v = derivative_interlace_real(as<S>(f), as<S>(F), ctx.opts.tol);
    const InterlaceCheck o = oracle_real_interlace(f.derivative(), F.derivative());
    if (!v.interlacing || !o.interlacing)
      return fail(ctx,
                  std::string("line: f', F' form verdict ") + (v.interlacing ? "yes" : "no") + ", oracle " +
                      (o.interlacing ? "yes" : "no (" + o.reason + ")"),
                  {ctx.pair("interlace", f, F, true), ctx.pair("interlace", f.derivative(), F.derivative(), true)});
  }
  return std::nullopt;
}

/// t = tan(phi) on a symmetric grid of phi in (-pi/2, pi/2); contains t = 0.
std::vector<double> pencil_samples() {
  std::vector<double> t;
  for (int j = 0; j < kPencilSamples; ++j) {
    const double phi = -std::numbers::pi / 2 + std::numbers::pi * (j + 0.5) / kPencilSamples;
    t.push_back(j == kPencilSamples / 2 ? 0.0 : std::tan(phi));
  }
  return t;
}

template <Scalar S>
Outcome pencil6(const Context& ctx) {
  Draw draw(ctx.seed);
  const int n = draw.integer(1, 6);
  const auto [g, h] = generate_interlacing_pair(n, derive_seed(ctx.seed, 1));
  const PencilTrace trace = pencil_trace(as<S>(g), as<S>(h), pencil_samples());
  if (!trace.interlaces || !trace.monotone)
    return fail(ctx, std::string("pencil g + t h: ") + (trace.interlaces ? "" : "lost interlacing ") +
                         (trace.monotone ? "" : "arguments not monotone"),
                {ctx.pair("interlace", g, h, false)});
  const GaussRational z = random_z_imag_nonzero(draw);
  const double defect = mapping_form_identity(as<S>(g), as<S>(h), as<S>(z));
  if (!identity_ok(defect, ctx.opts, kIdentityTol))
    return fail(ctx, "z = " + z.to_string() + ": H[h - z g] = 2 Im(z) K[g, h] defect " + str(defect),
                {ctx.pair("form --kind pair", g, h, false)});
  return std::nullopt;
}

template <Scalar S>
Outcome identity_sec1(const Context& ctx) {
  Draw draw(ctx.seed);
  const ExactPoly g = random_symmetric(draw, 2, 10, derive_seed(ctx.seed, 1));
  const double cong = congruence_defect(as<S>(g));
  if (!identity_ok(cong, ctx.opts, kIdentityTol))
    return fail(ctx, "congruence conj(Z^H S Z) = K defect " + str(cong),
                {ctx.form(g, "power-sum"), ctx.form(g, "krein")});
  const double closing = closing_identity_defect(as<S>(g));
  if (!identity_ok(closing, ctx.opts, kClosingTol))
    return fail(ctx, "K = H[g']/n + Gram(g')/n defect " + str(closing),
                {ctx.form(g, "krein"), ctx.form(g.derivative(), "schur-cohn")});
  return std::nullopt;
}

template <Scalar S>
Outcome borchardt(const Context& ctx) {
  Draw draw(ctx.seed);
  const ExactPoly f = random_real(draw, 1, 10, derive_seed(ctx.seed, 1));
  const Poly<S> fs = as<S>(f);
  const LineCount oracle = count_real_line(f, LineMethod::Oracle);
  for (LineMethod m : {LineMethod::Borchardt, LineMethod::BezoutK, LineMethod::HermiteK1}) {
    const LineCount c = count_real_line(fs, m, ctx.opts.tol);
    if (c.distinct_real != oracle.distinct_real || c.distinct_conjugate_pairs != oracle.distinct_conjugate_pairs)
      return fail(ctx,
                  std::string(to_string(m)) + ": real " + std::to_string(c.distinct_real) + " pairs " +
                      std::to_string(c.distinct_conjugate_pairs) + " vs oracle real " +
                      std::to_string(oracle.distinct_real) + " pairs " +
                      std::to_string(oracle.distinct_conjugate_pairs),
                  {ctx.count(f, m == LineMethod::Borchardt ? "borchardt"
                                : m == LineMethod::BezoutK ? "bezout"
                                                           : "hermite"),
                   ctx.roots(f, true)});
  }
  return std::nullopt;
}

template <Scalar S>
Outcome hermite(const Context& ctx) {
  Draw draw(ctx.seed);
  const ExactPoly f = random_real(draw, 2, 10, derive_seed(ctx.seed, 1));
  const Poly<S> fs = as<S>(f);

  const double k1 = k1_identity_defect(fs);
  if (!identity_ok(k1, ctx.opts, kClosingTol))
    return fail(ctx, "K = K1/n + Gram(f')/n defect " + str(k1), {ctx.form(f, "bezout"), ctx.form(f, "hermite-k1")});

  const LineCount oracle = count_real_line(f, LineMethod::Oracle);
  const LineCount viak1 = count_real_line(fs, LineMethod::HermiteK1, ctx.opts.tol);
  if (viak1.distinct_real != oracle.distinct_real || viak1.distinct_conjugate_pairs != oracle.distinct_conjugate_pairs)
    return fail(ctx, "K1 count disagrees with oracle", {ctx.count(f, "hermite"), ctx.roots(f, true)});

  for (int k = 0; k < kPropIIIPoints; ++k) {
    const GaussRational z = random_z_upper(draw);
    const HalfPlaneCheck c = derivative_pencil_count(fs, as<S>(z), ctx.opts.tol);
    if (!c.holds()) {
      const ExactPoly p = f.derivative() - f * Poly<GaussRational>::constant(z);
      return fail(ctx,
                  "z = " + z.to_string() + ": f' - z f has " + std::to_string(c.observed) +
                      " roots in Im x > 0, f has " + std::to_string(c.claimed) + " pairs",
                  {ctx.count(p, "halfplane"), ctx.count(f, "borchardt")});
    }
  }

  const bool planted = ctx.trial % 2 == 0;
  const int n = draw.integer(planted ? 1 : 2, 8);
  const auto [p, P] = planted ? generate_real_interlacing_pair(n, derive_seed(ctx.seed, 2))
                              : generate_real_non_interlacing_pair(n, derive_seed(ctx.seed, 2), kFloat<S>);
  const InterlaceVerdict v = real_interlace_test(as<S>(p), as<S>(P), ctx.opts.tol);
  const InterlaceCheck o = oracle_real_interlace(p, P);
  if (v.interlacing != o.interlacing || o.interlacing != planted)
    return fail(ctx,
                std::string("Hurwitz verdict ") + (v.interlacing ? "yes" : "no") + ", oracle " +
                    (o.interlacing ? "yes" : "no (" + o.reason + ")"),
                {ctx.pair("interlace", p, P, true)});
  // The identity is measured relative to the Hurwitz form, so it is drawn on
  // an interlacing pair where that form is definite.
  const auto [q, Q] = generate_real_interlacing_pair(draw.integer(1, 8), derive_seed(ctx.seed, 3));
  const GaussRational z = random_z_imag_nonzero(draw);
  const double hp = halfplane_identity_defect(as<S>(q), as<S>(Q), as<S>(z));
  if (!identity_ok(hp, ctx.opts, kIdentityTol))
    return fail(ctx, "z = " + z.to_string() + ": HalfPlane(f - z F) = -2 Im(z) Hurwitz(f, F) defect " + str(hp),
                {ctx.pair("form --kind hurwitz", q, Q, true)});

  const ExactPoly F = random_offline(draw, draw.integer(1, 8));
  const LineCount hc = count_halfplane(as<S>(F), ctx.opts.tol);
  const LineCount ho = line_tally(classify_line(find_roots(F)));
  if (hc.upper != ho.upper || hc.lower != ho.lower)
    return fail(ctx,
                "half-plane form upper " + std::to_string(hc.upper) + " lower " + std::to_string(hc.lower) +
                    " vs oracle upper " + std::to_string(ho.upper) + " lower " + std::to_string(ho.lower),
                {ctx.count(F, "halfplane"), ctx.roots(F, true)});
  return std::nullopt;
}

template <Scalar S>
Outcome mobius(const Context& ctx) {
  Draw draw(ctx.seed);
  ExactPoly g;
  for (std::uint64_t attempt = 1;; ++attempt) {
    g = random_symmetric(draw, 2, 10, derive_seed(ctx.seed, attempt));
    if (!g(GaussRational(1)).is_zero()) break;
  }
  const ExactPoly f = mobius_to_real(g);
  const CircleCount circle = oracle_circle_count(g);
  // Bezout rather than Hankel: the transformed coefficients span many
  // orders of magnitude and power sums amplify that in float mode.
  const LineCount line = count_real_line(as<S>(f), LineMethod::BezoutK, ctx.opts.tol);
  const LineCount line_oracle = count_real_line(f, LineMethod::Oracle);
  if (line.distinct_real != *circle.distinct_on || line.distinct_conjugate_pairs != *circle.distinct_pairs ||
      line_oracle.distinct_real != *circle.distinct_on ||
      line_oracle.distinct_conjugate_pairs != *circle.distinct_pairs)
    return fail(ctx,
                "transformed real " + std::to_string(line.distinct_real) + " pairs " +
                    std::to_string(line.distinct_conjugate_pairs) + " (oracle " +
                    std::to_string(line_oracle.distinct_real) + ", " +
                    std::to_string(line_oracle.distinct_conjugate_pairs) + ") vs circle on " +
                    std::to_string(*circle.distinct_on) + " pairs " + std::to_string(*circle.distinct_pairs),
                {ctx.count(f, "bezout"), ctx.roots(g, false)});
  return std::nullopt;
}

using Trial = std::function<Outcome(const Context&)>;

struct SuiteEntry {
  Trial float_trial;
  Trial exact_trial;
};

#define SIPOLY_SUITE(name, fn) \
  { name, SuiteEntry{fn<Complex>, fn<GaussRational>} }

const std::map<std::string, SuiteEntry, std::less<>>& registry() {
  static const std::map<std::string, SuiteEntry, std::less<>> r = {
      SIPOLY_SUITE("theorem1", theorem1),       SIPOLY_SUITE("theorem3", theorem3),
      SIPOLY_SUITE("cohn", cohn),               SIPOLY_SUITE("interlace4", interlace4),
      SIPOLY_SUITE("markov5", markov5),         SIPOLY_SUITE("pencil6", pencil6),
      SIPOLY_SUITE("identity-sec1", identity_sec1), SIPOLY_SUITE("borchardt", borchardt),
      SIPOLY_SUITE("hermite", hermite),         SIPOLY_SUITE("mobius", mobius),
  };
  return r;
}

#undef SIPOLY_SUITE

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem1", "theorem3", "cohn",      "interlace4", "markov5",
                                                 "pencil6",  "identity-sec1", "borchardt", "hermite", "mobius"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown suite '" + std::string(name) + "'");
  if (opts.trials < 0) throw DomainError("trial count must be non-negative");
  const Trial& trial = opts.exact ? it->second.exact_trial : it->second.float_trial;

  SuiteReport report;
  report.suite = std::string(name);
  report.trials = opts.trials;
  for (int t = 0; t < opts.trials; ++t) {
    const Context ctx{t, derive_seed(opts.seed, static_cast<std::uint64_t>(t)), opts};
    Outcome outcome;
    try {
      outcome = trial(ctx);
    } catch (const std::exception& e) {
      outcome = TrialFailure{t, std::string("exception: ") + e.what(), {}};
    }
    if (outcome) report.failures.push_back(std::move(*outcome));
    else ++report.passed;
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::string out = (report.ok() ? "PASS " : "FAIL ") + std::to_string(report.passed) + "/" +
                    std::to_string(report.trials) + "\n";
  for (const auto& f : report.failures) {
    out += "trial " + std::to_string(f.trial) + ": " + f.reason + "\n";
    for (const auto& r : f.replay) out += "  replay: " + r + "\n";
  }
  return out;
}

}  // namespace sipoly
