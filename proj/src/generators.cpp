#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "sipoly/errors.hpp"
#include "sipoly/oracle.hpp"
#include "sipoly/polynomial_core.hpp"

namespace sipoly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long kAngleDenominator = 256;
constexpr long kGrid = 128;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

GaussRational grid_rational(double v, long den = kGrid) {
  return GaussRational(mpq_class(std::lround(v * static_cast<double>(den)), den));
}

/// `count` angles on the circle with cyclic gaps of at least `min_gap`.
std::vector<double> separated_angles(int count, double min_gap, Rng& rng) {
  if (count <= 0) return {};
  const double slack = kTwoPi - count * min_gap;
  if (slack < 0) throw DomainError("too many angles for the requested separation");
  std::vector<double> weights(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& w : weights) total += (w = rng.uniform(0.05, 1.0));
  std::vector<double> angles;
  double at = rng.uniform(0.0, kTwoPi);
  for (double w : weights) {
    angles.push_back(std::fmod(at, kTwoPi));
    at += min_gap + slack * w / total;
  }
  return angles;
}

/// `count` strictly increasing grid rationals in [-4, 4] with gaps at least
/// `min_gap`.
std::vector<mpq_class> separated_reals(int count, double min_gap, Rng& rng) {
  constexpr double lo = -4.0, hi = 4.0;
  const double slack = (hi - lo) - (count - 1) * min_gap;
  if (slack < 0) throw DomainError("too many points for the requested separation");
  std::vector<double> cuts(static_cast<std::size_t>(count));
  for (auto& c : cuts) c = rng.uniform(0.0, slack);
  std::sort(cuts.begin(), cuts.end());
  std::vector<mpq_class> out;
  for (int j = 0; j < count; ++j) {
    const double v = lo + cuts[static_cast<std::size_t>(j)] + j * min_gap;
    out.push_back(grid_rational(v).re());
  }
  return out;
}

GaussRational random_modulus(Rng& rng) { return grid_rational(rng.uniform(0.3, 0.9)); }

ExactPoly symmetrize(const ExactPoly& g) { return make_symmetric(g); }

ExactPoly random_sign(ExactPoly g, Rng& rng) { return rng.coin() ? g : -g; }

std::vector<GaussRational> repeat(const GaussRational& r, int m) { return std::vector<GaussRational>(static_cast<std::size_t>(m), r); }

void append(std::vector<GaussRational>& out, const std::vector<GaussRational>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over the (base, index) counter.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GaussRational unimodular_rational(double phi) {
  phi = std::remainder(phi, kTwoPi);  // (-pi, pi]
  bool flip = false;
  if (std::abs(phi) > std::numbers::pi / 2) {
    phi += phi > 0 ? -std::numbers::pi : std::numbers::pi;
    flip = true;
  }
  const long t = std::lround(std::tan(phi / 2) * kAngleDenominator);
  const long d = kAngleDenominator;
  const mpq_class den = mpq_class(d * d + t * t);
  GaussRational u(mpq_class(d * d - t * t) / den, mpq_class(2 * t * d) / den);
  return flip ? -u : u;
}

ExactPoly from_roots(const std::vector<GaussRational>& roots) {
  ExactPoly p = ExactPoly::constant(GaussRational(1));
  for (const auto& r : roots) p = p * ExactPoly{-r, GaussRational(1)};
  return p;
}

ExactPoly generate_symmetric(const SymmetricParams& params, std::uint64_t seed) {
  if (params.on_circle < 0 || params.pairs < 0 || params.max_multiplicity < 1)
    throw DomainError("generate_symmetric: invalid parameters");
  if (params.on_circle + params.pairs == 0) throw DomainError("generate_symmetric: empty root configuration");
  Rng rng(seed);
  std::vector<int> mult(static_cast<std::size_t>(params.on_circle + params.pairs));
  int n = 0;
  for (std::size_t j = 0; j < mult.size(); ++j) {
    mult[j] = rng.integer(1, params.max_multiplicity);
    n += (j < static_cast<std::size_t>(params.on_circle) ? 1 : 2) * mult[j];
  }
  const auto angles = separated_angles(static_cast<int>(mult.size()), kTwoPi / (8.0 * n), rng);
  std::vector<GaussRational> roots;
  for (std::size_t j = 0; j < mult.size(); ++j) {
    const GaussRational u = unimodular_rational(angles[j]);
    if (j < static_cast<std::size_t>(params.on_circle)) {
      append(roots, repeat(u, mult[j]));
    } else {
      const GaussRational r = random_modulus(rng);
      append(roots, repeat(r * u, mult[j]));
      append(roots, repeat(u / r, mult[j]));
    }
  }
  ExactPoly g = symmetrize(from_roots(roots));
  // A random nonzero real scale keeps the polynomial symmetric.
  g *= GaussRational(mpq_class(rng.integer(1, 8), rng.integer(1, 8)) * (rng.coin() ? 1 : -1));
  return g;
}

std::pair<ExactPoly, ExactPoly> generate_interlacing_pair(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("generate_interlacing_pair: n must be positive");
  Rng rng(seed);
  const auto angles = separated_angles(2 * n, kTwoPi / (8.0 * n), rng);
  std::vector<GaussRational> even, odd;
  for (int j = 0; j < 2 * n; ++j) (j % 2 == 0 ? even : odd).push_back(unimodular_rational(angles[static_cast<std::size_t>(j)]));
  return {random_sign(symmetrize(from_roots(even)), rng), random_sign(symmetrize(from_roots(odd)), rng)};
}

std::pair<ExactPoly, ExactPoly> generate_non_interlacing_pair(int n, std::uint64_t seed, bool separated) {
  if (n < 1) throw DomainError("generate_non_interlacing_pair: n must be positive");
  if (separated && n < 2) throw DomainError("generate_non_interlacing_pair: separated pairs need n >= 2");
  Rng rng(seed);
  if (n == 1) {
    // Degree-one symmetric polynomials always have their root on the
    // circle, so only a shared root breaks interlacing.
    const GaussRational u = unimodular_rational(rng.uniform(0.0, kTwoPi));
    const ExactPoly g = symmetrize(from_roots({u}));
    return {g, g * GaussRational(mpq_class(rng.integer(1, 5), rng.integer(1, 5)))};
  }
  const int mode = rng.integer(0, separated ? 1 : 3);
  std::vector<GaussRational> rg, rh;
  if (mode == 0) {
    // All roots on the circle, alternation broken.
    const auto angles = separated_angles(2 * n, kTwoPi / (8.0 * n), rng);
    std::vector<int> tags(static_cast<std::size_t>(2 * n), 0);
    std::fill(tags.begin() + n, tags.end(), 1);
    auto alternating = [&] {
      for (std::size_t j = 0; j + 1 < tags.size(); ++j)
        if (tags[j] == tags[j + 1]) return false;
      return true;
    };
    do std::shuffle(tags.begin(), tags.end(), rng.engine());
    while (alternating());
    for (int j = 0; j < 2 * n; ++j)
      (tags[static_cast<std::size_t>(j)] == 0 ? rg : rh).push_back(unimodular_rational(angles[static_cast<std::size_t>(j)]));
  } else if (mode == 1) {
    // One off-circle pair in g.
    const auto angles = separated_angles(2 * n - 1, kTwoPi / (8.0 * n), rng);
    const GaussRational r = random_modulus(rng);
    const GaussRational u = unimodular_rational(angles[0]);
    rg = {r * u, u / r};
    for (int j = 1; j < 2 * n - 1; ++j) {
      const GaussRational v = unimodular_rational(angles[static_cast<std::size_t>(j)]);
      (static_cast<int>(rg.size()) < n && j % 2 == 0 ? rg : rh).push_back(v);
    }
    while (static_cast<int>(rh.size()) > n) {
      rg.push_back(rh.back());
      rh.pop_back();
    }
  } else if (mode == 2) {
    // A shared root, otherwise alternating.
    const auto angles = separated_angles(2 * n, kTwoPi / (8.0 * n), rng);
    for (int j = 0; j < 2 * n; ++j) (j % 2 == 0 ? rg : rh).push_back(unimodular_rational(angles[static_cast<std::size_t>(j)]));
    rh[0] = rg[0];
  } else {
    // A double root on the circle in g.
    const auto angles = separated_angles(2 * n - 1, kTwoPi / (8.0 * n), rng);
    const GaussRational u = unimodular_rational(angles[0]);
    rg = {u, u};
    for (int j = 1; j < 2 * n - 1; ++j) {
      const GaussRational v = unimodular_rational(angles[static_cast<std::size_t>(j)]);
      (static_cast<int>(rg.size()) < n && j % 2 == 0 ? rg : rh).push_back(v);
    }
    while (static_cast<int>(rh.size()) > n) {
      rg.push_back(rh.back());
      rh.pop_back();
    }
  }
  return {random_sign(symmetrize(from_roots(rg)), rng), random_sign(symmetrize(from_roots(rh)), rng)};
}

ExactPoly generate_general(int n, double margin, std::uint64_t seed) {
  if (n < 1) throw DomainError("generate_general: n must be positive");
  if (!(margin > 0.0 && margin < 0.5)) throw DomainError("generate_general: margin must lie in (0, 0.5)");
  Rng rng(seed);
  std::vector<GaussRational> roots;
  for (int j = 0; j < n; ++j) {
    if (rng.coin(0.08)) {
      roots.emplace_back(0);
      continue;
    }
    double m;
    const bool near = rng.coin(0.25);
    if (rng.coin()) {
      m = near ? 1.0 - rng.uniform(2.0 * margin, 6.0 * margin) : rng.uniform(0.2, 1.0 - 2.0 * margin);
    } else {
      m = near ? 1.0 + rng.uniform(2.0 * margin, 6.0 * margin) : rng.uniform(1.0 + 2.0 * margin, 3.0);
    }
    // Fine grid so that rounding keeps the margin.
    const GaussRational modulus = grid_rational(m, 1L << 20);
    roots.push_back(modulus * unimodular_rational(rng.uniform(0.0, kTwoPi)));
  }
  const GaussRational lead(mpq_class(rng.integer(1, 8), 4) * (rng.coin() ? 1 : -1),
                           mpq_class(rng.integer(-8, 8), 4));
  return from_roots(roots) * lead;
}

ExactPoly generate_real(const RealParams& params, std::uint64_t seed) {
  if (params.real_roots < 0 || params.conjugate_pairs < 0 || params.real_roots + params.conjugate_pairs == 0)
    throw DomainError("generate_real: invalid parameters");
  Rng rng(seed);
  const int n = params.real_roots + 2 * params.conjugate_pairs;
  std::vector<GaussRational> roots;
  for (const auto& x : separated_reals(params.real_roots, 1.0 / n, rng)) roots.emplace_back(x);
  for (int j = 0; j < params.conjugate_pairs; ++j) {
    const GaussRational z(grid_rational(rng.uniform(-3.0, 3.0)).re(), grid_rational(rng.uniform(0.2, 2.0)).re());
    roots.push_back(z);
    roots.push_back(conj(z));
  }
  return from_roots(roots) * GaussRational(mpq_class(rng.integer(1, 8), 4) * (rng.coin() ? 1 : -1));
}

std::pair<ExactPoly, ExactPoly> generate_real_interlacing_pair(int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("generate_real_interlacing_pair: n must be positive");
  Rng rng(seed);
  const auto xs = separated_reals(2 * n, 1.0 / (2 * n), rng);
  std::vector<GaussRational> even, odd;
  for (int j = 0; j < 2 * n; ++j) (j % 2 == 0 ? even : odd).emplace_back(xs[static_cast<std::size_t>(j)]);
  return {random_sign(from_roots(even), rng), random_sign(from_roots(odd), rng)};
}

std::pair<ExactPoly, ExactPoly> generate_real_non_interlacing_pair(int n, std::uint64_t seed, bool separated) {
  if (n < 1) throw DomainError("generate_real_non_interlacing_pair: n must be positive");
  if (separated && n < 2) throw DomainError("generate_real_non_interlacing_pair: separated pairs need n >= 2");
  Rng rng(seed);
  if (n == 1) {
    const GaussRational x(grid_rational(rng.uniform(-3.0, 3.0)).re());
    const ExactPoly f = from_roots({x});
    return {f, f * GaussRational(mpq_class(rng.integer(1, 5), rng.integer(1, 5)))};
  }
  const int mode = rng.integer(0, separated ? 1 : 2);
  std::vector<GaussRational> rf, rF;
  const auto xs = separated_reals(2 * n, 1.0 / (2 * n), rng);
  if (mode == 0) {
    std::vector<int> tags(static_cast<std::size_t>(2 * n), 0);
    std::fill(tags.begin() + n, tags.end(), 1);
    auto alternating = [&] {
      for (std::size_t j = 0; j + 1 < tags.size(); ++j)
        if (tags[j] == tags[j + 1]) return false;
      return true;
    };
    do std::shuffle(tags.begin(), tags.end(), rng.engine());
    while (alternating());
    for (int j = 0; j < 2 * n; ++j) (tags[static_cast<std::size_t>(j)] == 0 ? rf : rF).emplace_back(xs[static_cast<std::size_t>(j)]);
  } else if (mode == 1) {
    // A conjugate pair in f.
    const GaussRational z(xs[0], grid_rational(rng.uniform(0.2, 2.0)).re());
    rf = {z, conj(z)};
    for (int j = 1; j < 2 * n && static_cast<int>(rF.size()) < n; j += 2) rF.emplace_back(xs[static_cast<std::size_t>(j)]);
    for (int j = 2; j < 2 * n && static_cast<int>(rf.size()) < n; j += 2) rf.emplace_back(xs[static_cast<std::size_t>(j)]);
  } else {
    for (int j = 0; j < 2 * n; ++j) (j % 2 == 0 ? rf : rF).emplace_back(xs[static_cast<std::size_t>(j)]);
    rF[0] = rf[0];
  }
  return {random_sign(from_roots(rf), rng), random_sign(from_roots(rF), rng)};
}

}  // namespace sipoly
