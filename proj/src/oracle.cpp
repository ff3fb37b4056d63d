#include "sipoly/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_complex.hpp>

namespace sipoly {

namespace mp = boost::multiprecision;
using MpReal = mp::cpp_bin_float_50;
using MpComplex = mp::cpp_complex_50;

const char* to_string(CircleTag t) {
  switch (t) {
    case CircleTag::Inside: return "Inside";
    case CircleTag::OnCircle: return "OnCircle";
    case CircleTag::Outside: return "Outside";
  }
  return "Inside";
}

const char* to_string(LineTag t) {
  switch (t) {
    case LineTag::Real: return "Real";
    case LineTag::Upper: return "Upper";
    case LineTag::Lower: return "Lower";
  }
  return "Real";
}

int RootSet::degree() const {
  int d = 0;
  for (const auto& r : roots) d += r.multiplicity;
  return d;
}

namespace {

MpReal to_mp(const mpq_class& q) {
  return MpReal(q.get_num().get_str()) / MpReal(q.get_den().get_str());
}

Complex to_double(const MpComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

struct MpPoly {
  std::vector<MpComplex> c;   // ascending, nonzero leading
  std::vector<Complex> cd;    // double image
};

std::vector<Complex> initial_guesses(const std::vector<Complex>& c) {
  const auto n = static_cast<Eigen::Index>(c.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  if (solver.info() == Eigen::Success) {
    for (Eigen::Index i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  } else {
    double radius = 0.0;  // Cauchy bound
    for (std::size_t k = 0; k + 1 < c.size(); ++k) radius = std::max(radius, std::abs(c[k] / c.back()));
    for (Eigen::Index i = 0; i < n; ++i)
      z[static_cast<std::size_t>(i)] = std::polar(1.0 + radius, 2.0 * std::numbers::pi * (i + 0.25) / n);
  }
  // Aberth needs pairwise distinct starting points.
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(z[i] - z[j]) <= 1e-12 * (1.0 + std::abs(z[i])))
        z[i] += std::polar(1e-9 * (1.0 + std::abs(z[i])), 0.7 + static_cast<double>(i));
  return z;
}

// Aberth-Ehrlich iteration in 50-digit arithmetic.
std::vector<MpComplex> aberth(const MpPoly& p) {
  const std::size_t n = p.c.size() - 1;
  const auto start = initial_guesses(p.cd);
  std::vector<MpComplex> z(start.begin(), start.end());
  std::vector<double> abs_coeff(p.c.size());
  for (std::size_t k = 0; k < p.c.size(); ++k) abs_coeff[k] = std::abs(p.cd[k]);

  constexpr int kMaxIterations = 1000;
  const MpReal noise("1e-44");
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool settled = true;
    for (std::size_t i = 0; i < n; ++i) {
      MpComplex val = p.c[n];
      MpComplex der = 0;
      for (std::size_t k = n; k-- > 0;) {
        der = der * z[i] + val;
        val = val * z[i] + p.c[k];
      }
      const double zi = std::abs(to_double(z[i]));
      double bound = 0.0;
      for (std::size_t k = n + 1; k-- > 0;) bound = bound * zi + abs_coeff[k];
      if (mp::abs(val) <= noise * bound) continue;
      settled = false;
      if (mp::abs(der) == 0) {
        z[i] += MpComplex(MpReal("1e-20"), MpReal("1e-20"));
        continue;
      }
      const MpComplex ratio = val / der;
      MpComplex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += MpComplex(1) / (z[i] - z[j]);
      z[i] -= ratio / (MpComplex(1) - ratio * repulsion);
    }
    if (settled) return z;
  }
  return z;  // the reconstruction check decides whether this is good enough
}

RootSet cluster(const std::vector<Complex>& z, int zero_roots) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double radius = kClusterRadius * (1.0 + std::max(std::abs(z[i]), std::abs(z[j])));
      if (std::abs(z[i] - z[j]) <= radius) parent[find(i)] = find(j);
    }
  RootSet rs;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = rs.roots.size();
      rs.roots.push_back({Complex{}, 0, std::nullopt, std::nullopt});
    }
    Root& root = rs.roots[slot[r]];
    root.value += z[i];
    ++root.multiplicity;
  }
  for (auto& root : rs.roots) root.value /= static_cast<double>(root.multiplicity);
  if (zero_roots > 0) rs.roots.push_back({Complex{}, zero_roots, std::nullopt, std::nullopt});
  return rs;
}

void check_reconstruction(const RootSet& rs, const std::vector<Complex>& original) {
  std::vector<Complex> prod{original.back()};
  for (const auto& r : rs.roots)
    for (int m = 0; m < r.multiplicity; ++m) {
      std::vector<Complex> next(prod.size() + 1, Complex{});
      for (std::size_t k = 0; k < prod.size(); ++k) {
        next[k + 1] += prod[k];
        next[k] -= prod[k] * r.value;
      }
      prod = std::move(next);
    }
  double scale = 0.0, err = 0.0;
  for (std::size_t k = 0; k < original.size(); ++k) {
    scale = std::max(scale, std::abs(original[k]));
    err = std::max(err, std::abs(original[k] - prod[k]));
  }
  if (err > 1e-7 * scale)
    throw NumericError("find_roots: reconstruction residual " + std::to_string(err / scale) + " exceeds 1e-7",
                       err / scale);
}

RootSet solve(MpPoly p) {
  const std::vector<Complex> original = p.cd;
  int zero_roots = 0;
  while (zero_roots + 1 < static_cast<int>(p.cd.size()) && p.cd[static_cast<std::size_t>(zero_roots)] == Complex{})
    ++zero_roots;
  p.c.erase(p.c.begin(), p.c.begin() + zero_roots);
  p.cd.erase(p.cd.begin(), p.cd.begin() + zero_roots);

  std::vector<Complex> z;
  if (p.c.size() > 1) {
    for (const auto& r : aberth(p)) z.push_back(to_double(r));
  }
  RootSet rs = cluster(z, zero_roots);
  check_reconstruction(rs, original);
  return rs;
}

}  // namespace

RootSet find_roots(const FloatPoly& g) {
  if (g.is_zero()) throw DomainError("find_roots: zero polynomial");
  MpPoly p;
  for (const auto& a : g.coeffs()) {
    p.c.emplace_back(MpReal(a.real()), MpReal(a.imag()));
    p.cd.push_back(a);
  }
  return solve(std::move(p));
}

RootSet find_roots(const ExactPoly& g) {
  if (g.is_zero()) throw DomainError("find_roots: zero polynomial");
  MpPoly p;
  for (const auto& a : g.coeffs()) {
    p.c.emplace_back(to_mp(a.re()), to_mp(a.im()));
    p.cd.push_back(to_double(p.c.back()));
  }
  return solve(std::move(p));
}

RootSet classify_circle(RootSet rs, double rho) {
  for (auto& r : rs.roots) {
    const double m = std::abs(r.value);
    if (std::abs(m - 1.0) <= rho) r.circle_tag = CircleTag::OnCircle;
    else r.circle_tag = m < 1.0 ? CircleTag::Inside : CircleTag::Outside;
  }
  rs.tolerance = rho;
  return rs;
}

RootSet classify_line(RootSet rs, double tol) {
  for (auto& r : rs.roots) {
    const double im = r.value.imag();
    if (std::abs(im) <= tol * std::max(1.0, std::abs(r.value))) r.line_tag = LineTag::Real;
    else r.line_tag = im > 0 ? LineTag::Upper : LineTag::Lower;
  }
  rs.tolerance = tol;
  return rs;
}

CircleCount circle_tally(const RootSet& rs) {
  CircleCount c;
  c.exactness = Exactness::FloatHeuristic;
  int distinct_on = 0;
  std::vector<Complex> inside, outside;
  for (const auto& r : rs.roots) {
    if (!r.circle_tag) throw DomainError("circle_tally: root set is not circle-classified");
    switch (*r.circle_tag) {
      case CircleTag::Inside:
        c.inside += r.multiplicity;
        inside.push_back(r.value);
        break;
      case CircleTag::OnCircle:
        c.on += r.multiplicity;
        ++distinct_on;
        break;
      case CircleTag::Outside:
        c.outside += r.multiplicity;
        outside.push_back(r.value);
        break;
    }
  }
  int pairs = 0;
  for (const auto& b : inside) {
    const Complex mirror = 1.0 / std::conj(b);
    for (const auto& o : outside)
      if (std::abs(o - mirror) <= kClusterRadius * (1.0 + std::abs(mirror))) {
        ++pairs;
        break;
      }
  }
  c.distinct_on = distinct_on;
  c.distinct_pairs = pairs;
  return c;
}

LineCount line_tally(const RootSet& rs) {
  LineCount c;
  for (const auto& r : rs.roots) {
    if (!r.line_tag) throw DomainError("line_tally: root set is not line-classified");
    switch (*r.line_tag) {
      case LineTag::Real: ++c.distinct_real; break;
      case LineTag::Upper:
        c.upper += r.multiplicity;
        ++c.distinct_conjugate_pairs;
        break;
      case LineTag::Lower: c.lower += r.multiplicity; break;
    }
  }
  return c;
}

std::vector<double> root_arguments(const RootSet& rs) {
  std::vector<double> args;
  for (const auto& r : rs.roots) {
    double a = std::arg(r.value);
    if (a < 0) a += 2.0 * std::numbers::pi;
    for (int m = 0; m < r.multiplicity; ++m) args.push_back(a);
  }
  std::sort(args.begin(), args.end());
  return args;
}

namespace {

// Merge two tagged sorted sequences and check strict alternation.
InterlaceCheck alternate(std::vector<double> a, std::vector<double> b, double tie_tol) {
  std::vector<std::pair<double, int>> merged;
  for (double v : a) merged.emplace_back(v, 0);
  for (double v : b) merged.emplace_back(v, 1);
  std::sort(merged.begin(), merged.end());
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i + 1].first - merged[i].first <= tie_tol) return {false, "shared root"};
    if (merged[i].second == merged[i + 1].second) return {false, "roots do not alternate"};
  }
  return {true, ""};
}

}  // namespace

template <Scalar S>
InterlaceCheck oracle_interlace(const Poly<S>& g, const Poly<S>& h, double rho) {
  if (g.degree() != h.degree()) return {false, "degree mismatch"};
  if (g.degree() < 1) return {false, "constant polynomial"};
  const RootSet rg = classify_circle(find_roots(g), rho);
  const RootSet rh = classify_circle(find_roots(h), rho);
  for (const RootSet* rs : {&rg, &rh})
    for (const auto& r : rs->roots) {
      if (r.circle_tag != CircleTag::OnCircle) return {false, "root off the unit circle"};
      if (r.multiplicity > 1) return {false, "multiple root"};
    }
  auto check = alternate(root_arguments(rg), root_arguments(rh), 1e-9);
  if (check.interlacing) return check;
  // The wrap-around pair (last, first) is covered by the even length; only
  // a shared root straddling 0 / 2 pi needs a second look.
  return check;
}

template <Scalar S>
InterlaceCheck oracle_real_interlace(const Poly<S>& f, const Poly<S>& F, double tol) {
  if (f.degree() != F.degree()) return {false, "degree mismatch"};
  if (f.degree() < 1) return {false, "constant polynomial"};
  const RootSet rf = classify_line(find_roots(f), tol);
  const RootSet rF = classify_line(find_roots(F), tol);
  std::vector<double> a, b;
  for (auto [rs, out] : {std::pair{&rf, &a}, std::pair{&rF, &b}})
    for (const auto& r : rs->roots) {
      if (r.line_tag != LineTag::Real) return {false, "non-real root"};
      if (r.multiplicity > 1) return {false, "multiple root"};
      out->push_back(r.value.real());
    }
  return alternate(a, b, 1e-9);
}

template InterlaceCheck oracle_interlace(const FloatPoly&, const FloatPoly&, double);
template InterlaceCheck oracle_interlace(const ExactPoly&, const ExactPoly&, double);
template InterlaceCheck oracle_real_interlace(const FloatPoly&, const FloatPoly&, double);
template InterlaceCheck oracle_real_interlace(const ExactPoly&, const ExactPoly&, double);

}  // namespace sipoly
