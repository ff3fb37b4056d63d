#include "sipoly/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>
#include <vector>

#include "sipoly/errors.hpp"

namespace sipoly {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

/// Unsigned or signed real literal: integer, p/q, or (float mode) decimal.
template <Scalar S>
S parse_real(std::string_view s, std::size_t column) {
  if (s.empty()) throw ParseError("missing number at column " + std::to_string(column), column);
  const std::size_t slash = s.find('/');
  const bool decimal = s.find_first_of(".eE") != std::string_view::npos;
  if constexpr (is_exact_v<S>) {
    if (decimal)
      throw ParseError("decimal literal " + quoted(s) + " at column " + std::to_string(column) +
                           " is not allowed in exact mode (use p/q)",
                       column);
  }
  auto integer = [&](std::string_view digits, std::size_t col) {
    std::string_view body = digits;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed integer " + quoted(digits) + " at column " + std::to_string(col), col);
    mpz_class z;
    z.set_str(std::string(digits[0] == '+' ? digits.substr(1) : digits), 10);
    return z;
  };

  if (slash != std::string_view::npos) {
    if (decimal) throw ParseError("malformed fraction " + quoted(s) + " at column " + std::to_string(column), column);
    const mpz_class num = integer(s.substr(0, slash), column);
    const mpz_class den = integer(s.substr(slash + 1), column + slash + 1);
    if (sgn(den) == 0) throw ParseError("zero denominator at column " + std::to_string(column + slash + 1), column + slash + 1);
    mpq_class q(num, den);
    q.canonicalize();
    if constexpr (is_exact_v<S>) return GaussRational(q);
    else return Complex(q.get_d(), 0.0);
  }
  if constexpr (is_exact_v<S>) {
    return GaussRational(mpq_class(integer(s, column)));
  } else {
    double v = 0.0;
    const char* first = s.data() + (s[0] == '+' ? 1 : 0);
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw ParseError("malformed number " + quoted(s) + " at column " + std::to_string(column), column);
    return Complex(v, 0.0);
  }
}

template <Scalar S>
S make(const S& re, const S& im) {
  return re + im * imaginary_unit<S>();
}

}  // namespace

template <Scalar S>
S parse_scalar(std::string_view token, std::size_t column) {
  if (token.empty()) throw ParseError("empty coefficient at column " + std::to_string(column), column);
  if (token.back() != 'i') return parse_real<S>(token, column);

  // Imaginary part present: split at the last sign that is not the first
  // character and does not follow an exponent marker.
  std::size_t split = std::string_view::npos;
  for (std::size_t j = token.size() - 1; j-- > 1;) {
    const char c = token[j];
    if ((c == '+' || c == '-') && token[j - 1] != 'e' && token[j - 1] != 'E') {
      split = j;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : token.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? token : token.substr(split);
  im_part.remove_suffix(1);  // drop 'i'
  const std::size_t im_column = column + (split == std::string_view::npos ? 0 : split);

  S im;
  if (im_part.empty() || im_part == "+") im = from_ratio<S>(1);
  else if (im_part == "-") im = from_ratio<S>(-1);
  else im = parse_real<S>(im_part, im_column);
  const S re = re_part.empty() ? S{} : parse_real<S>(re_part, column);
  return make(re, im);
}

template <Scalar S>
Poly<S> parse_poly(std::string_view text) {
  std::vector<S> coeffs;
  std::size_t j = 0;
  while (j < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
      continue;
    }
    std::size_t end = j;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    coeffs.push_back(parse_scalar<S>(text.substr(j, end - j), j + 1));
    j = end;
  }
  if (coeffs.empty()) throw ParseError("empty polynomial", 1);
  return Poly<S>(std::move(coeffs));
}

template <Scalar S>
Matrix<S> parse_matrix(std::string_view text) {
  std::vector<std::vector<S>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::vector<S> row;
    std::size_t j = start;
    while (j < end) {
      if (std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
        continue;
      }
      std::size_t stop = j;
      while (stop < end && !std::isspace(static_cast<unsigned char>(text[stop]))) ++stop;
      row.push_back(parse_scalar<S>(text.substr(j, stop - j), j + 1));
      j = stop;
    }
    if (row.empty()) throw ParseError("empty matrix row at column " + std::to_string(start + 1), start + 1);
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("ragged matrix row at column " + std::to_string(start + 1), start + 1);
    rows.push_back(std::move(row));
    start = end + 1;
  }
  Matrix<S> m(rows.size(), rows.size());
  if (rows.front().size() != rows.size()) throw ParseError("matrix must be square", 1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k) m(i, k) = rows[i][k];
  return m;
}

std::string format_scalar(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", z.real());
  std::string s = buf;
  if (z.imag() != 0.0) {
    std::snprintf(buf, sizeof buf, "%+.17gi", z.imag());
    s += buf;
  }
  return s;
}

std::string format_scalar(const GaussRational& z) { return z.to_string(); }

template <Scalar S>
std::string format_poly(const Poly<S>& g) {
  if (g.is_zero()) return "0";
  std::string s;
  for (const auto& a : g.coeffs()) {
    if (!s.empty()) s += ' ';
    s += format_scalar(a);
  }
  return s;
}

template Poly<Complex> parse_poly(std::string_view);
template Poly<GaussRational> parse_poly(std::string_view);
template Complex parse_scalar(std::string_view, std::size_t);
template GaussRational parse_scalar(std::string_view, std::size_t);
template Matrix<Complex> parse_matrix(std::string_view);
template Matrix<GaussRational> parse_matrix(std::string_view);
template std::string format_poly(const Poly<Complex>&);
template std::string format_poly(const Poly<GaussRational>&);

}  // namespace sipoly
