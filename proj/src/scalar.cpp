#include "sipoly/scalar.hpp"

#include <cmath>

#include "sipoly/errors.hpp"

namespace sipoly {

namespace {

mpq_class exact_from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite coefficient");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

std::string rational_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace

GaussRational GaussRational::from_complex(Complex z) {
  return GaussRational(exact_from_double(z.real()), exact_from_double(z.imag()));
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const mpq_class d = o.norm();
  if (sgn(d) == 0) throw DomainError("division by zero Gaussian rational");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  std::string s = rational_string(re_);
  if (sgn(im_) >= 0) s += '+';
  s += rational_string(im_);
  s += 'i';
  return s;
}

}  // namespace sipoly
