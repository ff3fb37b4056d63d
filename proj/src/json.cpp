#include "sipoly/json.hpp"

namespace sipoly {

template <Scalar S>
Json to_json(const HermitianForm<S>& form) {
  const std::size_t n = form.n();
  Json entries = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < n; ++k) {
      const Complex z = to_complex(form.entries(i, k));
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    entries.push_back(std::move(row));
  }
  Json j;
  j["n"] = n;
  j["entries"] = std::move(entries);
  j["kind"] = form.kind;
  j["remainder_norm"] = form.remainder_norm;
  if constexpr (is_exact_v<S>) {
    Json exact = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(form.entries(i, k).to_string());
      exact.push_back(std::move(row));
    }
    j["exact_entries"] = std::move(exact);
  }
  return j;
}

template Json to_json(const HermitianForm<Complex>&);
template Json to_json(const HermitianForm<GaussRational>&);

Json to_json(const Inertia& in) {
  Json j;
  j["pi"] = in.positive;
  j["nu"] = in.negative;
  j["d"] = in.zero;
  return j;
}

Json to_json(const CircleCount& c) {
  Json j;
  j["inside"] = c.inside;
  j["on"] = c.on;
  j["outside"] = c.outside;
  j["distinct_on"] = c.distinct_on ? Json(*c.distinct_on) : Json(nullptr);
  j["distinct_pairs"] = c.distinct_pairs ? Json(*c.distinct_pairs) : Json(nullptr);
  j["exactness"] = to_string(c.exactness);
  if (c.unresolved != 0 || !c.multiplicity_resolved) {
    j["unresolved"] = c.unresolved;
    j["multiplicity_resolved"] = c.multiplicity_resolved;
  }
  return j;
}

Json to_json(const LineCount& c) {
  Json j;
  j["distinct_real"] = c.distinct_real;
  j["distinct_conjugate_pairs"] = c.distinct_conjugate_pairs;
  j["upper"] = c.upper;
  j["lower"] = c.lower;
  j["kernel"] = c.kernel;
  return j;
}

Json to_json(const InterlaceVerdict& v) {
  Json j;
  j["interlacing"] = v.interlacing;
  if (v.sign) j["sign"] = *v.sign == InterlaceSign::Positive ? "pos" : "neg";
  else j["sign"] = nullptr;
  if (v.reason) j["reason"] = to_string(*v.reason);
  else j["reason"] = nullptr;
  return j;
}

Json to_json(const RootSet& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.roots) {
    Json e;
    e["re"] = r.value.real();
    e["im"] = r.value.imag();
    e["mult"] = r.multiplicity;
    if (r.circle_tag) e["tag"] = to_string(*r.circle_tag);
    else if (r.line_tag) e["tag"] = to_string(*r.line_tag);
    else e["tag"] = nullptr;
    roots.push_back(std::move(e));
  }
  Json j;
  j["roots"] = std::move(roots);
  j["tolerance"] = rs.tolerance;
  return j;
}

}  // namespace sipoly
