#pragma once

#include <optional>

namespace sipoly {

enum class Exactness { Exact, FloatCertified, FloatHeuristic };

const char* to_string(Exactness e);

/// Root tally relative to |x| = 1, with multiplicity.
///
/// When a float-mode count meets a nontrivial kernel it cannot resolve the
/// multiplicities behind it; those roots are reported in `unresolved` and
/// inside + on + outside + unresolved = degree.
struct CircleCount {
  int inside = 0;
  int on = 0;
  int outside = 0;
  std::optional<int> distinct_on;
  std::optional<int> distinct_pairs;
  Exactness exactness = Exactness::Exact;
  int unresolved = 0;
  bool multiplicity_resolved = true;

  int total() const { return inside + on + outside + unresolved; }
};

/// Same inside/on/outside tally.
inline bool same_tally(const CircleCount& a, const CircleCount& b) {
  return a.inside == b.inside && a.on == b.on && a.outside == b.outside && a.unresolved == b.unresolved;
}

/// Root tally relative to the real line.
struct LineCount {
  int distinct_real = 0;
  int distinct_conjugate_pairs = 0;
  int upper = 0;
  int lower = 0;
  int kernel = 0;
};

}  // namespace sipoly
