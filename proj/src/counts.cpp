#include "sipoly/counts.hpp"

namespace sipoly {

const char* to_string(Exactness e) {
  switch (e) {
    case Exactness::Exact: return "Exact";
    case Exactness::FloatCertified: return "FloatCertified";
    case Exactness::FloatHeuristic: return "FloatHeuristic";
  }
  return "Exact";
}

}  // namespace sipoly
