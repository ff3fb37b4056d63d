#pragma once

// JSON encodings of the result types. Keys keep insertion order so equal
// results serialize to identical bytes.

#include <json.hpp>

#include "sipoly/counts.hpp"
#include "sipoly/forms.hpp"
#include "sipoly/inertia.hpp"
#include "sipoly/interlacing.hpp"
#include "sipoly/oracle.hpp"

namespace sipoly {

using Json = nlohmann::ordered_json;

/// {"n", "entries": [[[re, im], ...], ...], "kind", "remainder_norm"};
/// exact forms add "exact_entries" with "p/q+r/si" strings.
template <Scalar S>
Json to_json(const HermitianForm<S>& form);

/// {"pi", "nu", "d"}
Json to_json(const Inertia& in);

/// {"inside", "on", "outside", "distinct_on", "distinct_pairs", "exactness"}
/// plus "unresolved" and "multiplicity_resolved" when the kernel was not
/// resolved.
Json to_json(const CircleCount& c);

/// {"distinct_real", "distinct_conjugate_pairs", "upper", "lower", "kernel"}
Json to_json(const LineCount& c);

/// {"interlacing", "sign": "pos" | "neg" | null, "reason": string | null}
Json to_json(const InterlaceVerdict& v);

/// {"roots": [{"re", "im", "mult", "tag"}], "tolerance"}
Json to_json(const RootSet& rs);

}  // namespace sipoly
