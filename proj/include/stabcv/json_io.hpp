#pragma once

#include <json.hpp>

#include "stabcv/engine.hpp"
#include "stabcv/int_matrix.hpp"
#include "stabcv/polynomial.hpp"
#include "stabcv/pyramid.hpp"
#include "stabcv/quiver.hpp"
#include "stabcv/stabilize.hpp"

namespace stabcv {

using Json = nlohmann::ordered_json;

/// {"nvars": n, "terms": [{"coeff": "<decimal>", "exp": [...]}, ...]} in canonical order.
Json to_json(const Polynomial& p);
/// Throws InvalidInput on a malformed document.
Polynomial polynomial_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"n": n, "arrows": [[...]]} with the full 2n x 2n arrow counts.
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

/// Array of {"k", "F", "C"} records, with a "quiver" member each when requested.
Json to_json(const MutationTrace& trace, bool with_quivers = false);
/// Rebuilds a trace; quiver snapshots are required to be present.
MutationTrace trace_from_json(const Json& j);

/// {"degree_cap", "period", "window", "horizon", "terms": [{"exp", "coeff", "first_stable_step"}]}.
Json to_json(const StableReport& report);
StableReport stable_report_from_json(const Json& j, std::size_t nvars);

/// Debug dump: stones with (j, r, p, role, color) and support edges.
Json to_json(const PyramidShape& shape, const ColorScheme& scheme);

}  // namespace stabcv
