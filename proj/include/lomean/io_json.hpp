#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "lomean/constructions.hpp"
#include "lomean/inequalities.hpp"
#include "lomean/matrix.hpp"
#include "lomean/means.hpp"
#include "lomean/monotonicity.hpp"

namespace lomean {

using json = nlohmann::json;

/// {"dim": n, "re": [n*n row-major], "im": [n*n row-major]}; "im" omitted when
/// the matrix is real, and defaults to zeros when absent on input. Input is
/// symmetrized on construction.
json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const json& j);

HermitianMatrix load_matrix_file(const std::string& path);

/// {"kind": "arithmetic" | "geometric" | "harmonic"},
/// {"kind": "f_induced", "function": name},
/// {"kind": "discrete", "alpha": a, "atoms": [{"lambda": l, "w": w}, ...]}.
json mean_to_json(const MeanRepresentation& rep);
MeanRepresentation mean_from_json(const json& j);

json config_to_json(const MonotoneConfig& cfg);
MonotoneConfig config_from_json(const json& j);

/// Sampled-function table: {"t": [...], "f": [...]}.
ScalarFunction function_from_table_json(const json& j, const std::string& label);
ScalarFunction load_function_table(const std::string& path);

/// The report schema used by suite records:
/// {"holds", "min_residual_eig", "tol", "seed", "dim", "function"}.
json inequality_report_to_json(const InequalityReport& rep, std::uint64_t seed, int dim,
                               const std::string& function);

json counterexample_to_json(const Counterexample& ce);
json verdict_to_json(const MonotonicityVerdict& v);
json decomposition_to_json(const DecompositionResult& d);
json chain_to_json(const ChainResult& c);
json obstruction_to_json(const ObstructionRecord& rec);
json hok_search_to_json(const HokSearchResult& r);

}  // namespace lomean
