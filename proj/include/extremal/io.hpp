#pragma once

#include "extremal/certifier.hpp"
#include "extremal/families.hpp"
#include "extremal/gram.hpp"
#include "extremal/matrix.hpp"
#include "extremal/search.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace extremal {

using Json = nlohmann::ordered_json;

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

using AnyGram = std::variant<GramTwoDistance<Rational>, GramTwoDistance<QuadExt>>;
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<ModP>, Matrix<QuadExt>>;

/// Reads a JSON file. A run report is unwrapped to its payload.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"n": 7, "sets": [[1,2,3], ...]} with 1-based elements in input order.
Json to_json(const SetFamily& family);
SetFamily family_from_json(const Json& j);

/// {"n": 4, "q": 2, "vectors": [[0,0,1,1], ...]}.
Json to_json(const VectorSystem& system);
VectorSystem vector_system_from_json(const Json& j);

/// {"n", "N", "a", "b", "gram", "field", "affine_dim"?, "coords"?}. Scalars
/// are strings; the field is Q or Q(sqrt(d)) and is inferred from the
/// entries when "field" is absent.
Json to_json(const AnyGram& gram);
AnyGram gram_from_json(const Json& j);

/// {"field": "Q" | "F_5" | "Q(sqrt(5))", "rows": [["1","1/2"], ...]}.
Json to_json(const AnyMatrix& matrix);
AnyMatrix matrix_from_json(const Json& j);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json to_json(const SearchProblem& problem);
Json to_json(const SearchResult& result);
/// Accepts the result object or a search payload {"problem", "result"}.
SearchResult search_result_from_json(const Json& j);

Json to_json(const SweepReport& report);

/// Name of the field of a scalar: "Q", "F_p" or "Q(sqrt(d))".
std::string field_name(const ExactScalar& value);

} // namespace extremal
