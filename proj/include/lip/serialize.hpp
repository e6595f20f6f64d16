#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "lip/eaqecc.hpp"

namespace lip {

using nlohmann::json;

// Elements serialize as their integer encodings; a field serializes as
// {p, e} (the modulus is derived, never stored).

json field_to_json(const Field& field);
FieldPtr field_from_json(const json& j);

json poly_to_json(const Poly& f);
Poly poly_from_json(const FieldPtr& field, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& field, const json& j);

/// {q: {p, e}, n, k, generator: ..., name?}
json code_to_json(const LinearCode& c);
LinearCode code_from_json(const json& j);

/// {c1, c2, ell, monomial?}
json pair_to_json(const IntersectionPair& pair, const Matrix* monomial = nullptr);
IntersectionPair pair_from_json(const json& j);

json eaqecc_to_json(const EaqeccParams& p);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace lip
