#pragma once

#include <string>

#include "json.hpp"

#include "ellbasis/curve.hpp"
#include "ellbasis/omega_basis.hpp"

namespace ellbasis::io {

using json = nlohmann::json;

/// Decimal string to integer; FormatError on anything else.
uint64_t parse_u64(const std::string& s);
int64_t parse_i64(const std::string& s);

json field_to_json(const BaseField& K);
BaseFieldPtr field_from_json(const json& j);

/// An element is its array of F_p digits, low-to-high.
json fq_to_json(const BaseField& K, Fq a);
Fq fq_from_json(const BaseField& K, const json& j);
json vec_to_json(const BaseField& K, const FqVec& v);
FqVec vec_from_json(const BaseField& K, const json& j);
json poly_to_json(const BaseField& K, const FqPoly& f);
FqPoly poly_from_json(const BaseField& K, const json& j);
json ext_to_json(const ExtField& L, const ExtElement& a);
ExtElement ext_from_json(const ExtField& L, const json& j);

json point_to_json(const BaseField& K, const FqPoint& P);
FqPoint point_from_json(const BaseField& K, const json& j);
json curve_to_json(const FqCurve& E);
/// The field entry must equal K.
FqCurve curve_from_json(const BaseFieldPtr& K, const json& j);
json isogeny_to_json(const Isogeny& I);
json counts_to_json(const OpCounts& c);

/// Coordinates separated by commas; for m > 1 each coordinate is a /-separated digit list.
std::string vec_to_csv(const BaseField& K, const FqVec& v);
FqVec vec_from_csv(const BaseField& K, const std::string& s);
/// Integers separated by commas.
std::vector<int64_t> ints_from_csv(const std::string& s);

}  // namespace ellbasis::io
