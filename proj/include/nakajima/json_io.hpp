#pragma once

#include <string>

#include "json.hpp"
#include "nakajima/btau.hpp"
#include "nakajima/grassmannian.hpp"
#include "nakajima/monad.hpp"
#include "nakajima/quadric.hpp"
#include "nakajima/quiver.hpp"

namespace nakajima {

using Json = nlohmann::json;

// Rationals are "num/den" strings; numbers are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Power-basis coefficient array.  A bare rational is accepted on input.
Json to_json(const CycScalar& c);
CycScalar cyc_from_json(const Json& j, int m);

// {"m", "charvals"} by default, {"m", "group"} on request; both are read.
Json to_json(const GroupAlgElem& t, bool group_basis = false);
GroupAlgElem group_from_json(const Json& j);

// [{"a", "b", "g", "c"}, ...] for x^a y^b g^g with coefficient c.
Json to_json(const BElem& b);
BElem belem_from_json(const Json& j, const TauPtr& ctx);

// [{"x", "z", "y", "w", "g", "c"}, ...] in the group basis.
Json to_json(const QElem& q);
Json to_json(const QMatrix& a);
Json to_json(const BiPoly& p);
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, int m);

// Rows of CycScalar arrays.  On input a flat row-major array is accepted
// when the shape is given.
Json to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j, size_t rows, size_t cols, int m);

Json to_json(const QuiverData& d);
QuiverData quiver_from_json(const Json& j);

Json to_json(const AdelicPoint& pt);
AdelicPoint adelic_from_json(const Json& j);

// "1", "1,-1/2" (character values) or a GroupAlgElem JSON object.
GroupAlgElem parse_tau(const std::string& s, int m);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// FNV-1a of the canonical dump, as 16 hex digits.
std::string config_hash(const Json& config);

}  // namespace nakajima
