#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cusp/fibration.hpp"
#include "cusp/weyl.hpp"

namespace cusp {

using Json = nlohmann::ordered_json;

/// Malformed input document; the message names the offending field.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integers are JSON numbers when they fit in 64 bits and decimal strings otherwise.
Json to_json(const Integer& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Signature& s);
Json to_json(const GramLattice& l);
Json to_json(const Sublattice& s);
Json to_json(const Isometry& g);
Json to_json(const LooijengaSurface& s);  // boundary indices in history are 1-based
Json to_json(const PeriodPoint& p);
Json to_json(const FiberConfiguration& f);
Json to_json(const EllipticFibration& f);
Json to_json(const IsometryType& t);
Json to_json(const WeylCertificate& c);
Json to_json(const CriterionReport& r);

Integer integer_from_json(const Json& j, const std::string& field);
Vector vector_from_json(const Json& j, const std::string& field);
Matrix matrix_from_json(const Json& j, const std::string& field);
GramLattice lattice_from_json(const Json& j, const std::string& field = "lattice");
LooijengaSurface surface_from_json(const Json& j);
/// The domain basis is read in the Picard coordinates of `s`.
PeriodPoint period_from_json(const Json& j, const LooijengaSurface& s);
Isometry isometry_from_json(const Json& j, const GramLattice& ambient);

Json parse_json_file(const std::string& path);

/// Indented rendering with arrays of scalars kept on one line.
std::string format_json(const Json& j);

}  // namespace cusp
