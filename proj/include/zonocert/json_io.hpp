#pragma once

#include "zonocert/dicing.hpp"
#include "zonocert/parallelohedron.hpp"
#include "zonocert/zonotope.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace zonocert {

using Json = nlohmann::json;

/// Input that does not match a document schema. `where` is a JSON-path-like
/// location such as "$.normals[2][0]".
class SchemaError : public std::runtime_error {
public:
  SchemaError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Json to_json(const RatMatrix& m); // list of rows
Json to_json(const NormalSet& ns);
Json to_json(const EdgeSet& es);
Json to_json(const Zonotope& z);
Json to_json(const LatticeBasis& b); // {"dim", "basis": columns, "det"}
Json to_json(const std::vector<FacetDescriptor>& facets, std::size_t dim);
Json to_json(const VenkovReport& report);
Json to_json(const DvCell& cell);
Json to_json(const DeloneReport& report);
Json to_json(const VoronoiCertificate& cert);
/// {"error", "message", "stage"?, "witness"?}
Json error_payload(const Error& e);

Rational rational_from_json(const Json& j, const std::string& where);
RatVector vector_from_json(const Json& j, const std::string& where, std::size_t dim);
RatMatrix matrix_from_json(const Json& j, const std::string& where);
NormalSet normal_set_from_json(const Json& j, const std::string& where = "$");
EdgeSet edge_set_from_json(const Json& j, const std::string& where = "$");
Zonotope zonotope_from_json(const Json& j, const std::string& where = "$");
LatticeBasis lattice_from_json(const Json& j, const std::string& where = "$");
VoronoiCertificate certificate_from_json(const Json& j, const std::string& where = "$");

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

} // namespace zonocert
