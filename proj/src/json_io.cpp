#include "zonocert/json_io.hpp"

namespace zonocert {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

namespace {

Json vectors_json(const std::vector<RatVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json witness_json(const EdgeWitness& w) {
  return {{"subset", w.subset}, {"kernel", to_json(w.kernel)}, {"products", to_json(w.products)}};
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

int sign_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.get<int>() != 1 && j.get<int>() != -1)) throw SchemaError(where, "expected 1 or -1");
  return j.get<int>();
}

IndexSet indices_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of indices");
  IndexSet out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(index_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<RatVector> vectors_from_json(const Json& j, const std::string& where, std::size_t dim) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of vectors");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]", dim));
  return out;
}

std::size_t dim_from_json(const Json& j, const std::string& where) {
  const Json& d = field(j, "dim", where);
  if (!d.is_number_integer() || d.get<long long>() < 1) throw SchemaError(where + ".dim", "expected a positive integer");
  return d.get<std::size_t>();
}

template <class F> auto wrap_domain(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw SchemaError(where, e.what());
  }
}

} // namespace

Json to_json(const NormalSet& ns) {
  return {{"dim", ns.dimension()}, {"normals", vectors_json(ns.normals())}, {"weights", to_json(ns.weights())}};
}

Json to_json(const EdgeSet& es) {
  return {{"dim", es.dim}, {"edges", vectors_json(es.edges)}, {"provenance", es.provenance}};
}

Json to_json(const Zonotope& z) { return {{"dim", z.dimension()}, {"generators", vectors_json(z.generators())}}; }

Json to_json(const LatticeBasis& b) {
  return {{"dim", b.dimension()}, {"basis", vectors_json(b.vectors())}, {"det", to_string(b.determinant())}};
}

Json to_json(const std::vector<FacetDescriptor>& facets, std::size_t dim) {
  Json a = Json::array();
  for (const auto& f : facets)
    a.push_back({{"normal", to_json(f.normal)},
                 {"support", to_string(f.support)},
                 {"subset", f.generator_subset},
                 {"center", to_json(f.center)}});
  return {{"dim", dim}, {"facet_pairs", facets.size()}, {"facets", a}};
}

Json to_json(const VenkovReport& report) {
  Json ridges = Json::array();
  for (const auto& r : report.ridges)
    ridges.push_back({{"flat", r.flat}, {"directions", r.direction_count}, {"shape", std::string(to_string(r.classification))}});
  return {{"parallelohedron", report.parallelohedron},
          {"centrally_symmetric", report.centrally_symmetric},
          {"facets_centrally_symmetric", report.facets_centrally_symmetric},
          {"ridges", ridges},
          {"witness", report.witness ? Json(*report.witness) : Json(nullptr)}};
}

Json to_json(const DvCell& cell) {
  return {{"vertices", vectors_json(cell.vertices)},
          {"bound", to_string(cell.bound)},
          {"lattice_points", cell.lattice_points.size()}};
}

Json to_json(const DeloneReport& report) {
  Json a = Json::array();
  for (const auto& v : report.vertices)
    a.push_back({{"vertex", to_json(v.vertex)}, {"radius", to_string(v.radius)}, {"equidistant", vectors_json(v.equidistant)}});
  return {{"vertices", a}};
}

Json to_json(const VoronoiCertificate& cert) {
  Json bij = Json::array();
  for (const auto& m : cert.ne_bijection) bij.push_back({{"edge", m.edge}, {"facet_vector", m.facet_vector}, {"sign", m.sign}});
  const DicingRep& rep = cert.representation;
  return {
      {"schema", "v1"},
      {"normal_set", to_json(cert.normal_set)},
      {"edge_set", to_json(cert.edge_set)},
      {"quadratic_form", to_json(cert.form.matrix())},
      {"zonotope", to_json(cert.zonotope)},
      {"facet_vectors", {{"vectors", vectors_json(cert.facet_vectors.vectors)}, {"facet_link", cert.facet_vectors.facet_link}}},
      {"ne_bijection", bij},
      {"lattice", to_json(cert.lattice)},
      {"representation",
       {{"transform", to_json(rep.transform)},
        {"normals_matrix", to_json(rep.normals_matrix)},
        {"edges_matrix", to_json(rep.edges_matrix)},
        {"basis_normals", rep.basis_normals},
        {"basis_edges", rep.basis_edges},
        {"edge_signs", rep.edge_signs},
        {"totally_unimodular", rep.totally_unimodular}}},
      {"basis_indices", cert.basis.indices},
      {"basis_signs", cert.basis.signs},
      {"det", to_string(cert.basis.lattice_coordinate_det)},
      {"verified", cert.verified},
  };
}

Json error_payload(const Error& e) {
  Json j = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (!e.stage().empty()) j["stage"] = e.stage();
  if (const auto* nd = dynamic_cast<const NotADicing*>(&e)) {
    j["witness"] = witness_json(nd->witness());
    Json all = Json::array();
    for (const auto& w : nd->witnesses()) all.push_back(witness_json(w));
    j["witnesses"] = all;
  } else if (const auto* mm = dynamic_cast<const MismatchError*>(&e)) {
    j["witness"] = {{"missing", vectors_json(mm->missing())}, {"extra", vectors_json(mm->extra())}};
  }
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw SchemaError(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(where, e.what());
  }
}

RatVector vector_from_json(const Json& j, const std::string& where, std::size_t dim) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of rationals");
  if (j.size() != dim) throw SchemaError(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RatMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw SchemaError(where, "expected a nonempty list of rows");
  std::vector<RatVector> rows;
  const std::size_t cols = j[0].size();
  for (std::size_t r = 0; r < j.size(); ++r) rows.push_back(vector_from_json(j[r], where + "[" + std::to_string(r) + "]", cols));
  return RatMatrix::from_rows(rows);
}

NormalSet normal_set_from_json(const Json& j, const std::string& where) {
  const std::size_t dim = dim_from_json(j, where);
  auto normals = vectors_from_json(field(j, "normals", where), where + ".normals", dim);
  std::vector<Rational> weights;
  if (j.contains("weights")) {
    const Json& w = j["weights"];
    if (!w.is_array()) throw SchemaError(where + ".weights", "expected an array of rationals");
    if (w.size() != normals.size())
      throw SchemaError(where + ".weights", "expected " + std::to_string(normals.size()) + " weights");
    for (std::size_t i = 0; i < w.size(); ++i)
      weights.push_back(rational_from_json(w[i], where + ".weights[" + std::to_string(i) + "]"));
  } else {
    weights.assign(normals.size(), Rational(1));
  }
  return wrap_domain(where, [&] { return NormalSet(dim, std::move(normals), std::move(weights)); });
}

EdgeSet edge_set_from_json(const Json& j, const std::string& where) {
  EdgeSet es;
  es.dim = dim_from_json(j, where);
  es.edges = vectors_from_json(field(j, "edges", where), where + ".edges", es.dim);
  const Json& prov = field(j, "provenance", where);
  if (!prov.is_array() || prov.size() != es.edges.size())
    throw SchemaError(where + ".provenance", "expected one index list per edge");
  for (std::size_t i = 0; i < prov.size(); ++i)
    es.provenance.push_back(indices_from_json(prov[i], where + ".provenance[" + std::to_string(i) + "]"));
  return es;
}

Zonotope zonotope_from_json(const Json& j, const std::string& where) {
  const std::size_t dim = dim_from_json(j, where);
  auto gens = vectors_from_json(field(j, "generators", where), where + ".generators", dim);
  return wrap_domain(where, [&] { return Zonotope(dim, gens); });
}

LatticeBasis lattice_from_json(const Json& j, const std::string& where) {
  const std::size_t dim = dim_from_json(j, where);
  auto cols = vectors_from_json(field(j, "basis", where), where + ".basis", dim);
  if (cols.size() != dim) throw SchemaError(where + ".basis", "expected " + std::to_string(dim) + " basis vectors");
  return wrap_domain(where, [&] { return LatticeBasis(RatMatrix::from_columns(cols, dim)); });
}

VoronoiCertificate certificate_from_json(const Json& j, const std::string& where) {
  const Json& schema = field(j, "schema", where);
  if (schema != "v1") throw SchemaError(where + ".schema", "unsupported certificate schema");
  NormalSet ns = normal_set_from_json(field(j, "normal_set", where), where + ".normal_set");
  EdgeSet es = edge_set_from_json(field(j, "edge_set", where), where + ".edge_set");
  RatMatrix qm = matrix_from_json(field(j, "quadratic_form", where), where + ".quadratic_form");
  QuadraticForm q = wrap_domain(where + ".quadratic_form", [&] { return QuadraticForm(qm); });
  Zonotope z = zonotope_from_json(field(j, "zonotope", where), where + ".zonotope");

  const std::string fw = where + ".facet_vectors";
  const Json& fj = field(j, "facet_vectors", where);
  FacetVectorSet fv;
  fv.vectors = vectors_from_json(field(fj, "vectors", fw), fw + ".vectors", ns.dimension());
  fv.facet_link = indices_from_json(field(fj, "facet_link", fw), fw + ".facet_link");

  const std::string bw = where + ".ne_bijection";
  const Json& bj = field(j, "ne_bijection", where);
  if (!bj.is_array()) throw SchemaError(bw, "expected an array");
  std::vector<EdgeFacetMatch> bij;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    const std::string w = bw + "[" + std::to_string(i) + "]";
    bij.push_back({index_from_json(field(bj[i], "edge", w), w + ".edge"),
                   index_from_json(field(bj[i], "facet_vector", w), w + ".facet_vector"),
                   sign_from_json(field(bj[i], "sign", w), w + ".sign")});
  }

  LatticeBasis lattice = lattice_from_json(field(j, "lattice", where), where + ".lattice");

  const std::string rw = where + ".representation";
  const Json& rj = field(j, "representation", where);
  DicingRep rep;
  rep.transform = matrix_from_json(field(rj, "transform", rw), rw + ".transform");
  rep.normals_matrix = matrix_from_json(field(rj, "normals_matrix", rw), rw + ".normals_matrix");
  rep.edges_matrix = matrix_from_json(field(rj, "edges_matrix", rw), rw + ".edges_matrix");
  rep.basis_normals = indices_from_json(field(rj, "basis_normals", rw), rw + ".basis_normals");
  rep.basis_edges = indices_from_json(field(rj, "basis_edges", rw), rw + ".basis_edges");
  const Json& sj = field(rj, "edge_signs", rw);
  if (!sj.is_array()) throw SchemaError(rw + ".edge_signs", "expected an array");
  for (std::size_t i = 0; i < sj.size(); ++i) rep.edge_signs.push_back(sign_from_json(sj[i], rw + ".edge_signs[" + std::to_string(i) + "]"));
  const Json& tu = field(rj, "totally_unimodular", rw);
  if (!tu.is_boolean()) throw SchemaError(rw + ".totally_unimodular", "expected a boolean");
  rep.totally_unimodular = tu.get<bool>();

  BasisSelection basis;
  basis.indices = indices_from_json(field(j, "basis_indices", where), where + ".basis_indices");
  const Json& bs = field(j, "basis_signs", where);
  if (!bs.is_array()) throw SchemaError(where + ".basis_signs", "expected an array");
  for (std::size_t i = 0; i < bs.size(); ++i) basis.signs.push_back(sign_from_json(bs[i], where + ".basis_signs[" + std::to_string(i) + "]"));
  basis.lattice_coordinate_det = rational_from_json(field(j, "det", where), where + ".det");

  const Json& verified = field(j, "verified", where);
  if (!verified.is_boolean()) throw SchemaError(where + ".verified", "expected a boolean");

  return VoronoiCertificate{std::move(ns), std::move(es), std::move(q), std::move(z), std::move(fv), std::move(bij),
                            std::move(lattice), std::move(rep), std::move(basis), verified.get<bool>()};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace zonocert
