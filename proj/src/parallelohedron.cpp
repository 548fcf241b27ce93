#include "zonocert/parallelohedron.hpp"
#include "zonocert/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zonocert {

QuadraticForm::QuadraticForm(RatMatrix q) : q_(std::move(q)) {
  if (!q_.square() || q_.rows() == 0)
    throw Error(ErrorKind::NotPositiveDefinite, "quadratic form must be a nonempty square matrix");
  if (q_.transpose() != q_) throw Error(ErrorKind::NotPositiveDefinite, "quadratic form is not symmetric");
  for (std::size_t k = 1; k <= q_.rows(); ++k) {
    IndexSet lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i] = i;
    if (det(q_.select_rows(lead).select_columns(lead)) <= 0)
      throw Error(ErrorKind::NotPositiveDefinite,
                  "leading principal minor of order " + std::to_string(k) + " is not positive");
  }
  inverse_ = zonocert::inverse(q_);
}

Rational QuadraticForm::operator()(std::span<const Rational> x) const { return dot(x, q_ * x); }

Rational QuadraticForm::pair(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(x, q_ * y);
}

MismatchError::MismatchError(std::vector<RatVector> missing, std::vector<RatVector> extra)
    : Error(ErrorKind::Mismatch, "facet vectors and edges differ: " + std::to_string(missing.size()) +
                                     " edge(s) unmatched, " + std::to_string(extra.size()) +
                                     " facet vector(s) unmatched"),
      missing_(std::move(missing)), extra_(std::move(extra)) {}

QuadraticForm quadratic_form(const NormalSet& ns) {
  const std::size_t d = ns.dimension();
  RatMatrix q(d, d);
  for (std::size_t i = 0; i < ns.size(); ++i) q = q + outer(ns.normal(i), ns.normal(i)) * ns.weight(i);
  return QuadraticForm(std::move(q));
}

std::vector<RatVector> zone_vectors(const NormalSet& ns) {
  QuadraticForm q = quadratic_form(ns);
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < ns.size(); ++i) out.push_back(q.inverse() * scale(ns.normal(i), ns.weight(i)));
  return out;
}

Zonotope dv_zonotope(const NormalSet& ns) {
  compute_edge_set(ns);
  return Zonotope(ns.dimension(), zone_vectors(ns));
}

namespace {

Integer floor_sqrt(const Rational& x) {
  if (x <= 0) return 0;
  Integer fl, root;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  return root;
}

struct Enumerated {
  RatVector point;
  std::vector<Integer> coords;
  Rational norm;
};

// Voronoi's criterion: v carries a facet iff +-v are the only shortest
// vectors of the coset v + 2L. Every competitor is shorter than v, hence
// inside the enumeration bound.
std::vector<std::size_t> relevant_indices(const std::vector<Enumerated>& pts) {
  std::map<std::vector<int>, std::vector<std::size_t>> cosets;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<int> parity;
    for (const auto& c : pts[i].coords) parity.push_back(mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
    cosets[parity].push_back(i);
  }
  std::vector<std::size_t> out;
  for (const auto& [parity, members] : cosets) {
    Rational best = pts[members.front()].norm;
    for (auto m : members) best = std::min(best, pts[m].norm);
    std::size_t at_min = 0;
    for (auto m : members) at_min += pts[m].norm == best;
    if (at_min != 2) continue;
    for (auto m : members)
      if (pts[m].norm == best) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

DvCell dv_cell_oracle(const LatticeBasis& lattice, const QuadraticForm& q, const Rational& radius_multiplier) {
  const std::size_t d = lattice.dimension();
  if (d > 3) throw Error(ErrorKind::DimensionTooLarge, "Voronoi cell oracle supports dimension <= 3");
  if (q.dimension() != d) throw Error(ErrorKind::DimensionMismatch, "form and lattice dimensions differ");
  if (radius_multiplier <= 0) throw Error(ErrorKind::InvalidInput, "radius multiplier must be positive");

  const auto basis = lattice.vectors();
  Rational longest = 0;
  for (std::size_t i = 0; i < d; ++i) {
    longest = std::max(longest, q(basis[i]));
    for (std::size_t j = i + 1; j < d; ++j) {
      longest = std::max(longest, q(add(basis[i], basis[j])));
      longest = std::max(longest, q(subtract(basis[i], basis[j])));
    }
  }
  DvCell cell;
  cell.bound = radius_multiplier * longest;

  // |k_i| <= sqrt(bound * (G^-1)_ii) for the Gram matrix G = B^T Q B
  const RatMatrix& b = lattice.matrix();
  RatMatrix gram_inv = inverse(b.transpose() * q.matrix() * b);
  std::vector<Integer> reach(d);
  for (std::size_t i = 0; i < d; ++i) reach[i] = floor_sqrt(cell.bound * gram_inv(i, i));

  std::vector<Enumerated> pts;
  std::vector<Integer> k(d);
  for (std::size_t i = 0; i < d; ++i) k[i] = -reach[i];
  while (true) {
    bool zero = std::all_of(k.begin(), k.end(), [](const Integer& x) { return x == 0; });
    if (!zero) {
      RatVector coords(d);
      for (std::size_t i = 0; i < d; ++i) coords[i] = Rational(k[i]);
      RatVector p = b * coords;
      Rational n = q(p);
      if (n <= cell.bound) pts.push_back({std::move(p), k, std::move(n)});
    }
    std::size_t i = 0;
    while (i < d && k[i] == reach[i]) {
      k[i] = -reach[i];
      ++i;
    }
    if (i == d) break;
    ++k[i];
  }
  for (const auto& e : pts) cell.lattice_points.push_back(e.point);
  if (rank(cell.lattice_points) < d)
    throw Error(ErrorKind::EnumerationInsufficient, "enumerated lattice points do not bound a cell");

  // half-spaces x . (Q p) <= phi(p) / 2
  std::vector<RatVector> normals;
  std::vector<Rational> offsets;
  for (const auto& e : pts) {
    normals.push_back(q.matrix() * e.point);
    offsets.push_back(e.norm / 2);
  }
  const auto relevant = relevant_indices(pts);

  std::set<RatVector> vertices;
  for_each_subset(relevant.size(), d, [&](const IndexSet& subset) {
    RatMatrix a(d, d);
    RatVector rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) a(r, c) = normals[relevant[subset[r]]][c];
      rhs[r] = offsets[relevant[subset[r]]];
    }
    if (det(a) == 0) return;
    RatVector x = solve(a, rhs);
    for (std::size_t h = 0; h < normals.size(); ++h)
      if (dot(normals[h], x) > offsets[h]) return;
    vertices.insert(std::move(x));
  });
  cell.vertices.assign(vertices.begin(), vertices.end());
  if (cell.vertices.empty()) throw Error(ErrorKind::EnumerationInsufficient, "no cell vertices found");

  Rational widest = 0;
  for (const auto& v : cell.vertices) {
    const Rational r = q(v);
    widest = std::max(widest, r);
    std::size_t equidistant = 1; // the origin
    for (const auto& e : pts)
      if (q(subtract(v, e.point)) == r) ++equidistant;
    if (equidistant < d + 1)
      throw Error(ErrorKind::EnumerationInsufficient,
                  "vertex " + to_string(v) + " has only " + std::to_string(equidistant) +
                      " equidistant lattice points");
  }
  if (4 * widest > cell.bound)
    throw Error(ErrorKind::EnumerationInsufficient,
                "enumeration bound " + to_string(cell.bound) + " is below 4 * max phi(vertex) = " +
                    to_string(4 * widest) + "; raise the radius multiplier");
  return cell;
}

namespace {

FacetVectorSet bisector_vectors(const Zonotope& z, const QuadraticForm& q, const LatticeBasis& lattice) {
  FacetVectorSet fv;
  const auto fs = facets(z);
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const RatVector& n = fs[f].normal;
    RatVector w = q.inverse() * n;
    Rational t = 2 * fs[f].support / dot(n, w);
    RatVector lambda = scale(w, t);
    if (!lattice.contains(lambda))
      throw Error(ErrorKind::NotInLattice, "facet vector " + to_string(lambda) + " is not a lattice vector");
    // the facet plane n.x = h must be the phi-bisector x^T Q lambda = phi(lambda)/2
    if (q.matrix() * lambda != scale(n, t) || q(lambda) / 2 != t * fs[f].support)
      throw Error(ErrorKind::NotInLattice, "facet " + to_string(n) + " is not the bisector of " + to_string(lambda));
    fv.vectors.push_back(std::move(lambda));
    fv.facet_link.push_back(f);
  }
  return fv;
}

BasisSelection select_basis(const FacetVectorSet& fv, const EdgeSet& es, const DicingRep& rep,
                            const std::vector<EdgeFacetMatch>& matching, const LatticeBasis& lattice,
                            const NormalSet& ns) {
  const std::size_t d = ns.dimension();
  auto fail = [](const std::string& what) { return Error(ErrorKind::BasisCheckFailed, what); };
  if (rep.basis_normals.size() != d || rep.basis_edges.size() != d) throw fail("representation lacks a basis");
  if (rep.edge_signs.size() != es.edges.size()) throw fail("representation and edge set disagree");

  BasisSelection sel;
  std::vector<RatVector> chosen;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t edge = rep.basis_edges[i];
    auto m = std::find_if(matching.begin(), matching.end(), [&](const EdgeFacetMatch& x) { return x.edge == edge; });
    if (m == matching.end()) throw fail("edge " + std::to_string(edge) + " has no facet vector");
    int s = m->sign * rep.edge_signs.at(edge);
    RatVector v = scale(fv.vectors.at(m->facet_vector), Rational(s));
    for (std::size_t j = 0; j < d; ++j) {
      Rational p = dot(ns.normal(rep.basis_normals[j]), v);
      if (p != (i == j ? 1 : 0)) throw fail("selected vector " + to_string(v) + " is not dual to the basis normals");
    }
    sel.indices.push_back(m->facet_vector);
    sel.signs.push_back(s);
    chosen.push_back(std::move(v));
  }

  RatMatrix c = RatMatrix::from_columns(chosen, d);
  if (det(c) == 0) throw fail("selected facet vectors are dependent");
  RatMatrix c_inv = inverse(c);
  for (const auto& v : fv.vectors)
    if (!is_integral(c_inv * v)) throw fail("facet vector " + to_string(v) + " is not integral in the selected basis");
  sel.lattice_coordinate_det = det(c) / lattice.determinant();
  if (abs(sel.lattice_coordinate_det) != 1)
    throw fail("selected basis has lattice determinant " + to_string(sel.lattice_coordinate_det));
  return sel;
}

template <class F> auto run_stage(const char* name, F&& f) {
  try {
    return f();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(name);
    throw;
  }
}

} // namespace

FacetVectorSet facet_vectors(const NormalSet& ns) {
  LatticeBasis lattice = lattice_of_dicing(ns);
  return bisector_vectors(dv_zonotope(ns), quadratic_form(ns), lattice);
}

std::vector<EdgeFacetMatch> check_n_equals_e(const FacetVectorSet& fv, const EdgeSet& es) {
  std::vector<EdgeFacetMatch> matching;
  std::vector<bool> used(fv.vectors.size(), false);
  std::vector<RatVector> missing, extra;
  for (std::size_t e = 0; e < es.edges.size(); ++e) {
    const RatVector& edge = es.edges[e];
    const RatVector neg = negate(edge);
    bool found = false;
    for (std::size_t k = 0; k < fv.vectors.size() && !found; ++k) {
      if (used[k]) continue;
      int s = fv.vectors[k] == edge ? 1 : fv.vectors[k] == neg ? -1 : 0;
      if (s == 0) continue;
      used[k] = true;
      matching.push_back({e, k, s});
      found = true;
    }
    if (!found) missing.push_back(edge);
  }
  for (std::size_t k = 0; k < fv.vectors.size(); ++k)
    if (!used[k]) extra.push_back(fv.vectors[k]);
  if (!missing.empty() || !extra.empty()) throw MismatchError(std::move(missing), std::move(extra));
  return matching;
}

BasisSelection extract_basis(const FacetVectorSet& fv, const EdgeSet& es, const DicingRep& rep,
                             const std::vector<EdgeFacetMatch>& matching, const LatticeBasis& lattice,
                             const NormalSet& ns) {
  return select_basis(fv, es, rep, matching, lattice, ns);
}

DeloneReport delone_duality_check(const NormalSet& ns, const Rational& radius_multiplier) {
  const std::size_t d = ns.dimension();
  if (d > 3) throw Error(ErrorKind::DimensionTooLarge, "Delone duality check supports dimension <= 3");
  LatticeBasis lattice = lattice_of_dicing(ns);
  QuadraticForm q = quadratic_form(ns);
  DvCell cell = dv_cell_oracle(lattice, q, radius_multiplier);

  std::vector<RatVector> candidates = cell.lattice_points;
  candidates.push_back(zero_vector(d));

  DeloneReport report;
  for (const auto& x : cell.vertices) {
    auto violation = [&](const std::string& what) {
      return Error(ErrorKind::DualityViolation, "vertex " + to_string(x) + ": " + what);
    };
    DeloneVertex dv{x, q(x), {}};
    for (const auto& p : candidates) {
      Rational r = q(subtract(x, p));
      if (r < dv.radius) throw violation("lattice point " + to_string(p) + " lies inside the empty ellipsoid");
      if (r == dv.radius) dv.equidistant.push_back(p);
    }
    std::sort(dv.equidistant.begin(), dv.equidistant.end());
    if (dv.equidistant.size() < d + 1) throw violation("fewer than d+1 equidistant lattice points");
    std::vector<RatVector> spans;
    for (const auto& p : dv.equidistant) spans.push_back(subtract(p, dv.equidistant.front()));
    if (rank(spans) != d) throw violation("equidistant points do not affinely span");
    for (const auto& p : dv.equidistant)
      for (const auto& n : ns.normals())
        if (!is_integer(dot(n, p)))
          throw violation("point " + to_string(p) + " is off the hyperplanes of normal " + to_string(n));
    report.vertices.push_back(std::move(dv));
  }
  return report;
}

VoronoiCertificate certify_second_voronoi(const NormalSet& ns) {
  EdgeSet es = run_stage("edge-set", [&] { return compute_edge_set(ns); });
  LatticeBasis lattice = run_stage("lattice", [&] { return lattice_of_dicing(ns); });
  QuadraticForm q = run_stage("quadratic-form", [&] { return quadratic_form(ns); });
  Zonotope z = run_stage("zonotope", [&] { return Zonotope(ns.dimension(), zone_vectors(ns)); });
  FacetVectorSet fv = run_stage("facet-vectors", [&] { return bisector_vectors(z, q, lattice); });
  auto matching = run_stage("matching", [&] { return check_n_equals_e(fv, es); });
  DicingRep rep = run_stage("representation", [&] { return unimodular_representation(ns, es); });
  BasisSelection basis = run_stage("basis", [&] { return select_basis(fv, es, rep, matching, lattice, ns); });

  VoronoiCertificate cert{ns, std::move(es), std::move(q), std::move(z), std::move(fv), std::move(matching),
                          std::move(lattice), std::move(rep), std::move(basis), false};
  run_stage("verify", [&] {
    VerificationResult vr = verify_certificate(cert);
    if (!vr.ok) {
      std::string msg = "certificate failed verification:";
      for (const auto& f : vr.failures) msg += " " + f + ";";
      throw Error(ErrorKind::CertificateInvalid, msg);
    }
    return 0;
  });
  cert.verified = true;
  return cert;
}

namespace {

bool unit(const Rational& x) { return x == 0 || x == 1 || x == -1; }

// gcd of all d x d minors of an n x d integer matrix
Integer maximal_minor_gcd(const RatMatrix& m) {
  Integer g = 0;
  for_each_subset(m.rows(), m.cols(), [&](const IndexSet& rows) {
    Rational minor = det(m.select_rows(rows));
    Integer num = minor.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  });
  return g;
}

} // namespace

VerificationResult verify_certificate(const VoronoiCertificate& cert) {
  VerificationResult vr;
  auto fail = [&](std::string what) {
    vr.ok = false;
    vr.failures.push_back(std::move(what));
  };
  const NormalSet& ns = cert.normal_set;
  const std::size_t d = ns.dimension();
  const auto& edges = cert.edge_set.edges;
  const auto& fvs = cert.facet_vectors.vectors;

  if (cert.edge_set.dim != d || cert.zonotope.dimension() != d || cert.lattice.dimension() != d ||
      cert.form.dimension() != d) {
    fail("dimension mismatch between certificate fields");
    return vr;
  }

  // (E2) and edge provenance
  if (cert.edge_set.provenance.size() != edges.size()) fail("edge provenance has wrong length");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    IndexSet orth;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      Rational p = dot(ns.normal(i), edges[k]);
      if (!unit(p)) fail("normal " + std::to_string(i) + " pairs with edge " + std::to_string(k) + " outside {0,+-1}");
      if (p == 0) orth.push_back(i);
    }
    std::vector<RatVector> rows;
    for (auto i : orth) rows.push_back(ns.normal(i));
    if (rank(rows) + 1 != d) fail("edge " + std::to_string(k) + " is not cut out by d-1 independent normals");
    if (k < cert.edge_set.provenance.size() && cert.edge_set.provenance[k] != orth)
      fail("edge " + std::to_string(k) + " provenance differs from its orthogonal normals");
  }
  // (E1) converse: every independent (d-1)-subset of normals has an edge
  for_each_subset(ns.size(), d - 1, [&](const IndexSet& subset) {
    std::vector<RatVector> rows;
    for (auto i : subset) rows.push_back(ns.normal(i));
    if (rank(rows) + 1 != d) return;
    bool covered = std::any_of(edges.begin(), edges.end(), [&](const RatVector& e) {
      return std::all_of(rows.begin(), rows.end(), [&](const RatVector& r) { return dot(r, e) == 0; });
    });
    if (!covered) fail("no edge orthogonal to an independent subset of normals");
  });

  // form and zone vectors
  RatMatrix q(d, d);
  for (std::size_t i = 0; i < ns.size(); ++i) q = q + outer(ns.normal(i), ns.normal(i)) * ns.weight(i);
  if (q != cert.form.matrix()) fail("quadratic form differs from sum w d d^T");
  if (cert.zonotope.size() != ns.size()) {
    fail("zonotope has the wrong number of generators");
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i)
      if (q * cert.zonotope.generators()[i] != scale(ns.normal(i), ns.weight(i)))
        fail("generator " + std::to_string(i) + " is not Q^-1 w d");
  }

  // lattice equals {x : D^T x integral}
  RatMatrix pairing = ns.matrix().transpose() * cert.lattice.matrix();
  if (!pairing.all_integer()) {
    fail("lattice basis pairs non-integrally with a normal");
  } else if (maximal_minor_gcd(pairing) != 1) {
    fail("lattice is a proper sublattice of the dicing lattice");
  }

  // facet vectors are lattice vectors whose bisectors support facets
  if (cert.facet_vectors.facet_link.size() != fvs.size()) fail("facet links have wrong length");
  for (std::size_t k = 0; k < fvs.size(); ++k) {
    const RatVector& v = fvs[k];
    if (!cert.lattice.contains(v)) fail("facet vector " + std::to_string(k) + " is not in the lattice");
    RatVector dir = q * v;
    if (support_value(cert.zonotope, dir) != dot(v, dir) / 2)
      fail("bisector of facet vector " + std::to_string(k) + " does not support the zonotope");
    std::vector<RatVector> in_plane;
    for (const auto& g : cert.zonotope.generators())
      if (dot(dir, g) == 0) in_plane.push_back(g);
    if (rank(in_plane) + 1 != d) fail("bisector of facet vector " + std::to_string(k) + " meets only a lower face");
  }

  // N = E bijection
  if (cert.ne_bijection.size() != edges.size() || fvs.size() != edges.size()) fail("N and E have different sizes");
  std::set<std::size_t> edge_seen, fv_seen;
  for (const auto& m : cert.ne_bijection) {
    if (m.edge >= edges.size() || m.facet_vector >= fvs.size() || (m.sign != 1 && m.sign != -1)) {
      fail("malformed matching entry");
      continue;
    }
    if (!edge_seen.insert(m.edge).second || !fv_seen.insert(m.facet_vector).second) fail("matching is not injective");
    if (edges[m.edge] != scale(fvs[m.facet_vector], Rational(m.sign)))
      fail("edge " + std::to_string(m.edge) + " differs from its matched facet vector");
  }

  // basis
  const auto& sel = cert.basis;
  if (sel.indices.size() != d || sel.signs.size() != d) {
    fail("basis selection must name d facet vectors");
  } else {
    std::vector<RatVector> chosen;
    for (std::size_t i = 0; i < d; ++i) {
      if (sel.indices[i] >= fvs.size() || (sel.signs[i] != 1 && sel.signs[i] != -1)) {
        fail("basis index out of range");
        return vr;
      }
      chosen.push_back(scale(fvs[sel.indices[i]], Rational(sel.signs[i])));
    }
    RatMatrix c = RatMatrix::from_columns(chosen, d);
    Rational dc = det(c);
    if (dc == 0) {
      fail("basis vectors are dependent");
    } else {
      Rational lat_det = det(cert.lattice.matrix());
      Rational coord_det = dc / lat_det;
      if (coord_det != sel.lattice_coordinate_det) fail("stored lattice determinant is wrong");
      if (abs(coord_det) != 1) fail("basis determinant in lattice coordinates is not +-1");
      RatMatrix c_inv = inverse(c);
      for (const auto& v : fvs)
        if (!is_integral(c_inv * v)) fail("facet vector not integral in the chosen basis");
    }
  }

  // representation
  const DicingRep& rep = cert.representation;
  if (rep.transform.rows() == d && rep.transform.square() && det(rep.transform) != 0 &&
      rep.edge_signs.size() == edges.size()) {
    if (inverse(rep.transform).transpose() * ns.matrix() != rep.normals_matrix) fail("D' != (L^-1)^T D");
    RatMatrix le = rep.transform * cert.edge_set.matrix();
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (le.column(k) != scale(rep.edges_matrix.column(k), Rational(rep.edge_signs[k])))
        fail("E' column " + std::to_string(k) + " != L e");
    auto all_unit = [&](const RatMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!unit(m(r, c))) return false;
      return true;
    };
    if (!all_unit(rep.normals_matrix) || !all_unit(rep.edges_matrix)) fail("representation entries outside {0,+-1}");
    RatMatrix id = RatMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) {
      auto has = [&](const RatMatrix& m) {
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (m.column(c) == id.column(i)) return true;
        return false;
      };
      if (!has(rep.normals_matrix) || !has(rep.edges_matrix)) fail("representation misses a standard basis column");
    }
    if (!rep.normals_matrix.all_integer() || !is_totally_unimodular(rep.normals_matrix))
      fail("D' is not totally unimodular");
  } else {
    fail("representation transform is malformed");
  }
  return vr;
}

} // namespace zonocert
