#include "zonocert/dicing.hpp"
#include "zonocert/linalg.hpp"

#include <map>

namespace zonocert {

NormalSet::NormalSet(std::size_t dim, std::vector<RatVector> normals, std::vector<Rational> weights)
    : dim_(dim), normals_(std::move(normals)), weights_(std::move(weights)) {
  if (dim_ < 2) throw Error(ErrorKind::InvalidInput, "normal set dimension must be at least 2");
  if (weights_.size() != normals_.size())
    throw Error(ErrorKind::InvalidInput, "expected one weight per normal");
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].size() != dim_)
      throw Error(ErrorKind::InvalidInput, "normals[" + std::to_string(i) + "] has wrong length");
    if (is_zero(normals_[i]))
      throw Error(ErrorKind::InvalidInput, "normals[" + std::to_string(i) + "] is zero");
    if (weights_[i] <= 0)
      throw Error(ErrorKind::InvalidInput, "weights[" + std::to_string(i) + "] is not positive");
    for (std::size_t j = 0; j < i; ++j)
      if (parallel(normals_[i], normals_[j]))
        throw Error(ErrorKind::InvalidInput, "normals[" + std::to_string(j) + "] and normals[" +
                                                 std::to_string(i) + "] are parallel");
  }
  if (rank(normals_) < dim_)
    throw Error(ErrorKind::InvalidInput, "normals do not contain " + std::to_string(dim_) +
                                             " linearly independent vectors");
}

NormalSet::NormalSet(std::size_t dim, std::vector<RatVector> normals)
    : NormalSet(dim, normals, std::vector<Rational>(normals.size(), Rational(1))) {}

RatMatrix NormalSet::matrix() const { return RatMatrix::from_columns(normals_, dim_); }

NotADicing::NotADicing(std::vector<EdgeWitness> witnesses)
    : Error(ErrorKind::NotADicing,
            "normals violate the edge-set conditions: " + std::to_string(witnesses.size()) +
                " subset(s) admit no {0,+-1} edge scaling, first " +
                to_string(witnesses.front().kernel)),
      witnesses_(std::move(witnesses)) {}

IndexSet first_independent(const std::vector<RatVector>& vectors, std::size_t dim) {
  IndexSet picked;
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < vectors.size() && picked.size() < dim; ++i) {
    rows.push_back(vectors[i]);
    if (rank(rows) == rows.size()) {
      picked.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  return picked;
}

EdgeSet compute_edge_set(const NormalSet& ns) {
  const std::size_t d = ns.dimension();
  const auto& normals = ns.normals();
  std::map<RatVector, std::size_t> seen;
  std::vector<EdgeWitness> failures;
  EdgeSet es;
  es.dim = d;

  for_each_subset(normals.size(), d - 1, [&](const IndexSet& subset) {
    std::vector<RatVector> rows;
    for (auto i : subset) rows.push_back(normals[i]);
    RatMatrix m = RatMatrix::from_rows(rows);
    if (rank(m) != d - 1) return;
    RatVector kernel = kernel_line(m);

    std::vector<Rational> products;
    Rational magnitude = 0;
    bool ok = true;
    for (const auto& n : normals) {
      products.push_back(dot(n, kernel));
      const Rational a = abs(products.back());
      if (a == 0) continue;
      if (magnitude == 0) {
        magnitude = a;
      } else if (a != magnitude) {
        ok = false;
      }
    }
    if (!ok) {
      failures.push_back({subset, kernel, std::move(products)});
      return;
    }
    RatVector edge = scale(kernel, 1 / magnitude);
    if (seen.emplace(edge, es.edges.size()).second) es.edges.push_back(std::move(edge));
  });

  if (!failures.empty()) throw NotADicing(std::move(failures));

  for (const auto& e : es.edges) {
    IndexSet prov;
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (dot(normals[i], e) == 0) prov.push_back(i);
    es.provenance.push_back(std::move(prov));
  }
  return es;
}

LatticeBasis lattice_of_dicing(const NormalSet& ns) {
  EdgeSet es = compute_edge_set(ns);
  const std::size_t d = ns.dimension();
  LatticeBasis spanned = hnf_lattice_basis(ns.normals(), d);
  LatticeBasis lattice = hnf_lattice_basis(dual_lattice_basis(spanned).vectors(), d);
  for (const auto& e : es.edges)
    if (!lattice.contains(e))
      throw Error(ErrorKind::NotInLattice, "edge " + to_string(e) + " is not a lattice vector");
  return lattice;
}

namespace {

bool unit_entries(const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x != 0 && x != 1 && x != -1) return false;
    }
  return true;
}

} // namespace

bool is_totally_unimodular(const RatMatrix& m) {
  if (!m.all_integer()) throw Error(ErrorKind::NonIntegerEntries, "total unimodularity needs an integer matrix");
  if (!unit_entries(m)) return false;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 2; k <= kmax; ++k) {
    bool ok = true;
    for_each_subset(m.rows(), k, [&](const IndexSet& rows) {
      if (!ok) return;
      RatMatrix sub_rows = m.select_rows(rows);
      for_each_subset(m.cols(), k, [&](const IndexSet& cols) {
        if (!ok) return;
        Rational minor = det(sub_rows.select_columns(cols));
        if (minor != 0 && minor != 1 && minor != -1) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

DicingRep unimodular_representation(const NormalSet& ns, const EdgeSet& es) {
  const std::size_t d = ns.dimension();
  auto fail = [](const std::string& what) {
    return Error(ErrorKind::RepresentationCheckFailed, "unimodular representation: " + what);
  };

  DicingRep rep;
  rep.basis_normals = first_independent(ns.normals(), d);
  if (rep.basis_normals.size() != d) throw fail("normals do not span");
  RatMatrix b = ns.matrix().select_columns(rep.basis_normals);
  rep.transform = b.transpose();
  rep.normals_matrix = inverse(rep.transform).transpose() * ns.matrix();
  rep.edges_matrix = rep.transform * es.matrix();
  rep.edge_signs.assign(es.edges.size(), 1);

  const RatMatrix id = RatMatrix::identity(d);
  for (std::size_t i = 0; i < d; ++i)
    if (rep.normals_matrix.column(rep.basis_normals[i]) != id.column(i))
      throw fail("basis normal " + std::to_string(rep.basis_normals[i]) + " does not map to e" +
                 std::to_string(i + 1));

  for (std::size_t i = 0; i < d; ++i) {
    std::size_t found = es.edges.size();
    for (std::size_t k = 0; k < es.edges.size() && found == es.edges.size(); ++k) {
      bool dual = true;
      for (std::size_t r = 0; r < d && dual; ++r) {
        const Rational& x = rep.edges_matrix(r, k);
        dual = (r == i) ? (x == 1 || x == -1) : (x == 0);
      }
      if (dual) found = k;
    }
    if (found == es.edges.size()) throw fail("no edge dual to basis normal " + std::to_string(i));
    if (rep.edges_matrix(i, found) < 0) {
      rep.edge_signs[found] = -1;
      for (std::size_t r = 0; r < d; ++r) rep.edges_matrix(r, found) = -rep.edges_matrix(r, found);
    }
    rep.basis_edges.push_back(found);
  }

  if (!unit_entries(rep.normals_matrix)) throw fail("D' has entries outside {0,+-1}");
  if (!unit_entries(rep.edges_matrix)) throw fail("E' has entries outside {0,+-1}");
  rep.totally_unimodular = is_totally_unimodular(rep.normals_matrix);
  if (!rep.totally_unimodular) throw fail("D' is not totally unimodular");
  return rep;
}

std::pair<NormalSet, EdgeSet> apply_affine(const NormalSet& ns, const EdgeSet& es, const RatMatrix& l) {
  if (l.rows() != ns.dimension() || !l.square())
    throw Error(ErrorKind::DimensionMismatch, "transform must be d x d");
  RatMatrix dual = inverse(l).transpose();
  std::vector<RatVector> normals;
  for (const auto& n : ns.normals()) normals.push_back(dual * n);
  EdgeSet out = es;
  for (auto& e : out.edges) e = l * e;
  return {NormalSet(ns.dimension(), std::move(normals), ns.weights()), std::move(out)};
}

} // namespace zonocert
