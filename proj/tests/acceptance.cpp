// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Every check recomputes its expectation from first
// principles instead of trusting the pipeline's own self-checks.

#include "zonocert/convex_hull.hpp"
#include "zonocert/corpus.hpp"
#include "zonocert/linalg.hpp"
#include "zonocert/parallelohedron.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace zonocert;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

class Criterion {
public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  void note(std::string s) { notes_ = std::move(s); }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool report(std::ostream& out) const {
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << seconds();
    out << (failed_ ? "FAIL" : "PASS") << "  [" << id_ << "] " << title_ << " (" << checks_ << " checks, "
        << time.str() << " s" << (notes_.empty() ? "" : "; " + notes_) << ")\n";
    for (const auto& f : failures_) out << "        " << f << '\n';
    return !failed_;
  }

private:
  int id_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0;
  bool failed_ = false;
  std::vector<std::string> failures_;
  std::string notes_;
};

// Runs f, converting any exception into a failed expectation.
template <class F> void guarded(Criterion& c, const std::string& context, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    c.expect(false, context + ": unexpected exception: " + e.what());
  }
}

std::vector<CorpusEntry> load_corpus() {
  std::ifstream file(ZONOCERT_DATA_DIR "/corpus.json");
  std::stringstream buf;
  buf << file.rdbuf();
  return corpus_from_json(Json::parse(buf.str()));
}

std::vector<CorpusEntry> dicings(const std::vector<CorpusEntry>& corpus) {
  std::vector<CorpusEntry> out;
  for (const auto& e : corpus)
    if (!e.expected || !e.expected->error) out.push_back(e);
  return out;
}

NormalSet with_normals(std::size_t dim, std::vector<RatVector> normals) { return NormalSet(dim, std::move(normals)); }

bool contains_normal_set(const std::vector<CorpusEntry>& corpus, const NormalSet& want) {
  return std::any_of(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) {
    return e.normal_set.dimension() == want.dimension() && e.normal_set.normals() == want.normals();
  });
}

bool is_unit(const Rational& x) { return x == 0 || x == 1 || x == -1; }

// Determinant by Laplace expansion, independent of the elimination code.
Rational laplace_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Rational term = m(0, j) * laplace_det(minor);
    if (j % 2) term = -term;
    total += term;
  }
  return total;
}

void each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (idx.size() == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

bool all_minors_unit(const RatMatrix& m) {
  bool ok = true;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()) && ok; ++k)
    each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (ok && !is_unit(laplace_det(m.select_rows(rows).select_columns(cols)))) ok = false;
      });
    });
  return ok;
}

// Generalized cross product of d-1 vectors in dimension d: the vector of
// signed maximal minors, orthogonal to all of them.
RatVector cofactor_vector(const std::vector<RatVector>& rows, std::size_t d) {
  RatVector out(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (rows.empty()) {
      out[j] = 1;
      continue;
    }
    RatMatrix minor(d - 1, d - 1);
    for (std::size_t r = 0; r < d - 1; ++r)
      for (std::size_t c = 0, cc = 0; c < d; ++c)
        if (c != j) minor(r, cc++) = rows[r][c];
    out[j] = (j % 2 ? -1 : 1) * laplace_det(minor);
  }
  return out;
}

bool has_parallel(const std::vector<RatVector>& set, const RatVector& v) {
  return std::any_of(set.begin(), set.end(), [&](const RatVector& w) { return parallel(w, v); });
}

bool has_column(const RatMatrix& m, const RatVector& v) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m.column(c) == v) return true;
  return false;
}

Rational random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 12), den(1, 7);
  return rat(num(rng), den(rng));
}

NormalSet reweighted(const NormalSet& ns, std::mt19937_64& rng) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < ns.size(); ++i) w.push_back(random_weight(rng));
  return NormalSet(ns.dimension(), ns.normals(), w);
}

// Random integer matrix with determinant +-1 as a product of elementary
// operations and a signed permutation.
RatMatrix random_unimodular(std::size_t d, std::mt19937_64& rng) {
  RatMatrix u = RatMatrix::identity(d);
  std::uniform_int_distribution<std::size_t> index(0, d - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = index(rng), j = index(rng);
    if (i == j) continue;
    const int f = factor(rng);
    for (std::size_t c = 0; c < d; ++c) u(i, c) += f * u(j, c);
  }
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  RatMatrix p = u.select_rows(perm);
  if (rng() % 2)
    for (std::size_t c = 0; c < d; ++c) p(0, c) = -p(0, c);
  return p;
}

std::vector<RatVector> sorted(std::vector<RatVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

RatVector canonical_sign(RatVector v) {
  for (const auto& x : v) {
    if (x > 0) break;
    if (x < 0) return negate(v);
  }
  return v;
}

std::vector<RatVector> up_to_sign(const std::vector<RatVector>& vs) {
  std::vector<RatVector> out;
  for (const auto& v : vs) out.push_back(canonical_sign(v));
  return sorted(out);
}

// Primitive outward normal and offset of each facet plane of z, both signs.
std::set<std::pair<RatVector, Rational>> descriptor_planes(const Zonotope& z) {
  std::set<std::pair<RatVector, Rational>> out;
  for (const auto& f : facets(z)) {
    RatVector n = primitive_integer(f.normal);
    std::size_t k = 0;
    while (f.normal[k] == 0) ++k;
    Rational h = f.support * (n[k] / f.normal[k]);
    out.insert({n, h});
    out.insert({negate(n), h});
  }
  return out;
}

// ---------------------------------------------------------------------------

bool certificates(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(1, "certificates over the bundled corpus: |det| = 1 exactly and full N = E matching, < 10 s");
  const auto ds = dicings(corpus);
  std::set<std::size_t> dims;
  for (const auto& e : ds) dims.insert(e.normal_set.dimension());
  c.expect(ds.size() >= 10, "corpus has fewer than 10 dicings");
  c.expect(dims.count(2) && dims.count(3) && dims.count(4), "corpus must cover dimensions 2, 3 and 4");
  c.expect(contains_normal_set(ds, with_normals(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})})),
           "hexagonal fixture missing");
  for (std::size_t d = 2; d <= 4; ++d) {
    std::vector<RatVector> grid;
    for (std::size_t i = 0; i < d; ++i) grid.push_back(unit_vector(d, i));
    c.expect(contains_normal_set(ds, with_normals(d, grid)), "standard grid missing in dimension " + std::to_string(d));
  }
  c.expect(contains_normal_set(ds, with_normals(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}),
                                                    make_vector({0, 0, 1}), make_vector({1, 1, 1})})),
           "e1, e2, e3, (1,1,1) fixture missing");

  for (const auto& e : ds) {
    guarded(c, e.name, [&] {
      VoronoiCertificate cert = certify_second_voronoi(e.normal_set);
      const std::size_t d = e.normal_set.dimension();
      c.expect(cert.verified && verify_certificate(cert).ok, e.name + ": verifier rejected the certificate");
      // Determinant recomputed from the chosen vectors in lattice coordinates.
      std::vector<RatVector> coords;
      for (std::size_t i = 0; i < d; ++i)
        coords.push_back(cert.lattice.coordinates(
            scale(cert.facet_vectors.vectors.at(cert.basis.indices.at(i)), Rational(cert.basis.signs.at(i)))));
      Rational det_coords = laplace_det(RatMatrix::from_columns(coords, d));
      c.expect(abs_value(det_coords) == 1, e.name + ": |det| = " + to_string(abs_value(det_coords)));
      c.expect(det_coords == cert.basis.lattice_coordinate_det, e.name + ": stored det differs from recomputation");
      // The lattice really is {x : d.x in Z}: normals pair integrally with the
      // basis and the covolume is the reciprocal of the normal lattice's.
      for (const auto& b : cert.lattice.vectors())
        for (const auto& n : e.normal_set.normals()) c.expect(is_integer(dot(n, b)), e.name + ": lattice too fine");
      Rational normal_covolume = 0;
      each_subset(e.normal_set.size(), d, [&](const std::vector<std::size_t>& s) {
        std::vector<RatVector> cols;
        for (auto i : s) cols.push_back(e.normal_set.normal(i));
        Rational m = abs_value(laplace_det(RatMatrix::from_columns(cols, d)));
        if (m != 0) normal_covolume = normal_covolume == 0 ? m : Rational(gcd(Integer(normal_covolume.get_num()), Integer(m.get_num())));
      });
      c.expect(abs_value(laplace_det(cert.lattice.matrix())) * normal_covolume == 1, e.name + ": lattice covolume");
      // N = E as sets up to sign, and the bijection is perfect.
      c.expect(up_to_sign(cert.facet_vectors.vectors) == up_to_sign(cert.edge_set.edges), e.name + ": N != E");
      std::set<std::size_t> seen_e, seen_f;
      for (const auto& m : cert.ne_bijection) {
        seen_e.insert(m.edge);
        seen_f.insert(m.facet_vector);
        c.expect(cert.edge_set.edges.at(m.edge) == scale(cert.facet_vectors.vectors.at(m.facet_vector), Rational(m.sign)),
                 e.name + ": bijection pairs unequal vectors");
      }
      c.expect(seen_e.size() == cert.edge_set.edges.size() && seen_f.size() == cert.facet_vectors.vectors.size() &&
                   cert.ne_bijection.size() == seen_e.size(),
               e.name + ": bijection is not perfect");
      // Every facet vector is integral in the chosen basis.
      LatticeBasis chosen(RatMatrix::from_columns(
          [&] {
            std::vector<RatVector> v;
            for (std::size_t i = 0; i < d; ++i)
              v.push_back(scale(cert.facet_vectors.vectors[cert.basis.indices[i]], Rational(cert.basis.signs[i])));
            return v;
          }(),
          d));
      for (const auto& v : cert.facet_vectors.vectors) c.expect(chosen.contains(v), e.name + ": vector outside basis");
    });
  }
  c.expect(c.seconds() < 10.0, "runtime exceeded 10 s");
  c.note(std::to_string(ds.size()) + " dicings");
  return c.report(out);
}

bool zone_vector_cross_validation(std::ostream& out) {
  Criterion c(2, "zone-vector formula: DV zonotope vertices equal brute-force DV cell vertices, random weights, < 60 s");
  std::mt19937_64 rng(kSeed);
  const std::vector<NormalSet> fixtures2 = {
      with_normals(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})}),
      with_normals(2, {make_vector({1, 1}), make_vector({1, -1})}),
  };
  const std::vector<NormalSet> fixtures3 = {
      with_normals(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({1, 1, 1})}),
      with_normals(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({1, 1, 0}),
                       make_vector({0, 1, 1}), make_vector({1, 1, 1})}),
      with_normals(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({1, 1, 0}), make_vector({0, 0, 1})}),
  };
  std::size_t trials2 = 0, trials3 = 0, retries = 0;
  auto run = [&](const std::vector<NormalSet>& fixtures, std::size_t count, std::size_t& trials) {
    for (std::size_t t = 0; t < count; ++t) {
      NormalSet ns = reweighted(fixtures[t % fixtures.size()], rng);
      guarded(c, "weights trial " + std::to_string(t), [&] {
        std::vector<RatVector> zono = vertices_oracle(dv_zonotope(ns));
        // The oracle certifies its own completeness; on a too-small radius it
        // refuses, and the documented remedy is a larger multiplier.
        for (Rational m = 4;; m *= 2) {
          try {
            DvCell cell = dv_cell_oracle(lattice_of_dicing(ns), quadratic_form(ns), m);
            c.expect(cell.vertices == zono, "vertex sets differ for weights " + to_string(ns.weights()));
            break;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::EnumerationInsufficient || m > 256) throw;
            ++retries;
          }
        }
        ++trials;
      });
    }
  };
  run(fixtures2, 24, trials2);
  run(fixtures3, 24, trials3);
  c.expect(trials2 >= 20 && trials3 >= 20, "fewer than 20 completed trials per dimension");
  c.expect(c.seconds() < 60.0, "runtime exceeded 60 s");
  c.note(std::to_string(trials2) + " trials in d=2, " + std::to_string(trials3) + " in d=3, " +
         std::to_string(retries) + " radius retries");
  return c.report(out);
}

bool edge_conditions(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(3, "edge-set conditions (E1) completeness and (E2) pairings in {0,+-1}; non-dicing rejected with witness");
  for (const auto& e : dicings(corpus)) {
    guarded(c, e.name, [&] {
      const NormalSet& ns = e.normal_set;
      const std::size_t d = ns.dimension();
      EdgeSet es = compute_edge_set(ns);
      for (const auto& n : ns.normals())
        for (const auto& v : es.edges) c.expect(is_unit(dot(n, v)), e.name + ": pairing outside {0,+-1}");
      each_subset(ns.size(), d - 1, [&](const std::vector<std::size_t>& s) {
        std::vector<RatVector> rows;
        for (auto i : s) rows.push_back(ns.normal(i));
        RatVector k = cofactor_vector(rows, d);
        if (is_zero(k)) return; // dependent subset
        c.expect(has_parallel(es.edges, k), e.name + ": kernel line without an edge");
      });
      for (std::size_t i = 0; i < es.edges.size(); ++i) {
        std::vector<RatVector> orth;
        for (const auto& n : ns.normals())
          if (dot(n, es.edges[i]) == 0) orth.push_back(n);
        c.expect(!es.provenance[i].empty() && rank(orth) == d - 1, e.name + ": edge not cut out by d-1 normals");
      }
    });
  }
  try {
    compute_edge_set(with_normals(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 2})}));
    c.expect(false, "non-dicing {(1,0),(0,1),(1,2)} accepted");
  } catch (const NotADicing& e) {
    bool found = false;
    for (const auto& w : e.witnesses())
      found = found || (w.subset == IndexSet{2} && parallel(w.kernel, make_vector({2, -1})) &&
                        w.products == std::vector<Rational>{2, -1, 0});
    c.expect(found, "witness for the subset {(1,2)} with products {2,-1,0} missing");
    // Every reported witness is a genuine violation.
    for (const auto& w : e.witnesses()) {
      std::set<Rational> magnitudes;
      for (const auto& p : w.products)
        if (p != 0) magnitudes.insert(abs_value(p));
      c.expect(magnitudes.size() > 1, "witness with consistent products");
    }
  }
  return c.report(out);
}

bool unimodular_representations(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(4, "unimodular representation: D' totally unimodular (all minors), D'/E' in {0,+-1}, standard bases");
  for (const auto& e : dicings(corpus)) {
    guarded(c, e.name, [&] {
      const NormalSet& ns = e.normal_set;
      const std::size_t d = ns.dimension();
      EdgeSet es = compute_edge_set(ns);
      DicingRep rep = unimodular_representation(ns, es);
      RatMatrix linv = inverse(rep.transform);
      c.expect(rep.transform * linv == RatMatrix::identity(d), e.name + ": L not inverted");
      c.expect(rep.normals_matrix == linv.transpose() * ns.matrix(), e.name + ": D' != (L^-1)^T D");
      for (std::size_t k = 0; k < es.edges.size(); ++k) {
        RatVector mapped = rep.transform * es.edges[k];
        c.expect(rep.edges_matrix.column(k) == mapped || rep.edges_matrix.column(k) == negate(mapped),
                 e.name + ": E' != L E up to column signs");
      }
      for (const RatMatrix* m : {&rep.normals_matrix, &rep.edges_matrix})
        for (std::size_t r = 0; r < m->rows(); ++r)
          for (std::size_t col = 0; col < m->cols(); ++col)
            c.expect(is_unit((*m)(r, col)), e.name + ": entry outside {0,+-1}");
      for (std::size_t i = 0; i < d; ++i) {
        c.expect(has_column(rep.normals_matrix, unit_vector(d, i)), e.name + ": D' lacks e" + std::to_string(i + 1));
        c.expect(has_column(rep.edges_matrix, unit_vector(d, i)), e.name + ": E' lacks e" + std::to_string(i + 1));
      }
      c.expect(all_minors_unit(rep.normals_matrix), e.name + ": D' has a minor outside {0,+-1}");
      c.expect(is_totally_unimodular(rep.normals_matrix) && rep.totally_unimodular,
               e.name + ": library TU test disagrees");
    });
  }
  return c.report(out);
}

bool venkov(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(5, "Minkowski/Venkov ridge test: true for every corpus DV zonotope, false for the 5-generator zonotope");
  for (const auto& e : dicings(corpus)) {
    guarded(c, e.name, [&] {
      Zonotope z = dv_zonotope(e.normal_set);
      VenkovReport r = venkov_check(z);
      c.expect(r.parallelohedron && !r.witness, e.name + ": not a parallelohedron");
      c.expect(!r.ridges.empty(), e.name + ": no ridges examined");
      // Independent recount: generators outside each flat, taken modulo its
      // span, must fall into exactly direction_count classes, 2 or 3 of them.
      for (const auto& ridge : r.ridges) {
        std::vector<RatVector> flat;
        for (auto i : ridge.flat) flat.push_back(z.generators()[i]);
        const std::size_t base_rank = flat.empty() ? 0 : rank(flat);
        c.expect(base_rank + 2 == z.dimension(), e.name + ": flat of wrong rank");
        std::vector<RatVector> classes;
        for (std::size_t g = 0; g < z.size(); ++g) {
          if (std::find(ridge.flat.begin(), ridge.flat.end(), g) != ridge.flat.end()) continue;
          bool seen = std::any_of(classes.begin(), classes.end(), [&](const RatVector& rep) {
            auto rows = flat;
            rows.push_back(rep);
            rows.push_back(z.generators()[g]);
            return rank(rows) == base_rank + 1;
          });
          if (!seen) classes.push_back(z.generators()[g]);
        }
        c.expect(classes.size() == ridge.direction_count, e.name + ": ridge direction count differs from recount");
        c.expect(classes.size() == 2 || classes.size() == 3, e.name + ": ridge projects to neither 4- nor 6-gon");
      }
    });
  }
  guarded(c, "counterexample", [&] {
    Zonotope five(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({1, 1, 1}),
                      make_vector({1, -1, 0})});
    VenkovReport r = venkov_check(five);
    c.expect(!r.parallelohedron, "5-generator zonotope accepted");
    c.expect(r.witness.has_value(), "no witness ridge");
    if (r.witness) {
      const RidgeClass& w = r.ridges.at(*r.witness);
      c.expect(w.classification == RidgeShape::Other && w.direction_count >= 4, "witness ridge is not Other");
      c.expect(w.flat == IndexSet{2}, "witness ridge is not along e3");
    }
    // Along e3 the other four generators project to four distinct directions.
    std::set<RatVector> dirs;
    for (const auto& g : {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1}), make_vector({1, -1})})
      dirs.insert(canonical_sign(primitive_direction(g)));
    c.expect(dirs.size() == 4, "hand projection along e3");
  });
  return c.report(out);
}

bool delone(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(6, "Delone duality: every DV-cell vertex has >= d+1 phi-equidistant lattice points on all dicing families");
  std::size_t vertices = 0;
  for (const auto& e : dicings(corpus)) {
    const NormalSet& ns = e.normal_set;
    const std::size_t d = ns.dimension();
    if (d > 3) continue;
    guarded(c, e.name, [&] {
      DeloneReport report = delone_duality_check(ns);
      QuadraticForm q = quadratic_form(ns);
      LatticeBasis lattice = lattice_of_dicing(ns);
      std::vector<RatVector> vs;
      for (const auto& v : report.vertices) vs.push_back(v.vertex);
      c.expect(sorted(vs) == vertices_oracle(dv_zonotope(ns)), e.name + ": report does not cover the cell vertices");
      for (const auto& v : report.vertices) {
        ++vertices;
        c.expect(v.equidistant.size() >= d + 1, e.name + ": fewer than d+1 equidistant points");
        std::vector<RatVector> diffs;
        for (const auto& p : v.equidistant) {
          c.expect(lattice.contains(p), e.name + ": equidistant point outside the lattice");
          c.expect(q(subtract(v.vertex, p)) == v.radius, e.name + ": point not at the reported radius");
          for (const auto& n : ns.normals()) c.expect(is_integer(dot(n, p)), e.name + ": point off a dicing family");
          diffs.push_back(subtract(p, v.equidistant.front()));
        }
        c.expect(rank(diffs) == d, e.name + ": equidistant points do not affinely span");
        // Emptiness over a box of lattice coordinates around the vertex.
        RatVector centre = lattice.coordinates(v.vertex);
        std::vector<long> base(d);
        for (std::size_t i = 0; i < d; ++i) {
          Integer fl;
          mpz_fdiv_q(fl.get_mpz_t(), centre[i].get_num_mpz_t(), centre[i].get_den_mpz_t());
          base[i] = fl.get_si();
        }
        std::vector<long> k(d, -3);
        while (true) {
          RatVector coeff(d);
          for (std::size_t i = 0; i < d; ++i) coeff[i] = base[i] + k[i];
          RatVector p = lattice.matrix() * coeff;
          c.expect(q(subtract(v.vertex, p)) >= v.radius, e.name + ": lattice point inside the empty ellipsoid");
          std::size_t i = 0;
          while (i < d && k[i] == 4) k[i++] = -3;
          if (i == d) break;
          ++k[i];
        }
      }
    });
  }
  guarded(c, "hexagonal vertex", [&] {
    DeloneReport hex = delone_duality_check(with_normals(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})}));
    auto it = std::find_if(hex.vertices.begin(), hex.vertices.end(),
                           [](const DeloneVertex& v) { return v.vertex == RatVector{rat(2, 3), rat(-1, 3)}; });
    c.expect(it != hex.vertices.end(), "hexagonal vertex (2/3,-1/3) missing");
    if (it != hex.vertices.end()) {
      c.expect(it->radius == rat(2, 3), "hexagonal vertex radius is not 2/3");
      c.expect(sorted(it->equidistant) == sorted({make_vector({0, 0}), make_vector({1, 0}), make_vector({1, -1})}),
               "hexagonal equidistant set is not {(0,0),(1,0),(1,-1)}");
    }
  });
  c.note(std::to_string(vertices) + " vertices");
  return c.report(out);
}

bool metamorphic(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(7, "metamorphic: weight rescaling and unimodular coordinate changes, >= 50 randomized trials each");
  std::mt19937_64 rng(kSeed + 7);
  const auto ds = dicings(corpus);
  std::size_t scaling = 0, coordinate = 0;
  for (std::size_t t = 0; t < 60; ++t) {
    const NormalSet& ns = ds[t % ds.size()].normal_set;
    guarded(c, "scaling trial " + std::to_string(t), [&] {
      const Rational factor = random_weight(rng);
      std::vector<Rational> w;
      for (const auto& x : ns.weights()) w.push_back(x * factor);
      NormalSet scaled(ns.dimension(), ns.normals(), w);
      VoronoiCertificate a = certify_second_voronoi(ns);
      VoronoiCertificate b = certify_second_voronoi(scaled);
      c.expect(a.edge_set == b.edge_set, "E changed under scaling");
      c.expect(a.facet_vectors.vectors == b.facet_vectors.vectors, "N changed under scaling");
      c.expect(a.basis.indices == b.basis.indices, "basis indices changed under scaling");
      c.expect(a.basis.lattice_coordinate_det == b.basis.lattice_coordinate_det, "det changed under scaling");
      c.expect(b.form.matrix() == a.form.matrix() * factor, "Q did not scale by c");
      c.expect(b.zonotope == a.zonotope, "zone vectors changed under scaling");
      ++scaling;
    });
  }
  for (std::size_t t = 0; t < 60; ++t) {
    const NormalSet& ns = ds[(t * 7 + 3) % ds.size()].normal_set;
    const std::size_t d = ns.dimension();
    guarded(c, "coordinate trial " + std::to_string(t), [&] {
      RatMatrix u = random_unimodular(d, rng);
      c.expect(abs_value(laplace_det(u)) == 1, "generated change of coordinates is not unimodular");
      // x -> U x maps each normal n to U^-T n.
      RatMatrix dual = inverse(u).transpose();
      std::vector<RatVector> moved;
      for (const auto& n : ns.normals()) moved.push_back(dual * n);
      NormalSet transformed(d, moved, ns.weights());
      VoronoiCertificate a = certify_second_voronoi(ns);
      VoronoiCertificate b = certify_second_voronoi(transformed);
      c.expect(abs_value(b.basis.lattice_coordinate_det) == 1, "|det| != 1 after a coordinate change");
      c.expect(b.verified, "transformed certificate not verified");
      std::vector<RatVector> expect;
      for (const auto& v : a.facet_vectors.vectors) expect.push_back(u * v);
      c.expect(up_to_sign(b.facet_vectors.vectors) == up_to_sign(expect), "facet vectors did not transform by U");
      ++coordinate;
    });
  }
  c.expect(scaling >= 50 && coordinate >= 50, "fewer than 50 completed trials");
  c.note(std::to_string(scaling) + " scaling + " + std::to_string(coordinate) + " coordinate trials");
  return c.report(out);
}

bool facet_oracle(const std::vector<CorpusEntry>& corpus, std::ostream& out) {
  Criterion c(8, "facet hyperplanes equal the convex hull facets of the signed-sum vertices (d <= 3)");
  std::size_t zonotopes = 0;
  for (const auto& e : dicings(corpus)) {
    if (e.normal_set.dimension() > 3) continue;
    guarded(c, e.name, [&] {
      Zonotope z = dv_zonotope(e.normal_set);
      HullResult hull = convex_hull(vertices_oracle(z), z.dimension());
      std::set<std::pair<RatVector, Rational>> hull_planes;
      for (const auto& f : hull.facets) hull_planes.insert({f.normal, f.offset});
      c.expect(descriptor_planes(z) == hull_planes, e.name + ": facet planes differ from the hull");
      ++zonotopes;
    });
  }
  auto pairs = [&](const NormalSet& ns, std::size_t expect_pairs, const std::string& name) {
    guarded(c, name, [&] {
      Zonotope z = dv_zonotope(ns);
      c.expect(facets(z).size() == expect_pairs, name + ": facet pair count");
      c.expect(convex_hull(vertices_oracle(z), z.dimension()).facets.size() == 2 * expect_pairs,
               name + ": hull facet count");
    });
  };
  pairs(with_normals(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({1, 1})}), 3, "hexagon");
  pairs(with_normals(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1}), make_vector({1, 1, 1})}),
        6, "rhombic dodecahedron");
  pairs(with_normals(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0}), make_vector({0, 0, 1})}), 3, "cube");
  c.note(std::to_string(zonotopes) + " corpus zonotopes");
  return c.report(out);
}

} // namespace

int main() {
  std::vector<CorpusEntry> corpus;
  try {
    corpus = load_corpus();
  } catch (const std::exception& e) {
    std::cout << "FAIL  cannot load corpus: " << e.what() << '\n';
    return 1;
  }
  bool ok = true;
  ok &= certificates(corpus, std::cout);
  ok &= zone_vector_cross_validation(std::cout);
  ok &= edge_conditions(corpus, std::cout);
  ok &= unimodular_representations(corpus, std::cout);
  ok &= venkov(corpus, std::cout);
  ok &= delone(corpus, std::cout);
  ok &= metamorphic(corpus, std::cout);
  ok &= facet_oracle(corpus, std::cout);
  std::cout << (ok ? "all acceptance criteria passed" : "acceptance criteria FAILED") << '\n';
  return ok ? 0 : 1;
}
