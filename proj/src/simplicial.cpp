#include "koszul/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

bool by_size_then_mask(Face a, Face b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

// All k-subsets of {0..s-1} in increasing mask order (Gosper's hack).
std::vector<Face> subsets_of_size(std::size_t s, std::size_t k) {
  std::vector<Face> out;
  if (k > s) return out;
  if (k == 0) return {Face{0}};
  const Face limit = Face{1} << s;
  for (Face f = (Face{1} << k) - 1; f < limit;) {
    out.push_back(f);
    Face low = f & (~f + 1);
    Face ripple = f + low;
    f = (((ripple ^ f) >> 2) / low) | ripple;
  }
  return out;
}

void check_support(std::size_t s) {
  if (s > kMaxVertices) {
    throw DimensionError("support of size " + std::to_string(s) + " exceeds " + std::to_string(kMaxVertices));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::size_t> vertex_labels, std::vector<Face> faces)
    : labels_(std::move(vertex_labels)), faces_(std::move(faces)) {
  check_support(labels_.size());
  std::sort(faces_.begin(), faces_.end(), by_size_then_mask);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const Face all = labels_.size() == 64 ? ~Face{0} : (Face{1} << labels_.size()) - 1;
  for (Face f : faces_) {
    if ((f & ~all) != 0) throw InvariantError("face uses a vertex outside the vertex set");
    for (Face rest = f; rest != 0; rest &= rest - 1) {
      Face sub = f & ~(rest & (~rest + 1));
      if (!contains(sub)) throw InvariantError("face set is not closed under subsets");
    }
  }
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<std::size_t> vertex_labels) {
  check_support(vertex_labels.size());
  std::vector<Face> faces;
  for (Face f = 0; f < (Face{1} << vertex_labels.size()); ++f) faces.push_back(f);
  return SimplicialComplex(std::move(vertex_labels), std::move(faces));
}

std::vector<Face> SimplicialComplex::faces_of_size(std::size_t k) const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (static_cast<std::size_t>(std::popcount(f)) == k) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, by_size_then_mask);
}

int SimplicialComplex::dimension() const noexcept {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

PrimeFieldMatrix simplicial_boundary(const std::vector<Face>& source, const std::vector<Face>& target,
                                     std::uint32_t p) {
  std::unordered_map<Face, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of.emplace(target[r], r);
  std::vector<PrimeFieldMatrix::Entry> entries;
  for (std::size_t c = 0; c < source.size(); ++c) {
    Face f = source[c];
    std::size_t j = 0;
    for (Face rest = f; rest != 0; rest &= rest - 1, ++j) {
      auto it = row_of.find(f & ~(rest & (~rest + 1)));
      if (it == row_of.end()) throw InvariantError("boundary face missing from the complex");
      entries.push_back({it->second, c, j % 2 == 0 ? 1 : -1});
    }
  }
  return PrimeFieldMatrix(target.size(), source.size(), p, entries);
}

std::vector<Face> upper_koszul_faces(const MonomialIdeal& ideal, const ExponentVector& a, std::size_t k) {
  if (a.size() != ideal.num_vars()) throw DimensionError("multidegree length differs from ring size");
  auto support = a.support();
  check_support(support.size());
  std::vector<Face> out;
  for (Face f : subsets_of_size(support.size(), k)) {
    ExponentVector m = a;
    for (std::size_t pos = 0; pos < support.size(); ++pos) {
      if (f >> pos & 1) m[support[pos]] -= 1;
    }
    if (ideal.contains(m)) out.push_back(f);
  }
  return out;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a) {
  auto support = a.support();
  std::vector<Face> faces;
  for (std::size_t k = 0; k <= support.size(); ++k) {
    auto level = upper_koszul_faces(ideal, a, k);
    if (level.empty()) break;  // closed under subsets, so nothing larger either
    faces.insert(faces.end(), level.begin(), level.end());
  }
  return SimplicialComplex(std::move(support), std::move(faces));
}

namespace {

// H~_d from the faces of sizes d, d+1, d+2 (i.e. dimensions d-1, d, d+1).
std::size_t homology_from_levels(const std::vector<Face>& below, const std::vector<Face>& mid,
                                 const std::vector<Face>& above, bool has_below, std::uint32_t p) {
  auto d_in = has_below ? simplicial_boundary(mid, below, p) : PrimeFieldMatrix(0, mid.size(), p);
  auto d_out = simplicial_boundary(above, mid, p);
  return homology_dim(d_in, d_out);
}

}  // namespace

std::size_t reduced_homology_dim(const SimplicialComplex& complex, int d, std::uint32_t p) {
  if (d < -1) throw PreconditionError("reduced homology degree must be >= -1");
  const auto k = static_cast<std::size_t>(d + 1);  // face size in chain degree d
  std::vector<Face> below = k > 0 ? complex.faces_of_size(k - 1) : std::vector<Face>{};
  return homology_from_levels(below, complex.faces_of_size(k), complex.faces_of_size(k + 1), k > 0, p);
}

SimplicialComplex truncate_for_degree(const SimplicialComplex& complex, int d) {
  if (d < -1) throw PreconditionError("truncation degree must be >= -1");
  std::vector<Face> kept;
  for (Face f : complex.faces()) {
    if (std::popcount(f) <= d + 2) kept.push_back(f);
  }
  return SimplicialComplex(complex.vertex_labels(), std::move(kept));
}

std::size_t betti_via_simplicial(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a,
                                 std::uint32_t p) {
  // Chain degree i - 1 uses faces with i vertices.
  auto mid = upper_koszul_faces(ideal, a, i);
  if (mid.empty()) return 0;
  auto below = i > 0 ? upper_koszul_faces(ideal, a, i - 1) : std::vector<Face>{};
  auto above = upper_koszul_faces(ideal, a, i + 1);
  return homology_from_levels(below, mid, above, i > 0, p);
}

std::vector<HomologyClassRep> homology_class_reps(const MonomialIdeal& ideal, const ExponentVector& a,
                                                  std::size_t i, std::uint32_t p) {
  std::vector<HomologyClassRep> reps;
  auto mid = upper_koszul_faces(ideal, a, i);
  if (mid.empty()) return reps;
  auto below = i > 0 ? upper_koszul_faces(ideal, a, i - 1) : std::vector<Face>{};
  auto above = upper_koszul_faces(ideal, a, i + 1);

  auto d_in = i > 0 ? simplicial_boundary(mid, below, p) : PrimeFieldMatrix(0, mid.size(), p);
  auto d_out = simplicial_boundary(above, mid, p);

  SparseEchelon span(p);
  auto image = d_out.transpose();
  for (std::size_t r = 0; r < image.rows(); ++r) span.insert(image.row(r));

  const auto support = a.support();
  for (const auto& cycle : kernel_basis(d_in)) {
    SparseVector sparse;
    for (std::size_t c = 0; c < cycle.size(); ++c) {
      if (cycle[c] != 0) sparse.emplace_back(c, cycle[c]);
    }
    if (!span.insert(sparse)) continue;

    HomologyClassRep rep{a, i, {}};
    for (auto [c, coeff] : sparse) {
      KoszulBasisElement element{{}, a};
      for (std::size_t pos = 0; pos < support.size(); ++pos) {
        if (mid[c] >> pos & 1) {
          element.wedge.push_back(support[pos]);
          element.monomial_part[support[pos]] -= 1;
        }
      }
      rep.chain.emplace_back(std::move(element), coeff);
    }
    reps.push_back(std::move(rep));
  }
  return reps;
}

}  // namespace koszul
