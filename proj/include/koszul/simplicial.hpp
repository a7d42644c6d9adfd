#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "koszul/field_matrix.hpp"
#include "koszul/koszul_oracle.hpp"
#include "koszul/monomial.hpp"

namespace koszul {

/// A face is a bitmask over vertex positions 0..k-1.
using Face = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 63;

/// Finite simplicial complex on labeled vertices, stored as an explicit face list.
///
/// The void complex (no faces at all) is distinct from {empty face}: the former has no
/// reduced homology, the latter has H~_{-1} = k.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Throws InvariantError if `faces` is not closed under taking subsets.
  SimplicialComplex(std::vector<std::size_t> vertex_labels, std::vector<Face> faces);

  /// Every subset of the vertices.
  static SimplicialComplex full_simplex(std::vector<std::size_t> vertex_labels);

  const std::vector<std::size_t>& vertex_labels() const noexcept { return labels_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }

  /// Faces sorted by size, then by mask value.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::vector<Face> faces_of_size(std::size_t k) const;
  bool contains(Face f) const;
  bool is_void() const noexcept { return faces_.empty(); }
  bool includes_empty_face() const noexcept { return !faces_.empty(); }

  /// Largest face dimension; -1 for {empty face}, -2 for the void complex.
  int dimension() const noexcept;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::size_t> labels_;
  std::vector<Face> faces_;
};

/// Boundary map from the faces in `source` (all of size k) to those in `target` (size k-1),
/// with sign (-1)^j for dropping the j-th vertex of a face.
PrimeFieldMatrix simplicial_boundary(const std::vector<Face>& source, const std::vector<Face>& target,
                                     std::uint32_t p);

/// Faces tau of support(a) with x^(a - e_tau) in I. Vertex labels are support(a). Void when
/// x^a is not in I.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const ExponentVector& a);

/// Size-k faces of the upper Koszul complex at a, without building the rest of it.
std::vector<Face> upper_koszul_faces(const MonomialIdeal& ideal, const ExponentVector& a, std::size_t k);

/// dim H~_d(complex; F_p) for d >= -1. Only the faces of dimensions d-1, d, d+1 are used.
std::size_t reduced_homology_dim(const SimplicialComplex& complex, int d,
                                 std::uint32_t p = kDefaultCharacteristic);

/// All faces of dimension at most d + 1. Preserves H~_d.
SimplicialComplex truncate_for_degree(const SimplicialComplex& complex, int d);

/// beta_{i,a}(I) = dim H~_{i-1}(upper Koszul complex at a). A face with i vertices matches a
/// Koszul chain of wedge size i.
std::size_t betti_via_simplicial(const MonomialIdeal& ideal, std::size_t i, const ExponentVector& a,
                                 std::uint32_t p = kDefaultCharacteristic);

/// A nonzero class in H_i(K(I))_a, written in the Koszul basis.
struct HomologyClassRep {
  ExponentVector multidegree;
  std::size_t degree = 0;
  std::vector<std::pair<KoszulBasisElement, FieldElement>> chain;
};

/// beta_{i,a}(I) cycles whose classes form a basis of H_i(K(I))_a. Each face tau is sent to
/// x^(a - e_tau) (x) (wedge of x_j, j in tau).
std::vector<HomologyClassRep> homology_class_reps(const MonomialIdeal& ideal, const ExponentVector& a,
                                                  std::size_t i, std::uint32_t p = kDefaultCharacteristic);

}  // namespace koszul
