#pragma once

#include "defreg/exact_field.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace defreg {

inline constexpr std::size_t kDefaultFaceBudget = 200'000;

// Finite abstract simplicial complex stored by explicit face enumeration.
//
// Two degenerate states are distinct: the void complex has no faces at all,
// while the empty complex has exactly the empty face (and H~_{-1} = 1).
// Vertices are kept in lexicographic label order, which fixes the
// orientation used by boundary matrices.
class SimplicialComplex {
public:
  // Sorted indices into vertices().
  using Face = std::vector<std::uint32_t>;

  // The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return SimplicialComplex{}; }
  static SimplicialComplex empty_complex();

  // Downward closure of the given faces. No faces gives the void complex;
  // a single empty face gives the empty complex.
  static SimplicialComplex generated_by(const std::vector<std::vector<std::string>>& faces,
                                        std::size_t face_budget = kDefaultFaceBudget);

  // The faces must already be closed under subsets (InvalidComplex otherwise).
  static SimplicialComplex from_faces(const std::vector<std::vector<std::string>>& faces,
                                      std::size_t face_budget = kDefaultFaceBudget);

  bool is_void() const { return by_size_.empty(); }
  const std::vector<std::string>& vertices() const { return vertices_; }

  // -2 for the void complex, -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }

  // Faces of dimension d (d + 1 vertices), lexicographically sorted.
  // Out-of-range dimensions yield an empty list.
  const std::vector<Face>& faces(int d) const;
  std::size_t face_count() const;

private:
  std::vector<std::string> vertices_;
  // by_size_[k] holds the faces with k vertices.
  std::vector<std::vector<Face>> by_size_;
};

// Reduced homology dimensions, indexed by degree d >= -1.
struct HomologyProfile {
  FieldSpec field = FieldSpec::rationals();
  // betti[d + 1] = dim H~_d; degrees past the end are zero.
  std::vector<std::size_t> betti;

  std::size_t at(int d) const {
    if (d < -1 || static_cast<std::size_t>(d + 1) >= betti.size())
      return 0;
    return betti[static_cast<std::size_t>(d + 1)];
  }
  bool is_zero() const;
};

// Matrix of the augmented boundary map from i-faces to (i-1)-faces.
// Entry (row tau, col sigma) is (-1)^k when tau is sigma with its k-th
// vertex removed. For i = 0 the single target row is the empty face.
ExactMatrix boundary_matrix(const SimplicialComplex& c, int i);

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& f);

} // namespace defreg
