#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hrnum/cone.hpp"

namespace hrnum {

using BigInt = boost::multiprecision::cpp_int;

/// A bijection of {0, ..., d-1}. Applying it to a point sends coordinate i to
/// position images[i].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t d);

  std::size_t size() const { return images_.size(); }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;

  LatticePoint apply(const LatticePoint& p) const;
  Permutation inverse() const;
  Permutation after(const Permutation& first) const;  // (*this) ∘ first

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::size_t> images_;
};

// The unique minimal generating set S* \ (S* + S*), sorted.
std::vector<LatticePoint> minimal_generators(const Cone& cone);

inline constexpr std::size_t kMaxPermutationRank = 8;

// First permutation, in lexicographic order of images, carrying the minimal
// generators of c2 onto those of c1.
std::optional<Permutation> equal_up_to_permutation(const Cone& c1, const Cone& c2);

enum class MatrixClass {
  Permutation,
  UnimodularNonPermutation,
  NotUnimodular,
  NotIntegral,
  NotAdditive,
};

const char* to_string(MatrixClass c);

using IntMatrix = std::vector<std::vector<BigInt>>;

struct IntegerMatrixWitness {
  MatrixClass classification = MatrixClass::NotAdditive;
  // d2 x d1 with M g = image(g) for every generator g. Empty for NotAdditive
  // and NotIntegral.
  IntMatrix matrix;
  // Exact inverse; present iff the matrix is unimodular.
  std::optional<IntMatrix> inverse;
  // For NotAdditive: an integer relation among c1's generators (coefficient
  // per generator, in generator order) that the images violate.
  std::vector<BigInt> violated_relation;
};

/// Group map induced by sending each generator of c1 to a point of Z_+^{d2}.
///
/// Every integer relation among c1's generators must survive the map; the
/// relations come from the kernel of the generator matrix, computed exactly.
/// Throws Error(RankMismatch) for a map that misses a generator or has images
/// of the wrong rank, and Error(InvalidCone) with "rank-deficient generator
/// span" when c1's generators do not span Q^{d1}.
IntegerMatrixWitness induced_matrix(const Cone& c1, const Cone& c2,
                                    const std::map<LatticePoint, LatticePoint>& gen_map);

struct IsoWitness {
  Permutation permutation;  // carries minimal generators of c2 onto those of c1
  std::string rotation_note;
};

// Decision procedure for isomorphism of the semigroup algebras of two
// higher-rank numerical cones. Throws HypothesisError when either cone fails
// the axis criterion.
std::optional<IsoWitness> decide_algebra_isomorphism(const Cone& c1, const Cone& c2);

}  // namespace hrnum
