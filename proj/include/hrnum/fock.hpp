#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hrnum/cone.hpp"
#include "hrnum/polynomial.hpp"

namespace hrnum {

/// Orthonormal basis {e_t : t ∈ S ∩ [0, bound]} of the truncated Fock space.
class FockBasis {
 public:
  FockBasis(const Cone& cone, const LatticePoint& bound);

  const Cone& cone() const { return cone_; }
  const LatticePoint& bound() const { return bound_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index(const LatticePoint& p) const;

 private:
  Cone cone_;
  LatticePoint bound_;
  std::vector<LatticePoint> points_;
  std::map<LatticePoint, std::size_t> index_;
};

/// Compression of a finite sum Σ λ_s V_s to ℓ²(S ∩ box), stored column-wise.
/// Immutable once built.
class TruncatedOperator {
 public:
  using Column = std::vector<std::pair<std::size_t, Complex>>;  // (row, value), rows ascending

  TruncatedOperator(std::shared_ptr<const FockBasis> basis, std::vector<Column> columns);

  const FockBasis& basis() const { return *basis_; }
  std::shared_ptr<const FockBasis> shared_basis() const { return basis_; }
  std::size_t dimension() const { return basis_->size(); }
  const std::vector<Column>& columns() const { return columns_; }
  std::size_t nonzeros() const;

  Complex entry(std::size_t row, std::size_t col) const;
  Complex entry(const LatticePoint& row, const LatticePoint& col) const;

  std::vector<Complex> apply(const std::vector<Complex>& v) const;
  std::vector<Complex> apply_adjoint(const std::vector<Complex>& v) const;

  // Product (*this) * rhs on the same basis.
  TruncatedOperator compose(const TruncatedOperator& rhs) const;
  TruncatedOperator adjoint() const;
  std::vector<std::vector<Complex>> to_dense() const;

 private:
  std::shared_ptr<const FockBasis> basis_;
  std::vector<Column> columns_;
};

// Truncated V_s: e_t -> e_{s+t} when s + t stays in the box, else 0.
TruncatedOperator fock_matrix(const Cone& cone, const LatticePoint& s, const LatticePoint& bound);

// Σ λ_s V_s compressed to the box. Throws SupportError listing the exponents
// outside the cone.
TruncatedOperator apply_polynomial(const Cone& cone, const Polynomial& p, const LatticePoint& bound);

// Entry (s, 0): the coefficient of V_s.
Complex fourier_coefficient(const TruncatedOperator& op, const LatticePoint& s);

inline constexpr double kDefaultNormTolerance = 1e-9;
inline constexpr long kMaxPowerIterations = 1'000'000;

// Largest singular value by power iteration on A*A from the all-ones vector.
double operator_norm(const TruncatedOperator& op, double tol = kDefaultNormTolerance);

struct TorusNorm {
  double value = 0.0;        // max of |p| over the grid
  double error_bound = 0.0;  // sup |p| lies in [value, value + error_bound]
  long grid_per_dim = 0;
};

// 4096 points for d = 1, 512 per dimension for d = 2, 64 per dimension above.
long default_torus_grid(std::size_t rank);

TorusNorm torus_norm(const Polynomial& p, long grid_per_dim);

struct NormRow {
  LatticePoint bound;
  double fock_norm = 0.0;
  double torus_norm = 0.0;
  double error_bound = 0.0;
  double gap = 0.0;  // torus_norm - fock_norm
};

struct NormReport {
  std::vector<NormRow> rows;
  TorusNorm torus;
  double tolerance = kDefaultNormTolerance;

  // Nondecreasing up to the power-iteration tolerance.
  bool fock_norms_nondecreasing() const;
  bool within_torus_bound() const;
  double final_gap() const { return rows.empty() ? 0.0 : rows.back().gap; }
};

// Fock norms along a coordinatewise strictly increasing schedule of boxes,
// against the torus sup-norm. grid_per_dim = 0 selects default_torus_grid.
NormReport norm_gap_report(const Cone& cone, const Polynomial& p,
                           const std::vector<LatticePoint>& schedule,
                           double tol = kDefaultNormTolerance, long grid_per_dim = 0);

/// Finitely supported vector on Z^d (or on S ⊂ Z^d).
using SparseVector = std::map<LatticePoint, Complex>;

double euclidean_norm(const SparseVector& v);

// Σ λ_s U_s ξ for the bilateral shifts U_s on ℓ²(Z^d).
SparseVector apply_on_group(const Polynomial& p, const SparseVector& xi);

// Σ λ_s V_s ξ on ℓ²(S), untruncated. Requires supp(p) ⊆ S and supp(ξ) ⊆ S.
SparseVector apply_on_fock(const Cone& cone, const Polynomial& p, const SparseVector& xi);

struct DilationShift {
  LatticePoint t;             // Σ t_i
  SparseVector xi_shifted;    // (xi_shifted)[t + g] = xi[g]
  // Per support point g_i (in order): (s_i, t_i) with g_i = s_i - t_i, s_i, t_i ∈ S.
  std::vector<std::pair<LatticePoint, LatticePoint>> decompositions;
};

// Translates ξ into ℓ²(S) by a single t ∈ S built from axis conductors.
// Throws HypothesisError for cones that are not higher-rank numerical.
DilationShift dilation_shift(const Cone& cone, const SparseVector& xi);

// Coefficient at s multiplied by exp(i θ·s).
Polynomial rotate(const Polynomial& p, const std::vector<double>& theta);

}  // namespace hrnum
