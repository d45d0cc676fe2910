#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "hrnum/lattice.hpp"

namespace hrnum {

using Complex = std::complex<double>;

/// Finite sum of monomials λ_s z^s with exponents s in Z_+^d.
/// Exactly-zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<LatticePoint, Complex>;

  explicit Polynomial(std::size_t rank) : rank_(rank) {}
  Polynomial(std::size_t rank, const std::vector<std::pair<LatticePoint, Complex>>& terms);

  static Polynomial monomial(const LatticePoint& exponent, Complex coeff = 1.0);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds coeff to the coefficient at exponent, dropping it if the sum is 0.
  void add_term(const LatticePoint& exponent, Complex coeff);
  Complex coefficient(const LatticePoint& exponent) const;
  std::vector<LatticePoint> support() const;

  // Largest |s|_1 over the support; 0 for the zero polynomial.
  Coord max_total_degree() const;
  // Sum of |λ_s|.
  double l1_coefficients() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex c, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t rank_;
  Terms terms_;
};

// Exact complex power ζ^n by repeated squaring, with 0^0 = 1.
Complex integer_power(Complex base, Coord n);

// Value Σ λ_s ζ^s at a point of C^d.
Complex evaluate_polynomial(const Polynomial& p, const std::vector<Complex>& zeta);

// True iff every exponent of p lies in shift + Z_+^d, i.e. z^shift divides p.
bool divisible_by_monomial(const Polynomial& p, const LatticePoint& shift);

}  // namespace hrnum
