#include "hrnum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "hrnum/errors.hpp"

namespace hrnum {

Polynomial::Polynomial(std::size_t rank, const std::vector<std::pair<LatticePoint, Complex>>& terms)
    : rank_(rank) {
  for (const auto& [s, c] : terms) add_term(s, c);
}

Polynomial Polynomial::monomial(const LatticePoint& exponent, Complex coeff) {
  Polynomial p(exponent.rank());
  p.add_term(exponent, coeff);
  return p;
}

void Polynomial::add_term(const LatticePoint& exponent, Complex coeff) {
  require_rank(rank_, exponent, "polynomial term");
  if (!exponent.is_nonnegative())
    throw std::invalid_argument("polynomial exponent " + exponent.to_string() +
                                " has a negative coordinate");
  if (coeff == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Complex Polynomial::coefficient(const LatticePoint& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

std::vector<LatticePoint> Polynomial::support() const {
  std::vector<LatticePoint> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Coord Polynomial::max_total_degree() const {
  Coord deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.l1_norm());
  return deg;
}

double Polynomial::l1_coefficients() const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += std::abs(c);
  return sum;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::RankMismatch, "polynomial ranks differ");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::RankMismatch, "polynomial ranks differ");
  Polynomial r(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Polynomial operator*(Complex c, const Polynomial& p) {
  Polynomial r(p.rank_);
  for (const auto& [e, x] : p.terms_) r.add_term(e, c * x);
  return r;
}

Complex integer_power(Complex base, Coord n) {
  if (n < 0) throw std::invalid_argument("negative exponent");
  Complex result(1.0);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Complex evaluate_polynomial(const Polynomial& p, const std::vector<Complex>& zeta) {
  if (zeta.size() != p.rank()) throw Error(ErrorKind::RankMismatch, "evaluation point rank differs");
  Complex sum(0.0);
  for (const auto& [e, c] : p.terms()) {
    Complex mono(1.0);
    for (std::size_t i = 0; i < e.rank(); ++i) mono *= integer_power(zeta[i], e[i]);
    sum += c * mono;
  }
  return sum;
}

bool divisible_by_monomial(const Polynomial& p, const LatticePoint& shift) {
  for (const auto& [e, c] : p.terms())
    if (!shift.dominated_by(e)) return false;
  return true;
}

}  // namespace hrnum
