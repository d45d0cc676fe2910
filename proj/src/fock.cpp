#include "hrnum/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hrnum {

// ---------------------------------------------------------------------------
// Basis and operators

FockBasis::FockBasis(const Cone& cone, const LatticePoint& bound)
    : cone_(cone), bound_(bound), points_(enumerate_box(cone, bound)) {
  for (std::size_t k = 0; k < points_.size(); ++k) index_.emplace(points_[k], k);
}

std::optional<std::size_t> FockBasis::index(const LatticePoint& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TruncatedOperator::TruncatedOperator(std::shared_ptr<const FockBasis> basis,
                                     std::vector<Column> columns)
    : basis_(std::move(basis)), columns_(std::move(columns)) {
  if (columns_.size() != basis_->size())
    throw std::invalid_argument("column count differs from basis size");
}

std::size_t TruncatedOperator::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Complex TruncatedOperator::entry(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  const auto it = std::lower_bound(c.begin(), c.end(), row,
                                   [](const auto& e, std::size_t r) { return e.first < r; });
  return (it != c.end() && it->first == row) ? it->second : Complex(0.0);
}

Complex TruncatedOperator::entry(const LatticePoint& row, const LatticePoint& col) const {
  const auto r = basis_->index(row);
  const auto c = basis_->index(col);
  if (!r || !c) throw std::out_of_range("entry index outside truncation box");
  return entry(*r, *c);
}

std::vector<Complex> TruncatedOperator::apply(const std::vector<Complex>& v) const {
  std::vector<Complex> out(dimension(), Complex(0.0));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (v[j] == Complex(0.0)) continue;
    for (const auto& [i, a] : columns_[j]) out[i] += a * v[j];
  }
  return out;
}

std::vector<Complex> TruncatedOperator::apply_adjoint(const std::vector<Complex>& v) const {
  std::vector<Complex> out(dimension(), Complex(0.0));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    Complex acc(0.0);
    for (const auto& [i, a] : columns_[j]) acc += std::conj(a) * v[i];
    out[j] = acc;
  }
  return out;
}

TruncatedOperator TruncatedOperator::compose(const TruncatedOperator& rhs) const {
  if (basis_ != rhs.basis_ && basis_->points() != rhs.basis_->points())
    throw std::invalid_argument("composing operators on different bases");
  std::vector<Column> cols(dimension());
  for (std::size_t j = 0; j < dimension(); ++j) {
    std::map<std::size_t, Complex> acc;
    for (const auto& [k, b] : rhs.columns_[j])
      for (const auto& [i, a] : columns_[k]) acc[i] += a * b;
    for (const auto& [i, x] : acc)
      if (x != Complex(0.0)) cols[j].emplace_back(i, x);
  }
  return TruncatedOperator(basis_, std::move(cols));
}

TruncatedOperator TruncatedOperator::adjoint() const {
  std::vector<Column> cols(dimension());
  for (std::size_t j = 0; j < dimension(); ++j)
    for (const auto& [i, a] : columns_[j]) cols[i].emplace_back(j, std::conj(a));
  return TruncatedOperator(basis_, std::move(cols));
}

std::vector<std::vector<Complex>> TruncatedOperator::to_dense() const {
  std::vector<std::vector<Complex>> m(dimension(), std::vector<Complex>(dimension(), Complex(0.0)));
  for (std::size_t j = 0; j < dimension(); ++j)
    for (const auto& [i, a] : columns_[j]) m[i][j] = a;
  return m;
}

namespace {

std::vector<LatticePoint> offending_exponents(const Cone& cone, const std::vector<LatticePoint>& pts) {
  std::vector<LatticePoint> bad;
  if (pts.empty()) return bad;
  const BoxTable table(cone, coordinatewise_max(pts));
  for (const auto& s : pts)
    if (!table.contains(s)) bad.push_back(s);
  std::sort(bad.begin(), bad.end());
  return bad;
}

TruncatedOperator assemble(const Cone& cone, const Polynomial& p, const LatticePoint& bound) {
  auto basis = std::make_shared<const FockBasis>(cone, bound);
  std::vector<TruncatedOperator::Column> cols(basis->size());
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const auto& t = basis->points()[j];
    for (const auto& [s, lambda] : p.terms()) {
      const LatticePoint target = s + t;
      if (!target.dominated_by(bound)) continue;
      const auto row = basis->index(target);
      if (!row) throw std::logic_error("s + t left the cone: " + target.to_string());
      cols[j].emplace_back(*row, lambda);
    }
    std::sort(cols[j].begin(), cols[j].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return TruncatedOperator(std::move(basis), std::move(cols));
}

}  // namespace

TruncatedOperator fock_matrix(const Cone& cone, const LatticePoint& s, const LatticePoint& bound) {
  require_rank(cone.rank(), s, "fock_matrix");
  require_rank(cone.rank(), bound, "fock_matrix bound");
  if (!membership(cone, s).member)
    throw Error(ErrorKind::Support, "s not a member of the cone: " + s.to_string());
  return assemble(cone, Polynomial::monomial(s), bound);
}

TruncatedOperator apply_polynomial(const Cone& cone, const Polynomial& p, const LatticePoint& bound) {
  if (p.rank() != cone.rank()) throw Error(ErrorKind::RankMismatch, "polynomial rank differs from cone rank");
  require_rank(cone.rank(), bound, "apply_polynomial bound");
  auto bad = offending_exponents(cone, p.support());
  if (!bad.empty()) throw SupportError(std::move(bad));
  return assemble(cone, p, bound);
}

Complex fourier_coefficient(const TruncatedOperator& op, const LatticePoint& s) {
  const auto row = op.basis().index(s);
  const auto origin = op.basis().index(LatticePoint::zero(op.basis().cone().rank()));
  if (!row || !origin) throw std::out_of_range("s outside truncation box: " + s.to_string());
  return op.entry(*row, *origin);
}

// ---------------------------------------------------------------------------
// Norms

double operator_norm(const TruncatedOperator& op, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const std::size_t n = op.dimension();
  if (n == 0 || op.nonzeros() == 0) return 0.0;

  auto norm2 = [](const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
  };

  std::vector<Complex> v(n, Complex(1.0 / std::sqrt(static_cast<double>(n))));
  double prev = -1.0;
  for (long it = 0; it < kMaxPowerIterations; ++it) {
    const auto w = op.apply(v);
    const double rayleigh = norm2(w);  // <v, A*A v> with |v| = 1
    auto u = op.apply_adjoint(w);
    const double un = std::sqrt(norm2(u));
    if (un == 0.0) return std::sqrt(rayleigh);
    if (prev >= 0.0 && std::abs(rayleigh - prev) < tol * (1.0 + rayleigh)) return std::sqrt(rayleigh);
    prev = rayleigh;
    for (auto& x : u) x /= un;
    v = std::move(u);
  }
  throw Error(ErrorKind::Numeric, "iteration budget exhausted after " +
                                      std::to_string(kMaxPowerIterations) + " power iterations");
}

long default_torus_grid(std::size_t rank) {
  if (rank == 1) return 4096;
  if (rank == 2) return 512;
  return 64;
}

TorusNorm torus_norm(const Polynomial& p, long grid_per_dim) {
  const std::size_t d = p.rank();
  const Coord degree = p.max_total_degree();
  if (grid_per_dim < 2 * (1 + degree))
    throw Error(ErrorKind::Numeric, "grid too coarse: " + std::to_string(grid_per_dim) +
                                        " points per dimension, need at least " +
                                        std::to_string(2 * (1 + degree)));
  TorusNorm out;
  out.grid_per_dim = grid_per_dim;
  if (p.is_zero()) return out;

  const auto n = static_cast<std::size_t>(grid_per_dim);
  std::vector<Complex> roots(n);
  for (std::size_t k = 0; k < n; ++k)
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / grid_per_dim);

  // Exponents reduced mod N per coordinate, so each factor is a table lookup.
  std::vector<std::pair<std::vector<std::size_t>, Complex>> terms;
  double weighted = 0.0;
  for (const auto& [s, c] : p.terms()) {
    std::vector<std::size_t> e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<std::size_t>(s[i]) % n;
    terms.emplace_back(std::move(e), c);
    weighted += std::abs(c) * static_cast<double>(s.l1_norm());
  }

  std::vector<std::size_t> k(d, 0);
  double best = 0.0;
  while (true) {
    Complex sum(0.0);
    for (const auto& [e, c] : terms) {
      Complex mono = c;
      for (std::size_t i = 0; i < d; ++i) mono *= roots[(k[i] * e[i]) % n];
      sum += mono;
    }
    best = std::max(best, std::abs(sum));
    std::size_t i = d;
    while (i-- > 0) {
      if (++k[i] < n) break;
      k[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  out.value = best;
  out.error_bound = std::numbers::pi * static_cast<double>(degree) / static_cast<double>(grid_per_dim) * weighted;
  return out;
}

bool NormReport::fock_norms_nondecreasing() const {
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (rows[k].fock_norm < rows[k - 1].fock_norm - tolerance * (1.0 + rows[k - 1].fock_norm))
      return false;
  return true;
}

bool NormReport::within_torus_bound() const {
  for (const auto& r : rows)
    if (r.fock_norm > torus.value + torus.error_bound + 1e-12) return false;
  return true;
}

NormReport norm_gap_report(const Cone& cone, const Polynomial& p,
                           const std::vector<LatticePoint>& schedule, double tol,
                           long grid_per_dim) {
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    require_rank(cone.rank(), schedule[k], "schedule bound");
    if (k > 0)
      for (std::size_t i = 0; i < cone.rank(); ++i)
        if (schedule[k][i] <= schedule[k - 1][i])
          throw std::invalid_argument("schedule must increase strictly in every coordinate");
  }
  if (p.rank() != cone.rank()) throw Error(ErrorKind::RankMismatch, "polynomial rank differs from cone rank");
  auto bad = offending_exponents(cone, p.support());
  if (!bad.empty()) throw SupportError(std::move(bad));

  NormReport report;
  report.tolerance = tol;
  report.torus = torus_norm(p, grid_per_dim > 0 ? grid_per_dim : default_torus_grid(cone.rank()));
  for (const auto& bound : schedule) {
    NormRow row;
    row.bound = bound;
    row.fock_norm = operator_norm(apply_polynomial(cone, p, bound), tol);
    row.torus_norm = report.torus.value;
    row.error_bound = report.torus.error_bound;
    row.gap = row.torus_norm - row.fock_norm;
    report.rows.push_back(std::move(row));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Finite vectors and the dilation shift

double euclidean_norm(const SparseVector& v) {
  double s = 0.0;
  for (const auto& [g, x] : v) s += std::norm(x);
  return std::sqrt(s);
}

SparseVector apply_on_group(const Polynomial& p, const SparseVector& xi) {
  SparseVector out;
  for (const auto& [g, x] : xi)
    for (const auto& [s, lambda] : p.terms()) out[g + s] += lambda * x;
  return out;
}

SparseVector apply_on_fock(const Cone& cone, const Polynomial& p, const SparseVector& xi) {
  if (p.rank() != cone.rank()) throw Error(ErrorKind::RankMismatch, "polynomial rank differs from cone rank");
  auto bad = offending_exponents(cone, p.support());
  if (!bad.empty()) throw SupportError(std::move(bad));
  std::vector<LatticePoint> pts;
  for (const auto& [g, x] : xi) {
    require_rank(cone.rank(), g, "Fock vector");
    if (!g.is_nonnegative())
      throw std::invalid_argument("Fock vector supported outside S at " + g.to_string());
    pts.push_back(g);
  }
  if (!offending_exponents(cone, pts).empty())
    throw std::invalid_argument("Fock vector supported outside S");
  return apply_on_group(p, xi);
}

DilationShift dilation_shift(const Cone& cone, const SparseVector& xi) {
  const auto profiles = require_higher_rank(cone);
  const std::size_t d = cone.rank();
  DilationShift out;
  out.t = LatticePoint::zero(d);
  for (const auto& [g, x] : xi) {
    require_rank(d, g, "dilation vector");
    LatticePoint ti = LatticePoint::zero(d);
    if (!(g.is_nonnegative() && membership(cone, g).member)) {
      // n_j = conductor_j + |g_j| puts both t_i and t_i + g_i past every
      // axis conductor, hence inside S.
      for (std::size_t j = 0; j < d; ++j)
        ti[j] = checked_add(*profiles[j].conductor, g[j] < 0 ? checked_sub(0, g[j]) : g[j]);
    }
    const LatticePoint si = ti + g;
    if (!membership(cone, si).member || !membership(cone, ti).member)
      throw std::logic_error("dilation decomposition left the cone at " + g.to_string());
    out.decompositions.emplace_back(si, ti);
    out.t = out.t + ti;
  }
  for (const auto& [g, x] : xi) out.xi_shifted.emplace(out.t + g, x);
  return out;
}

Polynomial rotate(const Polynomial& p, const std::vector<double>& theta) {
  if (theta.size() != p.rank()) throw Error(ErrorKind::RankMismatch, "rotation angle count differs from rank");
  Polynomial r(p.rank());
  for (const auto& [s, c] : p.terms()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < s.rank(); ++i) phase += theta[i] * static_cast<double>(s[i]);
    r.add_term(s, c * std::polar(1.0, phase));
  }
  return r;
}

}  // namespace hrnum
