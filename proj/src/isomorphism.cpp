#include "hrnum/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace hrnum {

using Rational = boost::multiprecision::cpp_rational;
using RatMatrix = std::vector<std::vector<Rational>>;

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("permutation images must be a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t d) {
  std::vector<std::size_t> id(d);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return Permutation(std::move(id));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

LatticePoint Permutation::apply(const LatticePoint& p) const {
  require_rank(images_.size(), p, "permutation");
  LatticePoint r = LatticePoint::zero(p.rank());
  for (std::size_t i = 0; i < images_.size(); ++i) r[images_[i]] = p[i];
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& first) const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[first.images_[i]];
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// Minimal generators and permutation search

std::vector<LatticePoint> minimal_generators(const Cone& cone) {
  const auto& gens = cone.generators();
  const BoxTable table(cone, coordinatewise_max(gens));
  const auto members = table.members();
  std::vector<LatticePoint> minimal;
  for (const auto& s : gens) {
    bool decomposable = false;
    for (const auto& a : members) {
      if (a.is_zero() || a == s || !a.dominated_by(s)) continue;
      if (table.contains(s - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal.push_back(s);
  }
  return minimal;
}

std::optional<Permutation> equal_up_to_permutation(const Cone& c1, const Cone& c2) {
  if (c1.rank() != c2.rank()) return std::nullopt;
  const std::size_t d = c1.rank();
  if (d > kMaxPermutationRank)
    throw std::invalid_argument("permutation search limited to rank " +
                                std::to_string(kMaxPermutationRank));
  const auto target = minimal_generators(c1);
  const auto source = minimal_generators(c2);
  if (target.size() != source.size()) return std::nullopt;

  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{0});
  do {
    const Permutation sigma(images);
    std::vector<LatticePoint> moved;
    moved.reserve(source.size());
    for (const auto& g : source) moved.push_back(sigma.apply(g));
    std::sort(moved.begin(), moved.end());
    if (moved == target) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact linear algebra for induced_matrix

const char* to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::Permutation: return "permutation";
    case MatrixClass::UnimodularNonPermutation: return "unimodular-non-permutation";
    case MatrixClass::NotUnimodular: return "not-unimodular";
    case MatrixClass::NotIntegral: return "not-integral";
    case MatrixClass::NotAdditive: return "not-additive";
  }
  return "?";
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// Inverse of an invertible square matrix via Gauss-Jordan on [A | I].
RatMatrix invert(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = row_reduce(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= pivots.size() || pivots[i] != i) throw std::logic_error("matrix is singular");
  RatMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

bool is_integral(const RatMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (boost::multiprecision::denominator(x) != 1) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& a) {
  IntMatrix out;
  for (const auto& row : a) {
    std::vector<BigInt> r;
    for (const auto& x : row) r.push_back(boost::multiprecision::numerator(x));
    out.push_back(std::move(r));
  }
  return out;
}

bool is_permutation_matrix(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<int> col_ones(n, 0);
  for (const auto& row : m) {
    int ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == 1) {
        ++ones;
        ++col_ones[j];
      } else if (row[j] != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_ones.begin(), col_ones.end(), [](int c) { return c == 1; });
}

}  // namespace

IntegerMatrixWitness induced_matrix(const Cone& c1, const Cone& c2,
                                    const std::map<LatticePoint, LatticePoint>& gen_map) {
  const std::size_t d1 = c1.rank();
  const std::size_t d2 = c2.rank();
  const auto& gens = c1.generators();
  const std::size_t k = gens.size();

  RatMatrix g(d1, std::vector<Rational>(k));
  RatMatrix h(d2, std::vector<Rational>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const auto it = gen_map.find(gens[j]);
    if (it == gen_map.end())
      throw Error(ErrorKind::RankMismatch, "generator map misses " + gens[j].to_string());
    require_rank(d2, it->second, "generator image");
    if (!it->second.is_nonnegative())
      throw Error(ErrorKind::InvalidCone, "generator image " + it->second.to_string() +
                                              " has a negative coordinate");
    for (std::size_t i = 0; i < d1; ++i) g[i][j] = gens[j][i];
    for (std::size_t i = 0; i < d2; ++i) h[i][j] = it->second[i];
  }

  RatMatrix rref = g;
  const auto pivots = row_reduce(rref);
  if (pivots.size() < d1)
    throw Error(ErrorKind::InvalidCone, "rank-deficient generator span: generators of rank " +
                                            std::to_string(pivots.size()) + " in Q^" +
                                            std::to_string(d1));

  IntegerMatrixWitness w;

  // Kernel basis: one integer relation per free column.
  std::vector<char> is_pivot(k, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  for (std::size_t f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> rel(k, 0);
    rel[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) rel[pivots[r]] = -rref[r][f];
    BigInt scale = 1;
    for (const auto& x : rel) {
      const BigInt den = boost::multiprecision::denominator(x);
      scale = scale / boost::multiprecision::gcd(scale, den) * den;
    }
    std::vector<BigInt> relation;
    for (const auto& x : rel) relation.push_back(boost::multiprecision::numerator(Rational(x * scale)));

    for (std::size_t i = 0; i < d2; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < k; ++j)
        acc += relation[j] * boost::multiprecision::numerator(h[i][j]);
      if (acc != 0) {
        w.classification = MatrixClass::NotAdditive;
        w.violated_relation = std::move(relation);
        return w;
      }
    }
  }

  // M = H_P G_P^{-1} on the pivot (spanning) columns.
  RatMatrix gp(d1, std::vector<Rational>(d1));
  RatMatrix hp(d2, std::vector<Rational>(d1));
  for (std::size_t c = 0; c < d1; ++c) {
    for (std::size_t i = 0; i < d1; ++i) gp[i][c] = g[i][pivots[c]];
    for (std::size_t i = 0; i < d2; ++i) hp[i][c] = h[i][pivots[c]];
  }
  const RatMatrix gp_inv = invert(gp);
  RatMatrix m(d2, std::vector<Rational>(d1, 0));
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d1; ++j)
      for (std::size_t l = 0; l < d1; ++l) m[i][j] += hp[i][l] * gp_inv[l][j];

  if (!is_integral(m)) {
    w.classification = MatrixClass::NotIntegral;
    return w;
  }
  w.matrix = to_integer(m);
  if (d1 != d2) {
    w.classification = MatrixClass::NotUnimodular;
    return w;
  }
  const Rational det = determinant(m);
  if (det != 1 && det != -1) {
    w.classification = MatrixClass::NotUnimodular;
    return w;
  }
  w.inverse = to_integer(invert(m));
  w.classification = is_permutation_matrix(w.matrix) ? MatrixClass::Permutation
                                                     : MatrixClass::UnimodularNonPermutation;
  return w;
}

std::optional<IsoWitness> decide_algebra_isomorphism(const Cone& c1, const Cone& c2) {
  require_higher_rank(c1);
  require_higher_rank(c2);
  auto sigma = equal_up_to_permutation(c1, c2);
  if (!sigma) return std::nullopt;
  return IsoWitness{
      *sigma,
      "composing the coordinate permutation with any coordinatewise rotation "
      "e_s -> exp(i theta.s) e_s, theta in [0, 2pi)^d, is again an isomorphism; "
      "the vacuum-preserving isomorphisms are exactly these compositions"};
}

}  // namespace hrnum
