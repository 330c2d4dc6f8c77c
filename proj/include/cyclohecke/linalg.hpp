// Exact linear algebra over a field type F (Scalar, or ModP for modular
// certificates). Dense matrices are Eigen matrices; the cellular solver works
// on sparse columns.
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclohecke/exactnum.hpp"

namespace Eigen {

template <>
struct NumTraits<cyclohecke::Scalar> : GenericNumTraits<cyclohecke::Scalar> {
  using Real = cyclohecke::Scalar;
  using NonInteger = cyclohecke::Scalar;
  using Nested = cyclohecke::Scalar;
  using Literal = cyclohecke::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace cyclohecke {

template <class F>
using Matrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
using ScalarMatrix = Matrix<Scalar>;

/// Element of F_p for a prime p < 2^31.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint32_t p) : value_(static_cast<std::uint32_t>(value % p)), p_(p) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  ModP pow(std::uint64_t e) const {
    std::uint64_t base = value_, acc = 1 % p_;
    for (; e; e >>= 1, base = base * base % p_) {
      if (e & 1) acc = acc * base % p_;
    }
    return {acc, p_};
  }
  ModP inverse() const {
    if (value_ == 0) throw std::domain_error("division by zero in F_p");
    return pow(p_ - 2);
  }

  friend ModP operator+(ModP a, ModP b) { return {std::uint64_t(a.value_) + b.value_, pick(a, b)}; }
  friend ModP operator-(ModP a, ModP b) { return {std::uint64_t(a.value_) + pick(a, b) - b.value_, pick(a, b)}; }
  friend ModP operator*(ModP a, ModP b) { return {std::uint64_t(a.value_) * b.value_, pick(a, b)}; }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return {std::uint64_t(p_) - value_, p_}; }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend bool operator==(ModP a, ModP b) { return a.value_ == b.value_; }

 private:
  static std::uint32_t pick(ModP a, ModP b) { return a.p_ ? a.p_ : b.p_; }
  std::uint32_t value_ = 0;
  std::uint32_t p_ = 1;
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value(); }

/// A ring map Z[ζ_e][1/N] → F_p sending ζ_e to an element of order e.
class ModularReduction {
 public:
  /// Picks the first prime p ≥ 2^30 with p ≡ 1 (mod e) and an element of
  /// exact order e (e = 0 or 1 means rationals). `skip` selects later primes.
  explicit ModularReduction(int conductor, int skip = 0);

  std::uint32_t prime() const { return p_; }
  /// Throws std::domain_error if p divides the denominator.
  ModP operator()(const Scalar& x) const;

 private:
  int conductor_;
  std::uint32_t p_ = 0;
  ModP zeta_;
};

// ---------------------------------------------------------------------------
// Dense elimination

/// Rank by fraction-free (Bareiss) elimination with row pivoting.
template <class F>
int rank(Matrix<F> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  if (rows == 0 || cols == 0) return 0;
  F prev = a(0, 0);
  bool have_prev = false;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        F value = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        a(i, j) = have_prev ? value / prev : value;
      }
      a(i, c) = a(i, c) - a(i, c);
    }
    prev = a(r, c);
    have_prev = true;
    ++r;
  }
  return static_cast<int>(r);
}

/// Inverse by Gauss–Jordan, or nullopt when singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m, const F& one) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<F> a = m;
  Matrix<F> inv(n, n);
  const F zero = one - one;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = i == j ? one : zero;
  }
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(a(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      inv.row(piv).swap(inv.row(c));
    }
    const F scale = one / a(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * scale;
      inv(c, j) = inv(c, j) * scale;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const F f = a(i, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(c, j);
        inv(i, j) = inv(i, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class F>
bool is_symmetric(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sparse column echelon

template <class F>
using SparseColumn = std::map<std::uint32_t, F>;

/// Incremental column reduction of c_1, …, c_K. Each reduced column r_j has a
/// pivot row where every later reduced column vanishes, and
/// c_j = r_j + Σ_{k<j} α_{jk} r_k. Solving x = Σ y_j c_j is a forward sweep
/// over the pivots followed by back substitution through α.
template <class F>
class SparseEchelon {
 public:
  /// Adds a column. Returns false (and stores nothing) if it is dependent.
  bool add(SparseColumn<F> column) {
    std::vector<std::pair<std::uint32_t, F>> alpha;
    reduce(column, &alpha);
    if (column.empty()) return false;
    // Pivot on the sparsest choice: the smallest row index.
    const std::uint32_t row = column.begin()->first;
    pivot_of_row_.emplace(row, static_cast<std::uint32_t>(reduced_.size()));
    pivots_.push_back(row);
    reduced_.push_back(std::move(column));
    alpha_.push_back(std::move(alpha));
    return true;
  }

  std::size_t size() const { return reduced_.size(); }

  /// y with x = Σ y_j c_j, or nullopt if x is outside the span.
  std::optional<std::vector<F>> solve(SparseColumn<F> x, const F& zero) const {
    std::vector<std::pair<std::uint32_t, F>> beta;
    reduce(x, &beta);
    if (!x.empty()) return std::nullopt;
    std::vector<F> y(reduced_.size(), zero);
    for (auto& [k, b] : beta) y[k] = b;
    for (std::size_t j = reduced_.size(); j-- > 0;) {
      if (is_zero(y[j])) continue;
      for (const auto& [k, a] : alpha_[j]) y[k] = y[k] - a * y[j];
    }
    return y;
  }

  std::size_t fill() const {
    std::size_t total = 0;
    for (const auto& r : reduced_) total += r.size();
    for (const auto& a : alpha_) total += a.size();
    return total;
  }

 private:
  // Subtracts pivot multiples in creation order; records the multiples.
  void reduce(SparseColumn<F>& x, std::vector<std::pair<std::uint32_t, F>>* multiples) const {
    // Pivot k only touches rows that are not pivots of earlier columns, so a
    // queue ordered by pivot index visits every pivot hit exactly once.
    std::map<std::uint32_t, std::uint32_t> pending;  // pivot index → row
    for (const auto& [row, value] : x) {
      if (auto it = pivot_of_row_.find(row); it != pivot_of_row_.end()) pending.emplace(it->second, row);
    }
    while (!pending.empty()) {
      const auto [k, row] = *pending.begin();
      pending.erase(pending.begin());
      auto it = x.find(row);
      if (it == x.end()) continue;
      const F f = it->second / reduced_[k].at(row);
      multiples->emplace_back(k, f);
      for (const auto& [r, value] : reduced_[k]) {
        auto [pos, inserted] = x.try_emplace(r, value);
        if (inserted) {
          pos->second = -(f * value);
        } else {
          pos->second = pos->second - f * value;
        }
        if (is_zero(pos->second)) {
          x.erase(pos);
        } else if (inserted) {
          if (auto p = pivot_of_row_.find(r); p != pivot_of_row_.end()) pending.emplace(p->second, r);
        }
      }
    }
  }

  std::vector<SparseColumn<F>> reduced_;
  std::vector<std::uint32_t> pivots_;
  std::map<std::uint32_t, std::uint32_t> pivot_of_row_;
  std::vector<std::vector<std::pair<std::uint32_t, F>>> alpha_;
};

}  // namespace cyclohecke
