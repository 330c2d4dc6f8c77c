// The cyclotomic Hecke algebra H_n(v_1, …, v_m; q) of type G(m,1,n) over an
// exact field, in the basis L_1^{e_1} ⋯ L_n^{e_n} a_w (0 ≤ e_i < m).
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cyclohecke/exactnum.hpp"
#include "cyclohecke/shapes.hpp"

namespace cyclohecke {

struct HeckeParams {
  int m = 1;
  int n = 0;
  Scalar q = 1;
  std::vector<Scalar> v;  // v[k-1] = v_k

  /// Promotes q and v into one field and checks level, rank and q ≠ 0.
  /// Throws std::invalid_argument (or ConductorMismatch) otherwise.
  HeckeParams validated() const;
  /// Conductor shared by all parameters (0 when all rational).
  int conductor() const;
};

/// Index (e, w) of the basis element L^e a_w.
struct NormalIndex {
  std::vector<int> exponents;
  Permutation w;
  auto operator<=>(const NormalIndex&) const = default;
};

using BasisId = std::uint32_t;
using SparseVector = std::map<BasisId, Scalar>;

/// Multiplication tables of H_n for concrete parameters.
///
/// Left multiplication by a generator is closed form: L_1 is absorbed into the
/// exponent of L_1 (reduced by the degree-m relation), and a_i (i ≥ 2) passes
/// through L_{i-1}^x L_i^y by
///   a_i X^x Y^y = X^y Y^x a_i + (q−1) Y (X^x Y^y − X^y Y^x)/(Y − X),
/// X = L_{i-1}, Y = L_i, before meeting a_w by the length dichotomy.
/// Everything else (right multiplication by a_1, general products) is built
/// from these rules. Right-multiplication results for a_1 are memoized.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const HeckeParams& params);

  const HeckeParams& params() const { return params_; }
  int level() const { return params_.m; }
  int rank() const { return params_.n; }
  BasisId dimension() const { return dimension_; }

  NormalIndex index(BasisId id) const;
  BasisId id_of(const NormalIndex& index) const;
  BasisId unit_id() const { return 0; }

  Scalar zero() const { return zero_; }
  Scalar one() const { return one_; }

  /// a_j · (basis element), 1 ≤ j ≤ n.
  const SparseVector& left_generator(int j, BasisId b) const;
  /// (basis element) · a_j, 1 ≤ j ≤ n.
  SparseVector right_generator(int j, BasisId b) const;

  SparseVector left_multiply(int j, const SparseVector& x) const;
  SparseVector right_multiply(const SparseVector& x, int j) const;
  /// L_k · x.
  SparseVector left_murphy(int k, const SparseVector& x) const;
  /// x · L_k.
  SparseVector right_murphy(const SparseVector& x, int k) const;
  /// a_w · x, applying the generators of a reduced word.
  SparseVector left_multiply_perm(const Permutation& w, const SparseVector& x) const;
  /// x · a_w.
  SparseVector right_multiply_perm(const SparseVector& x, const Permutation& w) const;

  SparseVector product(const SparseVector& x, const SparseVector& y) const;

  /// Number of cached right a_1 columns (for diagnostics).
  std::size_t cached_right_columns() const;

 private:
  std::uint32_t perm_count() const { return perm_count_; }
  BasisId compose(std::uint32_t e_code, std::uint32_t w_rank) const { return e_code * perm_count_ + w_rank; }
  std::vector<int> exponents_of(std::uint32_t e_code) const;
  std::uint32_t code_of(const std::vector<int>& e) const;
  SparseVector compute_left_generator(int j, BasisId b) const;
  SparseVector compute_right_a1(BasisId b) const;

  HeckeParams params_;
  BasisId dimension_ = 1;
  std::uint32_t perm_count_ = 1;
  Scalar zero_, one_, q_minus_one_;
  std::vector<Scalar> l1_reduction_;  // L_1^m = Σ_j l1_reduction_[j] L_1^j
  std::vector<Permutation> perms_;
  // [s-1][w] for s = 1..n-1: rank of s*w / w*s and whether length grows.
  std::vector<std::vector<std::uint32_t>> left_perm_, right_perm_;
  std::vector<std::vector<bool>> left_longer_, right_longer_;
  std::vector<std::vector<SparseVector>> left_table_;  // [j-1][b]

  mutable std::shared_mutex cache_mutex_;
  mutable std::map<BasisId, SparseVector> right_a1_cache_;
};

/// An element of H_n: finitely supported combination of basis indices.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(std::shared_ptr<const HeckeAlgebra> algebra, SparseVector terms = {});

  const std::shared_ptr<const HeckeAlgebra>& algebra() const { return algebra_; }
  const SparseVector& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const NormalIndex& index) const;
  Scalar coefficient(BasisId id) const;

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement& operator*=(const Scalar& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Scalar& c, HeckeElement x) { return x *= c; }
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y);
  friend bool operator==(const HeckeElement& x, const HeckeElement& y);

  std::string to_string() const;

 private:
  void check_same(const HeckeElement& other) const;
  std::shared_ptr<const HeckeAlgebra> algebra_;
  SparseVector terms_;
};

std::shared_ptr<const HeckeAlgebra> make_algebra(const HeckeParams& params);

HeckeElement unit(const std::shared_ptr<const HeckeAlgebra>& algebra);
HeckeElement basis_element(const std::shared_ptr<const HeckeAlgebra>& algebra, const NormalIndex& index);
/// a_i, 1 ≤ i ≤ n.
HeckeElement generator(const std::shared_ptr<const HeckeAlgebra>& algebra, int i);
/// L_i = q^{1−i} a_i ⋯ a_2 a_1 a_2 ⋯ a_i, evaluated through the product.
HeckeElement murphy(const std::shared_ptr<const HeckeAlgebra>& algebra, int i);
/// a_w for a permutation of degree n.
HeckeElement a_w(const std::shared_ptr<const HeckeAlgebra>& algebra, const Permutation& w);
/// Product of generators a_{i+1} along an arbitrary word in the s_i.
HeckeElement a_word(const std::shared_ptr<const HeckeAlgebra>& algebra, const std::vector<int>& word);

HeckeElement mul(const HeckeElement& x, const HeckeElement& y);
/// Anti-involution fixing every a_i.
HeckeElement star(const HeckeElement& x);
/// Coefficient of the identity basis element.
Scalar trace(const HeckeElement& x);
/// x · a_j and a_j · x.
HeckeElement right_generator(const HeckeElement& x, int j);
HeckeElement left_generator(int j, const HeckeElement& x);

struct SemisimplicityReport {
  bool semisimple = true;
  /// The first vanishing criterion term, e.g. "1+q" or "q^1*v2-v1".
  std::optional<std::string> witness;
};

/// Semisimplicity criterion: all q^i v_j − v_k (|i| < n, j ≠ k) and all
/// 1 + q + ⋯ + q^i (1 ≤ i < n) nonzero.
SemisimplicityReport is_semisimple(const HeckeParams& params);

/// Classes of {1..m} under v_j = v_k q^b. When q has finite order the search
/// covers a full period; otherwise |b| ≤ bound.
std::vector<std::vector<int>> parameter_orbits(const HeckeParams& params, int bound);

}  // namespace cyclohecke
