// Cellular (Murphy-type) basis m_st of H_n, Specht modules, Gram matrices and
// simple-module detection.
#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "cyclohecke/heckealg.hpp"
#include "cyclohecke/linalg.hpp"
#include "cyclohecke/shapes.hpp"

namespace cyclohecke {

/// A computed element violates the cellular filtration, or the cellular
/// matrix is singular. Either means an upstream bug.
class CellularViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using AlgebraPtr = std::shared_ptr<const HeckeAlgebra>;

/// u_a = Π_k (L_1 − v_k)⋯(L_{a_k} − v_k) over the a-sequence of λ.
HeckeElement u_a(const AlgebraPtr& algebra, const Multipartition& lambda);
/// Sum of a_w over the row stabilizer of the canonical tableau.
HeckeElement x_lambda(const AlgebraPtr& algebra, const Multipartition& lambda);
/// u_a · x_λ (checked against x_λ · u_a).
HeckeElement m_lambda(const AlgebraPtr& algebra, const Multipartition& lambda);

struct CellularDatum {
  Multipartition lambda;
  HeckeElement u_a, x_lambda, m_lambda;
  std::vector<StandardTableau> tableaux;
  /// m_st = a_{d(s)}^* m_λ a_{d(t)}, stored at s * #tableaux + t.
  std::vector<HeckeElement> m_st;

  const HeckeElement& element(std::size_t s, std::size_t t) const { return m_st[s * tableaux.size() + t]; }
};

CellularDatum cellular_datum(const AlgebraPtr& algebra, const Multipartition& lambda);

struct CellLabel {
  int shape = 0;  // index into CellularTable::shapes()
  int s = 0;
  int t = 0;
};

/// All m_st for every multipartition of n, shapes in a dominance linear
/// extension (most dominant first).
class CellularTable {
 public:
  explicit CellularTable(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Multipartition>& shapes() const { return shapes_; }
  int shape_index(const Multipartition& lambda) const;
  const CellularDatum& datum(int shape) const { return data_[shape]; }
  const std::vector<CellLabel>& labels() const { return labels_; }
  std::size_t label_index(int shape, int s, int t) const;

  /// Σ_λ (#std λ)².
  std::size_t size() const { return labels_.size(); }

  /// Exact coordinates of x along labels(). Factorizes the cellular matrix on
  /// first use; throws CellularViolation if it is singular.
  std::vector<Scalar> expand(const HeckeElement& x) const;

  /// Exact invertibility (factorizes).
  bool invertible() const;
  /// Invertibility certificate through a reduction modulo a prime: true
  /// proves invertibility over the exact field, false is inconclusive.
  bool invertible_mod_p() const;

 private:
  void factorize() const;

  AlgebraPtr algebra_;
  std::vector<Multipartition> shapes_;
  std::vector<CellularDatum> data_;
  std::vector<CellLabel> labels_;
  std::vector<std::size_t> offsets_;

  mutable std::once_flag factor_once_;
  mutable SparseEchelon<Scalar> echelon_;
  mutable bool singular_ = false;
};

std::vector<Scalar> expand_cellular(const HeckeElement& x, const CellularTable& table);

/// S^λ with basis z_λ a_{d(t)} over the standard tableaux of λ. Row-vector
/// convention: (z_t) a_i = Σ_u generators[i-1](t, u) z_u.
struct SpechtModule {
  Multipartition lambda;
  std::vector<StandardTableau> basis;
  std::vector<ScalarMatrix> generators;

  int dimension() const { return static_cast<int>(basis.size()); }
};

SpechtModule specht_module(const CellularTable& table, const Multipartition& lambda);

/// Entry (t, s): coefficient of m_λ in m_λ a_{d(s)} a_{d(t)}^* m_λ mod 𝓘_λ.
ScalarMatrix gram(const CellularTable& table, const Multipartition& lambda);

/// Rank of the Gram matrix, i.e. dim D^λ.
int dim_simple(const CellularTable& table, const Multipartition& lambda);

/// λ with D^λ ≠ 0, in the table's shape order. `threads` bounds the number of
/// worker threads (results do not depend on it).
std::vector<Multipartition> simple_labels(const CellularTable& table, int threads = 1);

/// Convenience wrappers that build a table for the given parameters.
ScalarMatrix gram(const Multipartition& lambda, const HeckeParams& params);
int dim_simple(const Multipartition& lambda, const HeckeParams& params);
std::vector<Multipartition> simple_labels(const HeckeParams& params, int threads = 1);

/// Runs `work(i)` for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& work);

}  // namespace cyclohecke
