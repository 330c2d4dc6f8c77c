// The combinatorial Fock space of level m with its v-deformed e_i/f_i action,
// crystal operators, Kleshchev multipartitions and classical i-restriction.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/exactnum.hpp"
#include "cyclohecke/shapes.hpp"

namespace cyclohecke {

/// (γ_1, …, γ_m; r).
using FockConfig = ResidueConfig;

/// Finitely supported Σ c_λ(v) λ.
class FockVector {
 public:
  using Terms = std::map<Multipartition, LaurentPoly>;

  FockVector() = default;
  static FockVector basis(const Multipartition& lambda) {
    FockVector x;
    x.add(lambda, LaurentPoly(1));
    return x;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Multipartition& lambda) const;
  void add(const Multipartition& lambda, const LaurentPoly& c);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(const LaurentPoly& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPoly& c, FockVector x) { return x *= c; }
  friend bool operator==(const FockVector& a, const FockVector& b) = default;

  /// Coefficients at v = 1.
  std::map<Multipartition, mpz_class> at_one() const;
  /// Coefficient-wise bar.
  FockVector bar() const;
  /// "c*[..] + ..." in key order; "0" when empty.
  std::string to_string() const;

 private:
  Terms terms_;
};

FockVector f_op(const FockVector& x, Residue i, const FockConfig& config);
FockVector e_op(const FockVector& x, Residue i, const FockConfig& config);

struct Weight {
  std::map<Residue, int> n_i;  // nonzero N_i(λ) only
  int n_d = 0;
};

Weight weight(const Multipartition& lambda, const FockConfig& config);

/// The residues relevant at λ: 0..r-1, or for r = ∞ those of addable and
/// removable nodes.
std::vector<Residue> active_residues(const Multipartition& lambda, const FockConfig& config);

struct RaLetter {
  char kind;  // 'A' or 'R'
  Cell cell;
};

/// Addable and removable i-nodes in reading order.
std::vector<RaLetter> ra_word(const Multipartition& lambda, Residue i, const FockConfig& config);
/// The word left after deleting adjacent "RA" pairs to a fixed point.
std::vector<RaLetter> ra_reduce(const std::vector<RaLetter>& word);
std::string ra_string(const std::vector<RaLetter>& word);

std::optional<Cell> good_removable(const Multipartition& lambda, Residue i, const FockConfig& config);
std::optional<Cell> good_addable(const Multipartition& lambda, Residue i, const FockConfig& config);

std::optional<Multipartition> crystal_f(const Multipartition& lambda, Residue i, const FockConfig& config);
std::optional<Multipartition> crystal_e(const Multipartition& lambda, Residue i, const FockConfig& config);

/// Reachability from ∅ by crystal_f (checked backwards through crystal_e).
bool is_kleshchev(const Multipartition& lambda, const FockConfig& config);
/// Existence of a standard tableau whose every k sits at a good removable
/// node of its restriction to 1..k.
bool is_kleshchev_by_tableau(const Multipartition& lambda, const FockConfig& config);

/// Closure of ∅ under crystal_f, size exactly n, sorted.
std::vector<Multipartition> enumerate_kleshchev(const FockConfig& config, int n);
/// Counts for sizes 0..N.
std::vector<long> kleshchev_series(const FockConfig& config, int max_n);

/// Σ μ over λ/μ a single i-node (e_i at v = 1).
std::map<Multipartition, long> classical_i_res(const Multipartition& lambda, Residue i, const FockConfig& config);

/// Crystal graph on Kleshchev multipartitions of size ≤ depth, as DOT.
std::string crystal_dot(const FockConfig& config, int depth);

}  // namespace cyclohecke
