// Level-one canonical basis of the Fock space (LLT algorithm) and
// decomposition matrices of type A Hecke algebras at roots of unity.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "cyclohecke/fock.hpp"
#include "cyclohecke/shapes.hpp"

namespace cyclohecke {

/// A unitriangularity or integrality assertion failed.
class LltViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cells (a, b) and (a − 1, b + r − 1) share a ladder. This is the ladder
/// shape matching r-restricted labels; it agrees with the row-wise variant
/// a + (r−1)(b−1) only at r = 2.
struct Ladder {
  int index = 0;  // b + (r−1)(a−1)
  Residue residue;
  std::vector<Cell> cells;
};

/// Nonempty ladders of an r-restricted partition, by increasing index.
std::vector<Ladder> ladders(const Partition& lambda, int r);

/// f_{i_L}^{(k_L)} ⋯ f_{i_1}^{(k_1)} ∅ over the ladders of λ, checked to be
/// λ plus terms indexed by partitions dominating λ.
FockVector a_vector(const Partition& lambda, int r);

/// Divided power f_i^{(k)} x.
FockVector divided_power(const FockVector& x, Residue i, int k, const FockConfig& config);

struct CanonicalBasis {
  int n = 0;
  int r = 2;
  /// Restricted partitions, most dominant first.
  std::vector<Partition> labels;
  std::map<Partition, FockVector> a;
  std::map<Partition, FockVector> g;
};

/// G(λ) for every r-restricted partition of n. `order` may supply a linear
/// extension of dominance on all partitions of n (most dominant first);
/// otherwise the default extension is used.
CanonicalBasis canonical_basis(int n, int r, const std::vector<Partition>& order = {});

/// Subtracts bar-symmetric multiples of known G(μ), μ ⊳ λ, until every
/// coefficient other than at λ lies in vZ[v].
FockVector straighten(const FockVector& x, const Partition& lambda, const CanonicalBasis& basis,
                      const std::vector<Partition>& order);

/// The unique bar-symmetric c with p − c ∈ vZ[v].
LaurentPoly bar_symmetric_part(const LaurentPoly& p);

/// Coordinates of x in the basis {A(μ)} (unitriangular solve). Throws
/// LltViolation if x leaves their span.
std::map<Partition, LaurentPoly> a_coordinates(const FockVector& x, const CanonicalBasis& basis,
                                               const std::vector<Partition>& order);

/// Bar-invariance of x as a module element: x lies in the span of the A(μ)
/// and its A-coordinates are bar-symmetric.
bool is_bar_invariant(const FockVector& x, const CanonicalBasis& basis, const std::vector<Partition>& order);

/// Rows and columns run from the least dominant shape upward, so the matrix
/// is lower unitriangular on the restricted rows.
struct DecompositionMatrix {
  std::vector<Partition> rows;     // all partitions of n
  std::vector<Partition> columns;  // r-restricted partitions
  std::vector<std::vector<long>> entries;  // entries[row][col]
};

/// Entry (λ, μ) = coefficient of λ in G(μ) at v = 1.
DecompositionMatrix decomposition_matrix(const CanonicalBasis& basis);
DecompositionMatrix decomposition_matrix(int n, int r);

/// Partitions of n in the default dominance linear extension.
std::vector<Partition> dominance_order(int n);

Multipartition as_multipartition(const Partition& p);

}  // namespace cyclohecke
