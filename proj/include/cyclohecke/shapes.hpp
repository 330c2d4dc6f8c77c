// Partitions, multipartitions, cells and residues, tableaux, permutations and
// the dominance order.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclohecke {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Length of row a (1-based); 0 past the last row.
  int row(int a) const { return a >= 1 && a <= length() ? parts_[a - 1] : 0; }

  /// True when every difference λ_a − λ_{a+1} (including the last part) is below r.
  bool is_restricted(int r) const;

  std::string to_string() const;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, lexicographically decreasing ((n) first).
std::vector<Partition> partitions_of(int n);

/// A cell of a multipartition. `component` uses the 1-based component labels
/// of (λ^(m), …, λ^(1)), so component m is stored first.
struct Cell {
  int component = 1;
  int row = 1;
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

/// m-tuple (λ^(m), …, λ^(1)). Storage index 0 holds λ^(m).
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition empty(int level);

  int level() const { return static_cast<int>(components_.size()); }
  int size() const;
  /// λ^(c) for 1 ≤ c ≤ m.
  const Partition& component(int c) const;
  /// Components in storage order (λ^(m) first).
  const std::vector<Partition>& components() const { return components_; }

  bool contains(const Cell& x) const;
  /// All cells in reading order: λ^(m) first, rows top to bottom, left to right.
  std::vector<Cell> cells() const;
  Multipartition with_cell_added(const Cell& x) const;
  Multipartition with_cell_removed(const Cell& x) const;

  /// All cells whose addition leaves a multipartition, in reading order.
  std::vector<Cell> addable_cells() const;
  /// All cells whose removal leaves a multipartition, in reading order.
  std::vector<Cell> removable_cells() const;

  /// "[[3,1],[2]]" with λ^(m) first.
  std::string to_string() const;
  auto operator<=>(const Multipartition&) const = default;

 private:
  std::vector<Partition> components_;
};

Multipartition parse_multipartition(std::string_view text);

/// Reading-order key for a cell of a level-m multipartition: λ^(m) top row
/// comes first, λ^(1) bottom row last.
std::pair<int, int> reading_key(const Cell& x, int level);

/// All multipartitions of level m and size n, lexicographic in storage order.
std::vector<Multipartition> multipartitions_of(int level, int n);

// ---------------------------------------------------------------------------
// Residues

/// Modulus r of the residue ring; r = ∞ keeps residues in Z.
class Modulus {
 public:
  static Modulus finite(int r);
  static Modulus infinite() { return Modulus(); }
  bool is_finite() const { return value_ != 0; }
  /// Only meaningful when finite.
  int value() const { return value_; }
  long reduce(long x) const;
  std::string to_string() const;
  auto operator<=>(const Modulus&) const = default;

 private:
  int value_ = 0;
};

Modulus parse_modulus(std::string_view text);

/// Element of Z/rZ, or of Z when r = ∞. Always stored reduced.
struct Residue {
  long value = 0;
  auto operator<=>(const Residue&) const = default;
};

/// Residue data (γ_1, …, γ_m; r). gamma[k-1] = γ_k.
struct ResidueConfig {
  Modulus modulus;
  std::vector<Residue> gamma;

  static ResidueConfig make(Modulus modulus, const std::vector<long>& gamma);
  int level() const { return static_cast<int>(gamma.size()); }
  Residue reduce(long x) const { return Residue{modulus.reduce(x)}; }
  /// Finite residues 0..r-1, or for r = ∞ the residues occurring in a window.
  std::vector<Residue> residues_for(int n) const;
};

/// −row + col + γ_component, reduced.
Residue residue(const Cell& x, const ResidueConfig& config);

struct NodeSets {
  std::vector<Cell> addable;
  std::vector<Cell> removable;
};

/// Addable and removable i-nodes in reading order.
NodeSets node_sets(const Multipartition& lambda, Residue i, const ResidueConfig& config);

struct NodeStatistics {
  int above = 0;   // N_i^a(x)
  int below = 0;   // N_i^b(x)
  int weight = 0;  // N_i(λ)
  int zero_nodes = 0;  // N_d(λ)
};

/// True when cell y lies strictly above x (earlier component, or same
/// component and smaller row).
bool is_above(const Cell& y, const Cell& x);
bool is_below(const Cell& y, const Cell& x);

/// The four statistics used by the deformed Fock space action, for an addable
/// or removable position x of λ.
NodeStatistics n_statistics(const Multipartition& lambda, const Cell& x, Residue i, const ResidueConfig& config);

// ---------------------------------------------------------------------------
// Permutations

/// Permutation of {1..n} in one-line notation. Products compose left to right:
/// (u * v)(k) = v(u(k)), so a word s_{i1} s_{i2} ... applies s_{i1} first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// The simple transposition s_i = (i, i+1), 1 ≤ i < n.
  static Permutation simple(int n, int i);
  static Permutation from_word(int n, const std::vector<int>& word);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;

  /// Lehmer-code rank in 0..n!-1; identity has rank 0.
  std::uint32_t rank() const;
  static Permutation unrank(int n, std::uint32_t rank);

  friend Permutation operator*(const Permutation& u, const Permutation& v);
  auto operator<=>(const Permutation&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// A reduced word [i1, …, il] with w = s_{i1} * … * s_{il} and l = length(w).
std::vector<int> reduced_word(const Permutation& w);

/// n! for small n.
std::uint32_t factorial(int n);

// ---------------------------------------------------------------------------
// Tableaux

/// A filling of a multipartition by 1..n, stored row-wise per component in
/// storage order.
class StandardTableau {
 public:
  StandardTableau(Multipartition shape, std::vector<std::vector<std::vector<int>>> entries);

  const Multipartition& shape() const { return shape_; }
  int entry(const Cell& x) const;
  /// The cell holding k.
  Cell cell_of(int k) const;
  const std::vector<std::vector<std::vector<int>>>& entries() const { return entries_; }
  /// Subtableau holding 1..k.
  StandardTableau restricted_to(int k) const;

  std::string to_string() const;
  auto operator<=>(const StandardTableau&) const = default;

 private:
  Multipartition shape_;
  std::vector<std::vector<std::vector<int>>> entries_;
};

/// All standard tableaux of shape λ, in a fixed order.
std::vector<StandardTableau> standard_tableaux(const Multipartition& lambda);

/// Fills 1..n row by row, λ^(m) first.
StandardTableau canonical_tableau(const Multipartition& lambda);

/// d(t): k ↦ entry of t in the cell where the canonical tableau holds k.
Permutation tableau_permutation(const StandardTableau& t);

/// Permutations preserving the row sets of the canonical tableau of λ.
std::vector<Permutation> row_stabilizer(const Multipartition& lambda);

// ---------------------------------------------------------------------------
// Dominance

/// λ ⊵ μ. Throws std::invalid_argument on level or size mismatch.
bool dominance_geq(const Multipartition& lambda, const Multipartition& mu);
/// λ ⊳ μ (dominates and differs).
bool dominance_gt(const Multipartition& lambda, const Multipartition& mu);

/// A linear extension of dominance with maximal elements first; ties between
/// incomparable shapes go to the lexicographically larger shape.
std::vector<Multipartition> dominance_linear_extension(std::vector<Multipartition> shapes);

/// (a_1, …, a_l): a_k = n − |λ^(1)| − … − |λ^(k)|, positive terms only.
std::vector<int> a_sequence(const Multipartition& lambda);

}  // namespace cyclohecke
