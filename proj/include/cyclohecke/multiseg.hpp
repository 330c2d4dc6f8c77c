// Segments and multisegments of residues, aperiodicity, and counts of
// aperiodic multisegments (simple modules of affine Hecke algebras).
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cyclohecke/shapes.hpp"

namespace cyclohecke {

/// start, start+1, …, start+length−1 (residues mod r, or integers).
struct Segment {
  long start = 0;
  int length = 1;
  auto operator<=>(const Segment&) const = default;
};

/// A multiset of segments, stored sorted.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  int size() const;
  /// "[[0;1],[1;1]]".
  std::string to_string() const;
  auto operator<=>(const Multisegment&) const = default;

 private:
  std::vector<Segment> segments_;
};

/// No length class contains segments starting at every residue mod r.
/// Always true for r = ∞.
bool is_aperiodic(const Multisegment& ms, const Modulus& r);

/// All multisegments of total size n. Starts range over Z/r, or over
/// [0, window) when r = ∞.
std::vector<Multisegment> enumerate_multisegments(int n, const Modulus& r, int window = 0);

/// Counts for sizes 0..max_n from generating functions; `window` as above.
std::vector<mpz_class> multisegment_series(int max_n, const Modulus& r, int window = 0);
std::vector<mpz_class> aperiodic_series(int max_n, const Modulus& r, int window = 0);

mpz_class count_multisegments(int n, const Modulus& r, int window = 0);
mpz_class count_aperiodic(int n, const Modulus& r, int window = 0);

/// Families over `labels` points with total size n, aperiodic at every point.
mpz_class count_family(int n, const Modulus& r, int labels, int window = 0);

}  // namespace cyclohecke
