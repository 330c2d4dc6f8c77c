// Invariant suites shared by the `selftest` subcommand and the acceptance
// runner. Each suite counts its checks and keeps the first failure message.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclohecke/heckealg.hpp"
#include "cyclohecke/shapes.hpp"

namespace cyclohecke {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void check(bool ok, const std::string& what);
};

/// Defining relations on every basis element, right-regular representation.
/// Runs q = ζ_12^a for each a in `q_exponents`, v sampled from `seed`.
SuiteResult relation_suite(int max_m, int max_n, const std::vector<int>& q_exponents, std::uint64_t seed);

/// Dimension m^n·n!, Σ(#std λ)² and invertibility of the cellular matrix.
/// Tables larger than `exact_limit` are certified modulo a prime first.
SuiteResult basis_suite(int max_m, int max_n, std::uint64_t seed, std::size_t exact_limit = 200);

/// trace(xy) = trace(yx) over all ordered pairs of basis elements.
SuiteResult trace_suite(int max_m, int max_n, std::uint64_t seed);

/// The fixed parameter grid used for semisimplicity coherence.
std::vector<HeckeParams> semisimplicity_grid();
/// is_semisimple agrees with nonsingularity of every Gram matrix.
SuiteResult semisimplicity_suite(const std::vector<HeckeParams>& grid, int threads = 1);

/// (m, γ, r) with q = ζ_r and v_i = q^{γ_i}.
struct KleshchevCase {
  int m = 1;
  std::vector<long> gamma;
  int r = 2;
};
std::vector<KleshchevCase> kleshchev_grid();
HeckeParams params_for(const KleshchevCase& c, int n);

/// rank(Gram λ) > 0 exactly for Kleshchev λ, all |λ| ≤ max_n.
SuiteResult simple_heads_suite(const std::vector<KleshchevCase>& cases, int max_n, int threads = 1);

/// Unitriangularity, bar invariance, identity matrices for r > n, and the
/// dimension identity against Specht modules for r = 2, n ≤ dim_max_n.
SuiteResult llt_suite(const std::vector<int>& moduli, int max_n, int dim_max_n, int threads = 1);

/// One row of the dimension identity Σ_μ d_{λμ}(1) dim D^μ = #std(λ).
struct DimensionRow {
  Partition lambda;
  long lhs = 0;
  long rhs = 0;
};
/// Level one, q = ζ_r.
std::vector<DimensionRow> dimension_identity(int n, int r, int threads = 1);

/// Crystal inverses on the Kleshchev grid (|λ| ≤ max_n), level-one Kleshchev
/// counts against restricted counts (n ≤ level_one_n, r in `moduli`), and
/// agreement of both Kleshchev definitions.
SuiteResult crystal_suite(const std::vector<KleshchevCase>& cases, int max_n, const std::vector<int>& moduli,
                          int level_one_n);

/// (2,2) counts, aperiodic = total below r ≤ max_r, and the brute-force
/// shift oracle for sizes ≤ oracle_n, r ≤ oracle_r.
SuiteResult multiseg_suite(int max_r, int oracle_n, int oracle_r);

}  // namespace cyclohecke
