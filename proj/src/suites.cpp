#include "cyclohecke/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cyclohecke/canon.hpp"
#include "cyclohecke/fock.hpp"
#include "cyclohecke/multiseg.hpp"
#include "cyclohecke/specht.hpp"

namespace cyclohecke {

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  if (failures++ == 0) first_failure = what;
}

namespace {

std::string params_label(const HeckeParams& p) {
  std::string s = "m=" + std::to_string(p.m) + " n=" + std::to_string(p.n) + " q=" + p.q.to_string() + " v=(";
  for (std::size_t k = 0; k < p.v.size(); ++k) s += (k ? "," : "") + p.v[k].to_string();
  return s + ")";
}

HeckeParams sampled_params(int m, int n, int q_exponent, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> scale(1, 3), angle(0, 11);
  HeckeParams p{m, n, root_of_unity(12, q_exponent), {}};
  for (int k = 0; k < m; ++k) p.v.push_back(Scalar(scale(rng)) * root_of_unity(12, angle(rng)));
  return p;
}

HeckeElement right_word(HeckeElement x, const std::vector<int>& gens) {
  for (int j : gens) x = right_generator(x, j);
  return x;
}

std::vector<Multipartition> all_up_to(int level, int n) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& lam : multipartitions_of(level, k)) out.push_back(std::move(lam));
  }
  return out;
}

ResidueConfig config_for(const KleshchevCase& c) { return ResidueConfig::make(Modulus::finite(c.r), c.gamma); }

}  // namespace

SuiteResult relation_suite(int max_m, int max_n, const std::vector<int>& q_exponents, std::uint64_t seed) {
  SuiteResult res{"relations"};
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      for (int a : q_exponents) {
        const HeckeParams p = sampled_params(m, n, a, rng);
        const auto A = make_algebra(p);
        const std::string where = params_label(p);
        for (BasisId b = 0; b < A->dimension(); ++b) {
          const HeckeElement x(A, {{b, A->one()}});
          if (n >= 1) {
            HeckeElement y = x;
            for (const auto& vk : p.v) y = right_generator(y, 1) - vk * y;
            res.check(y.is_zero(), "(a1-v1)...(a1-vm) at " + where);
          }
          for (int i = 2; i <= n; ++i) {
            const HeckeElement ai = right_generator(x, i);
            res.check(right_generator(ai, i) == (p.q - A->one()) * ai + p.q * x, "quadratic relation at " + where);
          }
          if (n >= 2) res.check(right_word(x, {1, 2, 1, 2}) == right_word(x, {2, 1, 2, 1}), "a1a2a1a2 at " + where);
          for (int i = 3; i <= n; ++i) {
            res.check(right_word(x, {i, i - 1, i}) == right_word(x, {i - 1, i, i - 1}), "braid relation at " + where);
          }
          for (int i = 1; i <= n; ++i) {
            for (int j = i + 2; j <= n; ++j) {
              res.check(right_word(x, {i, j}) == right_word(x, {j, i}), "commuting generators at " + where);
            }
          }
        }
      }
    }
  }
  return res;
}

SuiteResult basis_suite(int max_m, int max_n, std::uint64_t seed, std::size_t exact_limit) {
  SuiteResult res{"basis"};
  std::mt19937_64 rng(seed);
  const std::vector<int> exponents{1, 4, 6};
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      const HeckeParams p = sampled_params(m, n, exponents[static_cast<std::size_t>(m + n) % 3], rng);
      const auto A = make_algebra(p);
      const std::string where = params_label(p);
      std::size_t expected = factorial(n);
      for (int k = 0; k < n; ++k) expected *= static_cast<std::size_t>(m);
      res.check(A->dimension() == expected, "dimension m^n n! at " + where);
      std::size_t squares = 0;
      for (const auto& lam : multipartitions_of(m, n)) {
        const std::size_t d = standard_tableaux(lam).size();
        squares += d * d;
      }
      res.check(squares == expected, "sum of squared tableau counts at " + where);
      const CellularTable table(A);
      res.check(table.size() == expected, "cellular basis size at " + where);
      const bool ok = (table.size() > exact_limit && table.invertible_mod_p()) || table.invertible();
      res.check(ok, "cellular matrix invertible at " + where);
    }
  }
  return res;
}

SuiteResult trace_suite(int max_m, int max_n, std::uint64_t seed) {
  SuiteResult res{"trace"};
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= max_m; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      const HeckeParams p = sampled_params(m, n, 1 + 3 * static_cast<int>(rng() % 2), rng);
      const auto A = make_algebra(p);
      std::vector<HeckeElement> basis;
      for (BasisId b = 0; b < A->dimension(); ++b) basis.emplace_back(A, SparseVector{{b, A->one()}});
      for (const auto& x : basis) {
        for (const auto& y : basis) res.check(trace(x * y) == trace(y * x), "trace(xy) = trace(yx) at " + params_label(p));
      }
    }
  }
  return res;
}

std::vector<HeckeParams> semisimplicity_grid() {
  const Scalar z3 = root_of_unity(3, 1), z4 = root_of_unity(4, 1);
  return {
      {1, 2, Scalar(-1), {Scalar(1)}},
      {2, 2, Scalar(2), {Scalar(1), Scalar(2)}},
      {2, 2, Scalar(2), {Scalar(1), Scalar(3)}},
      {1, 3, z3, {Scalar(1)}},
      {1, 3, Scalar(2), {Scalar(1)}},
      {2, 3, Scalar(-1), {Scalar(1), Scalar(-1)}},
      {2, 3, z4, {Scalar(1), Scalar(3)}},
      {2, 2, z3, {Scalar(1), z3.pow(2)}},
      {2, 1, Scalar(1), {Scalar(1), Scalar(1)}},
      {2, 2, Scalar(1), {Scalar(1), Scalar(-1)}},
      {3, 2, z3, {Scalar(1), z3, z3.pow(2)}},
  };
}

SuiteResult semisimplicity_suite(const std::vector<HeckeParams>& grid, int threads) {
  SuiteResult res{"semisimplicity"};
  for (const auto& p : grid) {
    const CellularTable table(make_algebra(p));
    const auto& shapes = table.shapes();
    std::vector<char> full(shapes.size(), 0), symmetric(shapes.size(), 0);
    parallel_for(shapes.size(), threads, [&](std::size_t k) {
      const auto g = gram(table, shapes[k]);
      symmetric[k] = is_symmetric<Scalar>(g);
      full[k] = rank<Scalar>(g) == g.rows();
    });
    const bool all_full = std::all_of(full.begin(), full.end(), [](char c) { return c != 0; });
    for (char s : symmetric) res.check(s != 0, "Gram symmetry at " + params_label(p));
    res.check(is_semisimple(p).semisimple == all_full, "semisimplicity vs Gram ranks at " + params_label(p));
  }
  return res;
}

std::vector<KleshchevCase> kleshchev_grid() { return {{1, {0}, 2}, {1, {0}, 3}, {2, {0, 0}, 2}, {2, {0, 1}, 2}}; }

HeckeParams params_for(const KleshchevCase& c, int n) {
  const Scalar q = root_of_unity(c.r, 1);
  HeckeParams p{c.m, n, q, {}};
  for (long g : c.gamma) p.v.push_back(q.pow(g));
  return p;
}

SuiteResult simple_heads_suite(const std::vector<KleshchevCase>& cases, int max_n, int threads) {
  SuiteResult res{"simple_heads"};
  for (const auto& c : cases) {
    const auto config = config_for(c);
    for (int n = 0; n <= max_n; ++n) {
      const HeckeParams p = params_for(c, n);
      const CellularTable table(make_algebra(p));
      const auto& shapes = table.shapes();
      std::vector<int> dims(shapes.size(), 0);
      parallel_for(shapes.size(), threads, [&](std::size_t k) { dims[k] = dim_simple(table, shapes[k]); });
      for (std::size_t k = 0; k < shapes.size(); ++k) {
        res.check((dims[k] > 0) == is_kleshchev(shapes[k], config),
                  "D^lambda nonzero iff Kleshchev for " + shapes[k].to_string() + " at " + params_label(p));
      }
    }
  }
  return res;
}

std::vector<DimensionRow> dimension_identity(int n, int r, int threads) {
  const Scalar q = root_of_unity(r, 1);
  const CellularTable table(make_algebra({1, n, q, {Scalar(1).promoted(r)}}));
  const auto& shapes = table.shapes();
  std::vector<int> dims(shapes.size(), 0);
  parallel_for(shapes.size(), threads, [&](std::size_t k) { dims[k] = dim_simple(table, shapes[k]); });
  std::map<Partition, long> dim;
  for (std::size_t k = 0; k < shapes.size(); ++k) dim[shapes[k].component(1)] = dims[k];
  const auto d = decomposition_matrix(n, r);
  std::vector<DimensionRow> rows;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    DimensionRow row{d.rows[i], 0, static_cast<long>(standard_tableaux(as_multipartition(d.rows[i])).size())};
    for (std::size_t j = 0; j < d.columns.size(); ++j) row.lhs += d.entries[i][j] * dim.at(d.columns[j]);
    rows.push_back(row);
  }
  return rows;
}

SuiteResult llt_suite(const std::vector<int>& moduli, int max_n, int dim_max_n, int threads) {
  SuiteResult res{"llt"};
  for (int r : moduli) {
    for (int n = 0; n <= max_n; ++n) {
      const std::string where = " at n=" + std::to_string(n) + " r=" + std::to_string(r);
      CanonicalBasis b;
      try {
        b = canonical_basis(n, r);
      } catch (const LltViolation& e) {
        res.check(false, std::string(e.what()) + where);
        continue;
      }
      const auto order = dominance_order(n);
      for (const auto& lambda : b.labels) {
        const auto lam = as_multipartition(lambda);
        const auto& a = b.a.at(lambda);
        bool tri = a.coefficient(lam) == LaurentPoly(1);
        for (const auto& [mu, c] : a.terms()) tri = tri && (mu == lam || dominance_gt(mu, lam));
        res.check(tri, "A(" + lambda.to_string() + ") unitriangular" + where);
        const auto& g = b.g.at(lambda);
        bool shape = g.coefficient(lam) == LaurentPoly(1);
        for (const auto& [mu, c] : g.terms()) {
          if (mu != lam) shape = shape && dominance_gt(mu, lam) && c.in_v_z_v();
        }
        res.check(shape, "G(" + lambda.to_string() + ") off-diagonal coefficients in vZ[v]" + where);
        res.check(is_bar_invariant(g, b, order), "G(" + lambda.to_string() + ") bar invariant" + where);
      }
      if (r > n) {
        const auto d = decomposition_matrix(b);
        bool identity = d.rows == d.columns;
        for (std::size_t i = 0; i < d.rows.size() && identity; ++i) {
          for (std::size_t j = 0; j < d.columns.size(); ++j) identity = identity && d.entries[i][j] == (i == j ? 1 : 0);
        }
        res.check(identity, "identity decomposition matrix" + where);
      }
      if (r == 2 && n <= dim_max_n) {
        for (const auto& row : dimension_identity(n, r, threads)) {
          res.check(row.lhs == row.rhs, "dimension identity for " + row.lambda.to_string() + where);
        }
      }
    }
  }
  return res;
}

SuiteResult crystal_suite(const std::vector<KleshchevCase>& cases, int max_n, const std::vector<int>& moduli,
                          int level_one_n) {
  SuiteResult res{"crystal"};
  for (const auto& c : cases) {
    const auto config = config_for(c);
    for (const auto& lambda : all_up_to(c.m, max_n)) {
      const std::string where = " at " + lambda.to_string();
      for (const Residue& i : active_residues(lambda, config)) {
        if (auto mu = crystal_f(lambda, i, config)) res.check(crystal_e(*mu, i, config) == lambda, "e(f(x)) = x" + where);
        if (auto mu = crystal_e(lambda, i, config)) res.check(crystal_f(*mu, i, config) == lambda, "f(e(x)) = x" + where);
      }
      res.check(is_kleshchev(lambda, config) == is_kleshchev_by_tableau(lambda, config),
                "Kleshchev definitions agree" + where);
    }
  }
  for (int r : moduli) {
    const auto config = ResidueConfig::make(Modulus::finite(r), {0});
    const auto series = kleshchev_series(config, level_one_n);
    for (int n = 0; n <= level_one_n; ++n) {
      long restricted = 0;
      for (const auto& p : partitions_of(n)) {
        restricted += p.is_restricted(r);
        res.check(is_kleshchev(Multipartition({p}), config) == p.is_restricted(r),
                  "Kleshchev iff restricted at " + p.to_string() + " r=" + std::to_string(r));
      }
      res.check(series[static_cast<std::size_t>(n)] == restricted,
                "Kleshchev count at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return res;
}

SuiteResult multiseg_suite(int max_r, int oracle_n, int oracle_r) {
  SuiteResult res{"multiseg"};
  const auto two = Modulus::finite(2);
  res.check(count_aperiodic(2, two) == 4, "count_aperiodic(2,2) = 4");
  res.check(count_multisegments(2, two) == 5, "5 multisegments of size 2 at r=2");
  res.check(enumerate_multisegments(2, two).size() == 5, "enumeration of size 2 at r=2");
  for (int r = 2; r <= max_r; ++r) {
    const auto mod = Modulus::finite(r);
    for (int n = 0; n < r; ++n) {
      const auto list = enumerate_multisegments(n, mod);
      const auto ap = std::count_if(list.begin(), list.end(), [&](const Multisegment& ms) { return is_aperiodic(ms, mod); });
      res.check(ap == static_cast<long>(list.size()) && count_aperiodic(n, mod) == count_multisegments(n, mod) &&
                    count_multisegments(n, mod) == static_cast<long>(list.size()),
                "aperiodic = total at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  for (int r = 2; r <= oracle_r; ++r) {
    const auto mod = Modulus::finite(r);
    for (int n = 0; n <= oracle_n; ++n) {
      for (const auto& ms : enumerate_multisegments(n, mod)) {
        // Periodic iff some segment has all r shifts among the segments.
        std::set<Segment> present(ms.segments().begin(), ms.segments().end());
        bool periodic = false;
        for (const auto& s : present) {
          bool all = true;
          for (int i = 0; i < r && all; ++i) all = present.count({(s.start + i) % r, s.length}) > 0;
          periodic = periodic || all;
        }
        res.check(is_aperiodic(ms, mod) == !periodic, "shift oracle at " + ms.to_string() + " r=" + std::to_string(r));
      }
    }
  }
  return res;
}

}  // namespace cyclohecke
