#include "doctest.h"

#include <set>

#include "cyclohecke/canon.hpp"
#include "cyclohecke/specht.hpp"

using namespace cyclohecke;

namespace {

Multipartition mp(const Partition& p) { return as_multipartition(p); }
LaurentPoly v(int k) { return LaurentPoly::v_power(k); }
FockVector basis_vec(const Partition& p) { return FockVector::basis(mp(p)); }

// Kahn's algorithm preferring the lexicographically smallest available shape.
std::vector<Partition> second_extension(int n) {
  std::vector<Partition> left = partitions_of(n), out;
  while (!left.empty()) {
    std::vector<Partition> maximal;
    for (const auto& a : left) {
      bool dominated = false;
      for (const auto& b : left) dominated = dominated || dominance_gt(mp(b), mp(a));
      if (!dominated) maximal.push_back(a);
    }
    const Partition pick = *std::min_element(maximal.begin(), maximal.end());
    out.push_back(pick);
    left.erase(std::find(left.begin(), left.end(), pick));
  }
  return out;
}

}  // namespace

TEST_CASE("ladders") {
  auto l = ladders(Partition({1}), 2);
  REQUIRE(l.size() == 1);
  CHECK(l[0].residue == Residue{0});
  l = ladders(Partition({1, 1}), 2);
  REQUIRE(l.size() == 2);
  CHECK(l[0].cells == std::vector<Cell>{{1, 1, 1}});
  CHECK(l[1].cells == std::vector<Cell>{{1, 2, 1}});
  CHECK(l[1].residue == Residue{1});
  l = ladders(Partition({2, 1}), 2);
  REQUIRE(l.size() == 2);
  CHECK(l[1].cells.size() == 2);
  CHECK(l[1].index == 2);
  CHECK_THROWS_AS(ladders(Partition({2}), 2), std::invalid_argument);
  // Cells of one ladder are (a, b), (a − 1, b + r − 1), …
  l = ladders(Partition({2, 1}), 3);
  REQUIRE(l.size() == 3);
  CHECK(l[1].cells == std::vector<Cell>{{1, 1, 2}});
  CHECK(l[2].cells == std::vector<Cell>{{1, 2, 1}});
  l = ladders(Partition({3, 1}), 3);
  CHECK(l[2].cells == std::vector<Cell>{{1, 1, 3}, {1, 2, 1}});
  for (int r = 2; r <= 4; ++r) {
    for (int n = 0; n <= 7; ++n) {
      for (const auto& p : partitions_of(n)) {
        if (!p.is_restricted(r)) continue;
        const auto cfg = FockConfig::make(Modulus::finite(r), {0});
        for (const auto& ladder : ladders(p, r)) {
          for (const auto& c : ladder.cells) CHECK(residue(c, cfg) == ladder.residue);
        }
      }
    }
  }
}

TEST_CASE("A vectors") {
  CHECK(a_vector(Partition({2, 1}), 3) == basis_vec(Partition({2, 1})) + v(1) * basis_vec(Partition({3})));
  for (int r = 2; r <= 5; ++r) {
    for (int n = 0; n <= 7; ++n) {
      for (const auto& p : partitions_of(n)) {
        if (p.is_restricted(r)) CHECK_NOTHROW(a_vector(p, r));
      }
    }
  }
  CHECK(a_vector(Partition(), 2) == basis_vec(Partition()));
  CHECK(a_vector(Partition({1}), 2) == basis_vec(Partition({1})));
  CHECK(a_vector(Partition({1, 1}), 2) == basis_vec(Partition({1, 1})) + v(1) * basis_vec(Partition({2})));
}

TEST_CASE("canonical basis examples") {
  const auto b0 = canonical_basis(0, 2);
  CHECK(b0.g.at(Partition()) == basis_vec(Partition()));
  const auto b2 = canonical_basis(2, 2);
  CHECK(b2.g.at(Partition({1, 1})) == basis_vec(Partition({1, 1})) + v(1) * basis_vec(Partition({2})));
  for (int n = 0; n <= 4; ++n) {
    const auto b = canonical_basis(n, std::max(2, n + 1));
    for (const auto& p : partitions_of(n)) CHECK(b.g.at(p) == basis_vec(p));
  }
  // At v = 1 these are the columns of the 2-modular decomposition matrix of
  // S_4 under conjugate labels.
  const auto b4 = canonical_basis(4, 2);
  CHECK(b4.g.at(Partition({2, 1, 1})) ==
        basis_vec(Partition({2, 1, 1})) + v(1) * basis_vec(Partition({2, 2})) + v(2) * basis_vec(Partition({3, 1})));
  CHECK(b4.g.at(Partition({1, 1, 1, 1})) == basis_vec(Partition({1, 1, 1, 1})) + v(1) * basis_vec(Partition({2, 1, 1})) +
                                                v(1) * basis_vec(Partition({3, 1})) + v(2) * basis_vec(Partition({4})));
}

TEST_CASE("bar_symmetric_part") {
  const LaurentPoly p = LaurentPoly::monomial(3, -2) + LaurentPoly(2) + v(1) + LaurentPoly::monomial(5, 4);
  const LaurentPoly c = bar_symmetric_part(p);
  CHECK(c.is_bar_invariant());
  CHECK((p - c).in_v_z_v());
}

TEST_CASE("LLT invariants") {
  for (int r : {2, 3}) {
    for (int n = 0; n <= 6; ++n) {
      const auto order = dominance_order(n);
      const auto b = canonical_basis(n, r);
      for (const auto& lambda : b.labels) {
        const auto& g = b.g.at(lambda);
        CHECK(g.coefficient(mp(lambda)) == LaurentPoly(1));
        for (const auto& [mu, c] : g.terms()) {
          if (mu == mp(lambda)) continue;
          CHECK(dominance_gt(mu, mp(lambda)));
          CHECK(c.in_v_z_v());
          for (const auto& [k, coeff] : c.terms()) CHECK(coeff > 0);
        }
        CHECK(is_bar_invariant(g, b, order));
        CHECK(is_bar_invariant(b.a.at(lambda), b, order));
        CHECK(straighten(g, lambda, b, order) == g);
      }
    }
  }
}

TEST_CASE("module bar involution detects non-invariant vectors") {
  const auto b = canonical_basis(2, 2);
  const auto order = dominance_order(2);
  CHECK(!is_bar_invariant(basis_vec(Partition({1, 1})), b, order));
  const FockVector g = b.g.at(Partition({1, 1}));
  CHECK(!is_bar_invariant(v(1) * g, b, order));
  CHECK(is_bar_invariant((v(1) + v(-1)) * g, b, order));
}

TEST_CASE("independence of the dominance extension") {
  for (int r : {2, 3}) {
    for (int n = 0; n <= 5; ++n) {
      const auto a = canonical_basis(n, r);
      const auto b = canonical_basis(n, r, second_extension(n));
      CHECK(a.g == b.g);
    }
  }
}

TEST_CASE("decomposition matrices") {
  const auto d2 = decomposition_matrix(2, 2);
  REQUIRE(d2.rows == std::vector<Partition>{Partition({1, 1}), Partition({2})});
  REQUIRE(d2.columns == std::vector<Partition>{Partition({1, 1})});
  CHECK(d2.entries == std::vector<std::vector<long>>{{1}, {1}});
  for (int n = 0; n <= 5; ++n) {
    const auto d = decomposition_matrix(n, std::max(2, n + 1));
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      for (std::size_t j = 0; j < d.columns.size(); ++j) CHECK(d.entries[i][j] == (d.rows[i] == d.columns[j] ? 1 : 0));
    }
  }
}

TEST_CASE("dimension identity against Specht modules") {
  for (int r : {2, 3}) {
    for (int n = 0; n <= 4; ++n) {
      const Scalar q = root_of_unity(r, 1);
      const CellularTable table(make_algebra({1, n, q, {Scalar(1).promoted(r)}}));
      const auto d = decomposition_matrix(n, r);
      std::map<Partition, int> dim;
      for (const auto& lam : table.shapes()) {
        const int k = dim_simple(table, lam);
        CHECK((k > 0) == lam.component(1).is_restricted(r));
        dim[lam.component(1)] = k;
      }
      for (std::size_t i = 0; i < d.rows.size(); ++i) {
        long total = 0;
        for (std::size_t j = 0; j < d.columns.size(); ++j) total += d.entries[i][j] * dim[d.columns[j]];
        CHECK(total == static_cast<long>(standard_tableaux(mp(d.rows[i])).size()));
      }
    }
  }
}
