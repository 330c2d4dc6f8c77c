#include "doctest.h"

#include <random>

#include "cyclohecke/fock.hpp"

using namespace cyclohecke;

namespace {

Multipartition mp(const char* text) { return parse_multipartition(text); }
FockConfig cfg(int r, std::vector<long> gamma) {
  return FockConfig::make(r ? Modulus::finite(r) : Modulus::infinite(), gamma);
}
LaurentPoly v(int k) { return LaurentPoly::v_power(k); }

// [k] with [−k] = −[k] and [0] = 0.
LaurentPoly signed_quantum(int k) {
  if (k == 0) return {};
  return k > 0 ? quantum_integer(k) : -quantum_integer(-k);
}

std::vector<Multipartition> all_up_to(int level, int n) {
  std::vector<Multipartition> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& x : multipartitions_of(level, k)) out.push_back(x);
  }
  return out;
}

const std::vector<FockConfig>& grid() {
  static const std::vector<FockConfig> g{cfg(2, {0}), cfg(3, {0}), cfg(2, {0, 0}), cfg(2, {0, 1})};
  return g;
}

}  // namespace

TEST_CASE("f_op examples") {
  const auto c1 = cfg(2, {0});
  CHECK(f_op(FockVector::basis(Multipartition::empty(1)), Residue{0}, c1) == FockVector::basis(mp("[[1]]")));
  const auto c2 = cfg(2, {0, 0});
  CHECK(f_op(FockVector::basis(Multipartition::empty(2)), Residue{0}, c2) ==
        v(1) * FockVector::basis(mp("[[1],[]]")) + FockVector::basis(mp("[[],[1]]")));
  CHECK(f_op(FockVector::basis(mp("[[1]]")), Residue{1}, c1) ==
        FockVector::basis(mp("[[1,1]]")) + v(1) * FockVector::basis(mp("[[2]]")));
}

TEST_CASE("e_op inverts single additions up to powers of v") {
  const auto c1 = cfg(2, {0});
  CHECK(e_op(FockVector::basis(mp("[[1]]")), Residue{0}, c1) == FockVector::basis(Multipartition::empty(1)));
  CHECK(e_op(FockVector::basis(Multipartition::empty(1)), Residue{0}, c1).is_zero());
  const auto c2 = cfg(2, {0, 0});
  CHECK(e_op(FockVector::basis(mp("[[],[1]]")), Residue{0}, c2) == v(-1) * FockVector::basis(Multipartition::empty(2)));
}

TEST_CASE("weight examples") {
  const auto c2 = cfg(3, {0, 0});
  auto w = weight(Multipartition::empty(2), c2);
  CHECK(w.n_i.at(Residue{0}) == 2);
  CHECK(w.n_d == 0);
  w = weight(mp("[[1]]"), cfg(2, {0}));
  CHECK(w.n_i.at(Residue{0}) == -1);
  CHECK(w.n_i.at(Residue{1}) == 2);
  CHECK(weight(mp("[[2,1]]"), cfg(3, {0})).n_d == 1);
}

TEST_CASE("RA words and good nodes") {
  const auto c1 = cfg(2, {0});
  CHECK(ra_string(ra_word(Multipartition::empty(1), Residue{0}, c1)) == "A");
  CHECK(good_addable(Multipartition::empty(1), Residue{0}, c1) == Cell{1, 1, 1});
  CHECK(!good_removable(Multipartition::empty(1), Residue{0}, c1));
  CHECK(ra_string(ra_word(mp("[[1]]"), Residue{1}, c1)) == "AA");
  CHECK(good_addable(mp("[[1]]"), Residue{1}, c1) == Cell{1, 2, 1});
  // (2,1) is a 2-core: three addable 0-nodes, two removable 1-nodes.
  CHECK(ra_string(ra_word(mp("[[2,1]]"), Residue{0}, c1)) == "AAA");
  CHECK(ra_string(ra_word(mp("[[2,1]]"), Residue{1}, c1)) == "RR");
  CHECK(!good_removable(mp("[[2,1]]"), Residue{0}, c1));
  CHECK(good_removable(mp("[[2,1]]"), Residue{1}, c1) == Cell{1, 1, 2});
  // (2), i = 1: removable (1,2) then addable (2,1) cancel.
  CHECK(ra_string(ra_word(mp("[[2]]"), Residue{1}, c1)) == "RA");
  CHECK(ra_reduce(ra_word(mp("[[2]]"), Residue{1}, c1)).empty());
}

TEST_CASE("RA deletion is confluent") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RaLetter> word;
    const int len = static_cast<int>(rng() % 10);
    for (int k = 0; k < len; ++k) word.push_back({rng() % 2 ? 'A' : 'R', Cell{1, k + 1, 1}});
    std::vector<RaLetter> w = word;
    while (true) {
      std::vector<std::size_t> spots;
      for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k].kind == 'R' && w[k + 1].kind == 'A') spots.push_back(k);
      }
      if (spots.empty()) break;
      const std::size_t k = spots[rng() % spots.size()];
      w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
    }
    const auto expected = ra_reduce(word);
    REQUIRE(w.size() == expected.size());
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(w[k].cell == expected[k].cell);
  }
}

TEST_CASE("crystal operator examples") {
  const auto c2 = cfg(2, {0, 0});
  CHECK(crystal_f(Multipartition::empty(2), Residue{0}, c2) == mp("[[],[1]]"));
  CHECK(crystal_f(mp("[[1]]"), Residue{1}, cfg(2, {0})) == mp("[[1,1]]"));
  CHECK(!crystal_f(Multipartition::empty(2), Residue{1}, c2));
}

TEST_CASE("crystal axioms") {
  for (const auto& c : grid()) {
    for (const auto& lambda : all_up_to(c.level(), 5)) {
      for (const Residue& i : active_residues(lambda, c)) {
        if (auto mu = crystal_f(lambda, i, c)) CHECK(crystal_e(*mu, i, c) == lambda);
        if (auto mu = crystal_e(lambda, i, c)) CHECK(crystal_f(*mu, i, c) == lambda);
        // The i-string through λ has length ε + φ + 1 where ε, φ count
        // surviving R and A letters.
        int eps = 0, phi = 0;
        for (auto x = crystal_e(lambda, i, c); x; x = crystal_e(*x, i, c)) ++eps;
        for (auto x = crystal_f(lambda, i, c); x && phi < 20; x = crystal_f(*x, i, c)) ++phi;
        const std::string s = ra_string(ra_reduce(ra_word(lambda, i, c)));
        CHECK(eps == static_cast<int>(std::count(s.begin(), s.end(), 'R')));
        CHECK(phi == static_cast<int>(std::count(s.begin(), s.end(), 'A')));
      }
    }
  }
}

TEST_CASE("Kleshchev examples and level-one restrictedness") {
  const auto c1 = cfg(2, {0});
  CHECK(is_kleshchev(Multipartition::empty(1), c1));
  CHECK(is_kleshchev(mp("[[1,1]]"), c1));
  CHECK(!is_kleshchev(mp("[[2]]"), c1));
  for (int r : {2, 3, 4}) {
    const auto c = cfg(r, {0});
    for (int n = 0; n <= 8; ++n) {
      for (const auto& p : partitions_of(n)) {
        CHECK(is_kleshchev(Multipartition({p}), c) == p.is_restricted(r));
      }
    }
  }
}

TEST_CASE("both Kleshchev definitions agree") {
  for (const auto& c : grid()) {
    for (const auto& lambda : all_up_to(c.level(), 5)) {
      CHECK(is_kleshchev(lambda, c) == is_kleshchev_by_tableau(lambda, c));
    }
  }
  const auto inf = cfg(0, {0, 3});
  for (const auto& lambda : all_up_to(2, 4)) CHECK(is_kleshchev(lambda, inf) == is_kleshchev_by_tableau(lambda, inf));
}

TEST_CASE("enumeration and series") {
  const auto c1 = cfg(2, {0});
  CHECK(enumerate_kleshchev(c1, 0) == std::vector<Multipartition>{Multipartition::empty(1)});
  CHECK(enumerate_kleshchev(c1, 4) == std::vector<Multipartition>{mp("[[1,1,1,1]]"), mp("[[2,1,1]]")});
  CHECK(kleshchev_series(c1, 6) == std::vector<long>{1, 1, 1, 2, 2, 3, 4});
  // r = ∞ at level one: every partition is Kleshchev.
  CHECK(kleshchev_series(cfg(0, {0}), 6) == std::vector<long>{1, 1, 2, 3, 5, 7, 11});
  for (const auto& c : grid()) {
    const auto series = kleshchev_series(c, 5);
    for (int n = 0; n <= 5; ++n) {
      long count = 0;
      for (const auto& lambda : multipartitions_of(c.level(), n)) count += is_kleshchev(lambda, c);
      CHECK(series[n] == count);
    }
  }
}

TEST_CASE("classical i-restriction") {
  const auto c1 = cfg(2, {0});
  CHECK(classical_i_res(Multipartition::empty(1), Residue{0}, c1).empty());
  CHECK(classical_i_res(mp("[[2]]"), Residue{1}, c1) == std::map<Multipartition, long>{{mp("[[1]]"), 1}});
  for (const auto& c : grid()) {
    for (const auto& lambda : all_up_to(c.level(), 4)) {
      long total = 0;
      for (const Residue& i : active_residues(lambda, c)) {
        const auto res = classical_i_res(lambda, i, c);
        for (const auto& [mu, k] : res) total += k;
        const auto e = e_op(FockVector::basis(lambda), i, c).at_one();
        CHECK(e.size() == res.size());
        for (const auto& [mu, k] : res) CHECK(e.at(mu) == k);
      }
      CHECK(total == static_cast<long>(lambda.removable_cells().size()));
    }
  }
}

TEST_CASE("f_op at v = 1 counts addable nodes") {
  for (const auto& c : grid()) {
    for (const auto& lambda : all_up_to(c.level(), 4)) {
      for (const Residue& i : active_residues(lambda, c)) {
        const auto f = f_op(FockVector::basis(lambda), i, c).at_one();
        CHECK(f.size() == node_sets(lambda, i, c).addable.size());
        for (const auto& [mu, k] : f) CHECK(k == 1);
      }
    }
  }
}

TEST_CASE("commutators of e and f") {
  for (const auto& c : grid()) {
    for (const auto& lambda : all_up_to(c.level(), 5)) {
      const FockVector x = FockVector::basis(lambda);
      const auto residues = c.residues_for(0);
      for (const Residue& i : residues) {
        for (const Residue& j : residues) {
          const FockVector comm = e_op(f_op(x, j, c), i, c) - f_op(e_op(x, i, c), j, c);
          if (i != j) {
            CHECK(comm.is_zero());
          } else {
            const auto w = weight(lambda, c);
            const auto it = w.n_i.find(i);
            CHECK(comm == signed_quantum(it == w.n_i.end() ? 0 : it->second) * x);
          }
        }
      }
    }
  }
}

TEST_CASE("crystal DOT output") {
  const std::string dot = crystal_dot(cfg(2, {0}), 2);
  CHECK(dot.find("\"[[]]\" -> \"[[1]]\" [label=\"0\"]") != std::string::npos);
  CHECK(dot.find("\"[[1]]\" -> \"[[1,1]]\" [label=\"1\"]") != std::string::npos);
}
