#include "doctest.h"

#include "cyclohecke/specht.hpp"

using namespace cyclohecke;

namespace {

Multipartition mp(const char* text) { return parse_multipartition(text); }

AlgebraPtr algebra(int m, int n, Scalar q, std::vector<Scalar> v) { return make_algebra(HeckeParams{m, n, q, v}); }

ScalarMatrix identity(int d, const Scalar& one) {
  ScalarMatrix I = ScalarMatrix::Constant(d, d, one - one);
  for (int i = 0; i < d; ++i) I(i, i) = one;
  return I;
}

bool is_zero_matrix(const ScalarMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

void check_module_relations(const SpechtModule& S, const HeckeParams& p) {
  const int d = S.dimension();
  const Scalar one = Scalar(1).promoted(p.conductor());
  const ScalarMatrix I = identity(d, one);
  const auto& A = S.generators;
  if (p.n == 0) return;
  ScalarMatrix prod = I;
  for (const auto& vk : p.v) prod = (prod * (A[0] - vk * I)).eval();
  CHECK(is_zero_matrix(prod));
  for (int i = 2; i <= p.n; ++i) CHECK(is_zero_matrix((A[i - 1] - p.q * I) * (A[i - 1] + I)));
  if (p.n >= 2) CHECK(A[0] * A[1] * A[0] * A[1] == A[1] * A[0] * A[1] * A[0]);
  for (int i = 3; i <= p.n; ++i) CHECK(A[i - 1] * A[i - 2] * A[i - 1] == A[i - 2] * A[i - 1] * A[i - 2]);
  for (int i = 1; i <= p.n; ++i) {
    for (int j = i + 2; j <= p.n; ++j) CHECK(A[i - 1] * A[j - 1] == A[j - 1] * A[i - 1]);
  }
}

std::size_t count_std_squares(int m, int n) {
  std::size_t total = 0;
  for (const auto& lam : multipartitions_of(m, n)) {
    const std::size_t k = standard_tableaux(lam).size();
    total += k * k;
  }
  return total;
}

}  // namespace

TEST_CASE("m_lambda examples") {
  const auto A1 = algebra(1, 1, Scalar(3), {Scalar(2)});
  CHECK(m_lambda(A1, mp("[[1]]")) == unit(A1));
  const auto A2 = algebra(2, 1, Scalar(3), {Scalar(2), Scalar(5)});
  CHECK(m_lambda(A2, mp("[[1],[]]")) == murphy(A2, 1) - Scalar(2) * unit(A2));
  CHECK(m_lambda(A2, mp("[[],[1]]")) == unit(A2));
  const auto A3 = algebra(1, 2, Scalar(3), {Scalar(2)});
  CHECK(m_lambda(A3, mp("[[2]]")) == unit(A3) + generator(A3, 2));
}

TEST_CASE("cellular count identity") {
  CHECK(count_std_squares(1, 2) == 2);
  CHECK(count_std_squares(2, 2) == 8);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      std::size_t dim = factorial(n);
      for (int k = 0; k < n; ++k) dim *= m;
      CHECK(count_std_squares(m, n) == dim);
    }
  }
}

TEST_CASE("cellular tables are invertible") {
  const Scalar z = root_of_unity(3, 1);
  for (const auto& p : {HeckeParams{1, 3, Scalar(-1), {Scalar(1)}}, HeckeParams{2, 2, Scalar(2), {Scalar(1), Scalar(2)}},
                        HeckeParams{2, 3, Scalar(-1), {Scalar(1), Scalar(-1)}}, HeckeParams{3, 2, z, {Scalar(1), z, z.pow(2)}},
                        HeckeParams{2, 1, Scalar(1), {Scalar(1), Scalar(1)}}}) {
    const CellularTable T(make_algebra(p));
    CHECK(T.size() == T.algebra()->dimension());
    CHECK(T.invertible());
    CHECK(T.invertible_mod_p());
  }
}

TEST_CASE("expand_cellular") {
  const auto A = algebra(1, 2, Scalar(3), {Scalar(1)});
  const CellularTable T(A);
  const int top = T.shape_index(mp("[[2]]"));
  auto c = expand_cellular(T.datum(top).m_lambda, T);
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == Scalar(k == T.label_index(top, 0, 0) ? 1 : 0));
  c = expand_cellular(HeckeElement(A), T);
  for (const auto& x : c) CHECK(x.is_zero());
  // 1 = α(1 + a_2) + β·1 with m_{(1,1)} = 1.
  c = expand_cellular(unit(A), T);
  CHECK(c[T.label_index(top, 0, 0)].is_zero());
  CHECK(c[T.label_index(T.shape_index(mp("[[1,1]]")), 0, 0)].is_one());
  // Reassembly on a generic element.
  const auto B = algebra(2, 2, Scalar(2), {Scalar(1), Scalar(3)});
  const CellularTable TB(B);
  const HeckeElement x = murphy(B, 2) * generator(B, 2) + Scalar(5) * generator(B, 1);
  const auto y = expand_cellular(x, TB);
  HeckeElement back(B);
  for (std::size_t k = 0; k < y.size(); ++k) {
    const auto& l = TB.labels()[k];
    back += y[k] * TB.datum(l.shape).element(l.s, l.t);
  }
  CHECK(back == x);
}

TEST_CASE("Specht modules") {
  const Scalar q(3);
  const auto A = algebra(1, 2, q, {Scalar(1)});
  const CellularTable T(A);
  const auto S = specht_module(T, mp("[[2]]"));
  REQUIRE(S.dimension() == 1);
  CHECK(S.generators[1](0, 0) == q);
  const auto S11 = specht_module(T, mp("[[1,1]]"));
  CHECK(S11.generators[1](0, 0) == Scalar(-1));
}

TEST_CASE("Specht generator matrices satisfy the relations") {
  const Scalar z3 = root_of_unity(3, 1);
  for (const auto& p : {HeckeParams{2, 3, Scalar(2), {Scalar(1), Scalar(3)}}, HeckeParams{2, 3, Scalar(-1), {Scalar(1), Scalar(-1)}},
                        HeckeParams{1, 4, Scalar(-1), {Scalar(1)}}, HeckeParams{2, 2, z3, {Scalar(1), z3.pow(2)}},
                        HeckeParams{2, 4, Scalar(-1), {Scalar(1), Scalar(-1)}}, HeckeParams{2, 0, Scalar(2), {Scalar(1), Scalar(3)}}}) {
    const CellularTable T(make_algebra(p));
    for (const auto& lam : T.shapes()) {
      const auto S = specht_module(T, lam);
      CHECK(static_cast<std::size_t>(S.dimension()) == standard_tableaux(lam).size());
      check_module_relations(S, p);
    }
  }
}

TEST_CASE("Gram matrices") {
  const auto A = algebra(1, 1, Scalar(-1), {Scalar(1)});
  const CellularTable T1(A);
  CHECK(gram(T1, mp("[[1]]"))(0, 0).is_one());

  const CellularTable T(algebra(1, 2, Scalar(-1), {Scalar(1)}));
  CHECK(gram(T, mp("[[2]]"))(0, 0).is_zero());
  CHECK(dim_simple(T, mp("[[2]]")) == 0);
  CHECK(dim_simple(T, mp("[[1,1]]")) == 1);
  CHECK(simple_labels(T) == std::vector<Multipartition>{mp("[[1,1]]")});

  const CellularTable T0(algebra(2, 0, Scalar(-1), {Scalar(1), Scalar(2)}));
  CHECK(dim_simple(T0, Multipartition::empty(2)) == 1);
  CHECK(simple_labels(T0) == std::vector<Multipartition>{Multipartition::empty(2)});
}

TEST_CASE("Gram symmetry and semisimple nonsingularity") {
  const HeckeParams p{2, 3, Scalar(2), {Scalar(1), Scalar(5)}};
  REQUIRE(is_semisimple(p).semisimple);
  const CellularTable T(make_algebra(p));
  for (const auto& lam : T.shapes()) {
    const auto g = gram(T, lam);
    CHECK(is_symmetric<Scalar>(g));
    CHECK(rank<Scalar>(g) == static_cast<int>(standard_tableaux(lam).size()));
  }
  CHECK(simple_labels(T, 2).size() == multipartitions_of(2, 3).size());
}

TEST_CASE("semisimplicity coherence") {
  const Scalar z3 = root_of_unity(3, 1), z4 = root_of_unity(4, 1);
  const std::vector<HeckeParams> grid{
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
  };
  for (const auto& p : grid) {
    const CellularTable T(make_algebra(p));
    bool all_full = true;
    for (const auto& lam : T.shapes()) {
      const auto g = gram(T, lam);
      CHECK(is_symmetric<Scalar>(g));
      all_full = all_full && rank<Scalar>(g) == g.rows();
    }
    CHECK(is_semisimple(p).semisimple == all_full);
  }
}

TEST_CASE("rank and modular reduction") {
  ScalarMatrix m(2, 3);
  m << Scalar(1), Scalar(2), Scalar(3), Scalar(2), Scalar(4), Scalar(6);
  CHECK(rank<Scalar>(m) == 1);
  ScalarMatrix z(2, 2);
  z << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  CHECK(rank<Scalar>(z) == 2);
  const auto inv = inverse<Scalar>(z, Scalar(1));
  REQUIRE(inv);
  CHECK(*inv == z);
  const ModularReduction red(12);
  CHECK(red.prime() % 12 == 1);
  const Scalar w = root_of_unity(12, 1);
  CHECK(red(w).pow(12) == ModP(1, red.prime()));
  CHECK(!(red(w).pow(6) == ModP(1, red.prime())));
  CHECK(red(w * w + Scalar::rational(1, 3).promoted(12)) == red(w) * red(w) + ModP(1, red.prime()) / ModP(3, red.prime()));
}
