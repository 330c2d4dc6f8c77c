#include "doctest.h"

#include <random>

#include "cyclohecke/exactnum.hpp"

using namespace cyclohecke;

namespace {

Scalar z(int e, long a) { return root_of_unity(e, a); }

Scalar random_cyclotomic(std::mt19937& rng, int e) {
  std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4);
  std::vector<mpq_class> c;
  for (int k = 0; k < e; ++k) c.emplace_back(coeff(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Scalar::cyclotomic(e, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  for (int e = 1; e <= 30; ++e) CHECK(static_cast<int>(cyclotomic_polynomial(e).size()) == euler_phi(e) + 1);
}

TEST_CASE("field_arith examples") {
  const Scalar i = z(4, 1);
  CHECK(field_arith(i, i, FieldOp::mul) == Scalar(-1).promoted(4));
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2).promoted(4));
  CHECK(field_arith(Scalar::rational(2, 3), Scalar::rational(4, 9), FieldOp::div) == Scalar::rational(3, 2));
  CHECK_THROWS_AS(field_arith(Scalar(1), Scalar(0), FieldOp::div), std::domain_error);
  CHECK_THROWS_AS(z(3, 1) + z(4, 1), ConductorMismatch);
}

TEST_CASE("rationals are stored in lowest terms") {
  const Scalar x = Scalar::rational(6, -4);
  CHECK(x.numerators()[0] == -3);
  CHECK(x.denominator() == 2);
  CHECK(Scalar::rational(0, 7).denominator() == 1);
}

TEST_CASE("root_of_unity examples") {
  CHECK(z(2, 1) == Scalar(-1).promoted(2));
  CHECK(z(3, 3).is_one());
  const Scalar w = z(12, 4);
  CHECK(!w.is_one());
  CHECK(w.pow(3).is_one());
  CHECK(multiplicative_order(w, 100) == 3);
  for (int e = 1; e <= 24; ++e) CHECK(multiplicative_order(z(e, 1), 100) == e);
  CHECK(multiplicative_order(z(12, 6), 100) == 2);
}

TEST_CASE("field axioms on random cyclotomic triples") {
  std::mt19937 rng(7);
  for (int e : {3, 4, 5, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Scalar a = random_cyclotomic(rng, e), b = random_cyclotomic(rng, e), c = random_cyclotomic(rng, e);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("field axioms on random rational triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-20, 20), p(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const Scalar a = Scalar::rational(d(rng), p(rng)), b = Scalar::rational(d(rng), p(rng)),
                 c = Scalar::rational(d(rng), p(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("scalar parsing round trip") {
  CHECK(parse_scalar("3/6") == Scalar::rational(1, 2));
  CHECK(parse_scalar("z4^1") == z(4, 1));
  CHECK(parse_scalar("z12^4") == z(12, 4));
  CHECK(parse_scalar("2*z3^1-1/2") == Scalar(2).promoted(3) * z(3, 1) - Scalar::rational(1, 2).promoted(3));
  CHECK(parse_scalar("-1", 4) == Scalar(-1).promoted(4));
  for (const Scalar& x : {z(12, 5), z(3, 1) + Scalar(2).promoted(3), Scalar::rational(-7, 3)}) {
    CHECK(parse_scalar(x.to_string(), x.conductor()) == x);
  }
}

TEST_CASE("bar is an involutive ring map") {
  const LaurentPoly v = LaurentPoly::v_power(1);
  CHECK(bar(v) == LaurentPoly::v_power(-1));
  const LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(2, 3);
  CHECK(bar(p) == LaurentPoly(1) + LaurentPoly::monomial(2, -3));
  CHECK(bar(bar(LaurentPoly(1) + v)) == LaurentPoly(1) + v);
  const LaurentPoly q = LaurentPoly::monomial(-3, -2) + v;
  CHECK(bar(p * q) == bar(p) * bar(q));
  CHECK(bar(p + q) == bar(p) + bar(q));
}

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1) == LaurentPoly(1));
  CHECK(quantum_integer(2) == LaurentPoly::v_power(1) + LaurentPoly::v_power(-1));
  CHECK(quantum_integer(3) == LaurentPoly::v_power(2) + LaurentPoly(1) + LaurentPoly::v_power(-2));
  for (int k = 1; k <= 30; ++k) {
    CHECK(quantum_integer(k).is_bar_invariant());
    CHECK(quantum_integer(k).at_one() == k);
  }
  CHECK(quantum_factorial(3) == quantum_integer(2) * quantum_integer(3));
}

TEST_CASE("divide_exact") {
  const LaurentPoly v = LaurentPoly::v_power(1), vi = LaurentPoly::v_power(-1);
  CHECK((v + vi).divide_exact(v + vi) == LaurentPoly(1));
  CHECK((LaurentPoly::v_power(2) - LaurentPoly::v_power(-2)).divide_exact(v - vi) == v + vi);
  CHECK_THROWS_AS(v.divide_exact(LaurentPoly(1) + v), NotDivisible);
  CHECK_THROWS_AS(LaurentPoly(3).divide_exact(LaurentPoly(2)), NotDivisible);
  const LaurentPoly f = quantum_factorial(4);
  const LaurentPoly g = LaurentPoly::monomial(5, -3) + LaurentPoly::v_power(7);
  CHECK((f * g).divide_exact(f) == g);
}

TEST_CASE("laurent parsing round trip") {
  const LaurentPoly p = LaurentPoly(1) + LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, -1);
  CHECK(parse_laurent(p.to_string()) == p);
  CHECK(parse_laurent("0").is_zero());
  CHECK(parse_laurent("v") == LaurentPoly::v_power(1));
}
