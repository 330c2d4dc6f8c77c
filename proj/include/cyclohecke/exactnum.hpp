// Exact scalars (rationals and cyclotomic field elements) and integer
// Laurent polynomials in v.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclohecke {

/// Raised when two cyclotomic scalars of different conductors meet.
class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by LaurentPoly::divide_exact when the quotient is not a Laurent
/// polynomial with integer coefficients.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
/// The table is filled once per conductor and never modified afterwards.
const std::vector<mpz_class>& cyclotomic_polynomial(int e);

/// Euler's totient, i.e. the degree of the e-th cyclotomic polynomial.
int euler_phi(int e);

/// An element of Q or of Q(ζ_e) = Q[x]/Φ_e(x).
///
/// Values are stored as an integer numerator vector over a positive common
/// denominator, kept in lowest terms. A rational scalar has one numerator
/// entry and conductor 0. A cyclotomic scalar has exactly φ(e) entries.
class Scalar {
 public:
  Scalar() : num_(1), den_(1) {}
  Scalar(long value) : num_(1, mpz_class(value)), den_(1) {}  // NOLINT: literal interop
  Scalar(const mpz_class& value) : num_(1, value), den_(1) {}  // NOLINT

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar rational(const mpq_class& value);
  /// Builds Σ coeffs[k] ζ_e^k for any number of coefficients and reduces it.
  static Scalar cyclotomic(int conductor, const std::vector<mpq_class>& coeffs);

  bool is_rational() const { return conductor_ == 0; }
  /// 0 for rationals.
  int conductor() const { return conductor_; }
  bool is_zero() const;
  bool is_one() const;

  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }
  /// Coefficient of ζ^k (k < φ(e)); for rationals only k = 0 is valid.
  mpq_class coefficient(int k) const;

  /// The same value viewed in Q(ζ_e). Throws ConductorMismatch when this is
  /// already cyclotomic with another conductor.
  Scalar promoted(int conductor) const;

  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Textual form: "p/q" for rationals, "c*z{e}^{k}" terms for cyclotomics.
  std::string to_string() const;

 private:
  void normalize();
  static int common_conductor(const Scalar& a, const Scalar& b);

  int conductor_ = 0;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

enum class FieldOp { add, sub, mul, div };

/// Exact field operation. Division by zero raises std::domain_error.
Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op);

/// ζ_e^a reduced modulo Φ_e.
Scalar root_of_unity(int e, long a);

/// Multiplicative order of x by repeated powering, or 0 if no power up to
/// `bound` equals one.
long multiplicative_order(const Scalar& x, long bound);

/// Parses "p/q", "z12^4", "2*z3^1-1/2" and similar. When `conductor` is
/// positive the result is promoted into that field.
Scalar parse_scalar(std::string_view text, int conductor = 0);

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

/// Laurent polynomial in v with integer coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT
  static LaurentPoly monomial(const mpz_class& coeff, int exponent);
  static LaurentPoly v_power(int exponent) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Value at v = 1.
  mpz_class at_one() const;
  /// v ↦ v⁻¹.
  LaurentPoly bar() const;
  bool is_bar_invariant() const { return bar() == *this; }
  /// True when every exponent is strictly positive.
  bool in_v_z_v() const;

  /// r with r * divisor == *this; throws NotDivisible otherwise.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// "c*v^k" terms joined by "+", ascending exponent; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(int exponent, const mpz_class& coeff);
  Terms terms_;
};

LaurentPoly bar(const LaurentPoly& p);
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// [k] = v^{k-1} + v^{k-3} + ... + v^{1-k}.
LaurentPoly quantum_integer(int k);

/// [k]! = [1][2]...[k].
LaurentPoly quantum_factorial(int k);

/// Parses the textual form produced by LaurentPoly::to_string.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace cyclohecke
