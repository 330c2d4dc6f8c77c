#include "cyclohecke/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cyclohecke {

namespace {

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic divisor; the remainder must vanish.
IntPoly divide_monic(IntPoly a, const IntPoly& divisor) {
  const std::size_t d = divisor.size() - 1;
  if (a.size() <= d) return {};
  IntPoly quotient(a.size() - d);
  for (std::size_t k = a.size(); k-- > d;) {
    const mpz_class c = a[k];
    quotient[k - d] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) a[k - d + j] -= c * divisor[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic polynomial division left a remainder");
  return quotient;
}

IntPoly compute_cyclotomic(int e, const std::map<int, IntPoly>& known) {
  IntPoly p(static_cast<std::size_t>(e) + 1);
  p[0] = -1;
  p[e] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d == 0) p = divide_monic(p, known.at(d));
  }
  return p;
}

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, IntPoly>& phi_table() {
  static std::map<int, IntPoly> table;
  return table;
}

// Reduces a polynomial modulo the monic Φ_e in place, leaving φ(e) entries.
void reduce_mod_phi(IntPoly& p, const IntPoly& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    const mpz_class c = p[k];
    for (std::size_t j = 0; j < d; ++j) p[k - d + j] -= c * phi[j];
    p[k] = 0;
  }
  p.resize(d);
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int e) {
  if (e < 1) throw std::invalid_argument("conductor must be positive");
  std::lock_guard lock(phi_mutex());
  auto& table = phi_table();
  if (auto it = table.find(e); it != table.end()) return it->second;
  for (int d = 1; d <= e; ++d) {
    if (e % d == 0 && !table.contains(d)) table.emplace(d, compute_cyclotomic(d, table));
  }
  return table.at(e);
}

int euler_phi(int e) {
  if (e < 1) throw std::invalid_argument("conductor must be positive");
  int result = e;
  int n = e;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Scalar s;
  s.num_[0] = num;
  s.den_ = den;
  s.normalize();
  return s;
}

Scalar Scalar::rational(const mpq_class& value) {
  return rational(value.get_num(), value.get_den());
}

Scalar Scalar::cyclotomic(int conductor, const std::vector<mpq_class>& coeffs) {
  const auto& phi = cyclotomic_polynomial(conductor);
  mpz_class den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  IntPoly num(std::max<std::size_t>(coeffs.size(), phi.size() - 1));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
  }
  reduce_mod_phi(num, phi);
  Scalar s;
  s.conductor_ = conductor;
  s.num_ = std::move(num);
  s.den_ = den;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; })) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

bool Scalar::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

mpq_class Scalar::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(num_.size())) throw std::out_of_range("coefficient index");
  mpq_class q(num_[k], den_);
  q.canonicalize();
  return q;
}

Scalar Scalar::promoted(int conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor_ != 0) {
    throw ConductorMismatch("cyclotomic conductors " + std::to_string(conductor_) + " and " +
                            std::to_string(conductor) + " differ");
  }
  if (conductor == 0) return *this;
  Scalar s;
  s.conductor_ = conductor;
  s.num_.assign(static_cast<std::size_t>(euler_phi(conductor)), mpz_class(0));
  s.num_[0] = num_[0];
  s.den_ = den_;
  return s;
}

int Scalar::common_conductor(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) return a.conductor_;
  if (a.conductor_ == 0) return b.conductor_;
  if (b.conductor_ == 0) return a.conductor_;
  throw ConductorMismatch("cyclotomic conductors " + std::to_string(a.conductor_) + " and " +
                          std::to_string(b.conductor_) + " differ");
}

Scalar& Scalar::operator+=(const Scalar& other) {
  const int e = common_conductor(*this, other);
  if (conductor_ != e) *this = promoted(e);
  const Scalar& o = other.conductor_ == e ? other : other.promoted(e);
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * o.den_ + o.num_[k] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  const int e = common_conductor(*this, other);
  if (e == 0) {
    num_[0] *= other.num_[0];
    den_ *= other.den_;
    normalize();
    return *this;
  }
  const Scalar a = conductor_ == e ? *this : promoted(e);
  const Scalar& b = other.conductor_ == e ? other : other.promoted(e);
  const std::size_t d = a.num_.size();
  IntPoly product(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.num_[j] != 0) product[i + j] += a.num_[i] * b.num_[j];
    }
  }
  reduce_mod_phi(product, cyclotomic_polynomial(e));
  conductor_ = e;
  num_ = std::move(product);
  den_ = a.den_ * b.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& c : s.num_) c = -c;
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.conductor_ == b.conductor_) return a.den_ == b.den_ && a.num_ == b.num_;
  const int e = Scalar::common_conductor(a, b);
  return a.promoted(e) == b.promoted(e);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (conductor_ == 0) return rational(den_, num_[0]);
  // Solve (multiplication-by-this) · c = 1 over Q.
  const int d = static_cast<int>(num_.size());
  std::vector<std::vector<mpq_class>> rows(d, std::vector<mpq_class>(d + 1));
  for (int j = 0; j < d; ++j) {
    std::vector<mpq_class> basis(d);
    basis[j] = 1;
    const Scalar column = *this * cyclotomic(conductor_, basis);
    for (int i = 0; i < d; ++i) rows[i][j] = column.coefficient(i);
  }
  rows[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    while (rows[pivot][col] == 0) ++pivot;
    std::swap(rows[pivot], rows[col]);
    const mpq_class inv = 1 / rows[col][col];
    for (int k = col; k <= d; ++k) rows[col][k] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == col || rows[i][col] == 0) continue;
      const mpq_class f = rows[i][col];
      for (int k = col; k <= d; ++k) rows[i][k] -= f * rows[col][k];
    }
  }
  std::vector<mpq_class> coeffs(d);
  for (int i = 0; i < d; ++i) coeffs[i] = rows[i][d];
  return cyclotomic(conductor_, coeffs);
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result = Scalar(1).promoted(conductor_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  auto rational_text = [](const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
  };
  if (conductor_ == 0) return rational_text(coefficient(0));
  std::string out;
  for (int k = 0; k < static_cast<int>(num_.size()); ++k) {
    mpq_class c = coefficient(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    std::string term;
    if (k == 0) {
      term = rational_text(c);
    } else {
      term = (c == 1 ? std::string() : rational_text(c) + "*") + "z" + std::to_string(conductor_) + "^" +
             std::to_string(k);
    }
    if (negative) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

Scalar field_arith(const Scalar& a, const Scalar& b, FieldOp op) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw std::invalid_argument("unknown field operation");
}

Scalar root_of_unity(int e, long a) {
  if (e < 1) throw std::invalid_argument("root_of_unity: e must be positive");
  long k = a % e;
  if (k < 0) k += e;
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs[k] = 1;
  return Scalar::cyclotomic(e, coeffs);
}

long multiplicative_order(const Scalar& x, long bound) {
  if (x.is_zero()) return 0;
  Scalar power = x;
  for (long k = 1; k <= bound; ++k) {
    if (power.is_one()) return k;
    power *= x;
  }
  return 0;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
  }
  bool at_digit() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

mpq_class parse_unsigned_rational(Cursor& cur) {
  mpq_class q(cur.integer());
  if (cur.accept('/')) {
    const mpz_class den = cur.integer();
    if (den == 0) cur.fail("zero denominator");
    q = mpq_class(q.get_num(), den);
    q.canonicalize();
  }
  return q;
}

}  // namespace

Scalar parse_scalar(std::string_view text, int conductor) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty scalar");
  // Collect (coefficient, conductor, exponent) terms; conductor 0 = rational.
  struct Term {
    mpq_class coeff;
    int e;
    long a;
  };
  std::vector<Term> terms;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    Term t{1, 0, 0};
    if (cur.at_digit()) {
      t.coeff = parse_unsigned_rational(cur);
      if (!cur.accept('*')) {
        t.coeff *= sign;
        terms.push_back(t);
        continue;
      }
    }
    if (!cur.accept('z')) cur.fail("expected 'z'");
    const mpz_class e = cur.integer();
    if (e < 1 || !e.fits_sint_p()) cur.fail("bad conductor");
    t.e = static_cast<int>(e.get_si());
    t.a = 1;
    if (cur.accept('^')) {
      const mpz_class a = cur.integer();
      if (!a.fits_slong_p()) cur.fail("exponent out of range");
      t.a = a.get_si();
    }
    t.coeff *= sign;
    terms.push_back(t);
  }
  int e = conductor;
  for (const auto& t : terms) {
    if (t.e == 0) continue;
    if (e == 0) e = t.e;
    if (t.e != e) {
      throw ConductorMismatch("scalar '" + std::string(text) + "' mixes conductors");
    }
  }
  Scalar result = Scalar(0).promoted(e);
  for (const auto& t : terms) {
    Scalar term = Scalar::rational(t.coeff);
    if (t.e != 0) term *= root_of_unity(t.e, t.a);
    result += term;
  }
  return result.promoted(e);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

mpz_class LaurentPoly::at_one() const {
  mpz_class s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_) p.terms_.emplace(-k, c);
  return p;
}

bool LaurentPoly::in_v_z_v() const {
  return terms_.empty() || terms_.begin()->first > 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) p.add_term(i + j, x * y);
  }
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [k, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  const int lead_exp = divisor.max_exponent();
  const mpz_class& lead = divisor.terms_.rbegin()->second;
  // Any exact quotient has lowest exponent min(p) - min(divisor).
  const int floor_exp = min_exponent() - divisor.min_exponent();
  auto fail = [&] {
    throw NotDivisible("polynomial " + to_string() + " not divisible by " + divisor.to_string());
  };
  LaurentPoly remainder = *this;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    const int top = remainder.max_exponent();
    if (top - lead_exp < floor_exp) fail();
    const mpz_class& c = remainder.terms_.rbegin()->second;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) fail();
    const LaurentPoly step = monomial(c / lead, top - lead_exp);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    mpz_class a = abs(c);
    std::string term;
    if (k == 0) {
      term = a.get_str();
    } else {
      term = (a == 1 ? std::string() : a.get_str() + "*") + (k == 1 ? std::string("v") : "v^" + std::to_string(k));
    }
    if (c < 0) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out;
}

LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

LaurentPoly quantum_integer(int k) {
  if (k < 1) throw std::invalid_argument("quantum_integer: k must be positive");
  LaurentPoly p;
  for (int e = k - 1; e >= 1 - k; e -= 2) p += LaurentPoly::v_power(e);
  return p;
}

LaurentPoly quantum_factorial(int k) {
  LaurentPoly p(1);
  for (int j = 2; j <= k; ++j) p *= quantum_integer(j);
  return p;
}

LaurentPoly parse_laurent(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty polynomial");
  LaurentPoly p;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    mpz_class coeff = 1;
    bool has_coeff = false;
    if (cur.at_digit()) {
      coeff = cur.integer();
      has_coeff = true;
      if (!cur.accept('*')) {
        p += LaurentPoly::monomial(sign * coeff, 0);
        continue;
      }
    }
    if (!cur.accept('v')) cur.fail(has_coeff ? "expected 'v' after '*'" : "expected term");
    long exponent = 1;
    if (cur.accept('^')) {
      const mpz_class e = cur.integer();
      if (!e.fits_sint_p()) cur.fail("exponent out of range");
      exponent = e.get_si();
    }
    p += LaurentPoly::monomial(sign * coeff, static_cast<int>(exponent));
  }
  return p;
}

}  // namespace cyclohecke
