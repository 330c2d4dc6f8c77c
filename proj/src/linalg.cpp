#include "cyclohecke/linalg.hpp"

#include <numeric>

namespace cyclohecke {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ModularReduction::ModularReduction(int conductor, int skip) : conductor_(conductor) {
  const std::uint64_t e = conductor > 1 ? static_cast<std::uint64_t>(conductor) : 1;
  std::uint64_t p = (std::uint64_t{1} << 30) / e * e + 1;
  for (int found = -1; found < skip; p += e) {
    if (is_prime(p)) ++found;
    if (found == skip) break;
  }
  p_ = static_cast<std::uint32_t>(p);
  const auto factors = prime_factors(e);
  for (std::uint64_t a = 2;; ++a) {
    const ModP g = ModP(a, p_).pow((p - 1) / e);
    bool exact = true;
    for (auto l : factors) exact = exact && !(g.pow(e / l) == ModP(1, p_));
    if (exact) {
      zeta_ = g;
      break;
    }
  }
}

ModP ModularReduction::operator()(const Scalar& x) const {
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return ModP(r.get_ui(), p_);
  };
  const ModP den = reduce(x.denominator());
  if (den.is_zero()) throw std::domain_error("prime divides a denominator");
  if (!x.is_rational() && x.conductor() != conductor_) throw ConductorMismatch("reduction of a foreign scalar");
  ModP acc(0, p_), power(1, p_);
  for (const auto& c : x.numerators()) {
    acc += reduce(c) * power;
    power *= zeta_;
  }
  return acc / den;
}

}  // namespace cyclohecke
