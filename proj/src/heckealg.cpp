#include "cyclohecke/heckealg.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cyclohecke {

namespace {

void accumulate(SparseVector& acc, BasisId id, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void accumulate_scaled(SparseVector& acc, const SparseVector& x, const Scalar& c) {
  if (c.is_zero()) return;
  const bool unit_scale = c.is_one();
  for (const auto& [id, value] : x) accumulate(acc, id, unit_scale ? value : value * c);
}

SparseVector scaled(const SparseVector& x, const Scalar& c) {
  SparseVector out;
  accumulate_scaled(out, x, c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameters

int HeckeParams::conductor() const {
  int e = q.conductor();
  for (const auto& x : v) {
    if (x.conductor() == 0) continue;
    if (e != 0 && e != x.conductor()) throw ConductorMismatch("Hecke parameters mix cyclotomic conductors");
    e = x.conductor();
  }
  return e;
}

HeckeParams HeckeParams::validated() const {
  if (m < 1) throw std::invalid_argument("level m must be at least 1");
  if (n < 0) throw std::invalid_argument("rank n must be nonnegative");
  if (static_cast<int>(v.size()) != m) throw std::invalid_argument("need exactly m parameters v");
  if (q.is_zero()) throw std::invalid_argument("q must be invertible (q = 0 is excluded)");
  const int e = conductor();
  HeckeParams p = *this;
  p.q = q.promoted(e);
  for (auto& x : p.v) x = x.promoted(e);
  return p;
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(const HeckeParams& params) : params_(params.validated()) {
  const int m = params_.m, n = params_.n;
  const int e = params_.conductor();
  zero_ = Scalar(0).promoted(e);
  one_ = Scalar(1).promoted(e);
  q_minus_one_ = params_.q - one_;

  perm_count_ = factorial(n);
  std::uint64_t dim = perm_count_;
  for (int k = 0; k < n; ++k) dim *= static_cast<std::uint64_t>(m);
  if (dim > (1u << 24)) throw std::invalid_argument("Hecke algebra dimension too large");
  dimension_ = static_cast<BasisId>(dim);

  // ∏_k (x − v_k) = x^m + Σ_j c_j x^j, hence L_1^m = −Σ_j c_j L_1^j.
  std::vector<Scalar> poly{one_};
  for (const auto& vk : params_.v) {
    std::vector<Scalar> next(poly.size() + 1, zero_);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * vk;
    }
    poly = std::move(next);
  }
  for (int j = 0; j < m; ++j) l1_reduction_.push_back(-poly[j]);

  for (std::uint32_t r = 0; r < perm_count_; ++r) perms_.push_back(Permutation::unrank(n, r));
  for (int s = 1; s < n; ++s) {
    const Permutation sp = Permutation::simple(n, s);
    std::vector<std::uint32_t> lp, rp;
    std::vector<bool> ll, rl;
    for (const auto& w : perms_) {
      const Permutation left = sp * w, right = w * sp;
      lp.push_back(left.rank());
      rp.push_back(right.rank());
      ll.push_back(left.length() > w.length());
      rl.push_back(right.length() > w.length());
    }
    left_perm_.push_back(std::move(lp));
    right_perm_.push_back(std::move(rp));
    left_longer_.push_back(std::move(ll));
    right_longer_.push_back(std::move(rl));
  }

  left_table_.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    auto& table = left_table_[j - 1];
    table.reserve(dimension_);
    for (BasisId b = 0; b < dimension_; ++b) table.push_back(compute_left_generator(j, b));
  }
}

std::vector<int> HeckeAlgebra::exponents_of(std::uint32_t e_code) const {
  std::vector<int> e(static_cast<std::size_t>(params_.n));
  for (auto& x : e) {
    x = static_cast<int>(e_code % params_.m);
    e_code /= params_.m;
  }
  return e;
}

std::uint32_t HeckeAlgebra::code_of(const std::vector<int>& e) const {
  std::uint32_t code = 0;
  for (std::size_t k = e.size(); k-- > 0;) code = code * params_.m + static_cast<std::uint32_t>(e[k]);
  return code;
}

NormalIndex HeckeAlgebra::index(BasisId id) const {
  if (id >= dimension_) throw std::out_of_range("basis id out of range");
  return {exponents_of(id / perm_count_), perms_[id % perm_count_]};
}

BasisId HeckeAlgebra::id_of(const NormalIndex& idx) const {
  if (static_cast<int>(idx.exponents.size()) != params_.n || idx.w.degree() != params_.n) {
    throw std::invalid_argument("normal index has wrong rank");
  }
  for (int x : idx.exponents) {
    if (x < 0 || x >= params_.m) throw std::invalid_argument("normal index exponent out of range");
  }
  return compose(code_of(idx.exponents), idx.w.rank());
}

SparseVector HeckeAlgebra::compute_left_generator(int j, BasisId b) const {
  const std::uint32_t w = b % perm_count_;
  std::vector<int> e = exponents_of(b / perm_count_);
  SparseVector out;
  if (j == 1) {
    if (e[0] + 1 < params_.m) {
      ++e[0];
      accumulate(out, compose(code_of(e), w), one_);
    } else {
      for (int t = 0; t < params_.m; ++t) {
        e[0] = t;
        accumulate(out, compose(code_of(e), w), l1_reduction_[t]);
      }
    }
    return out;
  }
  // a_j with X = L_{j-1}, Y = L_j.
  const int s = j - 1;
  const int x = e[j - 2], y = e[j - 1];
  std::vector<int> swapped = e;
  std::swap(swapped[j - 2], swapped[j - 1]);
  const std::uint32_t sw = left_perm_[s - 1][w];
  const std::uint32_t code = code_of(swapped);
  if (left_longer_[s - 1][w]) {
    accumulate(out, compose(code, sw), one_);
  } else {
    accumulate(out, compose(code, sw), params_.q);
    accumulate(out, compose(code, w), q_minus_one_);
  }
  // (q−1) Y (X^x Y^y − X^y Y^x)/(Y − X) · a_w
  if (x != y) {
    const Scalar c = x > y ? -q_minus_one_ : q_minus_one_;
    const int lo = std::min(x, y), hi = std::max(x, y);
    for (int t = 0; t < hi - lo; ++t) {
      std::vector<int> f = e;
      f[j - 2] = lo + t;
      f[j - 1] = hi - t;
      accumulate(out, compose(code_of(f), w), c);
    }
  }
  return out;
}

const SparseVector& HeckeAlgebra::left_generator(int j, BasisId b) const {
  if (j < 1 || j > params_.n) throw std::out_of_range("generator index out of range");
  return left_table_[j - 1].at(b);
}

SparseVector HeckeAlgebra::compute_right_a1(BasisId b) const {
  // L^e a_w · L_1 = L^e · (a_w L_1).
  const std::uint32_t w = b % perm_count_;
  SparseVector x{{compose(0, 0), one_}};
  x = left_multiply(1, x);
  x = left_multiply_perm(perms_[w], x);
  const std::vector<int> e = exponents_of(b / perm_count_);
  for (int k = params_.n; k >= 1; --k) {
    for (int t = 0; t < e[k - 1]; ++t) x = left_murphy(k, x);
  }
  return x;
}

SparseVector HeckeAlgebra::right_generator(int j, BasisId b) const {
  if (j < 1 || j > params_.n) throw std::out_of_range("generator index out of range");
  if (j >= 2) {
    const int s = j - 1;
    const std::uint32_t w = b % perm_count_;
    const std::uint32_t code = b / perm_count_;
    SparseVector out;
    const std::uint32_t ws = right_perm_[s - 1][w];
    if (right_longer_[s - 1][w]) {
      accumulate(out, compose(code, ws), one_);
    } else {
      accumulate(out, compose(code, ws), params_.q);
      accumulate(out, b, q_minus_one_);
    }
    return out;
  }
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = right_a1_cache_.find(b); it != right_a1_cache_.end()) return it->second;
  }
  SparseVector column = compute_right_a1(b);
  std::unique_lock lock(cache_mutex_);
  return right_a1_cache_.try_emplace(b, std::move(column)).first->second;
}

std::size_t HeckeAlgebra::cached_right_columns() const {
  std::shared_lock lock(cache_mutex_);
  return right_a1_cache_.size();
}

SparseVector HeckeAlgebra::left_multiply(int j, const SparseVector& x) const {
  SparseVector out;
  for (const auto& [id, c] : x) accumulate_scaled(out, left_generator(j, id), c);
  return out;
}

SparseVector HeckeAlgebra::right_multiply(const SparseVector& x, int j) const {
  SparseVector out;
  for (const auto& [id, c] : x) accumulate_scaled(out, right_generator(j, id), c);
  return out;
}

SparseVector HeckeAlgebra::left_murphy(int k, const SparseVector& x) const {
  if (k < 1 || k > params_.n) throw std::out_of_range("Murphy index out of range");
  SparseVector y = x;
  for (int j = k; j >= 2; --j) y = left_multiply(j, y);
  y = left_multiply(1, y);
  for (int j = 2; j <= k; ++j) y = left_multiply(j, y);
  return k == 1 ? y : scaled(y, params_.q.pow(1 - k));
}

SparseVector HeckeAlgebra::right_murphy(const SparseVector& x, int k) const {
  if (k < 1 || k > params_.n) throw std::out_of_range("Murphy index out of range");
  SparseVector y = x;
  for (int j = k; j >= 2; --j) y = right_multiply(y, j);
  y = right_multiply(y, 1);
  for (int j = 2; j <= k; ++j) y = right_multiply(y, j);
  return k == 1 ? y : scaled(y, params_.q.pow(1 - k));
}

SparseVector HeckeAlgebra::left_multiply_perm(const Permutation& w, const SparseVector& x) const {
  const std::vector<int> word = reduced_word(w);
  SparseVector y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = left_multiply(*it + 1, y);
  return y;
}

SparseVector HeckeAlgebra::right_multiply_perm(const SparseVector& x, const Permutation& w) const {
  SparseVector y = x;
  for (int s : reduced_word(w)) y = right_multiply(y, s + 1);
  return y;
}

SparseVector HeckeAlgebra::product(const SparseVector& x, const SparseVector& y) const {
  // Group the left factor by its a_w part so that a_w · y is formed once.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Scalar>>> by_perm;
  for (const auto& [id, c] : x) by_perm[id % perm_count_].emplace_back(id / perm_count_, c);
  SparseVector out;
  for (const auto& [w, terms] : by_perm) {
    const SparseVector wy = left_multiply_perm(perms_[w], y);
    for (const auto& [code, c] : terms) {
      const std::vector<int> e = exponents_of(code);
      SparseVector z = wy;
      for (int k = params_.n; k >= 1; --k) {
        for (int t = 0; t < e[k - 1]; ++t) z = left_murphy(k, z);
      }
      accumulate_scaled(out, z, c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement::HeckeElement(std::shared_ptr<const HeckeAlgebra> algebra, SparseVector terms)
    : algebra_(std::move(algebra)) {
  for (auto& [id, c] : terms) {
    if (id >= algebra_->dimension()) throw std::out_of_range("basis id out of range");
    if (!c.is_zero()) terms_.emplace(id, std::move(c));
  }
}

void HeckeElement::check_same(const HeckeElement& other) const {
  if (algebra_ != other.algebra_) throw std::invalid_argument("Hecke elements belong to different algebras");
}

Scalar HeckeElement::coefficient(BasisId id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? algebra_->zero() : it->second;
}

Scalar HeckeElement::coefficient(const NormalIndex& index) const { return coefficient(algebra_->id_of(index)); }

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  check_same(other);
  accumulate_scaled(terms_, other.terms_, algebra_->one());
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  check_same(other);
  accumulate_scaled(terms_, other.terms_, -algebra_->one());
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  terms_ = scaled(terms_, c);
  return *this;
}

HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) { return mul(x, y); }

bool operator==(const HeckeElement& x, const HeckeElement& y) {
  return x.algebra_ == y.algebra_ && x.terms_ == y.terms_;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [id, c] : terms_) {
    const NormalIndex idx = algebra_->index(id);
    std::string e;
    for (std::size_t k = 0; k < idx.exponents.size(); ++k) e += (k ? "," : "") + std::to_string(idx.exponents[k]);
    out += (out.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")*L^[" + e + "]a" + idx.w.to_string();
  }
  return out;
}

std::shared_ptr<const HeckeAlgebra> make_algebra(const HeckeParams& params) {
  return std::make_shared<const HeckeAlgebra>(params);
}

HeckeElement unit(const std::shared_ptr<const HeckeAlgebra>& algebra) {
  return HeckeElement(algebra, {{algebra->unit_id(), algebra->one()}});
}

HeckeElement basis_element(const std::shared_ptr<const HeckeAlgebra>& algebra, const NormalIndex& index) {
  return HeckeElement(algebra, {{algebra->id_of(index), algebra->one()}});
}

HeckeElement generator(const std::shared_ptr<const HeckeAlgebra>& algebra, int i) {
  if (i < 1 || i > algebra->rank()) throw std::out_of_range("generator index out of range");
  return HeckeElement(algebra, algebra->left_generator(i, algebra->unit_id()));
}

HeckeElement murphy(const std::shared_ptr<const HeckeAlgebra>& algebra, int i) {
  if (i < 1 || i > algebra->rank()) throw std::out_of_range("Murphy index out of range");
  return HeckeElement(algebra, algebra->left_murphy(i, unit(algebra).terms()));
}

HeckeElement a_w(const std::shared_ptr<const HeckeAlgebra>& algebra, const Permutation& w) {
  if (w.degree() != algebra->rank()) throw std::invalid_argument("permutation degree differs from n");
  return HeckeElement(algebra, algebra->left_multiply_perm(w, unit(algebra).terms()));
}

HeckeElement a_word(const std::shared_ptr<const HeckeAlgebra>& algebra, const std::vector<int>& word) {
  SparseVector y = unit(algebra).terms();
  for (int s : word) y = algebra->right_multiply(y, s + 1);
  return HeckeElement(algebra, std::move(y));
}

HeckeElement mul(const HeckeElement& x, const HeckeElement& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("Hecke elements belong to different algebras");
  return HeckeElement(x.algebra(), x.algebra()->product(x.terms(), y.terms()));
}

HeckeElement star(const HeckeElement& x) {
  // (L^e a_w)^* = a_{w^{-1}} L^e.
  const auto& alg = x.algebra();
  SparseVector out;
  for (const auto& [id, c] : x.terms()) {
    NormalIndex idx = alg->index(id);
    const Permutation w = idx.w;
    idx.w = Permutation::identity(alg->rank());
    const SparseVector y = alg->left_multiply_perm(w.inverse(), {{alg->id_of(idx), c}});
    accumulate_scaled(out, y, alg->one());
  }
  return HeckeElement(alg, std::move(out));
}

Scalar trace(const HeckeElement& x) { return x.coefficient(x.algebra()->unit_id()); }

HeckeElement right_generator(const HeckeElement& x, int j) {
  return HeckeElement(x.algebra(), x.algebra()->right_multiply(x.terms(), j));
}

HeckeElement left_generator(int j, const HeckeElement& x) {
  return HeckeElement(x.algebra(), x.algebra()->left_multiply(j, x.terms()));
}

// ---------------------------------------------------------------------------
// Parameter predicates

SemisimplicityReport is_semisimple(const HeckeParams& raw) {
  const HeckeParams p = raw.validated();
  SemisimplicityReport report;
  const Scalar one = Scalar(1).promoted(p.conductor());
  Scalar partial = one;
  Scalar power = one;
  std::string text = "1";
  for (int i = 1; i < p.n; ++i) {
    power *= p.q;
    partial += power;
    text += i == 1 ? "+q" : "+q^" + std::to_string(i);
    if (partial.is_zero()) {
      report.semisimple = false;
      report.witness = text;
      return report;
    }
  }
  for (int i = -(p.n - 1); i <= p.n - 1; ++i) {
    const Scalar qi = p.q.pow(i);
    for (int j = 1; j <= p.m; ++j) {
      for (int k = 1; k <= p.m; ++k) {
        if (j == k) continue;
        if ((qi * p.v[j - 1] - p.v[k - 1]).is_zero()) {
          report.semisimple = false;
          report.witness = "q^" + std::to_string(i) + "*v" + std::to_string(j) + "-v" + std::to_string(k);
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<std::vector<int>> parameter_orbits(const HeckeParams& raw, int bound) {
  const HeckeParams p = raw.validated();
  const int m = p.m;
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // A root of unity in Q(ζ_e) has order dividing 2e (or 2 over Q).
  const long order_bound = p.q.is_rational() ? 2 : 2L * p.q.conductor();
  const long order = multiplicative_order(p.q, order_bound);
  const long lo = order > 0 ? 0 : -bound;
  const long hi = order > 0 ? order - 1 : bound;
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      for (long b = lo; b <= hi; ++b) {
        if (p.v[j] == p.v[k] * p.q.pow(b)) {
          parent[find(j)] = find(k);
          break;
        }
      }
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int j = 0; j < m; ++j) classes[find(j)].push_back(j + 1);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclohecke
