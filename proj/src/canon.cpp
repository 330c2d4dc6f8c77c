#include "cyclohecke/canon.hpp"

#include <algorithm>

namespace cyclohecke {

namespace {

FockConfig level_one(int r) { return FockConfig::make(Modulus::finite(r), {0}); }

const Partition& only_component(const Multipartition& x) { return x.component(1); }

bool in_v_zv_or_zero(const LaurentPoly& p) { return p.is_zero() || p.in_v_z_v(); }

}  // namespace

Multipartition as_multipartition(const Partition& p) { return Multipartition({p}); }

std::vector<Partition> dominance_order(int n) {
  std::vector<Partition> out;
  for (const auto& x : dominance_linear_extension(multipartitions_of(1, n))) out.push_back(only_component(x));
  return out;
}

std::vector<Ladder> ladders(const Partition& lambda, int r) {
  if (r < 2) throw std::invalid_argument("ladders need r >= 2");
  if (!lambda.is_restricted(r)) throw std::invalid_argument("ladders of a non-restricted partition " + lambda.to_string());
  std::map<int, Ladder> by_index;
  for (int a = 1; a <= lambda.length(); ++a) {
    for (int b = 1; b <= lambda.row(a); ++b) {
      const int index = b + (r - 1) * (a - 1);
      Ladder& l = by_index[index];
      l.index = index;
      l.residue = Residue{Modulus::finite(r).reduce(b - a)};
      l.cells.push_back(Cell{1, a, b});
    }
  }
  std::vector<Ladder> out;
  for (auto& [index, l] : by_index) out.push_back(std::move(l));
  return out;
}

FockVector divided_power(const FockVector& x, Residue i, int k, const FockConfig& config) {
  FockVector y = x;
  for (int t = 0; t < k; ++t) y = f_op(y, i, config);
  const LaurentPoly d = quantum_factorial(k);
  FockVector out;
  for (const auto& [lambda, c] : y.terms()) {
    try {
      out.add(lambda, c.divide_exact(d));
    } catch (const NotDivisible&) {
      throw LltViolation("divided power not integral at " + lambda.to_string());
    }
  }
  return out;
}

FockVector a_vector(const Partition& lambda, int r) {
  const FockConfig config = level_one(r);
  FockVector x = FockVector::basis(Multipartition::empty(1));
  for (const Ladder& l : ladders(lambda, r)) x = divided_power(x, l.residue, static_cast<int>(l.cells.size()), config);
  const Multipartition top = as_multipartition(lambda);
  if (!(x.coefficient(top) == LaurentPoly(1))) throw LltViolation("A(" + lambda.to_string() + ") has coefficient != 1 at itself");
  for (const auto& [mu, c] : x.terms()) {
    if (mu != top && !dominance_gt(mu, top)) {
      throw LltViolation("A(" + lambda.to_string() + ") is not unitriangular: term at " + mu.to_string());
    }
  }
  return x;
}

LaurentPoly bar_symmetric_part(const LaurentPoly& p) {
  LaurentPoly c = LaurentPoly::monomial(p.coefficient(0), 0);
  for (const auto& [k, coeff] : p.terms()) {
    if (k < 0) c += LaurentPoly::monomial(coeff, k) + LaurentPoly::monomial(coeff, -k);
  }
  return c;
}

FockVector straighten(const FockVector& x, const Partition& lambda, const CanonicalBasis& basis,
                      const std::vector<Partition>& order) {
  const Multipartition top = as_multipartition(lambda);
  FockVector g = x;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Multipartition mu = as_multipartition(*it);
    if (!dominance_gt(mu, top)) continue;
    const LaurentPoly p = g.coefficient(mu);
    if (in_v_zv_or_zero(p)) continue;
    const auto known = basis.g.find(*it);
    if (known == basis.g.end()) {
      throw LltViolation("coefficient outside vZ[v] at non-restricted " + mu.to_string() + " in G(" + lambda.to_string() + ")");
    }
    g -= bar_symmetric_part(p) * known->second;
  }
  if (!(g.coefficient(top) == LaurentPoly(1))) throw LltViolation("G(" + lambda.to_string() + ") lost its leading term");
  for (const auto& [mu, c] : g.terms()) {
    if (mu == top) continue;
    if (!dominance_gt(mu, top)) throw LltViolation("G(" + lambda.to_string() + ") not unitriangular at " + mu.to_string());
    if (!c.in_v_z_v()) throw LltViolation("G(" + lambda.to_string() + ") coefficient outside vZ[v] at " + mu.to_string());
  }
  return g;
}

CanonicalBasis canonical_basis(int n, int r, const std::vector<Partition>& order_in) {
  if (r < 2) throw std::invalid_argument("canonical basis needs r >= 2");
  if (n < 0) throw std::invalid_argument("negative size");
  const std::vector<Partition> order = order_in.empty() ? dominance_order(n) : order_in;
  CanonicalBasis basis;
  basis.n = n;
  basis.r = r;
  for (const Partition& lambda : order) {
    if (!lambda.is_restricted(r)) continue;
    basis.labels.push_back(lambda);
    FockVector a = a_vector(lambda, r);
    basis.g.emplace(lambda, straighten(a, lambda, basis, order));
    basis.a.emplace(lambda, std::move(a));
  }
  return basis;
}

std::map<Partition, LaurentPoly> a_coordinates(const FockVector& x, const CanonicalBasis& basis,
                                               const std::vector<Partition>& order) {
  std::map<Partition, LaurentPoly> coords;
  FockVector residual = x;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const LaurentPoly c = residual.coefficient(as_multipartition(*it));
    if (c.is_zero()) continue;
    const auto a = basis.a.find(*it);
    if (a == basis.a.end()) throw LltViolation("vector leaves the span of the A basis at " + it->to_string());
    coords.emplace(*it, c);
    residual -= c * a->second;
  }
  if (!residual.is_zero()) throw LltViolation("vector leaves the span of the A basis");
  return coords;
}

bool is_bar_invariant(const FockVector& x, const CanonicalBasis& basis, const std::vector<Partition>& order) {
  std::map<Partition, LaurentPoly> coords;
  try {
    coords = a_coordinates(x, basis, order);
  } catch (const LltViolation&) {
    return false;
  }
  for (const auto& [mu, c] : coords) {
    if (!c.is_bar_invariant()) return false;
  }
  return true;
}

DecompositionMatrix decomposition_matrix(const CanonicalBasis& basis) {
  DecompositionMatrix d;
  d.rows = dominance_order(basis.n);
  std::reverse(d.rows.begin(), d.rows.end());
  d.columns.assign(basis.labels.rbegin(), basis.labels.rend());
  for (const Partition& lambda : d.rows) {
    std::vector<long> row;
    for (const Partition& mu : d.columns) {
      row.push_back(basis.g.at(mu).coefficient(as_multipartition(lambda)).at_one().get_si());
    }
    d.entries.push_back(std::move(row));
  }
  return d;
}

DecompositionMatrix decomposition_matrix(int n, int r) { return decomposition_matrix(canonical_basis(n, r)); }

}  // namespace cyclohecke
