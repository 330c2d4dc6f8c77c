#include "cyclohecke/fock.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace cyclohecke {

LaurentPoly FockVector::coefficient(const Multipartition& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Multipartition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.level() != lambda.level()) {
    throw std::invalid_argument("Fock vector mixes levels");
  }
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

FockVector& FockVector::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, x] : terms_) x *= c;
  return *this;
}

std::map<Multipartition, mpz_class> FockVector::at_one() const {
  std::map<Multipartition, mpz_class> out;
  for (const auto& [lambda, c] : terms_) {
    const mpz_class value = c.at_one();
    if (value != 0) out.emplace(lambda, value);
  }
  return out;
}

FockVector FockVector::bar() const {
  FockVector out;
  for (const auto& [lambda, c] : terms_) out.add(lambda, c.bar());
  return out;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + lambda.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------

FockVector f_op(const FockVector& x, Residue i, const FockConfig& config) {
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) {
    for (const Cell& node : node_sets(lambda, i, config).addable) {
      const int b = n_statistics(lambda, node, i, config).below;
      out.add(lambda.with_cell_added(node), c * LaurentPoly::v_power(b));
    }
  }
  return out;
}

FockVector e_op(const FockVector& x, Residue i, const FockConfig& config) {
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) {
    for (const Cell& node : node_sets(lambda, i, config).removable) {
      const int a = n_statistics(lambda, node, i, config).above;
      out.add(lambda.with_cell_removed(node), c * LaurentPoly::v_power(-a));
    }
  }
  return out;
}

std::vector<Residue> active_residues(const Multipartition& lambda, const FockConfig& config) {
  if (config.modulus.is_finite()) return config.residues_for(0);
  std::set<Residue> seen;
  for (const Cell& x : lambda.addable_cells()) seen.insert(residue(x, config));
  for (const Cell& x : lambda.removable_cells()) seen.insert(residue(x, config));
  return {seen.begin(), seen.end()};
}

Weight weight(const Multipartition& lambda, const FockConfig& config) {
  Weight w;
  for (const Residue& i : active_residues(lambda, config)) {
    const NodeSets nodes = node_sets(lambda, i, config);
    const int k = static_cast<int>(nodes.addable.size()) - static_cast<int>(nodes.removable.size());
    if (k != 0) w.n_i[i] = k;
  }
  for (const Cell& y : lambda.cells()) {
    if (residue(y, config).value == 0) ++w.n_d;
  }
  return w;
}

// ---------------------------------------------------------------------------

std::vector<RaLetter> ra_word(const Multipartition& lambda, Residue i, const FockConfig& config) {
  const NodeSets nodes = node_sets(lambda, i, config);
  std::vector<RaLetter> word;
  for (const Cell& x : nodes.addable) word.push_back({'A', x});
  for (const Cell& x : nodes.removable) word.push_back({'R', x});
  const int m = lambda.level();
  std::sort(word.begin(), word.end(),
            [m](const RaLetter& a, const RaLetter& b) { return reading_key(a.cell, m) < reading_key(b.cell, m); });
  return word;
}

std::vector<RaLetter> ra_reduce(const std::vector<RaLetter>& word) {
  std::vector<RaLetter> stack;
  for (const RaLetter& letter : word) {
    if (letter.kind == 'A' && !stack.empty() && stack.back().kind == 'R') {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return stack;
}

std::string ra_string(const std::vector<RaLetter>& word) {
  std::string s;
  for (const auto& letter : word) s += letter.kind;
  return s;
}

std::optional<Cell> good_removable(const Multipartition& lambda, Residue i, const FockConfig& config) {
  for (const RaLetter& letter : ra_reduce(ra_word(lambda, i, config))) {
    if (letter.kind == 'R') return letter.cell;
  }
  return std::nullopt;
}

std::optional<Cell> good_addable(const Multipartition& lambda, Residue i, const FockConfig& config) {
  const auto reduced = ra_reduce(ra_word(lambda, i, config));
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    if (it->kind == 'A') return it->cell;
  }
  return std::nullopt;
}

std::optional<Multipartition> crystal_f(const Multipartition& lambda, Residue i, const FockConfig& config) {
  if (auto x = good_addable(lambda, i, config)) return lambda.with_cell_added(*x);
  return std::nullopt;
}

std::optional<Multipartition> crystal_e(const Multipartition& lambda, Residue i, const FockConfig& config) {
  if (auto x = good_removable(lambda, i, config)) return lambda.with_cell_removed(*x);
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

bool kleshchev_memo(const Multipartition& lambda, const FockConfig& config, std::map<Multipartition, bool>& memo) {
  if (lambda.size() == 0) return true;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  bool result = false;
  for (const Residue& i : active_residues(lambda, config)) {
    const auto mu = crystal_e(lambda, i, config);
    if (mu && kleshchev_memo(*mu, config, memo)) {
      result = true;
      break;
    }
  }
  memo.emplace(lambda, result);
  return result;
}

void check_config(const Multipartition& lambda, const FockConfig& config) {
  if (lambda.level() != config.level()) throw std::invalid_argument("multipartition level differs from the residue vector");
}

}  // namespace

bool is_kleshchev(const Multipartition& lambda, const FockConfig& config) {
  check_config(lambda, config);
  std::map<Multipartition, bool> memo;
  return kleshchev_memo(lambda, config, memo);
}

bool is_kleshchev_by_tableau(const Multipartition& lambda, const FockConfig& config) {
  check_config(lambda, config);
  for (const StandardTableau& t : standard_tableaux(lambda)) {
    bool ok = true;
    for (int k = lambda.size(); k >= 1 && ok; --k) {
      const StandardTableau sub = t.restricted_to(k);
      const Cell x = t.cell_of(k);
      const auto good = good_removable(sub.shape(), residue(x, config), config);
      ok = good && *good == x;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Multipartition> enumerate_kleshchev(const FockConfig& config, int n) {
  std::set<Multipartition> frontier{Multipartition::empty(config.level())};
  for (int k = 0; k < n; ++k) {
    std::set<Multipartition> next;
    for (const auto& lambda : frontier) {
      for (const Residue& i : active_residues(lambda, config)) {
        if (auto mu = crystal_f(lambda, i, config)) next.insert(*mu);
      }
    }
    frontier = std::move(next);
  }
  return {frontier.begin(), frontier.end()};
}

std::vector<long> kleshchev_series(const FockConfig& config, int max_n) {
  std::vector<long> out;
  std::set<Multipartition> frontier{Multipartition::empty(config.level())};
  for (int k = 0; k <= max_n; ++k) {
    out.push_back(static_cast<long>(frontier.size()));
    std::set<Multipartition> next;
    for (const auto& lambda : frontier) {
      for (const Residue& i : active_residues(lambda, config)) {
        if (auto mu = crystal_f(lambda, i, config)) next.insert(*mu);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::map<Multipartition, long> classical_i_res(const Multipartition& lambda, Residue i, const FockConfig& config) {
  std::map<Multipartition, long> out;
  for (const Cell& x : node_sets(lambda, i, config).removable) ++out[lambda.with_cell_removed(x)];
  return out;
}

std::string crystal_dot(const FockConfig& config, int depth) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  std::set<Multipartition> frontier{Multipartition::empty(config.level())};
  os << "  \"" << Multipartition::empty(config.level()).to_string() << "\";\n";
  for (int k = 0; k < depth; ++k) {
    std::set<Multipartition> next;
    for (const auto& lambda : frontier) {
      for (const Residue& i : active_residues(lambda, config)) {
        if (auto mu = crystal_f(lambda, i, config)) {
          os << "  \"" << lambda.to_string() << "\" -> \"" << mu->to_string() << "\" [label=\"" << i.value << "\"];\n";
          next.insert(*mu);
        }
      }
    }
    frontier = std::move(next);
  }
  os << "}\n";
  return os.str();
}

}  // namespace cyclohecke
