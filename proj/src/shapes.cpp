#include "cyclohecke/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclohecke {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_restricted(int r) const {
  for (int a = 1; a <= length(); ++a) {
    if (row(a) - row(a + 1) >= r) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

// ---------------------------------------------------------------------------
// Multipartition

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition level must be at least 1");
}

Multipartition Multipartition::empty(int level) {
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : components_) s += p.size();
  return s;
}

const Partition& Multipartition::component(int c) const {
  if (c < 1 || c > level()) throw std::out_of_range("component index out of range");
  return components_[level() - c];
}

bool Multipartition::contains(const Cell& x) const {
  return x.component >= 1 && x.component <= level() && x.row >= 1 && x.col >= 1 &&
         x.col <= component(x.component).row(x.row);
}

std::vector<Cell> Multipartition::cells() const {
  std::vector<Cell> out;
  for (int c = level(); c >= 1; --c) {
    const Partition& p = component(c);
    for (int a = 1; a <= p.length(); ++a) {
      for (int b = 1; b <= p.row(a); ++b) out.push_back({c, a, b});
    }
  }
  return out;
}

Multipartition Multipartition::with_cell_added(const Cell& x) const {
  const Partition& p = component(x.component);
  if (x.col != p.row(x.row) + 1 || (x.row > 1 && p.row(x.row - 1) < x.col)) {
    throw std::invalid_argument("cell is not addable");
  }
  std::vector<int> parts = p.parts();
  if (x.row > p.length()) {
    parts.push_back(1);
  } else {
    ++parts[x.row - 1];
  }
  auto comps = components_;
  comps[level() - x.component] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

Multipartition Multipartition::with_cell_removed(const Cell& x) const {
  const Partition& p = component(x.component);
  if (x.row < 1 || x.row > p.length() || x.col != p.row(x.row) || p.row(x.row + 1) >= x.col) {
    throw std::invalid_argument("cell is not removable");
  }
  std::vector<int> parts = p.parts();
  if (--parts[x.row - 1] == 0) parts.pop_back();
  auto comps = components_;
  comps[level() - x.component] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

std::vector<Cell> Multipartition::addable_cells() const {
  std::vector<Cell> out;
  for (int c = level(); c >= 1; --c) {
    const Partition& p = component(c);
    for (int a = 1; a <= p.length() + 1; ++a) {
      if (a == 1 || p.row(a - 1) > p.row(a)) out.push_back({c, a, p.row(a) + 1});
    }
  }
  return out;
}

std::vector<Cell> Multipartition::removable_cells() const {
  std::vector<Cell> out;
  for (int c = level(); c >= 1; --c) {
    const Partition& p = component(c);
    for (int a = 1; a <= p.length(); ++a) {
      if (p.row(a) > p.row(a + 1)) out.push_back({c, a, p.row(a)});
    }
  }
  return out;
}

std::string Multipartition::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < components_.size(); ++k) s += (k ? "," : "") + components_[k].to_string();
  return s + "]";
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    peek();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  std::vector<long> int_list() {
    std::vector<long> out;
    expect('[');
    if (accept(']')) return out;
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }
  bool at_end() { return peek() == '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multipartition parse_multipartition(std::string_view text) {
  Reader in(text);
  std::vector<Partition> comps;
  in.expect('[');
  // A bare partition "[3,1]" is accepted as level one.
  if (in.peek() != '[') {
    std::vector<int> parts;
    if (!in.accept(']')) {
      do {
        parts.push_back(static_cast<int>(in.integer()));
      } while (in.accept(','));
      in.expect(']');
    }
    if (!in.at_end()) in.fail("trailing characters");
    return Multipartition({Partition(parts)});
  }
  do {
    auto list = in.int_list();
    comps.emplace_back(std::vector<int>(list.begin(), list.end()));
  } while (in.accept(','));
  in.expect(']');
  if (!in.at_end()) in.fail("trailing characters");
  return Multipartition(std::move(comps));
}

std::pair<int, int> reading_key(const Cell& x, int level) { return {level - x.component, x.row}; }

std::vector<Multipartition> multipartitions_of(int level, int n) {
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  std::vector<Multipartition> out;
  std::vector<Partition> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(current.size()) == level - 1) {
      for (auto& p : partitions_of(remaining)) {
        current.push_back(p);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int s = remaining; s >= 0; --s) {
      for (auto& p : partitions_of(s)) {
        current.push_back(p);
        self(self, remaining - s);
        current.pop_back();
      }
    }
  };
  rec(rec, n);
  return out;
}

// ---------------------------------------------------------------------------
// Residues

Modulus Modulus::finite(int r) {
  if (r < 2) throw std::invalid_argument("modulus must be at least 2");
  Modulus m;
  m.value_ = r;
  return m;
}

long Modulus::reduce(long x) const {
  if (value_ == 0) return x;
  long y = x % value_;
  return y < 0 ? y + value_ : y;
}

std::string Modulus::to_string() const { return value_ == 0 ? "inf" : std::to_string(value_); }

Modulus parse_modulus(std::string_view text) {
  if (text == "inf" || text == "infinity") return Modulus::infinite();
  std::size_t used = 0;
  int r = 0;
  try {
    r = std::stoi(std::string(text), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse modulus '" + std::string(text) + "'");
  }
  if (used != text.size()) throw std::invalid_argument("cannot parse modulus '" + std::string(text) + "'");
  return Modulus::finite(r);
}

ResidueConfig ResidueConfig::make(Modulus modulus, const std::vector<long>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("residue vector must be nonempty");
  ResidueConfig c;
  c.modulus = modulus;
  for (long g : gamma) c.gamma.push_back(Residue{modulus.reduce(g)});
  return c;
}

std::vector<Residue> ResidueConfig::residues_for(int n) const {
  std::vector<Residue> out;
  if (modulus.is_finite()) {
    for (int i = 0; i < modulus.value(); ++i) out.push_back({i});
    return out;
  }
  // Cells of size-n shapes have residues within [min γ − n, max γ + n].
  long lo = gamma.front().value, hi = lo;
  for (auto g : gamma) {
    lo = std::min(lo, g.value);
    hi = std::max(hi, g.value);
  }
  for (long i = lo - n - 1; i <= hi + n + 1; ++i) out.push_back({i});
  return out;
}

Residue residue(const Cell& x, const ResidueConfig& config) {
  if (x.component < 1 || x.component > config.level()) throw std::out_of_range("cell component outside residue vector");
  return config.reduce(-static_cast<long>(x.row) + x.col + config.gamma[x.component - 1].value);
}

NodeSets node_sets(const Multipartition& lambda, Residue i, const ResidueConfig& config) {
  NodeSets out;
  for (const Cell& x : lambda.addable_cells()) {
    if (residue(x, config) == i) out.addable.push_back(x);
  }
  for (const Cell& x : lambda.removable_cells()) {
    if (residue(x, config) == i) out.removable.push_back(x);
  }
  return out;
}

bool is_above(const Cell& y, const Cell& x) {
  return y.component > x.component || (y.component == x.component && y.row < x.row);
}

bool is_below(const Cell& y, const Cell& x) {
  return y.component < x.component || (y.component == x.component && y.row > x.row);
}

NodeStatistics n_statistics(const Multipartition& lambda, const Cell& x, Residue i, const ResidueConfig& config) {
  const NodeSets nodes = node_sets(lambda, i, config);
  NodeStatistics s;
  for (const Cell& y : nodes.addable) {
    if (is_above(y, x)) ++s.above;
    if (is_below(y, x)) ++s.below;
  }
  for (const Cell& y : nodes.removable) {
    if (is_above(y, x)) --s.above;
    if (is_below(y, x)) --s.below;
  }
  s.weight = static_cast<int>(nodes.addable.size()) - static_cast<int>(nodes.removable.size());
  for (const Cell& y : lambda.cells()) {
    if (residue(y, config).value == 0) ++s.zero_nodes;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  for (int i : word) p = p * simple(n, i);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= degree(); ++k) inv[images_[k - 1] - 1] = k;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inversions = 0;
  for (int i = 0; i < degree(); ++i) {
    for (int j = i + 1; j < degree(); ++j) inversions += images_[i] > images_[j];
  }
  return inversions;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k) {
    if (images_[k - 1] != k) return false;
  }
  return true;
}

std::uint32_t factorial(int n) {
  std::uint32_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint32_t>(k);
  return f;
}

std::uint32_t Permutation::rank() const {
  const int n = degree();
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += images_[j] < images_[i];
    r += static_cast<std::uint32_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint32_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  for (int i = 0; i < n; ++i) {
    const std::uint32_t f = factorial(n - 1 - i);
    const std::uint32_t idx = rank / f;
    rank %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("permutation degrees differ");
  std::vector<int> img(u.images_.size());
  for (int k = 1; k <= u.degree(); ++k) img[k - 1] = v(u(k));
  return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) s += (k ? "," : "") + std::to_string(images_[k]);
  return s + "]";
}

std::vector<int> reduced_word(const Permutation& w) {
  // Strip right descents: w * s_i is shorter iff i+1 precedes i in one-line form.
  std::vector<int> reversed;
  Permutation x = w;
  const int n = w.degree();
  while (!x.is_identity()) {
    const Permutation inv = x.inverse();
    for (int i = 1; i < n; ++i) {
      if (inv(i) > inv(i + 1)) {
        reversed.push_back(i);
        x = x * Permutation::simple(n, i);
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

// ---------------------------------------------------------------------------
// Tableaux

StandardTableau::StandardTableau(Multipartition shape, std::vector<std::vector<std::vector<int>>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  const auto& comps = shape_.components();
  if (entries_.size() != comps.size()) throw std::invalid_argument("tableau shape mismatch");
  const int n = shape_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& parts = comps[c].parts();
    if (entries_[c].size() != parts.size()) throw std::invalid_argument("tableau shape mismatch");
    for (std::size_t a = 0; a < parts.size(); ++a) {
      if (static_cast<int>(entries_[c][a].size()) != parts[a]) throw std::invalid_argument("tableau shape mismatch");
      for (std::size_t b = 0; b < entries_[c][a].size(); ++b) {
        const int v = entries_[c][a][b];
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("tableau entries must be 1..n once each");
        seen[v] = true;
        if (b > 0 && entries_[c][a][b - 1] >= v) throw std::invalid_argument("tableau rows must increase");
        if (a > 0 && entries_[c][a - 1][b] >= v) throw std::invalid_argument("tableau columns must increase");
      }
    }
  }
}

int StandardTableau::entry(const Cell& x) const {
  if (!shape_.contains(x)) throw std::out_of_range("cell not in tableau");
  return entries_[shape_.level() - x.component][x.row - 1][x.col - 1];
}

Cell StandardTableau::cell_of(int k) const {
  const int m = shape_.level();
  for (int s = 0; s < m; ++s) {
    for (std::size_t a = 0; a < entries_[s].size(); ++a) {
      for (std::size_t b = 0; b < entries_[s][a].size(); ++b) {
        if (entries_[s][a][b] == k) return {m - s, static_cast<int>(a) + 1, static_cast<int>(b) + 1};
      }
    }
  }
  throw std::out_of_range("entry not in tableau");
}

StandardTableau StandardTableau::restricted_to(int k) const {
  std::vector<Partition> comps;
  auto entries = entries_;
  for (auto& comp : entries) {
    for (auto& row : comp) row.erase(std::remove_if(row.begin(), row.end(), [k](int v) { return v > k; }), row.end());
    comp.erase(std::remove_if(comp.begin(), comp.end(), [](const auto& row) { return row.empty(); }), comp.end());
    std::vector<int> parts;
    for (const auto& row : comp) parts.push_back(static_cast<int>(row.size()));
    comps.emplace_back(parts);
  }
  return StandardTableau(Multipartition(std::move(comps)), std::move(entries));
}

std::string StandardTableau::to_string() const {
  std::string s = "[";
  for (std::size_t c = 0; c < entries_.size(); ++c) {
    s += c ? ",[" : "[";
    for (std::size_t a = 0; a < entries_[c].size(); ++a) {
      s += a ? ",[" : "[";
      for (std::size_t b = 0; b < entries_[c][a].size(); ++b) s += (b ? "," : "") + std::to_string(entries_[c][a][b]);
      s += "]";
    }
    s += "]";
  }
  return s + "]";
}

namespace {

std::vector<std::vector<std::vector<int>>> empty_entries(const Multipartition& shape) {
  std::vector<std::vector<std::vector<int>>> e;
  for (const auto& p : shape.components()) {
    std::vector<std::vector<int>> comp;
    for (int part : p.parts()) comp.emplace_back(static_cast<std::size_t>(part), 0);
    e.push_back(std::move(comp));
  }
  return e;
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Multipartition& lambda) {
  // Place n in each removable cell, then fill the rest recursively.
  std::vector<StandardTableau> out;
  const int m = lambda.level();
  auto entries = empty_entries(lambda);
  auto rec = [&](auto&& self, const Multipartition& shape) -> void {
    const int k = shape.size();
    if (k == 0) {
      out.emplace_back(lambda, entries);
      return;
    }
    for (const Cell& x : shape.removable_cells()) {
      entries[m - x.component][x.row - 1][x.col - 1] = k;
      self(self, shape.with_cell_removed(x));
    }
  };
  rec(rec, lambda);
  std::sort(out.begin(), out.end());
  return out;
}

StandardTableau canonical_tableau(const Multipartition& lambda) {
  auto entries = empty_entries(lambda);
  int k = 0;
  for (auto& comp : entries) {
    for (auto& row : comp) {
      for (auto& v : row) v = ++k;
    }
  }
  return StandardTableau(lambda, std::move(entries));
}

Permutation tableau_permutation(const StandardTableau& t) {
  const StandardTableau canon = canonical_tableau(t.shape());
  const int n = t.shape().size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) img[k - 1] = t.entry(canon.cell_of(k));
  return Permutation(std::move(img));
}

std::vector<Permutation> row_stabilizer(const Multipartition& lambda) {
  const int n = lambda.size();
  // Row blocks of the canonical tableau are consecutive intervals.
  std::vector<int> block(static_cast<std::size_t>(n) + 1, 0);
  int k = 0, b = 0;
  for (const auto& p : lambda.components()) {
    for (int part : p.parts()) {
      ++b;
      for (int j = 0; j < part; ++j) block[++k] = b;
    }
  }
  std::vector<Permutation> out;
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  do {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = block[img[i - 1]] == block[i];
    if (ok) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Dominance

bool dominance_geq(const Multipartition& lambda, const Multipartition& mu) {
  if (lambda.level() != mu.level()) throw std::invalid_argument("dominance: levels differ");
  if (lambda.size() != mu.size()) throw std::invalid_argument("dominance: sizes differ");
  int above_l = 0, above_m = 0;
  for (int k = lambda.level(); k >= 1; --k) {
    const Partition& p = lambda.component(k);
    const Partition& q = mu.component(k);
    int sl = above_l, sm = above_m;
    const int rows = std::max(p.length(), q.length());
    for (int l = 1; l <= rows; ++l) {
      sl += p.row(l);
      sm += q.row(l);
      if (sl < sm) return false;
    }
    if (above_l < above_m) return false;
    above_l += p.size();
    above_m += q.size();
  }
  return true;
}

bool dominance_gt(const Multipartition& lambda, const Multipartition& mu) {
  return lambda != mu && dominance_geq(lambda, mu);
}

std::vector<Multipartition> dominance_linear_extension(std::vector<Multipartition> shapes) {
  std::sort(shapes.begin(), shapes.end());
  shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
  const std::size_t count = shapes.size();
  std::vector<int> dominators(count, 0);
  std::vector<std::vector<std::size_t>> dominated(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && dominance_gt(shapes[i], shapes[j])) {
        ++dominators[j];
        dominated[i].push_back(j);
      }
    }
  }
  std::vector<Multipartition> out;
  std::vector<bool> used(count, false);
  for (std::size_t step = 0; step < count; ++step) {
    // Largest lexicographic candidate among those with no remaining dominator.
    std::size_t pick = count;
    for (std::size_t i = count; i-- > 0;) {
      if (!used[i] && dominators[i] == 0) {
        pick = i;
        break;
      }
    }
    used[pick] = true;
    out.push_back(shapes[pick]);
    for (std::size_t j : dominated[pick]) --dominators[j];
  }
  return out;
}

std::vector<int> a_sequence(const Multipartition& lambda) {
  std::vector<int> out;
  int remaining = lambda.size();
  for (int k = 1; k <= lambda.level(); ++k) {
    remaining -= lambda.component(k).size();
    if (remaining > 0) out.push_back(remaining);
  }
  return out;
}

}  // namespace cyclohecke
