#include "cyclohecke/multiseg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cyclohecke {

namespace {

using Series = std::vector<mpz_class>;

Series multiply(const Series& a, const Series& b) {
  Series c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Number of distinct start values: r, or the window when r = ∞.
int start_count(const Modulus& r, int window) {
  if (r.is_finite()) return r.value();
  if (window < 1) throw std::invalid_argument("r = inf needs a positive start window");
  return window;
}

// Σ_k (number of multisets of size k over `kinds` letters) x^{kL}, optionally
// excluding the multisets that use every letter.
Series length_class(int max_n, int length, int kinds, bool exclude_full) {
  Series s(static_cast<std::size_t>(max_n) + 1, 0);
  for (int k = 0; k * length <= max_n; ++k) {
    mpz_class all, full = 0;
    mpz_bin_uiui(all.get_mpz_t(), static_cast<unsigned long>(k + kinds - 1), static_cast<unsigned long>(k));
    if (exclude_full && k >= kinds) {
      mpz_bin_uiui(full.get_mpz_t(), static_cast<unsigned long>(k - 1), static_cast<unsigned long>(k - kinds));
    }
    s[static_cast<std::size_t>(k * length)] = all - full;
  }
  return s;
}

Series series(int max_n, const Modulus& r, int window, bool aperiodic) {
  if (max_n < 0) throw std::invalid_argument("negative size");
  const int kinds = start_count(r, window);
  Series acc(static_cast<std::size_t>(max_n) + 1, 0);
  acc[0] = 1;
  for (int length = 1; length <= max_n; ++length) {
    acc = multiply(acc, length_class(max_n, length, kinds, aperiodic && r.is_finite()));
  }
  return acc;
}

}  // namespace

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (s.length < 1) throw std::invalid_argument("segment length must be positive");
  }
  std::sort(segments_.begin(), segments_.end());
}

int Multisegment::size() const {
  int total = 0;
  for (const auto& s : segments_) total += s.length;
  return total;
}

std::string Multisegment::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (k) out += ",";
    out += "[" + std::to_string(segments_[k].start) + ";" + std::to_string(segments_[k].length) + "]";
  }
  return out + "]";
}

bool is_aperiodic(const Multisegment& ms, const Modulus& r) {
  if (!r.is_finite()) return true;
  std::map<int, std::set<long>> starts;
  for (const auto& s : ms.segments()) starts[s.length].insert(r.reduce(s.start));
  for (const auto& [length, set] : starts) {
    if (static_cast<int>(set.size()) == r.value()) return false;
  }
  return true;
}

std::vector<Multisegment> enumerate_multisegments(int n, const Modulus& r, int window) {
  if (n < 0) throw std::invalid_argument("negative size");
  const int kinds = start_count(r, window);
  std::vector<Segment> all;
  for (int length = n; length >= 1; --length) {
    for (int start = 0; start < kinds; ++start) all.push_back({start, length});
  }
  std::vector<Multisegment> out;
  std::vector<Segment> current;
  // Segments are chosen with non-decreasing index into `all`.
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int left) {
    if (left == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t k = from; k < all.size(); ++k) {
      if (all[k].length > left) continue;
      current.push_back(all[k]);
      grow(k, left - all[k].length);
      current.pop_back();
    }
  };
  grow(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> multisegment_series(int max_n, const Modulus& r, int window) {
  return series(max_n, r, window, false);
}

std::vector<mpz_class> aperiodic_series(int max_n, const Modulus& r, int window) {
  return series(max_n, r, window, true);
}

mpz_class count_multisegments(int n, const Modulus& r, int window) { return multisegment_series(n, r, window)[n]; }

mpz_class count_aperiodic(int n, const Modulus& r, int window) { return aperiodic_series(n, r, window)[n]; }

mpz_class count_family(int n, const Modulus& r, int labels, int window) {
  if (labels < 1) throw std::invalid_argument("need at least one label");
  const Series one = aperiodic_series(n, r, window);
  Series acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int k = 0; k < labels; ++k) acc = multiply(acc, one);
  return acc[n];
}

}  // namespace cyclohecke
