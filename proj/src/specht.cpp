#include "cyclohecke/specht.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cyclohecke {

namespace {

int canonical_index(const std::vector<StandardTableau>& tableaux, const Multipartition& lambda) {
  const StandardTableau t0 = canonical_tableau(lambda);
  const auto it = std::find(tableaux.begin(), tableaux.end(), t0);
  return static_cast<int>(it - tableaux.begin());
}

// Coefficient list of x over the labels of one shape, after checking that x
// lies in the span of shapes ⊵ λ.
struct ShapeCoordinates {
  std::vector<Scalar> values;  // s * T + t
};

ShapeCoordinates project(const CellularTable& table, int shape, const HeckeElement& x, const char* what) {
  const std::vector<Scalar> c = table.expand(x);
  const auto& lambda = table.shapes()[shape];
  const std::size_t T = table.datum(shape).tableaux.size();
  ShapeCoordinates out;
  out.values.resize(T * T, table.algebra()->zero());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const CellLabel& label = table.labels()[k];
    if (label.shape == shape) {
      out.values[label.s * T + label.t] = c[k];
    } else if (!dominance_gt(table.shapes()[label.shape], lambda)) {
      throw CellularViolation(std::string(what) + ": coordinate outside the ideal filtration at shape " +
                              table.shapes()[label.shape].to_string() + " for " + lambda.to_string());
    }
  }
  return out;
}

}  // namespace

HeckeElement u_a(const AlgebraPtr& algebra, const Multipartition& lambda) {
  const auto& v = algebra->params().v;
  SparseVector x = unit(algebra).terms();
  const std::vector<int> a = a_sequence(lambda);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (int i = 1; i <= a[k]; ++i) {
      SparseVector y = algebra->right_murphy(x, i);
      for (const auto& [id, c] : x) {
        auto [it, inserted] = y.try_emplace(id, -(c * v[k]));
        if (!inserted) {
          it->second -= c * v[k];
          if (it->second.is_zero()) y.erase(it);
        }
      }
      x = std::move(y);
    }
  }
  return HeckeElement(algebra, std::move(x));
}

HeckeElement x_lambda(const AlgebraPtr& algebra, const Multipartition& lambda) {
  HeckeElement sum(algebra);
  for (const Permutation& w : row_stabilizer(lambda)) sum += a_w(algebra, w);
  return sum;
}

HeckeElement m_lambda(const AlgebraPtr& algebra, const Multipartition& lambda) {
  const HeckeElement u = u_a(algebra, lambda), x = x_lambda(algebra, lambda);
  HeckeElement m = u * x;
  if (!(m == x * u)) throw CellularViolation("u_a and x_lambda do not commute for " + lambda.to_string());
  return m;
}

CellularDatum cellular_datum(const AlgebraPtr& algebra, const Multipartition& lambda) {
  if (lambda.level() != algebra->level() || lambda.size() != algebra->rank()) {
    throw std::invalid_argument("multipartition does not match the algebra");
  }
  CellularDatum d;
  d.lambda = lambda;
  d.u_a = u_a(algebra, lambda);
  d.x_lambda = x_lambda(algebra, lambda);
  d.m_lambda = d.u_a * d.x_lambda;
  if (!(d.m_lambda == d.x_lambda * d.u_a)) {
    throw CellularViolation("u_a and x_lambda do not commute for " + lambda.to_string());
  }
  d.tableaux = standard_tableaux(lambda);
  std::vector<Permutation> dt;
  for (const auto& t : d.tableaux) dt.push_back(tableau_permutation(t));
  std::vector<SparseVector> right;  // m_λ a_{d(t)}
  for (const auto& w : dt) right.push_back(algebra->right_multiply_perm(d.m_lambda.terms(), w));
  for (const auto& s : dt) {
    const Permutation sinv = s.inverse();
    for (const auto& r : right) d.m_st.emplace_back(algebra, algebra->left_multiply_perm(sinv, r));
  }
  const int c = canonical_index(d.tableaux, lambda);
  if (!(d.element(c, c) == d.m_lambda)) throw CellularViolation("m_{t^λ t^λ} differs from m_λ");
  return d;
}

// ---------------------------------------------------------------------------

CellularTable::CellularTable(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  shapes_ = dominance_linear_extension(multipartitions_of(algebra_->level(), algebra_->rank()));
  for (std::size_t k = 0; k < shapes_.size(); ++k) {
    data_.push_back(cellular_datum(algebra_, shapes_[k]));
    offsets_.push_back(labels_.size());
    const int T = static_cast<int>(data_.back().tableaux.size());
    for (int s = 0; s < T; ++s) {
      for (int t = 0; t < T; ++t) labels_.push_back({static_cast<int>(k), s, t});
    }
  }
  if (labels_.size() != algebra_->dimension()) {
    throw CellularViolation("number of cellular labels differs from the dimension");
  }
}

int CellularTable::shape_index(const Multipartition& lambda) const {
  const auto it = std::find(shapes_.begin(), shapes_.end(), lambda);
  if (it == shapes_.end()) throw std::invalid_argument("unknown shape " + lambda.to_string());
  return static_cast<int>(it - shapes_.begin());
}

std::size_t CellularTable::label_index(int shape, int s, int t) const {
  const std::size_t T = data_[shape].tableaux.size();
  return offsets_[shape] + static_cast<std::size_t>(s) * T + static_cast<std::size_t>(t);
}

void CellularTable::factorize() const {
  std::call_once(factor_once_, [&] {
    for (const auto& label : labels_) {
      if (!echelon_.add(data_[label.shape].element(label.s, label.t).terms())) {
        singular_ = true;
        return;
      }
    }
  });
}

bool CellularTable::invertible() const {
  factorize();
  return !singular_;
}

bool CellularTable::invertible_mod_p() const {
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      const ModularReduction reduce(algebra_->params().conductor(), attempt);
      SparseEchelon<ModP> echelon;
      for (const auto& label : labels_) {
        SparseColumn<ModP> column;
        for (const auto& [id, c] : data_[label.shape].element(label.s, label.t).terms()) {
          const ModP value = reduce(c);
          if (!value.is_zero()) column.emplace(id, value);
        }
        if (!echelon.add(std::move(column))) return false;
      }
      return true;
    } catch (const std::domain_error&) {
      // p divided a denominator; try the next prime.
    }
  }
  return false;
}

std::vector<Scalar> CellularTable::expand(const HeckeElement& x) const {
  if (x.algebra() != algebra_) throw std::invalid_argument("element from a different algebra");
  factorize();
  if (singular_) throw CellularViolation("cellular matrix is singular");
  auto y = echelon_.solve(x.terms(), algebra_->zero());
  if (!y) throw CellularViolation("element outside the cellular span");
  return *y;
}

std::vector<Scalar> expand_cellular(const HeckeElement& x, const CellularTable& table) { return table.expand(x); }

// ---------------------------------------------------------------------------

SpechtModule specht_module(const CellularTable& table, const Multipartition& lambda) {
  const int shape = table.shape_index(lambda);
  const CellularDatum& d = table.datum(shape);
  const auto& A = table.algebra();
  const int T = static_cast<int>(d.tableaux.size());
  const int c = canonical_index(d.tableaux, lambda);
  SpechtModule module{lambda, d.tableaux, {}};
  for (int i = 1; i <= A->rank(); ++i) {
    ScalarMatrix g = ScalarMatrix::Constant(T, T, A->zero());
    for (int t = 0; t < T; ++t) {
      const HeckeElement x = right_generator(d.element(c, t), i);
      const ShapeCoordinates coords = project(table, shape, x, "Specht action");
      for (int s = 0; s < T; ++s) {
        for (int u = 0; u < T; ++u) {
          const Scalar& value = coords.values[s * T + u];
          if (value.is_zero()) continue;
          if (s != c) throw CellularViolation("Specht action leaves the top row for " + lambda.to_string());
          g(t, u) = value;
        }
      }
    }
    module.generators.push_back(std::move(g));
  }
  return module;
}

ScalarMatrix gram(const CellularTable& table, const Multipartition& lambda) {
  const int shape = table.shape_index(lambda);
  const CellularDatum& d = table.datum(shape);
  const auto& A = table.algebra();
  const int T = static_cast<int>(d.tableaux.size());
  const int c = canonical_index(d.tableaux, lambda);
  std::vector<Permutation> dt;
  for (const auto& t : d.tableaux) dt.push_back(tableau_permutation(t));
  const auto stabilizer = row_stabilizer(lambda);
  ScalarMatrix g = ScalarMatrix::Constant(T, T, A->zero());
  for (int s = 0; s < T; ++s) {
    const SparseVector ys = d.element(c, s).terms();  // m_λ a_{d(s)}
    for (int t = 0; t < T; ++t) {
      // · a_{d(t)}^* · u_a · x_λ
      SparseVector z = A->right_multiply_perm(ys, dt[t].inverse());
      z = A->product(z, d.u_a.terms());
      SparseVector sum;
      for (const auto& w : stabilizer) {
        for (const auto& [id, value] : A->right_multiply_perm(z, w)) {
          auto [it, inserted] = sum.try_emplace(id, value);
          if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) sum.erase(it);
          }
        }
      }
      const ShapeCoordinates coords = project(table, shape, HeckeElement(A, std::move(sum)), "Gram");
      for (int k = 0; k < T * T; ++k) {
        if (k != c * T + c && !coords.values[k].is_zero()) {
          throw CellularViolation("Gram residue is not a multiple of m_lambda for " + lambda.to_string());
        }
      }
      g(t, s) = coords.values[c * T + c];
    }
  }
  return g;
}

int dim_simple(const CellularTable& table, const Multipartition& lambda) { return rank<Scalar>(gram(table, lambda)); }

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& work) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Multipartition> simple_labels(const CellularTable& table, int threads) {
  const auto& shapes = table.shapes();
  std::vector<int> ranks(shapes.size());
  parallel_for(shapes.size(), threads, [&](std::size_t k) { ranks[k] = dim_simple(table, shapes[k]); });
  std::vector<Multipartition> out;
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    if (ranks[k] > 0) out.push_back(shapes[k]);
  }
  return out;
}

ScalarMatrix gram(const Multipartition& lambda, const HeckeParams& params) {
  return gram(CellularTable(make_algebra(params)), lambda);
}

int dim_simple(const Multipartition& lambda, const HeckeParams& params) {
  return dim_simple(CellularTable(make_algebra(params)), lambda);
}

std::vector<Multipartition> simple_labels(const HeckeParams& params, int threads) {
  return simple_labels(CellularTable(make_algebra(params)), threads);
}

}  // namespace cyclohecke
