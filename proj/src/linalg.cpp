#include "lcsoc/linalg.hpp"

#include <algorithm>

namespace lcsoc {

namespace {
constexpr double kSparseDensityThreshold = 0.10;

// dst -= c * src (sparse merge); entries at equal indices may cancel.
SparseVec axpy_sub(const SparseVec& dst, const Scalar& c, const SparseVec& src) {
  SparseVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -(c * src[j].second));
      ++j;
    } else {
      Scalar v = dst[i].second - c * src[j].second;
      if (!v.is_zero()) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ScalarMatrix::ScalarMatrix(int rows, int cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field),
      storage_(Dense(static_cast<std::size_t>(rows) * cols, field.zero())) {}

ScalarMatrix ScalarMatrix::identity(int n, const Field& field) {
  ScalarMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

ScalarMatrix ScalarMatrix::from_sparse_rows(int rows, int cols, std::vector<SparseVec> data,
                                            const Field& field) {
  ScalarMatrix m(0, 0, field);
  m.rows_ = rows;
  m.cols_ = cols;
  data.resize(rows);
  m.storage_ = Sparse(std::move(data));
  return m;
}

ScalarMatrix ScalarMatrix::from_sparse_columns(int rows, std::vector<SparseVec> columns,
                                               const Field& field) {
  std::vector<SparseVec> r(rows);
  for (int c = 0; c < static_cast<int>(columns.size()); ++c)
    for (const auto& [i, v] : columns[c]) r[i].emplace_back(c, v);
  return from_sparse_rows(rows, static_cast<int>(columns.size()), std::move(r), field);
}

Scalar ScalarMatrix::at(int r, int c) const {
  if (const auto* d = std::get_if<Dense>(&storage_))
    return (*d)[static_cast<std::size_t>(r) * cols_ + c];
  const auto& row = std::get<Sparse>(storage_)[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return field_.zero();
}

void ScalarMatrix::set(int r, int c, Scalar v) {
  auto* d = std::get_if<Dense>(&storage_);
  if (!d) throw UsageError("set() on sparse matrix storage");
  (*d)[static_cast<std::size_t>(r) * cols_ + c] = std::move(v);
}

SparseVec ScalarMatrix::row_sparse(int r) const {
  if (const auto* s = std::get_if<Sparse>(&storage_)) return (*s)[r];
  SparseVec out;
  for (int c = 0; c < cols_; ++c) {
    Scalar v = at(r, c);
    if (!v.is_zero()) out.emplace_back(c, std::move(v));
  }
  return out;
}

std::size_t ScalarMatrix::nonzero_count() const {
  std::size_t n = 0;
  if (const auto* s = std::get_if<Sparse>(&storage_)) {
    for (const auto& row : *s) n += row.size();
  } else {
    for (const auto& v : std::get<Dense>(storage_))
      if (!v.is_zero()) ++n;
  }
  return n;
}

double ScalarMatrix::density() const {
  std::size_t cells = static_cast<std::size_t>(rows_) * cols_;
  if (cells == 0) return 0.0;
  return static_cast<double>(nonzero_count()) / static_cast<double>(cells);
}

ScalarMatrix ScalarMatrix::transposed() const {
  if (const auto* s = std::get_if<Sparse>(&storage_)) {
    std::vector<SparseVec> cols(cols_);
    for (int r = 0; r < rows_; ++r)
      for (const auto& [c, v] : (*s)[r]) cols[c].emplace_back(r, v);
    return from_sparse_rows(cols_, rows_, std::move(cols), field_);
  }
  ScalarMatrix t(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

RrefReducer::RrefReducer(const Field& field, int dim) : field_(field), dim_(dim) {}

SparseVec RrefReducer::reduce(const SparseVec& v) const {
  // RREF rows touch their own pivot plus free columns only, so one pass
  // over v is enough: pivot-column entries trigger a subtraction that can
  // introduce free-column entries but never new pivot-column entries.
  std::map<int, Scalar> acc;
  auto add_to = [&acc](int idx, Scalar val) {
    auto it = acc.find(idx);
    if (it == acc.end()) {
      acc.emplace(idx, std::move(val));
    } else {
      it->second += val;
      if (it->second.is_zero()) acc.erase(it);
    }
  };
  for (const auto& [c, val] : v) {
    auto pit = pivot_row_.find(c);
    if (pit == pivot_row_.end()) {
      add_to(c, val);
      continue;
    }
    for (const auto& [rc, rv] : rows_[pit->second]) {
      if (rc == c) continue;
      add_to(rc, -(val * rv));
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [c, val] : acc) out.emplace_back(c, std::move(val));
  return out;
}

bool RrefReducer::add(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const int pivot = r.front().first;
  Scalar inv = r.front().second.inv();
  for (auto& [c, val] : r) val *= inv;
  // keep earlier rows fully reduced against the new pivot
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == pivot) {
      Scalar c = it->second;
      row = axpy_sub(row, c, r);
    }
  }
  pivot_row_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

namespace {

RrefResult rref_dense(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  if (a.is_sparse_storage()) {
    ScalarMatrix d(m.rows(), m.cols(), m.field());
    for (int r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row_sparse(r)) d.set(r, c, v);
    a = d;
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < a.cols(); ++j) {
        Scalar t = a.at(r, j);
        a.set(r, j, a.at(pivot, j));
        a.set(pivot, j, std::move(t));
      }
    }
    Scalar inv = a.at(r, c).inv();
    for (int j = c; j < a.cols(); ++j) a.set(r, j, a.at(r, j) * inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.set(i, j, a.at(i, j) - f * a.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(a), std::move(pivots), r};
}

RrefResult rref_sparse(const ScalarMatrix& m) {
  RrefReducer red(m.field(), m.cols());
  for (int r = 0; r < m.rows(); ++r) red.add(m.row_sparse(r));
  // canonical order: rows sorted by pivot column
  std::vector<SparseVec> rows;
  std::vector<int> pivots;
  rows.reserve(red.rank());
  for (const auto& [col, idx] : red.pivot_rows()) {
    pivots.push_back(col);
    rows.push_back(red.rows()[idx]);
  }
  int rank = static_cast<int>(rows.size());
  return RrefResult{
      ScalarMatrix::from_sparse_rows(m.rows(), m.cols(), std::move(rows), m.field()),
      std::move(pivots), rank};
}

}  // namespace

RrefResult rref(const ScalarMatrix& m) {
  if (m.is_sparse_storage() || m.density() < kSparseDensityThreshold)
    return rref_sparse(m);
  return rref_dense(m);
}

int rank(const ScalarMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  const Field& f = m.field();
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.matrix.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SpanWitness in_span(const std::vector<Scalar>& v, const ScalarMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw UsageError("in_span: vector length " + std::to_string(v.size()) +
                     " does not match matrix rows " + std::to_string(m.rows()));
  const Field& f = m.field();
  // augmented [m | v], solved by RREF
  ScalarMatrix aug(m.rows(), m.cols() + 1, f);
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& [c, val] : m.row_sparse(r)) aug.set(r, c, val);
    aug.set(r, m.cols(), v[r]);
  }
  RrefResult rr = rref(aug);
  SpanWitness w;
  for (int c : rr.pivot_cols)
    if (c == m.cols()) return w;  // inconsistent
  w.in_span = true;
  w.coefficients.assign(m.cols(), f.zero());
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    w.coefficients[rr.pivot_cols[i]] = rr.matrix.at(static_cast<int>(i), m.cols());
  return w;
}

int rank_of_vectors(const std::vector<SparseVec>& vecs, const Field& field, int dim) {
  RrefReducer red(field, dim);
  for (const auto& v : vecs) red.add(v);
  return red.rank();
}

std::vector<std::vector<Scalar>> subspace_intersection(
    const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
    const Field& field, int dim) {
  if (a.empty() || b.empty()) return {};
  const int ka = static_cast<int>(a.size());
  const int kb = static_cast<int>(b.size());
  ScalarMatrix m(dim, ka + kb, field);
  for (int j = 0; j < ka; ++j)
    for (int i = 0; i < dim; ++i) m.set(i, j, a[j][i]);
  for (int j = 0; j < kb; ++j)
    for (int i = 0; i < dim; ++i) m.set(i, ka + j, b[j][i]);
  // kernel vectors (x; y) satisfy A x = -B y, so A x spans the intersection
  RrefReducer red(field, dim);
  for (const auto& k : kernel_basis(m)) {
    std::vector<Scalar> w(dim, field.zero());
    for (int j = 0; j < ka; ++j)
      for (int i = 0; i < dim; ++i) w[i] += a[j][i] * k[j];
    red.add(to_sparse(w));
  }
  std::vector<std::vector<Scalar>> basis;
  for (const auto& [col, idx] : red.pivot_rows())
    basis.push_back(to_dense(red.rows()[idx], dim, field));
  return basis;
}

SparseVec to_sparse(const std::vector<Scalar>& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Scalar> to_dense(const SparseVec& v, int dim, const Field& field) {
  std::vector<Scalar> out(dim, field.zero());
  for (const auto& [i, val] : v) out[i] = val;
  return out;
}

}  // namespace lcsoc
