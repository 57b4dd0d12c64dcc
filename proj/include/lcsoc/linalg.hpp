#pragma once

#include <map>
#include <variant>
#include <vector>

#include "lcsoc/scalar.hpp"

namespace lcsoc {

// Sparse vector: (index, value) pairs, sorted by index, no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

// Matrix over an exact field.  Storage is dense (row-major) or sparse
// (per-row index/value lists); both representations answer entry queries
// identically, and the elimination routines pick the sparse path when the
// density is low.
class ScalarMatrix {
 public:
  ScalarMatrix(int rows, int cols, const Field& field);  // dense zero matrix
  static ScalarMatrix identity(int n, const Field& field);
  static ScalarMatrix from_sparse_rows(int rows, int cols, std::vector<SparseVec> data,
                                       const Field& field);
  // Columns given as sparse vectors of length `rows`.
  static ScalarMatrix from_sparse_columns(int rows, std::vector<SparseVec> columns,
                                          const Field& field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar at(int r, int c) const;
  void set(int r, int c, Scalar v);  // dense storage only
  bool is_sparse_storage() const { return std::holds_alternative<Sparse>(storage_); }
  SparseVec row_sparse(int r) const;
  double density() const;
  std::size_t nonzero_count() const;

  ScalarMatrix transposed() const;

 private:
  using Dense = std::vector<Scalar>;
  using Sparse = std::vector<SparseVec>;

  int rows_, cols_;
  Field field_;
  std::variant<Dense, Sparse> storage_;
};

struct RrefResult {
  ScalarMatrix matrix;          // the reduced row echelon form
  std::vector<int> pivot_cols;  // increasing
  int rank;
};

// Reduced row echelon form.  The RREF of a row space is unique, so the
// dense and sparse paths agree entry for entry.
RrefResult rref(const ScalarMatrix& m);

// Basis of the right null space; size = cols - rank.  Basis vectors are the
// canonical ones read off the RREF (one per free column, in column order).
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);

int rank(const ScalarMatrix& m);

struct SpanWitness {
  bool in_span = false;
  std::vector<Scalar> coefficients;  // columns(m) * coefficients == v when in_span
};

// Does v lie in the column span of m?  v.size() must equal m.rows().
SpanWitness in_span(const std::vector<Scalar>& v, const ScalarMatrix& m);

// Incremental reduced-row-echelon container for sparse vectors in a space
// of fixed dimension.  add() grows the span one vector at a time; reduce()
// returns the canonical representative of a vector mod the current span
// (supported on non-pivot coordinates only).  This is the hot path of the
// degreewise socle and annihilator computations.
class RrefReducer {
 public:
  RrefReducer(const Field& field, int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  SparseVec reduce(const SparseVec& v) const;
  // Returns true (and extends the span) when v was independent.
  bool add(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::map<int, int>& pivot_rows() const { return pivot_row_; }

 private:
  Field field_;
  int dim_;
  std::vector<SparseVec> rows_;   // RREF rows, in insertion order
  std::map<int, int> pivot_row_;  // pivot column -> index into rows_
};

// Rank of the span of a set of sparse vectors.
int rank_of_vectors(const std::vector<SparseVec>& vecs, const Field& field, int dim);

// Basis of the intersection of two column spans (vectors of length dim).
std::vector<std::vector<Scalar>> subspace_intersection(
    const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
    const Field& field, int dim);

SparseVec to_sparse(const std::vector<Scalar>& v);
std::vector<Scalar> to_dense(const SparseVec& v, int dim, const Field& field);

}  // namespace lcsoc
