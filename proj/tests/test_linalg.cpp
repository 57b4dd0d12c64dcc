#include <doctest.h>

#include <vector>

#include "lcsoc/linalg.hpp"
#include "test_util.hpp"

using namespace lcsoc;

namespace {

ScalarMatrix make_dense(const std::vector<std::vector<int>>& rows, const Field& f) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  ScalarMatrix m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, f.from_int(rows[i][j]));
  return m;
}

ScalarMatrix random_matrix(TestRng& rng, int r, int c, const Field& f, int fill_pct) {
  ScalarMatrix m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng.uniform(1, 100) <= fill_pct) m.set(i, j, f.from_int(rng.uniform(-9, 9)));
  return m;
}

ScalarMatrix as_sparse_storage(const ScalarMatrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row_sparse(i));
  return ScalarMatrix::from_sparse_rows(m.rows(), m.cols(), std::move(rows), m.field());
}

bool matrices_equal(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

std::vector<Scalar> mat_vec(const ScalarMatrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Scalar acc = m.field().zero();
    for (const auto& [j, val] : m.row_sparse(i)) acc = acc + val * v[j];
    out.push_back(acc);
  }
  return out;
}

bool all_zero(const std::vector<Scalar>& v, const Field& f) {
  for (const auto& s : v)
    if (!(s == f.zero())) return false;
  return true;
}

}  // namespace

TEST_CASE("rref on small examples") {
  Field q(0);
  auto r1 = rref(make_dense({{2, 4}, {1, 2}}, q));
  CHECK(r1.rank == 1);
  REQUIRE(r1.pivot_cols == std::vector<int>{0});
  CHECK(r1.matrix.at(0, 0) == q.one());
  CHECK(r1.matrix.at(0, 1) == q.from_int(2));
  CHECK(r1.matrix.at(1, 0) == q.zero());
  CHECK(r1.matrix.at(1, 1) == q.zero());

  auto r2 = rref(make_dense({{0, 1}, {1, 0}}, q));
  CHECK(r2.rank == 2);
  CHECK(matrices_equal(r2.matrix, ScalarMatrix::identity(2, q)));

  auto r3 = rref(make_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, q));
  CHECK(r3.rank == 2);
  CHECK(r3.pivot_cols == std::vector<int>{0, 1});
  CHECK(r3.matrix.at(0, 2) == q.from_int(-1));
  CHECK(r3.matrix.at(1, 2) == q.from_int(2));

  ScalarMatrix z(3, 2, q);
  CHECK(rref(z).rank == 0);
  CHECK(rank(ScalarMatrix::identity(4, Field(7))) == 4);
}

TEST_CASE("kernel basis") {
  Field q(0);
  auto k = kernel_basis(make_dense({{1, 1}}, q));
  REQUIRE(k.size() == 1);
  // spans (1, -1)
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!(k[0][1] == q.zero()));

  auto m = make_dense({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, q);
  auto km = kernel_basis(m);
  REQUIRE(km.size() == 1);
  CHECK(all_zero(mat_vec(m, km[0]), q));

  CHECK(kernel_basis(ScalarMatrix::identity(3, q)).empty());
}

TEST_CASE("column span membership") {
  Field q(0);
  auto m = make_dense({{1, 0}, {2, 1}}, q);
  std::vector<Scalar> v{q.from_int(3), q.from_int(7)};
  auto w = in_span(v, m);
  REQUIRE(w.in_span);
  REQUIRE(w.coefficients.size() == 2);
  CHECK(w.coefficients[0] == q.from_int(3));
  CHECK(w.coefficients[1] == q.from_int(1));

  auto tall = make_dense({{1}, {2}}, q);
  std::vector<Scalar> off{q.from_int(1), q.from_int(0)};
  CHECK(!in_span(off, tall).in_span);
  std::vector<Scalar> on{q.from_int(-2), q.from_int(-4)};
  auto w2 = in_span(on, tall);
  REQUIRE(w2.in_span);
  CHECK(w2.coefficients[0] == q.from_int(-2));
}

TEST_CASE("rref properties on random matrices") {
  for (std::int64_t p : {std::int64_t{32003}, std::int64_t{0}}) {
    Field f(p);
    TestRng rng(17 + static_cast<std::uint64_t>(p));
    for (int trial = 0; trial < 40; ++trial) {
      int r = rng.uniform(1, 7), c = rng.uniform(1, 7);
      ScalarMatrix m = random_matrix(rng, r, c, f, 60);

      auto res = rref(m);
      CHECK(res.rank == static_cast<int>(res.pivot_cols.size()));
      CHECK(res.rank == rank(m.transposed()));

      auto k = kernel_basis(m);
      CHECK(static_cast<int>(k.size()) == c - res.rank);
      for (const auto& v : k) CHECK(all_zero(mat_vec(m, v), f));

      // idempotence and pivot structure
      auto res2 = rref(res.matrix);
      CHECK(matrices_equal(res2.matrix, res.matrix));
      for (int i = 0; i < res.rank; ++i) {
        int pc = res.pivot_cols[i];
        CHECK(res.matrix.at(i, pc) == f.one());
        for (int i2 = 0; i2 < r; ++i2)
          if (i2 != i) CHECK(res.matrix.at(i2, pc) == f.zero());
      }

      // sparse and dense elimination agree entry for entry
      auto sres = rref(as_sparse_storage(m));
      CHECK(sres.rank == res.rank);
      CHECK(sres.pivot_cols == res.pivot_cols);
      CHECK(matrices_equal(sres.matrix, res.matrix));
    }
  }
}

TEST_CASE("incremental reducer matches batch elimination") {
  Field f(32003);
  TestRng rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    int dim = rng.uniform(2, 10);
    int count = rng.uniform(1, 12);
    RrefReducer red(f, dim);
    std::vector<SparseVec> added;
    for (int i = 0; i < count; ++i) {
      ScalarMatrix row = random_matrix(rng, 1, dim, f, 40);
      SparseVec v = row.row_sparse(0);
      bool grew = red.add(v);
      if (!v.empty()) added.push_back(v);
      CHECK(red.rank() == rank_of_vectors(added, f, dim));
      if (!grew) CHECK(red.contains(v));
    }
    // reductions land outside the pivot support and respect the span
    ScalarMatrix probe = random_matrix(rng, 1, dim, f, 50);
    SparseVec pv = probe.row_sparse(0);
    SparseVec reduced = red.reduce(pv);
    for (const auto& [idx, val] : reduced) {
      CHECK(!(val == f.zero()));
      CHECK(red.pivot_rows().find(idx) == red.pivot_rows().end());
    }
    RrefReducer red2 = red;
    red2.add(pv);
    CHECK(red2.contains(pv));
    CHECK(red2.rank() == red.rank() + (reduced.empty() ? 0 : 1));

    // membership agrees with column-span membership of the transpose
    if (!added.empty()) {
      ScalarMatrix cols = ScalarMatrix::from_sparse_columns(dim, added, f);
      CHECK(red.contains(pv) == in_span(to_dense(pv, dim, f), cols).in_span);
    }
  }
}

TEST_CASE("subspace intersection") {
  Field q(0);
  auto vec = [&](std::vector<int> xs) {
    std::vector<Scalar> v;
    for (int x : xs) v.push_back(q.from_int(x));
    return v;
  };
  std::vector<std::vector<Scalar>> a{vec({1, 0, 0}), vec({0, 1, 0})};
  std::vector<std::vector<Scalar>> b{vec({0, 1, 0}), vec({0, 0, 1})};
  auto inter = subspace_intersection(a, b, q, 3);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0][0] == q.zero());
  CHECK(!(inter[0][1] == q.zero()));
  CHECK(inter[0][2] == q.zero());

  Field f(101);
  TestRng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = rng.uniform(2, 8);
    auto sample = [&](int n) {
      std::vector<std::vector<Scalar>> out;
      for (int i = 0; i < n; ++i) {
        ScalarMatrix row = random_matrix(rng, 1, dim, f, 60);
        out.push_back(to_dense(row.row_sparse(0), dim, f));
      }
      return out;
    };
    auto sa = sample(rng.uniform(1, 4));
    auto sb = sample(rng.uniform(1, 4));
    auto both = subspace_intersection(sa, sb, f, dim);

    std::vector<SparseVec> sav, sbv, unionv;
    for (const auto& v : sa) sav.push_back(to_sparse(v)), unionv.push_back(to_sparse(v));
    for (const auto& v : sb) sbv.push_back(to_sparse(v)), unionv.push_back(to_sparse(v));
    int da = rank_of_vectors(sav, f, dim);
    int db = rank_of_vectors(sbv, f, dim);
    int dsum = rank_of_vectors(unionv, f, dim);
    CHECK(static_cast<int>(both.size()) == da + db - dsum);

    ScalarMatrix ma = ScalarMatrix::from_sparse_columns(dim, sav, f);
    ScalarMatrix mb = ScalarMatrix::from_sparse_columns(dim, sbv, f);
    for (const auto& v : both) {
      CHECK(in_span(v, ma).in_span);
      CHECK(in_span(v, mb).in_span);
    }
  }
}

TEST_CASE("sparse vector round trip") {
  Field f(7);
  std::vector<Scalar> v{f.zero(), f.from_int(3), f.zero(), f.from_int(6)};
  SparseVec s = to_sparse(v);
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == 1);
  CHECK(s[1].first == 3);
  auto back = to_dense(s, 4, f);
  for (int i = 0; i < 4; ++i) CHECK(back[i] == v[i]);
}
