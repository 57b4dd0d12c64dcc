#include "lcsoc/annihilator.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "lcsoc/error.hpp"

namespace lcsoc {

namespace {

// Deterministic order on polynomials: degree, then term sequence.
bool poly_less(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    if (ta[i].first != tb[i].first) return ta[i].first < tb[i].first;
    if (!(ta[i].second == tb[i].second))
      return ta[i].second.to_string() < tb[i].second.to_string();
  }
  return ta.size() < tb.size();
}

CoeffPoly make_monic(const CoeffPoly& p) {
  const Scalar& lead = p.terms().front().second;
  if (lead.is_one()) return p;
  return p.scaled(lead.inv());
}

SparseVec poly_to_component_vec(const Ring& ring, const CoeffPoly& p) {
  std::map<int, Scalar> acc;
  for (const auto& [mono, s] : p.terms()) {
    int idx = ring.basis_index(mono);
    auto [it, inserted] = acc.emplace(idx, s);
    if (!inserted) it->second = it->second + s;
  }
  SparseVec v;
  for (auto& [idx, s] : acc)
    if (!s.is_zero()) v.emplace_back(idx, s);
  return v;
}

CoeffPoly component_vec_to_poly(const Ring& ring, const SparseVec& v, int d) {
  const auto& basis = ring.t_degree_basis(d);
  std::vector<CoeffPoly::Term> terms;
  for (const auto& [idx, s] : v) terms.emplace_back(basis[idx], s);
  return CoeffPoly(std::move(terms));
}

}  // namespace

GradedIdeal make_ideal(const Ring& ring, std::vector<CoeffPoly> generators, int cap) {
  std::vector<CoeffPoly> gens;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw UsageError("graded ideal generators must be homogeneous");
    gens.push_back(make_monic(g));
  }
  std::sort(gens.begin(), gens.end(), poly_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GradedIdeal{&ring, std::move(gens), cap};
}

GradedIdeal maximal_ideal_power(const Ring& ring, int k, int cap) {
  if (ring.backend() != RingBackend::Poly)
    throw UsageError("maximal_ideal_power is defined for the polynomial backend");
  if (k < 0) throw UsageError("ideal power must be nonnegative");
  std::vector<CoeffPoly> gens;
  for (const auto& m : ring.t_degree_basis(k))
    gens.push_back(CoeffPoly::monomial(m, ring.field().one()));
  return make_ideal(ring, std::move(gens), cap);
}

IdealSpans::IdealSpans(const GradedIdeal& ideal) : ideal_(&ideal) {}

const RrefReducer& IdealSpans::component(int d) {
  auto it = comps_.find(d);
  if (it != comps_.end()) return it->second;
  const Ring& ring = *ideal_->ring;
  RrefReducer red(ring.field(), static_cast<int>(ring.t_degree_basis(d).size()));
  for (const auto& g : ideal_->generators) {
    int dg = g.degree();
    if (dg > d) continue;
    for (const auto& mu : ring.t_degree_basis(d - dg))
      red.add(poly_to_component_vec(ring, g.times_monomial(mu)));
  }
  return comps_.emplace(d, std::move(red)).first->second;
}

bool IdealSpans::contains(const CoeffPoly& p) {
  if (p.is_zero()) return true;
  if (!p.is_homogeneous())
    throw UsageError("degreewise membership needs a homogeneous element");
  int d = p.degree();
  if (d > ideal_->degree_cap)
    throw UsageError("membership query beyond the ideal's degree cap");
  return component(d).contains(poly_to_component_vec(*ideal_->ring, p));
}

IdealComparison ideal_equal_upto(const GradedIdeal& a, const GradedIdeal& b, int cap) {
  if (a.ring != b.ring) throw UsageError("ideal comparison needs a common ring");
  if (cap > a.degree_cap || cap > b.degree_cap)
    throw UsageError("comparison cap exceeds an ideal's exact range");
  const Ring& ring = *a.ring;
  IdealSpans sa(a), sb(b);
  for (int d = 0; d <= cap; ++d) {
    const RrefReducer& ra = sa.component(d);
    const RrefReducer& rb = sb.component(d);
    for (const auto& row : ra.rows())
      if (!rb.contains(row))
        return {false, d, make_monic(component_vec_to_poly(ring, row, d)),
                "first ideal only"};
    for (const auto& row : rb.rows())
      if (!ra.contains(row))
        return {false, d, make_monic(component_vec_to_poly(ring, row, d)),
                "second ideal only"};
  }
  return {};
}

GradedMap build_An(const Ring& ring, int n) {
  if (n < 1) throw UsageError("the matrix family starts at n = 1");
  if (ring.backend() != RingBackend::Poly || ring.num_uvars() < 2)
    throw UsageError("the matrix family lives over a polynomial ring in u, v");
  const Field& field = ring.field();
  auto var = [&](int i) {
    std::vector<std::int32_t> e(ring.num_uvars(), 0);
    e[i] = 1;
    return CoeffPoly::monomial(CoeffMonomial{std::move(e)}, field.one());
  };
  GradedMap a;
  a.rows = n;
  a.cols = n + 1;
  a.entries.assign(n, std::vector<CoeffPoly>(n + 1));
  for (int i = 0; i < n; ++i) {
    a.entries[i][i] = var(0);
    a.entries[i][i + 1] = var(1);
  }
  a.row_degrees.assign(n, 0);
  a.col_degrees.assign(n + 1, 1);
  return a;
}

namespace {

class MinorExpander {
 public:
  MinorExpander(const GradedMap& a, const Ring& ring) : a_(&a), ring_(&ring) {}

  // Determinant of the submatrix on rows [row..rows) and the columns in
  // mask, by expansion along the top row.
  const CoeffPoly& det(int row, std::uint32_t mask) {
    std::uint64_t key = (static_cast<std::uint64_t>(row) << 32) | mask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    CoeffPoly result;
    if (row == a_->rows) {
      result = CoeffPoly::monomial(ring_->unit_monomial(), ring_->field().one());
    } else {
      int sign = 1;
      for (std::uint32_t m = mask; m;) {
        std::uint32_t low = m & (~m + 1);
        int j = std::countr_zero(low);
        const CoeffPoly& e = a_->entries[row][j];
        if (!e.is_zero()) {
          CoeffPoly sub = e * det(row + 1, mask ^ low);
          result = sign > 0 ? result + sub : result - sub;
        }
        sign = -sign;
        m ^= low;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const GradedMap* a_;
  const Ring* ring_;
  std::unordered_map<std::uint64_t, CoeffPoly> memo_;
};

}  // namespace

GradedIdeal maximal_minors(const Ring& ring, const GradedMap& a, int cap) {
  if (a.rows > a.cols)
    throw UsageError("maximal minors need at least as many columns as rows");
  if (a.cols > 30) throw UsageError("matrix too wide for minor expansion");
  MinorExpander expander(a, ring);
  std::vector<CoeffPoly> gens;
  // all size-(rows) column subsets, in increasing bitmask order
  std::uint32_t mask = a.rows == 0 ? 0 : (1u << a.rows) - 1;
  if (a.rows == 0) {
    gens.push_back(CoeffPoly::monomial(ring.unit_monomial(), ring.field().one()));
  } else {
    while (mask < (1u << a.cols)) {
      gens.push_back(expander.det(0, mask));
      // next bitmask with the same popcount
      std::uint32_t c = mask & (~mask + 1), r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return make_ideal(ring, std::move(gens), cap);
}

namespace {

// Degreewise image data of a graded map between free modules with
// row_degrees/col_degrees: components of the target at module degree D have
// basis pairs (row i, T-monomial of degree D - row_degrees[i]).
class MapImage {
 public:
  MapImage(const Ring& ring, const GradedMap& a) : ring_(&ring), a_(&a) {}

  struct Component {
    int dim = 0;
    std::vector<int> block_offset;  // per row; -1 when empty
    std::vector<int> block_tdeg;
    RrefReducer image;
  };

  const Component& component(int degree) {
    auto it = comps_.find(degree);
    if (it != comps_.end()) return it->second;
    const Ring& ring = *ring_;
    Component comp{0, {}, {}, RrefReducer(ring.field(), 0)};
    comp.block_offset.assign(a_->rows, -1);
    comp.block_tdeg.assign(a_->rows, -1);
    for (int i = 0; i < a_->rows; ++i) {
      int t = degree - a_->row_degrees[i];
      if (t < 0) continue;
      int sz = static_cast<int>(ring.t_degree_basis(t).size());
      if (sz == 0) continue;
      comp.block_offset[i] = comp.dim;
      comp.block_tdeg[i] = t;
      comp.dim += sz;
    }
    comp.image = RrefReducer(ring.field(), comp.dim);
    if (comp.dim > 0) {
      for (int j = 0; j < a_->cols; ++j) {
        int delta = degree - a_->col_degrees[j];
        if (delta < 0) continue;
        for (const auto& mu : ring.t_degree_basis(delta)) {
          std::map<int, Scalar> acc;
          for (int i = 0; i < a_->rows; ++i) {
            const CoeffPoly& e = a_->entries[i][j];
            if (e.is_zero() || comp.block_offset[i] < 0) continue;
            for (const auto& [mono, s] : e.terms()) {
              int idx = comp.block_offset[i] + ring.basis_index(mu * mono);
              auto [pos, inserted] = acc.emplace(idx, s);
              if (!inserted) pos->second = pos->second + s;
            }
          }
          SparseVec v;
          for (auto& [idx, s] : acc)
            if (!s.is_zero()) v.emplace_back(idx, s);
          if (!v.empty()) comp.image.add(v);
        }
      }
    }
    return comps_.emplace(degree, std::move(comp)).first->second;
  }

 private:
  const Ring* ring_;
  const GradedMap* a_;
  std::map<int, Component> comps_;
};

}  // namespace

GradedIdeal ann_coker_upto(const Ring& ring, const GradedMap& a, int cap) {
  if (cap < 1) throw UsageError("annihilator cap must be at least 1");
  const Field& field = ring.field();
  const Scalar one = field.one();
  MapImage image(ring, a);

  std::vector<CoeffPoly> gens;

  for (int d = 0; d <= cap; ++d) {
    const auto& t_basis = ring.t_degree_basis(d);
    if (t_basis.empty()) continue;

    // span of the already-found generators inside T_d
    RrefReducer span(field, static_cast<int>(t_basis.size()));
    for (const auto& g : gens) {
      int dg = g.degree();
      if (dg > d) continue;
      for (const auto& mu : ring.t_degree_basis(d - dg))
        span.add(poly_to_component_vec(ring, g.times_monomial(mu)));
    }

    // stacked conditions: t * e_i must land in the image for every row i
    std::vector<const MapImage::Component*> comps;
    std::vector<int> offsets;
    int total = 0;
    for (int i = 0; i < a.rows; ++i) {
      comps.push_back(&image.component(d + a.row_degrees[i]));
      offsets.push_back(total);
      total += comps.back()->dim;
    }
    std::vector<SparseVec> stacked_cols;
    for (const auto& mu : t_basis) {
      SparseVec stacked;
      for (int i = 0; i < a.rows; ++i) {
        int off = comps[i]->block_offset[i];
        if (off < 0) continue;  // zero component: condition vacuous
        int idx = off + ring.basis_index(mu);
        for (const auto& [j, val] : comps[i]->image.reduce({{idx, one}}))
          stacked.emplace_back(offsets[i] + j, val);
      }
      stacked_cols.push_back(std::move(stacked));
    }
    ScalarMatrix cols =
        ScalarMatrix::from_sparse_columns(total, std::move(stacked_cols), field);
    for (const auto& v : kernel_basis(cols)) {
      SparseVec sv = to_sparse(v);
      if (span.contains(sv)) continue;
      span.add(sv);
      gens.push_back(make_monic(component_vec_to_poly(ring, sv, d)));
    }
  }
  return make_ideal(ring, std::move(gens), cap);
}

int family_intersection_mindeg(const Ring& ring, int n_max, int cap) {
  if (n_max < 1) throw UsageError("the matrix family starts at n = 1");
  if (cap < n_max)
    throw UsageError("intersection cap must be at least the largest family index");
  auto rows = ann_family_experiment(ring, n_max, cap);
  return rows.back().mindeg_intersection;
}

std::vector<AnnFamilyRow> ann_family_experiment(const Ring& ring, int n_max, int cap) {
  if (n_max < 1) throw UsageError("the matrix family starts at n = 1");
  if (cap < 1) throw UsageError("cap must be at least 1");
  const Field& field = ring.field();

  std::vector<AnnFamilyRow> out;
  // per-degree bases of the running intersection, as dense vectors
  std::map<int, std::vector<std::vector<Scalar>>> inter;

  for (int n = 1; n <= n_max; ++n) {
    GradedMap a = build_An(ring, n);
    GradedIdeal ann = ann_coker_upto(ring, a, cap);
    GradedIdeal minors = maximal_minors(ring, a, cap);
    GradedIdeal power = maximal_ideal_power(ring, n, cap);
    bool ann_eq = n <= cap ? ideal_equal_upto(ann, power, cap).equal : false;
    bool minors_eq = n <= cap ? ideal_equal_upto(minors, power, cap).equal : false;

    IdealSpans spans(ann);
    int mindeg = -1;
    for (int d = 0; d <= cap; ++d) {
      int dim_t = static_cast<int>(ring.t_degree_basis(d).size());
      if (dim_t == 0) continue;
      const RrefReducer& red = spans.component(d);
      std::vector<std::vector<Scalar>> ann_basis;
      for (const auto& row : red.rows()) ann_basis.push_back(to_dense(row, dim_t, field));
      if (n == 1) {
        inter[d] = std::move(ann_basis);
      } else {
        inter[d] = subspace_intersection(inter[d], ann_basis, field, dim_t);
      }
      if (mindeg < 0 && !inter[d].empty()) mindeg = d;
    }
    out.push_back({n, ann_eq, minors_eq, mindeg});
  }
  return out;
}

}  // namespace lcsoc
