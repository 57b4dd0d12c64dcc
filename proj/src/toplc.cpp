#include "lcsoc/toplc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "lcsoc/error.hpp"
#include "lcsoc/expr.hpp"

namespace lcsoc {

int InverseMonomial::ell() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

int InverseMonomial::weighted_degree(const std::vector<std::int32_t>& weights) const {
  int s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += weights[i] * alpha[i];
  return s;
}

std::string InverseMonomial::to_string(const std::vector<std::string>& x_names) const {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!out.empty()) out += "*";
    out += x_names[i] + "^-" + std::to_string(alpha[i]);
  }
  return out;
}

std::vector<InverseMonomial> inverse_basis(int n, int ell) {
  std::vector<InverseMonomial> out;
  if (n < 1 || ell < n) return out;
  for (auto& e : exponents_of_degree(n, ell - n)) {
    for (auto& x : e) x += 1;
    out.push_back(InverseMonomial{std::move(e)});
  }
  return out;
}

long long inverse_basis_size(int n, int ell) {
  if (n < 1 || ell < n) return 0;
  long long r = 1;
  for (int i = 0; i < n - 1; ++i) r = r * (ell - 1 - i) / (i + 1);
  return r;
}

namespace {

// Lex-smallest positive weight vector (entries <= 64) solving the
// homogeneity constraints sum_i a_i w_i = b, one constraint per term beyond
// the first; empty when none exists.
std::vector<std::int32_t> search_weights(
    const std::vector<std::vector<int>>& coeffs, const std::vector<int>& rhs, int n) {
  constexpr int kMaxWeight = 64;
  std::vector<std::int32_t> w(n, 0);
  std::function<bool(int)> go = [&](int k) -> bool {
    if (k == n) {
      for (std::size_t c = 0; c < coeffs.size(); ++c) {
        int s = 0;
        for (int i = 0; i < n; ++i) s += coeffs[c][i] * w[i];
        if (s != rhs[c]) return false;
      }
      return true;
    }
    for (int v = 1; v <= kMaxWeight; ++v) {
      w[k] = v;
      bool feasible = true;
      for (std::size_t c = 0; c < coeffs.size() && feasible; ++c) {
        int fixed = 0;
        for (int i = 0; i <= k; ++i) fixed += coeffs[c][i] * w[i];
        int lo = 0, hi = 0;
        for (int i = k + 1; i < n; ++i) {
          int a = coeffs[c][i];
          lo += a > 0 ? a : a * kMaxWeight;
          hi += a > 0 ? a * kMaxWeight : a;
        }
        int need = rhs[c] - fixed;
        if (need < lo || need > hi) feasible = false;
      }
      if (feasible && go(k + 1)) return true;
    }
    w[k] = 0;
    return false;
  };
  if (go(0)) return w;
  return {};
}

}  // namespace

Hypersurface Hypersurface::from_terms(const Ring& ring, std::vector<Term> terms) {
  const int n = ring.num_xvars();

  // merge duplicate x-exponents, drop zero coefficients
  std::map<std::vector<std::int32_t>, CoeffPoly> grouped;
  for (auto& t : terms) {
    if (static_cast<int>(t.x_exp.size()) != n)
      throw UsageError("x-exponent arity does not match the declared x-variables");
    for (auto e : t.x_exp)
      if (e < 0) throw UsageError("x-exponents must be nonnegative");
    auto [it, inserted] = grouped.emplace(t.x_exp, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }

  Hypersurface f;
  f.ring_ = &ring;
  for (auto& [e, c] : grouped) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous())
      throw ScenarioError(
          "a coefficient of f is not homogeneous in T, so f admits no combined "
          "grading; filtration-mode analysis of such inputs is not supported");
    for (const auto& [mono, s] : c.terms())
      if (!ring.contains_monomial(mono.e))
        throw ConfigError("coefficient monomial '" +
                          CoeffPoly::monomial(mono, ring.field().one())
                              .to_string(ring.u_var_names()) +
                          "' lies outside the coefficient ring");
    f.terms_.push_back(Term{std::move(c), e});
  }
  if (f.terms_.empty()) throw ScenarioError("f must be nonzero");

  f.p_ = std::accumulate(f.terms_[0].x_exp.begin(), f.terms_[0].x_exp.end(), 0);
  for (const auto& t : f.terms_) {
    int deg = std::accumulate(t.x_exp.begin(), t.x_exp.end(), 0);
    if (deg != f.p_)
      throw ScenarioError(
          "the terms of f have different total x-degrees, so f is not "
          "x-homogeneous; filtration-mode analysis of such inputs is not "
          "supported");
  }

  std::sort(f.terms_.begin(), f.terms_.end(),
            [](const Term& a, const Term& b) { return a.x_exp > b.x_exp; });

  auto combined = [&](const Term& t, const std::vector<std::int32_t>& w) {
    int s = t.coeff.degree();
    for (int i = 0; i < n; ++i) s += w[i] * t.x_exp[i];
    return s;
  };

  if (ring.x_weights_specified()) {
    f.weights_ = ring.x_weights();
    int d0 = combined(f.terms_[0], f.weights_);
    for (const auto& t : f.terms_)
      if (combined(t, f.weights_) != d0)
        throw ConfigError(
            "the declared x-weights do not make f homogeneous in the combined "
            "grading");
  } else {
    std::vector<std::vector<int>> coeffs;
    std::vector<int> rhs;
    for (std::size_t j = 1; j < f.terms_.size(); ++j) {
      std::vector<int> a(n);
      for (int i = 0; i < n; ++i) a[i] = f.terms_[0].x_exp[i] - f.terms_[j].x_exp[i];
      coeffs.push_back(std::move(a));
      rhs.push_back(f.terms_[j].coeff.degree() - f.terms_[0].coeff.degree());
    }
    f.weights_ = search_weights(coeffs, rhs, n);
    if (f.weights_.empty())
      throw ScenarioError(
          "no positive weight vector with entries up to 64 makes f homogeneous "
          "in the combined grading; filtration-mode analysis of such inputs is "
          "not supported");
  }
  f.combined_degree_ = combined(f.terms_[0], f.weights_);
  return f;
}

Hypersurface Hypersurface::from_expression(const Ring& ring, const std::string& text) {
  const int m = ring.num_uvars();
  std::vector<std::string> all_vars = ring.u_var_names();
  all_vars.insert(all_vars.end(), ring.x_var_names().begin(), ring.x_var_names().end());

  auto parsed = parse_polynomial(text, all_vars, ring.field());
  std::map<std::vector<std::int32_t>, std::vector<CoeffPoly::Term>> grouped;
  for (auto& [e, c] : parsed) {
    std::vector<std::int32_t> u_part(e.begin(), e.begin() + m);
    std::vector<std::int32_t> x_part(e.begin() + m, e.end());
    grouped[std::move(x_part)].emplace_back(CoeffMonomial{std::move(u_part)}, c);
  }
  std::vector<Term> terms;
  for (auto& [x, coeff_terms] : grouped) {
    terms.push_back(Term{CoeffPoly(std::move(coeff_terms)), x});
  }
  return from_terms(ring, std::move(terms));
}

int Hypersurface::max_coeff_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.coeff.degree());
  return d;
}

bool Hypersurface::has_unit_coefficient() const {
  for (const auto& t : terms_)
    if (t.coeff.constant_term() != nullptr) return true;
  return false;
}

std::string Hypersurface::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string c = t.coeff.to_string(ring_->u_var_names());
    bool needs_parens = t.coeff.terms().size() > 1;
    std::string xs;
    for (std::size_t i = 0; i < t.x_exp.size(); ++i) {
      if (t.x_exp[i] == 0) continue;
      if (!xs.empty()) xs += "*";
      xs += ring_->x_var_names()[i];
      if (t.x_exp[i] > 1) xs += "^" + std::to_string(t.x_exp[i]);
    }
    if (xs.empty()) {
      os << c;
    } else if (c == "1") {
      os << xs;
    } else {
      os << (needs_parens ? "(" + c + ")" : c) << "*" << xs;
    }
  }
  return os.str();
}

TCombination mult_action(const Hypersurface& f, const InverseMonomial& b) {
  TCombination out;
  for (const auto& t : f.terms()) {
    std::vector<std::int32_t> a(b.alpha.size());
    bool survives = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = b.alpha[i] - t.x_exp[i];
      if (a[i] < 1) {
        survives = false;
        break;
      }
    }
    if (survives) out.terms.emplace_back(InverseMonomial{std::move(a)}, t.coeff);
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

GradedMap mult_matrix(const Hypersurface& f, int ell) {
  const int n = f.ring().num_xvars();
  GradedMap map;
  map.target_basis = inverse_basis(n, ell);
  map.source_basis = inverse_basis(n, ell + f.p());
  map.rows = static_cast<int>(map.target_basis.size());
  map.cols = static_cast<int>(map.source_basis.size());
  map.entries.assign(map.rows, std::vector<CoeffPoly>(map.cols));
  for (int i = 0; i < map.rows; ++i)
    map.row_degrees.push_back(-map.target_basis[i].weighted_degree(f.weights()));
  for (int j = 0; j < map.cols; ++j)
    map.col_degrees.push_back(f.combined_degree() -
                              map.source_basis[j].weighted_degree(f.weights()));
  for (int j = 0; j < map.cols; ++j) {
    TCombination image = mult_action(f, map.source_basis[j]);
    for (auto& [mono, coeff] : image.terms) {
      auto it = std::lower_bound(map.target_basis.begin(), map.target_basis.end(), mono);
      int i = static_cast<int>(it - map.target_basis.begin());
      map.entries[i][j] = coeff;
    }
  }
  return map;
}

PieceContext::PieceContext(const Hypersurface& f, int ell)
    : f_(&f), ell_(ell), basis_(inverse_basis(f.ring().num_xvars(), ell)) {
  alpha_weight_.reserve(basis_.size());
  int w_max = 0;
  for (const auto& b : basis_) {
    int w = b.weighted_degree(f.weights());
    alpha_weight_.push_back(w);
    w_max = std::max(w_max, w);
  }
  d_min_ = -w_max;

  auto source = inverse_basis(f.ring().num_xvars(), ell + f.p());
  for (const auto& beta : source) {
    Column col;
    col.weight = beta.weighted_degree(f.weights());
    for (const auto& t : f.terms()) {
      std::vector<std::int32_t> a(beta.alpha.size());
      bool survives = true;
      for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = beta.alpha[i] - t.x_exp[i];
        if (a[i] < 1) {
          survives = false;
          break;
        }
      }
      if (!survives) continue;
      InverseMonomial target{std::move(a)};
      auto it = std::lower_bound(basis_.begin(), basis_.end(), target);
      col.survivors.emplace_back(static_cast<int>(it - basis_.begin()), &t.coeff);
    }
    if (!col.survivors.empty()) columns_.push_back(std::move(col));
  }
}

long long PieceContext::free_rank() const {
  return static_cast<long long>(basis_.size());
}

int PieceContext::target_dim(int D) const {
  int dim = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    int t = D + alpha_weight_[i];
    if (t < 0) continue;
    dim += static_cast<int>(f_->ring().t_degree_basis(t).size());
  }
  return dim;
}

const PieceContext::Component& PieceContext::component(int D) {
  auto it = components_.find(D);
  if (it != components_.end()) return *it->second;

  const Ring& ring = f_->ring();
  auto comp = std::make_unique<Component>(
      Component{0, {}, {}, RrefReducer(ring.field(), 0)});
  comp->block_offset.assign(basis_.size(), -1);
  comp->block_tdeg.assign(basis_.size(), -1);
  int dim = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    int t = D + alpha_weight_[i];
    if (t < 0) continue;
    int sz = static_cast<int>(ring.t_degree_basis(t).size());
    if (sz == 0) continue;
    comp->block_offset[i] = dim;
    comp->block_tdeg[i] = t;
    dim += sz;
  }
  comp->dim = dim;
  comp->image = RrefReducer(ring.field(), dim);

  if (dim > 0) {
    const int comb = f_->combined_degree();
    for (const auto& col : columns_) {
      int delta = D - (comb - col.weight);
      if (delta < 0) continue;
      for (const auto& mu : ring.t_degree_basis(delta)) {
        std::map<int, Scalar> acc;
        for (const auto& [row, coeff] : col.survivors) {
          for (const auto& [mono, s] : coeff->terms()) {
            int idx = comp->block_offset[row] + ring.basis_index(mu * mono);
            auto [pos, inserted] = acc.emplace(idx, s);
            if (!inserted) pos->second = pos->second + s;
          }
        }
        SparseVec v;
        v.reserve(acc.size());
        for (auto& [idx, s] : acc)
          if (!s.is_zero()) v.emplace_back(idx, s);
        if (!v.empty()) comp->image.add(v);
      }
    }
  }

  auto [pos, inserted] = components_.emplace(D, std::move(comp));
  (void)inserted;
  return *pos->second;
}

int PieceContext::coker_dim(int D) {
  const Component& c = component(D);
  return c.dim - c.image.rank();
}

int coker_component_dim(const Hypersurface& f, int ell, int offset) {
  if (offset < 0) throw UsageError("degree offset must be nonnegative");
  PieceContext ctx(f, ell);
  if (ctx.empty()) return 0;
  return ctx.coker_dim(ctx.d_min() + offset);
}

}  // namespace lcsoc
