#include "lcsoc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace lcsoc {

int CoeffMonomial::degree() const {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool CoeffMonomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; });
}

CoeffMonomial CoeffMonomial::operator*(const CoeffMonomial& rhs) const {
  CoeffMonomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += rhs.e[i];
  return r;
}

CoeffPoly::CoeffPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  // merge equal monomials, drop zeros
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  }
  // a zero may have been merged away in the middle; sweep once more
  std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(out);
}

CoeffPoly CoeffPoly::monomial(CoeffMonomial m, Scalar c) {
  if (c.is_zero()) return CoeffPoly();
  CoeffPoly p;
  p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

int CoeffPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool CoeffPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.first.degree() == d; });
}

CoeffPoly CoeffPoly::operator+(const CoeffPoly& rhs) const {
  std::vector<Term> merged = terms_;
  merged.insert(merged.end(), rhs.terms_.begin(), rhs.terms_.end());
  return CoeffPoly(std::move(merged));
}

CoeffPoly CoeffPoly::operator-(const CoeffPoly& rhs) const { return *this + (-rhs); }

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& rhs) const {
  std::vector<Term> prod;
  prod.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) prod.emplace_back(ma * mb, ca * cb);
  return CoeffPoly(std::move(prod));
}

CoeffPoly CoeffPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return CoeffPoly();
  CoeffPoly r = *this;
  for (auto& [m, coef] : r.terms_) coef *= c;
  return r;
}

CoeffPoly CoeffPoly::times_monomial(const CoeffMonomial& m) const {
  CoeffPoly r = *this;
  for (auto& [mono, c] : r.terms_) mono = mono * m;
  return r;
}

const Scalar* CoeffPoly::constant_term() const {
  // degree-0 monomial sorts last under descending lex
  if (!terms_.empty() && terms_.back().first.is_one()) return &terms_.back().second;
  return nullptr;
}

std::string CoeffPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += var_names[i];
      if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
    }
    if (factors.empty()) {
      os << c.to_string();
    } else if (c.is_one()) {
      os << factors;
    } else {
      os << c.to_string() << "*" << factors;
    }
  }
  return os.str();
}

namespace {

void enumerate_exponents(int vars, int d, std::vector<std::int32_t>& cur,
                         std::vector<std::vector<std::int32_t>>& out) {
  if (vars == 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  // descending lex: largest first-exponent first
  for (int e = d; e >= 0; --e) {
    cur.push_back(e);
    enumerate_exponents(vars - 1, d - e, cur, out);
    cur.pop_back();
  }
}

// Lattice rank of integer vectors, via fraction-free elimination.
int lattice_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t rpos = 0;
  for (std::size_t c = 0; c < cols && rpos < rows.size(); ++c) {
    std::size_t pivot = rpos;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rpos], rows[pivot]);
    for (std::size_t r = rpos + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      std::int64_t a = rows[rpos][c], b = rows[r][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] * a - rows[rpos][j] * b;
    }
    ++rpos;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<std::int32_t>> exponents_of_degree(int vars, int d) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> cur;
  if (vars >= 1 && d >= 0) enumerate_exponents(vars, d, cur, out);
  return out;
}

Ring::Ring(std::int64_t characteristic, RingBackend backend,
           std::vector<std::string> u_var_names,
           std::vector<std::vector<std::int32_t>> semigroup_generators,
           std::vector<std::string> x_var_names, std::vector<std::int32_t> x_weights)
    : field_(characteristic),
      backend_(backend),
      u_var_names_(std::move(u_var_names)),
      semigroup_generators_(std::move(semigroup_generators)),
      x_var_names_(std::move(x_var_names)),
      x_weights_(std::move(x_weights)) {
  if (u_var_names_.empty()) throw ConfigError("need at least one u-variable");
  if (x_var_names_.empty()) throw ConfigError("need at least one x-variable");
  {
    std::set<std::string> names;
    auto check_name = [&](const std::string& s) {
      bool ok = !s.empty() &&
                (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
      for (char c : s)
        ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) throw ConfigError("invalid variable name '" + s + "'");
      if (!names.insert(s).second)
        throw ConfigError("duplicate variable name '" + s + "'");
    };
    for (const auto& s : u_var_names_) check_name(s);
    for (const auto& s : x_var_names_) check_name(s);
  }
  x_weights_specified_ = !x_weights_.empty();
  if (x_weights_.empty()) x_weights_.assign(x_var_names_.size(), 1);
  if (x_weights_.size() != x_var_names_.size())
    throw ConfigError("x_weights length must match the number of x-variables");
  for (auto w : x_weights_)
    if (w <= 0) throw ConfigError("x-weights must be positive");

  const std::size_t m = u_var_names_.size();
  if (backend_ == RingBackend::Semigroup) {
    if (semigroup_generators_.empty())
      throw ConfigError("semigroup backend needs at least one generator");
    std::set<std::vector<std::int32_t>> seen;
    for (const auto& g : semigroup_generators_) {
      if (g.size() != m)
        throw ConfigError("semigroup generator arity does not match u-variables");
      if (std::all_of(g.begin(), g.end(), [](std::int32_t x) { return x == 0; }))
        throw ConfigError("semigroup generators must be nonzero");
      if (std::any_of(g.begin(), g.end(), [](std::int32_t x) { return x < 0; }))
        throw ConfigError("semigroup generators must be nonnegative");
      if (!seen.insert(g).second)
        throw ConfigError("semigroup generators must be pairwise distinct");
    }
  } else if (!semigroup_generators_.empty()) {
    throw ConfigError("generators are only meaningful for the semigroup backend");
  }

  if (backend_ == RingBackend::Poly) {
    dim_T_ = static_cast<int>(m);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::int32_t> e(m, 0);
      e[j] = 1;
      m_generators_.push_back(CoeffMonomial{std::move(e)});
    }
  } else {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& g : semigroup_generators_)
      rows.emplace_back(g.begin(), g.end());
    dim_T_ = lattice_rank(std::move(rows));
    for (const auto& g : semigroup_generators_) m_generators_.push_back(CoeffMonomial{g});
    std::sort(m_generators_.begin(), m_generators_.end());
  }
}

bool Ring::member_unlocked(const std::vector<std::int32_t>& e) const {
  if (std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x == 0; })) return true;
  auto it = member_memo_.find(e);
  if (it != member_memo_.end()) return it->second;
  bool ok = false;
  for (const auto& g : semigroup_generators_) {
    bool fits = true;
    std::vector<std::int32_t> rest(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      rest[i] = e[i] - g[i];
      if (rest[i] < 0) {
        fits = false;
        break;
      }
    }
    if (fits && member_unlocked(rest)) {
      ok = true;
      break;
    }
  }
  member_memo_.emplace(e, ok);
  return ok;
}

bool Ring::semigroup_member(const std::vector<std::int32_t>& e) const {
  if (backend_ != RingBackend::Semigroup)
    throw UsageError("semigroup_member called on the polynomial backend");
  if (e.size() != u_var_names_.size())
    throw UsageError("exponent vector arity does not match u-variables");
  for (auto x : e)
    if (x < 0) return false;
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return member_unlocked(e);
}

bool Ring::contains_monomial(const std::vector<std::int32_t>& e) const {
  if (backend_ == RingBackend::Poly) {
    return std::all_of(e.begin(), e.end(), [](std::int32_t x) { return x >= 0; });
  }
  return semigroup_member(e);
}

const std::vector<CoeffMonomial>& Ring::t_degree_basis(int d) const {
  if (d < 0) throw UsageError("t_degree_basis needs d >= 0");
  std::lock_guard<std::mutex> lock(memo_mutex_);
  auto it = basis_memo_.find(d);
  if (it != basis_memo_.end()) return *it->second;
  auto basis = std::make_unique<std::vector<CoeffMonomial>>();
  for (auto& e : exponents_of_degree(num_uvars(), d)) {
    if (backend_ == RingBackend::Semigroup && !member_unlocked(e)) continue;
    basis->push_back(CoeffMonomial{std::move(e)});
  }
  auto [pos, inserted] = basis_memo_.emplace(d, std::move(basis));
  (void)inserted;
  auto& index = index_memo_[d];
  for (std::size_t i = 0; i < pos->second->size(); ++i)
    index.emplace((*pos->second)[i].e, static_cast<int>(i));
  return *pos->second;
}

int Ring::basis_index(const CoeffMonomial& m) const {
  int d = m.degree();
  t_degree_basis(d);  // populate
  std::lock_guard<std::mutex> lock(memo_mutex_);
  const auto& index = index_memo_.at(d);
  auto it = index.find(m.e);
  return it == index.end() ? -1 : it->second;
}

CoeffMonomial Ring::monomial(std::vector<std::int32_t> e) const {
  if (e.size() != u_var_names_.size())
    throw UsageError("exponent vector arity does not match u-variables");
  if (!contains_monomial(e))
    throw UsageError("monomial is not an element of the coefficient ring");
  return CoeffMonomial{std::move(e)};
}

CoeffMonomial Ring::unit_monomial() const {
  return CoeffMonomial{std::vector<std::int32_t>(u_var_names_.size(), 0)};
}

}  // namespace lcsoc
