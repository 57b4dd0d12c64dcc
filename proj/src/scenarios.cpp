#include "lcsoc/scenarios.hpp"

#include <algorithm>
#include <set>

#include "lcsoc/error.hpp"

namespace lcsoc {

std::string to_string(TriState s) {
  switch (s) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    default: return "inconclusive";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "inconclusive";
  }
}

GradedIdeal coefficient_ideal(const Hypersurface& f, int cap) {
  std::vector<CoeffPoly> gens;
  for (const auto& t : f.terms()) gens.push_back(t.coeff);
  return make_ideal(f.ring(), std::move(gens), cap);
}

TriCheck is_m_primary_upto(const GradedIdeal& ideal, int cap) {
  if (cap < 1) throw UsageError("m-primary check needs cap >= 1");
  if (cap > ideal.degree_cap)
    throw UsageError("m-primary check beyond the ideal's exact range");
  const Ring& ring = *ideal.ring;

  for (const auto& g : ideal.generators)
    if (g.degree() == 0)
      return {TriState::No, "the ideal contains a unit, so it is not proper"};

  IdealSpans spans(ideal);
  int slack = 0;
  for (const auto& g : ideal.generators) slack = std::max(slack, g.degree());

  std::vector<int> qdim(cap + 1, 0);
  for (int d = 0; d <= cap; ++d) {
    int full = static_cast<int>(ring.t_degree_basis(d).size());
    if (full == 0) continue;
    qdim[d] = full - spans.component(d).rank();
  }

  bool trailing_zero = true;
  for (int d = std::max(0, cap - slack); d <= cap; ++d)
    if (qdim[d] != 0) trailing_zero = false;
  if (trailing_zero)
    return {TriState::Yes, "quotient dimensions vanish on the trailing band [" +
                               std::to_string(std::max(0, cap - slack)) + ", " +
                               std::to_string(cap) + "]"};

  // variable-power obstruction: a u-direction whose pure powers (those lying
  // in T) all avoid the ideal up to cap
  int m = ring.num_uvars();
  int obstructed = -1;
  for (int j = 0; j < m && obstructed < 0; ++j) {
    bool has_power_in_T = false;
    bool some_power_in_ideal = false;
    for (int d = 1; d <= cap; ++d) {
      std::vector<std::int32_t> e(m, 0);
      e[j] = d;
      if (!ring.contains_monomial(e)) continue;
      has_power_in_T = true;
      CoeffMonomial mono{e};
      CoeffPoly pure = CoeffPoly::monomial(mono, ring.field().one());
      if (spans.contains(pure)) {
        some_power_in_ideal = true;
        break;
      }
    }
    if (has_power_in_T && !some_power_in_ideal) obstructed = j;
  }

  bool nondecreasing = true;
  int last = -1;
  for (int d = 0; d <= cap; ++d) {
    if (ring.t_degree_basis(d).empty()) continue;
    if (last >= 0 && qdim[d] < last) nondecreasing = false;
    last = qdim[d];
  }

  if (obstructed >= 0 && nondecreasing)
    return {TriState::No, "no power of " + ring.u_var_names()[obstructed] +
                              " lies in the ideal up to degree " + std::to_string(cap) +
                              " and the quotient dimensions never decrease"};
  std::string note = "quotient does not vanish by degree " + std::to_string(cap);
  if (obstructed >= 0)
    note += "; a variable-power obstruction exists but the quotient dimensions fluctuate";
  else
    note += " and no variable-power obstruction was found";
  return {TriState::Inconclusive, note};
}

TriCheck check_sop(const Hypersurface& f, int cap) {
  const Ring& ring = f.ring();
  std::vector<CoeffPoly> coeffs;
  for (const auto& t : f.terms()) {
    bool seen = false;
    for (const auto& c : coeffs)
      if (c == t.coeff) {
        seen = true;
        break;
      }
    if (!seen) coeffs.push_back(t.coeff);
  }
  int dim = ring.dim_T();
  if (static_cast<int>(coeffs.size()) != dim)
    return {TriState::No, "f has " + std::to_string(coeffs.size()) +
                              " distinct coefficients but dim T = " + std::to_string(dim)};

  TriCheck primary = is_m_primary_upto(coefficient_ideal(f, cap), cap);
  if (primary.state == TriState::Yes)
    return {TriState::Yes, "coefficient count matches dim T = " + std::to_string(dim) +
                               " and the coefficient ideal is m-primary (" + primary.note +
                               ")"};
  return {primary.state, "coefficient ideal: " + primary.note};
}

VanishingReport vanishing_check(const Hypersurface& f, int ell_lo, int ell_hi,
                                const WindowPolicy& policy) {
  if (ell_lo > ell_hi) throw UsageError("empty ell range");
  VanishingReport rep;
  rep.fbar_nonzero = f.has_unit_coefficient();
  bool any_nonzero = false;
  for (int ell = ell_lo; ell <= ell_hi; ++ell) {
    SocleReport sr = socle_report(f, ell, policy);
    VanishingRow row{ell, true, -1, sr.certified_zero_above};
    for (const auto& c : sr.cells)
      if (c.coker_dim > 0) {
        row.all_zero = false;
        row.first_nonzero_offset = c.offset;
        break;
      }
    any_nonzero = any_nonzero || !row.all_zero;
    rep.rows.push_back(row);
  }
  rep.consistent = rep.fbar_nonzero ? !any_nonzero : any_nonzero;
  return rep;
}

namespace {

struct TwoTermShape {
  const Hypersurface::Term* term0;
  const Hypersurface::Term* term1;
};

TwoTermShape l_summand_shape(const Hypersurface& f) {
  if (f.terms().size() != 2)
    throw ScenarioError(
        "the direct-summand operations require f to have exactly two terms");
  const auto& a = f.terms()[0];
  const auto& b = f.terms()[1];
  int n = f.ring().num_xvars();
  for (int i = 0; i < n; ++i) {
    if (a.x_exp[i] > 0 && b.x_exp[i] > 0)
      throw ScenarioError("the two terms of f must have disjoint x-supports; " +
                          f.ring().x_var_names()[i] + " appears in both");
    if (a.x_exp[i] == 0 && b.x_exp[i] == 0)
      throw ScenarioError("every x-variable must appear in one of the two terms; " +
                          f.ring().x_var_names()[i] + " appears in neither");
  }
  return {&a, &b};
}

}  // namespace

int l_summand_ell(const Hypersurface& f, int q) {
  if (q < 0) throw UsageError("q must be nonnegative");
  l_summand_shape(f);
  return q * f.p() + f.ring().num_xvars();
}

std::vector<InverseMonomial> l_summand_basis(const Hypersurface& f, int q) {
  if (q < 0) throw UsageError("q must be nonnegative");
  TwoTermShape shape = l_summand_shape(f);
  int n = f.ring().num_xvars();
  std::vector<InverseMonomial> out;
  for (int s = q; s >= 0; --s) {
    int t = q - s;
    std::vector<std::int32_t> alpha(n);
    for (int i = 0; i < n; ++i)
      alpha[i] = s * shape.term0->x_exp[i] + t * shape.term1->x_exp[i] + 1;
    out.push_back(InverseMonomial{std::move(alpha)});
  }
  return out;
}

DeltaCheck delta_matrix_check(const Hypersurface& f, int q) {
  std::vector<InverseMonomial> target = l_summand_basis(f, q);
  std::vector<InverseMonomial> source = l_summand_basis(f, q + 1);
  GradedMap full = mult_matrix(f, l_summand_ell(f, q));

  auto locate = [](const std::vector<InverseMonomial>& basis, const InverseMonomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m))
      throw UsageError("L-summand element missing from the piece basis");
    return static_cast<int>(it - basis.begin());
  };

  DeltaCheck check;
  check.matrix.rows = static_cast<int>(target.size());
  check.matrix.cols = static_cast<int>(source.size());
  check.matrix.source_basis = source;
  check.matrix.target_basis = target;
  check.matrix.entries.assign(target.size(), std::vector<CoeffPoly>(source.size()));
  check.matrix.row_degrees.resize(target.size());
  check.matrix.col_degrees.resize(source.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    int ti = locate(full.target_basis, target[i]);
    check.matrix.row_degrees[i] = full.row_degrees[ti];
    for (std::size_t j = 0; j < source.size(); ++j) {
      int sj = locate(full.source_basis, source[j]);
      check.matrix.entries[i][j] = full.entries[ti][sj];
      check.matrix.col_degrees[j] = full.col_degrees[sj];
    }
  }

  const CoeffPoly& c0 = f.terms()[0].coeff;
  const CoeffPoly& c1 = f.terms()[1].coeff;
  check.ok = true;
  for (std::size_t i = 0; i < target.size() && check.ok; ++i)
    for (std::size_t j = 0; j < source.size() && check.ok; ++j) {
      const CoeffPoly& e = check.matrix.entries[i][j];
      if (j == i)
        check.ok = e == c0;
      else if (j == i + 1)
        check.ok = e == c1;
      else
        check.ok = e.is_zero();
    }
  return check;
}

bool complement_closure_check(const Hypersurface& f, int q) {
  std::vector<InverseMonomial> target = l_summand_basis(f, q);
  std::vector<InverseMonomial> source = l_summand_basis(f, q + 1);
  int n = f.ring().num_xvars();
  std::set<std::vector<std::int32_t>> in_target, in_source;
  for (const auto& m : target) in_target.insert(m.alpha);
  for (const auto& m : source) in_source.insert(m.alpha);

  for (const auto& beta : inverse_basis(n, l_summand_ell(f, q + 1))) {
    if (in_source.count(beta.alpha)) continue;
    for (const auto& [m, c] : mult_action(f, beta).terms)
      if (!c.is_zero() && in_target.count(m.alpha)) return false;
  }
  return true;
}

VerificationReport verify_theorem(const Hypersurface& f, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.sop = check_sop(f, opts.deg_cap);
  rep.support = is_m_primary_upto(coefficient_ideal(f, opts.deg_cap), opts.deg_cap);
  rep.table = star_socle_table(f, opts.ell_lo, opts.ell_hi, opts.ell_step, opts.window,
                               opts.jobs);

  bool any_zero_certified = false;
  bool any_zero_uncertified = false;
  for (const auto& row : rep.table) {
    if (!row.certified_zero_above)
      rep.notes.push_back("ell=" + std::to_string(row.ell) +
                          ": window hit the cap before certification; totals are "
                          "lower bounds");
    if (row.star_socle_total() == 0) {
      if (row.certified_zero_above) {
        any_zero_certified = true;
        rep.notes.push_back("ell=" + std::to_string(row.ell) +
                            ": star socle is exactly zero");
      } else {
        any_zero_uncertified = true;
        rep.notes.push_back("ell=" + std::to_string(row.ell) +
                            ": no star socle found in the scanned window");
      }
    }
  }
  if (rep.sop.state != TriState::Yes)
    rep.notes.push_back("sop check: " + to_string(rep.sop.state) + " (" + rep.sop.note +
                        ")");
  if (rep.support.state != TriState::Yes)
    rep.notes.push_back("support check: " + to_string(rep.support.state) + " (" +
                        rep.support.note + ")");

  if (rep.sop.state == TriState::No || rep.support.state == TriState::No ||
      any_zero_certified) {
    rep.verdict = Verdict::Fail;
  } else if (rep.sop.state == TriState::Yes && rep.support.state == TriState::Yes &&
             !any_zero_uncertified && !rep.table.empty()) {
    rep.verdict = Verdict::Pass;
  } else {
    rep.verdict = Verdict::Inconclusive;
  }
  return rep;
}

}  // namespace lcsoc
