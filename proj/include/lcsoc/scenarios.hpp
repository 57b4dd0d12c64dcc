#pragma once

#include <string>
#include <vector>

#include "lcsoc/annihilator.hpp"
#include "lcsoc/socle.hpp"

namespace lcsoc {

// Cap-bounded ideal checks cannot always decide; results carry the reason.
enum class TriState { Yes, No, Inconclusive };
std::string to_string(TriState s);

struct TriCheck {
  TriState state = TriState::Inconclusive;
  std::string note;
};

// Ideal of T generated by the coefficients of f, exact up to cap.
GradedIdeal coefficient_ideal(const Hypersurface& f, int cap);

// Is I m-primary, judged degreewise up to cap?  Yes when the quotient
// dimensions vanish on the trailing band [cap - slack, cap] (slack = max
// generator degree); no for the unit ideal, or when some u-direction has no
// pure power in I up to cap while the quotient dimensions never decrease.
TriCheck is_m_primary_upto(const GradedIdeal& ideal, int cap);

// Do the coefficients of f form a system of parameters for T: exactly
// dim T distinct coefficients generating an m-primary ideal.
TriCheck check_sop(const Hypersurface& f, int cap);

struct VanishingRow {
  int ell;
  bool all_zero;
  int first_nonzero_offset;  // -1 when the scanned window is all zero
  bool certified;
};

// Mod-m reduction test: fbar keeps exactly the terms with unit coefficient,
// and the pieces vanish across the range iff fbar != 0.
struct VanishingReport {
  bool fbar_nonzero = false;
  std::vector<VanishingRow> rows;
  // the scanned range agrees with the predicted equivalence
  bool consistent = false;
};

VanishingReport vanishing_check(const Hypersurface& f, int ell_lo, int ell_hi,
                                const WindowPolicy& policy = {});

// The distinguished summand of the piece at ell(q) = q*p + n for a two-term
// f whose terms have disjoint x-supports covering all x-variables: the q+1
// elements x^{-s*g0 - t*g1 - 1} with s + t = q, ordered by s descending.
int l_summand_ell(const Hypersurface& f, int q);
std::vector<InverseMonomial> l_summand_basis(const Hypersurface& f, int q);

struct DeltaCheck {
  bool ok = false;
  GradedMap matrix;  // restriction of mult_matrix(f, ell(q)) to the L-bases
};

// Restrict multiplication by f at ell(q) to the L-bases and compare with
// the expected bidiagonal shape: first coefficient on the diagonal, second
// on the superdiagonal.
DeltaCheck delta_matrix_check(const Hypersurface& f, int q);

// No basis element at ell(q+1) outside the L-summand may hit the L-summand
// at ell(q): the linear-algebra content of the direct-summand claim.
bool complement_closure_check(const Hypersurface& f, int q);

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct VerifyOptions {
  int ell_lo = 0;
  int ell_hi = 0;
  int ell_step = 1;
  int deg_cap = 24;
  WindowPolicy window;
  int jobs = 1;
};

struct VerificationReport {
  TriCheck sop;
  TriCheck support;  // C_f m-primary, so the pieces have finite length
  std::vector<SocleReport> table;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

// Full pipeline: hypothesis checks plus the star-socle table; pass iff the
// hypotheses hold and every scanned piece has star socle total >= 1.
VerificationReport verify_theorem(const Hypersurface& f, const VerifyOptions& opts);

}  // namespace lcsoc
