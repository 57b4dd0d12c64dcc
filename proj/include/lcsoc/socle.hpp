#pragma once

#include <vector>

#include "lcsoc/toplc.hpp"

namespace lcsoc {

// One scanned degree of a piece H^n_I(R/fR)_{-ell}: offsets count upward
// from the lowest supported combined degree of the piece.
struct SocleCell {
  int offset;
  int coker_dim;
  int t_socle;     // dim of the part killed by every generator of m
  int star_socle;  // additionally killed by every x_i (P = m + I)
};

struct SocleReport {
  int ell = 0;
  long long free_rank = 0;  // rank of the ambient free piece, C(ell-1, n-1)
  std::vector<SocleCell> cells;
  int window_lo = 0;
  int window_hi = 0;
  // True when the scan ended with three consecutive zero cokernel
  // dimensions among degrees where the ambient component is nonzero; totals
  // are then exact rather than lower bounds.
  bool certified_zero_above = false;

  int t_socle_total() const;
  int star_socle_total() const;
};

struct WindowPolicy {
  // Highest offset ever scanned; reaching it leaves the report uncertified.
  int hard_cap = 200;
  // Override for the default window top (ell+p)*maxdeg(coeffs) + 2m; -1
  // keeps the formula.  The scan always covers the default window and then
  // widens until certification or the hard cap.
  int default_top_override = -1;
};

// Full per-degree scan of one piece: cokernel dimension, socle and *socle
// dimensions at every offset in the window.
SocleReport socle_report(const Hypersurface& f, int ell, const WindowPolicy& policy = {});

// One report per ell in {ell_lo, ell_lo+step, ...} up to ell_hi, in that
// order.  Reports are independent; jobs > 1 computes them on a worker pool
// (outputs do not depend on the schedule).
std::vector<SocleReport> star_socle_table(const Hypersurface& f, int ell_lo, int ell_hi,
                                          int ell_step = 1,
                                          const WindowPolicy& policy = {}, int jobs = 1);

}  // namespace lcsoc
