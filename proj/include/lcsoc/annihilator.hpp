#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcsoc/toplc.hpp"

namespace lcsoc {

// Homogeneous ideal of T given by generators, with a degree cap up to which
// degreewise membership and comparison are exact.  Generators are kept
// monic, deduplicated, and canonically ordered.
struct GradedIdeal {
  const Ring* ring = nullptr;
  std::vector<CoeffPoly> generators;
  int degree_cap = 0;
};

GradedIdeal make_ideal(const Ring& ring, std::vector<CoeffPoly> generators, int cap);

// (u_1..u_m)^k for the polynomial backend: all degree-k monomials.
GradedIdeal maximal_ideal_power(const Ring& ring, int k, int cap);

// Lazy degreewise spans of an ideal's components, as canonical reducers
// over the T-degree bases.
class IdealSpans {
 public:
  explicit IdealSpans(const GradedIdeal& ideal);

  const RrefReducer& component(int d);
  bool contains(const CoeffPoly& p);  // p homogeneous of degree <= cap

 private:
  const GradedIdeal* ideal_;
  std::map<int, RrefReducer> comps_;
};

struct IdealComparison {
  bool equal = true;
  int first_difference_degree = -1;
  CoeffPoly witness;  // lies in exactly one of the two ideals
  std::string witness_side;
};

// Degreewise span comparison for every degree <= cap.
IdealComparison ideal_equal_upto(const GradedIdeal& a, const GradedIdeal& b, int cap);

// The n x (n+1) matrix with u on the diagonal and v on the superdiagonal
// (first two u-variables of a polynomial-backend ring).
GradedMap build_An(const Ring& ring, int n);

// Ideal of maximal minors, by memoized cofactor expansion over all column
// subsets.
GradedIdeal maximal_minors(const Ring& ring, const GradedMap& a, int cap);

// Graded annihilator of coker(a) up to the cap: all t in T_d, d <= cap,
// with t * (every target basis vector) inside the column image, returned as
// a minimal homogeneous generating set.
GradedIdeal ann_coker_upto(const Ring& ring, const GradedMap& a, int cap);

// Least degree of a nonzero element of the intersection of ann coker(A_n)
// over n <= N, scanned up to cap; -1 when the intersection has no nonzero
// element of degree <= cap.
int family_intersection_mindeg(const Ring& ring, int n_max, int cap);

struct AnnFamilyRow {
  int n;
  bool ann_equals_power;    // ann coker(A_n) == (u,v)^n degreewise
  bool minors_equal;        // maximal_minors(A_n) == (u,v)^n degreewise
  int mindeg_intersection;  // min degree of the intersection over k <= n; -1 if none
};

std::vector<AnnFamilyRow> ann_family_experiment(const Ring& ring, int n_max, int cap);

}  // namespace lcsoc
