#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcsoc/linalg.hpp"
#include "lcsoc/ring.hpp"

namespace lcsoc {

// Basis element x^{-alpha} of the graded piece H^n_I(R)_{-ell}, alpha_i >= 1.
struct InverseMonomial {
  std::vector<std::int32_t> alpha;

  int ell() const;
  int weighted_degree(const std::vector<std::int32_t>& weights) const;
  bool operator==(const InverseMonomial& rhs) const { return alpha == rhs.alpha; }
  bool operator!=(const InverseMonomial& rhs) const { return alpha != rhs.alpha; }
  // canonical order: descending lexicographic on alpha
  bool operator<(const InverseMonomial& rhs) const { return alpha > rhs.alpha; }
  std::string to_string(const std::vector<std::string>& x_names) const;
};

// All alpha with alpha_i >= 1 summing to ell, in canonical order; empty when
// ell < n.  Size C(ell-1, n-1).
std::vector<InverseMonomial> inverse_basis(int n, int ell);
long long inverse_basis_size(int n, int ell);

// An x-homogeneous hypersurface f = sum c_j x^{gamma_j} with T-homogeneous
// coefficients, carrying the weight vector that makes it homogeneous in the
// combined grading deg_T - sum w_i alpha_i.  Weights come from the ring when
// declared there, otherwise from a bounded search (entries up to 64);
// inputs admitting no such weights are refused.
class Hypersurface {
 public:
  struct Term {
    CoeffPoly coeff;
    std::vector<std::int32_t> x_exp;
  };

  static Hypersurface from_expression(const Ring& ring, const std::string& text);
  static Hypersurface from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  int p() const { return p_; }
  const std::vector<std::int32_t>& weights() const { return weights_; }
  // deg_T(c_j) + sum w_i (gamma_j)_i, the same for every term
  int combined_degree() const { return combined_degree_; }
  int max_coeff_degree() const;
  // true iff the image of f in (T/m)[x_1..x_n] is nonzero
  bool has_unit_coefficient() const;
  std::string to_string() const;

 private:
  Hypersurface() = default;

  const Ring* ring_ = nullptr;
  std::vector<Term> terms_;  // descending lex on x_exp
  int p_ = 0;
  std::vector<std::int32_t> weights_;
  int combined_degree_ = 0;
};

// f * x^{-alpha} as a T-combination of inverse monomials one x-degree down;
// summands whose exponent would leave the basis (some component >= 0) die.
struct TCombination {
  std::vector<std::pair<InverseMonomial, CoeffPoly>> terms;  // canonical order
};
TCombination mult_action(const Hypersurface& f, const InverseMonomial& b);

// Matrix over T between free modules with based (or anonymous) source and
// target.  Entry (i,j) is homogeneous of T-degree col_degrees[j] -
// row_degrees[i] whenever nonzero.
struct GradedMap {
  int rows = 0, cols = 0;
  std::vector<InverseMonomial> source_basis, target_basis;  // empty = anonymous
  std::vector<std::vector<CoeffPoly>> entries;              // rows x cols
  std::vector<int> row_degrees, col_degrees;
};

// The map H^n_I(R)_{-ell-p} -> H^n_I(R)_{-ell} given by multiplication by f;
// its cokernel presents H^n_I(R/fR)_{-ell}.
GradedMap mult_matrix(const Hypersurface& f, int ell);

// Degreewise model of the piece H^n_I(R/fR)_{-ell} in the combined grading.
// component(D) exposes the basis layout of the free part at combined degree
// D (blocks indexed by alpha, each a T-degree basis) and the canonical
// reduced row form of the image of multiplication by f.  Components are
// memoized; instances are not thread-safe, use one per worker.
class PieceContext {
 public:
  PieceContext(const Hypersurface& f, int ell);

  const Hypersurface& f() const { return *f_; }
  int ell() const { return ell_; }
  bool empty() const { return basis_.empty(); }
  long long free_rank() const;
  // lowest combined degree with a nonzero component of the ambient free module
  int d_min() const { return d_min_; }

  struct Component {
    int dim = 0;
    std::vector<int> block_offset;  // per alpha index; -1 when empty
    std::vector<int> block_tdeg;    // T-degree of the block's monomial basis
    RrefReducer image;
  };

  const Component& component(int combined_degree);
  int target_dim(int combined_degree) const;
  int coker_dim(int combined_degree);

  const std::vector<InverseMonomial>& basis() const { return basis_; }
  const std::vector<int>& alpha_weights() const { return alpha_weight_; }

 private:
  const Hypersurface* f_;
  int ell_;
  std::vector<InverseMonomial> basis_;
  std::vector<int> alpha_weight_;  // sum w_i alpha_i per basis element
  int d_min_ = 0;

  struct Column {
    int weight;  // sum w_i beta_i of the source exponent
    std::vector<std::pair<int, const CoeffPoly*>> survivors;  // (target row, coeff)
  };
  std::vector<Column> columns_;

  std::map<int, std::unique_ptr<Component>> components_;
};

// Dimension of the degree component of coker(mult_matrix(f, ell)) at offset
// d >= 0 above the lowest supported combined degree of the piece.
int coker_component_dim(const Hypersurface& f, int ell, int offset);

}  // namespace lcsoc
