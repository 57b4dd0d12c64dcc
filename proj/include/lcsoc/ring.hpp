#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lcsoc/scalar.hpp"

namespace lcsoc {

enum class RingBackend { Poly, Semigroup };

// Monomial of the coefficient ring T: exponent vector over the ambient
// u-variables.  Degree is the exponent sum (the internal T-grading).
struct CoeffMonomial {
  std::vector<std::int32_t> e;

  int degree() const;
  bool is_one() const;
  CoeffMonomial operator*(const CoeffMonomial& rhs) const;
  bool operator==(const CoeffMonomial& rhs) const { return e == rhs.e; }
  bool operator!=(const CoeffMonomial& rhs) const { return e != rhs.e; }
  // Canonical term order: descending lexicographic on exponent vectors,
  // so `a < b` means a comes after b in serialized output.
  bool operator<(const CoeffMonomial& rhs) const { return e > rhs.e; }
};

// Element of T as a sparse term list, kept sorted in the canonical order
// with no zero coefficients.
class CoeffPoly {
 public:
  using Term = std::pair<CoeffMonomial, Scalar>;

  CoeffPoly() = default;
  explicit CoeffPoly(std::vector<Term> terms);  // normalizes

  static CoeffPoly zero() { return CoeffPoly(); }
  static CoeffPoly monomial(CoeffMonomial m, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Total degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  CoeffPoly operator+(const CoeffPoly& rhs) const;
  CoeffPoly operator-(const CoeffPoly& rhs) const;
  CoeffPoly operator*(const CoeffPoly& rhs) const;
  CoeffPoly operator-() const;
  CoeffPoly scaled(const Scalar& c) const;
  CoeffPoly times_monomial(const CoeffMonomial& m) const;

  bool operator==(const CoeffPoly& rhs) const { return terms_ == rhs.terms_; }
  bool operator!=(const CoeffPoly& rhs) const { return !(*this == rhs); }

  // Coefficient of the degree-0 monomial (the image mod the irrelevant
  // ideal of T); nullptr when absent.
  const Scalar* constant_term() const;

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  std::vector<Term> terms_;
};

// The coefficient ring T over a fixed field, with two backends:
//   Poly       T = k[u_1..u_m]
//   Semigroup  T = monomial subalgebra of k[u_1..u_m] generated by the
//              given exponent vectors (affine semigroup ring)
// plus the x-variable block of R = T[x_1..x_n] and its grading weights.
// Immutable after construction; basis enumeration and semigroup membership
// are memoized behind a mutex (idempotent population).
class Ring {
 public:
  Ring(std::int64_t characteristic, RingBackend backend,
       std::vector<std::string> u_var_names,
       std::vector<std::vector<std::int32_t>> semigroup_generators,
       std::vector<std::string> x_var_names, std::vector<std::int32_t> x_weights);

  const Field& field() const { return field_; }
  std::int64_t characteristic() const { return field_.characteristic(); }
  RingBackend backend() const { return backend_; }

  int num_uvars() const { return static_cast<int>(u_var_names_.size()); }
  int num_xvars() const { return static_cast<int>(x_var_names_.size()); }
  const std::vector<std::string>& u_var_names() const { return u_var_names_; }
  const std::vector<std::string>& x_var_names() const { return x_var_names_; }
  const std::vector<std::vector<std::int32_t>>& semigroup_generators() const {
    return semigroup_generators_;
  }
  const std::vector<std::int32_t>& x_weights() const { return x_weights_; }
  // False when the weights were defaulted (empty input): callers may then
  // search for a weight vector making a given f combined-homogeneous.
  bool x_weights_specified() const { return x_weights_specified_; }

  // Krull dimension of T: m for the polynomial backend, lattice rank of the
  // generators for the semigroup backend.
  int dim_T() const { return dim_T_; }

  // Monomials that generate the graded maximal ideal of T: the u-variables
  // for the polynomial backend, the semigroup generators otherwise.
  const std::vector<CoeffMonomial>& maximal_ideal_generators() const {
    return m_generators_;
  }

  // True iff e lies in T (always true for the polynomial backend; exact
  // dynamic programming over the generators for the semigroup backend).
  bool contains_monomial(const std::vector<std::int32_t>& e) const;

  // Decides membership in the semigroup; UsageError on the Poly backend.
  bool semigroup_member(const std::vector<std::int32_t>& e) const;

  // All monomials of T of internal degree d, in canonical (descending lex)
  // order; complete and duplicate-free.
  const std::vector<CoeffMonomial>& t_degree_basis(int d) const;

  // Index of m in t_degree_basis(degree of m); -1 if absent.
  int basis_index(const CoeffMonomial& m) const;

  // Validated monomial constructor (semigroup membership enforced).
  CoeffMonomial monomial(std::vector<std::int32_t> e) const;
  CoeffMonomial unit_monomial() const;

 private:
  Field field_;
  RingBackend backend_;
  std::vector<std::string> u_var_names_;
  std::vector<std::vector<std::int32_t>> semigroup_generators_;
  std::vector<std::string> x_var_names_;
  std::vector<std::int32_t> x_weights_;
  bool x_weights_specified_ = false;
  std::vector<CoeffMonomial> m_generators_;
  int dim_T_;

  mutable std::mutex memo_mutex_;
  mutable std::map<std::vector<std::int32_t>, bool> member_memo_;
  mutable std::map<int, std::unique_ptr<std::vector<CoeffMonomial>>> basis_memo_;
  mutable std::map<int, std::map<std::vector<std::int32_t>, int>> index_memo_;

  bool member_unlocked(const std::vector<std::int32_t>& e) const;
};

// All exponent vectors over `vars` variables with entry sum d, descending
// lex.  Shared by basis enumeration and the brute-force test oracles.
std::vector<std::vector<std::int32_t>> exponents_of_degree(int vars, int d);

}  // namespace lcsoc
