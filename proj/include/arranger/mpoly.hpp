// Sparse multivariate polynomials with exact rational coefficients,
// linear forms, and the division/determinant primitives built on them.
//
// Variable convention: a VarSpace describes the ambient coordinates.
// When has_z is set, slot 0 is z and slots 1..n-1 are x_1..x_{n-1}; the
// display/normalization priority runs through the x variables first and
// z last, so forms read "x1 - x2", "x2 - z", and the lone "z".
#ifndef ARRANGER_MPOLY_HPP
#define ARRANGER_MPOLY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arranger/rational.hpp"

namespace arranger {

using ExpVec = std::vector<int>;

struct VarSpace {
  int nvars = 0;
  bool has_z = false;
  std::vector<std::string> name_override;  // empty: derived names

  static VarSpace with_z(int ell) { return VarSpace{ell + 1, true, {}}; }
  static VarSpace x_only(int ell) { return VarSpace{ell, false, {}}; }

  std::vector<std::string> var_names() const;
  // Slot indices in normalization/display priority: x slots ascending, z last.
  std::vector<int> priority() const;
  // Space after deleting one coordinate slot (restriction to a hyperplane).
  VarSpace drop_var(int slot) const;

  bool operator==(const VarSpace& o) const {
    return nvars == o.nvars && has_z == o.has_z;
  }
};

class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int slot);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant(); the zero polynomial evaluates to 0.
  Rat constant_value() const;

  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  void add_term(const ExpVec& exp, const Rat& coeff);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c);

  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  Rat eval(std::span<const Rat> point) const;
  MPoly derivative(int slot) const;

  // Graded-lex display, e.g. "3*x1^2*x2 - 1/2*z": higher total degree
  // first, ties broken by larger exponent on the higher-priority variable.
  std::string str(const VarSpace& vs) const;

 private:
  int nvars_;
  std::map<ExpVec, Rat> terms_;  // no zero coefficients stored
};

// A nonzero linear form, stored with the leading (priority-first nonzero)
// coefficient normalized to 1 so hyperplane equality is representational.
class LinForm {
 public:
  LinForm(std::vector<Rat> coeffs, const VarSpace& vs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const Rat& coeff(int slot) const { return coeffs_[slot]; }
  // Slot whose coefficient is 1 after normalization.
  int lead() const { return lead_; }

  MPoly poly() const;
  Rat eval(std::span<const Rat> point) const;
  std::string str(const VarSpace& vs) const;

  bool operator==(const LinForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LinForm& o) const { return coeffs_ != o.coeffs_; }
  bool operator<(const LinForm& o) const;

 private:
  std::vector<Rat> coeffs_;
  int lead_;
};

struct FormDivision {
  bool divisible = false;
  MPoly quotient;   // p = f * quotient when divisible
  MPoly remainder;  // p with the kernel of f substituted, when not
};

// Exact division of p by a linear form. On failure the remainder is p
// restricted to ker(f) via the parametrization lead = -(rest of f).
FormDivision divide_by_form(const MPoly& p, const LinForm& f);

// Determinant of a lower-triangular matrix of polynomials: the product of
// the diagonal. Throws if any entry strictly above the diagonal is nonzero.
MPoly det_triangular(const std::vector<std::vector<MPoly>>& m);

}  // namespace arranger

#endif
