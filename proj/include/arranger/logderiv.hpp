// Logarithmic derivation modules of psi-graphical arrangements: the
// triangular basis attached to a weighted elimination ordering, Saito
// verification, exponents, the freeness decision with certificates, and
// the addition-deletion audit.
#ifndef ARRANGER_LOGDERIV_HPP
#define ARRANGER_LOGDERIV_HPP

#include <optional>
#include <string>
#include <vector>

#include "arranger/arrangement.hpp"

namespace arranger {

// theta = sum_v coeffs[v] d/dv over the ambient coordinates.
struct Derivation {
  std::vector<MPoly> coeffs;

  bool is_zero() const;
  // Common total degree of the nonzero coefficients; -1 when zero,
  // requires homogeneity (throws otherwise).
  int degree() const;
};

// Applies a derivation to a polynomial: sum coeffs[v] * dp/dv.
MPoly apply_derivation(const Derivation& theta, const MPoly& p);
MPoly apply_to_form(const Derivation& theta, const LinForm& f);

// theta_E = z d/dz + sum x_i d/dx_i.
Derivation euler_derivation(int ell);

// Positions reachable from position k by paths whose intermediate
// positions increase strictly between k and the endpoint (including k).
std::vector<int> c_geq(const WeightedGraph& g, const Ordering& o, int k);

// Positions j < k whose vertex is adjacent to the vertex at position k.
std::vector<int> e_lt(const WeightedGraph& g, const Ordering& o, int k);

// theta_k = sum over i in C_{>=k} of
//   prod_{j in E_{<k}} (x_{v_j} - x_{v_i}) * prod_{a in psi(v_k)} (x_{v_i} - a z)
// times d/dx_{v_i}. Requires a weighted elimination ordering.
Derivation build_theta_k(const WeightedGraph& g, const Ordering& o, int k);

struct LogReport {
  bool logarithmic = false;
  std::vector<int> failing;  // hyperplane indices with non-divisible image
};

// theta(alpha_H) divisible by alpha_H for every H.
LogReport is_logarithmic(const Derivation& theta, const Arrangement& a);

struct SaitoResult {
  bool ok = false;
  Rat scalar;          // det = scalar * Q(A) when ok
  std::string reason;  // failure explanation otherwise
};

// Saito's criterion for a triangular basis: rows are the variables
// (z, x_{v_1}, ..., x_{v_ell}), columns the derivations; all entries above
// the diagonal must vanish and the diagonal product must equal a nonzero
// scalar times Q(A). The scalar is recovered by exact successive division
// of the diagonal entries by the forms of A.
SaitoResult saito_verify(const Arrangement& a, const std::vector<Derivation>& ders,
                         const Ordering& o);

// Core triangular check shared with the multiarrangement verifier: rows
// are the variable slots in row_vars, mult[h] is the required divisibility
// power of form h (and its multiplicity in Q).
SaitoResult saito_matrix_verify(const Arrangement& a, const std::vector<int>& mult,
                                const std::vector<Derivation>& ders,
                                const std::vector<int>& row_vars);

// {1} u {|E_{<k}| + |psi(v_k)|}, sorted; sums to |A|.
std::vector<int> exponents_formula(const WeightedGraph& g, const Ordering& o);

struct FreeCertificate {
  Ordering ordering;
  std::vector<Derivation> basis;  // theta_E first
  std::vector<int> exponents;
  Rat saito_scalar;
};

struct FreenessCertificate {
  std::optional<FreeCertificate> free;
  std::optional<Obstruction> obstruction;
  bool is_free() const { return free.has_value(); }
};

// Thm-1.4 decision: a weighted elimination ordering yields a Saito-checked
// basis; otherwise the combinatorial obstruction is the certificate.
FreenessCertificate decide_freeness(const WeightedGraph& g);

struct AdditionDeletionReport {
  std::vector<int> exp_deleted;     // exponents of A minus the edge hyperplane
  std::vector<int> exp_restricted;  // exponents of the contraction
  bool subset_holds = false;        // multiset inclusion exp'' in exp'
};

struct AuditResult {
  bool conclusive = false;
  std::string reason;  // set when inconclusive
  AdditionDeletionReport report;
};

// Addition-deletion audit at an edge: compares the exponents of the
// edge-deleted and edge-contracted graphs. When g itself has no weighted
// elimination ordering and the inclusion fails, the report witnesses the
// addition-deletion contradiction. Inconclusive if either derived graph
// has no weighted elimination ordering.
AuditResult addition_deletion_audit(const WeightedGraph& g, std::pair<int, int> e);

bool multiset_includes(const std::vector<int>& super, const std::vector<int>& sub);

}  // namespace arranger

#endif
