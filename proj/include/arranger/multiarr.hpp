// psi-graphical multiarrangements over nonnegative integer vertex weights:
// construction, the lift to rational weight sets, Ziegler restriction, the
// restricted triangular basis, and the multiarrangement freeness decision.
#ifndef ARRANGER_MULTIARR_HPP
#define ARRANGER_MULTIARR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "arranger/logderiv.hpp"

namespace arranger {

// Simple graph on 1..n with a nonnegative integer weight per vertex.
struct IntWeightedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> psi;  // [v-1] >= 0
};

void validate_int_graph(const IntWeightedGraph& g);

struct Multiarrangement {
  Arrangement arr;
  std::vector<int> mult;  // per hyperplane, >= 1 (zero multiplicities dropped)

  int total_multiplicity() const;
  MPoly defining_polynomial() const;  // product of alpha_H^{m(H)}
};

// Forms x_i - x_j (multiplicity 1) and x_i (multiplicity psi(i), dropped
// when 0), in coordinates x_1..x_ell without z.
Multiarrangement build_multi(const IntWeightedGraph& g);

// psi~(i) = {1, ..., psi(i)} as rational weight sets (empty for 0).
WeightedGraph lift_weights(const IntWeightedGraph& g);

// Ziegler restriction onto hyperplane h0: the distinct restrictions with
// multiplicity counting the hyperplanes of A minus h0 containing each flat.
Multiarrangement ziegler_restrict(const Arrangement& a, int h0);

// The Thm-4.1 basis of the lifted arrangement restricted to z = 0:
// theta_k = sum over i in C_{>=k} of
//   prod_{j in E_{<k}} (x_{v_j} - x_{v_i}) * x_{v_i}^{psi(v_k)} d/dx_{v_i},
// in coordinates x_1..x_ell. Requires a WEO of the lifted graph.
std::vector<Derivation> multi_basis(const IntWeightedGraph& g, const Ordering& o);

// Saito's criterion with multiplicities: lower triangular in the rows
// (x_{v_1}, ..., x_{v_ell}); theta(alpha_H) divisible by alpha_H^{m(H)};
// diagonal product equal to a nonzero scalar times Q(A, m).
SaitoResult multi_saito_verify(const Multiarrangement& m,
                               const std::vector<Derivation>& ders, const Ordering& o);

struct MultiFreeCertificate {
  Ordering ordering;               // WEO of the lifted graph
  std::vector<Derivation> basis;   // ell derivations in x_1..x_ell
  std::vector<int> degrees;        // sorted basis degrees
  Rat saito_scalar;
};

struct MultiFreenessCertificate {
  std::optional<MultiFreeCertificate> free;
  std::optional<Obstruction> obstruction;  // on the lifted graph
  bool is_free() const { return free.has_value(); }
};

MultiFreenessCertificate decide_multi_freeness(const IntWeightedGraph& g);

}  // namespace arranger

#endif
