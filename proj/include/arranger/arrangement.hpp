// Central arrangements as deduplicated sets of normalized linear forms:
// construction from weighted graphs, localization, deletion/restriction
// triples, and the N-Ish family with its nest test and the affine
// equivalence to psi-graphical arrangements on complete graphs.
#ifndef ARRANGER_ARRANGEMENT_HPP
#define ARRANGER_ARRANGEMENT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "arranger/mpoly.hpp"
#include "arranger/ratmat.hpp"
#include "arranger/wgraph.hpp"

namespace arranger {

class Arrangement {
 public:
  Arrangement(VarSpace vs, std::vector<LinForm> forms);  // dedups, keeps order

  const VarSpace& vspace() const { return vs_; }
  int ambient_dim() const { return vs_.nvars; }
  int size() const { return static_cast<int>(forms_.size()); }
  const std::vector<LinForm>& forms() const { return forms_; }
  const LinForm& form(int h) const;
  int find_form(const LinForm& f) const;  // -1 if absent

 private:
  VarSpace vs_;
  std::vector<LinForm> forms_;
};

// Hyperplanes z, x_i - x_j per edge, and x_i - a z per a in psi(i).
Arrangement build_psi_arrangement(const WeightedGraph& g);

// Q(A): the product of all forms.
MPoly defining_polynomial(const Arrangement& a);

// Canonical description of a subspace spanned by a subset of the forms:
// the RREF of their coefficient rows plus the full member set (all
// hyperplanes containing the subspace).
struct Flat {
  RatMat normals;         // reduced row echelon, canonical
  int rank = 0;           // = normals.size()
  uint64_t members = 0;   // bit h set iff form h contains the flat
};

Flat flat_spanned_by(const Arrangement& a, const std::vector<int>& form_indices);

// Sub-arrangement of the hyperplanes containing the flat.
Arrangement localization(const Arrangement& a, const Flat& x);

// Deletion A' = A minus h0 (same ambient space) and restriction A'' (the
// distinct intersections H cap H0 in coordinates on H0; the highest-index
// variable with nonzero coefficient in the form of H0 is eliminated).
std::pair<Arrangement, Arrangement> triple_restrict(const Arrangement& a, int h0);

// Restriction with bookkeeping: image[h] is the index of form h's
// restriction in the restricted arrangement, or -1 for h0 itself.
struct Restriction {
  Arrangement restricted;
  std::vector<int> image;
};
Restriction restrict_to_hyperplane(const Arrangement& a, int h0);

struct NTuple {
  std::vector<WeightSet> sets;
};

// A permutation w with N_{w(1)} including into N_{w(2)} ... if one exists
// (sorted by cardinality, then verified).
std::optional<std::vector<int>> is_nest(const NTuple& n);

// The N-Ish arrangement in coordinates (z, x_0, ..., x_ell): z, all braid
// forms x_i - x_j (i<j >= 1), and x_0 - x_i - a z for a in N_i.
Arrangement build_nish(const NTuple& n);

// For a complete weighted graph: substituting x_i -> x_0 - x_i into
// A_{G,psi} x empty_1 must reproduce the N-Ish arrangement of N_i = psi(i).
bool affine_equiv_check(const WeightedGraph& g);

}  // namespace arranger

#endif
