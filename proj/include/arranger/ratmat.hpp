// Small exact linear algebra over Rat: reduced row echelon form and
// row-space membership. Canonical RREF (zero rows dropped) is used to
// identify subspaces spanned by sets of linear forms.
#ifndef ARRANGER_RATMAT_HPP
#define ARRANGER_RATMAT_HPP

#include <vector>

#include "arranger/rational.hpp"

namespace arranger {

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

// Reduced row echelon form with zero rows removed; pivots scanned left to
// right. The result is a canonical basis of the row space.
RatMat rref(RatMat m);

int rank_of(const RatMat& m);

// Requires r to be in RREF. True iff v lies in the row space of r.
bool in_rowspace(const RatMat& r, const RatRow& v);

bool is_zero_row(const RatRow& v);

}  // namespace arranger

#endif
