// The intersection lattice of a central arrangement: all intersections of
// hyperplanes ordered by reverse inclusion, the Moebius function, the
// characteristic polynomial, modular flats, and Stanley supersolvability
// via a maximal chain of modular flats.
#ifndef ARRANGER_LATTICE_HPP
#define ARRANGER_LATTICE_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "arranger/arrangement.hpp"

namespace arranger {

// Raised when an enumeration guard is exceeded (CLI exit code 3).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Lattice {
  int ambient_dim = 0;
  int top_rank = 0;
  std::vector<Flat> flats;          // sorted by (rank, members)
  std::vector<long long> moebius;   // mu(bottom, flat)

  int bottom_index() const { return 0; }
  int top_index() const;
  // Index of the flat with exactly this member set, or -1.
  int find_members(uint64_t members) const;
  // x <= y in L(A): reverse inclusion of subspaces = member containment.
  bool leq(int x, int y) const {
    return (flats[x].members & ~flats[y].members) == 0;
  }
  int meet(int x, int y) const;  // member-set intersection (always closed)
  int join(int x, int y) const;  // minimal flat containing both member sets
};

// Enumerates L(A) bottom-up, one hyperplane at a time, deduplicating flats
// by their member sets. Guarded: |A| <= guard (default 20, hard cap 63)
// and ambient dimension <= 8.
Lattice intersection_lattice(const Arrangement& a, int guard = 20);

// chi(q) = sum_X mu(X) q^{dim X}; coefficients ascending in q, with
// coeffs[ambient_dim] = 1.
std::vector<long long> characteristic_polynomial(const Lattice& lat);

long long eval_poly(const std::vector<long long>& coeffs, long long q);

// True iff rank(x) + rank(y) = rank(x v y) + rank(x ^ y) for every flat y.
bool is_modular(const Lattice& lat, int flat_index);

// A maximal chain bottom = X_0 < ... < X_r = top of modular flats with
// rank(X_i) = i, or nullopt (flat indices).
std::optional<std::vector<int>> supersolvable_mchain(const Lattice& lat);

}  // namespace arranger

#endif
