#include "arranger/ratmat.hpp"

#include <stdexcept>
#include <utility>

namespace arranger {

bool is_zero_row(const RatRow& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatMat rref(RatMat m) {
  if (m.empty()) return m;
  const size_t cols = m[0].size();
  for (const RatRow& row : m)
    if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");

  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Rat inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

int rank_of(const RatMat& m) { return static_cast<int>(rref(m).size()); }

bool in_rowspace(const RatMat& r, const RatRow& v) {
  RatRow w = v;
  for (const RatRow& row : r) {
    size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) continue;
    if (!w[lead].is_zero()) {
      const Rat f = w[lead];
      for (size_t j = 0; j < w.size(); ++j) w[j] -= f * row[j];
    }
  }
  return is_zero_row(w);
}

}  // namespace arranger
