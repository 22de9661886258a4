#include "arranger/lattice.hpp"

#include <algorithm>
#include <map>

namespace arranger {

int Lattice::top_index() const { return static_cast<int>(flats.size()) - 1; }

int Lattice::find_members(uint64_t members) const {
  for (size_t i = 0; i < flats.size(); ++i)
    if (flats[i].members == members) return static_cast<int>(i);
  return -1;
}

int Lattice::meet(int x, int y) const {
  const int i = find_members(flats[x].members & flats[y].members);
  if (i < 0) throw std::logic_error("Lattice::meet: member intersection not closed");
  return i;
}

int Lattice::join(int x, int y) const {
  const uint64_t mask = flats[x].members | flats[y].members;
  for (size_t i = 0; i < flats.size(); ++i)
    if ((mask & ~flats[i].members) == 0) return static_cast<int>(i);
  throw std::logic_error("Lattice::join: no upper bound found");
}

Lattice intersection_lattice(const Arrangement& a, int guard) {
  guard = std::min(guard, 63);
  if (a.size() > guard)
    throw GuardExceeded("intersection_lattice: arrangement size " + std::to_string(a.size()) +
                        " exceeds guard " + std::to_string(guard));
  if (a.ambient_dim() > 8)
    throw GuardExceeded("intersection_lattice: ambient dimension exceeds 8");

  std::map<uint64_t, Flat> flats;
  Flat bottom = flat_spanned_by(a, {});
  flats.emplace(bottom.members, bottom);
  std::vector<Flat> frontier{bottom};
  while (!frontier.empty()) {
    std::vector<Flat> next;
    for (const Flat& x : frontier) {
      for (int h = 0; h < a.size(); ++h) {
        if (x.members >> h & 1) continue;
        RatMat rows = x.normals;
        rows.push_back(a.form(h).coeffs());
        Flat y;
        y.normals = rref(std::move(rows));
        y.rank = static_cast<int>(y.normals.size());
        for (int m = 0; m < a.size(); ++m)
          if (in_rowspace(y.normals, a.form(m).coeffs())) y.members |= uint64_t{1} << m;
        if (flats.emplace(y.members, y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }

  Lattice lat;
  lat.ambient_dim = a.ambient_dim();
  for (auto& [members, f] : flats) lat.flats.push_back(std::move(f));
  std::sort(lat.flats.begin(), lat.flats.end(), [](const Flat& p, const Flat& q) {
    if (p.rank != q.rank) return p.rank < q.rank;
    return p.members < q.members;
  });
  lat.top_rank = lat.flats.back().rank;

  // mu(bottom) = 1; mu(X) = -sum of mu over flats strictly below X.
  const size_t m = lat.flats.size();
  lat.moebius.assign(m, 0);
  for (size_t i = 0; i < m; ++i) {
    long long s = (i == 0) ? 1 : 0;
    for (size_t j = 0; j < i; ++j)
      if (lat.leq(static_cast<int>(j), static_cast<int>(i)) && j != i) s -= lat.moebius[j];
    lat.moebius[i] = (i == 0) ? 1 : s;
  }
  return lat;
}

std::vector<long long> characteristic_polynomial(const Lattice& lat) {
  std::vector<long long> coeffs(lat.ambient_dim + 1, 0);
  for (size_t i = 0; i < lat.flats.size(); ++i)
    coeffs[lat.ambient_dim - lat.flats[i].rank] += lat.moebius[i];
  return coeffs;
}

long long eval_poly(const std::vector<long long>& coeffs, long long q) {
  long long v = 0;
  for (size_t k = coeffs.size(); k-- > 0;) v = v * q + coeffs[k];
  return v;
}

bool is_modular(const Lattice& lat, int flat_index) {
  if (flat_index < 0 || flat_index >= static_cast<int>(lat.flats.size()))
    throw std::out_of_range("is_modular: flat not in lattice");
  const int rx = lat.flats[flat_index].rank;
  for (int y = 0; y < static_cast<int>(lat.flats.size()); ++y) {
    const int ry = lat.flats[y].rank;
    const int rj = lat.flats[lat.join(flat_index, y)].rank;
    const int rm = lat.flats[lat.meet(flat_index, y)].rank;
    if (rx + ry != rj + rm) return false;
  }
  return true;
}

namespace {

bool extend_chain(const Lattice& lat, const std::vector<char>& modular,
                  std::vector<char>& dead, int x, std::vector<int>& chain) {
  const int rx = lat.flats[x].rank;
  if (rx == lat.top_rank) return true;
  for (int y = 0; y < static_cast<int>(lat.flats.size()); ++y) {
    if (lat.flats[y].rank != rx + 1 || !modular[y] || dead[y]) continue;
    if (!lat.leq(x, y)) continue;
    chain.push_back(y);
    if (extend_chain(lat, modular, dead, y, chain)) return true;
    chain.pop_back();
    dead[y] = 1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> supersolvable_mchain(const Lattice& lat) {
  const int m = static_cast<int>(lat.flats.size());
  std::vector<char> modular(m, 0);
  for (int i = 0; i < m; ++i) modular[i] = is_modular(lat, i) ? 1 : 0;
  std::vector<char> dead(m, 0);
  std::vector<int> chain{lat.bottom_index()};
  if (!modular[lat.bottom_index()])
    throw std::logic_error("supersolvable_mchain: bottom flat not modular");
  if (extend_chain(lat, modular, dead, lat.bottom_index(), chain)) return chain;
  return std::nullopt;
}

}  // namespace arranger
