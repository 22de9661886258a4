#include "arranger/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arranger {

Arrangement::Arrangement(VarSpace vs, std::vector<LinForm> forms) : vs_(std::move(vs)) {
  for (LinForm& f : forms) {
    if (f.nvars() != vs_.nvars)
      throw std::invalid_argument("Arrangement: form dimension mismatch");
    if (find_form(f) < 0) forms_.push_back(std::move(f));
  }
}

const LinForm& Arrangement::form(int h) const {
  if (h < 0 || h >= size()) throw std::out_of_range("Arrangement: bad hyperplane index");
  return forms_[h];
}

int Arrangement::find_form(const LinForm& f) const {
  for (int i = 0; i < size(); ++i)
    if (forms_[i] == f) return i;
  return -1;
}

Arrangement build_psi_arrangement(const WeightedGraph& g) {
  const int ell = g.n_vertices();
  const VarSpace vs = VarSpace::with_z(ell);
  std::vector<LinForm> forms;
  {
    std::vector<Rat> c(ell + 1, Rat(0));
    c[0] = Rat(1);
    forms.emplace_back(std::move(c), vs);  // z
  }
  for (auto [i, j] : g.edges()) {
    std::vector<Rat> c(ell + 1, Rat(0));
    c[i] = Rat(1);
    c[j] = Rat(-1);
    forms.emplace_back(std::move(c), vs);  // x_i - x_j
  }
  for (int i = 1; i <= ell; ++i) {
    for (const Rat& a : g.psi(i).elements()) {
      std::vector<Rat> c(ell + 1, Rat(0));
      c[i] = Rat(1);
      c[0] = -a;
      forms.emplace_back(std::move(c), vs);  // x_i - a z
    }
  }
  return Arrangement(vs, std::move(forms));
}

MPoly defining_polynomial(const Arrangement& a) {
  MPoly q = MPoly::constant(a.ambient_dim(), Rat(1));
  for (const LinForm& f : a.forms()) q = q * f.poly();
  return q;
}

Flat flat_spanned_by(const Arrangement& a, const std::vector<int>& form_indices) {
  RatMat rows;
  for (int h : form_indices) rows.push_back(a.form(h).coeffs());
  Flat x;
  x.normals = rref(std::move(rows));
  x.rank = static_cast<int>(x.normals.size());
  for (int h = 0; h < a.size(); ++h)
    if (in_rowspace(x.normals, a.form(h).coeffs())) x.members |= uint64_t{1} << h;
  return x;
}

Arrangement localization(const Arrangement& a, const Flat& x) {
  std::vector<LinForm> forms;
  for (int h = 0; h < a.size(); ++h)
    if (x.members >> h & 1) forms.push_back(a.form(h));
  return Arrangement(a.vspace(), std::move(forms));
}

Restriction restrict_to_hyperplane(const Arrangement& a, int h0) {
  if (h0 < 0 || h0 >= a.size())
    throw std::out_of_range("restrict_to_hyperplane: bad hyperplane index");
  if (a.ambient_dim() < 2)
    throw std::invalid_argument("restrict_to_hyperplane: ambient dimension too small");
  const LinForm& alpha = a.form(h0);
  const int n = a.ambient_dim();
  int elim = n - 1;
  while (alpha.coeff(elim).is_zero()) --elim;
  // On H0: v_elim = -(sum of the other terms)/c_elim.
  const Rat scale = -alpha.coeff(elim).inverse();
  const VarSpace sub = a.vspace().drop_var(elim);

  std::vector<LinForm> forms;
  std::vector<int> image(a.size(), -1);
  for (int h = 0; h < a.size(); ++h) {
    if (h == h0) continue;
    const LinForm& f = a.form(h);
    std::vector<Rat> c;
    c.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
      if (v == elim) continue;
      c.push_back(f.coeff(v) + f.coeff(elim) * scale * alpha.coeff(v));
    }
    if (std::all_of(c.begin(), c.end(), [](const Rat& x) { return x.is_zero(); }))
      throw std::logic_error("restrict_to_hyperplane: proportional forms in arrangement");
    LinForm rf(std::move(c), sub);
    int idx = -1;
    for (size_t i = 0; i < forms.size(); ++i)
      if (forms[i] == rf) idx = static_cast<int>(i);
    if (idx < 0) {
      idx = static_cast<int>(forms.size());
      forms.push_back(std::move(rf));
    }
    image[h] = idx;
  }
  return Restriction{Arrangement(sub, std::move(forms)), std::move(image)};
}

std::pair<Arrangement, Arrangement> triple_restrict(const Arrangement& a, int h0) {
  if (h0 < 0 || h0 >= a.size()) throw std::out_of_range("triple_restrict: bad hyperplane index");
  std::vector<LinForm> rest;
  for (int h = 0; h < a.size(); ++h)
    if (h != h0) rest.push_back(a.form(h));
  Arrangement deleted(a.vspace(), std::move(rest));
  return {std::move(deleted), restrict_to_hyperplane(a, h0).restricted};
}

std::optional<std::vector<int>> is_nest(const NTuple& n) {
  const int ell = static_cast<int>(n.sets.size());
  std::vector<int> w(ell);
  std::iota(w.begin(), w.end(), 1);
  std::stable_sort(w.begin(), w.end(), [&](int a, int b) {
    return n.sets[a - 1].size() < n.sets[b - 1].size();
  });
  for (int k = 0; k + 1 < ell; ++k)
    if (!n.sets[w[k] - 1].subset_of(n.sets[w[k + 1] - 1])) return std::nullopt;
  return w;
}

Arrangement build_nish(const NTuple& n) {
  const int ell = static_cast<int>(n.sets.size());
  // Coordinates (z, x_0, x_1, ..., x_ell): slot 0 = z, slot i+1 = x_i.
  VarSpace vs = VarSpace::with_z(ell + 1);
  vs.name_override = {"z"};
  for (int i = 0; i <= ell; ++i) vs.name_override.push_back("x" + std::to_string(i));

  std::vector<LinForm> forms;
  {
    std::vector<Rat> c(ell + 2, Rat(0));
    c[0] = Rat(1);
    forms.emplace_back(std::move(c), vs);  // z
  }
  for (int i = 1; i <= ell; ++i) {
    for (int j = i + 1; j <= ell; ++j) {
      std::vector<Rat> c(ell + 2, Rat(0));
      c[i + 1] = Rat(1);
      c[j + 1] = Rat(-1);
      forms.emplace_back(std::move(c), vs);  // x_i - x_j
    }
  }
  for (int i = 1; i <= ell; ++i) {
    for (const Rat& a : n.sets[i - 1].elements()) {
      std::vector<Rat> c(ell + 2, Rat(0));
      c[1] = Rat(1);
      c[i + 1] = Rat(-1);
      c[0] = -a;
      forms.emplace_back(std::move(c), vs);  // x_0 - x_i - a z
    }
  }
  return Arrangement(vs, std::move(forms));
}

bool affine_equiv_check(const WeightedGraph& g) {
  if (!g.is_complete())
    throw std::invalid_argument("affine_equiv_check: graph must be complete");
  const int ell = g.n_vertices();
  const Arrangement base = build_psi_arrangement(g);
  NTuple n;
  for (int i = 1; i <= ell; ++i) n.sets.push_back(g.psi(i));
  const Arrangement nish = build_nish(n);
  const VarSpace& vs = nish.vspace();

  // Extend each form of A_{G,psi} by an unused x_0 coordinate, then apply
  // x_i -> x_0 - x_i (z and x_0 fixed).
  std::set<std::vector<Rat>> mapped;
  for (const LinForm& f : base.forms()) {
    std::vector<Rat> c(ell + 2, Rat(0));
    c[0] = f.coeff(0);
    for (int i = 1; i <= ell; ++i) {
      c[1] += f.coeff(i);       // x_i contributes x_0 ...
      c[i + 1] = -f.coeff(i);   // ... minus x_i
    }
    mapped.insert(LinForm(std::move(c), vs).coeffs());
  }
  std::set<std::vector<Rat>> target;
  for (const LinForm& f : nish.forms()) target.insert(f.coeffs());
  return mapped == target;
}

}  // namespace arranger
