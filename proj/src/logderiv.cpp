#include "arranger/logderiv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arranger {

bool Derivation::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const MPoly& p) { return p.is_zero(); });
}

int Derivation::degree() const {
  int d = -1;
  for (const MPoly& p : coeffs) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw std::logic_error("Derivation: non-homogeneous coefficient");
    if (d == -1) d = p.total_degree();
    if (p.total_degree() != d) throw std::logic_error("Derivation: mixed coefficient degrees");
  }
  return d;
}

MPoly apply_derivation(const Derivation& theta, const MPoly& p) {
  if (theta.coeffs.empty() || theta.coeffs[0].nvars() != p.nvars())
    throw std::invalid_argument("apply_derivation: variable-count mismatch");
  MPoly out(p.nvars());
  for (size_t v = 0; v < theta.coeffs.size(); ++v) {
    if (theta.coeffs[v].is_zero()) continue;
    out += theta.coeffs[v] * p.derivative(static_cast<int>(v));
  }
  return out;
}

MPoly apply_to_form(const Derivation& theta, const LinForm& f) {
  const int n = f.nvars();
  if (static_cast<int>(theta.coeffs.size()) != n)
    throw std::invalid_argument("apply_to_form: variable-count mismatch");
  MPoly out(n);
  for (int v = 0; v < n; ++v) {
    if (f.coeff(v).is_zero()) continue;
    out += theta.coeffs[v] * f.coeff(v);
  }
  return out;
}

Derivation euler_derivation(int ell) {
  if (ell < 1) throw std::invalid_argument("euler_derivation: need ell >= 1");
  Derivation theta;
  for (int v = 0; v <= ell; ++v) theta.coeffs.push_back(MPoly::variable(ell + 1, v));
  return theta;
}

namespace {

std::vector<int> positions_of(const WeightedGraph& g, const Ordering& o) {
  std::vector<int> pos(g.n_vertices() + 1, 0);
  for (size_t i = 0; i < o.verts.size(); ++i) pos[o.verts[i]] = static_cast<int>(i) + 1;
  return pos;
}

void check_position(const WeightedGraph& g, const Ordering& o, int k) {
  if (static_cast<int>(o.verts.size()) != g.n_vertices())
    throw std::invalid_argument("ordering length mismatch");
  if (k < 1 || k > g.n_vertices()) throw std::out_of_range("position out of range");
}

}  // namespace

std::vector<int> c_geq(const WeightedGraph& g, const Ordering& o, int k) {
  check_position(g, o, k);
  const int ell = g.n_vertices();
  std::vector<char> reach(ell + 1, 0);
  reach[k] = 1;
  std::vector<int> out{k};
  for (int i = k + 1; i <= ell; ++i) {
    for (int j = k; j < i; ++j) {
      if (reach[j] && g.adjacent(o.verts[j - 1], o.verts[i - 1])) {
        reach[i] = 1;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::vector<int> e_lt(const WeightedGraph& g, const Ordering& o, int k) {
  check_position(g, o, k);
  std::vector<int> out;
  for (int j = 1; j < k; ++j)
    if (g.adjacent(o.verts[j - 1], o.verts[k - 1])) out.push_back(j);
  return out;
}

Derivation build_theta_k(const WeightedGraph& g, const Ordering& o, int k) {
  check_position(g, o, k);
  if (!validate_weo(g, o))
    throw std::invalid_argument("build_theta_k: not a weighted elimination ordering");
  const int ell = g.n_vertices();
  const int n = ell + 1;
  const int vk = o.verts[k - 1];
  const std::vector<int> elt = e_lt(g, o, k);

  Derivation theta;
  theta.coeffs.assign(n, MPoly(n));
  for (int i : c_geq(g, o, k)) {
    const int vi = o.verts[i - 1];
    MPoly prod = MPoly::constant(n, Rat(1));
    for (int j : elt) {
      const int vj = o.verts[j - 1];
      MPoly factor(n);
      ExpVec e(n, 0);
      e[vj] = 1;
      factor.add_term(e, Rat(1));
      e[vj] = 0;
      e[vi] = 1;
      factor.add_term(e, Rat(-1));
      prod = prod * factor;  // x_{v_j} - x_{v_i}
    }
    for (const Rat& a : g.psi(vk).elements()) {
      MPoly factor(n);
      ExpVec e(n, 0);
      e[vi] = 1;
      factor.add_term(e, Rat(1));
      e[vi] = 0;
      e[0] = 1;
      factor.add_term(e, -a);
      prod = prod * factor;  // x_{v_i} - a z
    }
    theta.coeffs[vi] = std::move(prod);
  }
  return theta;
}

LogReport is_logarithmic(const Derivation& theta, const Arrangement& a) {
  LogReport report;
  for (int h = 0; h < a.size(); ++h) {
    const MPoly image = apply_to_form(theta, a.form(h));
    if (image.is_zero()) continue;
    if (!divide_by_form(image, a.form(h)).divisible) report.failing.push_back(h);
  }
  report.logarithmic = report.failing.empty();
  return report;
}

namespace {

// Reduces p to a constant by repeatedly dividing by forms from the pool,
// consuming one pool entry per division. Returns the constant, or nullopt
// if p does not factor into pool forms.
std::optional<Rat> reduce_by_pool(MPoly p, std::vector<LinForm>& pool) {
  bool progress = true;
  while (!p.is_constant() && progress) {
    progress = false;
    for (size_t i = 0; i < pool.size(); ++i) {
      FormDivision d = divide_by_form(p, pool[i]);
      if (d.divisible) {
        p = std::move(d.quotient);
        pool.erase(pool.begin() + static_cast<long>(i));
        progress = true;
        break;
      }
    }
  }
  if (!p.is_constant()) return std::nullopt;
  return p.constant_value();
}

}  // namespace

SaitoResult saito_matrix_verify(const Arrangement& a, const std::vector<int>& mult,
                                const std::vector<Derivation>& ders,
                                const std::vector<int>& row_vars) {
  std::vector<LinForm> q_factors;
  for (int h = 0; h < a.size(); ++h)
    for (int m = 0; m < mult[h]; ++m) q_factors.push_back(a.form(h));

  SaitoResult res;
  const size_t n = row_vars.size();
  if (ders.size() != n) {
    res.reason = "need exactly " + std::to_string(n) + " derivations";
    return res;
  }
  // Triangularity in the given row order.
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = r + 1; c < n; ++c) {
      if (!ders[c].coeffs[row_vars[r]].is_zero()) {
        res.reason = "coefficient matrix not lower triangular at row " + std::to_string(r) +
                     ", column " + std::to_string(c);
        return res;
      }
    }
  }
  // Degree bookkeeping: the diagonal degrees must sum to deg Q.
  long long degsum = 0;
  for (size_t c = 0; c < n; ++c) {
    const MPoly& diag = ders[c].coeffs[row_vars[c]];
    if (diag.is_zero()) {
      res.reason = "zero diagonal entry at column " + std::to_string(c);
      return res;
    }
    degsum += diag.total_degree();
  }
  if (degsum != static_cast<long long>(q_factors.size())) {
    res.reason = "degree sum " + std::to_string(degsum) + " != deg Q = " +
                 std::to_string(q_factors.size());
    return res;
  }
  // Logarithmic membership to the required multiplicity.
  for (size_t c = 0; c < n; ++c) {
    for (int h = 0; h < a.size(); ++h) {
      MPoly image = apply_to_form(ders[c], a.form(h));
      for (int m = 0; m < mult[h]; ++m) {
        if (image.is_zero()) break;
        FormDivision d = divide_by_form(image, a.form(h));
        if (!d.divisible) {
          res.reason = "derivation " + std::to_string(c) +
                       " is not logarithmic at hyperplane " + std::to_string(h);
          return res;
        }
        image = std::move(d.quotient);
      }
    }
  }
  // det = prod of diagonal entries; factor each into pool forms.
  std::vector<LinForm> pool = q_factors;
  Rat scalar(1);
  for (size_t c = 0; c < n; ++c) {
    std::optional<Rat> v = reduce_by_pool(ders[c].coeffs[row_vars[c]], pool);
    if (!v || v->is_zero()) {
      res.reason = "determinant is not a scalar multiple of Q";
      return res;
    }
    scalar *= *v;
  }
  if (!pool.empty()) {
    res.reason = "determinant is not a scalar multiple of Q";
    return res;
  }
  res.ok = true;
  res.scalar = scalar;
  return res;
}

SaitoResult saito_verify(const Arrangement& a, const std::vector<Derivation>& ders,
                         const Ordering& o) {
  const int n = a.ambient_dim();
  if (static_cast<int>(o.verts.size()) != n - 1)
    throw std::invalid_argument("saito_verify: ordering length mismatch");
  std::vector<int> row_vars{0};
  for (int v : o.verts) row_vars.push_back(v);
  for (const Derivation& d : ders)
    if (static_cast<int>(d.coeffs.size()) != n)
      throw std::invalid_argument("saito_verify: derivation dimension mismatch");
  return saito_matrix_verify(a, std::vector<int>(a.size(), 1), ders, row_vars);
}

std::vector<int> exponents_formula(const WeightedGraph& g, const Ordering& o) {
  if (!validate_weo(g, o))
    throw std::invalid_argument("exponents_formula: not a weighted elimination ordering");
  std::vector<int> exps{1};
  for (int k = 1; k <= g.n_vertices(); ++k)
    exps.push_back(static_cast<int>(e_lt(g, o, k).size()) + g.psi(o.verts[k - 1]).size());
  std::sort(exps.begin(), exps.end());
  return exps;
}

FreenessCertificate decide_freeness(const WeightedGraph& g) {
  FreenessCertificate cert;
  WeoResult weo = find_weo(g);
  if (!holds_ordering(weo)) {
    cert.obstruction = std::get<Obstruction>(weo);
    return cert;
  }
  const Ordering o = std::get<Ordering>(weo);
  const Arrangement arr = build_psi_arrangement(g);
  std::vector<Derivation> basis{euler_derivation(g.n_vertices())};
  for (int k = 1; k <= g.n_vertices(); ++k) basis.push_back(build_theta_k(g, o, k));
  SaitoResult saito = saito_verify(arr, basis, o);
  if (!saito.ok)
    throw std::logic_error("decide_freeness: Saito verification failed on a WEO instance: " +
                           saito.reason);
  cert.free = FreeCertificate{o, std::move(basis), exponents_formula(g, o), saito.scalar};
  return cert;
}

bool multiset_includes(const std::vector<int>& super, const std::vector<int>& sub) {
  std::map<int, int> counts;
  for (int x : super) ++counts[x];
  for (int x : sub)
    if (--counts[x] < 0) return false;
  return true;
}

AuditResult addition_deletion_audit(const WeightedGraph& g, std::pair<int, int> e) {
  int i = std::min(e.first, e.second), j = std::max(e.first, e.second);
  if (i < 1 || j > g.n_vertices() || !g.adjacent(i, j))
    throw std::invalid_argument("addition_deletion_audit: not an edge");

  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (!(u == i && v == j)) edges.emplace_back(u, v);
  std::vector<WeightSet> psi;
  for (int v = 1; v <= g.n_vertices(); ++v) psi.push_back(g.psi(v));
  const WeightedGraph deleted(g.n_vertices(), std::move(edges), std::move(psi));
  const WeightedGraph contracted = contract_edge(g, {i, j});

  AuditResult out;
  WeoResult wd = find_weo(deleted);
  if (!holds_ordering(wd)) {
    out.reason = "deleted graph has no weighted elimination ordering (" +
                 obstruction_str(std::get<Obstruction>(wd)) + ")";
    return out;
  }
  WeoResult wc = find_weo(contracted);
  if (!holds_ordering(wc)) {
    out.reason = "contracted graph has no weighted elimination ordering (" +
                 obstruction_str(std::get<Obstruction>(wc)) + ")";
    return out;
  }
  out.conclusive = true;
  out.report.exp_deleted = exponents_formula(deleted, std::get<Ordering>(wd));
  out.report.exp_restricted = exponents_formula(contracted, std::get<Ordering>(wc));
  out.report.subset_holds =
      multiset_includes(out.report.exp_deleted, out.report.exp_restricted);
  return out;
}

}  // namespace arranger
