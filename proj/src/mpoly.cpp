#include "arranger/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arranger {

std::vector<std::string> VarSpace::var_names() const {
  if (!name_override.empty()) {
    if (static_cast<int>(name_override.size()) != nvars)
      throw std::logic_error("VarSpace: name override size mismatch");
    return name_override;
  }
  std::vector<std::string> names;
  names.reserve(nvars);
  for (int i = 0; i < nvars; ++i) {
    if (has_z && i == 0)
      names.push_back("z");
    else
      names.push_back("x" + std::to_string(has_z ? i : i + 1));
  }
  return names;
}

std::vector<int> VarSpace::priority() const {
  std::vector<int> p;
  p.reserve(nvars);
  for (int i = has_z ? 1 : 0; i < nvars; ++i) p.push_back(i);
  if (has_z) p.push_back(0);
  return p;
}

VarSpace VarSpace::drop_var(int slot) const {
  if (slot < 0 || slot >= nvars) throw std::out_of_range("drop_var: bad slot");
  VarSpace out;
  out.nvars = nvars - 1;
  out.has_z = has_z && slot != 0;
  return out;
}

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int slot) {
  if (slot < 0 || slot >= nvars) throw std::out_of_range("MPoly::variable: bad slot");
  MPoly p(nvars);
  ExpVec e(nvars, 0);
  e[slot] = 1;
  p.add_term(e, Rat(1));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](int e) { return e == 0; }));
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("MPoly: not a constant");
  return terms_.begin()->second;
}

static int degree_of(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int de = degree_of(e);
    if (d == -1) d = de;
    if (de != d) return false;
  }
  return true;
}

void MPoly::add_term(const ExpVec& exp, const Rat& coeff) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("MPoly::add_term: exponent size mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: variable-count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: variable-count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable-count mismatch");
  MPoly out(a.nvars_);
  ExpVec e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly operator*(MPoly a, const Rat& c) {
  if (c.is_zero()) return MPoly(a.nvars_);
  for (auto& [e, coeff] : a.terms_) coeff *= c;
  return a;
}

Rat MPoly::eval(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("MPoly::eval: point length mismatch");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

MPoly MPoly::derivative(int slot) const {
  if (slot < 0 || slot >= nvars_) throw std::out_of_range("MPoly::derivative: bad slot");
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    ExpVec d = e;
    d[slot] -= 1;
    out.add_term(d, c * Rat(e[slot]));
  }
  return out;
}

namespace {

// Display order: total degree descending, then larger exponent on the
// higher-priority variable first.
struct TermDisplayLess {
  const std::vector<int>& pri;
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    for (int slot : pri) {
      if (a[slot] != b[slot]) return a[slot] > b[slot];
    }
    return false;
  }
};

std::string monomial_str(const ExpVec& e, const std::vector<int>& pri,
                         const std::vector<std::string>& names) {
  std::string out;
  for (int slot : pri) {
    if (e[slot] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[slot];
    if (e[slot] > 1) out += "^" + std::to_string(e[slot]);
  }
  return out;
}

}  // namespace

std::string MPoly::str(const VarSpace& vs) const {
  if (vs.nvars != nvars_) throw std::invalid_argument("MPoly::str: VarSpace mismatch");
  if (terms_.empty()) return "0";
  const std::vector<int> pri = vs.priority();
  const std::vector<std::string> names = vs.var_names();

  std::vector<const std::pair<const ExpVec, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* a, auto* b) { return TermDisplayLess{pri}(a->first, b->first); });

  std::string out;
  bool first = true;
  for (auto* t : order) {
    const Rat& c = t->second;
    const std::string mono = monomial_str(t->first, pri, names);
    if (first) {
      out += (c.sign() < 0) ? "-" : "";
      first = false;
    } else {
      out += (c.sign() < 0) ? " - " : " + ";
    }
    const Rat a = c.abs();
    if (mono.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

LinForm::LinForm(std::vector<Rat> coeffs, const VarSpace& vs)
    : coeffs_(std::move(coeffs)), lead_(-1) {
  if (static_cast<int>(coeffs_.size()) != vs.nvars)
    throw std::invalid_argument("LinForm: coefficient count mismatch");
  for (int slot : vs.priority()) {
    if (!coeffs_[slot].is_zero()) {
      lead_ = slot;
      break;
    }
  }
  if (lead_ < 0) throw std::invalid_argument("LinForm: identically zero");
  const Rat inv = coeffs_[lead_].inverse();
  for (Rat& c : coeffs_) c *= inv;
}

MPoly LinForm::poly() const {
  MPoly p(nvars());
  for (int i = 0; i < nvars(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    ExpVec e(nvars(), 0);
    e[i] = 1;
    p.add_term(e, coeffs_[i]);
  }
  return p;
}

Rat LinForm::eval(std::span<const Rat> point) const {
  if (point.size() != coeffs_.size())
    throw std::invalid_argument("LinForm::eval: point length mismatch");
  Rat total(0);
  for (size_t i = 0; i < coeffs_.size(); ++i) total += coeffs_[i] * point[i];
  return total;
}

std::string LinForm::str(const VarSpace& vs) const { return poly().str(vs); }

bool LinForm::operator<(const LinForm& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

FormDivision divide_by_form(const MPoly& p, const LinForm& f) {
  if (p.nvars() != f.nvars())
    throw std::invalid_argument("divide_by_form: variable-count mismatch");
  const int n = p.nvars();
  const int v = f.lead();

  // f = v + s with s over the other variables (lead coefficient is 1).
  MPoly s(n);
  for (int i = 0; i < n; ++i) {
    if (i == v || f.coeff(i).is_zero()) continue;
    ExpVec e(n, 0);
    e[i] = 1;
    s.add_term(e, f.coeff(i));
  }

  // Split p by powers of v: p = sum_k p_k * v^k.
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
  std::vector<MPoly> pk(d + 1, MPoly(n));
  for (const auto& [e, c] : p.terms()) {
    ExpVec rest = e;
    const int k = rest[v];
    rest[v] = 0;
    pk[k].add_term(rest, c);
  }

  // Synthetic division by (v + s): q_{d-1} = p_d, q_{k-1} = p_k - s*q_k,
  // remainder = p_0 - s*q_0 = p evaluated at v = -s.
  FormDivision out;
  if (d == 0) {
    out.divisible = p.is_zero();
    out.quotient = MPoly(n);
    out.remainder = p;
    return out;
  }
  std::vector<MPoly> qk(d, MPoly(n));
  qk[d - 1] = pk[d];
  for (int k = d - 1; k >= 1; --k) qk[k - 1] = pk[k] - s * qk[k];
  MPoly rem = pk[0] - s * qk[0];

  if (rem.is_zero()) {
    MPoly q(n);
    for (int k = 0; k < d; ++k) {
      for (const auto& [e, c] : qk[k].terms()) {
        ExpVec ee = e;
        ee[v] += k;
        q.add_term(ee, c);
      }
    }
    out.divisible = true;
    out.quotient = std::move(q);
  } else {
    out.divisible = false;
    out.remainder = std::move(rem);
  }
  return out;
}

MPoly det_triangular(const std::vector<std::vector<MPoly>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det_triangular: empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det_triangular: not square");
  for (size_t r = 0; r < n; ++r)
    for (size_t c = r + 1; c < n; ++c)
      if (!m[r][c].is_zero())
        throw std::invalid_argument("det_triangular: nonzero entry above diagonal");
  MPoly det = m[0][0];
  for (size_t i = 1; i < n; ++i) det = det * m[i][i];
  return det;
}

}  // namespace arranger
