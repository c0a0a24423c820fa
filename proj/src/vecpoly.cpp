#include "cancelab/vecpoly.hpp"

#include <sstream>

namespace cancelab {

VecPoly vp_zero(const RingPtr& ring, size_t rank) {
  return VecPoly(rank, Polynomial::zero(ring));
}

VecPoly vp_unit(const RingPtr& ring, size_t rank, size_t i) {
  VecPoly v = vp_zero(ring, rank);
  v[i] = Polynomial::from_int(ring, 1);
  return v;
}

bool vp_is_zero(const VecPoly& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

bool vp_eq(const VecPoly& a, const VecPoly& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

VecPoly vp_add(const VecPoly& a, const VecPoly& b) {
  VecPoly r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

VecPoly vp_sub(const VecPoly& a, const VecPoly& b) {
  VecPoly r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

VecPoly vp_neg(const VecPoly& a) {
  VecPoly r = a;
  for (auto& p : r) p = -p;
  return r;
}

VecPoly vp_scale(const VecPoly& a, const Polynomial& c) {
  VecPoly r = a;
  for (auto& p : r) p = p * c;
  return r;
}

VecPoly vp_mult_term(const VecPoly& a, const Monomial& m, const FieldElement& c) {
  VecPoly r = a;
  for (auto& p : r) p = p.mult_term(m, c);
  return r;
}

int vp_degree(const VecPoly& a) {
  int d = -1;
  for (const auto& p : a) d = std::max(d, p.degree());
  return d;
}

std::string vp_str(const VecPoly& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i].str();
  }
  os << ")";
  return os.str();
}

ModTerm vp_leading_term(const VecPoly& v, const ModuleOrder& order) {
  ModTerm cur;
  bool found = false;
  for (size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    Term t = v[c].leading_term(order.mono);
    if (!found || order.compare(c, t.mono, cur.comp, cur.mono) > 0) {
      cur = ModTerm{c, t.mono, t.coeff};
      found = true;
    }
  }
  if (!found) throw ArithError("leading term of zero vector");
  return cur;
}

PolyMatrix mat_zero(const RingPtr& ring, size_t rows, size_t cols) {
  return PolyMatrix(rows, std::vector<Polynomial>(cols, Polynomial::zero(ring)));
}

PolyMatrix mat_identity(const RingPtr& ring, size_t n) {
  PolyMatrix m = mat_zero(ring, n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = Polynomial::from_int(ring, 1);
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  size_t n = a.size();
  size_t k = b.size();
  size_t m = (k && !b[0].empty()) ? b[0].size() : 0;
  if (n == 0) return {};
  if (m == 0) return PolyMatrix(n, std::vector<Polynomial>());
  RingPtr ring;
  if (!a[0].empty()) ring = a[0][0].ring();
  else ring = b[0][0].ring();
  PolyMatrix r = mat_zero(ring, n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    }
  return r;
}

PolyMatrix mat_transpose(const PolyMatrix& a) {
  if (a.empty()) return {};
  PolyMatrix r(a[0].size(), std::vector<Polynomial>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

VecPoly mat_apply(const PolyMatrix& a, const VecPoly& x) {
  VecPoly r;
  r.reserve(a.size());
  for (const auto& row : a) {
    Polynomial s = Polynomial::zero(x.empty() ? row[0].ring() : x[0].ring());
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) s = s + row[j] * x[j];
    r.push_back(std::move(s));
  }
  return r;
}

VecPoly mat_col(const PolyMatrix& a, size_t j) {
  VecPoly r;
  r.reserve(a.size());
  for (const auto& row : a) r.push_back(row[j]);
  return r;
}

PolyMatrix mat_from_cols(const RingPtr& ring, size_t rows,
                         const std::vector<VecPoly>& cols) {
  PolyMatrix m = mat_zero(ring, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

std::vector<VecPoly> mat_cols(const PolyMatrix& a) {
  std::vector<VecPoly> out;
  if (a.empty()) return out;
  for (size_t j = 0; j < a[0].size(); ++j) out.push_back(mat_col(a, j));
  return out;
}

Polynomial mat_det(const PolyMatrix& a) {
  size_t n = a.size();
  if (n == 0) throw ArithError("det of empty matrix");
  const RingPtr& ring = a[0][0].ring();
  if (n == 1) return a[0][0];
  Polynomial det = Polynomial::zero(ring);
  // expand along first row
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = a[0][j] * mat_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

std::string mat_str(const PolyMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << "; ";
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (j) os << ", ";
      os << a[i][j].str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace cancelab
