// Test-only brute-force oracles: dense linear algebra over GF(p) used to
// cross-check Groebner/syzygy computations independently of the engine.
#ifndef CANCELAB_TESTS_ORACLES_HPP
#define CANCELAB_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "cancelab/vecpoly.hpp"

namespace cancelab::oracles {

inline std::vector<Monomial> monos_up_to(size_t nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  while (true) {
    int tot = 0;
    for (int x : e) tot += x;
    if (tot <= d) out.push_back(Monomial{e});
    size_t i = 0;
    while (i < nvars) {
      if (++e[i] > d) {
        e[i] = 0;
        ++i;
      } else {
        break;
      }
    }
    if (i == nvars) break;
  }
  return out;
}

inline unsigned long inv_mod(unsigned long x, unsigned long p) {
  unsigned long r = 1, e = p - 2, b = x % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// row-reduce in place; returns pivot columns
inline std::vector<int> rref_mod_p(std::vector<std::vector<unsigned long>>& a,
                                   unsigned long p) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    unsigned long iv = inv_mod(a[r][c], p);
    for (size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] * iv % p;
    for (size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == r || a[r2][c] == 0) continue;
      unsigned long f = a[r2][c];
      for (size_t k = 0; k < cols; ++k)
        a[r2][k] = (a[r2][k] + (p - f) * a[r][k]) % p;
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

// basis of the nullspace of A over GF(p)
inline std::vector<std::vector<unsigned long>> nullspace_mod_p(
    std::vector<std::vector<unsigned long>> a, unsigned long p) {
  size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivots = rref_mod_p(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<unsigned long>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<unsigned long> v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      unsigned long coeff = a[r][free];
      if (coeff) v[static_cast<size_t>(pivots[r])] = (p - coeff) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// all degree <= capdeg elements of ker(R^k -> R^rank), R = GF(p)[vars],
// where the map sends e_i to cols[i]
inline std::vector<VecPoly> kernel_elements_by_linear_algebra(
    const RingPtr& ring, size_t rank, const std::vector<VecPoly>& cols,
    int capdeg) {
  unsigned long p = ring->field->p;
  size_t k = cols.size();
  int maxgen = 0;
  for (const auto& c : cols) maxgen = std::max(maxgen, vp_degree(c));
  auto cof_monos = monos_up_to(ring->nvars(), capdeg);
  auto eq_monos = monos_up_to(ring->nvars(), capdeg + maxgen);
  auto mono_index = [&](const Monomial& m) -> int {
    for (size_t i = 0; i < eq_monos.size(); ++i)
      if (eq_monos[i] == m) return static_cast<int>(i);
    return -1;
  };
  size_t ncols = k * cof_monos.size();
  size_t nrows = rank * eq_monos.size();
  std::vector<std::vector<unsigned long>> A(nrows,
                                            std::vector<unsigned long>(ncols, 0));
  for (size_t gi = 0; gi < k; ++gi)
    for (size_t mi = 0; mi < cof_monos.size(); ++mi) {
      size_t col = gi * cof_monos.size() + mi;
      for (size_t r = 0; r < rank; ++r) {
        Polynomial prod = cols[gi][r].mult_term(cof_monos[mi], fe_one(ring->field));
        for (const auto& t : prod.terms()) {
          int row = mono_index(t.mono);
          A[r * eq_monos.size() + static_cast<size_t>(row)][col] = t.coeff.residue();
        }
      }
    }
  std::vector<VecPoly> out;
  for (const auto& v : nullspace_mod_p(std::move(A), p)) {
    VecPoly elem = vp_zero(ring, k);
    for (size_t gi = 0; gi < k; ++gi) {
      std::vector<Term> terms;
      for (size_t mi = 0; mi < cof_monos.size(); ++mi) {
        unsigned long c = v[gi * cof_monos.size() + mi];
        if (c) terms.push_back({cof_monos[mi], fe_int(ring->field, static_cast<long>(c))});
      }
      elem[gi] = Polynomial::from_terms(ring, std::move(terms));
    }
    out.push_back(std::move(elem));
  }
  return out;
}

}  // namespace cancelab::oracles

#endif
