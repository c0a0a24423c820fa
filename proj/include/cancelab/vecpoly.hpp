#ifndef CANCELAB_VECPOLY_HPP
#define CANCELAB_VECPOLY_HPP

#include <vector>

#include "cancelab/polynomial.hpp"

namespace cancelab {

// Element of a free module R^g: one polynomial per coordinate.
using VecPoly = std::vector<Polynomial>;

VecPoly vp_zero(const RingPtr& ring, size_t rank);
VecPoly vp_unit(const RingPtr& ring, size_t rank, size_t i);
bool vp_is_zero(const VecPoly& v);
bool vp_eq(const VecPoly& a, const VecPoly& b);
VecPoly vp_add(const VecPoly& a, const VecPoly& b);
VecPoly vp_sub(const VecPoly& a, const VecPoly& b);
VecPoly vp_neg(const VecPoly& a);
VecPoly vp_scale(const VecPoly& a, const Polynomial& c);
VecPoly vp_mult_term(const VecPoly& a, const Monomial& m, const FieldElement& c);
int vp_degree(const VecPoly& a);  // max entry degree, -1 if zero
std::string vp_str(const VecPoly& a);

// Module term order on (component, monomial).
struct ModuleOrder {
  enum class Kind { POT, TOP };
  Kind kind = Kind::POT;
  MonomialOrder mono = MonomialOrder::grevlex();

  // POT: lower component dominates; TOP: monomial first, then lower component
  int compare(size_t ca, const Monomial& ma, size_t cb, const Monomial& mb) const {
    if (kind == Kind::POT) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return mono.compare(ma, mb);
    }
    if (int c = mono.compare(ma, mb); c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  static ModuleOrder pot(MonomialOrder m = MonomialOrder::grevlex()) {
    return {Kind::POT, m};
  }
  static ModuleOrder top(MonomialOrder m = MonomialOrder::grevlex()) {
    return {Kind::TOP, m};
  }
};

struct ModTerm {
  size_t comp;
  Monomial mono;
  FieldElement coeff;
};

// leading module term; v must be nonzero
ModTerm vp_leading_term(const VecPoly& v, const ModuleOrder& order);

// Dense polynomial matrix, row-major: mat[i][j].
using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix mat_zero(const RingPtr& ring, size_t rows, size_t cols);
PolyMatrix mat_identity(const RingPtr& ring, size_t n);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_transpose(const PolyMatrix& a);
VecPoly mat_apply(const PolyMatrix& a, const VecPoly& x);
VecPoly mat_col(const PolyMatrix& a, size_t j);
PolyMatrix mat_from_cols(const RingPtr& ring, size_t rows,
                         const std::vector<VecPoly>& cols);
std::vector<VecPoly> mat_cols(const PolyMatrix& a);
Polynomial mat_det(const PolyMatrix& a);  // cofactor expansion, small n
std::string mat_str(const PolyMatrix& a);

}  // namespace cancelab

#endif
