#ifndef CANCELAB_MODGB_HPP
#define CANCELAB_MODGB_HPP

#include <optional>

#include "cancelab/vecpoly.hpp"

namespace cancelab {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hard caps on the Buchberger loop: exceeding either raises
// ResourceLimitError rather than returning a truncated answer.
struct Limits {
  unsigned long max_steps = 1000000;
  int max_degree = 40;
};

Limits& default_limits();

struct GBElement {
  VecPoly v;
  VecPoly cofactor;  // v = sum_j cofactor[j] * generator[j]
  ModTerm lead;
};

// Reduced Groebner basis of a submodule of R^rank, with expressions of the
// basis in the original generators carried through the computation.
class ModuleGB {
 public:
  ModuleGB() = default;

  const RingPtr& ring() const { return ring_; }
  size_t rank() const { return rank_; }
  size_t ngens() const { return ngens_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<GBElement>& elems() const { return elems_; }

  VecPoly normal_form(const VecPoly& f) const;
  // division by the basis with quotient tracking
  std::pair<std::vector<Polynomial>, VecPoly> divide(const VecPoly& f) const;
  bool contains(const VecPoly& f) const;
  // cofactors h over the *original generators* with f = sum h_j gen_j
  std::optional<std::vector<Polynomial>> member(const VecPoly& f) const;
  bool is_full_module() const;  // contains every unit vector

  friend ModuleGB module_groebner(const RingPtr& ring, size_t rank,
                                  const std::vector<VecPoly>& gens,
                                  const ModuleOrder& order, const Limits& lim);

 private:
  RingPtr ring_;
  size_t rank_ = 0;
  size_t ngens_ = 0;
  ModuleOrder order_;
  std::vector<GBElement> elems_;
};

ModuleGB module_groebner(const RingPtr& ring, size_t rank,
                         const std::vector<VecPoly>& gens,
                         const ModuleOrder& order, const Limits& lim);
ModuleGB module_groebner(const RingPtr& ring, size_t rank,
                         const std::vector<VecPoly>& gens);

// Columns generating ker( R^k -> R^rank, e_i -> gens[i] ), computed by the
// block-elimination embedding into R^(rank+k).
std::vector<VecPoly> syzygy_columns(const RingPtr& ring, size_t rank,
                                    const std::vector<VecPoly>& gens,
                                    const Limits& lim);
std::vector<VecPoly> syzygy_columns(const RingPtr& ring, size_t rank,
                                    const std::vector<VecPoly>& gens);

}  // namespace cancelab

#endif
