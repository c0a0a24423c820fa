#ifndef CANCELAB_FPMOD_HPP
#define CANCELAB_FPMOD_HPP

#include "cancelab/groebner.hpp"

namespace cancelab {

// Finitely presented module: cokernel of the relation matrix (columns are
// relations in R^rank).  A module over R/J is carried as an R-presentation
// whose relations include J * e_i for every generator; `modulus` records J.
class PresentedModule {
 public:
  PresentedModule() = default;

  static PresentedModule cokernel(const RingPtr& ring, size_t rank,
                                  std::vector<VecPoly> relations);
  static PresentedModule from_matrix(const RingPtr& ring, const PolyMatrix& m);
  static PresentedModule free_module(const RingPtr& ring, size_t rank);
  // quotient ring R/J as a module: one generator, relations = gens of J
  static PresentedModule cyclic_quotient(const Ideal& J);

  const RingPtr& ring() const { return ring_; }
  size_t rank() const { return rank_; }  // ambient/generator count
  const std::vector<VecPoly>& relations() const { return relations_; }
  const std::optional<Ideal>& modulus() const { return modulus_; }
  // records J; augments relations with J*e_i unless augment = false
  void set_modulus(Ideal J, bool augment = true);

  bool has_relations() const { return !relations_.empty(); }
  const ModuleGB& relation_gb() const;  // cached GB of the relation submodule

  bool is_zero() const;  // every generator lies in the relation submodule
  bool element_is_zero(const VecPoly& v) const;
  std::string str() const;

 private:
  RingPtr ring_;
  size_t rank_ = 0;
  std::vector<VecPoly> relations_;
  std::optional<Ideal> modulus_;
  mutable std::shared_ptr<ModuleGB> gb_cache_;
};

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

// Map of presented modules, given by its matrix on generators.  Construction
// certifies that relations of the source land in the relation submodule of
// the target (the lift witness is kept).
class ModuleMap {
 public:
  ModuleMap() = default;
  ModuleMap(PresentedModule source, PresentedModule target, PolyMatrix matrix);

  static ModuleMap identity(const PresentedModule& m);
  static ModuleMap zero(const PresentedModule& source, const PresentedModule& target);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }
  const PolyMatrix& relation_lift() const { return relation_lift_; }

  VecPoly apply(const VecPoly& v) const { return mat_apply(matrix_, v); }
  bool is_zero_map() const;

  std::string str() const { return mat_str(matrix_); }

 private:
  PresentedModule source_, target_;
  PolyMatrix matrix_;
  PolyMatrix relation_lift_;
};

ModuleMap compose(const ModuleMap& second, const ModuleMap& first);
// [a 0; 0 b] on direct sums
ModuleMap direct_sum_map(const ModuleMap& a, const ModuleMap& b);

// ---- operations ----

// columns generating ker(R^cols -> R^rows) of a matrix
std::vector<VecPoly> syzygies(const PolyMatrix& m, const RingPtr& ring);

PresentedModule present_cokernel(const RingPtr& ring, const PolyMatrix& m);

struct KernelResult {
  PresentedModule module;
  ModuleMap inclusion;  // kernel -> source
};
KernelResult kernel_of_map(const ModuleMap& f);

PresentedModule cokernel_of_map(const ModuleMap& f);

// express v (in the ambient of m's target... see .cpp) -- helper:
// column coordinates of v over the generators of a submodule given by
// `cols`, modulo the relation submodule `mod_rels`; nullopt if not present
std::optional<VecPoly> express_in(const RingPtr& ring, size_t rank,
                                  const std::vector<VecPoly>& cols,
                                  const std::vector<VecPoly>& mod_rels,
                                  const VecPoly& v);

struct HomResult {
  PresentedModule module;  // Hom(M, N)
  // decode generator-coordinates into an actual map M -> N
  ModuleMap decode(const VecPoly& coords) const;
  // express a map as coordinates over Hom generators; nullopt if absent
  std::optional<VecPoly> encode(const ModuleMap& f) const;

  PresentedModule source, target;
  std::vector<PolyMatrix> generators;  // matrices of the generating maps

  // internals used by encode/decode
  std::vector<VecPoly> flat_gens;          // generators flattened in R^(gN*gM)
  std::vector<VecPoly> domain_relations;   // relations of N^(gM), flattened
};
HomResult hom_module(const PresentedModule& m, const PresentedModule& n);

// dual presentation via transposed syzygies; generators are functionals
// (rows) on the ambient of M, stored as columns in R^rank(M)
struct DualResult {
  PresentedModule module;               // M* presentation
  std::vector<VecPoly> functionals;     // generator j <-> row functionals[j]^T
};
DualResult dual_module(const PresentedModule& m);

// phi: M -> N induces phi*: N* -> M*
ModuleMap dual_map(const ModuleMap& f, const DualResult& target_dual,
                   const DualResult& source_dual);

PresentedModule ext1(const PresentedModule& m);  // Ext^1(M, R)

// homology at the middle of X --f--> Y --g--> Z with g o f = 0
PresentedModule homology(const ModuleMap& f, const ModuleMap& g);

struct IsoCertificate {
  bool iso = false;
  std::string failure;  // which check failed, when not an iso
  PolyMatrix inverse;   // certified when iso
};
IsoCertificate is_isomorphism(const ModuleMap& f);

int generic_rank(const PresentedModule& m);

Ideal fitting_ideal(const PresentedModule& m, int i);

PresentedModule tensor_with_quotient(const PresentedModule& m, const Ideal& j);

struct DoubleDualResult {
  bool reflexive = false;
  ModuleMap evaluation;  // M -> M**
  std::string failure;
};
DoubleDualResult double_dual_check(const PresentedModule& m);

// freeness of M (over R/modulus when present) of the given rank, by the
// Fitting criterion Fitt_{r-1} = 0 and Fitt_r = (1)
bool fitting_free_of_rank(const PresentedModule& m, int r);

// smallest generator index that alone generates m, with the annihilator
// ideal; nullopt when no single generator suffices
struct CyclicStructure {
  size_t generator;
  Ideal annihilator;
};
std::optional<CyclicStructure> cyclic_structure(const PresentedModule& m);

}  // namespace cancelab

#endif
