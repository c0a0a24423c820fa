#ifndef CANCELAB_SUSLIN_HPP
#define CANCELAB_SUSLIN_HPP

#include "cancelab/sequence.hpp"

namespace cancelab {

// Split pair (a, m) in A (+) M with M = A^n free and explicit basis data:
// columns basis[i] reduce to a basis of M/aM.  Construction certifies the
// split witness a*b + phi(m) = 1 and the basis-mod-a condition.
struct UnimodularPair {
  RingPtr ring;                  // A
  Polynomial a;
  size_t rank = 0;               // n = rank of M
  VecPoly m;                     // coordinates in A^n
  std::vector<VecPoly> basis;    // basis[0] = m
  Polynomial split_b;            // witness
  VecPoly split_phi;             // witness row, a*b + sum phi_i m_i = 1
  PolyMatrix basis_matrix;       // columns are the basis vectors

  static UnimodularPair make(const RingPtr& ring, Polynomial a, VecPoly m,
                             std::vector<VecPoly> basis);
  // cokernel of A --(a,m)--> A (+) M
  PresentedModule pair_cokernel() const;
};

struct TransvectionMove {
  enum class Kind { ShiftA, ShiftM };
  Kind kind;
  VecPoly data;  // ShiftA: functional phi (row); ShiftM: m' in A^n
};

struct TransvectResult {
  UnimodularPair moved;
  ModuleMap cokernel_iso;  // coker(a, m) -> coker(moved)
  IsoCertificate certificate;
};
TransvectResult transvect(const UnimodularPair& pair, const TransvectionMove& move);

// n x n matrix over A[t] with a on the diagonal and t feeding each basis
// vector into the previous one: column 0 is a*e0, column j is t*e_{j-1} + a*e_j.
struct BidiagonalResult {
  RingPtr extended_ring;  // A[t]
  size_t t_index;
  PolyMatrix phi;
};
BidiagonalResult build_phi_matrix(const RingPtr& ring, size_t n, const Polynomial& a);

struct StepRecord {
  std::string desc;
  bool pass = false;
  std::string witness;
};

struct PerturbationCertificate {
  PresentedModule from;  // A (+) M/(a^d, m)
  PresentedModule to;    // A (+) M/(a^d, m + a m')
  ModuleMap iso;
  IsoCertificate certificate;
  std::vector<StepRecord> steps;
};
// certified isomorphism A (+) M/(a^d, m) = A (+) M/(a^d, m + a m'), built by
// the elementary-transformation recipe and re-validated independently
PerturbationCertificate perturbation_iso(const UnimodularPair& pair,
                                         const VecPoly& mprime, unsigned d);

struct AbsorptionCertificate {
  PresentedModule from;  // A (+) M/(a^n, m)
  PresentedModule to;    // M, free of rank n
  ModuleMap iso;
  IsoCertificate certificate;
  std::vector<StepRecord> steps;
};
// certified isomorphism A (+) M/(a^n, m) = M through the A[t]-deformation
// N = coker(phi(t), psi) and its specializations at t = 0, 1
AbsorptionCertificate absorption_iso(const UnimodularPair& pair);

}  // namespace cancelab

#endif
