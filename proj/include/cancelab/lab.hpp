#ifndef CANCELAB_LAB_HPP
#define CANCELAB_LAB_HPP

#include "cancelab/obstruction.hpp"
#include "cancelab/sequence.hpp"

namespace cancelab {

enum class Family { FourVariable, RankFamily, CharP, Extension };

std::string family_name(Family f);

struct FamilyParams {
  Family family = Family::FourVariable;
  int n = 0;                 // RankFamily / Extension
  unsigned long p = 0;       // CharP
  std::string minpoly_text;  // Extension, default "x^n-2"
  std::string q_text;        // Extension, default "x"
};

// Pair of presentation vectors with their diagonal comparison and the
// supplied radical J, all invariants certified at construction.
struct ExamplePair {
  FamilyParams params;
  FieldPtr field;
  RingPtr ring;
  std::vector<Polynomial> v1, v2;  // generator rows, entrywise d_j v1_j = v2_j
  std::vector<Polynomial> d_diag;
  Ideal i_ideal;  // (v1)
  Ideal j_ideal;  // supplied radical of I
  std::vector<int> rad_witness;  // power_in_ideal exponent per J generator
};

ExamplePair build_example(const FamilyParams& params, FieldPtr field,
                          const std::optional<std::string>& v2_override = {});

struct CertStep {
  std::string id;
  std::string desc;
  bool pass = false;
  std::string witness;
};

struct StablePipelineResult {
  std::vector<CertStep> steps;
  bool all_passed = false;
  // final certified isomorphism M1 (+) R -> M2 (+) R and its inverse
  PresentedModule sum1, sum2;
  PolyMatrix iso, iso_inverse;
};
StablePipelineResult verify_stable_isomorphism(const ExamplePair& pair);

struct ObstructionPipelineResult {
  std::vector<CertStep> steps;
  bool all_passed = false;
  std::optional<UnitEquation> equation;
  std::optional<SolveResult> verdict;
};
ObstructionPipelineResult verify_non_isomorphism_obstruction(const ExamplePair& pair);

struct Certificate {
  std::string example;
  FamilyParams params;
  std::string field_text;
  std::vector<CertStep> steps;
  bool stably_isomorphic = false;
  bool obstruction_unsolvable = false;

  std::string to_json() const;  // canonical: sorted keys, LF, UTF-8
  std::string to_text() const;  // human transcript
};

Certificate run_full_certificate(const FamilyParams& params, FieldPtr field,
                                 const std::optional<std::string>& v2_override = {});

}  // namespace cancelab

#endif
