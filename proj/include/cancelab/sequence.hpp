#ifndef CANCELAB_SEQUENCE_HPP
#define CANCELAB_SEQUENCE_HPP

#include "cancelab/fpmod.hpp"

namespace cancelab {

// 0 -> left -> middle -> right -> 0 candidate; the composite is checked to
// vanish at construction, exactness only by verify_exact.
struct ShortExactSequence {
  PresentedModule left, middle, right;
  ModuleMap inject;   // left -> middle
  ModuleMap project;  // middle -> right

  static ShortExactSequence make(ModuleMap inject, ModuleMap project);
};

struct ExactnessReport {
  bool exact = false;
  std::string failure;       // empty when exact
  PresentedModule witness;   // nonzero homology module when not exact
};
ExactnessReport verify_exact(const ShortExactSequence& seq);

struct SplitReport {
  bool split = false;
  std::string failure;
  ModuleMap section;          // s: right -> middle, project o s = id
  ModuleMap assembled;        // left (+) right -> middle via [inject | s]
  IsoCertificate middle_iso;  // certificate that `assembled` is an iso
};
SplitReport verify_split(const ShortExactSequence& seq);

struct SpliceResult {
  PresentedModule pullback;      // P = ker(A (+) B -> T)
  ModuleMap include_in_sum;      // P -> A (+) B
  ModuleMap proj_to_a;           // P -> A
  ModuleMap proj_to_b;           // P -> B
  ShortExactSequence seq;        // 0 -> ker(surjB) -> P -> A -> 0
  ExactnessReport exactness;     // checked on every call
};
// Schanuel-style pullback splice of two surjections onto the same target.
SpliceResult schanuel_splice(const ModuleMap& surj_a, const ModuleMap& surj_b);

struct DualizeResult {
  ShortExactSequence seq;  // candidate 0 -> right* -> middle* -> left* -> 0
  ExactnessReport exactness;
  DualResult dual_left, dual_middle, dual_right;
  PresentedModule ext_right;  // Ext^1(right, R), consumed by the check
  std::optional<CyclicStructure> ext_right_cyclic;
};
DualizeResult dualize_sequence(const ShortExactSequence& seq);

}  // namespace cancelab

#endif
