#include "cancelab/sequence.hpp"

namespace cancelab {

ShortExactSequence ShortExactSequence::make(ModuleMap inject, ModuleMap project) {
  if (inject.target().rank() != project.source().rank())
    throw ArithError("sequence: maps not composable");
  if (!compose(project, inject).is_zero_map())
    throw ArithError("sequence: project o inject is not zero");
  ShortExactSequence s;
  s.left = inject.source();
  s.middle = inject.target();
  s.right = project.target();
  s.inject = std::move(inject);
  s.project = std::move(project);
  return s;
}

ExactnessReport verify_exact(const ShortExactSequence& seq) {
  ExactnessReport rep;
  auto kin = kernel_of_map(seq.inject);
  if (!kin.module.is_zero()) {
    rep.failure = "inject has nonzero kernel";
    rep.witness = kin.module;
    return rep;
  }
  PresentedModule mid = homology(seq.inject, seq.project);
  if (!mid.is_zero()) {
    rep.failure = "nonzero homology at the middle";
    rep.witness = mid;
    return rep;
  }
  PresentedModule cok = cokernel_of_map(seq.project);
  if (!cok.is_zero()) {
    rep.failure = "project is not surjective";
    rep.witness = cok;
    return rep;
  }
  rep.exact = true;
  return rep;
}

SplitReport verify_split(const ShortExactSequence& seq) {
  SplitReport rep;
  const RingPtr& ring = seq.middle.ring();
  size_t gmid = seq.middle.rank(), gr = seq.right.rank();

  PolyMatrix smat = mat_zero(ring, gmid, gr);
  if (seq.right.relations().empty()) {
    // free target: lift each generator through the projection
    std::vector<VecPoly> cols;
    for (size_t j = 0; j < gmid; ++j) cols.push_back(mat_col(seq.project.matrix(), j));
    for (const auto& q : seq.right.relations()) cols.push_back(q);
    for (size_t i = 0; i < gr; ++i) {
      auto h = express_in(ring, gr, cols, {}, vp_unit(ring, gr, i));
      if (!h) {
        rep.failure = "generator of the right module has no preimage";
        return rep;
      }
      for (size_t j = 0; j < gmid; ++j) smat[j][i] = (*h)[j];
    }
  } else {
    // solve project o s = id inside Hom(right, middle) -> Hom(right, right)
    HomResult h1 = hom_module(seq.right, seq.middle);
    HomResult h2 = hom_module(seq.right, seq.right);
    size_t k1 = h1.module.rank(), k2 = h2.module.rank();
    std::vector<VecPoly> mu_cols;
    for (size_t k = 0; k < k1; ++k) {
      ModuleMap g = h1.decode(vp_unit(ring, k1, k));
      auto coords = h2.encode(compose(seq.project, g));
      if (!coords) throw ArithError("verify_split: hom encoding failed");
      mu_cols.push_back(std::move(*coords));
    }
    auto idc = h2.encode(ModuleMap::identity(seq.right));
    if (!idc) throw ArithError("verify_split: identity not encodable");
    auto sol = express_in(ring, k2, mu_cols, h2.module.relations(), *idc);
    if (!sol) {
      rep.failure = "the lifting equation project o s = id is unsolvable";
      return rep;
    }
    ModuleMap s = h1.decode(*sol);
    smat = s.matrix();
  }

  ModuleMap section(seq.right, seq.middle, smat);
  // check project o section = id modulo relations of right
  PolyMatrix comp = mat_mul(seq.project.matrix(), section.matrix());
  for (size_t j = 0; j < gr; ++j) {
    VecPoly col = mat_col(comp, j);
    col[j] = col[j] - Polynomial::from_int(ring, 1);
    if (!seq.right.element_is_zero(col)) {
      rep.failure = "candidate section does not split the projection";
      return rep;
    }
  }

  // middle is left (+) right via [inject | section]
  PresentedModule sum = direct_sum(seq.left, seq.right);
  PolyMatrix big = mat_zero(ring, gmid, sum.rank());
  for (size_t i = 0; i < gmid; ++i) {
    for (size_t j = 0; j < seq.left.rank(); ++j) big[i][j] = seq.inject.matrix()[i][j];
    for (size_t j = 0; j < gr; ++j) big[i][seq.left.rank() + j] = smat[i][j];
  }
  ModuleMap assembled(sum, seq.middle, std::move(big));
  IsoCertificate iso = is_isomorphism(assembled);
  if (!iso.iso) {
    rep.failure = "split assembly is not an isomorphism: " + iso.failure;
    return rep;
  }
  rep.split = true;
  rep.section = std::move(section);
  rep.assembled = std::move(assembled);
  rep.middle_iso = std::move(iso);
  return rep;
}

SpliceResult schanuel_splice(const ModuleMap& surj_a, const ModuleMap& surj_b) {
  if (!same_ring(surj_a.target().ring(), surj_b.target().ring()) ||
      surj_a.target().rank() != surj_b.target().rank())
    throw ArithError("schanuel_splice: targets differ");
  if (!cokernel_of_map(surj_a).is_zero())
    throw ArithError("schanuel_splice: first map is not surjective");
  if (!cokernel_of_map(surj_b).is_zero())
    throw ArithError("schanuel_splice: second map is not surjective");

  const RingPtr& ring = surj_a.source().ring();
  const PresentedModule& a = surj_a.source();
  const PresentedModule& b = surj_b.source();
  PresentedModule sum = direct_sum(a, b);

  // difference map (surjA, -surjB): A (+) B -> T
  PolyMatrix diff = mat_zero(ring, surj_a.target().rank(), sum.rank());
  for (size_t i = 0; i < surj_a.target().rank(); ++i) {
    for (size_t j = 0; j < a.rank(); ++j) diff[i][j] = surj_a.matrix()[i][j];
    for (size_t j = 0; j < b.rank(); ++j)
      diff[i][a.rank() + j] = -surj_b.matrix()[i][j];
  }
  ModuleMap delta(sum, surj_a.target(), std::move(diff));
  KernelResult pk = kernel_of_map(delta);

  // coordinate projections restricted to the pullback
  PolyMatrix pa = mat_zero(ring, a.rank(), pk.module.rank());
  PolyMatrix pb = mat_zero(ring, b.rank(), pk.module.rank());
  for (size_t k = 0; k < pk.module.rank(); ++k) {
    for (size_t i = 0; i < a.rank(); ++i) pa[i][k] = pk.inclusion.matrix()[i][k];
    for (size_t i = 0; i < b.rank(); ++i)
      pb[i][k] = pk.inclusion.matrix()[a.rank() + i][k];
  }
  ModuleMap proj_a(pk.module, a, std::move(pa));
  ModuleMap proj_b(pk.module, b, std::move(pb));

  // ker(surjB) embeds into P as (0, k)
  KernelResult kb = kernel_of_map(surj_b);
  std::vector<VecPoly> pcols;
  for (size_t k = 0; k < pk.module.rank(); ++k)
    pcols.push_back(mat_col(pk.inclusion.matrix(), k));
  PolyMatrix kappa = mat_zero(ring, pk.module.rank(), kb.module.rank());
  for (size_t k = 0; k < kb.module.rank(); ++k) {
    VecPoly emb = vp_zero(ring, sum.rank());
    VecPoly img = mat_col(kb.inclusion.matrix(), k);
    for (size_t i = 0; i < b.rank(); ++i) emb[a.rank() + i] = img[i];
    auto coords = express_in(ring, sum.rank(), pcols, sum.relations(), emb);
    if (!coords)
      throw ArithError("schanuel_splice: kernel element missing from the pullback");
    for (size_t i = 0; i < pk.module.rank(); ++i) kappa[i][k] = (*coords)[i];
  }
  ModuleMap inject(kb.module, pk.module, std::move(kappa));

  SpliceResult out;
  out.pullback = pk.module;
  out.include_in_sum = pk.inclusion;
  out.proj_to_a = proj_a;
  out.proj_to_b = std::move(proj_b);
  out.seq = ShortExactSequence::make(std::move(inject), std::move(proj_a));
  out.exactness = verify_exact(out.seq);
  if (!out.exactness.exact)
    throw ArithError("schanuel_splice: spliced sequence failed exactness: " +
                     out.exactness.failure);
  return out;
}

DualizeResult dualize_sequence(const ShortExactSequence& seq) {
  DualizeResult out;
  out.dual_left = dual_module(seq.left);
  out.dual_middle = dual_module(seq.middle);
  out.dual_right = dual_module(seq.right);

  ModuleMap proj_dual = dual_map(seq.project, out.dual_right, out.dual_middle);
  ModuleMap inj_dual = dual_map(seq.inject, out.dual_middle, out.dual_left);
  out.seq = ShortExactSequence::make(std::move(proj_dual), std::move(inj_dual));
  out.exactness = verify_exact(out.seq);
  out.ext_right = ext1(seq.right);
  if (!out.ext_right.is_zero()) out.ext_right_cyclic = cyclic_structure(out.ext_right);
  return out;
}

}  // namespace cancelab
