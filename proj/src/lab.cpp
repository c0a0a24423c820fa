#include "cancelab/lab.hpp"

#include <functional>
#include <sstream>

#include "cancelab/parser.hpp"
#include "json.hpp"

namespace cancelab {

std::string family_name(Family f) {
  switch (f) {
    case Family::FourVariable: return "four_variable";
    case Family::RankFamily: return "rank_family";
    case Family::CharP: return "char_p";
    case Family::Extension: return "extension";
  }
  return {};
}

namespace {

std::vector<Polynomial> row_to_gens(const std::vector<Polynomial>& v) { return v; }

std::string join_polys(const std::vector<Polynomial>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

PolyMatrix column_of(const RingPtr& ring, const std::vector<Polynomial>& v) {
  PolyMatrix m = mat_zero(ring, v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m[i][0] = v[i];
  return m;
}

PolyMatrix row_of(const RingPtr& ring, const std::vector<Polynomial>& v) {
  PolyMatrix m = mat_zero(ring, 1, v.size());
  for (size_t i = 0; i < v.size(); ++i) m[0][i] = v[i];
  return m;
}

}  // namespace

ExamplePair build_example(const FamilyParams& params, FieldPtr field,
                          const std::optional<std::string>& v2_override) {
  ExamplePair pair;
  pair.params = params;

  switch (params.family) {
    case Family::FourVariable: {
      if (!field) field = FieldDescriptor::rationals();
      pair.ring = RingDescriptor::make(field, {"x", "y", "z", "t"});
      const RingPtr& r = pair.ring;
      pair.v1 = parse_polynomial_list("x; y; z*t-1", r);
      pair.v2 = parse_polynomial_list("x; y*z; z*t-1", r);
      pair.j_ideal = Ideal::make(r, parse_polynomial_list("x; y; z*t-1", r));
      break;
    }
    case Family::RankFamily: {
      if (params.n < 1) throw ArithError("rank_family: n must be >= 1");
      if (!field) field = FieldDescriptor::rationals();
      pair.ring = RingDescriptor::make(field, {"x", "y", "z", "t"});
      const RingPtr& r = pair.ring;
      int n = params.n;
      for (int i = 0; i <= n; ++i) {
        Monomial m = Monomial::one(4);
        m.e[0] = n - i;
        m.e[1] = i;
        pair.v1.push_back(Polynomial::from_term(r, m, fe_one(field)));
      }
      pair.v1.push_back(parse_polynomial("z*t-1", r));
      pair.v2 = pair.v1;
      pair.v2[0] = pair.v2[0] * parse_polynomial("z", r);
      pair.j_ideal = Ideal::make(r, parse_polynomial_list("x; y; z*t-1", r));
      break;
    }
    case Family::CharP: {
      unsigned long p = params.p;
      if (p < 2) throw ArithError("char_p: p must be a prime");
      if (!field) field = FieldDescriptor::prime(p);
      if (field->characteristic() != p)
        throw ArithError("char_p: field characteristic must equal p");
      pair.ring = RingDescriptor::make(field, {"x", "y", "z"});
      const RingPtr& r = pair.ring;
      for (unsigned long i = 0; i < p; ++i) {
        Monomial m = Monomial::one(3);
        m.e[0] = static_cast<int>(p * (p - 1 - i));
        m.e[1] = static_cast<int>(i);
        pair.v1.push_back(Polynomial::from_term(r, m, fe_one(field)));
      }
      pair.v1.push_back(parse_polynomial("z", r));
      pair.v2 = pair.v1;
      pair.v2[p - 1] = pair.v2[p - 1] * parse_polynomial("1+x", r);
      std::string jt = "x^" + std::to_string(p) + "; y; z";
      pair.j_ideal = Ideal::make(r, parse_polynomial_list(jt, r));
      break;
    }
    case Family::Extension: {
      int n = params.n;
      if (n < 2) throw ArithError("extension: n must be >= 2");
      if (!field) field = FieldDescriptor::rationals();
      if (field->kind != FieldDescriptor::Kind::Rationals)
        throw UnsupportedError("extension family is certified over QQ only");
      pair.ring = RingDescriptor::make(field, {"x", "y", "z"});
      const RingPtr& r = pair.ring;
      std::string mp = params.minpoly_text.empty()
                           ? ("x^" + std::to_string(n) + "-2")
                           : params.minpoly_text;
      std::string qt = params.q_text.empty() ? "x" : params.q_text;
      pair.params.minpoly_text = mp;
      pair.params.q_text = qt;
      Polynomial pp = parse_polynomial(mp, r);
      Polynomial q = parse_polynomial(qt, r);
      // validate irreducibility by building L = k[x]/(p) up front
      {
        std::vector<FieldElement> coeffs(static_cast<size_t>(pp.degree()) + 1,
                                         fe_zero(field));
        for (const auto& t : pp.terms()) {
          for (size_t vi = 1; vi < 3; ++vi)
            if (t.mono.e[vi] != 0)
              throw ArithError("extension: minimal polynomial must involve x only");
          coeffs[static_cast<size_t>(t.mono.e[0])] = t.coeff;
        }
        FieldDescriptor::extension(field, "x", coeffs);  // throws if reducible
      }
      for (int i = 0; i < n; ++i)
        pair.v1.push_back(pp.pow(static_cast<unsigned>(n - 1 - i)) *
                          Polynomial::variable(r, 1).pow(static_cast<unsigned>(i)));
      pair.v1.push_back(parse_polynomial("z", r));
      pair.v2 = pair.v1;
      pair.v2[static_cast<size_t>(n)] = pair.v2[static_cast<size_t>(n)] * q;
      pair.j_ideal = Ideal::make(r, {pp, Polynomial::variable(r, 1),
                                     Polynomial::variable(r, 2)});
      break;
    }
  }
  pair.field = field;

  if (v2_override) pair.v2 = parse_polynomial_list(*v2_override, pair.ring);
  if (pair.v2.size() != pair.v1.size())
    throw ArithError("v1 and v2 must have the same length");

  // entrywise comparison d_j v1_j = v2_j
  for (size_t j = 0; j < pair.v1.size(); ++j) {
    auto d = exact_divide(pair.v2[j], pair.v1[j]);
    if (!d) throw ArithError("no diagonal comparison: v2 entry " +
                             std::to_string(j) + " is not a multiple of v1 entry");
    pair.d_diag.push_back(std::move(*d));
  }

  pair.i_ideal = Ideal::make(pair.ring, row_to_gens(pair.v1));
  GroebnerBasis gi = buchberger(pair.i_ideal);
  if (gi.is_unit_ideal()) throw ArithError("I is not a proper ideal");

  // radical witnesses: each J generator has a power in I, and I lies in J
  GroebnerBasis gj = buchberger(pair.j_ideal);
  for (const auto& g : pair.i_ideal.gens)
    if (!gj.normal_form(g).is_zero())
      throw ArithError("I is not contained in the supplied J");
  for (const auto& g : pair.j_ideal.gens) {
    auto m = power_in_ideal(g, gi, 64);
    if (!m) throw ArithError("J generator " + g.str() + " has no power in I");
    pair.rad_witness.push_back(*m);
  }
  return pair;
}

// ---- stable isomorphism pipeline ----

namespace {

struct StepRunner {
  std::vector<CertStep>& steps;
  bool ok = true;

  bool run(const std::string& id, const std::string& desc,
           const std::function<std::pair<bool, std::string>()>& body) {
    if (!ok) return false;
    CertStep s{id, desc, false, ""};
    try {
      auto [pass, witness] = body();
      s.pass = pass;
      s.witness = witness;
    } catch (const std::exception& e) {
      s.pass = false;
      s.witness = std::string("error: ") + e.what();
    }
    steps.push_back(s);
    if (!s.pass) ok = false;
    return s.pass;
  }
};

}  // namespace

StablePipelineResult verify_stable_isomorphism(const ExamplePair& pair) {
  StablePipelineResult out;
  StepRunner runner{out.steps};
  const RingPtr& ring = pair.ring;
  size_t r = pair.v1.size();

  PresentedModule m1, m2;
  DualResult d1, d2;
  DoubleDualResult dd1, dd2;
  PresentedModule q_right;  // R/(delta)
  size_t delta_slot = 0;
  Polynomial delta = Polynomial::from_int(ring, 1);
  ShortExactSequence comparison_seq;
  ShortExactSequence spliced_literal;  // 0 -> R -> R (+) M2* -> M1* -> 0
  PresentedModule free1 = PresentedModule::free_module(ring, 1);
  PresentedModule sum_rm2s;  // R (+) M2*
  PolyMatrix theta, theta_inv;
  ShortExactSequence final_seq;  // 0 -> M1 -> M2 (+) R -> R -> 0
  PresentedModule m2_plus_r;
  ModuleMap final_u, final_pi;
  ModuleMap section;

  runner.run("stable.1.ideal_equal", "v1 R = v2 R as ideals", [&] {
    GroebnerBasis g1 = buchberger(pair.i_ideal);
    GroebnerBasis g2 = buchberger(Ideal::make(ring, pair.v2));
    bool eq = ideal_equal(g1, g2);
    return std::make_pair(eq, "reduced basis " + g1.str() +
                                  (eq ? "" : " vs " + g2.str()));
  });

  runner.run("stable.2.height", "I is a height-three ideal", [&] {
    int dim = krull_dim(pair.i_ideal);
    int height = static_cast<int>(ring->nvars()) - dim;
    bool ci = (static_cast<size_t>(height) == r);
    std::ostringstream os;
    os << "dim R/I = " << dim << ", height = " << height
       << (ci ? " (complete intersection)" : "");
    return std::make_pair(height == 3, os.str());
  });

  runner.run("stable.3.modules",
             "M1, M2 presented; generic ranks; reflexivity via double duals", [&] {
    m1 = present_cokernel(ring, column_of(ring, pair.v1));
    m2 = present_cokernel(ring, column_of(ring, pair.v2));
    int rk1 = generic_rank(m1), rk2 = generic_rank(m2);
    dd1 = double_dual_check(m1);
    dd2 = double_dual_check(m2);
    std::ostringstream os;
    os << "generic ranks " << rk1 << ", " << rk2 << "; reflexive: "
       << (dd1.reflexive ? "yes" : "no") << ", " << (dd2.reflexive ? "yes" : "no");
    bool pass = rk1 == static_cast<int>(r) - 1 && rk2 == rk1 && dd1.reflexive &&
                dd2.reflexive;
    return std::make_pair(pass, os.str());
  });

  runner.run("stable.4.syzygy_duals", "M1*, M2* presented via syzygies", [&] {
    d1 = dual_module(m1);
    d2 = dual_module(m2);
    PolyMatrix row1 = row_of(ring, pair.v1), row2 = row_of(ring, pair.v2);
    for (const auto& s : d1.functionals)
      if (!vp_is_zero(mat_apply(row1, s)))
        return std::make_pair(false, std::string("v1 . S != 0"));
    for (const auto& s : d2.functionals)
      if (!vp_is_zero(mat_apply(row2, s)))
        return std::make_pair(false, std::string("v2 . S != 0"));
    std::ostringstream os;
    os << "M1* on " << d1.module.rank() << " generators, M2* on "
       << d2.module.rank() << "; products with the presentation rows vanish";
    return std::make_pair(true, os.str());
  });

  runner.run("stable.5.comparison_sequence",
             "0 -> M2* -> M1* -> R/(det D) -> 0 is exact", [&] {
    size_t nonunit = 0;
    for (size_t j = 0; j < r; ++j) {
      if (pair.d_diag[j].is_one()) continue;
      ++nonunit;
      delta_slot = j;
    }
    if (nonunit > 1)
      return std::make_pair(false,
                            std::string("more than one non-unit comparison entry"));
    delta = Polynomial::from_int(ring, 1);
    for (const auto& d : pair.d_diag) delta = delta * d;

    // f: M2* -> M1* induced by the diagonal D
    std::vector<VecPoly> fcols;
    PolyMatrix dmat = mat_zero(ring, r, r);
    for (size_t j = 0; j < r; ++j) dmat[j][j] = pair.d_diag[j];
    for (const auto& s : d2.functionals) {
      VecPoly ds = mat_apply(dmat, s);
      auto coords = express_in(ring, r, d1.functionals, {}, ds);
      if (!coords)
        return std::make_pair(false, std::string("D-image of a syzygy of v2 is "
                                                 "not a syzygy combination of v1"));
      fcols.push_back(std::move(*coords));
    }
    ModuleMap f(d2.module, d1.module, mat_from_cols(ring, d1.module.rank(), fcols));

    q_right = present_cokernel(ring, PolyMatrix{{delta}});
    PolyMatrix proj = mat_zero(ring, 1, d1.module.rank());
    for (size_t k = 0; k < d1.functionals.size(); ++k)
      proj[0][k] = d1.functionals[k][delta_slot];
    ModuleMap pi(d1.module, q_right, std::move(proj));
    comparison_seq = ShortExactSequence::make(f, pi);
    auto rep = verify_exact(comparison_seq);
    std::ostringstream os;
    os << "det D = " << delta.str() << "; "
       << (rep.exact ? "exact" : ("fails: " + rep.failure));
    return std::make_pair(rep.exact, os.str());
  });

  runner.run("stable.6.schanuel_splice",
             "0 -> R -> R (+) M2* -> M1* -> 0 from the pullback splice", [&] {
    ModuleMap surj_b(free1, q_right, mat_identity(ring, 1));
    auto sp = schanuel_splice(comparison_seq.project, surj_b);

    // left module of the splice must be the free line (delta)
    if (sp.seq.left.rank() != 1 || sp.seq.left.has_relations())
      return std::make_pair(false, std::string("kernel of R -> R/(det D) is not "
                                               "presented as a free line"));

    // omega: M2* -> ker(pi), through the middle of the comparison sequence
    KernelResult ka = kernel_of_map(comparison_seq.project);
    std::vector<VecPoly> kacols;
    for (size_t k = 0; k < ka.module.rank(); ++k)
      kacols.push_back(mat_col(ka.inclusion.matrix(), k));
    std::vector<VecPoly> omega_cols;
    for (size_t j = 0; j < d2.module.rank(); ++j) {
      VecPoly img = mat_col(comparison_seq.inject.matrix(), j);
      auto coords = express_in(ring, d1.module.rank(), kacols,
                               d1.module.relations(), img);
      if (!coords)
        return std::make_pair(false, std::string("image of M2* misses ker(pi)"));
      omega_cols.push_back(std::move(*coords));
    }
    ModuleMap omega(d2.module, ka.module,
                    mat_from_cols(ring, ka.module.rank(), omega_cols));
    auto omega_cert = is_isomorphism(omega);
    if (!omega_cert.iso)
      return std::make_pair(false, "M2* = ker(pi) failed: " + omega_cert.failure);

    // embed ker(pi) into the pullback as (u, 0)
    PresentedModule sum_am = direct_sum(comparison_seq.middle, free1);
    std::vector<VecPoly> pcols;
    for (size_t k = 0; k < sp.pullback.rank(); ++k)
      pcols.push_back(mat_col(sp.include_in_sum.matrix(), k));
    std::vector<VecPoly> kappa2;
    for (size_t k = 0; k < ka.module.rank(); ++k) {
      VecPoly emb = vp_zero(ring, sum_am.rank());
      for (size_t i = 0; i < d1.module.rank(); ++i)
        emb[i] = ka.inclusion.matrix()[i][k];
      auto coords = express_in(ring, sum_am.rank(), pcols, sum_am.relations(), emb);
      if (!coords)
        return std::make_pair(false, std::string("ker(pi) misses the pullback"));
      kappa2.push_back(std::move(*coords));
    }
    ModuleMap inj2(ka.module, sp.pullback,
                   mat_from_cols(ring, sp.pullback.rank(), kappa2));
    auto seq2 = ShortExactSequence::make(inj2, sp.proj_to_b);
    auto rep2 = verify_exact(seq2);
    if (!rep2.exact)
      return std::make_pair(false, "second splice sequence fails: " + rep2.failure);
    auto split2 = verify_split(seq2);
    if (!split2.split)
      return std::make_pair(false, "splitting off the free line fails: " +
                                        split2.failure);

    // Theta: R (+) M2* -> P, columns [section(1) | incl(omega(gens))]
    sum_rm2s = direct_sum(free1, d2.module);
    PolyMatrix th = mat_zero(ring, sp.pullback.rank(), sum_rm2s.rank());
    for (size_t i = 0; i < sp.pullback.rank(); ++i)
      th[i][0] = split2.section.matrix()[i][0];
    PolyMatrix komega = mat_mul(inj2.matrix(), omega.matrix());
    for (size_t i = 0; i < sp.pullback.rank(); ++i)
      for (size_t j = 0; j < d2.module.rank(); ++j) th[i][1 + j] = komega[i][j];
    ModuleMap theta_map(sum_rm2s, sp.pullback, th);
    auto theta_cert = is_isomorphism(theta_map);
    if (!theta_cert.iso)
      return std::make_pair(false, "R (+) M2* = P failed: " + theta_cert.failure);
    theta = theta_map.matrix();
    theta_inv = theta_cert.inverse;

    // transport 0 -> R -> P -> M1* -> 0 through Theta^{-1}
    ModuleMap lift_inject(free1, sum_rm2s,
                          mat_mul(theta_inv, sp.seq.inject.matrix()));
    ModuleMap lift_project(sum_rm2s, d1.module,
                           mat_mul(sp.seq.project.matrix(), theta));
    spliced_literal = ShortExactSequence::make(lift_inject, lift_project);
    auto rep = verify_exact(spliced_literal);
    std::ostringstream os;
    os << "pullback on " << sp.pullback.rank() << " generators; transported "
       << "sequence " << (rep.exact ? "exact" : ("fails: " + rep.failure));
    return std::make_pair(rep.exact, os.str());
  });

  runner.run("stable.7.dualized_sequence",
             "dual sequence 0 -> M1 -> M2 (+) R -> R -> 0 exact and split; "
             "Ext1(M1*, R) = R/I", [&] {
    auto dz = dualize_sequence(spliced_literal);
    if (!dz.exactness.exact)
      return std::make_pair(false, "dual candidate not exact: " + dz.exactness.failure);

    // Ext-correction report; for a complete intersection (three generators)
    // the module must be R/I itself, elsewhere it is recorded as computed
    bool expect_ri = (r == 3);
    std::string ext_note;
    if (dz.ext_right_cyclic) {
      bool is_ri = ideal_equal(dz.ext_right_cyclic->annihilator, pair.i_ideal);
      ext_note = "Ext1(M1*, R) cyclic with annihilator " +
                 buchberger(dz.ext_right_cyclic->annihilator).str() +
                 (is_ri ? " = I" : " != I");
      if (expect_ri && !is_ri) return std::make_pair(false, ext_note);
    } else {
      ext_note = "Ext1(M1*, R) = " + dz.ext_right.str() + " (not cyclic)";
      if (expect_ri) return std::make_pair(false, ext_note);
    }

    // identify the dual middle with M2 (+) R
    const DualResult& dmid = dz.dual_middle;   // (R (+) M2*)^dual
    const DualResult& dright = dz.dual_right;  // (M1*)^dual = M1**
    const DualResult& dleft = dz.dual_left;    // R^dual

    size_t amb = sum_rm2s.rank();  // 1 + rank(M2*)

    // middle identification M2 (+) R -> (R (+) M2*)^dual: the generator e_i of
    // M2 goes to the evaluation functional lambda -> lambda(e_i) on the
    // M2*-block, the R generator to the first-coordinate functional
    m2_plus_r = direct_sum(m2, free1);
    std::vector<VecPoly> id_cols;
    {
      std::vector<VecPoly> dmid_funcs = dmid.functionals;
      // columns for M2 generators: evaluation functionals on the M2*-block
      for (size_t i = 0; i < m2.rank(); ++i) {
        VecPoly val = vp_zero(ring, amb);
        for (size_t j = 0; j < d2.module.rank(); ++j)
          val[1 + j] = d2.functionals[j][i];
        auto coords = express_in(ring, amb, dmid_funcs, {}, val);
        if (!coords)
          return std::make_pair(false,
                                std::string("evaluation functional of M2 not in "
                                            "the dual of the middle"));
        id_cols.push_back(std::move(*coords));
      }
      // column for the R generator: first-coordinate functional
      VecPoly phi0 = vp_zero(ring, amb);
      phi0[0] = Polynomial::from_int(ring, 1);
      auto coords = express_in(ring, amb, dmid_funcs, {}, phi0);
      if (!coords)
        return std::make_pair(false,
                              std::string("coordinate functional of R not in the "
                                          "dual of the middle"));
      id_cols.push_back(std::move(*coords));
    }
    ModuleMap omega2(m2_plus_r, dmid.module,
                     mat_from_cols(ring, dmid.module.rank(), id_cols));
    auto omega2_cert = is_isomorphism(omega2);
    if (!omega2_cert.iso)
      return std::make_pair(false,
                            "M2 (+) R = dual middle failed: " + omega2_cert.failure);

    // identify R^dual with R
    if (dleft.module.rank() != 1 || dleft.module.has_relations())
      return std::make_pair(false, std::string("dual of R is not a free line"));
    PolyMatrix rho = mat_zero(ring, 1, 1);
    rho[0][0] = dleft.functionals[0][0];
    ModuleMap rho0(dleft.module, free1, rho);
    auto rho_cert = is_isomorphism(rho0);
    if (!rho_cert.iso)
      return std::make_pair(false, "dual of R does not normalize: " + rho_cert.failure);

    // u: M1 -> M2 (+) R and pi: M2 (+) R -> R
    ModuleMap nu1 = dd1.evaluation;  // M1 -> M1**
    if (nu1.target().rank() != dright.module.rank())
      return std::make_pair(false,
                            std::string("double dual of M1 does not match the "
                                        "dual of M1* from the sequence"));
    PolyMatrix u_mtx = mat_mul(omega2_cert.inverse,
                               mat_mul(dz.seq.inject.matrix(), nu1.matrix()));
    PolyMatrix pi_mtx = mat_mul(rho0.matrix(),
                                mat_mul(dz.seq.project.matrix(), omega2.matrix()));
    final_u = ModuleMap(m1, m2_plus_r, u_mtx);
    final_pi = ModuleMap(m2_plus_r, free1, pi_mtx);
    final_seq = ShortExactSequence::make(final_u, final_pi);
    auto rep = verify_exact(final_seq);
    if (!rep.exact)
      return std::make_pair(false, "final sequence not exact: " + rep.failure);
    auto split = verify_split(final_seq);
    if (!split.split)
      return std::make_pair(false, "final sequence not split: " + split.failure);
    section = split.section;
    std::ostringstream os;
    os << ext_note << "; final sequence exact and split, section "
       << mat_str(section.matrix());
    return std::make_pair(true, os.str());
  });

  runner.run("stable.8.stable_isomorphism",
             "certified isomorphism M1 (+) R = M2 (+) R", [&] {
    out.sum1 = direct_sum(m1, free1);
    out.sum2 = m2_plus_r;
    PolyMatrix psi = mat_zero(ring, out.sum2.rank(), out.sum1.rank());
    for (size_t i = 0; i < out.sum2.rank(); ++i) {
      for (size_t j = 0; j < m1.rank(); ++j) psi[i][j] = final_u.matrix()[i][j];
      psi[i][m1.rank()] = section.matrix()[i][0];
    }
    ModuleMap iso(out.sum1, out.sum2, psi);
    auto cert = is_isomorphism(iso);
    if (!cert.iso) return std::make_pair(false, "assembly failed: " + cert.failure);
    out.iso = iso.matrix();
    out.iso_inverse = cert.inverse;
    std::ostringstream os;
    os << "matrix " << mat_str(out.iso) << "; inverse " << mat_str(out.iso_inverse)
       << "; composites are the identity modulo relations";
    return std::make_pair(true, os.str());
  });

  out.all_passed = runner.ok;
  return out;
}

ObstructionPipelineResult verify_non_isomorphism_obstruction(const ExamplePair& pair) {
  ObstructionPipelineResult out;
  StepRunner runner{out.steps};
  const RingPtr& ring = pair.ring;
  size_t r = pair.v1.size();

  std::optional<QuotientRecognition> rec;

  runner.run("obstruction.1.recognize_quotient", "R/J is a recognized ring", [&] {
    rec = recognize_quotient(pair.j_ideal);
    std::string note = rec->describe();
    if (rec->kind == QuotientRecognition::Kind::Extension &&
        !rec->ext_field->minpoly_verified)
      note += " [minpoly-unverified: irreducibility trusted above degree 4]";
    return std::make_pair(true, note);
  });

  runner.run("obstruction.2.conormal_free",
             "I/JI is free over R/J of rank = generator count", [&] {
    auto syz = syzygies(row_of(ring, pair.v1), ring);
    auto conormal = tensor_with_quotient(
        PresentedModule::cokernel(ring, r, syz), pair.j_ideal);
    bool free = fitting_free_of_rank(conormal, static_cast<int>(r));
    std::ostringstream os;
    os << "Fitting criterion for rank " << r << ": " << (free ? "passes" : "fails");
    return std::make_pair(free, os.str());
  });

  runner.run("obstruction.3.derive_unit_equation",
             "determinant comparison yields the unit equation", [&] {
    Polynomial det_d = Polynomial::from_int(ring, 1);
    for (const auto& d : pair.d_diag) det_d = det_d * d;
    out.equation =
        derive_unit_equation(*rec, det_d, r, family_name(pair.params.family));
    return std::make_pair(true, out.equation->str() + " | " +
                                    out.equation->derivation);
  });

  runner.run("obstruction.4.solve_unit_equation",
             "the unit equation has no solution", [&] {
    out.verdict = solve_unit_equation(*out.equation);
    switch (out.verdict->status) {
      case SolveResult::Status::Unsolvable:
        return std::make_pair(true, "unsolvable: " + out.verdict->reason);
      case SolveResult::Status::Solvable:
        return std::make_pair(false, "equation is solvable; witness " +
                                         qv_str(out.verdict->witness));
      case SolveResult::Status::Inconclusive:
        return std::make_pair(false, "inconclusive: " + out.verdict->reason);
    }
    return std::make_pair(false, std::string("unreachable"));
  });

  out.all_passed = runner.ok;
  return out;
}

// ---- certificates ----

std::string Certificate::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["example"] = example;
  nlohmann::json p = nlohmann::json::object();
  switch (params.family) {
    case Family::FourVariable: break;
    case Family::RankFamily: p["n"] = params.n; break;
    case Family::CharP: p["p"] = params.p; break;
    case Family::Extension:
      p["n"] = params.n;
      p["minpoly"] = params.minpoly_text;
      p["q"] = params.q_text;
      break;
  }
  j["params"] = p;
  j["field"] = field_text;
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json e;
    e["id"] = s.id;
    e["desc"] = s.desc;
    e["status"] = s.pass ? "pass" : "fail";
    e["witness"] = s.witness;
    st.push_back(e);
  }
  j["steps"] = st;
  j["conclusion"] = {{"stably_isomorphic", stably_isomorphic},
                     {"obstruction_unsolvable", obstruction_unsolvable}};
  return j.dump(2) + "\n";
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "certificate: " << example;
  switch (params.family) {
    case Family::FourVariable: break;
    case Family::RankFamily: os << " (n = " << params.n << ")"; break;
    case Family::CharP: os << " (p = " << params.p << ")"; break;
    case Family::Extension:
      os << " (n = " << params.n << ", minpoly = " << params.minpoly_text
         << ", q = " << params.q_text << ")";
      break;
  }
  os << "\nfield: " << field_text << "\n";
  for (const auto& s : steps) {
    os << (s.pass ? "[pass] " : "[FAIL] ") << s.id << ": " << s.desc << "\n";
    if (!s.witness.empty()) os << "        " << s.witness << "\n";
  }
  os << "conclusion: stably_isomorphic = " << (stably_isomorphic ? "true" : "false")
     << ", obstruction_unsolvable = " << (obstruction_unsolvable ? "true" : "false")
     << "\n";
  os << "note: stably_isomorphic certifies an explicit isomorphism "
        "M1 (+) R = M2 (+) R; obstruction_unsolvable certifies that the "
        "unit-group equation derived from the diagonal comparison has no "
        "solution, which is the obstruction any isomorphism M1 = M2 "
        "compatible with the diagonal lift would have to satisfy\n";
  return os.str();
}

Certificate run_full_certificate(const FamilyParams& params, FieldPtr field,
                                 const std::optional<std::string>& v2_override) {
  Certificate cert;
  cert.example = family_name(params.family);
  cert.params = params;

  std::optional<ExamplePair> pair;
  try {
    pair = build_example(params, field, v2_override);
  } catch (const std::exception& e) {
    cert.field_text = field ? field->text() : "";
    cert.steps.push_back({"build", "construct the example pair", false,
                          std::string("error: ") + e.what()});
    return cert;
  }
  cert.params = pair->params;
  cert.field_text = pair->field->text();

  auto stable = verify_stable_isomorphism(*pair);
  auto obstruction = verify_non_isomorphism_obstruction(*pair);
  cert.steps = stable.steps;
  cert.steps.insert(cert.steps.end(), obstruction.steps.begin(),
                    obstruction.steps.end());
  cert.stably_isomorphic = stable.all_passed;
  cert.obstruction_unsolvable = obstruction.all_passed;
  return cert;
}

}  // namespace cancelab
