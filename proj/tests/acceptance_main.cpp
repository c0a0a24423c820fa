// Acceptance suite: drives the CLI and the library against the full list of
// required checks, one line per criterion.  Exits nonzero on any failure.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cancelab/lab.hpp"
#include "cancelab/parser.hpp"
#include "cancelab/suslin.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace cancelab;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

struct CliRun {
  int exit_code = -1;
  double seconds = 0;
};

std::string g_cli;
fs::path g_tmp;

CliRun run_cli(const std::string& args) {
  auto t0 = std::chrono::steady_clock::now();
  std::string cmd = g_cli + " " + args + " > " + (g_tmp / "cli_stdout.txt").string() +
                    " 2>&1";
  int rc = std::system(cmd.c_str());
  CliRun r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.exit_code = WEXITSTATUS(rc);
  return r;
}

nlohmann::json load_json(const fs::path& p) {
  std::ifstream is(p);
  return nlohmann::json::parse(is);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

bool step_passed(const nlohmann::json& cert, const std::string& id,
                 std::string* witness = nullptr) {
  for (const auto& s : cert["steps"]) {
    if (s["id"] == id) {
      if (witness) *witness = s["witness"];
      return s["status"] == "pass";
    }
  }
  return false;
}

Polynomial rnd_poly(const RingPtr& r, std::mt19937& rng, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> ed(0, maxdeg);
  std::uniform_int_distribution<long> cd(0, static_cast<long>(r->field->p) - 1);
  std::vector<Term> ts;
  for (int i = 0; i < nterms; ++i) {
    Monomial m = Monomial::one(r->nvars());
    int budget = maxdeg;
    for (size_t v = 0; v < r->nvars(); ++v) {
      int e = std::min(budget, ed(rng));
      m.e[v] = e;
      budget -= e;
    }
    ts.push_back({m, fe_int(r->field, cd(rng))});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

// brute-force membership with cofactor degree cap, by linear algebra
bool oracle_member(const Polynomial& f, const Ideal& I, int capdeg) {
  const auto& r = I.ring;
  unsigned long p = r->field->p;
  int maxgen = 0;
  for (const auto& g : I.gens) maxgen = std::max(maxgen, g.degree());
  auto cof = oracles::monos_up_to(r->nvars(), capdeg);
  auto eqm = oracles::monos_up_to(r->nvars(), capdeg + maxgen);
  auto mono_index = [&](const Monomial& m) -> int {
    for (size_t i = 0; i < eqm.size(); ++i)
      if (eqm[i] == m) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<unsigned long>> A(
      eqm.size(), std::vector<unsigned long>(cof.size() * I.gens.size(), 0));
  for (size_t gi = 0; gi < I.gens.size(); ++gi)
    for (size_t mi = 0; mi < cof.size(); ++mi) {
      size_t col = gi * cof.size() + mi;
      Polynomial prod = I.gens[gi].mult_term(cof[mi], fe_one(r->field));
      for (const auto& t : prod.terms())
        A[static_cast<size_t>(mono_index(t.mono))][col] = t.coeff.residue();
    }
  // augmented system: solve A x = b
  std::vector<unsigned long> b(eqm.size(), 0);
  for (const auto& t : f.terms()) {
    int row = mono_index(t.mono);
    if (row < 0) return false;
    b[static_cast<size_t>(row)] = t.coeff.residue();
  }
  // consistency via rank comparison
  auto A2 = A;
  for (size_t i = 0; i < A2.size(); ++i) A2[i].push_back(b[i]);
  auto piv1 = oracles::rref_mod_p(A, p);
  auto piv2 = oracles::rref_mod_p(A2, p);
  return piv1.size() == piv2.size();
}

void criterion_1() {
  fs::path cert_path = g_tmp / "four_var.json";
  auto run = run_cli("verify four-var --field QQ --out " + cert_path.string());
  bool ok = run.exit_code == 0 && run.seconds < 5.0;
  std::string detail = "exit " + std::to_string(run.exit_code) + ", " +
                       std::to_string(run.seconds) + "s";
  nlohmann::json cert;
  size_t passed_steps = 0;
  std::string w2, w3, w7, w8, w12;
  if (ok && fs::exists(cert_path)) {
    cert = load_json(cert_path);
    for (const auto& s : cert["steps"])
      if (s["status"] == "pass") ++passed_steps;
    ok = ok && cert["steps"].size() == 12 && passed_steps == 12;
    ok = ok && cert["conclusion"]["stably_isomorphic"].get<bool>() &&
         cert["conclusion"]["obstruction_unsolvable"].get<bool>();
    ok = ok && step_passed(cert, "stable.1.ideal_equal");
    ok = ok && step_passed(cert, "stable.2.height", &w2) &&
         w2.find("dim R/I = 1") != std::string::npos;
    ok = ok && step_passed(cert, "stable.3.modules", &w3) &&
         w3.find("generic ranks 2, 2") != std::string::npos &&
         w3.find("reflexive: yes, yes") != std::string::npos;
    ok = ok && step_passed(cert, "stable.7.dualized_sequence", &w7) &&
         w7.find("= I") != std::string::npos &&
         w7.find("exact and split") != std::string::npos;
    ok = ok && step_passed(cert, "stable.8.stable_isomorphism", &w8);
    std::string w11;
    ok = ok && step_passed(cert, "obstruction.3.derive_unit_equation", &w11) &&
         w11.find("z in k* . (units)^2") != std::string::npos;
    ok = ok && step_passed(cert, "obstruction.4.solve_unit_equation", &w12) &&
         w12.find("unsolvable") != std::string::npos;
  } else {
    ok = false;
  }

  // independent re-validation of the final isomorphism: rebuild via the
  // library and re-check both composites by exact arithmetic
  if (ok) {
    auto pair = build_example({Family::FourVariable}, FieldDescriptor::rationals());
    auto stable = verify_stable_isomorphism(pair);
    ok = stable.all_passed;
    if (ok) {
      const RingPtr& r = pair.ring;
      PolyMatrix ab = mat_mul(stable.iso, stable.iso_inverse);
      PolyMatrix ba = mat_mul(stable.iso_inverse, stable.iso);
      for (size_t j = 0; j < stable.sum2.rank() && ok; ++j) {
        VecPoly col = mat_col(ab, j);
        col[j] = col[j] - Polynomial::from_int(r, 1);
        ok = stable.sum2.element_is_zero(col);
      }
      for (size_t j = 0; j < stable.sum1.rank() && ok; ++j) {
        VecPoly col = mat_col(ba, j);
        col[j] = col[j] - Polynomial::from_int(r, 1);
        ok = stable.sum1.element_is_zero(col);
      }
    }
  }
  report(1, "four-variable certificate over QQ, 12/12 steps, < 5 s", ok, detail);
}

void criterion_2() {
  bool all = true;
  std::string detail;
  for (int n : {2, 3}) {
    fs::path cert_path = g_tmp / ("rank" + std::to_string(n) + ".json");
    auto run = run_cli("verify rank-family --n " + std::to_string(n) + " --out " +
                       cert_path.string());
    bool ok = run.exit_code == 0 && run.seconds < 30.0;
    if (ok) {
      auto cert = load_json(cert_path);
      ok = cert["conclusion"]["stably_isomorphic"].get<bool>() &&
           cert["conclusion"]["obstruction_unsolvable"].get<bool>();
    }
    // derived exponent and radical witnesses via the library
    FamilyParams fp{Family::RankFamily};
    fp.n = n;
    auto pair = build_example(fp, FieldDescriptor::rationals());
    ok = ok && pair.rad_witness == std::vector<int>{n, n, 1};
    auto obs = verify_non_isomorphism_obstruction(pair);
    ok = ok && obs.all_passed && obs.equation &&
         obs.equation->exponent == static_cast<unsigned>(n + 1);
    detail += "n=" + std::to_string(n) + ": exit " + std::to_string(run.exit_code) +
              ", " + std::to_string(run.seconds) + "s; ";
    all = all && ok;
  }
  report(2, "rank-family certificates n = 2, 3 with exponent n+1 and radical "
            "witnesses", all, detail);
}

void criterion_3() {
  bool all = true;
  std::string detail;
  for (unsigned long p : {2ul, 3ul}) {
    fs::path cert_path = g_tmp / ("charp" + std::to_string(p) + ".json");
    auto run = run_cli("verify char-p --p " + std::to_string(p) + " --out " +
                       cert_path.string());
    bool ok = run.exit_code == 0 && run.seconds < 5.0;
    std::string w;
    if (ok) {
      auto cert = load_json(cert_path);
      ok = cert["conclusion"]["stably_isomorphic"].get<bool>() &&
           cert["conclusion"]["obstruction_unsolvable"].get<bool>();
      ok = ok && step_passed(cert, "obstruction.2.conormal_free", &w) &&
           w.find("rank " + std::to_string(p + 1)) != std::string::npos;
      ok = ok && step_passed(cert, "obstruction.4.solve_unit_equation", &w) &&
           w.find("not constant") != std::string::npos;
    }
    // Fitting certificate re-checked directly
    FamilyParams fp{Family::CharP};
    fp.p = p;
    auto pair = build_example(fp, nullptr);
    auto syz = syzygies([&] {
      PolyMatrix m = mat_zero(pair.ring, 1, pair.v1.size());
      for (size_t i = 0; i < pair.v1.size(); ++i) m[0][i] = pair.v1[i];
      return m;
    }(), pair.ring);
    auto conormal = tensor_with_quotient(
        PresentedModule::cokernel(pair.ring, pair.v1.size(), syz), pair.j_ideal);
    ok = ok && fitting_free_of_rank(conormal, static_cast<int>(p) + 1);
    detail += "p=" + std::to_string(p) + ": exit " + std::to_string(run.exit_code) +
              ", " + std::to_string(run.seconds) + "s; ";
    all = all && ok;
  }
  report(3, "char-p certificates p = 2, 3 with I/JI free of rank p+1 and the "
            "Frobenius refutation", all, detail);
}

void criterion_4() {
  bool all = true;
  std::string detail;
  for (int n : {2, 3}) {
    fs::path cert_path = g_tmp / ("ext" + std::to_string(n) + ".json");
    auto run = run_cli("verify extension --n " + std::to_string(n) + " --out " +
                       cert_path.string());
    bool ok = run.exit_code == 0 && run.seconds < 5.0;
    if (ok) {
      auto cert = load_json(cert_path);
      ok = cert["conclusion"]["stably_isomorphic"].get<bool>() &&
           cert["conclusion"]["obstruction_unsolvable"].get<bool>();
    }
    // norm of theta via resultant is +-2 and is not an n-th rational power
    auto L = FieldDescriptor::parse("QQ(w)/(w^" + std::to_string(n) + "-2)");
    FieldElement nm = extension_norm(fe_generator(L));
    bool pm2 = (nm == fe_int(FieldDescriptor::rationals(), 2)) ||
               (nm == fe_int(FieldDescriptor::rationals(), -2));
    ok = ok && pm2;
    ok = ok && !rational_nth_root(nm.rat(), static_cast<unsigned>(n)).has_value();
    detail += "n=" + std::to_string(n) + ": exit " + std::to_string(run.exit_code) +
              ", " + std::to_string(run.seconds) + "s, norm " + nm.str() + "; ";
    all = all && ok;
  }
  report(4, "extension certificates n = 2, 3 with the resultant norm "
            "obstruction", all, detail);
}

void criterion_5() {
  auto r = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y"});
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> ngens(1, 3);
  int done = 0, agree = 0, total = 0;
  bool expand_ok = true;
  while (done < 50) {
    std::vector<Polynomial> gens;
    int n = ngens(rng);
    for (int i = 0; i < n; ++i) {
      auto g = rnd_poly(r, rng, 2, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I = Ideal::make(r, gens);
    auto G = buchberger(I);
    Polynomial engineered = Polynomial::zero(r);
    for (const auto& g : gens) engineered = engineered + rnd_poly(r, rng, 2, 2) * g;
    Polynomial probe = rnd_poly(r, rng, 2, 3);
    for (const Polynomial& f : {engineered, probe}) {
      auto cert = ideal_member(f, G);
      bool oracle = oracle_member(f, I, 4);
      ++total;
      if (cert.member == oracle) ++agree;
      if (cert.member) {
        Polynomial back = Polynomial::zero(r);
        for (size_t i = 0; i < gens.size(); ++i)
          back = back + cert.cofactors[i] * gens[i];
        if (!(back == f)) expand_ok = false;
      }
    }
    ++done;
  }
  report(5, "ideal membership agrees with the brute-force oracle on 50 random "
            "ideals, certificates re-expand",
         agree == total && expand_ok,
         std::to_string(agree) + "/" + std::to_string(total) + " agree");
}

void criterion_6() {
  auto r = RingDescriptor::make(FieldDescriptor::prime(5), {"x", "y"});
  std::mt19937 rng(6180339);
  bool all = true;
  int checked_elems = 0;
  for (int trial = 0; trial < 30; ++trial) {
    size_t rows = (trial % 2) ? 2 : 1;
    PolyMatrix m = mat_zero(r, rows, 3);
    for (auto& row : m)
      for (auto& e : row) e = rnd_poly(r, rng, 1, 2);
    auto syz = syzygies(m, r);
    for (const auto& s : syz)
      if (!vp_is_zero(mat_apply(m, s))) all = false;
    auto found = oracles::kernel_elements_by_linear_algebra(r, rows, mat_cols(m), 3);
    checked_elems += static_cast<int>(found.size());
    if (syz.empty()) {
      for (const auto& v : found)
        if (!vp_is_zero(v)) all = false;
      continue;
    }
    ModuleGB span = module_groebner(r, 3, syz);
    for (const auto& v : found)
      if (!span.contains(v)) all = false;
  }
  report(6, "syzygy output annihilates the matrix and spans every oracle kernel "
            "element of degree <= 3",
         all, std::to_string(checked_elems) + " oracle elements checked");
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  // absorption certificates over QQ[u], ranks 2 and 3
  auto r = RingDescriptor::make(FieldDescriptor::rationals(), {"u"});
  auto u = parse_polynomial("u", r);
  for (size_t n : {2ul, 3ul}) {
    std::vector<VecPoly> basis;
    for (size_t i = 0; i < n; ++i) basis.push_back(vp_unit(r, n, i));
    auto pair = UnimodularPair::make(r, u, vp_unit(r, n, 0), basis);
    auto cert = absorption_iso(pair);
    ok = ok && cert.certificate.iso;
    PolyMatrix ab = mat_mul(cert.iso.matrix(), cert.certificate.inverse);
    PolyMatrix ba = mat_mul(cert.certificate.inverse, cert.iso.matrix());
    for (size_t j = 0; j < cert.to.rank(); ++j) {
      VecPoly col = mat_col(ab, j);
      col[j] = col[j] - Polynomial::from_int(r, 1);
      ok = ok && cert.to.element_is_zero(col);
    }
    for (size_t j = 0; j < cert.from.rank(); ++j) {
      VecPoly col = mat_col(ba, j);
      col[j] = col[j] - Polynomial::from_int(r, 1);
      ok = ok && cert.from.element_is_zero(col);
    }
  }
  detail += "absorption ranks 2,3; ";

  // phi matrix facts
  auto bd = build_phi_matrix(r, 3, u);
  ok = ok && mat_det(bd.phi) == u.transport(bd.extended_ring).pow(3);
  PolyMatrix phi1 = mat_zero(r, 3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      phi1[i][j] = bd.phi[i][j]
                       .substitute(bd.t_index, Polynomial::from_int(bd.extended_ring, 1))
                       .transport(r);
  VecPoly e1p{Polynomial::from_int(r, 1), -u, u * u};
  VecPoly img = mat_apply(phi1, e1p);
  ok = ok && img[0].is_zero() && img[1].is_zero() && img[2] == u.pow(3);
  detail += "phi(3,a): det a^3, telescope a^3 e3; ";

  // perturbation certificates for d = 1, 2 over QQ[u] and GF(5)[u]
  for (FieldPtr f : {FieldDescriptor::rationals(), FieldDescriptor::prime(5)}) {
    auto rr = RingDescriptor::make(f, {"u"});
    auto uu = parse_polynomial("u", rr);
    std::vector<VecPoly> basis{vp_unit(rr, 2, 0), vp_unit(rr, 2, 1)};
    auto pair = UnimodularPair::make(rr, uu, vp_unit(rr, 2, 0), basis);
    for (unsigned d : {1u, 2u}) {
      auto cert = perturbation_iso(pair, vp_unit(rr, 2, 1), d);
      ok = ok && cert.certificate.iso;
    }
  }
  detail += "perturbation d=1,2 over QQ[u], GF(5)[u]";
  report(7, "constructive engine: absorption, bidiagonal matrix facts, perturbation",
         ok, detail);
}

void criterion_8() {
  bool ok = true;
  for (const std::string& sub :
       {std::string("verify four-var"), std::string("verify char-p --p 2")}) {
    fs::path a = g_tmp / "det_a.json", b = g_tmp / "det_b.json";
    auto r1 = run_cli(sub + " --out " + a.string());
    auto r2 = run_cli(sub + " --out " + b.string());
    ok = ok && r1.exit_code == 0 && r2.exit_code == 0 && slurp(a) == slurp(b);
  }
  report(8, "repeated verify runs produce byte-identical certificates", ok);
}

void criterion_9() {
  fs::path cert_path = g_tmp / "corrupt.json";
  auto run = run_cli("verify four-var --v2 \"x; y^2; z*t-1\" --out " +
                     cert_path.string());
  bool ok = run.exit_code == 1 && fs::exists(cert_path);
  std::string failing;
  if (ok) {
    auto cert = load_json(cert_path);
    ok = !cert["conclusion"]["stably_isomorphic"].get<bool>() &&
         !cert["conclusion"]["obstruction_unsolvable"].get<bool>();
    bool found_fail = false;
    for (const auto& s : cert["steps"])
      if (s["status"] == "fail" && !found_fail) {
        found_fail = true;
        failing = s["id"];
      }
    ok = ok && found_fail && failing == "stable.1.ideal_equal";
  }
  report(9, "corrupted v2 fails closed with exit 1 and the failing step "
            "identified", ok, "failing step: " + failing);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cancelab-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  g_tmp = fs::temp_directory_path() / "cancelab_acceptance";
  fs::create_directories(g_tmp);

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
