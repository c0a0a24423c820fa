#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cancelab/lab.hpp"
#include "cancelab/parser.hpp"

using namespace cancelab;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string out;
  std::string format = "json";
  unsigned long max_steps = 0;
  int max_degree = 0;
};

void apply_limits(const CommonOpts& o) {
  if (const char* env = std::getenv("CANCELAB_MAX_STEPS"))
    default_limits().max_steps = std::stoul(env);
  if (o.max_steps) default_limits().max_steps = o.max_steps;
  if (o.max_degree) default_limits().max_degree = o.max_degree;
}

// atomic write: temp file in the target directory, then rename
void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << content;
    if (!os) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

int emit_certificate(const Certificate& cert, const CommonOpts& o) {
  if (cert.steps.empty()) throw std::runtime_error("empty certificate");
  std::cout << cert.to_text();
  if (!o.out.empty())
    write_file(o.out, o.format == "text" ? cert.to_text() : cert.to_json());
  return (cert.stably_isomorphic && cert.obstruction_unsolvable) ? 0
                                                                 : kExitVerifyFail;
}

int run_verify(const FamilyParams& params, const std::string& field_text,
               const CommonOpts& o, const std::string& v2_override) {
  apply_limits(o);
  FieldPtr field;
  if (!field_text.empty()) field = FieldDescriptor::parse(field_text);
  std::optional<std::string> ov;
  if (!v2_override.empty()) ov = v2_override;
  Certificate cert = run_full_certificate(params, field, ov);
  return emit_certificate(cert, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cancelab: certified (non-)cancellation checks for reflexive "
               "modules over polynomial rings"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string field_text;
  std::string v2_override;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", common.out, "write the certificate to this path");
    cmd->add_option("--format", common.format, "certificate format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-steps", common.max_steps, "reduction step cap");
    cmd->add_option("--max-degree", common.max_degree, "intermediate degree cap");
  };

  auto* verify = app.add_subcommand("verify", "run a verification pipeline");
  verify->require_subcommand(1);

  auto* fourvar = verify->add_subcommand("four-var", "four-variable example");
  fourvar->add_option("--field", field_text, "coefficient field (default QQ)");
  fourvar->add_option("--v2", v2_override, "override v2 (testing hook)");
  add_common(fourvar);

  int opt_n = 2;
  auto* rank = verify->add_subcommand("rank-family", "rank n+1 family");
  rank->add_option("--n", opt_n, "family parameter n")->required();
  rank->add_option("--field", field_text, "coefficient field (default QQ)");
  rank->add_option("--v2", v2_override, "override v2 (testing hook)");
  add_common(rank);

  unsigned long opt_p = 2;
  auto* charp = verify->add_subcommand("char-p", "positive characteristic family");
  charp->add_option("--p", opt_p, "characteristic p")->required();
  charp->add_option("--field", field_text, "coefficient field (default GF(p))");
  charp->add_option("--v2", v2_override, "override v2 (testing hook)");
  add_common(charp);

  int opt_en = 2;
  std::string opt_minpoly, opt_q;
  auto* ext = verify->add_subcommand("extension", "extension-field family");
  ext->add_option("--n", opt_en, "family parameter n")->required();
  ext->add_option("--minpoly", opt_minpoly, "minimal polynomial (default x^n-2)");
  ext->add_option("--q", opt_q, "element mapping to c (default x)");
  ext->add_option("--field", field_text, "coefficient field (default QQ)");
  ext->add_option("--v2", v2_override, "override v2 (testing hook)");
  add_common(ext);

  auto* all = verify->add_subcommand("all", "run every family at its defaults");
  std::string all_dir;
  all->add_option("--out-dir", all_dir, "directory for the certificate files");
  add_common(all);

  std::string ring_text, order_text = "grevlex", gens_text, row_text, poly_text;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  gb->add_option("--ring", ring_text, "ring, e.g. \"QQ[x,y,z,t]\"")->required();
  gb->add_option("--order", order_text, "lex | grevlex | block(k)");
  gb->add_option("--gens", gens_text, "semicolon-separated generators")->required();
  add_common(gb);

  auto* syzcmd = app.add_subcommand("syz", "syzygies of a row of polynomials");
  syzcmd->add_option("--ring", ring_text, "ring")->required();
  syzcmd->add_option("--order", order_text, "monomial order");
  syzcmd->add_option("--row", row_text, "row entries, semicolon-separated")->required();
  add_common(syzcmd);

  auto* nfcmd = app.add_subcommand("nf", "normal form modulo an ideal");
  nfcmd->add_option("--ring", ring_text, "ring")->required();
  nfcmd->add_option("--order", order_text, "monomial order");
  nfcmd->add_option("--gens", gens_text, "ideal generators")->required();
  nfcmd->add_option("--poly", poly_text, "polynomial to reduce")->required();
  add_common(nfcmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (fourvar->parsed())
      return run_verify({Family::FourVariable}, field_text, common, v2_override);
    if (rank->parsed()) {
      FamilyParams fp{Family::RankFamily};
      fp.n = opt_n;
      return run_verify(fp, field_text, common, v2_override);
    }
    if (charp->parsed()) {
      FamilyParams fp{Family::CharP};
      fp.p = opt_p;
      return run_verify(fp, field_text, common, v2_override);
    }
    if (ext->parsed()) {
      FamilyParams fp{Family::Extension};
      fp.n = opt_en;
      fp.minpoly_text = opt_minpoly;
      fp.q_text = opt_q;
      return run_verify(fp, field_text, common, v2_override);
    }
    if (all->parsed()) {
      apply_limits(common);
      struct Job {
        FamilyParams params;
        const char* slug;
      };
      std::vector<Job> jobs;
      jobs.push_back({{Family::FourVariable}, "four_variable"});
      for (int n : {2, 3}) {
        FamilyParams fp{Family::RankFamily};
        fp.n = n;
        jobs.push_back({fp, n == 2 ? "rank_family_n2" : "rank_family_n3"});
      }
      for (unsigned long p : {2ul, 3ul}) {
        FamilyParams fp{Family::CharP};
        fp.p = p;
        jobs.push_back({fp, p == 2 ? "char_p_2" : "char_p_3"});
      }
      for (int n : {2, 3}) {
        FamilyParams fp{Family::Extension};
        fp.n = n;
        jobs.push_back({fp, n == 2 ? "extension_n2" : "extension_n3"});
      }
      bool all_ok = true;
      for (const auto& job : jobs) {
        Certificate cert = run_full_certificate(job.params, nullptr);
        bool ok = cert.stably_isomorphic && cert.obstruction_unsolvable;
        all_ok = all_ok && ok;
        std::cout << (ok ? "[pass] " : "[FAIL] ") << job.slug << "\n";
        if (!all_dir.empty()) {
          std::filesystem::create_directories(all_dir);
          write_file(all_dir + "/" + job.slug + ".json", cert.to_json());
        }
      }
      return all_ok ? 0 : kExitVerifyFail;
    }

    apply_limits(common);
    MonomialOrder order = MonomialOrder::parse(order_text);
    RingPtr ring = RingDescriptor::parse(ring_text, order);
    if (gb->parsed()) {
      auto I = Ideal::make(ring, parse_polynomial_list(gens_text, ring));
      auto G = buchberger(I, order, default_limits());
      std::cout << G.str() << "\n";
      return 0;
    }
    if (syzcmd->parsed()) {
      auto row = parse_polynomial_list(row_text, ring);
      PolyMatrix m = mat_zero(ring, 1, row.size());
      for (size_t i = 0; i < row.size(); ++i) m[0][i] = row[i];
      auto syz = syzygies(m, ring);
      if (syz.empty()) {
        std::cout << "no syzygies\n";
        return 0;
      }
      for (const auto& s : syz) std::cout << vp_str(s) << "\n";
      return 0;
    }
    if (nfcmd->parsed()) {
      auto I = Ideal::make(ring, parse_polynomial_list(gens_text, ring));
      auto G = buchberger(I, order, default_limits());
      std::cout << G.normal_form(parse_polynomial(poly_text, ring)).str() << "\n";
      return 0;
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
