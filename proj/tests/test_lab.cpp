#include "cancelab/lab.hpp"
#include "cancelab/parser.hpp"
#include "doctest.h"

using namespace cancelab;

TEST_CASE("build the four-variable pair") {
  auto pair = build_example({Family::FourVariable}, FieldDescriptor::rationals());
  CHECK(pair.v1.size() == 3);
  CHECK(pair.v1[0].str() == "x");
  CHECK(pair.v2[1].str() == "y*z");
  CHECK(pair.d_diag[1].str() == "z");
  CHECK(pair.d_diag[0].is_one());
  CHECK(pair.rad_witness == std::vector<int>{1, 1, 1});
}

TEST_CASE("build the rank family pair") {
  FamilyParams fp{Family::RankFamily};
  fp.n = 2;
  auto pair = build_example(fp, FieldDescriptor::rationals());
  CHECK(pair.v1.size() == 4);
  CHECK(pair.v1[0].str() == "x^2");
  CHECK(pair.v1[1].str() == "x*y");
  CHECK(pair.v2[0].str() == "x^2*z");
  // rad witnesses: x^2 and y^2 in I (power 2), zt-1 in I (power 1)
  CHECK(pair.rad_witness == std::vector<int>{2, 2, 1});
}

TEST_CASE("build the char-p pair") {
  FamilyParams fp{Family::CharP};
  fp.p = 2;
  auto pair = build_example(fp, nullptr);
  CHECK(pair.field->text() == "GF(2)");
  CHECK(pair.v1.size() == 3);
  CHECK(pair.v1[0].str() == "x^2");
  CHECK(pair.v1[1].str() == "y");
  CHECK(pair.v2[1].str() == "x*y+y");
  FamilyParams bad = fp;
  bad.p = 3;
  CHECK_THROWS_AS(build_example(bad, FieldDescriptor::prime(2)), ArithError);
}

TEST_CASE("build the extension pair with defaults") {
  FamilyParams fp{Family::Extension};
  fp.n = 2;
  auto pair = build_example(fp, nullptr);
  CHECK(pair.params.minpoly_text == "x^2-2");
  CHECK(pair.params.q_text == "x");
  CHECK(pair.v1.size() == 3);
  CHECK(pair.v2[2].str() == "x*z");
  // reducible minimal polynomial is rejected
  FamilyParams bad = fp;
  bad.minpoly_text = "x^2-4";
  CHECK_THROWS_AS(build_example(bad, nullptr), ArithError);
}

TEST_CASE("four-variable certificate end to end") {
  auto cert = run_full_certificate({Family::FourVariable},
                                   FieldDescriptor::rationals());
  CHECK(cert.stably_isomorphic);
  CHECK(cert.obstruction_unsolvable);
  CHECK(cert.steps.size() == 12);
  for (const auto& s : cert.steps) CHECK(s.pass);
  // determinism of the serialized form
  auto cert2 = run_full_certificate({Family::FourVariable},
                                    FieldDescriptor::rationals());
  CHECK(cert.to_json() == cert2.to_json());
  // text form carries the conclusion verbatim
  auto text = cert.to_text();
  CHECK(text.find("stably_isomorphic = true") != std::string::npos);
  CHECK(text.find("obstruction_unsolvable = true") != std::string::npos);
}

TEST_CASE("degenerate pair v1 = v2 passes trivially") {
  auto pair = build_example({Family::FourVariable}, FieldDescriptor::rationals(),
                            std::string("x; y; z*t-1"));
  auto stable = verify_stable_isomorphism(pair);
  CHECK(stable.all_passed);
}

TEST_CASE("corrupted v2 fails closed") {
  auto cert = run_full_certificate({Family::FourVariable},
                                   FieldDescriptor::rationals(),
                                   std::string("x; y^2; z*t-1"));
  CHECK(!cert.stably_isomorphic);
  CHECK(!cert.obstruction_unsolvable);
  REQUIRE(!cert.steps.empty());
  CHECK(cert.steps[0].id == "stable.1.ideal_equal");
  CHECK(!cert.steps[0].pass);
}

TEST_CASE("char-p certificate p = 2") {
  FamilyParams fp{Family::CharP};
  fp.p = 2;
  auto cert = run_full_certificate(fp, nullptr);
  CHECK(cert.stably_isomorphic);
  CHECK(cert.obstruction_unsolvable);
}

#ifdef FIXTURES_DIR
#include <fstream>
#include <sstream>

namespace {
std::string read_fixture(const std::string& name) {
  std::ifstream is(std::string(FIXTURES_DIR) + "/" + name, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}
}  // namespace

TEST_CASE("certificates match the golden fixtures byte for byte") {
  auto four = run_full_certificate({Family::FourVariable}, nullptr);
  CHECK(four.to_json() == read_fixture("four_variable.json"));

  FamilyParams cp{Family::CharP};
  cp.p = 2;
  CHECK(run_full_certificate(cp, nullptr).to_json() == read_fixture("char_p_2.json"));

  FamilyParams ex{Family::Extension};
  ex.n = 2;
  CHECK(run_full_certificate(ex, nullptr).to_json() ==
        read_fixture("extension_n2.json"));
}
#endif

TEST_CASE("extension certificate n = 2") {
  FamilyParams fp{Family::Extension};
  fp.n = 2;
  auto cert = run_full_certificate(fp, nullptr);
  CHECK(cert.stably_isomorphic);
  CHECK(cert.obstruction_unsolvable);
}
