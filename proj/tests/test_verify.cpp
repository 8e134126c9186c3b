#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "fixtures.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/corpus.hpp"
#include "mrkit/error.hpp"
#include "mrkit/serialization.hpp"
#include "mrkit/verify.hpp"

using namespace mrkit;
using fixtures::c2;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("json round trip") {
  for (const CubicAlgebra* A : {&fixtures::c1(), &c2(), &fixtures::c3(), &fixtures::n5().algebra}) {
    const Json doc = to_json(*A);
    const CubicAlgebra back = algebra_from_json(doc);
    CHECK(back.tables().join == A->tables().join);
    CHECK(back.tables().delta == A->tables().delta);
    CHECK(back.labels() == A->labels());
    CHECK(dump(to_json(back)) == dump(doc));
  }
  const auto path = temp_file("mrkit_c2.json", dump(to_json(c2())));
  CHECK(dump(read_json_file(path.string())) == dump(to_json(c2())));
  std::filesystem::remove(path);
}

TEST_CASE("schema errors") {
  Json doc = to_json(c2());
  Json missing = doc;
  missing.erase("delta");
  CHECK(kind_of([&] { algebra_from_json(missing); }) == ErrorKind::Schema);
  Json ragged = doc;
  ragged["join"][3].erase(0);
  CHECK(kind_of([&] { algebra_from_json(ragged); }) == ErrorKind::Schema);
  Json typed = doc;
  typed["leq"][0][0] = "yes";
  CHECK(kind_of([&] { algebra_from_json(typed); }) == ErrorKind::Schema);
  Json zero = doc;
  zero["carrier"] = 0;
  CHECK(kind_of([&] { algebra_from_json(zero); }) == ErrorKind::Schema);
  CHECK(kind_of([] { algebra_from_json(Json::array()); }) == ErrorKind::Schema);

  const std::string text = dump(doc);
  const auto path = temp_file("mrkit_truncated.json", text.substr(0, text.size() / 2));
  CHECK(kind_of([&] { read_json_file(path.string()); }) == ErrorKind::Schema);
  std::filesystem::remove(path);
}

TEST_CASE("axiom failures surface on strict load") {
  Json doc = to_json(c2());
  const auto top = static_cast<std::size_t>(c2().one());
  const auto edge = static_cast<std::size_t>(*c2().find_label("<1,p>"));
  doc["delta"][top][edge] = static_cast<int>(top);
  CHECK(kind_of([&] { algebra_from_json(doc); }) == ErrorKind::AxiomViolation);
  const CubicAlgebra raw = algebra_from_json(doc, Validation::Raw);
  CHECK_FALSE(check_cubic_axioms(raw).passed);

  const std::vector<ClaimResult> r = run_claims({Instance::from_algebra("patched", raw)}, select_claims({"def:cubic"}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == ClaimStatus::Fail);
  CHECK(r[0].witness.find("axiom") != std::string::npos);
  CHECK_FALSE(all_passed(r));
}

TEST_CASE("claim registry") {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  for (const Claim& c : reg) {
    CHECK_FALSE(c.statement.empty());
    CHECK(find_claim(c.id) == &c);
    ids.insert(c.id);
  }
  CHECK(ids.size() == reg.size());
  CHECK(find_claim("lem:nothing") == nullptr);
  CHECK(select_claims({}).size() == reg.size());
  CHECK(kind_of([] { select_claims({"lem:fixed", "lem:nothing"}); }) == ErrorKind::Usage);

  // registry order regardless of request order
  const auto two = select_claims({"lem:fixed", "def:cubic"});
  REQUIRE(two.size() == 2);
  CHECK(two[0]->id == "def:cubic");
}

TEST_CASE("run claims") {
  const std::vector<Instance> ins{Instance::from_pairs("C2", fixtures::cube(2)), Instance::from_pairs("N5", fixtures::n5())};
  const auto results = run_claims(ins, select_claims({"lem:fixed", "lem:caretTotal"}));
  REQUIRE(results.size() == 4);
  CHECK(results[0].instance == "C2");
  CHECK(results[0].claim_id == "lem:caretTotal");
  CHECK(results[0].status == ClaimStatus::Pass);
  CHECK(results[1].status == ClaimStatus::Pass);
  CHECK(results[2].status == ClaimStatus::Pass);
  CHECK(results[3].status == ClaimStatus::Skip);
  CHECK(results[3].witness == "MR axiom fails");
  CHECK(all_passed(results));

  const Json j = to_json(results);
  CHECK(j.size() == 4);
  CHECK(j[0]["claim_id"] == "lem:caretTotal");
  CHECK(j[0]["status"] == "pass");
  CHECK_FALSE(j[0].contains("witness"));
  CHECK(j[3]["status"] == "skip");
  CHECK(to_text(results).find("3 passed, 0 failed, 1 skipped") != std::string::npos);
}

TEST_CASE("corpus is seeded") {
  CHECK(random_implication_subalgebras(42, 5) == random_implication_subalgebras(42, 5));
  const auto a = build_corpus(42), b = build_corpus(42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name() == b[i].name());
    CHECK(a[i].algebra().tables().delta == b[i].algebra().tables().delta);
  }
  for (const auto& masks : random_implication_subalgebras(7, 5)) {
    CHECK(masks.size() >= 2);
    CHECK(masks.back() == 0b111u);
  }
  const auto results = run_claims(a, select_claims({"lem:fixed"}));
  CHECK(dump(to_json(results)) == dump(to_json(run_claims(b, select_claims({"lem:fixed"})))));
}
