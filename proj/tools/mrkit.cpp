// mrkit: build cubic implication algebras, check axioms, compute automorphism
// groups and run the claim suite.
//
// Exit codes: 0 pass, 1 a check or claim failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mrkit/automorphism_search.hpp"
#include "mrkit/axioms.hpp"
#include "mrkit/boolean_algebra.hpp"
#include "mrkit/constructions.hpp"
#include "mrkit/corpus.hpp"
#include "mrkit/error.hpp"
#include "mrkit/inner.hpp"
#include "mrkit/serialization.hpp"
#include "mrkit/verify.hpp"

using namespace mrkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string witness = "first";
  std::size_t max_carrier = kDefaultMaxCarrier;

  std::string kind;
  unsigned atoms = 2;
  unsigned n = 2;
  std::string at;
  std::string base;

  bool inner = false;
  bool corpus = false;
  std::vector<std::string> claims;
  std::uint64_t seed = 42;
};

std::size_t cap(const Options& o) { return max_carrier_from_env(o.max_carrier); }

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::Usage, "cannot write " + o.output);
  out << text;
}

Json labels_of(const Semilattice& A, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(A.label(x));
  return out;
}

CubicAlgebra load(const Options& o, Validation mode = Validation::Strict) {
  if (o.input.empty()) throw Error(ErrorKind::Usage, "--input is required");
  return algebra_from_json(read_json_file(o.input), mode);
}

Mask parse_mask(const BooleanAlgebra& B, const std::string& label) {
  try {
    return B.parse(label);
  } catch (const Error&) {
    throw Error(ErrorKind::Usage, "bad element '" + label + "' for B" + std::to_string(B.atoms()));
  }
}

CubicAlgebra build(const Options& o) {
  const std::size_t limit = cap(o);
  if (o.kind == "interval") return build_I(as_implication_algebra(BooleanAlgebra(o.atoms)).algebra, limit).algebra;
  if (o.kind == "face") return face_poset(o.n, limit).algebra;
  if (o.kind == "filter") {
    const BooleanAlgebra B(o.atoms);
    const Mask g = parse_mask(B, o.at.empty() ? "0" : o.at);
    std::vector<Mask> f;
    for (Mask m : B.elements())
      if ((m & g) == g) f.push_back(m);
    return filter_algebra(B, f, limit).pairs.algebra;
  }
  if (o.kind == "pairs") {
    if (o.base == "I3") return build_I(implication_subalgebra(BooleanAlgebra(2), {0b01, 0b10, 0b11}).algebra, limit).algebra;
    const BooleanAlgebra B(o.atoms);
    std::vector<Mask> members;
    std::stringstream ss(o.base);
    for (std::string item; std::getline(ss, item, ',');) members.push_back(parse_mask(B, item));
    if (members.empty()) throw Error(ErrorKind::Usage, "--base needs I3 or a comma-separated element list");
    return build_I(implication_subalgebra(B, members).algebra, limit).algebra;
  }
  throw Error(ErrorKind::Usage, "unknown kind '" + o.kind + "'");
}

Json report_json(const Semilattice& A, const AxiomReport& r) {
  Json j;
  j["passed"] = r.passed;
  Json v = Json::array();
  for (const Violation& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", labels_of(A, x.witness)}});
  j["violations"] = std::move(v);
  return j;
}

std::string report_text(const Semilattice& A, const std::string& name, const AxiomReport& r) {
  std::string out = name + ": " + (r.passed ? "pass" : "fail") + "\n";
  for (const Violation& x : r.violations) out += "  " + x.axiom + " " + format_witness(A, x.witness) + "\n";
  return out;
}

int cmd_build(const Options& o) {
  emit(o, dump(to_json(build(o))));
  return kPass;
}

int cmd_check(const Options& o) {
  if (o.witness != "first" && o.witness != "all") throw Error(ErrorKind::Usage, "--witness takes first or all");
  const WitnessPolicy policy = o.witness == "all" ? WitnessPolicy::All : WitnessPolicy::First;
  const CubicAlgebra A = load(o, Validation::Raw);
  const AxiomReport cubic = check_cubic_axioms(A, policy);
  const AxiomReport mr = cubic.passed ? check_mr_axiom(A, policy) : AxiomReport{};
  const auto caret = cubic.passed ? first_caret_failure(A) : std::nullopt;
  const bool passed = cubic.passed && mr.passed;
  if (o.format == "text") {
    std::string out = report_text(A, "cubic", cubic);
    if (cubic.passed) {
      out += report_text(A, "mr", mr);
      out += std::string("caret-total: ") + (caret ? "no " + format_witness(A, {caret->first, caret->second}) : "yes") + "\n";
    }
    emit(o, out);
  } else {
    Json j;
    j["carrier"] = A.size();
    j["cubic"] = report_json(A, cubic);
    if (cubic.passed) {
      j["mr"] = report_json(A, mr);
      j["caret_total"] = !caret;
      if (caret) j["caret_witness"] = labels_of(A, {caret->first, caret->second});
    }
    emit(o, dump(j));
  }
  return passed ? kPass : kFail;
}

int cmd_aut(const Options& o) {
  const CubicAlgebra A = load(o);
  const auto aut = enumerate_aut(A, cap(o));
  Json j;
  j["carrier"] = A.size();
  j["order"] = aut.size();
  Json elems = Json::array();
  for (const Permutation& p : aut) elems.push_back(labels_of(A, p));
  j["automorphisms"] = std::move(elems);
  std::string text = "order " + std::to_string(aut.size()) + "\n";
  if (o.inner) {
    const InnerGroupReport r = inner_group(A, aut);
    Json in;
    in["order"] = r.inner.size();
    in["abelian"] = r.abelian;
    in["normal"] = r.normal;
    in["two_torsion"] = r.two_torsion;
    Json list = Json::array();
    for (const Permutation& p : r.inner) list.push_back(labels_of(A, p));
    in["automorphisms"] = std::move(list);
    text += "inner " + std::to_string(r.inner.size()) + "\n";
    if (check_mr_axiom(A).passed) {
      const Quotient q = quotient_C(A);
      Json omega_table = Json::array();
      for (std::size_t i = 0; i < r.inner.size(); ++i) {
        const Filter g = omega(A, q, r.inner[i]);
        omega_table.push_back({{"inner", i}, {"filter", labels_of(q.algebra, g.elements())}});
        text += "  omega[" + std::to_string(i) + "] = " + format_witness(q.algebra, g.elements()) + "\n";
      }
      in["omega"] = std::move(omega_table);
    }
    j["inner"] = std::move(in);
  }
  emit(o, o.format == "text" ? text : dump(j));
  return kPass;
}

int cmd_verify(const Options& o) {
  const auto claims = select_claims(o.claims);
  std::vector<Instance> instances;
  if (o.corpus) {
    if (!o.input.empty()) throw Error(ErrorKind::Usage, "--corpus and --input are exclusive");
    instances = build_corpus(o.seed, cap(o));
  } else {
    CubicAlgebra A = load(o);
    if (A.size() > cap(o)) throw Error(ErrorKind::CapExceeded, "carrier exceeds --max-carrier");
    instances.push_back(Instance::from_algebra(std::filesystem::path(o.input).stem().string(), std::move(A)));
  }
  const auto results = run_claims(instances, claims);
  emit(o, o.format == "text" ? to_text(results) : dump(to_json(results)));
  return all_passed(results) ? kPass : kFail;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Usage:
    case ErrorKind::Schema:
    case ErrorKind::MalformedTable:
    case ErrorKind::AxiomViolation:
    case ErrorKind::CapExceeded:
    case ErrorKind::NotAFilter:
    case ErrorKind::NotClosed:
      return kUsage;
    default:
      return kFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite cubic implication algebras: construction, axiom checks, automorphisms, claim suite"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("-i,--input", o.input, "Algebra JSON file");
    sub->add_option("-o,--output", o.output, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-carrier", o.max_carrier, "Carrier size cap (MRKIT_MAX_CARRIER overrides)");
  };

  CLI::App* b = app.add_subcommand("build", "Build an algebra and write its tables");
  common(b, false);
  b->add_option("--kind", o.kind, "interval, face, filter or pairs")
      ->required()
      ->check(CLI::IsMember({"interval", "face", "filter", "pairs"}));
  b->add_option("--atoms", o.atoms, "Atoms of the Boolean base");
  b->add_option("--n", o.n, "Dimension of the face poset");
  b->add_option("--at", o.at, "Generator of the principal filter (filter kind), e.g. r or pq");
  b->add_option("--base", o.base, "I3, or comma-separated elements of B_atoms (pairs kind)");

  CLI::App* c = app.add_subcommand("check", "Check the cubic axioms, MR and caret totality");
  common(c, true);
  c->add_option("--witness", o.witness, "first or all")->check(CLI::IsMember({"first", "all"}));

  CLI::App* a = app.add_subcommand("aut", "Enumerate the automorphism group");
  common(a, true);
  a->add_flag("--inner", o.inner, "Also report the inner subgroup and Omega");

  CLI::App* v = app.add_subcommand("verify", "Run the claim suite");
  common(v, true);
  v->add_flag("--corpus", o.corpus, "Use the built-in corpus");
  v->add_option("--claims", o.claims, "Claim ids to run (default all)")->delimiter(',');
  v->add_option("--seed", o.seed, "Seed for the random part of the corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (b->parsed()) return cmd_build(o);
    if (c->parsed()) return cmd_check(o);
    if (a->parsed()) return cmd_aut(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "mrkit: " << e.what() << "\n";
    return exit_code(e);
  }
}
