#include "mrkit/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mrkit/error.hpp"

namespace mrkit {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::Skip:
      return "skip";
  }
  return "skip";
}

std::vector<const Claim*> select_claims(const std::vector<std::string>& ids) {
  std::vector<const Claim*> out;
  for (const std::string& id : ids)
    if (!find_claim(id)) throw Error(ErrorKind::Usage, "unknown claim id '" + id + "'");
  for (const Claim& c : claim_registry())
    if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end()) out.push_back(&c);
  return out;
}

std::vector<ClaimResult> run_claims(const std::vector<Instance>& instances, const std::vector<const Claim*>& claims) {
  std::vector<ClaimResult> out;
  for (const Instance& in : instances) {
    for (const Claim* c : claims) {
      ClaimResult r{c->id, in.name(), ClaimStatus::Pass, {}};
      if (c->needs_pairs && !in.pairs()) {
        r.status = ClaimStatus::Skip;
        r.witness = "not built as a pair algebra";
      } else if (c->needs_mr && !in.mr()) {
        r.status = ClaimStatus::Skip;
        r.witness = "MR axiom fails";
      } else {
        try {
          if (auto w = c->check(in)) {
            r.status = ClaimStatus::Fail;
            r.witness = *w;
          }
        } catch (const Error& e) {
          r.status = ClaimStatus::Fail;
          r.witness = e.what();
        }
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const ClaimResult& r) { return r.status == ClaimStatus::Fail; });
}

Json to_json(const std::vector<ClaimResult>& results) {
  Json out = Json::array();
  for (const ClaimResult& r : results) {
    Json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = r.instance;
    j["status"] = to_string(r.status);
    if (!r.witness.empty()) j["witness"] = r.witness;
    out.push_back(std::move(j));
  }
  return out;
}

std::string to_text(const std::vector<ClaimResult>& results) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (const ClaimResult& r : results) {
    ++counts[static_cast<int>(r.status)];
    os << to_string(r.status) << "  " << r.claim_id << "  " << r.instance;
    if (!r.witness.empty()) os << "  " << r.witness;
    os << '\n';
  }
  os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return os.str();
}

}  // namespace mrkit
