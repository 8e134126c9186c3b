#include "mrkit/error.hpp"

#include <cstdlib>

#include "mrkit/types.hpp"

namespace mrkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DeltaUndefined: return "DeltaUndefined";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::NotSubfilter: return "NotSubfilter";
    case ErrorKind::NoWitnessFilter: return "NoWitnessFilter";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::NotGFilter: return "NotGFilter";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::NotAPresentation: return "NotAPresentation";
    case ErrorKind::CaretUndefined: return "CaretUndefined";
    case ErrorKind::MembershipBroken: return "MembershipBroken";
    case ErrorKind::NotUpwardClosed: return "NotUpwardClosed";
    case ErrorKind::NotInner: return "NotInner";
    case ErrorKind::SplitFailure: return "SplitFailure";
    case ErrorKind::NotSim: return "NotSim";
    case ErrorKind::NoSuchPair: return "NoSuchPair";
    case ErrorKind::NotMR: return "NotMR";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::size_t max_carrier_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("MRKIT_MAX_CARRIER")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return fallback;
}

std::vector<Elem> to_vector(const ElementSet& set) {
  std::vector<Elem> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

ElementSet make_set(std::size_t n, const std::vector<Elem>& members) {
  ElementSet set(n);
  for (Elem x : members) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x) + " outside carrier of size " + std::to_string(n));
    }
    set.set(static_cast<std::size_t>(x));
  }
  return set;
}

}  // namespace mrkit
