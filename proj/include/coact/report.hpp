#ifndef COACT_REPORT_HPP_
#define COACT_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

namespace coact {

/// Outcome of one executed construction: the computed artifacts (generating
/// sets, chosen witnesses) together with the oracle verification verdict.
struct ConstructionReport {
  std::string check;     // stable check id, e.g. "lemma52_transfer"
  std::string claim;     // the verified identity, stated in plain terms
  std::string instance;  // which inputs were run
  bool verified = false;
  bool bound_relative = false;  // computable-monoid checks explore a ball only
  std::vector<std::string> failures;
  nlohmann::json artifacts = nlohmann::json::object();
  double wall_ms = 0;  // console-only; kept out of serialized reports

  void fail(std::string message) { failures.push_back(std::move(message)); }
  /// Sets verified from the failure list; call once all checks ran.
  void finalize() { verified = failures.empty(); }
};

/// Serialization omits wall time so reports are byte-identical across runs
/// with the same inputs and seeds.
nlohmann::json report_to_json(const ConstructionReport& r);

}  // namespace coact

#endif  // COACT_REPORT_HPP_
