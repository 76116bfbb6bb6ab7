#include "coact/report.hpp"

namespace coact {

nlohmann::json report_to_json(const ConstructionReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["claim"] = r.claim;
  j["instance"] = r.instance;
  j["verified"] = r.verified;
  j["bound_relative"] = r.bound_relative;
  j["failures"] = r.failures;
  j["artifacts"] = r.artifacts;
  return j;
}

}  // namespace coact
