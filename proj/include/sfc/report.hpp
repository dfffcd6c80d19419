#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sfc/cyclotomic.hpp"
#include "sfc/f2.hpp"
#include "sfc/symbol.hpp"

namespace sfc {

using Json = nlohmann::ordered_json;

// Verification entry: `claim` is a stable anchor string, status is one of
// pass / fail / reported.  "reported" flags the documented ambiguities that
// are surfaced rather than asserted; it never fails a run.
struct Verification {
  std::string claim;
  std::string status;
  Json witness;
};

inline Verification v_pass(const std::string& claim) { return {claim, "pass", nullptr}; }
inline Verification v_fail(const std::string& claim, Json witness) {
  return {claim, "fail", std::move(witness)};
}
inline Verification v_reported(const std::string& claim, Json witness) {
  return {claim, "reported", std::move(witness)};
}

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Verification> verifications;

  bool any_fail() const {
    for (auto& v : verifications)
      if (v.status == "fail") return true;
    return false;
  }
  Json to_json() const {
    Json j;
    j["schema_version"] = "1.0";
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    Json vs = Json::array();
    for (auto& v : verifications) {
      Json e;
      e["claim"] = v.claim;
      e["status"] = v.status;
      if (!v.witness.is_null()) e["witness"] = v.witness;
      vs.push_back(e);
    }
    j["verifications"] = vs;
    return j;
  }
};

inline Json json_pair(const SymbolPair& p) {
  return Json::array({p.A, p.B});
}

inline Json json_labels(const f2::Ground& g, uint32_t mask) {
  return Json(g->labels_of(mask));
}

inline Json json_cyc(const Cyc& v) {
  if (v.is_rational()) return v.rational_part().str();
  Json coeffs = Json::array();
  int last = 0;
  const auto& c = v.coeffs();
  for (int i = 0; i < (int)c.size(); ++i)
    if (!c[i].is_zero()) last = i;
  for (int i = 0; i <= last; ++i) coeffs.push_back(c[i].str());
  Json j;
  j["zeta60_poly"] = coeffs;
  return j;
}

}  // namespace sfc
