#include "gg/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gg {

std::string Report::text(bool timing) const {
  std::ostringstream out;
  out << "scenario: " << scenario << "\n";
  for (const auto& e : entries) {
    out << "  [" << e.status << "] " << e.id;
    if (!e.residual.empty()) out << "  residual: " << e.residual;
    if (timing && e.seconds >= 0) out << "  (" << e.seconds << " s)";
    out << "\n";
  }
  out << "overall: " << (overall() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string Report::json(bool timing) const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json c;
    c["id"] = e.id;
    c["anchor"] = e.anchor;
    c["status"] = e.status;
    c["residual"] = e.residual;
    if (timing && e.seconds >= 0) c["seconds"] = e.seconds;
    j["checks"].push_back(std::move(c));
  }
  j["overall"] = overall() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& src) {
  nlohmann::json j = nlohmann::json::parse(src);
  Report rep;
  rep.scenario = j.at("scenario").get<std::string>();
  for (const auto& c : j.at("checks")) {
    CheckEntry e;
    e.id = c.at("id").get<std::string>();
    e.anchor = c.at("anchor").get<std::string>();
    e.status = c.at("status").get<std::string>();
    e.residual = c.at("residual").get<std::string>();
    if (c.contains("seconds")) e.seconds = c["seconds"].get<double>();
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace gg
