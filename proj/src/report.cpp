#include "mtlmon/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "mtlmon/interval.hpp"

namespace mtlmon {

void render_text(std::ostream& out, const RunReport& report) {
  std::size_t name_width = 11;
  for (const RequirementResult& r : report.requirements) {
    name_width = std::max(name_width, r.name.size());
  }
  out << std::left << std::setw(static_cast<int>(name_width) + 2)
      << "requirement" << std::setw(15) << "class" << std::setw(15)
      << "verdict" << "violation_time\n";
  for (const RequirementResult& r : report.requirements) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << r.name
        << std::setw(15) << to_string(r.cls) << std::setw(15)
        << to_string(r.verdict)
        << (r.violation_time ? format_number(*r.violation_time) : "-") << "\n";
  }
  out << "violations: " << report.violated_count << " of "
      << report.requirements.size() << " requirements\n";
  out << "events: " << report.total_events << " ("
      << format_number(report.events_per_second) << " events/s, max residual "
      << report.max_residual_nodes << " nodes)\n";
}

std::string render_json(const RunReport& report) {
  nlohmann::json doc;
  doc["requirements"] = nlohmann::json::array();
  for (const RequirementResult& r : report.requirements) {
    nlohmann::json entry;
    entry["name"] = r.name;
    entry["class"] = std::string(to_string(r.cls));
    entry["verdict"] = std::string(to_string(r.verdict));
    if (r.violation_time) {
      entry["violation_time"] = *r.violation_time;
    } else {
      entry["violation_time"] = nullptr;
    }
    entry["events"] = r.events;
    doc["requirements"].push_back(std::move(entry));
  }
  doc["summary"] = {{"violated", report.violated_count},
                    {"total", report.requirements.size()},
                    {"events_per_second", report.events_per_second}};
  return doc.dump(2);
}

}  // namespace mtlmon
