#include "kroots/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace kroots {

using nlohmann::ordered_json;

bool Report::all_pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

void Report::add(Partition cls, std::string detail, std::int64_t lhs, std::int64_t rhs) {
  rows.push_back({std::move(cls), std::move(detail), lhs, rhs, lhs == rhs});
}

void Report::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.cls < b.cls; });
}

namespace {

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["check"] = r.check;
  j["n"] = r.n;
  if (r.k) j["k"] = *r.k;
  auto& rows = j["rows"] = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json jr;
    jr["class"] = row.cls.to_string();
    if (!row.detail.empty()) jr["detail"] = row.detail;
    jr["lhs"] = row.lhs;
    jr["rhs"] = row.rhs;
    jr["pass"] = row.pass;
    rows.push_back(std::move(jr));
  }
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace

std::string Report::to_json(int indent) const { return report_json(*this).dump(indent); }

std::string reports_to_json(std::span<const Report> reports, int indent) {
  auto arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

}  // namespace kroots
