#include "qseries/report.hpp"

#include <cstdio>
#include <sstream>

namespace qseries::verify {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["id"] = report.id;
  j["status"] = to_string(report.status);
  j["method"] = to_string(report.method);
  j["order"] = report.order;
  j["count"] = report.count;
  j["checks"] = report.checks;
  if (report.mismatch) {
    const auto& m = *report.mismatch;
    nlohmann::json mj{{"step", m.step},
                      {"index", m.index},
                      {"lhs", m.lhs_value},
                      {"rhs", m.rhs_value}};
    if (m.coefficient_index) mj["coefficient_index"] = *m.coefficient_index;
    if (!m.error.empty()) mj["error"] = m.error;
    j["mismatch"] = std::move(mj);
  } else {
    j["mismatch"] = nullptr;
  }
  j["millis"] = report.millis;
  return j;
}

std::string to_json_line(const VerificationReport& report) {
  return to_json(report).dump();
}

std::string csv_header() {
  return "id,status,method,order,count,mismatch_step,mismatch_index,"
         "coefficient_index,lhs,rhs,millis";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << csv_field(r.id) << ',' << to_string(r.status) << ','
     << csv_field(to_string(r.method)) << ',' << r.order << ',' << r.count
     << ',';
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    os << csv_field(m.step) << ',' << m.index << ',';
    if (m.coefficient_index) os << *m.coefficient_index;
    os << ',' << csv_field(m.lhs_value) << ',' << csv_field(m.rhs_value);
  } else {
    os << ",,,,";
  }
  os << ',' << fixed_millis(r.millis);
  return os.str();
}

std::string table_header() {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-15s %-6s %-26s %7s %6s %10s  %s", "id",
                "status", "method", "order", "count", "ms", "detail");
  return buf;
}

std::string to_table_row(const VerificationReport& r) {
  std::string detail;
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    std::ostringstream os;
    os << "[" << m.step << "] ";
    if (!m.error.empty()) {
      os << m.error;
    } else {
      os << "first mismatch at n=" << m.index;
      if (m.coefficient_index) os << " (coefficient " << *m.coefficient_index << ")";
      os << ": " << m.lhs_value << " vs " << m.rhs_value;
    }
    detail = os.str();
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-15s %-6s %-26s %7zu %6zu %10s  ",
                r.id.c_str(), to_string(r.status).c_str(),
                to_string(r.method).c_str(), r.order, r.count,
                fixed_millis(r.millis).c_str());
  return buf + detail;
}

}  // namespace qseries::verify
