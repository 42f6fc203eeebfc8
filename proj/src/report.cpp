#include "gwm/report.hpp"

#include <json.hpp>
#include <sstream>

namespace gwm {

namespace {

nlohmann::ordered_json model_json(const ModelSpec& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  j["degrees"] = m.degrees;
  j["label"] = m.label();
  j["dim"] = m.dim();
  j["calabi_yau"] = m.calabi_yau();
  j["fano"] = m.fano();
  return j;
}

// RFC-4180 style quoting, applied only when needed.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_json(const ModelSpec& m, const std::vector<Record>& records,
                        const std::vector<CheckResult>& checks) {
  nlohmann::ordered_json doc;
  doc["model"] = model_json(m);
  doc["records"] = nlohmann::ordered_json::array();
  for (const Record& r : records) {
    nlohmann::ordered_json row;
    row["kind"] = r.kind;
    row["degree"] = r.degree;
    row["insertions"] = r.insertions;
    row["value"] = r.value;
    doc["records"].push_back(std::move(row));
  }
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["status"] = c.pass ? "pass" : "fail";
    row["detail"] = c.detail;
    doc["checks"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string render_csv(const ModelSpec& m, const std::vector<Record>& records,
                       const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  os << "model,kind,degree,insertions,value\n";
  const std::string label = csv_field(m.label());
  for (const Record& r : records)
    os << label << ',' << csv_field(r.kind) << ',' << r.degree << ','
       << csv_field(r.insertions) << ',' << csv_field(r.value) << '\n';
  for (const CheckResult& c : checks)
    os << label << ",check,," << csv_field(c.name) << ','
       << csv_field(c.pass ? "pass" : "fail: " + c.detail) << '\n';
  return os.str();
}

}  // namespace gwm
