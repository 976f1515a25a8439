#include "sixv/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace sixv {

void VerificationReport::add(std::string name, std::string anchor,
                             double residual, double tolerance, Sense sense) {
  CheckRow row;
  row.name = std::move(name);
  row.anchor = std::move(anchor);
  row.residual = residual;
  row.tolerance = tolerance;
  row.pass = sense == Sense::Below ? residual < tolerance : residual > tolerance;
  checks.push_back(std::move(row));
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::pass() const {
  for (const auto& row : checks) {
    if (!row.pass) return false;
  }
  return true;
}

const CheckRow* VerificationReport::find(std::string_view name) const {
  for (const auto& row : checks) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["config_hash"] = report.config_hash;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& row : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = row.name;
    item["anchor"] = row.anchor;
    item["residual"] = row.residual;
    item["tol"] = row.tolerance;
    item["pass"] = row.pass;
    doc["checks"].push_back(std::move(item));
  }
  doc["pass"] = report.pass();
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "name,anchor,residual,tol,pass\n";
  for (const auto& row : report.checks) {
    out += row.name + "," + row.anchor + "," + format_double(row.residual) +
           "," + format_double(row.tolerance) + "," +
           (row.pass ? "true" : "false") + "\n";
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char ch : bytes) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hash_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf);
}

std::string format_complex(double re, double im) {
  return "[" + format_double(re) + "," + format_double(im) + "]";
}

}  // namespace sixv
