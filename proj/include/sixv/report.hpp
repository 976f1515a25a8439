#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sixv {

// pass convention: Below means residual < tolerance passes, Above means the
// value must exceed the tolerance (used by non-degeneracy checks)
enum class Sense { Below, Above };

struct CheckRow {
  std::string name;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string config_hash;
  std::vector<CheckRow> checks;

  void add(std::string name, std::string anchor, double residual,
           double tolerance, Sense sense = Sense::Below);
  void merge(const VerificationReport& other);
  bool pass() const;
  const CheckRow* find(std::string_view name) const;
};

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::string_view bytes);

// fixed 17-significant-digit formatting, used wherever byte-identical output
// across runs is required
std::string format_double(double value);
std::string format_complex(double re, double im);

}  // namespace sixv
