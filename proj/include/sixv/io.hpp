#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sixv/model.hpp"
#include "sixv/pde.hpp"

namespace sixv {

struct RunInput {
  ModelParams params;
  SpectralPoint point;
  std::optional<Cx> lambda0;
};

RunInput parse_run_input(const std::string& text);
RunInput load_run_input(const std::string& path);

// deterministic canonical serialisation of the physical inputs; feeds the
// config hash, so it must not depend on parallelism or output options
std::string canonical_input_string(const RunInput& input);

struct GoldenEntry {
  ModelParams params;
  SpectralPoint point;
  Cx z;
  double crosscheck_discrepancy = 0.0;  // relative gap of the two routes
};

std::vector<GoldenEntry> load_golden(const std::string& path);
void save_golden(const std::string& path,
                 const std::vector<GoldenEntry>& entries);

// entry whose parameters match the input componentwise within 1e-12
std::optional<GoldenEntry> find_golden(const std::vector<GoldenEntry>& entries,
                                       const RunInput& input);

std::string polyrep_to_json(const PolyRep& poly, const std::string& config_hash,
                            double node_radius);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace sixv
