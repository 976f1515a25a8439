#include "sixv/io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "sixv/errors.hpp"
#include "sixv/report.hpp"

namespace sixv {

namespace {

using nlohmann::ordered_json;

Cx parse_complex(const ordered_json& node, const std::string& field) {
  if (node.is_number()) return Cx(node.get<double>(), 0.0);
  if (node.is_array() && node.size() == 2 && node[0].is_number() &&
      node[1].is_number()) {
    return Cx(node[0].get<double>(), node[1].get<double>());
  }
  throw ParseError("field '" + field + "' must be a number or [re, im]");
}

std::vector<Cx> parse_complex_list(const ordered_json& node,
                                   const std::string& field) {
  if (!node.is_array()) {
    throw ParseError("field '" + field + "' must be an array");
  }
  std::vector<Cx> out;
  out.reserve(node.size());
  for (std::size_t k = 0; k < node.size(); ++k) {
    out.push_back(parse_complex(node[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

ordered_json complex_to_json(Cx z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json complex_list_to_json(const std::vector<Cx>& zs) {
  ordered_json out = ordered_json::array();
  for (const Cx z : zs) out.push_back(complex_to_json(z));
  return out;
}

}  // namespace

RunInput parse_run_input(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("parameter file must be an object");
  for (const char* field : {"L", "gamma", "h", "mu", "lambda"}) {
    if (!doc.contains(field)) {
      throw ParseError(std::string("missing field '") + field + "'");
    }
  }
  if (!doc["L"].is_number_unsigned()) {
    throw ParseError("field 'L' must be a positive integer");
  }

  RunInput input;
  input.params.L = doc["L"].get<std::size_t>();
  input.params.gamma = parse_complex(doc["gamma"], "gamma");
  input.params.h = parse_complex(doc["h"], "h");
  input.params.mu = parse_complex_list(doc["mu"], "mu");
  input.point.lambda = parse_complex_list(doc["lambda"], "lambda");
  if (doc.contains("lambda0")) {
    input.lambda0 = parse_complex(doc["lambda0"], "lambda0");
  }

  try {
    validate_point(input.params, input.point);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
  return input;
}

RunInput load_run_input(const std::string& path) {
  return parse_run_input(read_text_file(path));
}

std::string canonical_input_string(const RunInput& input) {
  std::string out = "L=" + std::to_string(input.params.L);
  auto push = [&out](const char* tag, Cx z) {
    out += std::string("|") + tag + "=" + format_complex(z.real(), z.imag());
  };
  push("gamma", input.params.gamma);
  push("h", input.params.h);
  for (const Cx m : input.params.mu) push("mu", m);
  for (const Cx l : input.point.lambda) push("lambda", l);
  if (input.lambda0) push("lambda0", *input.lambda0);
  return out;
}

std::vector<GoldenEntry> load_golden(const std::string& path) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid golden corpus: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array()) {
    throw ParseError("golden corpus must hold an 'entries' array");
  }

  std::vector<GoldenEntry> out;
  for (const auto& item : doc["entries"]) {
    GoldenEntry e;
    e.params.L = item.at("L").get<std::size_t>();
    e.params.gamma = parse_complex(item.at("gamma"), "gamma");
    e.params.h = parse_complex(item.at("h"), "h");
    e.params.mu = parse_complex_list(item.at("mu"), "mu");
    e.point.lambda = parse_complex_list(item.at("lambda"), "lambda");
    e.z = parse_complex(item.at("Z"), "Z");
    e.crosscheck_discrepancy = item.at("crosscheck_discrepancy").get<double>();
    validate_point(e.params, e.point);
    out.push_back(std::move(e));
  }
  return out;
}

void save_golden(const std::string& path,
                 const std::vector<GoldenEntry>& entries) {
  ordered_json doc;
  doc["entries"] = ordered_json::array();
  for (const GoldenEntry& e : entries) {
    ordered_json item;
    item["L"] = e.params.L;
    item["gamma"] = complex_to_json(e.params.gamma);
    item["h"] = complex_to_json(e.params.h);
    item["mu"] = complex_list_to_json(e.params.mu);
    item["lambda"] = complex_list_to_json(e.point.lambda);
    item["Z"] = complex_to_json(e.z);
    item["crosscheck_discrepancy"] = e.crosscheck_discrepancy;
    doc["entries"].push_back(std::move(item));
  }
  write_text_file(path, doc.dump(2) + "\n");
}

std::optional<GoldenEntry> find_golden(const std::vector<GoldenEntry>& entries,
                                       const RunInput& input) {
  auto close = [](Cx a, Cx b) {
    return std::abs(a.real() - b.real()) <= 1e-12 &&
           std::abs(a.imag() - b.imag()) <= 1e-12;
  };
  for (const GoldenEntry& e : entries) {
    if (e.params.L != input.params.L) continue;
    if (!close(e.params.gamma, input.params.gamma)) continue;
    if (!close(e.params.h, input.params.h)) continue;
    bool same = true;
    for (std::size_t i = 0; i < e.params.L && same; ++i) {
      same = close(e.params.mu[i], input.params.mu[i]) &&
             close(e.point.lambda[i], input.point.lambda[i]);
    }
    if (same) return e;
  }
  return std::nullopt;
}

std::string polyrep_to_json(const PolyRep& poly, const std::string& config_hash,
                            double node_radius) {
  const std::vector<std::size_t> shape = poly.shape();
  const std::vector<Cx>& flat = poly.coeffs();

  // nest the row-major tensor, one level per variable, [re, im] leaves in
  // ascending powers
  std::size_t cursor = 0;
  std::function<ordered_json(std::size_t)> nest =
      [&](std::size_t axis) -> ordered_json {
    ordered_json arr = ordered_json::array();
    for (std::size_t k = 0; k < shape[axis]; ++k) {
      if (axis + 1 == shape.size()) {
        arr.push_back(complex_to_json(flat[cursor++]));
      } else {
        arr.push_back(nest(axis + 1));
      }
    }
    return arr;
  };

  ordered_json doc;
  doc["config_hash"] = config_hash;
  doc["L"] = poly.nvars();
  doc["degree"] = 2 * poly.nvars();
  doc["node_radius"] = node_radius;
  doc["coeffs"] = nest(0);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace sixv
