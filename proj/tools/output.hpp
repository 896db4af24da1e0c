#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "telegraph/mixed_law.hpp"

namespace telegraph::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

json to_json(const Table& table);
json to_json(std::span<const Atom> atoms);

/// n points evenly spaced on [lo, hi] (lo alone when n == 1).
std::vector<double> linspace(double lo, double hi, int n);

/// %.17g; non-finite values as nan/inf/-inf.
std::string format_number(double v);

/// First line "# manifest <compact json>", then a header row and one row per
/// table row. Throws std::runtime_error when the file cannot be written.
void write_csv(const std::string& path, const json& manifest, const Table& table);

/// Manifest embedded in a previous output: the "manifest" member of a JSON
/// document or the first line of a CSV written by write_csv. Throws
/// std::invalid_argument when the file is missing or carries no manifest.
json read_manifest(const std::string& path);

}  // namespace telegraph::cli
