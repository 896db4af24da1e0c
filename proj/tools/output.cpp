#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace telegraph::cli {

json to_json(const Table& table) {
  return json{{"columns", table.columns}, {"rows", table.rows}};
}

json to_json(std::span<const Atom> atoms) {
  json out = json::array();
  for (const Atom& a : atoms) out.push_back({{"location", a.location}, {"mass", a.mass}});
  return out;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  if (n == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = lo + (hi - lo) * j / (n - 1);
  out.back() = hi;
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(const std::string& path, const json& manifest, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "# manifest " << manifest.dump() << "\r\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << csv_field(table.columns[c]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << "\r\n";
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

json read_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::string tag = "# manifest ";
  json doc;
  try {
    if (text.rfind(tag, 0) == 0) {
      const auto end = text.find_first_of("\r\n");
      return json::parse(text.substr(tag.size(), end - tag.size()));
    }
    doc = json::parse(text);
  } catch (const json::parse_error&) {
    throw std::invalid_argument(path + " holds no readable manifest");
  }
  if (!doc.contains("manifest")) throw std::invalid_argument(path + " has no manifest");
  return doc.at("manifest");
}

}  // namespace telegraph::cli
