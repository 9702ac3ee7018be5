#include "polargap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include "json.hpp"

#include "polargap/errors.hpp"

namespace polargap::io {

std::string number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }

std::string sample_csv(const std::vector<profile::SampleRow>& rows) {
  std::string out = "x,r,y\n";
  for (const auto& row : rows) {
    out += number(row.x) + ',' + number(row.r) + ',' + number(row.y) + '\n';
  }
  return out;
}

std::string sample_json(const std::string& name, const std::vector<profile::SampleRow>& rows) {
  std::string out = "{\"density\": " + nlohmann::json(name).dump() + ", \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += "{\"x\": " + json_number(rows[i].x) + ", \"r\": " + json_number(rows[i].r) +
           ", \"y\": " + json_number(rows[i].y) + "}";
  }
  return out + "]}\n";
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot open " + path + " for writing");
  f << text;
}

}  // namespace polargap::io
