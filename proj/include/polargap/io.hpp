#pragma once

#include <string>
#include <vector>

#include "polargap/profile.hpp"

namespace polargap::io {

/// Decimal with 17 significant digits; "nan" / "inf" for non-finite values.
std::string number(double v);

/// JSON number, or null when v is not finite.
std::string json_number(double v);

/// "x,r,y" header and one LF-terminated row per sample.
std::string sample_csv(const std::vector<profile::SampleRow>& rows);

/// {"density": name, "rows": [{"x":..,"r":..,"y":..}, ...]}.
std::string sample_json(const std::string& name, const std::vector<profile::SampleRow>& rows);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace polargap::io
