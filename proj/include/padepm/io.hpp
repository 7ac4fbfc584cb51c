#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "padepm/types.hpp"

namespace padepm::io {

/// Parses a coefficient list: either a JSON array of [re, im] pairs or plain
/// text with one "re im" pair per line. Blank lines and '#' comments are
/// skipped in the text form. Throws InvalidArgument on malformed input.
Coeffs parse_coefficients(const std::string& text);
Coeffs read_coefficients(const std::string& path);

/// JSON array of [re, im] pairs.
std::string format_coefficients(const Coeffs& c);
void write_coefficients(const std::string& path, const Coeffs& c);

nlohmann::json complex_to_json(Complex z);
nlohmann::json complex_list_to_json(const std::vector<Complex>& zs);

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace padepm::io
