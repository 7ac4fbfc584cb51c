#include "padepm/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "padepm/errors.hpp"

namespace padepm::io {

namespace {

Coeffs parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed coefficient JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidArgument("coefficient JSON must be an array");
  Coeffs c;
  for (const auto& item : doc) {
    if (item.is_number()) {
      c.emplace_back(item.get<double>(), 0.0);
    } else if (item.is_array() && item.size() == 2 && item[0].is_number() &&
               item[1].is_number()) {
      c.emplace_back(item[0].get<double>(), item[1].get<double>());
    } else {
      throw InvalidArgument("coefficient entries must be [re, im] pairs");
    }
  }
  return c;
}

Coeffs parse_lines(const std::string& text) {
  Coeffs c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double re = 0.0;
    if (!(ls >> re)) {
      ls.clear();
      std::string rest;
      if (ls >> rest) {
        throw InvalidArgument("bad coefficient on line " + std::to_string(lineno));
      }
      continue;
    }
    double im = 0.0;
    if (!(ls >> im)) {
      ls.clear();
      std::string rest;
      if (ls >> rest) {
        throw InvalidArgument("bad coefficient on line " + std::to_string(lineno));
      }
    } else if (std::string rest; ls >> rest) {
      throw InvalidArgument("trailing text on line " + std::to_string(lineno));
    }
    c.emplace_back(re, im);
  }
  return c;
}

}  // namespace

Coeffs parse_coefficients(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  Coeffs c = (first != std::string::npos && text[first] == '[')
                 ? parse_json(text)
                 : parse_lines(text);
  if (c.empty()) throw InvalidArgument("no coefficients found");
  for (const auto& z : c) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("coefficients must be finite");
    }
  }
  return c;
}

Coeffs read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open coefficient file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coefficients(ss.str());
}

std::string format_coefficients(const Coeffs& c) {
  nlohmann::json arr = complex_list_to_json(c);
  return arr.dump() + "\n";
}

void write_coefficients(const std::string& path, const Coeffs& c) {
  write_text(path, format_coefficients(c));
}

nlohmann::json complex_to_json(Complex z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json complex_list_to_json(const std::vector<Complex>& zs) {
  auto arr = nlohmann::json::array();
  for (const auto& z : zs) arr.push_back(complex_to_json(z));
  return arr;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write to " + path);
  out << text;
}

}  // namespace padepm::io
