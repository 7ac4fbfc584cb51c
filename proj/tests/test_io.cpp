#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "padepm/errors.hpp"
#include "padepm/io.hpp"

using namespace padepm;

TEST_CASE("JSON coefficient files") {
  const auto c = io::parse_coefficients("[[1, 0], [0, 0], [1, -2.5]]");
  CHECK(c == Coeffs{1.0, 0.0, Complex(1.0, -2.5)});
  CHECK(io::parse_coefficients("  \n[1, 2.5]") == Coeffs{1.0, 2.5});

  CHECK_THROWS_AS(io::parse_coefficients("[[1, 0], [2]]"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("[[1, 0]"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("[]"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("[\"a\"]"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("{\"a\": 1}"), InvalidArgument);
}

TEST_CASE("text coefficient files") {
  const auto c = io::parse_coefficients("# header\n1 0\n\n0.5 -1  # trailing\n3\n");
  CHECK(c == Coeffs{1.0, Complex(0.5, -1.0), 3.0});
  CHECK_THROWS_AS(io::parse_coefficients("1 0\nabc\n"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("1 0 7\n"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("1 x\n"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients("# nothing\n\n"), InvalidArgument);
  CHECK_THROWS_AS(io::parse_coefficients(""), InvalidArgument);
}

TEST_CASE("round trip through a file") {
  const Coeffs c{Complex(0.1, 1.0 / 3.0), Complex(-2e-300, 7.0), 1e300};
  const auto json = io::format_coefficients(c);
  CHECK(io::parse_coefficients(json) == c);

  const auto path = std::filesystem::temp_directory_path() / "padepm_io_roundtrip.json";
  io::write_coefficients(path.string(), c);
  CHECK(io::read_coefficients(path.string()) == c);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(io::read_coefficients("/nonexistent/dir/file.json"), InvalidArgument);
  CHECK_THROWS_AS(io::write_text("/nonexistent/dir/out.json", "x"), InvalidArgument);
}

TEST_CASE("complex JSON helpers") {
  CHECK(io::complex_to_json(Complex(1.5, -2.0)).dump() == "[1.5,-2.0]");
  CHECK(io::complex_list_to_json({}).dump() == "[]");
  CHECK(io::complex_list_to_json({1.0, Complex(0, 1)}).dump() == "[[1.0,0.0],[0.0,1.0]]");
}
