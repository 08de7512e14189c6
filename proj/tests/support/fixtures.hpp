#pragma once

#include <composita/rational.hpp>

#include <string>
#include <vector>

namespace testsupport {

using composita::Rational;

// Committed sequence/triangle data lives in tests/data/, one file per
// fixture.  Each file is the exact output of its generator below (header
// comments included), so a test can both pin the committed values and
// prove they came from the oracle code: generate_fixture(name) must equal
// the file byte for byte.  fixture_gen rewrites the files.
struct Fixture {
  const char* filename;
  std::string (*generate)();
};

const std::vector<Fixture>& all_fixtures();

// generator output for the given filename (throws invalid_parameter on
// unknown names)
std::string generate_fixture(const std::string& filename);

// absolute path of a committed fixture
std::string data_path(const std::string& filename);

std::string read_file(const std::string& path);

// strips '#' comment lines, splits the rest on whitespace, one vector per
// nonempty line
std::vector<std::vector<Rational>> parse_fixture_rows(const std::string& text);

// same, flattened (for plain sequences)
std::vector<Rational> parse_fixture_values(const std::string& text);

}  // namespace testsupport
