#pragma once

// JSON file formats.
//
// Problem / enlargement:
//   {"slices": [{"length": "1"}, {"length": "1/2"}],
//    "agents": [{"name": "A", "densities": ["2", "0"]}, ...]}
// Division:
//   [{"agent": "A", "intervals": [["0", "3/2"], ...]}, ...]
//
// Rationals are strings "p/q", "p" or "2.5"; plain JSON integers are accepted
// too. Output always uses "p/q" strings.

#include "cake/division.hpp"

#include <filesystem>
#include <string>

namespace cake {

/// Thrown for malformed files; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Problem problem_from_json(std::string_view text);
std::string problem_to_json(const Problem& p);
Enlargement enlargement_from_json(std::string_view text);
Division division_from_json(const Problem& p, std::string_view text);
std::string division_to_json(const Problem& p, const Division& x);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace cake
