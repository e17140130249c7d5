#pragma once

// Code file formats.
//
// JSON:      {"n": 3, "r": 1, "words": ["111", "011", "100"]}
// Plaintext: first line "n R" (R may be "-"), then one bitstring per line.
//
// Bitstrings write coordinate 1 leftmost, so the first character is the
// least significant bit of the mask.

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "asymcover/cube.hpp"

namespace asymcover {

std::string to_bitstring(Codeword v, int n);
Codeword from_bitstring(std::string_view s, int n);

nlohmann::json code_to_json(const Code& code);
Code code_from_json(const nlohmann::json& j, std::ostream* diagnostics = nullptr);

std::string code_to_plaintext(const Code& code);
Code code_from_plaintext(std::string_view text, std::ostream* diagnostics = nullptr);

// Sniffs the format: a leading '{' means JSON.
Code parse_code(std::string_view text, std::ostream* diagnostics = nullptr);

Code load_code(const std::string& path, std::ostream* diagnostics = nullptr);
void save_code(const Code& code, const std::string& path);

// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace asymcover
