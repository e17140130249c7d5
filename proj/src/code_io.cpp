#include "asymcover/code_io.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace asymcover {

namespace {

Code build(int n, std::optional<int> r, const std::vector<Codeword>& words, std::ostream* diagnostics) {
  Code code(n, words, r);
  if (diagnostics && code.size() != words.size())
    *diagnostics << "warning: " << (words.size() - code.size()) << " duplicate codeword(s) dropped\n";
  return code;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_bitstring(Codeword v, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((v >> i) & 1) s[i] = '1';
  return s;
}

Codeword from_bitstring(std::string_view s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw ParseError("bitstring '" + std::string(s) + "' has length " + std::to_string(s.size()) + ", expected " +
                     std::to_string(n));
  Codeword v = 0;
  for (int i = 0; i < n; ++i) {
    if (s[i] == '1')
      v |= Codeword{1} << i;
    else if (s[i] != '0')
      throw ParseError("bitstring '" + std::string(s) + "' contains a character outside {0,1}");
  }
  return v;
}

nlohmann::json code_to_json(const Code& code) {
  nlohmann::json j;
  j["n"] = code.n();
  j["r"] = code.radius() ? nlohmann::json(*code.radius()) : nlohmann::json(nullptr);
  auto& words = j["words"] = nlohmann::json::array();
  for (Codeword c : code) words.push_back(to_bitstring(c, code.n()));
  return j;
}

Code code_from_json(const nlohmann::json& j, std::ostream* diagnostics) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxDimension) throw ParseError("n outside [1, 62]");
    std::optional<int> r;
    if (j.contains("r") && !j["r"].is_null()) r = j["r"].get<int>();
    std::vector<Codeword> words;
    for (const auto& w : j.at("words")) words.push_back(from_bitstring(w.get<std::string>(), n));
    return build(n, r, words, diagnostics);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed code JSON: ") + e.what());
  }
}

std::string code_to_plaintext(const Code& code) {
  std::ostringstream out;
  out << code.n() << ' ';
  if (code.radius())
    out << *code.radius();
  else
    out << '-';
  out << '\n';
  for (Codeword c : code) out << to_bitstring(c, code.n()) << '\n';
  return out.str();
}

Code code_from_plaintext(std::string_view text, std::ostream* diagnostics) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty code file");
  std::istringstream header(line);
  int n = 0;
  std::string rtok;
  if (!(header >> n >> rtok)) throw ParseError("plaintext header must be 'n R'");
  if (n < 1 || n > kMaxDimension) throw ParseError("n outside [1, 62]");
  std::optional<int> r;
  if (rtok != "-") {
    try {
      r = std::stoi(rtok);
    } catch (const std::exception&) {
      throw ParseError("bad radius '" + rtok + "'");
    }
  }
  std::vector<Codeword> words;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    words.push_back(from_bitstring(t, n));
  }
  return build(n, r, words, diagnostics);
}

Code parse_code(std::string_view text, std::ostream* diagnostics) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return code_from_json(j, diagnostics);
  }
  return code_from_plaintext(t, diagnostics);
}

Code load_code(const std::string& path, std::ostream* diagnostics) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str(), diagnostics);
}

void save_code(const Code& code, const std::string& path) { write_file_atomic(path, code_to_json(code).dump(2) + "\n"); }

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace asymcover
