#include "flagwitt/parse.hpp"

#include <cctype>
#include <charconv>

namespace flagwitt {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_int(const std::string& tok) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got \"" + tok + "\"");
  return value;
}

}  // namespace

std::vector<SimpleType> parse_diagram_spec(const std::string& text) {
  if (text.empty()) throw ParseError("empty diagram spec");
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw ParseError("whitespace in diagram spec \"" + text + "\"");
  std::vector<SimpleType> out;
  for (const std::string& tok : split(text, 'x')) {
    // Uppercase 'X' also separates; letters A-G are never separators.
    for (const std::string& sub : split(tok, 'X')) {
      if (sub.size() < 2) throw ParseError("bad component \"" + sub + "\"");
      const char letter = static_cast<char>(
          std::toupper(static_cast<unsigned char>(sub[0])));
      if (letter < 'A' || letter > 'G')
        throw ParseError("unknown type letter \"" + sub.substr(0, 1) + "\"");
      const std::int64_t rank = parse_int(sub.substr(1));
      if (rank < 1 || rank > 64)
        throw ParseError("rank out of range in \"" + sub + "\"");
      out.push_back({static_cast<Letter>(letter), static_cast<int>(rank)});
    }
  }
  return out;
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  if (text.empty()) return out;
  for (const std::string& tok : split(text, ',')) {
    const std::int64_t v = parse_int(tok);
    if (v < 1) throw ParseError("vertex index must be positive, got \"" + tok + "\"");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<std::int64_t> parse_coeff_vector(const std::string& text, int n) {
  std::vector<std::int64_t> out;
  if (!text.empty())
    for (const std::string& tok : split(text, ',')) out.push_back(parse_int(tok));
  if (static_cast<int>(out.size()) != n)
    throw ParseError("coefficient vector has " + std::to_string(out.size()) +
                     " entries, diagram rank is " + std::to_string(n));
  return out;
}

}  // namespace flagwitt
