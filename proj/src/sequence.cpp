#include "boustro/sequence.hpp"

#include <cctype>
#include <sstream>

namespace boustro {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> whitespace_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Int parse_integer(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw ParseError("empty integer token");
  const bool negative = token.front() == '-';
  std::string_view digits = negative ? token.substr(1) : token;
  if (digits.empty()) throw ParseError("malformed integer '" + std::string(token) + "'");
  for (char ch : digits)
    if (ch < '0' || ch > '9')
      throw ParseError("malformed integer '" + std::string(token) + "'");
  // Strip leading zeros: the cpp_int string constructor would otherwise
  // read a leading 0 as an octal prefix.
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  Int value{std::string(digits)};
  if (negative) value = -value;
  return value;
}

Sequence parse_csv(std::string_view line) {
  line = trim(line);
  Sequence seq;
  for (std::string_view token : split(line, ',')) seq.push_back(parse_integer(token));
  return seq;
}

Sequence parse_bfile(std::string_view text) {
  Sequence seq;
  size_t index = 0;
  for (std::string_view raw : split(text, '\n')) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = whitespace_tokens(line);
    if (tokens.size() != 2)
      throw ParseError("malformed b-file line '" + std::string(line) + "'");
    if (parse_integer(tokens[0]) != Int(index))
      throw ParseError("b-file indices must start at 0 and increase by 1");
    seq.push_back(parse_integer(tokens[1]));
    ++index;
  }
  if (seq.empty()) throw ParseError("no terms in b-file input");
  return seq;
}

Sequence parse_sequence_text(const std::string& text) {
  std::string_view first_data;
  size_t data_lines = 0;
  for (std::string_view raw : split(text, '\n')) {
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (data_lines == 0) first_data = line;
    ++data_lines;
  }
  if (data_lines == 0) throw ParseError("empty sequence input");
  if (first_data.find(',') == std::string_view::npos &&
      whitespace_tokens(first_data).size() == 2)
    return parse_bfile(text);
  if (data_lines > 1) throw ParseError("csv input must be a single line");
  return parse_csv(first_data);
}

std::string to_csv(const Sequence& seq) {
  std::ostringstream out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ',';
    out << seq[i];
  }
  out << '\n';
  return out.str();
}

std::string to_bfile(const Sequence& seq) {
  std::ostringstream out;
  for (size_t i = 0; i < seq.size(); ++i) out << i << ' ' << seq[i] << '\n';
  return out.str();
}

}  // namespace boustro
