#include "koszul/ideal_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::uint64_t> to_unsigned(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

ExponentVector::value_type exponent_value(const Token& tok, std::size_t line) {
  auto v = to_unsigned(tok.text);
  if (!v) throw ParseError("expected a non-negative integer, got '" + std::string(tok.text) + "'", line, tok.column);
  if (*v > std::numeric_limits<ExponentVector::value_type>::max()) {
    throw ParseError("exponent too large", line, tok.column);
  }
  return static_cast<ExponentVector::value_type>(*v);
}

}  // namespace

ExponentVector parse_monomial(std::string_view expr, std::size_t num_vars, std::size_t line,
                              std::size_t column_offset) {
  ExponentVector m(num_vars);
  if (expr == "1") return m;

  std::size_t pos = 0;
  auto fail = [&](const std::string& msg, std::size_t at) -> ParseError {
    return ParseError(msg, line, column_offset + at + 1);
  };
  while (true) {
    if (pos >= expr.size() || expr[pos] != 'x') throw fail("expected 'x<k>'", pos);
    std::size_t var_start = ++pos;
    while (pos < expr.size() && expr[pos] >= '0' && expr[pos] <= '9') ++pos;
    auto idx = to_unsigned(expr.substr(var_start, pos - var_start));
    if (!idx) throw fail("expected a variable index after 'x'", var_start);
    if (*idx < 1 || *idx > num_vars) {
      throw fail("variable index " + std::to_string(*idx) + " outside [1.." + std::to_string(num_vars) + "]",
                 var_start);
    }
    std::uint64_t exponent = 1;
    if (pos < expr.size() && expr[pos] == '^') {
      std::size_t exp_start = ++pos;
      while (pos < expr.size() && expr[pos] >= '0' && expr[pos] <= '9') ++pos;
      auto e = to_unsigned(expr.substr(exp_start, pos - exp_start));
      if (!e) throw fail("expected an exponent after '^'", exp_start);
      exponent = *e;
    }
    std::uint64_t total = std::uint64_t{m[*idx - 1]} + exponent;
    if (total > std::numeric_limits<ExponentVector::value_type>::max()) {
      throw fail("exponent too large", var_start);
    }
    m[*idx - 1] = static_cast<ExponentVector::value_type>(total);
    if (pos == expr.size()) break;
    if (expr[pos] != '*') throw fail("expected '*' between factors", pos);
    ++pos;
  }
  return m;
}

MonomialIdeal parse_ideal(std::istream& in) {
  std::optional<std::size_t> num_vars;
  std::vector<ExponentVector> gens;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    const Token& head = toks.front();
    if (head.text == "ring") {
      if (num_vars) throw ParseError("duplicate ring declaration", line_no, head.column);
      if (toks.size() != 2) throw ParseError("expected 'ring <n>'", line_no, head.column);
      auto n = to_unsigned(toks[1].text);
      if (!n || *n == 0) throw ParseError("ring size must be a positive integer", line_no, toks[1].column);
      num_vars = static_cast<std::size_t>(*n);
    } else if (head.text == "gen" || head.text == "mon") {
      if (!num_vars) throw ParseError("missing ring declaration before generators", line_no, head.column);
      if (head.text == "gen") {
        if (toks.size() != *num_vars + 1) {
          std::size_t col = toks.size() > *num_vars + 1 ? toks[*num_vars + 1].column : head.column;
          throw ParseError("expected " + std::to_string(*num_vars) + " exponents, got " +
                               std::to_string(toks.size() - 1),
                           line_no, col);
        }
        ExponentVector g(*num_vars);
        for (std::size_t i = 0; i < *num_vars; ++i) g[i] = exponent_value(toks[i + 1], line_no);
        gens.push_back(std::move(g));
      } else {
        if (toks.size() != 2) throw ParseError("expected 'mon <expr>'", line_no, head.column);
        gens.push_back(parse_monomial(toks[1].text, *num_vars, line_no, toks[1].column - 1));
      }
    } else {
      throw ParseError("unknown directive '" + std::string(head.text) + "'", line_no, head.column);
    }
  }
  if (!num_vars) throw ParseError("missing ring declaration", line_no + 1, 1);
  return minimalize(*num_vars, std::move(gens));
}

MonomialIdeal parse_ideal_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in);
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "ring " << ideal.num_vars() << '\n';
  for (const auto& g : ideal.generators()) {
    out << "gen";
    for (auto e : g) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

std::string format_monomial(const ExponentVector& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace koszul
