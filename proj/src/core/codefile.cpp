#include "codefile.hpp"

#include "error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rankmetric {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

unsigned parse_unsigned(const Line& line, const std::string& tok, const char* what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError(line.number, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

RankMetricCode parse_code(std::istream& in) {
  const auto lines = tokenize(in);
  std::size_t at = 0;
  auto next = [&](const char* expected) -> const Line& {
    if (at >= lines.size()) throw ParseError(lines.empty() ? 1 : lines.back().number, std::string("unexpected end of file, expected ") + expected);
    return lines[at++];
  };

  const Line& header = next("header");
  if (header.tokens != std::vector<std::string>{"rankcode", "v1"}) throw ParseError(header.number, "expected 'rankcode v1'");

  const Line& qline = next("field line");
  if (qline.tokens.size() < 3 || qline.tokens[0] != "q") throw ParseError(qline.number, "expected 'q <p> <e> [modulus]'");
  const unsigned p = parse_unsigned(qline, qline.tokens[1], "characteristic");
  const unsigned e = parse_unsigned(qline, qline.tokens[2], "exponent");
  std::vector<unsigned> modulus;
  for (std::size_t i = 3; i < qline.tokens.size(); ++i) modulus.push_back(parse_unsigned(qline, qline.tokens[i], "modulus coefficient"));
  FieldPtr field;
  try {
    field = modulus.empty() ? Field::make(p, e) : Field::make(p, e, modulus);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(qline.number, err.what());
  }

  const Line& shape = next("shape line");
  if (shape.tokens.size() != 4 || shape.tokens[0] != "n" || shape.tokens[2] != "m") throw ParseError(shape.number, "expected 'n <n> m <m>'");
  const std::size_t n = parse_unsigned(shape, shape.tokens[1], "n");
  const std::size_t m = parse_unsigned(shape, shape.tokens[3], "m");
  if (n < 1) throw ParseError(shape.number, "n must be at least 1");
  if (n > m) throw ParseError(shape.number, "n > m is not allowed; transpose the code");

  std::vector<Matrix> gens;
  while (at < lines.size()) {
    const Line& tag = lines[at++];
    if (tag.tokens != std::vector<std::string>{"matrix"}) throw ParseError(tag.number, "expected 'matrix'");
    Matrix x(field, n, m);
    for (std::size_t i = 0; i < n; ++i) {
      const Line& row = next("matrix row");
      if (row.tokens.size() != m) {
        throw ParseError(row.number, "expected " + std::to_string(m) + " entries, got " + std::to_string(row.tokens.size()));
      }
      for (std::size_t j = 0; j < m; ++j) {
        try {
          x.set(i, j, field->parse_element(row.tokens[j]));
        } catch (const Error& err) {
          throw ParseError(row.number, err.what());
        }
      }
    }
    gens.push_back(std::move(x));
  }
  return RankMetricCode::from_generators(field, n, m, gens);
}

RankMetricCode parse_code_string(const std::string& text) {
  std::istringstream in(text);
  return parse_code(in);
}

RankMetricCode parse_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::input, "cannot open " + path);
  return parse_code(in);
}

std::string print_code(const RankMetricCode& c, const std::vector<std::string>& comments) {
  const Field& f = *c.field();
  std::ostringstream out;
  out << "rankcode v1\n";
  out << "q " << f.p() << " " << f.e();
  for (auto coef : f.modulus()) out << " " << coef;
  out << "\n";
  out << "n " << c.n() << " m " << c.m() << "\n";
  for (const auto& line : comments) out << "# " << line << "\n";
  for (const auto& x : c.basis()) out << "matrix\n" << x.str();
  return out.str();
}

}  // namespace rankmetric
