#include "polyhull/poly_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace polyhull {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> toks;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string w;
    while (ls >> w) toks.push_back({w, no});
  }
  return toks;
}

std::size_t parse_count(const Token& t) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(t.line, "expected a nonnegative integer, got '" + t.text + "'");
  try {
    return std::stoul(t.text);
  } catch (const std::exception&) {
    throw ParseError(t.line, "count out of range '" + t.text + "'");
  }
}

template <class S>
PolyData<S> parse(const std::vector<Token>& toks) {
  std::size_t pos = 0;
  auto next = [&](const char* what) -> const Token& {
    if (pos >= toks.size())
      throw ParseError(toks.empty() ? 1 : toks.back().line, std::string("unexpected end of file, expected ") + what);
    return toks[pos++];
  };
  const Token& kind = next("header");
  if (kind.text != "H" && kind.text != "V") throw ParseError(kind.line, "header must start with H or V");
  const std::size_t d = parse_count(next("dimension"));
  PolyData<S> out;
  out.is_h = kind.text == "H";
  out.h = HRep<S>(d);
  out.v = VRep<S>(d);
  std::vector<std::string> seen;
  while (pos < toks.size()) {
    const Token& name = next("section");
    Matrix<S>* target = nullptr;
    if (out.is_h && name.text == "INEQ") target = &out.h.inequalities;
    if (out.is_h && name.text == "EQ") target = &out.h.equations;
    if (!out.is_h && name.text == "PTS") target = &out.v.points;
    if (!out.is_h && name.text == "RAYS") target = &out.v.rays;
    if (!out.is_h && name.text == "LIN") target = &out.v.lineality;
    if (!target) throw ParseError(name.line, "unknown section '" + name.text + "'");
    for (const auto& s : seen)
      if (s == name.text) throw ParseError(name.line, "duplicate section '" + name.text + "'");
    seen.push_back(name.text);
    const std::size_t rows = parse_count(next("row count"));
    const Token& ct = next("column count");
    const std::size_t cols = parse_count(ct);
    if (cols != d + 1)
      throw ParseError(ct.line, "section " + name.text + " has " + std::to_string(cols) + " columns, expected " +
                                    std::to_string(d + 1));
    Matrix<S> m = Matrix<S>::with_cols(cols);
    Vector<S> row(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const Token& t = next("scalar");
        try {
          row[j] = parse_scalar<S>(t.text);
        } catch (const Error& e) {
          throw ParseError(t.line, e.what());
        }
      }
      const std::size_t line = toks[pos - 1].line;
      if (target == &out.v.points && row[0] != S(1)) throw ParseError(line, "points must have leading coordinate 1");
      if ((target == &out.v.rays || target == &out.v.lineality) && !row[0].is_zero())
        throw ParseError(line, "rays and lineality must have leading coordinate 0");
      m.append_row(row);
    }
    *target = std::move(m);
  }
  return out;
}

}  // namespace

AnyPolyData read_poly(std::istream& in) {
  std::vector<Token> toks = tokenize(in);
  bool puiseux = false;
  for (std::size_t i = 2; i < toks.size(); ++i) puiseux = puiseux || toks[i].text.find('t') != std::string::npos;
  if (puiseux) return parse<PuiseuxFraction>(toks);
  return parse<Rational>(toks);
}

AnyPolyData read_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_poly(in);
}

}  // namespace polyhull
