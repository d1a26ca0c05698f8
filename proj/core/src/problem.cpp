#include "reembed/problem.hpp"

#include "reembed/errors.hpp"
#include "reembed/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <fstream>
#include <sstream>

namespace reembed {

namespace {

struct Piece {
  std::string_view text;
  std::size_t offset;  // of text[0] in the whole input
};

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
  throw ParseError(what + " at position " + std::to_string(pos), pos);
}

Piece trim(Piece p) {
  std::size_t b = 0;
  while (b < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
  std::size_t e = p.text.size();
  while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
  return {p.text.substr(b, e - b), p.offset + b};
}

/// Splits on `sep` at bracket depth zero.
std::vector<Piece> split_top(Piece p, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.text.size(); ++i) {
    const char c = p.text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) fail("unbalanced bracket", p.offset + i);
    if (c == sep && depth == 0) {
      out.push_back(trim({p.text.substr(start, i - start), p.offset + start}));
      start = i + 1;
    }
  }
  if (depth != 0) fail("unbalanced bracket", p.offset + p.text.size());
  out.push_back(trim({p.text.substr(start), p.offset + start}));
  return out;
}

/// "[ a, b, c ]" -> pieces a, b, c (an empty list gives no pieces).
std::vector<Piece> bracket_list(Piece p) {
  p = trim(p);
  if (p.text.size() < 2 || p.text.front() != '[' || p.text.back() != ']') fail("expected [ ... ]", p.offset);
  Piece inner = trim({p.text.substr(1, p.text.size() - 2), p.offset + 1});
  if (inner.text.empty()) return {};
  auto items = split_top(inner, ',');
  for (const auto& it : items) {
    if (it.text.empty()) fail("empty list entry", it.offset);
  }
  return items;
}

Polynomial parse_at(Piece p, const GradedRing& ring) {
  try {
    return parse_polynomial(p.text, ring);
  } catch (const ParseError& e) {
    const std::size_t pos = p.offset + e.position();
    std::string msg = e.what();
    const auto at = msg.rfind(" at position ");
    if (at != std::string::npos) msg = msg.substr(0, at);
    fail(msg, pos);
  }
}

std::vector<Polynomial> poly_list(Piece p, const GradedRing& ring) {
  std::vector<Polynomial> out;
  for (const auto& it : bracket_list(p)) out.push_back(parse_at(it, ring));
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

/// "name rest" -> (name, rest).
std::pair<Piece, Piece> head_word(Piece p) {
  std::size_t i = 0;
  while (i < p.text.size() && (std::isalnum(static_cast<unsigned char>(p.text[i])) || p.text[i] == '_')) ++i;
  return {{p.text.substr(0, i), p.offset}, trim({p.text.substr(i), p.offset + i})};
}

PolyMatrix parse_matrix_body(Piece body, const GradedRing& ring) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& r : bracket_list(body)) {
    rows.push_back(poly_list(r, ring));
    if (rows.back().size() != rows.front().size()) fail("matrix rows have different lengths", r.offset);
  }
  return PolyMatrix(rows);
}

std::vector<Piece> statements(std::string& buffer) {
  // Blank out comments in place so offsets stay valid.
  bool comment = false;
  for (auto& c : buffer) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (comment) c = ' ';
  }
  std::vector<Piece> out;
  const std::string_view all(buffer);
  std::size_t start = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != ';') continue;
    out.push_back(trim({all.substr(start, i - start), start}));
    start = i + 1;
  }
  const Piece tail = trim({all.substr(start), start});
  if (!tail.text.empty()) fail("missing ';'", tail.offset + tail.text.size());
  return out;
}

Rational parse_rational_at(Piece p) {
  std::string s(p.text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
          s.end());
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = i < s.size();
  bool slash = false;
  for (; i < s.size() && ok; ++i) {
    if (s[i] == '/' && !slash && i + 1 < s.size()) {
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      ok = false;
    }
  }
  if (!ok) fail("expected a rational number", p.offset);
  if (s[0] == '+') s.erase(0, 1);
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    fail("invalid rational number", p.offset);
  }
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  std::string buffer(text);
  const auto stmts = statements(buffer);
  ProblemFile out;
  std::vector<std::string> names;
  std::optional<std::vector<std::int64_t>> weights;
  std::size_t ring_pos = 0;
  bool have_ring = false;
  for (const auto& s : stmts) {
    if (s.text.empty()) continue;
    auto [kw, body] = head_word(s);
    if (kw.text == "ring") {
      if (have_ring) fail("duplicate ring declaration", kw.offset);
      if (body.text.empty() || body.text[0] != 'Q') fail("expected coefficient field Q", body.offset);
      for (const auto& it : bracket_list(trim({body.text.substr(1), body.offset + 1}))) {
        if (!is_identifier(it.text)) fail("invalid indeterminate name", it.offset);
        names.emplace_back(it.text);
      }
      have_ring = true;
      ring_pos = kw.offset;
    } else if (kw.text == "grading") {
      if (weights) fail("duplicate grading", kw.offset);
      weights.emplace();
      for (const auto& it : bracket_list(body)) {
        const Rational w = parse_rational_at(it);
        if (!w.is_integer()) fail("weights must be integers", it.offset);
        if (w.sign() < 0) fail("weights must be non-negative", it.offset);
        weights->push_back(w.numerator().get_si());
      }
    }
  }
  if (!have_ring) fail("missing ring declaration", 0);
  if (!weights) weights = std::vector<std::int64_t>(names.size(), 1);
  if (weights->size() != names.size()) fail("grading length does not match the ring", ring_pos);
  try {
    out.ring = GradedRing(names, *weights);
  } catch (const std::exception& e) {
    fail(e.what(), ring_pos);
  }
  bool have_ideal = false;
  for (const auto& s : stmts) {
    if (s.text.empty()) continue;
    auto [kw, body] = head_word(s);
    if (kw.text == "ring" || kw.text == "grading") continue;
    if (kw.text == "ideal") {
      if (have_ideal) fail("duplicate ideal", kw.offset);
      out.ideal = poly_list(body, out.ring);
      have_ideal = true;
    } else if (kw.text == "point") {
      std::vector<Rational> pt;
      for (const auto& it : bracket_list(body)) pt.push_back(parse_rational_at(it));
      out.points.push_back(std::move(pt));
    } else if (kw.text == "matrix" || kw.text == "tuple") {
      auto [name, rest] = head_word(body);
      if (!is_identifier(name.text)) fail("expected a name", name.offset);
      if (kw.text == "matrix") {
        out.matrices[std::string(name.text)] = parse_matrix_body(rest, out.ring);
      } else {
        out.tuples[std::string(name.text)] = poly_list(rest, out.ring);
      }
    } else if (kw.text == "option") {
      auto [name, rest] = head_word(body);
      if (!is_identifier(name.text) || rest.text.empty()) fail("expected: option <name> <value>", kw.offset);
      out.options[std::string(name.text)] = std::string(rest.text);
    } else {
      fail("unknown statement '" + std::string(kw.text) + "'", kw.offset);
    }
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::map<std::string, PolyMatrix> parse_matrices(std::string_view text, const GradedRing& ring) {
  std::string buffer(text);
  std::map<std::string, PolyMatrix> out;
  for (const auto& s : statements(buffer)) {
    if (s.text.empty()) continue;
    auto [kw, body] = head_word(s);
    if (kw.text == "ring" || kw.text == "grading") continue;
    if (kw.text != "matrix") fail("expected a matrix statement", kw.offset);
    auto [name, rest] = head_word(body);
    if (!is_identifier(name.text)) fail("expected a name", name.offset);
    out[std::string(name.text)] = parse_matrix_body(rest, ring);
  }
  return out;
}

std::vector<std::size_t> parse_indeterminates(std::string_view text, const GradedRing& ring) {
  std::vector<std::size_t> out;
  const Piece all = trim({text, 0});
  if (all.text.empty()) return out;
  for (const auto& it : split_top(all, ',')) {
    auto idx = ring.index_of(std::string(it.text));
    if (!idx) fail("unknown indeterminate '" + std::string(it.text) + "'", it.offset);
    out.push_back(*idx);
  }
  return out;
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  const Piece all = trim({text, 0});
  if (all.text.empty()) return out;
  for (const auto& it : split_top(all, ',')) out.push_back(parse_rational_at(it));
  return out;
}

}  // namespace reembed
