#pragma once

// Line-oriented text formats.
//
//   surface:  component orient=+ genus=1 boundary=[+a,-b]      (one per line)
//   tensor:   tensor dim=2 indices=[+i,-j]
//             1 2 = 3/4                                          (1-based)
//   tqft:     tqft dim=2 backend=rational
//             d 1 = 2
//             p 1 1 1 = 1/2
//
// Blank lines and lines starting with '#' are ignored. Omitted entries are
// zero. Parse failures raise ParseError with a 1-based line and column.

#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tqft2d/error.hpp"
#include "tqft2d/functor.hpp"
#include "tqft2d/scalar.hpp"
#include "tqft2d/surface.hpp"
#include "tqft2d/tensor.hpp"
#include "tqft2d/tqft_data.hpp"

namespace tqft2d {

namespace detail {

inline bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_label_char(c)) return false;
  return true;
}

// Whitespace-separated token with its 1-based column.
struct Token {
  std::string text;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k >= line.size()) break;
    std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    out.push_back({std::string(line.substr(start, k - start)), start + 1});
  }
  return out;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

inline bool skippable(const std::vector<Token>& tokens) {
  return tokens.empty() || tokens.front().text.starts_with('#');
}

// `key=value` attributes of a header line, each key at most once.
inline std::map<std::string, Token> attributes(const std::vector<Token>& tokens,
                                               std::size_t first, std::size_t line,
                                               const std::set<std::string>& allowed) {
  std::map<std::string, Token> out;
  for (std::size_t k = first; k < tokens.size(); ++k) {
    const auto& tok = tokens[k];
    auto eq = tok.text.find('=');
    if (eq == std::string::npos) throw ParseError(line, tok.column, "expected key=value, got '" + tok.text + "'");
    std::string key = tok.text.substr(0, eq);
    if (!allowed.count(key)) throw ParseError(line, tok.column, "unknown attribute '" + key + "'");
    if (out.count(key)) throw ParseError(line, tok.column, "attribute '" + key + "' given twice");
    out[key] = Token{tok.text.substr(eq + 1), tok.column + eq + 1};
  }
  for (const auto& key : allowed)
    if (!out.count(key))
      throw ParseError(line, tokens.empty() ? 1 : tokens.front().column, "missing attribute '" + key + "'");
  return out;
}

inline Orientation parse_sign(char c, std::size_t line, std::size_t column) {
  if (c == '+') return Orientation::Plus;
  if (c == '-') return Orientation::Minus;
  throw ParseError(line, column, std::string("expected '+' or '-', got '") + c + "'");
}

inline std::size_t parse_count(const Token& tok, std::size_t line, long min_value) {
  if (!all_digits(tok.text)) throw ParseError(line, tok.column, "expected a number, got '" + tok.text + "'");
  long v = std::stol(tok.text);
  if (v < min_value) throw ParseError(line, tok.column, "value " + tok.text + " out of range");
  return static_cast<std::size_t>(v);
}

// `[+a,-b]` -> list of (label, sign, column).
struct SignedLabel {
  std::string label;
  Orientation sign;
  std::size_t column;
};

inline std::vector<SignedLabel> parse_signed_list(const Token& tok, std::size_t line) {
  const std::string& s = tok.text;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(line, tok.column, "expected a bracketed list, got '" + s + "'");
  std::vector<SignedLabel> out;
  if (s.size() == 2) return out;
  std::size_t k = 1;
  while (k < s.size() - 1) {
    std::size_t end = s.find(',', k);
    if (end == std::string::npos || end > s.size() - 1) end = s.size() - 1;
    std::string item = s.substr(k, end - k);
    std::size_t col = tok.column + k;
    if (item.empty()) throw ParseError(line, col, "empty list item");
    Orientation sign = parse_sign(item[0], line, col);
    std::string label = item.substr(1);
    if (!is_label(label)) throw ParseError(line, col + 1, "invalid label '" + label + "'");
    out.push_back({label, sign, col});
    k = end + 1;
  }
  return out;
}

inline std::string signed_list(const std::vector<std::pair<std::string, Orientation>>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ',';
    out += to_char(items[k].second);
    out += items[k].first;
  }
  return out + "]";
}

}  // namespace detail

// ---- surfaces --------------------------------------------------------------

inline std::string format_surface(const Surface& s) {
  std::string out;
  for (const auto& c : s.components) {
    std::vector<std::pair<std::string, Orientation>> items;
    for (const auto& b : c.boundary) items.emplace_back(b.label, b.orientation);
    out += "component orient=";
    out += to_char(c.orientation);
    out += " genus=" + std::to_string(c.genus) + " boundary=" + detail::signed_list(items) + "\n";
  }
  return out;
}

inline Surface parse_surface(const std::string& text) {
  Surface s;
  std::map<std::string, std::size_t> first_seen;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    auto tokens = detail::tokenize(lines[ln]);
    if (detail::skippable(tokens)) continue;
    if (tokens.front().text != "component")
      throw ParseError(line, tokens.front().column, "expected 'component', got '" + tokens.front().text + "'");
    auto attrs = detail::attributes(tokens, 1, line, {"orient", "genus", "boundary"});
    const auto& orient = attrs["orient"];
    if (orient.text.size() != 1) throw ParseError(line, orient.column, "orientation must be '+' or '-'");
    ConnectedSurface c;
    c.orientation = detail::parse_sign(orient.text[0], line, orient.column);
    c.genus = static_cast<int>(detail::parse_count(attrs["genus"], line, 0));
    for (const auto& item : detail::parse_signed_list(attrs["boundary"], line)) {
      if (!first_seen.emplace(item.label, line).second)
        throw ParseError(line, item.column, "duplicate label " + item.label);
      c.boundary.push_back({item.label, item.sign});
    }
    s.components.push_back(std::move(c));
  }
  return s;
}

// ---- glue specs ------------------------------------------------------------

inline std::string format_glue_spec(const GlueSpec& spec) {
  std::string out;
  for (std::size_t k = 0; k < spec.pairs.size(); ++k) {
    if (k) out += ',';
    out += spec.pairs[k].first + ":" + spec.pairs[k].second;
  }
  return out;
}

// `a:b,c:d`; the empty string is the empty spec. Columns are 1-based offsets
// into `text`.
inline GlueSpec parse_glue_spec(const std::string& text) {
  GlueSpec spec;
  if (text.empty()) return spec;
  std::size_t k = 0;
  while (k <= text.size()) {
    std::size_t end = text.find(',', k);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(k, end - k);
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError(1, k + 1, "expected label:label, got '" + item + "'");
    std::string a = item.substr(0, colon), b = item.substr(colon + 1);
    if (!detail::is_label(a)) throw ParseError(1, k + 1, "invalid label '" + a + "'");
    if (!detail::is_label(b)) throw ParseError(1, k + colon + 2, "invalid label '" + b + "'");
    spec.pairs.emplace_back(a, b);
    k = end + 1;
  }
  return spec;
}

// ---- tensors ---------------------------------------------------------------

template <class S>
std::string format_tensor(const LabeledTensor<S>& t) {
  std::vector<std::pair<std::string, Orientation>> items;
  for (const auto& ix : t.indices()) items.emplace_back(ix.label, ix.sign);
  std::string out = "tensor dim=" + std::to_string(t.dim()) + " indices=" + detail::signed_list(items) + "\n";
  std::vector<std::size_t> multi(t.rank(), 0);
  std::size_t pos = 0;
  do {
    const S& v = t.entries()[pos++];
    if (scalar_traits<S>::is_zero(v)) continue;
    std::string line;
    for (std::size_t m : multi) line += std::to_string(m + 1) + " ";
    out += line + "= " + scalar_traits<S>::format(v) + "\n";
  } while (detail::next_multi(multi, t.dim()));
  return out;
}

namespace detail {

// `i j k = value` with each index in [1, dim]. Returns the 0-based multi-index.
template <class S>
std::vector<std::size_t> parse_entry(const std::vector<Token>& tokens, std::size_t first,
                                     std::size_t rank, std::size_t dim, std::size_t line,
                                     const std::string& raw, S& value) {
  if (tokens.size() < first + rank + 2 || tokens[first + rank].text != "=")
    throw ParseError(line, tokens.empty() ? 1 : tokens.front().column,
                     "expected " + std::to_string(rank) + " indices followed by '= <scalar>'");
  std::vector<std::size_t> multi;
  for (std::size_t k = 0; k < rank; ++k) {
    const auto& tok = tokens[first + k];
    std::size_t v = parse_count(tok, line, 1);
    if (v > dim) throw ParseError(line, tok.column, "index " + tok.text + " exceeds dimension " + std::to_string(dim));
    multi.push_back(v - 1);
  }
  const auto& scalar_tok = tokens[first + rank + 1];
  std::string scalar_text = raw.substr(scalar_tok.column - 1);
  try {
    value = scalar_traits<S>::parse(scalar_text);
  } catch (const InvalidArgument& e) {
    throw ParseError(line, scalar_tok.column, e.what());
  }
  return multi;
}

}  // namespace detail

template <class S>
LabeledTensor<S> parse_tensor(const std::string& text) {
  const auto lines = detail::split_lines(text);
  std::size_t ln = 0;
  std::vector<detail::Token> tokens;
  for (; ln < lines.size(); ++ln) {
    tokens = detail::tokenize(lines[ln]);
    if (!detail::skippable(tokens)) break;
  }
  if (ln == lines.size()) throw ParseError(ln + 1, 1, "missing tensor header");
  if (tokens.front().text != "tensor")
    throw ParseError(ln + 1, tokens.front().column, "expected 'tensor', got '" + tokens.front().text + "'");
  auto attrs = detail::attributes(tokens, 1, ln + 1, {"dim", "indices"});
  const std::size_t dim = detail::parse_count(attrs["dim"], ln + 1, 1);
  std::vector<SignedIndex> indices;
  std::set<std::string> labels;
  for (const auto& item : detail::parse_signed_list(attrs["indices"], ln + 1)) {
    if (!labels.insert(item.label).second) throw ParseError(ln + 1, item.column, "duplicate label " + item.label);
    indices.push_back({item.label, item.sign});
  }
  auto t = LabeledTensor<S>::zeros(dim, std::move(indices));
  std::set<std::size_t> filled;
  for (++ln; ln < lines.size(); ++ln) {
    tokens = detail::tokenize(lines[ln]);
    if (detail::skippable(tokens)) continue;
    S value;
    auto multi = detail::parse_entry(tokens, 0, t.rank(), dim, ln + 1, lines[ln], value);
    if (!filled.insert(t.offset(multi)).second) throw ParseError(ln + 1, 1, "entry given twice");
    t.at(multi) = value;
  }
  return t;
}

// ---- TQFT data -------------------------------------------------------------

using AnyTqftData = std::variant<TqftData<Rational>, TqftData<Complex>>;

template <class S>
std::string format_tqft(const TqftData<S>& data) {
  std::string out = "tqft dim=" + std::to_string(data.dim()) + " backend=" +
                    std::string(scalar_traits<S>::name) + "\n";
  const std::size_t n = data.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!scalar_traits<S>::is_zero(data.d(i)))
      out += "d " + std::to_string(i + 1) + " = " + scalar_traits<S>::format(data.d(i)) + "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!scalar_traits<S>::is_zero(data.p(i, j, k)))
          out += "p " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                 std::to_string(k + 1) + " = " + scalar_traits<S>::format(data.p(i, j, k)) + "\n";
  return out;
}

namespace detail {

template <class S>
TqftData<S> parse_tqft_body(const std::vector<std::string>& lines, std::size_t start, std::size_t dim) {
  std::vector<S> d(dim, scalar_traits<S>::zero());
  std::vector<S> p(dim * dim * dim, scalar_traits<S>::zero());
  std::set<std::size_t> d_seen;
  std::map<std::size_t, std::size_t> p_line;  // offset -> line
  for (std::size_t ln = start; ln < lines.size(); ++ln) {
    const std::size_t line = ln + 1;
    auto tokens = tokenize(lines[ln]);
    if (skippable(tokens)) continue;
    const auto& head = tokens.front();
    S value;
    if (head.text == "d") {
      auto multi = parse_entry(tokens, 1, 1, dim, line, lines[ln], value);
      if (!d_seen.insert(multi[0]).second) throw ParseError(line, head.column, "entry given twice");
      d[multi[0]] = value;
    } else if (head.text == "p") {
      auto multi = parse_entry(tokens, 1, 3, dim, line, lines[ln], value);
      std::size_t off = (multi[0] * dim + multi[1]) * dim + multi[2];
      if (!p_line.emplace(off, line).second) throw ParseError(line, head.column, "entry given twice");
      p[off] = value;
    } else {
      throw ParseError(line, head.column, "expected 'd' or 'p', got '" + head.text + "'");
    }
  }
  // Every supplied p entry must agree with all its index permutations.
  for (const auto& [off, line] : p_line) {
    std::size_t i = off / (dim * dim), j = (off / dim) % dim, k = off % dim;
    const std::size_t perms[6][3] = {{i, j, k}, {j, i, k}, {i, k, j}, {k, j, i}, {j, k, i}, {k, i, j}};
    for (const auto& q : perms) {
      std::size_t other = (q[0] * dim + q[1]) * dim + q[2];
      if (p[other] != p[off])
        throw ParseError(line, 1,
                         "p is not symmetric: entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "," + std::to_string(k + 1) + ") differs from (" +
                             std::to_string(q[0] + 1) + "," + std::to_string(q[1] + 1) + "," +
                             std::to_string(q[2] + 1) + ")");
    }
  }
  return TqftData<S>(dim, std::move(d), std::move(p));
}

}  // namespace detail

inline AnyTqftData parse_tqft(const std::string& text) {
  const auto lines = detail::split_lines(text);
  std::size_t ln = 0;
  std::vector<detail::Token> tokens;
  for (; ln < lines.size(); ++ln) {
    tokens = detail::tokenize(lines[ln]);
    if (!detail::skippable(tokens)) break;
  }
  if (ln == lines.size()) throw ParseError(ln + 1, 1, "missing tqft header");
  if (tokens.front().text != "tqft")
    throw ParseError(ln + 1, tokens.front().column, "expected 'tqft', got '" + tokens.front().text + "'");
  auto attrs = detail::attributes(tokens, 1, ln + 1, {"dim", "backend"});
  const std::size_t dim = detail::parse_count(attrs["dim"], ln + 1, 1);
  const auto& backend = attrs["backend"];
  if (backend.text == "rational") return detail::parse_tqft_body<Rational>(lines, ln + 1, dim);
  if (backend.text == "complex") return detail::parse_tqft_body<Complex>(lines, ln + 1, dim);
  throw ParseError(ln + 1, backend.column, "backend must be 'rational' or 'complex'");
}

// ---- decompositions (report echo only) --------------------------------------

inline std::string format_decomposition(const PantsDecomposition& dec) {
  std::string out = "pants";
  for (const auto& pt : dec.pants)
    out += " [" + pt.legs[0] + "," + pt.legs[1] + "," + pt.legs[2] + "]";
  return out;
}

}  // namespace tqft2d
