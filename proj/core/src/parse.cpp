#include "lefschetz/errors.hpp"
#include "lefschetz/lie.hpp"

#include <algorithm>
#include <cctype>

namespace lefschetz {

namespace {

struct RawTerm {
  Rational coefficient;
  std::vector<int> indices; // as written, 1-based
  bool bracketed = false;
  std::size_t position = 0;
};

struct RawEntry {
  bool zero = false;
  int repeat = 1;
  std::vector<RawTerm> terms;
  std::size_t position = 0;
};

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char *what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(msg, pos_); }

  /// Digits only; whitespace inside a token is not allowed.
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  int nat() {
    const std::string d = digits();
    if (d.size() > 6) fail("number too large");
    return std::stoi(d);
  }
  /// Lookahead at the raw character after the current token (no whitespace skip).
  char raw_peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

RawTerm parse_term(Cursor &cur) {
  RawTerm t;
  t.coefficient = 1;
  cur.skip_ws();
  t.position = cur.pos();
  if (cur.peek() == '[') {
    cur.accept('[');
    t.bracketed = true;
    t.indices.push_back(cur.nat());
    while (cur.accept(',')) t.indices.push_back(cur.nat());
    cur.expect(']', "']'");
    return t;
  }
  if (cur.peek() == 'e') {
    cur.accept('e');
  } else {
    const std::string lead = cur.digits();
    if (cur.peek() == '/' || cur.peek() == '*') {
      std::string rat = lead;
      if (cur.accept('/')) rat += "/" + cur.digits();
      const Rational c = Rational::parse(rat);
      if (c.is_zero()) cur.fail("zero coefficient");
      t.coefficient = c;
      cur.expect('*', "'*' after coefficient");
      if (cur.peek() == 'e') cur.accept('e');
    } else {
      for (char ch : lead) t.indices.push_back(ch - '0');
      return t;
    }
  }
  if (cur.peek() == '[') {
    cur.accept('[');
    t.bracketed = true;
    t.indices.push_back(cur.nat());
    while (cur.accept(',')) t.indices.push_back(cur.nat());
    cur.expect(']', "']'");
  } else {
    for (char ch : cur.digits()) t.indices.push_back(ch - '0');
  }
  return t;
}

std::vector<RawTerm> parse_sum(Cursor &cur) {
  std::vector<RawTerm> terms;
  bool negative = cur.accept('-');
  while (true) {
    RawTerm t = parse_term(cur);
    if (negative) t.coefficient = -t.coefficient;
    terms.push_back(std::move(t));
    if (cur.accept('+')) negative = false;
    else if (cur.accept('-')) negative = true;
    else break;
  }
  return terms;
}

bool zero_entry_follows(Cursor &cur) {
  if (cur.peek() != '0') return false;
  // "0" alone, "0^j", or "0" before a separator; anything else is a sum.
  Cursor probe = cur;
  probe.accept('0');
  const char next = probe.peek();
  return next == '\0' || next == ',' || next == ')' || next == '^';
}

/// Turns raw terms into a form of the given dimension and degree.
Form assemble(const std::vector<RawTerm> &terms, int dim, int degree) {
  Form f(dim, degree);
  for (const auto &t : terms) {
    if (!t.bracketed && dim > 9)
      throw SyntaxError("digit indices are ambiguous for dimension ≥ 10; use [i,j,...]", t.position);
    if (static_cast<int>(t.indices.size()) != degree)
      throw SyntaxError("term has " + std::to_string(t.indices.size()) + " indices, expected " +
                            std::to_string(degree),
                        t.position);
    for (int i : t.indices)
      if (i < 1 || i > dim)
        throw IndexOutOfRange("index " + std::to_string(i) + " out of range 1.." + std::to_string(dim) +
                              " at position " + std::to_string(t.position));
    std::vector<int> sorted = t.indices;
    int parity = 0;
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b) {
        if (sorted[a] == sorted[b]) throw SyntaxError("repeated index in a monomial", t.position);
        if (sorted[a] > sorted[b]) ++parity;
      }
    std::sort(sorted.begin(), sorted.end());
    const Rational c = (parity & 1) ? -t.coefficient : t.coefficient;
    f.add_term(MultiIndex::from_indices(sorted), c);
  }
  return f;
}

} // namespace

StructureEquations parse_structure_equations(std::string_view text, std::optional<int> dim) {
  Cursor cur(text);
  const bool paren = cur.accept('(');
  std::vector<RawEntry> entries;
  while (true) {
    RawEntry e;
    cur.skip_ws();
    e.position = cur.pos();
    if (zero_entry_follows(cur)) {
      cur.accept('0');
      e.zero = true;
      if (cur.accept('^')) {
        e.repeat = cur.nat();
        if (e.repeat < 1) cur.fail("run length must be positive");
      }
    } else {
      if (cur.at_end() || cur.peek() == ',' || cur.peek() == ')') cur.fail("empty entry");
      e.terms = parse_sum(cur);
    }
    entries.push_back(std::move(e));
    if (!cur.accept(',')) break;
  }
  if (paren) cur.expect(')', "')'");
  if (!cur.at_end()) cur.fail("unexpected trailing input");

  int count = 0;
  for (const auto &e : entries) count += e.repeat;
  if (count > kMaxDim) throw EntryCountMismatch("too many entries");
  const int m = dim.value_or(count);
  if (m != count)
    throw EntryCountMismatch("structure equations have " + std::to_string(count) + " entries but dimension is " +
                             std::to_string(m));

  StructureEquations s;
  s.dim = m;
  s.source_text = std::string(text);
  for (const auto &e : entries) {
    if (e.zero) {
      for (int r = 0; r < e.repeat; ++r) s.differentials.emplace_back(m, 2 <= m ? 2 : 0);
      continue;
    }
    s.differentials.push_back(assemble(e.terms, m, 2));
  }
  return s;
}

Form parse_form(std::string_view text, int dim, std::optional<int> degree) {
  Cursor cur(text);
  if (cur.at_end()) cur.fail("empty form");
  if (zero_entry_follows(cur)) {
    cur.accept('0');
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return Form(dim, degree.value_or(0));
  }
  auto terms = parse_sum(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  const int k = degree.value_or(static_cast<int>(terms.front().indices.size()));
  if (!degree)
    for (const auto &t : terms)
      if (static_cast<int>(t.indices.size()) != k)
        throw MixedDegree("terms of degree " + std::to_string(k) + " and " + std::to_string(t.indices.size()) +
                          " at position " + std::to_string(t.position));
  if (k > dim) throw MixedDegree("form degree exceeds dimension");
  return assemble(terms, dim, k);
}

std::string StructureEquations::str() const {
  std::string out;
  for (std::size_t i = 0; i < differentials.size(); ++i) {
    if (i) out += ",";
    out += differentials[i].sum_str();
  }
  return out;
}

} // namespace lefschetz
