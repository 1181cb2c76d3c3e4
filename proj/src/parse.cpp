#include "injres/parse.hpp"

#include <cctype>

#include "injres/errors.hpp"

namespace injres {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string text) : text_(std::move(text)) {}

  QuadPoly parse_all() {
    QuadPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  QuadPoly expr() {
    QuadPoly acc;
    bool negate = accept('-');
    if (!negate) accept('+');
    acc = negate ? -term() : term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QuadPoly term() {
    QuadPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  QuadPoly factor() {
    QuadPoly base = primary();
    if (accept('^')) {
      long e = integer();
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  QuadPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QuadPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(text_.substr(pos_, digits_len()));
      pos_ += digits_len();
      // "a/b" is a rational constant only when the slash is glued to digits
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        mpz_class den(text_.substr(pos_, digits_len()));
        pos_ += digits_len();
        if (den == 0) fail("zero denominator");
        return QuadPoly(FieldElement(mpq_class(num, den)));
      }
      return QuadPoly(FieldElement(mpq_class(num)));
    }
    ++pos_;
    switch (c) {
      case 'X': return QuadPoly::X();
      case 'Y': return QuadPoly::Y();
      case 'Z': return QuadPoly::Z();
      case 'W': return QuadPoly::W();
      default: --pos_; fail("unknown symbol");
    }
  }

  size_t digits_len() const {
    size_t k = pos_;
    while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) ++k;
    return k - pos_;
  }

  std::string text_;
  size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

// Splits on `sep` at parenthesis depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::pair<QuadPoly, int> parse_denominator(const std::string& raw) {
  std::string s = trim(raw);
  // "(p)^e" with the whole base parenthesized carries an explicit exponent
  if (!s.empty() && s[0] == '(') {
    int depth = 0;
    size_t close = std::string::npos;
    for (size_t k = 0; k < s.size(); ++k) {
      if (s[k] == '(') ++depth;
      if (s[k] == ')' && --depth == 0) {
        close = k;
        break;
      }
    }
    std::string rest = close == std::string::npos ? "" : trim(s.substr(close + 1));
    if (!rest.empty() && rest[0] == '^') {
      std::string e = trim(rest.substr(1));
      bool neg = !e.empty() && e[0] == '-';
      if (neg) e = e.substr(1);
      if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent in \"" + s + "\"");
      int ex = std::stoi(e);
      return {parse_quad(s.substr(1, close - 1)), neg ? -ex : ex};
    }
  }
  return {parse_quad(s), 1};
}

}  // namespace

QuadPoly parse_quad(const std::string& text) { return PolyParser(text).parse_all(); }

BivarPoly parse_bivar(const std::string& text) {
  QuadPoly q = parse_quad(text);
  if (!q.free_of_xy()) throw ParseError("X or Y not allowed in \"" + text + "\"");
  return q.to_bivar();
}

FractionText parse_fraction(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("fraction must be enclosed in [ ]");
  s = s.substr(1, s.size() - 2);
  auto parts = split_top(s, ',');
  // the numerator separator is the first top-level '/' that is not glued to digits on both sides
  std::string& head = parts[0];
  size_t sep = std::string::npos;
  int depth = 0;
  for (size_t k = 0; k < head.size(); ++k) {
    char c = head[k];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != '/' || depth != 0) continue;
    bool glued = k > 0 && k + 1 < head.size() && std::isdigit(static_cast<unsigned char>(head[k - 1])) &&
                 std::isdigit(static_cast<unsigned char>(head[k + 1]));
    bool between_groups = k > 0 && head[k - 1] == ')' && k + 1 < head.size() && head[k + 1] == '(';
    if (!glued && !between_groups) {
      sep = k;
      break;
    }
  }
  if (sep == std::string::npos) throw ParseError("missing ' / ' between numerator and denominators");
  FractionText out;
  std::string num = trim(head.substr(0, sep));
  auto ratio = split_top(num, '/');
  if (ratio.size() == 2 && trim(ratio[0]).front() == '(' && trim(ratio[1]).front() == '(') {
    out.num = parse_quad(ratio[0]);
    out.num_den = parse_quad(ratio[1]);
  } else {
    out.num = parse_quad(num);
    out.num_den = QuadPoly(1);
  }
  out.denominators.push_back(parse_denominator(head.substr(sep + 1)));
  for (size_t k = 1; k < parts.size(); ++k) out.denominators.push_back(parse_denominator(parts[k]));
  return out;
}

}  // namespace injres
