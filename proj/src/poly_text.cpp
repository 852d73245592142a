#include <cctype>
#include <string>

#include "stabcv/error.hpp"
#include "stabcv/polynomial.hpp"

namespace stabcv {

std::string canonical_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.canonical_terms()) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'y' + std::to_string(i);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += '-' + mono;
    } else {
      out += c.get_str() + '*' + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : s_(text), nvars_(nvars), out_(nvars) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = take() == '-';
    term(negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_ws();
      bool neg = op == '-';
      if (!at_end() && peek() == '-') {
        take();
        neg = !neg;
      }
      term(neg);
    }
    return std::move(out_);
  }

 private:
  void term(bool negate) {
    Integer coeff = 1;
    ExponentVector e(nvars_);
    factor(coeff, e);
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
      factor(coeff, e);
    }
    out_.accumulate(e, negate ? Integer(-coeff) : coeff);
  }

  void factor(Integer& coeff, ExponentVector& e) {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= Integer(digits());
      return;
    }
    if (peek() != 'y') fail("expected a coefficient or a variable");
    take();
    const std::string idx = digits();
    const std::size_t var = std::stoul(idx);
    if (var >= nvars_) fail("variable y" + idx + " outside the ring");
    std::int64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      take();
      skip_ws();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        take();
        neg = true;
      }
      power = std::stoll(digits());
      if (neg) power = -power;
    }
    e[var] += power;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  Polynomial out_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  return Parser(text, nvars).parse();
}

}  // namespace stabcv
