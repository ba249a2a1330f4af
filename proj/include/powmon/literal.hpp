#pragma once

// Text syntax for elements and finite sets:
//   element  := INT | '(' ints? (';' ints?)? ')'
//   set      := '{' (element (',' element)*)? '}'
// A bare INT is an element of Z; a tuple lists free coordinates, then the
// torsion coordinates after ';'.

#include "powmon/ambient.hpp"
#include "powmon/errors.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace powmon::literal {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_integer() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+') && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  Integer integer() {
    if (!at_integer()) fail("expected an integer");
    std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits[0] == '+') digits.erase(0, 1);
    return Integer(digits);
  }

  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline GroupElement parse_element(Cursor& in, const SignaturePtr& sig) {
  const std::size_t start = in.position();
  std::vector<Integer> free, torsion;
  if (in.accept('(')) {
    auto list = [&](std::vector<Integer>& out) {
      if (!in.at_integer()) return;
      out.push_back(in.integer());
      while (in.accept(',')) out.push_back(in.integer());
    };
    list(free);
    if (in.accept(';')) list(torsion);
    in.expect(')');
  } else {
    free.push_back(in.integer());
  }
  if (free.size() != sig->free_rank || torsion.size() != sig->torsion_rank())
    throw ParseError("element has the wrong number of coordinates", start);
  return GroupElement::make(sig, std::move(free), std::move(torsion));
}

inline std::vector<GroupElement> parse_element_list(Cursor& in, const SignaturePtr& sig) {
  std::vector<GroupElement> out;
  in.expect('{');
  if (in.accept('}')) return out;
  do {
    out.push_back(parse_element(in, sig));
  } while (in.accept(','));
  in.expect('}');
  return out;
}

inline GroupElement parse_element(std::string_view text, const SignaturePtr& sig) {
  Cursor in(text);
  auto u = parse_element(in, sig);
  if (!in.at_end()) in.fail("trailing input");
  return u;
}

inline std::vector<GroupElement> parse_element_list(std::string_view text, const SignaturePtr& sig) {
  Cursor in(text);
  auto v = parse_element_list(in, sig);
  if (!in.at_end()) in.fail("trailing input");
  return v;
}

inline std::string format_elements(const std::vector<GroupElement>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += format_element(v[i]);
  }
  return s + "}";
}

}  // namespace powmon::literal
