#include "kv/parse.hpp"

#include <cctype>

#include "kv/error.hpp"

namespace kv {

namespace {

constexpr int kMaxExponent = 1 << 20;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) { skip_space(); }

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    skip_space();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  long long integer() {
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (1LL << 60)) {
        pos_ = start;
        fail("integer literal too large");
      }
      ++pos_;
    }
    skip_space();
    return negative ? -v : v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int variable_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    default: return -1;
  }
}

// term := coeff? ('*'? var ('^' nat)?)*, at least one factor
Term parse_term(Cursor& cur) {
  Fp coeff = Fp::one();
  Monomial mono = Monomial::one();
  bool saw_factor = false;

  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    coeff = Fp::from_int(cur.integer());
    saw_factor = true;
  }
  for (;;) {
    if (saw_factor && cur.peek() == '*') {
      cur.accept('*');
      if (variable_index(cur.peek()) < 0 &&
          !std::isdigit(static_cast<unsigned char>(cur.peek())))
        cur.fail("expected a variable or integer after '*'");
    }
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      // products of integer factors, e.g. "2*3*x"
      coeff *= Fp::from_int(cur.integer());
      saw_factor = true;
      continue;
    }
    int v = variable_index(cur.peek());
    if (v < 0) break;
    cur.accept(cur.peek());
    int exp = 1;
    if (cur.accept('^')) {
      long long e = cur.integer();
      if (e < 0 || e > kMaxExponent) cur.fail("exponent out of range");
      exp = static_cast<int>(e);
    }
    mono.e[static_cast<std::size_t>(v)] += exp;
    saw_factor = true;
  }
  if (!saw_factor) cur.fail("expected a term");
  return {coeff, mono};
}

Polynomial parse_expr(Cursor& cur) {
  std::vector<Term> terms;
  bool negate = false;
  if (cur.accept('-'))
    negate = true;
  else
    cur.accept('+');
  for (;;) {
    Term t = parse_term(cur);
    if (negate) t.coeff = -t.coeff;
    terms.push_back(t);
    if (cur.accept('+')) {
      negate = false;
    } else if (cur.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty polynomial");
  Polynomial f = parse_expr(cur);
  if (!cur.done()) cur.fail("unexpected character");
  return f;
}

std::vector<Polynomial> parse_generator_list(std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0, offset = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    try {
      out.push_back(parse_polynomial(piece));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(
                           0, std::string(e.what()).rfind(" (at position")),
                       start + e.position());
    }
    start = end + 1;
  };
  for (offset = 0; offset < text.size(); ++offset)
    if (text[offset] == ',') flush(offset);
  flush(text.size());
  return out;
}

}  // namespace kv
