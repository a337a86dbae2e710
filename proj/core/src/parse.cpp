#include <cctype>
#include <optional>
#include <sstream>

#include "ovdkit/ratfun.hpp"

namespace ovdkit {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit((unsigned char)c)) {
      while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
      out.push_back({Tok::Number, s.substr(start, i - start), start});
    } else if (std::isalpha((unsigned char)c) || c == '_') {
      while (i < s.size() &&
             (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({k, s.substr(start, 1), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : toks_(lex(text)), vars_(vars) {
    for (const auto& v : vars)
      if (v == "i") throw InputError("variable name 'i' is reserved");
  }

  RatFun parse_ratfun() {
    int n = (int)vars_.size();
    Poly num = parse_expr();
    if (peek().kind == Tok::Slash) {
      next();
      expect(Tok::LParen, "expected '(' after '/'");
      Poly den = parse_expr();
      expect(Tok::RParen, "expected ')'");
      expect(Tok::End, "trailing input after rational function");
      return RatFun(std::move(num), std::move(den));
    }
    expect(Tok::End, "trailing input after polynomial");
    return RatFun(std::move(num), Poly::constant(n, GaussRat(1)));
  }

  Poly parse_poly_only() {
    Poly p = parse_expr();
    expect(Tok::End, "trailing input after polynomial");
    return p;
  }

 private:
  const Token& peek(int k = 0) const {
    std::size_t j = pos_ + k;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  const Token& next() { return toks_[pos_++]; }
  void expect(Tok k, const char* msg) {
    if (peek().kind != k) throw SyntaxError(msg, peek().offset);
    next();
  }

  Poly parse_expr() {
    int n = (int)vars_.size();
    bool neg = false;
    if (peek().kind == Tok::Plus) {
      next();
    } else if (peek().kind == Tok::Minus) {
      next();
      neg = true;
    }
    Poly acc = parse_term();
    if (neg) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Poly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    (void)n;
    return acc;
  }

  // term ::= coeff? factor* ; '*' optional between factors
  Poly parse_term() {
    int n = (int)vars_.size();
    GaussRat coeff(1);
    bool have_coeff = false;
    if (peek().kind == Tok::Number || is_imag_unit(peek()) ||
        peek().kind == Tok::LParen) {
      if (peek().kind == Tok::LParen) {
        next();
        coeff = parse_crat();
        expect(Tok::RParen, "expected ')' after complex constant");
      } else {
        coeff = parse_crat();
      }
      have_coeff = true;
    }
    Poly p = Poly::constant(n, coeff);
    bool have_factor = false;
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        continue;
      }
      if (peek().kind != Tok::Ident || is_imag_unit(peek())) break;
      p = p * parse_factor();
      have_factor = true;
    }
    if (!have_coeff && !have_factor)
      throw SyntaxError("expected term", peek().offset);
    return p;
  }

  Poly parse_factor() {
    const Token& t = next();
    int axis = -1;
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (vars_[k] == t.text) axis = (int)k + 1;
    if (axis < 0)
      throw UnknownVariable("unknown variable '" + t.text + "' at byte offset " +
                            std::to_string(t.offset));
    int e = 1;
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number)
        throw SyntaxError("expected exponent after '^'", peek().offset);
      e = parse_uint(next());
      if (e > kMaxVarDegree)
        throw DegreeOverflow("exponent exceeds per-variable degree cap");
    }
    Poly::Exponents ev(vars_.size(), 0);
    ev[axis - 1] = e;
    return Poly::monomial((int)vars_.size(), std::move(ev), GaussRat(1));
  }

  bool is_imag_unit(const Token& t) const {
    return t.kind == Tok::Ident && t.text == "i";
  }

  int parse_uint(const Token& t) {
    long v = 0;
    for (char c : t.text) {
      v = v * 10 + (c - '0');
      if (v > 1000000000L) throw SyntaxError("integer literal too large", t.offset);
    }
    return (int)v;
  }

  // rat ::= int ("/" uint)? ; the '/' is consumed only when followed by a
  // number, otherwise it belongs to the rational-function divider.
  BigRat parse_rat() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::Number)
      throw SyntaxError("expected number", peek().offset);
    const Token& numt = next();
    boost::multiprecision::cpp_int numer(numt.text);
    boost::multiprecision::cpp_int denom(1);
    if (peek().kind == Tok::Slash && peek(1).kind == Tok::Number) {
      next();
      const Token& dent = next();
      denom = boost::multiprecision::cpp_int(dent.text);
      if (denom == 0) throw SyntaxError("zero denominator in rational", dent.offset);
    }
    BigRat r(numer, denom);
    return neg ? BigRat(-r) : r;
  }

  // crat ::= rat | rat? "i" | rat ("+"|"-") rat? "i"
  GaussRat parse_crat() {
    if (is_imag_unit(peek())) {
      next();
      return GaussRat::I();
    }
    BigRat r1 = parse_rat();
    if (is_imag_unit(peek())) {
      next();
      return GaussRat(BigRat(0), r1);
    }
    if ((peek().kind == Tok::Plus || peek().kind == Tok::Minus) &&
        imag_part_ahead()) {
      bool minus = next().kind == Tok::Minus;
      BigRat r2(1);
      if (peek().kind == Tok::Number) r2 = parse_rat();
      expect(Tok::Ident, "expected 'i'");
      return GaussRat(r1, minus ? BigRat(-r2) : r2);
    }
    return GaussRat(r1);
  }

  // After a '+'/'-' inside a constant: does [NUMBER ('/' NUMBER)?]? 'i' follow?
  bool imag_part_ahead() const {
    int k = 1;
    if (peek(k).kind == Tok::Number) {
      ++k;
      if (peek(k).kind == Tok::Slash && peek(k + 1).kind == Tok::Number) k += 2;
    }
    return peek(k).kind == Tok::Ident && peek(k).text == "i";
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
};

// --- printing --------------------------------------------------------------

std::string rat_str(const BigRat& r) { return to_string(r); }

// Magnitude text of a coefficient plus the sign it carries. Mixed complex
// constants are parenthesized so they can prefix a monomial.
struct CoeffText {
  bool negative;
  std::string mag;  // "" means 1 (omitted before factors)
  bool is_unit_real;
};

CoeffText coeff_text(const GaussRat& c, bool has_factors) {
  CoeffText out{false, "", false};
  if (c.im == 0) {
    BigRat a = c.re;
    out.negative = a < 0;
    BigRat m = out.negative ? BigRat(-a) : a;
    if (m == 1 && has_factors) {
      out.mag = "";
      out.is_unit_real = true;
    } else {
      out.mag = rat_str(m);
    }
  } else if (c.re == 0) {
    BigRat b = c.im;
    out.negative = b < 0;
    BigRat m = out.negative ? BigRat(-b) : b;
    out.mag = (m == 1) ? "i" : rat_str(m) + " i";
  } else {
    std::string s = rat_str(c.re);
    BigRat b = c.im;
    if (b > 0) {
      s += b == 1 ? "+i" : "+" + rat_str(b) + "i";
    } else {
      BigRat m(-b);
      s += m == 1 ? "-i" : "-" + rat_str(m) + "i";
    }
    out.mag = "(" + s + ")";
  }
  return out;
}

}  // namespace

RatFun parse_ratfun(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse_ratfun();
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).parse_poly_only();
}

std::string to_string(const Poly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // lex-descending term order
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool has_factors = false;
    for (int x : e)
      if (x > 0) has_factors = true;
    CoeffText ct = coeff_text(c, has_factors);
    if (first) {
      if (ct.negative) os << "-";
      first = false;
    } else {
      os << (ct.negative ? " - " : " + ");
    }
    bool need_space = false;
    if (!ct.mag.empty()) {
      os << ct.mag;
      need_space = true;
    }
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (need_space) os << " ";
      os << vars[k];
      if (e[k] > 1) os << "^" << e[k];
      need_space = true;
    }
  }
  return os.str();
}

std::string to_string(const RatFun& f, const std::vector<std::string>& vars) {
  if (f.is_polynomial()) return to_string(f.num(), vars);
  return to_string(f.num(), vars) + "/(" + to_string(f.den(), vars) + ")";
}

}  // namespace ovdkit
