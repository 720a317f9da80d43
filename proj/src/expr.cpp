#include "gg/expr.hpp"

#include <cctype>

namespace gg {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const Chart& chart) : src_(src), chart_(chart) {}

  Coeff parse() {
    Coeff r = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Coeff expr() {
    Coeff r = term();
    while (true) {
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  Coeff term() {
    Coeff r = factor();
    while (true) {
      if (eat('*')) {
        r *= factor();
      } else if (eat('/')) {
        size_t at = pos_;
        Coeff d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        r /= d;
      } else {
        return r;
      }
    }
  }

  Coeff factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Coeff base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      size_t at = pos_;
      long e = integer();
      if (neg && base.is_zero()) throw ParseError("zero to a negative power", at);
      return base.pow(static_cast<int>(neg ? -e : e));
    }
    return base;
  }

  Coeff atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Coeff r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Coeff(chart_.nfull(), GaussianRational(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      std::string name = identifier();
      if (name == "i") return Coeff(chart_.nfull(), GaussianRational::i());
      int idx = chart_.coord_index(name);
      if (idx < 0) throw ParseError("unknown coordinate '" + name + "'", start);
      if (chart_.is_angle(idx))
        throw ParseError("angle coordinate '" + name + "' cannot appear in a coefficient",
                         start);
      return chart_.coordinate(idx);
    }
    throw ParseError("expected a number, name or '('", pos_);
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    return v;
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return src_.substr(start, pos_ - start);
  }

  const std::string& src_;
  const Chart& chart_;
  size_t pos_ = 0;
};

}  // namespace

Coeff parse_coeff(const std::string& src, const Chart& chart) {
  return Parser(src, chart).parse();
}

}  // namespace gg
