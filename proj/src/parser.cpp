#include "cancelab/parser.hpp"

#include <cctype>

namespace cancelab {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const RingPtr& ring)
      : s_(text), ring_(ring) {}

  Polynomial run() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty input");
    Polynomial f = expr();
    skip_ws();
    if (pos_ < s_.size())
      throw ParseError("unexpected trailing input at '" + s_.substr(pos_) + "'");
    return f;
  }

 private:
  const std::string& s_;
  RingPtr ring_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      long e = read_nat("exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!eat(')')) throw ParseError("missing closing parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') throw ParseError("unexpected end of input");
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  long read_nat(const char* what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("malformed ") + what);
    return std::stol(s_.substr(start, pos_ - start));
  }

  Polynomial number() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    mpz_class num(s_.substr(start, pos_ - start));
    mpz_class den = 1;
    // fraction only when followed by digits (not by another factor)
    size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) throw ParseError("malformed fraction denominator");
      den = mpz_class(s_.substr(dstart, pos_ - dstart));
      if (den == 0) throw ParseError("zero denominator");
    } else {
      pos_ = save;
    }
    return Polynomial::constant(ring_, fe_ratio(ring_->field, num, den));
  }

  Polynomial identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    int vi = ring_->var_index(name);
    if (vi >= 0) return Polynomial::variable(ring_, static_cast<size_t>(vi));
    if (ring_->field->kind == FieldDescriptor::Kind::Extension &&
        name == ring_->field->generator)
      return Polynomial::constant(ring_, fe_generator(ring_->field));
    throw ParseError("unknown identifier: " + name);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolyParser(text, ring).run();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const RingPtr& ring, char sep) {
  std::vector<Polynomial> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(sep, pos);
    std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_polynomial(piece, ring));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// ---- descriptor text forms ----

FieldPtr FieldDescriptor::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "QQ") return rationals();
  if (s.rfind("GF(", 0) == 0 && s.back() == ')')
    return prime(std::stoul(s.substr(3, s.size() - 4)));
  // base(gen)/(minpoly)
  size_t open = s.find('(');
  if (open == std::string::npos) throw ParseError("bad field descriptor: " + text);
  std::string base_txt = s.substr(0, open);
  FieldPtr base;
  size_t rest_at;
  if (base_txt == "GF") {
    size_t close = s.find(')', open);
    if (close == std::string::npos) throw ParseError("bad field descriptor: " + text);
    base = prime(std::stoul(s.substr(open + 1, close - open - 1)));
    if (close + 1 >= s.size() || s[close + 1] != '(')
      throw ParseError("bad field descriptor: " + text);
    open = close + 1;
    rest_at = open;
  } else if (base_txt == "QQ") {
    base = rationals();
    rest_at = open;
  } else {
    throw ParseError("bad field descriptor: " + text);
  }
  size_t close = s.find(')', rest_at);
  if (close == std::string::npos) throw ParseError("bad field descriptor: " + text);
  std::string gen = s.substr(rest_at + 1, close - rest_at - 1);
  if (gen.empty()) throw ParseError("bad field descriptor: " + text);
  if (close + 2 >= s.size() || s[close + 1] != '/' || s[close + 2] != '(' ||
      s.back() != ')')
    throw ParseError("bad field descriptor: " + text);
  std::string mp_txt = s.substr(close + 3, s.size() - close - 4);
  // parse the minimal polynomial in a one-variable ring over the base
  RingPtr tmp = RingDescriptor::make(base, {gen});
  Polynomial mp = parse_polynomial(mp_txt, tmp);
  int deg = mp.degree();
  if (deg < 2) throw ParseError("minimal polynomial degree must be >= 2");
  std::vector<FieldElement> coeffs(static_cast<size_t>(deg) + 1, fe_zero(base));
  for (const auto& t : mp.terms())
    coeffs[static_cast<size_t>(t.mono.e[0])] = t.coeff;
  return extension(base, gen, std::move(coeffs));
}

RingPtr RingDescriptor::parse(const std::string& text, MonomialOrder order) {
  size_t open = text.rfind('[');
  size_t close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("bad ring descriptor: " + text);
  FieldPtr f = FieldDescriptor::parse(text.substr(0, open));
  std::vector<std::string> vars;
  std::string cur;
  for (size_t i = open + 1; i < close; ++i) {
    char c = text[i];
    if (c == ',') {
      if (cur.empty()) throw ParseError("bad ring descriptor: " + text);
      vars.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) vars.push_back(cur);
  if (vars.empty()) throw ParseError("ring needs at least one variable");
  return make(std::move(f), std::move(vars), order);
}

}  // namespace cancelab
