#include "varjet/dsl.hpp"

#include <cctype>
#include <sstream>

namespace varjet {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space();
    int line = line_, column = column_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, column};
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        text += advance();
      return {Tok::Number, text, line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string text;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        text += advance();
      if (pos_ < src_.size() && src_[pos_] == '_') {
        text += advance();
        if (pos_ < src_.size() && src_[pos_] == '{') {
          text += advance();
          while (pos_ < src_.size() && src_[pos_] != '}') text += advance();
          if (pos_ >= src_.size())
            throw ParseError("unterminated '{' in subscript", line, column);
          text += advance();
        } else {
          while (pos_ < src_.size() &&
                 std::isalnum(static_cast<unsigned char>(src_[pos_])))
            text += advance();
        }
      }
      return {Tok::Ident, text, line, column};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, column};
      case '-': return {Tok::Minus, "-", line, column};
      case '*': return {Tok::Star, "*", line, column};
      case '/': return {Tok::Slash, "/", line, column};
      case '^': return {Tok::Caret, "^", line, column};
      case '(': return {Tok::LParen, "(", line, column};
      case ')': return {Tok::RParen, ")", line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      advance();
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lexer_(src) { shift(); }

  Expression parse_expression_all() {
    Expression e = parse_sum();
    expect(Tok::End, "end of input");
    return e;
  }

  Functional parse_functional_all() {
    if (cur_.kind != Tok::Ident || cur_.text != "int")
      fail("expected 'int'");
    shift();
    Expression density = parse_sum();
    if (cur_.kind != Tok::Ident || cur_.text.size() < 2 || cur_.text[0] != 'd')
      fail("expected integration differential such as 'dx'");
    std::string base = cur_.text.substr(1);
    if (!valid_label(base)) fail("invalid base label in differential");
    Token at = cur_;
    shift();
    expect(Tok::End, "end of input");
    try {
      return Functional(std::move(density), base);
    } catch (const ExprError& err) {
      throw ParseError(err.what(), at.line, at.column);
    }
  }

 private:
  static bool valid_label(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + ", found '" + (cur_.kind == Tok::End ? "<end>" : cur_.text) +
                         "'",
                     cur_.line, cur_.column);
  }

  void shift() { cur_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail("expected " + what);
    shift();
  }

  Expression parse_sum() {
    bool negate = false;
    if (cur_.kind == Tok::Minus) {
      negate = true;
      shift();
    }
    Expression acc = parse_product();
    if (negate) acc = -acc;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      shift();
      Expression rhs = parse_product();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  Expression parse_product() {
    Expression acc = parse_power();
    while (cur_.kind == Tok::Star) {
      shift();
      acc = acc * parse_power();
    }
    return acc;
  }

  Expression parse_power() {
    Expression base = parse_primary();
    if (cur_.kind == Tok::Caret) {
      shift();
      if (cur_.kind != Tok::Number) fail("expected integer exponent");
      int n = std::stoi(cur_.text);
      shift();
      return base.pow(n);
    }
    return base;
  }

  Expression parse_primary() {
    if (cur_.kind == Tok::Number) {
      Rational num(cur_.text);
      shift();
      if (cur_.kind == Tok::Slash) {
        shift();
        if (cur_.kind != Tok::Number) fail("expected denominator");
        Rational den(cur_.text);
        if (den == 0) fail("zero denominator");
        shift();
        return Expression::constant(num / den);
      }
      return Expression::constant(num);
    }
    if (cur_.kind == Tok::LParen) {
      shift();
      Expression e = parse_sum();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (cur_.kind == Tok::Minus) {
      shift();
      return -parse_power();
    }
    if (cur_.kind == Tok::Ident) {
      if (cur_.text == "exp" || cur_.text == "sin" || cur_.text == "cos") {
        AtomKind kind = cur_.text == "exp"   ? AtomKind::Exp
                        : cur_.text == "sin" ? AtomKind::Sin
                                             : AtomKind::Cos;
        Token at = cur_;
        shift();
        expect(Tok::LParen, "'(' after function name");
        Expression arg = parse_sum();
        expect(Tok::RParen, "')'");
        try {
          return Expression::atom(kind, arg);
        } catch (const ExprError& err) {
          throw ParseError(err.what(), at.line, at.column);
        }
      }
      return parse_jet_variable();
    }
    fail("expected a number, variable, function, or '('");
  }

  Expression parse_jet_variable() {
    const std::string& text = cur_.text;
    std::size_t i = 0;
    if (i >= text.size() || text[i] != 'q') fail("unknown identifier");
    ++i;
    bool odd = false;
    if (i < text.size() && text[i] == 'd') {
      odd = true;
      ++i;
    }
    int index = 1;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > digits) index = std::stoi(text.substr(digits, i - digits));
    MultiIndex mi;
    if (i < text.size()) {
      if (text[i] != '_') fail("malformed jet variable");
      ++i;
      std::string subscript = text.substr(i);
      if (!subscript.empty() && subscript.front() == '{') {
        if (subscript.back() != '}') fail("malformed subscript braces");
        subscript = subscript.substr(1, subscript.size() - 2);
      }
      std::size_t j = 0;
      while (j < subscript.size()) {
        if (std::isspace(static_cast<unsigned char>(subscript[j]))) {
          ++j;
          continue;
        }
        if (!std::islower(static_cast<unsigned char>(subscript[j])))
          fail("invalid base label in subscript");
        std::string label(1, subscript[j++]);
        while (j < subscript.size() &&
               std::isdigit(static_cast<unsigned char>(subscript[j])))
          label += subscript[j++];
        mi.counts[label] += 1;
      }
      if (mi.counts.empty()) fail("empty subscript");
    }
    shift();
    return Expression::variable(JetVariable{odd, index, mi});
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 1, 1};
};

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

bool plain_subscript_ok(const MultiIndex& mi) {
  for (auto& [label, n] : mi.counts) {
    if (label.empty() || !std::islower(static_cast<unsigned char>(label[0])))
      return false;
    for (std::size_t i = 1; i < label.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(label[i]))) return false;
  }
  return true;
}

std::string variable_text(const JetVariable& v) {
  std::string out = v.odd ? "qd" : "q";
  if (v.index != 1) out += std::to_string(v.index);
  if (v.deriv.empty()) return out;
  out += "_";
  if (plain_subscript_ok(v.deriv)) {
    for (auto& [label, n] : v.deriv.counts)
      for (int i = 0; i < n; ++i) out += label;
  } else {
    out += "{";
    bool first = true;
    for (auto& [label, n] : v.deriv.counts)
      for (int i = 0; i < n; ++i) {
        if (!first) out += " ";
        out += label;
        first = false;
      }
    out += "}";
  }
  return out;
}

const char* atom_name(AtomKind kind) {
  switch (kind) {
    case AtomKind::Exp: return "exp";
    case AtomKind::Sin: return "sin";
    case AtomKind::Cos: return "cos";
  }
  return "?";
}

std::string term_text(const Term& t, const Rational& coeff_abs) {
  std::vector<std::string> parts;
  if (coeff_abs != 1 || t.is_empty()) parts.push_back(rational_text(coeff_abs));
  for (const JetVariable& v : t.odd) parts.push_back(variable_text(v));
  for (auto& [v, p] : t.even) {
    std::string s = variable_text(v);
    if (p > 1) s += "^" + std::to_string(p);
    parts.push_back(std::move(s));
  }
  for (auto& [a, p] : t.atoms) {
    std::string s = std::string(atom_name(a.kind)) + "(" + render_text(*a.argument) + ")";
    if (p > 1) s += "^" + std::to_string(p);
    parts.push_back(std::move(s));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

}  // namespace

Expression parse_expression(const std::string& source) {
  return Parser(source).parse_expression_all();
}

Functional parse_functional(const std::string& source) {
  return Parser(source).parse_functional_all();
}

std::string render_text(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [t, c] : e.terms()) {
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_text(t, neg ? Rational(-c) : c);
    first = false;
  }
  return out;
}

std::string render_text(const Functional& F) {
  return "int " + render_text(F.density) + " d" + F.base;
}

std::string render_text(const CompositeExpression& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const CompositeTerm& t : e.terms) {
    bool neg = t.scalar < 0;
    Rational mag = neg ? Rational(-t.scalar) : t.scalar;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += rational_text(mag) + "*";
    for (const DeferredFactor& f : t.factors) {
      out += "{" + render_text(f.core) + "}";
      for (const DeferredRecord& r : f.records) {
        out += "[(";
        out += r.sign < 0 ? "-" : "+";
        out += "d/d" + r.label.name() + ")";
        if (r.order > 1) out += "^" + std::to_string(r.order);
        out += "]";
      }
    }
  }
  return out;
}

namespace {

std::string latex_rational(const Rational& r, bool with_sign) {
  Rational mag = r < 0 ? Rational(-r) : r;
  std::string sign = r < 0 ? "-" : (with_sign ? "+" : "");
  std::string body;
  if (denominator(mag) == 1) {
    body = numerator(mag).str();
  } else {
    body = "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
  }
  return sign + body;
}

std::string latex_variable(const JetVariable& v) {
  std::string out = "q";
  if (v.odd) out += "^{\\dagger}";
  std::string sub;
  if (v.index != 1) sub += std::to_string(v.index);
  if (!v.deriv.empty()) {
    if (!sub.empty()) sub += ";";
    for (auto& [label, n] : v.deriv.counts)
      for (int i = 0; i < n; ++i) sub += label.size() == 1 ? label : label + "\\,";
  }
  if (!sub.empty()) out += "_{" + sub + "}";
  return out;
}

std::string latex_term(const Term& t) {
  std::string out;
  for (const JetVariable& v : t.odd) out += latex_variable(v) + " ";
  for (auto& [v, p] : t.even) {
    out += latex_variable(v);
    if (p > 1) out += "^{" + std::to_string(p) + "}";
    out += " ";
  }
  for (auto& [a, p] : t.atoms) {
    out += "\\" + std::string(atom_name(a.kind));
    if (p > 1) out += "^{" + std::to_string(p) + "}";
    out += "\\left(" + render_latex(*a.argument) + "\\right) ";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace

std::string render_latex(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [t, c] : e.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    std::string coeff = latex_rational(c, !first);
    if (mag == 1 && !t.is_empty()) coeff = (c < 0 ? "-" : (first ? "" : "+"));
    std::string body = latex_term(t);
    out += coeff;
    if (!coeff.empty() && !body.empty()) out += " ";
    out += body;
    out += " ";
    first = false;
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string render_latex(const Functional& F) {
  return "\\int " + render_latex(F.density) + " \\, \\mathrm{d}" + F.base;
}

std::string render_latex(const CompositeExpression& e) {
  if (e.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const CompositeTerm& t : e.terms) {
    Rational mag = t.scalar < 0 ? Rational(-t.scalar) : t.scalar;
    std::string coeff = latex_rational(t.scalar, !first);
    if (mag == 1) coeff = (t.scalar < 0 ? "-" : (first ? "" : "+"));
    out += coeff + " ";
    for (const DeferredFactor& f : t.factors) {
      std::string body = "\\left\\{" + render_latex(f.core) + "\\right\\}";
      for (const DeferredRecord& r : f.records) {
        std::string op = "\\left\\lceil ";
        op += r.sign < 0 ? "-" : "+";
        op += "\\frac{d}{d " + std::string(1, r.label.side) + "_{" +
              std::to_string(r.label.level) + "}}";
        if (r.order > 1) op += "^{" + std::to_string(r.order) + "}";
        op += " \\right\\rceil";
        body = op + body;
      }
      out += body;
    }
    out += " ";
    first = false;
  }
  if (!out.empty()) out.pop_back();
  return out;
}

namespace {

nlohmann::json variable_json(const JetVariable& v) {
  nlohmann::json derivs = nlohmann::json::object();
  for (auto& [label, n] : v.deriv.counts) derivs[label] = n;
  return {{"odd", v.odd}, {"index", v.index}, {"derivatives", derivs}};
}

nlohmann::json coefficient_json(const Rational& r) {
  return {{"numerator", numerator(r).str()}, {"denominator", denominator(r).str()}};
}

}  // namespace

nlohmann::json render_structured(const Expression& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [t, c] : e.terms()) {
    nlohmann::json odd = nlohmann::json::array();
    for (const JetVariable& v : t.odd) odd.push_back(variable_json(v));
    nlohmann::json even = nlohmann::json::array();
    for (auto& [v, p] : t.even)
      even.push_back({{"variable", variable_json(v)}, {"power", p}});
    nlohmann::json atoms = nlohmann::json::array();
    for (auto& [a, p] : t.atoms)
      atoms.push_back({{"kind", atom_name(a.kind)},
                       {"argument", render_structured(*a.argument)},
                       {"power", p}});
    terms.push_back({{"coefficient", coefficient_json(c)},
                     {"odd", odd},
                     {"even", even},
                     {"atoms", atoms}});
  }
  return {{"schema", "varjet/expression@1"}, {"terms", terms}};
}

nlohmann::json render_structured(const Functional& F) {
  return {{"schema", "varjet/functional@1"},
          {"base", F.base},
          {"density", render_structured(F.density)}};
}

nlohmann::json render_structured(const CompositeExpression& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const CompositeTerm& t : e.terms) {
    nlohmann::json factors = nlohmann::json::array();
    for (const DeferredFactor& f : t.factors) {
      nlohmann::json records = nlohmann::json::array();
      for (const DeferredRecord& r : f.records)
        records.push_back(
            {{"sign", r.sign}, {"order", r.order}, {"label", r.label.name()}});
      factors.push_back({{"core", render_structured(f.core)}, {"deferred", records}});
    }
    terms.push_back({{"scalar", coefficient_json(t.scalar)}, {"factors", factors}});
  }
  return {{"schema", "varjet/composite@1"}, {"terms", terms}};
}

}  // namespace varjet
