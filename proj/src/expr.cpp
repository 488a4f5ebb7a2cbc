#include "stec/expr.hpp"

#include <cctype>
#include <vector>

namespace stec {

namespace {

enum class Tok {
  end,
  number,
  blade,
  lparen,
  rparen,
  wedge,
  dot,
  lcontract,
  rcontract,
  star,
  plus,
  minus,
  bang,
  double_bang,
};

struct Token {
  Tok kind = Tok::end;
  std::size_t offset = 0;
  Rational value;
  Blade blade;
  int blade_sign = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, const Signature& sig) : src_(src), sig_(sig) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_ = Token{};
    tok_.offset = pos_;
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::end;
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_number();
      return;
    }
    if (c == 'e') {
      lex_blade();
      return;
    }
    struct Spelling {
      std::string_view text;
      Tok kind;
    };
    // Longest spellings first;  Unicode aliases for the product operators.
    static constexpr Spelling spellings[] = {
        {"!!", Tok::double_bang}, {"_|", Tok::lcontract},  {"|_", Tok::rcontract},
        {"⌋", Tok::lcontract},
        {"⌊", Tok::rcontract},
        {"∧", Tok::wedge},   {"·", Tok::dot},    {"⋅", Tok::dot},
        {"^", Tok::wedge},        {".", Tok::dot},         {"*", Tok::star},
        {"+", Tok::plus},         {"-", Tok::minus},       {"!", Tok::bang},
        {"(", Tok::lparen},       {")", Tok::rparen},
    };
    for (const Spelling& s : spellings) {
      if (starts_with(s.text)) {
        tok_.kind = s.kind;
        pos_ += s.text.size();
        return;
      }
    }
    throw ParseError("unknown token", pos_);
  }

  void lex_number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string text(src_.substr(start, pos_ - start));
    if (pos_ < src_.size() && src_[pos_] == '/') {
      std::size_t slash = pos_;
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == den_start) throw ParseError("expected denominator digits", slash + 1);
      text += '/';
      text += src_.substr(den_start, pos_ - den_start);
    }
    tok_.kind = Tok::number;
    tok_.value = parse_fraction(text);
  }

  void lex_blade() {
    std::size_t start = pos_;
    ++pos_;  // 'e'
    std::vector<int> indices;
    if (pos_ < src_.size() && src_[pos_] == '{') {
      ++pos_;
      bool expect_index = true;
      while (true) {
        if (pos_ >= src_.size()) throw ParseError("unterminated blade index list", start);
        if (src_[pos_] == '}') {
          if (expect_index && !indices.empty())
            throw ParseError("trailing comma in blade index list", pos_);
          ++pos_;
          break;
        }
        if (!expect_index) {
          if (src_[pos_] != ',') throw ParseError("expected ',' or '}'", pos_);
          ++pos_;
          expect_index = true;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(src_[pos_])))
          throw ParseError("expected blade index", pos_);
        int v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          v = v * 10 + (src_[pos_++] - '0');
          if (v >= max_dims)
            throw ParseError("blade index " + std::to_string(v) + " out of range for signature",
                             start);
        }
        indices.push_back(v);
        expect_index = false;
      }
    } else {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
        indices.push_back(src_[pos_++] - '0');
      if (indices.empty()) throw ParseError("expected blade indices after 'e'", start);
    }
    for (int v : indices)
      if (v >= sig_.dims())
        throw ParseError("blade index " + std::to_string(v) + " out of range for signature",
                         start);
    SortedInts sorted = sort_with_parity(indices);
    if (sorted.sign == 0) throw ParseError("repeated blade index", start);
    tok_.kind = Tok::blade;
    tok_.blade = Blade::from_indices(sorted.values);
    tok_.blade_sign = sorted.sign;
  }

  std::string_view src_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  Token tok_;
};

// Binding powers; higher binds tighter. Postfix Hodge outranks everything.
int binding_power(Tok t) {
  switch (t) {
    case Tok::wedge:
      return 60;
    case Tok::lcontract:
    case Tok::rcontract:
      return 50;
    case Tok::dot:
      return 40;
    case Tok::star:
      return 30;
    case Tok::plus:
    case Tok::minus:
      return 10;
    default:
      return -1;
  }
}

constexpr int unary_minus_power = 20;  // between '*' and '+'
constexpr int postfix_power = 70;

Expression::Op binary_op(Tok t) {
  switch (t) {
    case Tok::wedge:
      return Expression::Op::wedge;
    case Tok::lcontract:
      return Expression::Op::left_contraction;
    case Tok::rcontract:
      return Expression::Op::right_contraction;
    case Tok::dot:
      return Expression::Op::dot;
    case Tok::star:
      return Expression::Op::scalar_multiply;
    case Tok::plus:
      return Expression::Op::add;
    default:
      return Expression::Op::subtract;
  }
}

class Parser {
 public:
  Parser(std::string_view src, const Signature& sig) : lex_(src, sig) {}

  Expression parse() {
    Expression e = parse_expr(0);
    if (lex_.peek().kind != Tok::end)
      throw ParseError("unexpected trailing input", lex_.peek().offset);
    return e;
  }

 private:
  Expression parse_expr(int min_power) {
    Expression lhs = parse_prefix();
    while (true) {
      Tok t = lex_.peek().kind;
      if (t == Tok::bang || t == Tok::double_bang) {
        if (postfix_power < min_power) break;
        lex_.take();
        Expression node;
        node.op = t == Tok::bang ? Expression::Op::hodge : Expression::Op::inv_hodge;
        node.lhs = std::make_unique<Expression>(std::move(lhs));
        lhs = std::move(node);
        continue;
      }
      int power = binding_power(t);
      if (power < 0 || power < min_power) break;
      lex_.take();
      Expression node;
      node.op = binary_op(t);
      node.lhs = std::make_unique<Expression>(std::move(lhs));
      node.rhs = std::make_unique<Expression>(parse_expr(power + 1));
      lhs = std::move(node);
    }
    return lhs;
  }

  Expression parse_prefix() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::number: {
        Expression e;
        e.op = Expression::Op::literal;
        e.value = std::move(t.value);
        return e;
      }
      case Tok::blade: {
        Expression e;
        e.op = Expression::Op::blade;
        e.blade_value = t.blade;
        e.blade_sign = t.blade_sign;
        return e;
      }
      case Tok::minus: {
        Expression e;
        e.op = Expression::Op::negate;
        e.lhs = std::make_unique<Expression>(parse_expr(unary_minus_power));
        return e;
      }
      case Tok::lparen: {
        Expression e = parse_expr(0);
        Token close = lex_.take();
        if (close.kind != Tok::rparen) throw ParseError("expected ')'", close.offset);
        return e;
      }
      default:
        throw ParseError("expected a value", t.offset);
    }
  }

  Lexer lex_;
};

bool is_scalar(const Multivector<Rational>& v) {
  return v.is_zero() || v.is_pure_grade(0);
}

}  // namespace

Expression parse_expression(std::string_view src, const Signature& sig) {
  return Parser(src, sig).parse();
}

Multivector<Rational> eval_expression(const Expression& e, const Signature& sig) {
  using MV = Multivector<Rational>;
  switch (e.op) {
    case Expression::Op::literal:
      return MV::scalar(sig, e.value);
    case Expression::Op::blade:
      return MV::basis(sig, e.blade_value, Rational(e.blade_sign));
    case Expression::Op::negate:
      return -eval_expression(*e.lhs, sig);
    case Expression::Op::hodge:
      return hodge(eval_expression(*e.lhs, sig));
    case Expression::Op::inv_hodge:
      return inv_hodge(eval_expression(*e.lhs, sig));
    default:
      break;
  }
  MV a = eval_expression(*e.lhs, sig);
  MV b = eval_expression(*e.rhs, sig);
  switch (e.op) {
    case Expression::Op::wedge:
      return wedge(a, b);
    case Expression::Op::dot:
      return MV::scalar(sig, dot(a, b));
    case Expression::Op::left_contraction:
      return left_contraction(a, b);
    case Expression::Op::right_contraction:
      return right_contraction(a, b);
    case Expression::Op::scalar_multiply: {
      if (is_scalar(a)) return b * a.coefficient(Blade{});
      if (is_scalar(b)) return a * b.coefficient(Blade{});
      throw std::domain_error("'*' requires a grade-0 operand");
    }
    case Expression::Op::add:
      return a + b;
    case Expression::Op::subtract:
      return a - b;
    default:
      throw std::logic_error("unreachable expression kind");
  }
}

Multivector<Rational> eval(std::string_view src, const Signature& sig) {
  return eval_expression(parse_expression(src, sig), sig);
}

}  // namespace stec
