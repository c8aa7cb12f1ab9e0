#include "uqso/expression.hpp"

#include <cctype>

namespace uqso::expr {

NodePtr Node::rational(Rational v) {
  v.canonicalize();
  return std::make_shared<const Node>(Node{NodeKind::Rational, v, 0, 0, 0, GeneratorVariant::Default, 0, {}});
}

NodePtr Node::qpow(int twice) {
  return std::make_shared<const Node>(Node{NodeKind::QPow, 0, twice, 0, 0, GeneratorVariant::Default, 0, {}});
}

NodePtr Node::generator(int row, int col, GeneratorVariant v) {
  return std::make_shared<const Node>(Node{NodeKind::Generator, 0, 0, row, col, v, 0, {}});
}

NodePtr Node::neg(NodePtr child) {
  return std::make_shared<const Node>(
      Node{NodeKind::Neg, 0, 0, 0, 0, GeneratorVariant::Default, 0, {std::move(child)}});
}

NodePtr Node::sum(std::vector<NodePtr> children) {
  if (children.size() < 2)
    fail(ErrorKind::InvalidArgument, "a sum node needs at least two children");
  return std::make_shared<const Node>(Node{NodeKind::Sum, 0, 0, 0, 0, GeneratorVariant::Default, 0, std::move(children)});
}

NodePtr Node::product(std::vector<NodePtr> children) {
  if (children.size() < 2)
    fail(ErrorKind::InvalidArgument, "a product node needs at least two children");
  return std::make_shared<const Node>(
      Node{NodeKind::Product, 0, 0, 0, 0, GeneratorVariant::Default, 0, std::move(children)});
}

NodePtr Node::power(NodePtr base, int exponent) {
  if (exponent < 0)
    fail(ErrorKind::InvalidArgument, "negative exponents are not supported");
  return std::make_shared<const Node>(
      Node{NodeKind::Power, 0, 0, 0, 0, GeneratorVariant::Default, exponent, {std::move(base)}});
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  Parser(std::string_view src, int n) : src_(src), n_(n) {}

  NodePtr parse() {
    skip_space();
    if (at_end())
      error("empty expression");
    NodePtr node = parse_sum();
    skip_space();
    if (!at_end()) {
      if (peek() == ')')
        error("unmatched ')'");
      error(std::string("unexpected character '") + peek() + "'");
    }
    return node;
  }

private:
  struct Position {
    int line;
    int column;
  };

  [[noreturn]] void error(const std::string& message) const { error_at(message, {line_, column_}); }
  [[noreturn]] void error_at(const std::string& message, Position p) const {
    throw SyntaxError(message, p.line, p.column);
  }
  [[noreturn]] void unexpected_end() const {
    if (!open_.empty())
      error_at("unclosed '('", open_.back());
    error("unexpected end of input");
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }
  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_space();
    if (at_end())
      unexpected_end();
    if (peek() != c)
      error(std::string("expected '") + c + "', found '" + peek() + "'");
    advance();
  }

  std::string digits() {
    skip_space();
    if (at_end())
      unexpected_end();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      error(std::string("expected a digit, found '") + peek() + "'");
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  int small_int(const std::string& text) {
    if (text.size() > 6)
      error("integer " + text + " is too large");
    return std::stoi(text);
  }

  NodePtr parse_sum() {
    std::vector<NodePtr> terms{parse_term()};
    for (;;) {
      skip_space();
      if (accept('+'))
        terms.push_back(parse_term());
      else if (accept('-'))
        terms.push_back(Node::neg(parse_term()));
      else
        break;
    }
    return terms.size() == 1 ? terms.front() : Node::sum(std::move(terms));
  }

  NodePtr parse_term() {
    std::vector<NodePtr> factors{parse_unary()};
    while (accept('*'))
      factors.push_back(parse_unary());
    return factors.size() == 1 ? factors.front() : Node::product(std::move(factors));
  }

  NodePtr parse_unary() {
    if (accept('-'))
      return Node::neg(parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    if (accept('^'))
      return Node::power(base, small_int(digits()));
    return base;
  }

  NodePtr parse_atom() {
    skip_space();
    if (at_end())
      unexpected_end();
    const Position start{line_, column_};
    char c = peek();
    if (c == '(') {
      open_.push_back(start);
      advance();
      NodePtr inner = parse_sum();
      expect(')');
      open_.pop_back();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (!at_end() && peek() == '/') {
        advance();
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos)
          error_at("zero denominator", start);
        return Node::rational(Rational(num + "/" + den));
      }
      return Node::rational(Rational(num));
    }
    if (c == 'q') {
      advance();
      if (!accept('^'))
        return Node::qpow(2);
      skip_space();
      if (at_end())
        unexpected_end();
      if (peek() != '(')
        return Node::qpow(2 * small_int(digits()));
      open_.push_back({line_, column_});
      advance();
      bool negative = accept('-');
      int value = small_int(digits());
      int twice = 2 * value;
      if (accept('/')) {
        Position den_pos{line_, column_};
        if (digits() != "2")
          error_at("q exponents must be integers or halves", den_pos);
        twice = value;
      }
      expect(')');
      open_.pop_back();
      return Node::qpow(negative ? -twice : twice);
    }
    if (c == 'I') {
      advance();
      GeneratorVariant v = GeneratorVariant::Default;
      if (!at_end() && peek() == 'p') {
        v = GeneratorVariant::Plus;
        advance();
      } else if (!at_end() && peek() == 'm') {
        v = GeneratorVariant::Minus;
        advance();
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        error("expected two generator digits after 'I'");
      std::string idx;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        idx += peek();
        advance();
      }
      if (idx.size() != 2)
        error_at("generator needs exactly two index digits, got '" + idx + "'", start);
      int row = idx[0] - '0', col = idx[1] - '0';
      if (row > n_ || row <= col || col < 1)
        throw Error(ErrorKind::IndexError, "generator I" + idx + " needs n >= k > l >= 1 (n = " +
                                               std::to_string(n_) + ") at line " + std::to_string(start.line) +
                                               ", column " + std::to_string(start.column));
      return Node::generator(row, col, v);
    }
    if (c == ')')
      error("unexpected ')'");
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  int n_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<Position> open_;
};

} // namespace

NodePtr parse_expression(std::string_view src, int n) {
  if (n < 3)
    fail(ErrorKind::InvalidArgument, "rank n must be >= 3");
  return Parser(src, n).parse();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string print_node(const NodePtr& node);

// Bases printed bare before '^'. q^a and a/b read differently there.
bool bare_base(const Node& n) {
  return n.kind == NodeKind::Generator || (n.kind == NodeKind::Rational && n.value.get_den() == 1);
}

std::string parens(const std::string& s) { return "(" + s + ")"; }

// Text that reparses as `node` where the grammar expects a unary.
std::string print_unary(const NodePtr& node) {
  switch (node->kind) {
  case NodeKind::Sum:
  case NodeKind::Product:
    return parens(print_node(node));
  default:
    return print_node(node);
  }
}

// Text that reparses as `node` where the grammar expects a term.
std::string print_term(const NodePtr& node) {
  return node->kind == NodeKind::Sum ? parens(print_node(node)) : print_node(node);
}

std::string print_node(const NodePtr& node) {
  const Node& n = *node;
  switch (n.kind) {
  case NodeKind::Rational:
    if (sgn(n.value) < 0)
      fail(ErrorKind::InvalidArgument, "negative literals are written with unary minus");
    return n.value.get_str();
  case NodeKind::QPow: {
    if (n.twice == 2)
      return "q";
    if (n.twice % 2 == 0 && n.twice > 0)
      return "q^" + std::to_string(n.twice / 2);
    if (n.twice % 2 == 0)
      return "q^(" + std::to_string(n.twice / 2) + ")";
    return "q^(" + std::to_string(n.twice) + "/2)";
  }
  case NodeKind::Generator: {
    const char* prefix = n.variant == GeneratorVariant::Plus ? "Ip" : n.variant == GeneratorVariant::Minus ? "Im" : "I";
    return prefix + std::to_string(n.row) + std::to_string(n.col);
  }
  case NodeKind::Neg:
    return "-" + print_unary(n.children.front());
  case NodeKind::Power: {
    const NodePtr& base = n.children.front();
    std::string b = print_node(base);
    return (bare_base(*base) ? b : parens(b)) + "^" + std::to_string(n.exponent);
  }
  case NodeKind::Product: {
    std::string out;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i > 0)
        out += "*";
      const NodePtr& c = n.children[i];
      out += c->kind == NodeKind::Product ? parens(print_node(c)) : print_unary(c);
    }
    return out;
  }
  case NodeKind::Sum: {
    std::string out = print_term(n.children.front());
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      const NodePtr& c = n.children[i];
      if (c->kind == NodeKind::Neg)
        out += " - " + print_term(c->children.front());
      else
        out += " + " + print_term(c);
    }
    return out;
  }
  }
  return "";
}

} // namespace

std::string print_expression(const NodePtr& node) { return print_node(node); }

bool same_tree(const NodePtr& a, const NodePtr& b) {
  if (a->kind != b->kind || a->children.size() != b->children.size())
    return false;
  switch (a->kind) {
  case NodeKind::Rational:
    if (a->value != b->value)
      return false;
    break;
  case NodeKind::QPow:
    if (a->twice != b->twice)
      return false;
    break;
  case NodeKind::Generator:
    if (a->row != b->row || a->col != b->col || a->variant != b->variant)
      return false;
    break;
  case NodeKind::Power:
    if (a->exponent != b->exponent)
      return false;
    break;
  default:
    break;
  }
  for (std::size_t i = 0; i < a->children.size(); ++i)
    if (!same_tree(a->children[i], b->children[i]))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Explicit Ip/Im marks on non-adjacent generators; adjacent ones coincide in both families.
void collect_variants(const Node& x, bool& plus, bool& minus) {
  if (x.kind == NodeKind::Generator && x.row != x.col + 1) {
    plus = plus || x.variant == GeneratorVariant::Plus;
    minus = minus || x.variant == GeneratorVariant::Minus;
  }
  for (const auto& c : x.children)
    collect_variants(*c, plus, minus);
}

pbw::AlgebraElement evaluate_in(const NodePtr& node, int n, pbw::Variant default_variant);

} // namespace

pbw::AlgebraElement evaluate(const NodePtr& node, int n, pbw::Variant default_variant) {
  bool plus = false, minus = false;
  collect_variants(*node, plus, minus);
  if (plus && minus)
    fail(ErrorKind::VariantMismatch, "expression mixes Ip and Im generators");
  pbw::Variant v = plus ? pbw::Variant::Plus : minus ? pbw::Variant::Minus : default_variant;
  return evaluate_in(node, n, v);
}

namespace {

pbw::AlgebraElement evaluate_in(const NodePtr& node, int n, pbw::Variant default_variant) {
  using pbw::AlgebraElement;
  const Node& x = *node;
  switch (x.kind) {
  case NodeKind::Rational:
    return AlgebraElement::scalar(n, default_variant, LaurentPoly(x.value));
  case NodeKind::QPow:
    return AlgebraElement::scalar(n, default_variant, LaurentPoly::monomial(x.twice));
  case NodeKind::Generator: {
    if (x.row > n)
      fail(ErrorKind::IndexError, "generator " + print_node(node) + " exceeds rank n = " + std::to_string(n));
    return AlgebraElement::generator(n, x.row, x.col, default_variant);
  }
  case NodeKind::Neg:
    return -evaluate_in(x.children.front(), n, default_variant);
  case NodeKind::Sum: {
    AlgebraElement acc = evaluate_in(x.children.front(), n, default_variant);
    for (std::size_t i = 1; i < x.children.size(); ++i)
      acc += evaluate_in(x.children[i], n, default_variant);
    return acc;
  }
  case NodeKind::Product: {
    AlgebraElement acc = evaluate_in(x.children.front(), n, default_variant);
    for (std::size_t i = 1; i < x.children.size(); ++i)
      acc = pbw::multiply(acc, evaluate_in(x.children[i], n, default_variant));
    return acc;
  }
  case NodeKind::Power:
    return pbw::power(evaluate_in(x.children.front(), n, default_variant), x.exponent);
  }
  return AlgebraElement::zero(n, default_variant);
}

} // namespace

} // namespace uqso::expr
