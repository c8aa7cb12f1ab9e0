#pragma once

// Surface syntax for algebra elements:
//   sum   := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' digits)?
//   atom  := digits ('/' digits)? | 'q' ('^' (digits | '(' '-'? digits ('/' '2')? ')'))?
//          | ('I' | 'Ip' | 'Im') digit digit | '(' sum ')'

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uqso/pbw.hpp"

namespace uqso::expr {

enum class NodeKind { Rational, QPow, Generator, Neg, Sum, Product, Power };
enum class GeneratorVariant { Default, Plus, Minus };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  Rational value;    // Rational
  int twice = 0;     // QPow: q^{twice/2}
  int row = 0;       // Generator
  int col = 0;
  GeneratorVariant variant = GeneratorVariant::Default;
  int exponent = 0;  // Power
  std::vector<NodePtr> children; // Neg, Power: one; Sum, Product: two or more

  static NodePtr rational(Rational v);
  static NodePtr qpow(int twice);
  static NodePtr generator(int row, int col, GeneratorVariant v);
  static NodePtr neg(NodePtr child);
  static NodePtr sum(std::vector<NodePtr> children);
  static NodePtr product(std::vector<NodePtr> children);
  static NodePtr power(NodePtr base, int exponent);
};

/// Parses src for rank n. Throws SyntaxError (with line and column) or
/// Error(IndexError) when a generator index violates n >= k > l >= 1.
NodePtr parse_expression(std::string_view src, int n);

/// Text that parses back to an equal tree.
std::string print_expression(const NodePtr& node);

/// Structural equality.
bool same_tree(const NodePtr& a, const NodePtr& b);

/// PBW normal form. Explicit Ip/Im leaves fix the variant (mixing them throws
/// VariantMismatch); otherwise `I<k><l>` leaves take the default.
pbw::AlgebraElement evaluate(const NodePtr& node, int n, pbw::Variant default_variant = pbw::Variant::Plus);

} // namespace uqso::expr
