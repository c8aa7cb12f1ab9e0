#pragma once

// Elements of U'_q(so_n) in the PBW basis of ordered monomials in the
// generators I^+_{kl} (or I^-_{kl}), k > l, and multiplication by
// straightening.
//
// Generators are ordered by (row, col) ascending:
//   I21 < I31 < I32 < I41 < I42 < I43 < ...
// A monomial is a non-decreasing word in this order.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uqso/coeffring.hpp"
#include "uqso/random.hpp"

namespace uqso::pbw {

enum class Variant { Plus, Minus };

/// +1 for I^+, -1 for I^-; the minus variant is the plus variant with q -> q^{-1}.
inline int variant_sign(Variant v) { return v == Variant::Plus ? 1 : -1; }
std::string_view variant_name(Variant v);

struct GeneratorId {
  int row = 0;
  int col = 0;
  Variant variant = Variant::Plus;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// Number of generators I_{kl}, n >= k > l >= 1.
constexpr int generator_count(int n) { return n * (n - 1) / 2; }
/// Position of I_{row,col} in the PBW order (0-based).
constexpr int generator_index(int row, int col) { return (row - 1) * (row - 2) / 2 + (col - 1); }
/// Inverse of generator_index: (row, col).
std::pair<int, int> generator_at(int index);
/// "I31" for the plus variant, "Im31" for non-adjacent minus generators.
std::string generator_name(int row, int col, Variant v);

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

class Monomial {
public:
  Monomial() = default;
  /// Takes a non-decreasing word of generator indices.
  explicit Monomial(Word word);

  const Word& word() const { return word_; }
  int degree() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  /// (generator, multiplicity) pairs in PBW order.
  std::vector<std::pair<GeneratorId, int>> factors(Variant v) const;

  /// Lexicographic on the word; this is the printing order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  Word word_;
};

class AlgebraElement {
public:
  using TermMap = std::map<Monomial, LaurentPoly>;

  AlgebraElement(int n, Variant v);

  static AlgebraElement zero(int n, Variant v) { return {n, v}; }
  static AlgebraElement scalar(int n, Variant v, const LaurentPoly& c);
  /// The basis generator I^{v}_{row,col}.
  static AlgebraElement generator(int n, int row, int col, Variant v);
  /// Normal form of c * (product of the letters of an arbitrary word).
  static AlgebraElement from_word(int n, Variant v, const Word& word, const LaurentPoly& c = 1);

  int n() const { return n_; }
  Variant variant() const { return variant_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest monomial degree; -1 for zero.
  int degree() const;
  /// Coefficient of a monomial, zero if absent.
  LaurentPoly coefficient(const Monomial& m) const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement operator-() const;
  AlgebraElement scaled(const LaurentPoly& c) const;
  /// Applies q -> value to every coefficient; classical-limit checks use q = 1.
  std::map<Monomial, Rational> coefficients_at_one() const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& a) { return a.scaled(c); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Canonical text, e.g. "q*I21*I32 - q^(1/2)*I31".
  std::string to_string() const;

private:
  friend AlgebraElement multiply(const AlgebraElement&, const AlgebraElement&);
  void check_compatible(const AlgebraElement& other) const;
  void add_term(const Monomial& m, const LaurentPoly& c);

  int n_;
  Variant variant_;
  TermMap terms_;
};

/// Product in PBW normal form. Throws RankMismatch / VariantMismatch.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Integer power by repeated multiplication; e >= 0.
AlgebraElement power(const AlgebraElement& a, int e);

/// q^{s/2} A B - q^{-s/2} B A with s = variant_sign; the q-commutator
/// [A,B]_q for I^+ and [A,B]_{q^{-1}} for I^-.
AlgebraElement q_commutator(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

/// I^{v}_{kl} via I_{kl} = [I_{l+1,l}, I_{k,l+1}]_{q^{+-1}}, normalized.
AlgebraElement build_Ikl(int n, int k, int l, Variant v);

// ---------------------------------------------------------------------------
// Straightening rules

/// Configuration of an out-of-order pair X*Y (X > Y in PBW order).
/// With k > l > m for three indices and w > x > y > z for four:
enum class PairClass {
  ChainKlLm,         // X = I_kl, Y = I_lm
  ChainKlKm,         // X = I_kl, Y = I_km
  ChainKmLm,         // X = I_km, Y = I_lm
  DisjointNested,    // X = I_wx, Y = I_yz
  DisjointEnclosing, // X = I_wz, Y = I_xy
  Crossing,          // X = I_wy, Y = I_xz
};
std::string_view pair_class_name(PairClass c);

/// Classifies a pair of distinct generators with X > Y. Throws
/// InvalidArgument for X <= Y.
PairClass classify_pair(std::pair<int, int> x, std::pair<int, int> y);

struct RewriteTerm {
  LaurentPoly coeff;
  Word letters; // length 0..2
};

/// X*Y = sum of coeff * letters, for every out-of-order pair X > Y.
class StraighteningRules {
public:
  StraighteningRules(int n, Variant v);

  int n() const { return n_; }
  Variant variant() const { return variant_; }
  const std::vector<RewriteTerm>& rule(Letter x, Letter y) const {
    return table_[static_cast<std::size_t>(x) * count_ + y];
  }

private:
  int n_;
  Variant variant_;
  int count_;
  std::vector<std::vector<RewriteTerm>> table_;
};

/// Shared, lazily built rule table for (n, variant).
const StraighteningRules& straightening_rules(int n, Variant v);

// ---------------------------------------------------------------------------
// Verification

struct RelationCheck {
  std::string relation;
  AlgebraElement residual; // normal form of lhs - rhs
  bool exact_zero() const { return residual.is_zero(); }
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

/// Reduces every defining relation (both cubic families for adjacent
/// generators, commutators for |i-j| > 1) to normal form.
RelationReport verify_defining_relations(int n, Variant v);

/// The classical relations (coefficient 2 in place of q + q^{-1}) reduced to
/// normal form and specialized at q = 1; each must vanish.
RelationReport verify_classical_defining_relations(int n, Variant v);

/// Every chain, disjoint and crossing commutation identity among the
/// derived generators I^{v}_{kl}. For Minus the identities carry q -> q^{-1}.
RelationReport verify_commutation_relations(int n, Variant v);

struct ClassicalLimitCheck {
  std::string rule;
  bool swap_coefficient_is_one = false;
  bool matrix_identity_holds = false;
  bool pass() const { return swap_coefficient_is_one && matrix_identity_holds; }
};

struct ClassicalLimitReport {
  std::vector<ClassicalLimitCheck> checks;
  bool all_pass() const;
};

/// Evaluates every straightening rule at q = 1 and checks it as an identity
/// of n x n integer matrices in the vector representation of so_n, with
/// I_{k,k-1} -> E_{k,k-1} - E_{k-1,k} and derived generators built by the
/// q = 1 recursion.
ClassicalLimitReport verify_classical_limit(int n, Variant v = Variant::Plus);

struct FuzzReport {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> witnesses; // first few failing triples
  bool all_pass() const { return failures == 0; }
};

/// Random monomial of total degree in [1, degree], exponents <= 2, with
/// coefficient in {+-1, +-q^{1/2}, +-q^{-1/2}}.
AlgebraElement random_monomial(int n, Variant v, int degree, Rng& rng);

/// Checks (a*b)*c == a*(b*c) exactly on random monomials.
FuzzReport associativity_fuzz(int n, int degree, int trials, std::uint64_t seed,
                              Variant v = Variant::Plus);

} // namespace uqso::pbw
