#include "uqso/pbw.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <sstream>

namespace uqso::pbw {

std::string_view variant_name(Variant v) { return v == Variant::Plus ? "plus" : "minus"; }

std::pair<int, int> generator_at(int index) {
  int row = 2;
  while (generator_index(row + 1, 1) <= index)
    ++row;
  return {row, index - generator_index(row, 1) + 1};
}

std::string generator_name(int row, int col, Variant v) {
  std::string digits = std::to_string(row) + std::to_string(col);
  if (v == Variant::Minus && row != col + 1)
    return "Im" + digits;
  return "I" + digits;
}

namespace {

void require_rank(int n) {
  if (n < 3)
    fail(ErrorKind::InvalidArgument, "U'_q(so_n) needs n >= 3, got n = " + std::to_string(n));
  if (n > 20)
    fail(ErrorKind::InvalidArgument, "rank n = " + std::to_string(n) + " exceeds the supported maximum 20");
}

void require_generator(int n, int row, int col) {
  if (!(n >= row && row > col && col >= 1))
    fail(ErrorKind::IndexOutOfRange, "generator I(" + std::to_string(row) + "," +
                                         std::to_string(col) + ") requires n >= k > l >= 1 with n = " +
                                         std::to_string(n));
}

Letter letter(int row, int col) { return static_cast<Letter>(generator_index(row, col)); }

} // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Word word) : word_(std::move(word)) {
  if (!std::is_sorted(word_.begin(), word_.end()))
    fail(ErrorKind::InvalidArgument, "monomial word is not in PBW order");
}

std::vector<std::pair<GeneratorId, int>> Monomial::factors(Variant v) const {
  std::vector<std::pair<GeneratorId, int>> out;
  for (Letter x : word_) {
    auto [row, col] = generator_at(x);
    if (!out.empty() && out.back().first.row == row && out.back().first.col == col)
      ++out.back().second;
    else
      out.push_back({GeneratorId{row, col, v}, 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Straightening rules

std::string_view pair_class_name(PairClass c) {
  switch (c) {
  case PairClass::ChainKlLm: return "chain I_kl*I_lm";
  case PairClass::ChainKlKm: return "chain I_kl*I_km";
  case PairClass::ChainKmLm: return "chain I_km*I_lm";
  case PairClass::DisjointNested: return "disjoint I_wx*I_yz";
  case PairClass::DisjointEnclosing: return "disjoint I_wz*I_xy";
  case PairClass::Crossing: return "crossing I_wy*I_xz";
  }
  return "?";
}

PairClass classify_pair(std::pair<int, int> x, std::pair<int, int> y) {
  if (generator_index(x.first, x.second) <= generator_index(y.first, y.second))
    fail(ErrorKind::InvalidArgument, "classify_pair expects X > Y in PBW order");
  std::array<int, 4> idx{x.first, x.second, y.first, y.second};
  std::sort(idx.begin(), idx.end(), std::greater<>());
  auto last = std::unique(idx.begin(), idx.end());
  long distinct = last - idx.begin();
  if (distinct == 3) {
    int k = idx[0], l = idx[1], m = idx[2];
    if (x == std::pair{k, l} && y == std::pair{l, m})
      return PairClass::ChainKlLm;
    if (x == std::pair{k, l} && y == std::pair{k, m})
      return PairClass::ChainKlKm;
    if (x == std::pair{k, m} && y == std::pair{l, m})
      return PairClass::ChainKmLm;
  } else if (distinct == 4) {
    int w = idx[0], xx = idx[1], yy = idx[2], z = idx[3];
    if (x == std::pair{w, xx} && y == std::pair{yy, z})
      return PairClass::DisjointNested;
    if (x == std::pair{w, z} && y == std::pair{xx, yy})
      return PairClass::DisjointEnclosing;
    if (x == std::pair{w, yy} && y == std::pair{xx, z})
      return PairClass::Crossing;
  }
  // Unreachable for valid generators; X > Y excludes the other orientations.
  fail(ErrorKind::InvalidArgument, "unclassifiable generator pair");
}

StraighteningRules::StraighteningRules(int n, Variant v)
    : n_(n), variant_(v), count_(generator_count(n)),
      table_(static_cast<std::size_t>(count_) * count_) {
  const int s = variant_sign(v);
  // q^{e/2} in the variant's own q: exponents flip for I^-.
  auto qh = [s](int e, long c = 1) { return LaurentPoly::monomial(s * e, Rational(c)); };
  for (int a = 0; a < count_; ++a) {
    for (int b = 0; b < a; ++b) {
      auto x = generator_at(a);
      auto y = generator_at(b);
      std::vector<RewriteTerm>& out = table_[static_cast<std::size_t>(a) * count_ + b];
      const Word swapped{static_cast<Letter>(b), static_cast<Letter>(a)};
      std::array<int, 4> idx{x.first, x.second, y.first, y.second};
      std::sort(idx.begin(), idx.end(), std::greater<>());
      std::unique(idx.begin(), idx.end());
      switch (classify_pair(x, y)) {
      case PairClass::ChainKlLm:
        // [I_lm, I_kl]_q = I_km
        out.push_back({qh(2), swapped});
        out.push_back({qh(1, -1), {letter(idx[0], idx[2])}});
        break;
      case PairClass::ChainKlKm:
        // [I_kl, I_km]_q = I_lm
        out.push_back({qh(-2), swapped});
        out.push_back({qh(-1), {letter(idx[1], idx[2])}});
        break;
      case PairClass::ChainKmLm:
        // [I_km, I_lm]_q = I_kl
        out.push_back({qh(-2), swapped});
        out.push_back({qh(-1), {letter(idx[0], idx[1])}});
        break;
      case PairClass::DisjointNested:
      case PairClass::DisjointEnclosing:
        out.push_back({LaurentPoly(1), swapped});
        break;
      case PairClass::Crossing: {
        // [I_wy, I_xz] = (q - q^{-1}) (I_yz I_wx - I_wz I_xy)
        int w = idx[0], xx = idx[1], yy = idx[2], z = idx[3];
        LaurentPoly d = qh(2) - qh(-2);
        out.push_back({LaurentPoly(1), swapped});
        out.push_back({d, {letter(yy, z), letter(w, xx)}});
        out.push_back({-d, {letter(w, z), letter(xx, yy)}});
        break;
      }
      }
    }
  }
}

const StraighteningRules& straightening_rules(int n, Variant v) {
  static std::mutex mutex;
  static std::map<std::pair<int, Variant>, std::unique_ptr<StraighteningRules>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, v}];
  if (!slot)
    slot = std::make_unique<StraighteningRules>(n, v);
  return *slot;
}

// ---------------------------------------------------------------------------
// Normal form

namespace {

// Degree first, then lexicographic. Every rule's left side X*Y is greater
// than each word on its right side, and the order is compatible with
// concatenation, so popping the greatest pending word processes each word
// exactly once.
struct DegLexGreater {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size())
      return a.size() > b.size();
    return a > b;
  }
};

using Pending = std::map<Word, LaurentPoly, DegLexGreater>;

void accumulate(Pending& pending, Word word, const LaurentPoly& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = pending.try_emplace(std::move(word), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      pending.erase(it);
  }
}

AlgebraElement::TermMap straighten(Pending pending, const StraighteningRules& rules) {
  AlgebraElement::TermMap result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word& w = node.key();
    const LaurentPoly& c = node.mapped();
    std::size_t i = 0;
    while (i + 1 < w.size() && w[i] <= w[i + 1])
      ++i;
    if (i + 1 >= w.size()) {
      result.emplace(Monomial(std::move(w)), c);
      continue;
    }
    for (const RewriteTerm& r : rules.rule(w[i], w[i + 1])) {
      Word next;
      next.reserve(w.size());
      next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(i));
      next.insert(next.end(), r.letters.begin(), r.letters.end());
      next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      accumulate(pending, std::move(next), c * r.coeff);
    }
  }
  return result;
}

} // namespace

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(int n, Variant v) : n_(n), variant_(v) { require_rank(n); }

AlgebraElement AlgebraElement::scalar(int n, Variant v, const LaurentPoly& c) {
  AlgebraElement e(n, v);
  if (!c.is_zero())
    e.terms_.emplace(Monomial(), c);
  return e;
}

AlgebraElement AlgebraElement::generator(int n, int row, int col, Variant v) {
  require_rank(n);
  require_generator(n, row, col);
  AlgebraElement e(n, v);
  e.terms_.emplace(Monomial(Word{letter(row, col)}), LaurentPoly(1));
  return e;
}

AlgebraElement AlgebraElement::from_word(int n, Variant v, const Word& word, const LaurentPoly& c) {
  AlgebraElement e(n, v);
  for (Letter x : word)
    if (x >= generator_count(n))
      fail(ErrorKind::IndexOutOfRange, "letter outside the generator range for n = " + std::to_string(n));
  Pending pending;
  accumulate(pending, word, c);
  e.terms_ = straighten(std::move(pending), straightening_rules(n, v));
  return e;
}

int AlgebraElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    d = std::max(d, m.degree());
  return d;
}

LaurentPoly AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (n_ != other.n_)
    fail(ErrorKind::RankMismatch, "elements of U'_q(so_" + std::to_string(n_) + ") and U'_q(so_" +
                                      std::to_string(other.n_) + ") cannot be combined");
  if (variant_ != other.variant_)
    fail(ErrorKind::VariantMismatch, "cannot combine I^+ and I^- elements");
}

void AlgebraElement::add_term(const Monomial& m, const LaurentPoly& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement e = *this;
  for (auto& [m, c] : e.terms_)
    c = -c;
  return e;
}

AlgebraElement AlgebraElement::scaled(const LaurentPoly& c) const {
  AlgebraElement e(n_, variant_);
  if (c.is_zero())
    return e;
  for (const auto& [m, coeff] : terms_)
    e.terms_.emplace_hint(e.terms_.end(), m, coeff * c);
  return e;
}

std::map<Monomial, Rational> AlgebraElement::coefficients_at_one() const {
  std::map<Monomial, Rational> out;
  for (const auto& [m, c] : terms_) {
    Rational v = c.at_one();
    if (v != 0)
      out.emplace(m, v);
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.n_ == b.n_ && a.variant_ == b.variant_ && a.terms_ == b.terms_;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

std::string AlgebraElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (const auto& [g, e] : m.factors(variant_)) {
      if (!mono.empty())
        mono += "*";
      mono += generator_name(g.row, g.col, variant_);
      if (e > 1)
        mono += "^" + std::to_string(e);
    }
    bool negative = false;
    std::string coeff;
    if (c.size() == 1) {
      const auto& [e, r] = c.terms().front();
      negative = sgn(r) < 0;
      Rational mag = abs(r);
      std::string qp = q_power_text(e);
      if (qp.empty())
        coeff = (mag == 1 && !mono.empty()) ? "" : mag.get_str();
      else
        coeff = mag == 1 ? qp : mag.get_str() + "*" + qp;
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    out += coeff;
    if (!coeff.empty() && !mono.empty())
      out += "*";
    out += mono;
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  AlgebraElement out(a.n_, a.variant_);
  if (a.is_zero() || b.is_zero())
    return out;
  Pending pending;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Word w;
      w.reserve(ma.word().size() + mb.word().size());
      w.insert(w.end(), ma.word().begin(), ma.word().end());
      w.insert(w.end(), mb.word().begin(), mb.word().end());
      accumulate(pending, std::move(w), ca * cb);
    }
  }
  out.terms_ = straighten(std::move(pending), straightening_rules(a.n_, a.variant_));
  return out;
}

AlgebraElement power(const AlgebraElement& a, int e) {
  if (e < 0)
    fail(ErrorKind::InvalidArgument, "negative powers are not defined");
  AlgebraElement r = AlgebraElement::scalar(a.n(), a.variant(), 1);
  for (int i = 0; i < e; ++i)
    r = multiply(r, a);
  return r;
}

AlgebraElement q_commutator(const AlgebraElement& a, const AlgebraElement& b) {
  const int s = variant_sign(a.variant());
  return multiply(a, b).scaled(LaurentPoly::monomial(s)) - multiply(b, a).scaled(LaurentPoly::monomial(-s));
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

AlgebraElement build_Ikl(int n, int k, int l, Variant v) {
  require_rank(n);
  require_generator(n, k, l);
  if (k == l + 1)
    return AlgebraElement::generator(n, k, l, v);
  return q_commutator(AlgebraElement::generator(n, l + 1, l, v), build_Ikl(n, k, l + 1, v));
}

// ---------------------------------------------------------------------------
// Verification

bool RelationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.exact_zero(); });
}

bool ClassicalLimitReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClassicalLimitCheck& c) { return c.pass(); });
}

namespace {

// X^2 Y - b X Y X + Y X^2 + Y with the middle coefficient b.
AlgebraElement cubic_relation(const AlgebraElement& x, const AlgebraElement& y, const LaurentPoly& b) {
  AlgebraElement xx = multiply(x, x);
  return multiply(xx, y) - multiply(multiply(x, y), x).scaled(b) + multiply(y, xx) + y;
}

template <typename Fn>
RelationReport defining_relations(int n, Variant v, const LaurentPoly& middle, Fn&& finish) {
  require_rank(n);
  RelationReport report;
  auto gen = [&](int i) { return AlgebraElement::generator(n, i, i - 1, v); };
  const std::string b = middle == LaurentPoly(2) ? "2" : "[2]";
  for (int i = 2; i < n; ++i) {
    auto x = gen(i);
    auto y = gen(i + 1);
    std::string xs = generator_name(i, i - 1, v), ys = generator_name(i + 1, i, v);
    report.checks.push_back({xs + "^2*" + ys + " - " + b + "*" + xs + "*" + ys + "*" + xs + " + " + ys + "*" +
                                 xs + "^2 + " + ys,
                             finish(cubic_relation(x, y, middle))});
    report.checks.push_back({ys + "^2*" + xs + " - " + b + "*" + ys + "*" + xs + "*" + ys + " + " + xs + "*" +
                                 ys + "^2 + " + xs,
                             finish(cubic_relation(y, x, middle))});
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      std::string xs = generator_name(i, i - 1, v), ys = generator_name(j, j - 1, v);
      report.checks.push_back({xs + "*" + ys + " - " + ys + "*" + xs, finish(commutator(gen(i), gen(j)))});
    }
  }
  return report;
}

AlgebraElement specialize_at_one(const AlgebraElement& e) {
  AlgebraElement out = AlgebraElement::zero(e.n(), e.variant());
  for (const auto& [m, c] : e.coefficients_at_one())
    out += AlgebraElement::from_word(e.n(), e.variant(), m.word(), LaurentPoly(c));
  return out;
}

} // namespace

RelationReport verify_defining_relations(int n, Variant v) {
  LaurentPoly b = LaurentPoly::monomial(2) + LaurentPoly::monomial(-2);
  return defining_relations(n, v, b, [](AlgebraElement e) { return e; });
}

RelationReport verify_classical_defining_relations(int n, Variant v) {
  return defining_relations(n, v, LaurentPoly(2), specialize_at_one);
}

RelationReport verify_commutation_relations(int n, Variant v) {
  require_rank(n);
  const int s = variant_sign(v);
  RelationReport report;
  std::map<std::pair<int, int>, AlgebraElement> cache;
  auto I = [&](int k, int l) -> const AlgebraElement& {
    auto it = cache.find({k, l});
    if (it == cache.end())
      it = cache.emplace(std::pair{k, l}, build_Ikl(n, k, l, v)).first;
    return it->second;
  };
  auto name = [&](int k, int l) { return generator_name(k, l, v); };
  const std::string qc = v == Variant::Plus ? "]_q" : "]_{q^-1}";

  for (int k = n; k >= 3; --k)
    for (int l = k - 1; l >= 2; --l)
      for (int m = l - 1; m >= 1; --m) {
        report.checks.push_back({"[" + name(l, m) + "," + name(k, l) + qc + " - " + name(k, m),
                                 q_commutator(I(l, m), I(k, l)) - I(k, m)});
        report.checks.push_back({"[" + name(k, l) + "," + name(k, m) + qc + " - " + name(l, m),
                                 q_commutator(I(k, l), I(k, m)) - I(l, m)});
        report.checks.push_back({"[" + name(k, m) + "," + name(l, m) + qc + " - " + name(k, l),
                                 q_commutator(I(k, m), I(l, m)) - I(k, l)});
      }

  const LaurentPoly d = LaurentPoly::monomial(2 * s) - LaurentPoly::monomial(-2 * s);
  const std::string ds = v == Variant::Plus ? "(q - q^-1)" : "(q^-1 - q)";
  for (int w = n; w >= 4; --w)
    for (int x = w - 1; x >= 3; --x)
      for (int y = x - 1; y >= 2; --y)
        for (int z = y - 1; z >= 1; --z) {
          report.checks.push_back({"[" + name(w, x) + "," + name(y, z) + "]", commutator(I(w, x), I(y, z))});
          report.checks.push_back({"[" + name(w, z) + "," + name(x, y) + "]", commutator(I(w, z), I(x, y))});
          AlgebraElement rhs = (multiply(I(y, z), I(w, x)) - multiply(I(w, z), I(x, y))).scaled(d);
          report.checks.push_back({"[" + name(w, y) + "," + name(x, z) + "] - " + ds + "*(" + name(y, z) + "*" +
                                       name(w, x) + " - " + name(w, z) + "*" + name(x, y) + ")",
                                   commutator(I(w, y), I(x, z)) - rhs});
        }
  return report;
}

namespace {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix mat_zero(int n) { return IntMatrix(n, std::vector<long>(n, 0)); }

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size());
  IntMatrix c = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j)
          c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix mat_axpy(const IntMatrix& a, long s, const IntMatrix& b) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      c[i][j] += s * b[i][j];
  return c;
}

} // namespace

ClassicalLimitReport verify_classical_limit(int n, Variant v) {
  require_rank(n);
  const StraighteningRules& rules = straightening_rules(n, v);
  const int count = generator_count(n);

  // Vector representation of so_n at q = 1: adjacent generators are
  // E_{k,k-1} - E_{k-1,k}; the rest follow the q = 1 recursion.
  std::vector<IntMatrix> image(count);
  for (int k = 2; k <= n; ++k) {
    IntMatrix m = mat_zero(n);
    m[k - 1][k - 2] = 1;
    m[k - 2][k - 1] = -1;
    image[generator_index(k, k - 1)] = m;
  }
  for (int gap = 2; gap < n; ++gap)
    for (int l = 1; l + gap <= n; ++l) {
      int k = l + gap;
      const IntMatrix& a = image[generator_index(l + 1, l)];
      const IntMatrix& b = image[generator_index(k, l + 1)];
      image[generator_index(k, l)] = mat_axpy(mat_mul(a, b), -1, mat_mul(b, a));
    }

  ClassicalLimitReport report;
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < a; ++b) {
      auto [xr, xc] = generator_at(a);
      auto [yr, yc] = generator_at(b);
      ClassicalLimitCheck check;
      check.rule = generator_name(xr, xc, v) + "*" + generator_name(yr, yc, v) + " (" +
                   std::string(pair_class_name(classify_pair({xr, xc}, {yr, yc}))) + ")";
      IntMatrix lhs = mat_mul(image[a], image[b]);
      IntMatrix rhs = mat_zero(n);
      bool integral = true;
      for (const RewriteTerm& t : rules.rule(static_cast<Letter>(a), static_cast<Letter>(b))) {
        Rational c = t.coeff.at_one();
        if (t.letters == Word{static_cast<Letter>(b), static_cast<Letter>(a)})
          check.swap_coefficient_is_one = (c == 1);
        if (c.get_den() != 1) {
          integral = false;
          continue;
        }
        IntMatrix term = mat_zero(n);
        for (int i = 0; i < n; ++i)
          term[i][i] = 1;
        for (Letter x : t.letters)
          term = mat_mul(term, image[x]);
        rhs = mat_axpy(rhs, c.get_num().get_si(), term);
      }
      check.matrix_identity_holds = integral && lhs == rhs;
      report.checks.push_back(std::move(check));
    }
  return report;
}

AlgebraElement random_monomial(int n, Variant v, int degree, Rng& rng) {
  const int count = generator_count(n);
  const int total = 1 + static_cast<int>(rng.index(static_cast<std::uint64_t>(degree)));
  std::vector<int> exps(count, 0);
  Word word;
  while (static_cast<int>(word.size()) < total) {
    int g = static_cast<int>(rng.index(static_cast<std::uint64_t>(count)));
    if (exps[g] == 2)
      continue;
    ++exps[g];
    word.push_back(static_cast<Letter>(g));
  }
  std::sort(word.begin(), word.end());
  static const std::array<std::pair<int, int>, 6> coeffs{
      {{0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  auto [e, c] = coeffs[rng.index(coeffs.size())];
  AlgebraElement m(n, v);
  return AlgebraElement::from_word(n, v, word, LaurentPoly::monomial(e, Rational(c)));
}

FuzzReport associativity_fuzz(int n, int degree, int trials, std::uint64_t seed, Variant v) {
  require_rank(n);
  if (degree < 1)
    fail(ErrorKind::InvalidArgument, "fuzz degree must be >= 1");
  Rng rng(seed);
  FuzzReport report;
  for (int t = 0; t < trials; ++t) {
    AlgebraElement a = random_monomial(n, v, degree, rng);
    AlgebraElement b = random_monomial(n, v, degree, rng);
    AlgebraElement c = random_monomial(n, v, degree, rng);
    ++report.trials;
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
      ++report.failures;
      if (report.witnesses.size() < 5)
        report.witnesses.push_back("(" + a.to_string() + ") (" + b.to_string() + ") (" + c.to_string() + ")");
    }
  }
  return report;
}

} // namespace uqso::pbw
