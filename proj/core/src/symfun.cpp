#include "k0ring/symfun.hpp"

#include <deque>
#include <mutex>

namespace k0 {

SymmetricExpression::SymmetricExpression(LaurentPolynomial poly) : poly_(std::move(poly)) {
  if (!same_alphabet(poly_.alphabet(), alphabets::symmetric()))
    throw AlphabetMismatch("symmetric expressions live over {e1,e2~}");
}

SymmetricExpression SymmetricExpression::parse(std::string_view text) {
  return SymmetricExpression(LaurentPolynomial::parse(alphabets::symmetric(), text));
}

namespace {

// Deque keeps references stable while the table grows.
struct HTable {
  std::mutex mu;
  std::deque<LaurentPolynomial> values;  // values[n] = h_n
};

HTable& h_table() {
  static HTable t;
  return t;
}

}  // namespace

const LaurentPolynomial& h(int n) {
  if (n < -1) throw DomainError("h_n needs n >= -1, got " + std::to_string(n));
  static const LaurentPolynomial zero(alphabets::symmetric());
  if (n == -1) return zero;
  auto& t = h_table();
  std::lock_guard lock(t.mu);
  const auto alpha = alphabets::symmetric();
  const auto e1 = LaurentPolynomial::variable(alpha, "e1");
  const auto e2 = LaurentPolynomial::variable(alpha, "e2");
  while (t.values.size() <= static_cast<std::size_t>(n)) {
    const std::size_t k = t.values.size();
    if (k == 0) {
      t.values.push_back(LaurentPolynomial::constant(alpha, 1));
    } else if (k == 1) {
      t.values.push_back(e1);
    } else {
      t.values.push_back(e1 * t.values[k - 1] - e2 * t.values[k - 2]);
    }
  }
  return t.values[static_cast<std::size_t>(n)];
}

SymmetricExpression complete_homogeneous(int n) { return SymmetricExpression(h(n)); }

LaurentPolynomial to_characters(const SymmetricExpression& s) {
  const auto ab = alphabets::characters();
  const auto a = LaurentPolynomial::variable(ab, "a");
  const auto b = LaurentPolynomial::variable(ab, "b");
  const auto e1 = a + b;
  const auto e2 = a * b;
  LaurentPolynomial out(ab);
  std::map<int, LaurentPolynomial> e1_pow;
  for (const auto& [e, c] : s.poly().terms()) {
    auto it = e1_pow.find(e[0]);
    if (it == e1_pow.end()) it = e1_pow.emplace(e[0], e1.pow(e[0])).first;
    out += (it->second * e2.pow(e[1])) * c;
  }
  return out;
}

SymmetricExpression from_characters(const LaurentPolynomial& f) {
  const auto ab = alphabets::characters();
  if (!same_alphabet(f.alphabet(), ab))
    throw AlphabetMismatch("from_characters expects a polynomial over {a~,b~}");
  if (!(swap_ab(f) == f)) throw NotSymmetric("not a<->b symmetric: " + f.to_string());

  const auto sym = alphabets::symmetric();
  LaurentPolynomial result(sym);
  if (f.is_zero()) return SymmetricExpression(result);

  // Clear negative exponents with a power of e2 = ab.
  const int m = std::max(0, -std::min(f.min_exponent(0), f.min_exponent(1)));
  LaurentPolynomial rem = f.shifted({m, m});

  const auto a = LaurentPolynomial::variable(ab, "a");
  const auto b = LaurentPolynomial::variable(ab, "b");
  const auto e1 = a + b;
  std::map<int, LaurentPolynomial> e1_pow;
  while (!rem.is_zero()) {
    // Lex-leading term a^p b^q; symmetry forces p >= q.
    const auto [lead, c] = *rem.terms().rbegin();
    const int p = lead[0], q = lead[1];
    if (p < q) throw NotSymmetric("leading term violates symmetry");
    auto it = e1_pow.find(p - q);
    if (it == e1_pow.end()) it = e1_pow.emplace(p - q, e1.pow(p - q)).first;
    rem -= it->second.shifted({q, q}) * c;
    result.add_term({p - q, q - m}, c);
  }
  return SymmetricExpression(result);
}

LaurentPolynomial from_characters_graded(const LaurentPolynomial& f, std::string_view var,
                                         const AlphabetPtr& target) {
  const auto& alpha = f.alphabet();
  const std::size_t iv = alpha->index(var);
  const std::size_t ia = alpha->index("a");
  const std::size_t ib = alpha->index("b");
  std::map<int, LaurentPolynomial> slices;
  const auto ab = alphabets::characters();
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != iv && i != ia && i != ib && e[i] != 0)
        throw DomainError("unexpected variable in graded conversion");
    auto it = slices.try_emplace(e[iv], ab).first;
    it->second.add_term({e[ia], e[ib]}, c);
  }
  const std::size_t t1 = target->index("e1"), t2 = target->index("e2"),
                    tv = target->index(var);
  LaurentPolynomial out(target);
  for (const auto& [k, slice] : slices) {
    const auto s = from_characters(slice);
    for (const auto& [e, c] : s.poly().terms()) {
      Exponents te(target->size(), 0);
      te[t1] = e[0];
      te[t2] = e[1];
      te[tv] = k;
      out.add_term(te, c);
    }
  }
  return out;
}

}  // namespace k0
