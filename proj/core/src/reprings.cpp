#include "k0ring/reprings.hpp"

#include <map>
#include <mutex>

namespace k0 {

LaurentPolynomial g_normal_form(const LaurentPolynomial& poly) {
  const auto alpha = alphabets::g_classes();
  if (!same_alphabet(poly.alphabet(), alpha))
    throw AlphabetMismatch("GClass expects a polynomial over {eps,lam~,gam~}");
  LaurentPolynomial out(alpha);
  for (const auto& [e, c] : poly.terms()) {
    Exponents r = e;
    // gam^2 -> 1 (gam^-1 = gam), then eps*gam -> eps.
    r[2] = ((r[2] % 2) + 2) % 2;
    if (r[0] > 0) r[2] = 0;
    out.add_term(r, c);
  }
  return out;
}

GClass::GClass(const LaurentPolynomial& poly) : poly_(g_normal_form(poly)) {}

GClass GClass::parse(std::string_view text) {
  return GClass(LaurentPolynomial::parse(alphabets::g_classes(), text));
}
GClass GClass::one() { return GClass(LaurentPolynomial::constant(alphabets::g_classes(), 1)); }
GClass GClass::eps() { return GClass(LaurentPolynomial::variable(alphabets::g_classes(), "eps")); }
GClass GClass::gam() { return GClass(LaurentPolynomial::variable(alphabets::g_classes(), "gam")); }
GClass GClass::lam(int power) {
  return GClass(LaurentPolynomial::monomial(alphabets::g_classes(), {0, power, 0}));
}

GClass& GClass::operator+=(const GClass& o) {
  poly_ += o.poly_;
  return *this;
}
GClass& GClass::operator-=(const GClass& o) {
  poly_ -= o.poly_;
  return *this;
}
GClass& GClass::operator*=(const GClass& o) {
  poly_ = g_normal_form(poly_ * o.poly_);
  return *this;
}

namespace {

struct WTable {
  std::mutex mu;
  std::map<int, GClass> values;
};

WTable& w_table() {
  static WTable t;
  return t;
}

}  // namespace

GClass w_class(int n) {
  if (n < 0) return GClass::lam(n) * w_class(-n);
  auto& t = w_table();
  std::lock_guard lock(t.mu);
  if (auto it = t.values.find(n); it != t.values.end()) return it->second;
  if (t.values.empty()) {
    t.values.emplace(0, GClass::one() + GClass::gam());
    t.values.emplace(1, GClass::eps());
  }
  const GClass lam_gam = GClass::lam() * GClass::gam();
  for (int k = static_cast<int>(t.values.size()); k <= n; ++k) {
    GClass next = GClass::eps() * t.values.at(k - 1) - lam_gam * t.values.at(k - 2);
    t.values.emplace(k, std::move(next));
  }
  return t.values.at(n);
}

GClass det_class(int n) {
  return n % 2 == 0 ? GClass::gam() * GClass::lam(n) : GClass::lam(n);
}

TwoDimBundleClass bundle(int n) { return {w_class(n), det_class(n), n}; }

GClass dual_w_class(int n) { return GClass::lam(-n) * w_class(n); }

GClass induce_character(int m, int n) {
  if (m == n) return det_class(m) * w_class(0);
  return det_class(n) * w_class(m - n);
}

LaurentPolynomial restrict_to_torus(const GClass& c) {
  const auto ab = alphabets::characters();
  const auto a = LaurentPolynomial::variable(ab, "a");
  const auto b = LaurentPolynomial::variable(ab, "b");
  const auto e1 = a + b;
  LaurentPolynomial out(ab);
  for (const auto& [e, coeff] : c.poly().terms())
    out += e1.pow(e[0]).shifted({e[1], e[1]}) * coeff;
  return out;
}

GClass euler_lambda_minus1_dual(const std::vector<int>& indices) {
  GClass result = GClass::one();
  for (int n : indices) result *= GClass::one() - dual_w_class(n) + det_class(-n);
  return result;
}

BoundaryRelations boundary_relations_r1_r2() {
  const GClass g = GClass::gam();
  auto tail = [&](int a, int b, int c) {
    return GClass::lam(-4) * w_class(a) + GClass::lam(-6) * w_class(b) -
           GClass::lam(-10) * w_class(c);
  };
  GClass r1 = GClass::one() + g - g * tail(4, 6, 10);
  GClass r2 = GClass::eps() - g * tail(5, 7, 11);
  return {std::move(r1), std::move(r2)};
}

GClass induce(const LaurentPolynomial& f) {
  if (!same_alphabet(f.alphabet(), alphabets::characters()))
    throw AlphabetMismatch("induce expects a polynomial over {a~,b~}");
  GClass out(LaurentPolynomial(alphabets::g_classes()));
  for (const auto& [e, c] : f.terms()) {
    GClass term = induce_character(e[0], e[1]);
    out += GClass(term.poly() * c);
  }
  return out;
}

}  // namespace k0
