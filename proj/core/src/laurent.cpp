#include "k0ring/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace k0 {

// ---------------------------------------------------------------------------
// VariableAlphabet

VariableAlphabet::VariableAlphabet(std::vector<std::string> names,
                                   const std::vector<std::string>& invertible)
    : names_(std::move(names)), invertible_(names_.size(), false) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw DomainError("invalid variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
  }
  for (const auto& inv : invertible) {
    auto it = std::find(names_.begin(), names_.end(), inv);
    if (it == names_.end())
      throw DomainError("invertible variable '" + inv + "' not in alphabet");
    invertible_[static_cast<std::size_t>(it - names_.begin())] = true;
  }
}

std::optional<std::size_t> VariableAlphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableAlphabet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown variable '" + std::string(name) + "' in alphabet {" +
                    describe() + "}");
}

std::string VariableAlphabet::describe() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
    if (invertible_[i]) out += '~';
  }
  return out;
}

std::shared_ptr<const VariableAlphabet> VariableAlphabet::parse(std::string_view text) {
  std::vector<std::string> names, inv;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.back() == '~') {
      cur.pop_back();
      inv.push_back(cur);
    }
    names.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur += c;
  }
  flush();
  return make_alphabet(std::move(names), inv);
}

AlphabetPtr make_alphabet(std::vector<std::string> names,
                          const std::vector<std::string>& invertible) {
  return std::make_shared<const VariableAlphabet>(std::move(names), invertible);
}

namespace alphabets {
AlphabetPtr characters() {
  static const AlphabetPtr p = make_alphabet({"a", "b"}, {"a", "b"});
  return p;
}
AlphabetPtr characters_t() {
  static const AlphabetPtr p = make_alphabet({"a", "b", "t"}, {"a", "b", "t"});
  return p;
}
AlphabetPtr symmetric() {
  static const AlphabetPtr p = make_alphabet({"e1", "e2"}, {"e2"});
  return p;
}
AlphabetPtr symmetric_t() {
  static const AlphabetPtr p = make_alphabet({"e1", "e2", "t"}, {"e2", "t"});
  return p;
}
AlphabetPtr g_classes() {
  static const AlphabetPtr p = make_alphabet({"eps", "lam", "gam"}, {"lam", "gam"});
  return p;
}
AlphabetPtr boundary() {
  static const AlphabetPtr p = make_alphabet({"eps", "lam", "del"}, {"lam", "del"});
  return p;
}
AlphabetPtr hodge() {
  static const AlphabetPtr p = make_alphabet({"eps", "lam"}, {"lam"});
  return p;
}
}  // namespace alphabets

bool same_alphabet(const AlphabetPtr& x, const AlphabetPtr& y) {
  return x == y || (x && y && *x == *y);
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

namespace {

void require_same(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (!same_alphabet(f.alphabet(), g.alphabet()))
    throw AlphabetMismatch("alphabet mismatch: {" + f.alphabet()->describe() +
                           "} vs {" + g.alphabet()->describe() + "}");
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(AlphabetPtr alphabet)
    : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw DomainError("null alphabet");
}

LaurentPolynomial LaurentPolynomial::constant(AlphabetPtr alphabet, const mpz_class& c) {
  LaurentPolynomial p(std::move(alphabet));
  p.add_term(Exponents(p.alphabet_->size(), 0), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(AlphabetPtr alphabet, std::string_view name) {
  LaurentPolynomial p(std::move(alphabet));
  Exponents e(p.alphabet_->size(), 0);
  e[p.alphabet_->index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(AlphabetPtr alphabet, Exponents exps,
                                              const mpz_class& c) {
  LaurentPolynomial p(std::move(alphabet));
  p.add_term(exps, c);
  return p;
}

void LaurentPolynomial::check_exponents(const Exponents& exps) const {
  if (exps.size() != alphabet_->size())
    throw DomainError("exponent vector has wrong length");
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 && !alphabet_->invertible(i))
      throw DomainError("negative exponent on non-invertible variable '" +
                        alphabet_->name(i) + "'");
}

void LaurentPolynomial::add_term(const Exponents& exps, const mpz_class& c) {
  if (c == 0) return;
  check_exponents(exps);
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool LaurentPolynomial::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int LaurentPolynomial::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e.at(var));
  return m;
}

int LaurentPolynomial::max_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e.at(var));
  return m;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& g) {
  require_same(*this, g);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& g) {
  require_same(*this, g);
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& g) {
  require_same(*this, g);
  TermMap out;
  const std::size_t n = alphabet_->size();
  Exponents e(n);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      auto [it, inserted] = out.try_emplace(e, c1 * c2);
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(int n) const {
  if (n < 0) {
    if (!is_unit_monomial())
      throw DomainError("negative power of a non-unit: " + to_string());
    const auto& [e, c] = *terms_.begin();
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(alphabet_, inv, c).pow(-n);
  }
  LaurentPolynomial result = constant(alphabet_, 1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& shift) const {
  LaurentPolynomial r(alphabet_);
  Exponents e(alphabet_->size());
  for (const auto& [e0, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = e0[i] + shift.at(i);
    r.add_term(e, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::over(
    AlphabetPtr target, const std::map<std::string, std::string>& rename) const {
  const std::size_t n = alphabet_->size();
  std::vector<std::optional<std::size_t>> map(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = rename.find(alphabet_->name(i));
    const std::string& to = it == rename.end() ? alphabet_->name(i) : it->second;
    map[i] = target->find(to);
  }
  LaurentPolynomial r(target);
  Exponents e(target->size());
  for (const auto& [e0, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (e0[i] == 0) continue;
      if (!map[i])
        throw AlphabetMismatch("variable '" + alphabet_->name(i) +
                               "' has no image in {" + target->describe() + "}");
      e[*map[i]] += e0[i];
    }
    r.add_term(e, c);
  }
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool any_var = false;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars += '*';
      any_var = true;
      vars += alphabet_->name(i);
      if (e[i] != 1) vars += '^' + std::to_string(e[i]);
    }
    if (!any_var) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.get_str() + '*' + vars;
    }
  }
  return out;
}

bool operator==(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  return same_alphabet(f.alphabet_, g.alphabet_) && f.terms_ == g.terms_;
}

LaurentPolynomial operator+(LaurentPolynomial f, const LaurentPolynomial& g) {
  f += g;
  return f;
}
LaurentPolynomial operator-(LaurentPolynomial f, const LaurentPolynomial& g) {
  f -= g;
  return f;
}
LaurentPolynomial operator*(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  LaurentPolynomial r = f;
  r *= g;
  return r;
}
LaurentPolynomial operator*(LaurentPolynomial f, const mpz_class& c) {
  f *= c;
  return f;
}
LaurentPolynomial operator*(const mpz_class& c, LaurentPolynomial f) {
  f *= c;
  return f;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& f) {
  return os << f.to_string();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(const AlphabetPtr& alphabet, std::string_view text) : alphabet_(alphabet) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  LaurentPolynomial run() {
    LaurentPolynomial result(alphabet_);
    if (s_.empty()) fail("empty input");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  int parse_int_exponent() {
    bool neg = false;
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    std::string d = digits();
    if (d.empty()) fail("expected exponent");
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    int v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc()) fail("exponent out of range");
    return neg ? -v : v;
  }

  void parse_term(LaurentPolynomial& acc, int sign) {
    mpz_class coeff = 1;
    Exponents e(alphabet_->size(), 0);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = mpz_class(digits());
      have_factor = true;
    }
    while (true) {
      if (have_factor) {
        if (peek() != '*') break;
        ++pos_;
      }
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        if (have_factor) fail("expected variable");
        fail("expected term");
      }
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto idx = alphabet_->find(name);
      if (!idx) fail("unknown variable '" + name + "'");
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        power = parse_int_exponent();
      }
      e[*idx] += power;
      have_factor = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !alphabet_->invertible(i))
        fail("negative exponent on non-invertible variable '" + alphabet_->name(i) + "'");
    acc.add_term(e, sign * coeff);
  }

  const AlphabetPtr& alphabet_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(AlphabetPtr alphabet, std::string_view text) {
  return Parser(alphabet, text).run();
}

// ---------------------------------------------------------------------------
// Operations

LaurentPolynomial lp_arith(const LaurentPolynomial& f, const LaurentPolynomial& g,
                           ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return f * g;
  }
  throw DomainError("unknown arithmetic op");
}

LaurentPolynomial substitute(const LaurentPolynomial& f, std::string_view var,
                             const LaurentPolynomial& value) {
  require_same(f, value);
  const auto& alpha = f.alphabet();
  const std::size_t v = alpha->index(var);
  if (alpha->invertible(v) && !value.is_unit_monomial())
    throw NonUnitSubstitution("cannot substitute non-unit '" + value.to_string() +
                              "' for invertible variable '" + std::string(var) + "'");
  std::map<int, LaurentPolynomial> powers;
  LaurentPolynomial result(alpha);
  for (const auto& [e, c] : f.terms()) {
    Exponents rest = e;
    const int k = rest[v];
    rest[v] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
    LaurentPolynomial term = LaurentPolynomial::monomial(alpha, rest, c);
    result += term * it->second;
  }
  return result;
}

LaurentPolynomial ring_map(const LaurentPolynomial& f, AlphabetPtr target,
                           const std::map<std::string, LaurentPolynomial>& images) {
  const auto& alpha = f.alphabet();
  std::vector<LaurentPolynomial> image;
  for (std::size_t i = 0; i < alpha->size(); ++i) {
    auto it = images.find(alpha->name(i));
    if (it == images.end()) {
      image.push_back(LaurentPolynomial::variable(target, alpha->name(i)));
    } else {
      if (!same_alphabet(it->second.alphabet(), target))
        throw AlphabetMismatch("image of '" + alpha->name(i) + "' is not over {" +
                               target->describe() + "}");
      image.push_back(it->second);
    }
  }
  std::vector<std::map<int, LaurentPolynomial>> powers(alpha->size());
  LaurentPolynomial result(target);
  for (const auto& [e, c] : f.terms()) {
    LaurentPolynomial term = LaurentPolynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = powers[i].find(e[i]);
      if (it == powers[i].end()) {
        if (e[i] < 0 && !image[i].is_unit_monomial())
          throw NonUnitSubstitution("image '" + image[i].to_string() + "' of '" +
                                    alpha->name(i) + "' is not a unit");
        it = powers[i].emplace(e[i], image[i].pow(e[i])).first;
      }
      term *= it->second;
    }
    result += term;
  }
  return result;
}

LaurentPolynomial exact_divide(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  require_same(f, g);
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const auto& alpha = f.alphabet();
  LaurentPolynomial quotient(alpha);
  if (f.is_zero()) return quotient;
  const std::size_t n = alpha->size();

  // Degree in each variable is additive over an integral domain, which
  // boxes in the exponents any quotient term can have.
  std::vector<int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = f.min_exponent(i) - g.min_exponent(i);
    hi[i] = f.max_exponent(i) - g.max_exponent(i);
    if (lo[i] > hi[i])
      throw InexactDivision(g.to_string() + " does not divide " + f.to_string());
  }
  const auto& [g_lead, g_coeff] = *g.terms().rbegin();
  LaurentPolynomial rem = f;
  Exponents qe(n);
  while (!rem.is_zero()) {
    const auto& [r_lead, r_coeff] = *rem.terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      qe[i] = r_lead[i] - g_lead[i];
      if (qe[i] < lo[i] || qe[i] > hi[i] || (qe[i] < 0 && !alpha->invertible(i)))
        throw InexactDivision(g.to_string() + " does not divide " + f.to_string());
    }
    if (!mpz_divisible_p(r_coeff.get_mpz_t(), g_coeff.get_mpz_t()))
      throw InexactDivision(g.to_string() + " does not divide " + f.to_string());
    mpz_class qc = r_coeff / g_coeff;
    LaurentPolynomial step = LaurentPolynomial::monomial(alpha, qe, qc);
    quotient += step;
    rem -= step * g;
  }
  if (!(quotient * g == f)) throw InexactDivision("division check failed");
  return quotient;
}

LaurentPolynomial swap_ab(const LaurentPolynomial& f) {
  const auto& alpha = f.alphabet();
  const std::size_t ia = alpha->index("a");
  const std::size_t ib = alpha->index("b");
  if (alpha->invertible(ia) != alpha->invertible(ib))
    throw DomainError("a and b must have the same invertibility");
  LaurentPolynomial r(alpha);
  for (const auto& [e, c] : f.terms()) {
    Exponents s = e;
    std::swap(s[ia], s[ib]);
    r.add_term(s, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// RationalClass

RationalClass::RationalClass(LaurentPolynomial numerator, LaurentPolynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  require_same(numerator_, denominator_);
  if (denominator_.is_zero()) throw DivisionByZero("rational class with zero denominator");
}

RationalClass::RationalClass(LaurentPolynomial polynomial)
    : numerator_(polynomial),
      denominator_(LaurentPolynomial::constant(polynomial.alphabet(), 1)) {}

LaurentPolynomial RationalClass::to_polynomial() const {
  return exact_divide(numerator_, denominator_);
}

bool operator==(const RationalClass& x, const RationalClass& y) {
  return x.numerator_ * y.denominator_ == y.numerator_ * x.denominator_;
}

RationalClass rc_sum(std::span<const RationalClass> classes) {
  if (classes.empty()) throw DomainError("rc_sum of an empty list");
  LaurentPolynomial num = classes[0].numerator();
  LaurentPolynomial den = classes[0].denominator();
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const auto& c = classes[i];
    require_same(num, c.numerator());
    if (c.denominator() == den) {
      num += c.numerator();
    } else {
      num = num * c.denominator() + c.numerator() * den;
      den *= c.denominator();
    }
  }
  return RationalClass(std::move(num), std::move(den));
}

}  // namespace k0
