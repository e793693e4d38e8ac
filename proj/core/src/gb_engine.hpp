#pragma once

// Buchberger-style engine shared by the integer (strong Groebner basis) and
// prime-field computations. Not part of the installed interface.
//
// Over Z the basis is completed with S-polynomials and G-polynomials (gcd
// combinations of leading coefficients); reduction replaces a coefficient c
// at a monomial divisible by LM(g) with c mod LC(g), always using the
// divisor with the smallest leading coefficient. Over a field every element
// is monic and the same code degenerates to ordinary Buchberger.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "k0ring/errors.hpp"

namespace k0::detail {

constexpr std::size_t kMaxVars = 12;
constexpr std::size_t kMaxBlocks = 6;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::array<std::uint16_t, kMaxBlocks> bdeg{};
  std::uint32_t deg = 0;
  std::uint32_t mask = 0;  // bit v set iff e[v] > 0

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.e == y.e; }
};

/// Block order: blocks compared in sequence by degree, grevlex inside.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// `block_sizes` partitions variables 0..n-1 into consecutive blocks,
  /// highest priority first.
  explicit MonomialOrder(const std::vector<std::size_t>& block_sizes) {
    std::size_t start = 0;
    if (block_sizes.size() > kMaxBlocks) throw Error("too many order blocks");
    for (std::size_t s : block_sizes) {
      blocks_.emplace_back(start, start + s);
      for (std::size_t v = start; v < start + s; ++v) block_of_[v] = static_cast<std::uint8_t>(blocks_.size() - 1);
      start += s;
    }
    nvars_ = start;
    if (nvars_ > kMaxVars) throw Error("too many variables for the Groebner engine");
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t v) const { return block_of_[v]; }

  void finish(Monomial& m) const {
    m.bdeg.fill(0);
    m.deg = 0;
    m.mask = 0;
    for (std::size_t v = 0; v < nvars_; ++v) {
      m.bdeg[block_of_[v]] = static_cast<std::uint16_t>(m.bdeg[block_of_[v]] + m.e[v]);
      m.deg += m.e[v];
      if (m.e[v]) m.mask |= (1u << v);
    }
  }

  /// >0 if x > y, <0 if x < y, 0 if equal.
  int compare(const Monomial& x, const Monomial& y) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (x.bdeg[b] != y.bdeg[b]) return x.bdeg[b] > y.bdeg[b] ? 1 : -1;
      for (std::size_t v = blocks_[b].second; v-- > blocks_[b].first;)
        if (x.e[v] != y.e[v]) return x.e[v] < y.e[v] ? 1 : -1;
    }
    return 0;
  }

  Monomial lcm(const Monomial& x, const Monomial& y) const {
    Monomial m;
    for (std::size_t v = 0; v < nvars_; ++v) m.e[v] = std::max(x.e[v], y.e[v]);
    finish(m);
    return m;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
  std::array<std::uint8_t, kMaxVars> block_of_{};
};

inline bool divides(const Monomial& d, const Monomial& m) {
  if ((d.mask & ~m.mask) != 0 || d.deg > m.deg) return false;
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (d.e[v] > m.e[v]) return false;
  return true;
}

inline bool coprime(const Monomial& x, const Monomial& y) { return (x.mask & y.mask) == 0; }

inline Monomial mul(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    const unsigned s = static_cast<unsigned>(x.e[v]) + y.e[v];
    if (s > 0xFFFFu) throw Error("exponent overflow in Groebner engine");
    m.e[v] = static_cast<std::uint16_t>(s);
  }
  for (std::size_t b = 0; b < kMaxBlocks; ++b)
    m.bdeg[b] = static_cast<std::uint16_t>(x.bdeg[b] + y.bdeg[b]);
  m.deg = x.deg + y.deg;
  m.mask = x.mask | y.mask;
  return m;
}

/// x / y, assuming y | x.
inline Monomial quotient(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    m.e[v] = static_cast<std::uint16_t>(x.e[v] - y.e[v]);
    if (m.e[v]) m.mask |= (1u << v);
  }
  for (std::size_t b = 0; b < kMaxBlocks; ++b)
    m.bdeg[b] = static_cast<std::uint16_t>(x.bdeg[b] - y.bdeg[b]);
  m.deg = x.deg - y.deg;
  return m;
}

template <class C>
struct Term {
  Monomial m;
  C c;
};

/// Terms sorted strictly descending in the monomial order, no zeros.
template <class C>
using Poly = std::vector<Term<C>>;

// ---------------------------------------------------------------------------
// Coefficient domains

struct IntegerDomain {
  using Coeff = mpz_class;

  Coeff from_mpz(const mpz_class& c) const { return c; }
  mpz_class to_mpz(const Coeff& c) const { return c; }
  static bool is_zero(const Coeff& c) { return sgn(c) == 0; }
  static bool is_one(const Coeff& c) { return c == 1; }
  /// c = q d + r with 0 <= r < d (d > 0).
  void divrem(const Coeff& c, const Coeff& d, Coeff& q, Coeff& r) const {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  Coeff gcdext(const Coeff& a, const Coeff& b, Coeff& u, Coeff& v) const {
    Coeff g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  Coeff lcm(const Coeff& a, const Coeff& b) const {
    Coeff l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
  }
  Coeff exquo(const Coeff& a, const Coeff& b) const {
    Coeff q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  bool divides(const Coeff& d, const Coeff& c) const {
    return mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  bool coprime(const Coeff& a, const Coeff& b) const {
    Coeff g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g == 1;
  }
  /// Preference between candidate reducers: smaller |LC| first.
  bool less(const Coeff& a, const Coeff& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff neg(const Coeff& a) const { return -a; }
  void submul(Coeff& acc, const Coeff& a, const Coeff& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void addmul(Coeff& acc, const Coeff& a, const Coeff& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void normalize(Poly<Coeff>& p) const {
    if (!p.empty() && sgn(p.front().c) < 0)
      for (auto& t : p) t.c = -t.c;
  }
};

struct PrimeDomain {
  using Coeff = std::uint64_t;
  std::uint64_t p;

  Coeff from_mpz(const mpz_class& c) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
    return r.get_ui();
  }
  mpz_class to_mpz(const Coeff& c) const { return mpz_class(static_cast<unsigned long>(c)); }
  static bool is_zero(const Coeff& c) { return c == 0; }
  static bool is_one(const Coeff& c) { return c == 1; }
  Coeff inv(Coeff a) const {
    // Fermat
    Coeff r = 1, e = p - 2, b = a % p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  void divrem(const Coeff& c, const Coeff& d, Coeff& q, Coeff& r) const {
    q = c * inv(d) % p;
    r = 0;
  }
  Coeff gcdext(const Coeff& a, const Coeff&, Coeff& u, Coeff& v) const {
    u = inv(a);
    v = 0;
    return 1;
  }
  Coeff lcm(const Coeff&, const Coeff&) const { return 1; }
  Coeff exquo(const Coeff& a, const Coeff& b) const { return a * inv(b) % p; }
  bool divides(const Coeff& d, const Coeff&) const { return d != 0; }
  bool coprime(const Coeff&, const Coeff&) const { return true; }
  bool less(const Coeff&, const Coeff&) const { return false; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b % p; }
  Coeff neg(const Coeff& a) const { return a == 0 ? 0 : p - a; }
  void submul(Coeff& acc, const Coeff& a, const Coeff& b) const {
    acc = (acc + p - a * b % p) % p;
  }
  void addmul(Coeff& acc, const Coeff& a, const Coeff& b) const { acc = (acc + a * b) % p; }
  void normalize(Poly<Coeff>& poly) const {
    if (poly.empty() || poly.front().c == 1) return;
    const Coeff s = inv(poly.front().c);
    for (auto& t : poly) t.c = t.c * s % p;
  }
};

// ---------------------------------------------------------------------------

struct EngineOptions {
  std::uint64_t step_budget = 10'000'000;
  bool product_criterion = true;
  bool chain_criterion = true;
};

struct EngineStats {
  std::uint64_t steps = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped = 0;
  std::uint64_t g_polys = 0;
  std::size_t max_basis = 0;
};

template <class Domain>
class Engine {
 public:
  using C = typename Domain::Coeff;
  using P = Poly<C>;

  Engine(MonomialOrder order, Domain dom, EngineOptions opts = {})
      : ord_(std::move(order)), dom_(std::move(dom)), opts_(opts) {}

  const MonomialOrder& order() const { return ord_; }
  const Domain& domain() const { return dom_; }
  const EngineStats& stats() const { return stats_; }

  /// this = f[from..] - q * shift * g[g_from..]
  P sub_scaled(const P& f, std::size_t from, const C& q, const Monomial& shift, const P& g,
               std::size_t g_from) {
    P out;
    out.reserve(f.size() - from + g.size() - g_from);
    std::size_t i = from, j = g_from;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(f[i++]);
        continue;
      }
      Monomial gm = mul(g[j].m, shift);
      int cmp = i == f.size() ? -1 : ord_.compare(f[i].m, gm);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, dom_.neg(dom_.mul(q, g[j].c))});
        ++j;
      } else {
        C c = f[i].c;
        dom_.submul(c, q, g[j].c);
        if (!Domain::is_zero(c)) out.push_back({gm, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// a * ma * f + b * mb * g
  P combine(const C& a, const Monomial& ma, const P& f, const C& b, const Monomial& mb,
            const P& g) {
    P out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
      if (i < f.size() && j < g.size()) {
        Monomial fm = mul(f[i].m, ma), gm = mul(g[j].m, mb);
        int cmp = ord_.compare(fm, gm);
        if (cmp > 0) {
          if (!Domain::is_zero(a)) out.push_back({fm, dom_.mul(a, f[i].c)});
          ++i;
        } else if (cmp < 0) {
          if (!Domain::is_zero(b)) out.push_back({gm, dom_.mul(b, g[j].c)});
          ++j;
        } else {
          C c = dom_.mul(a, f[i].c);
          dom_.addmul(c, b, g[j].c);
          if (!Domain::is_zero(c)) out.push_back({fm, std::move(c)});
          ++i;
          ++j;
        }
      } else if (i < f.size()) {
        if (!Domain::is_zero(a)) out.push_back({mul(f[i].m, ma), dom_.mul(a, f[i].c)});
        ++i;
      } else {
        if (!Domain::is_zero(b)) out.push_back({mul(g[j].m, mb), dom_.mul(b, g[j].c)});
        ++j;
      }
    }
    return out;
  }

  /// Index of the divisor of m with the smallest leading coefficient, or -1.
  long find_reducer(const Monomial& m, const std::vector<P>& basis,
                    const std::vector<char>* alive = nullptr) const {
    long best = -1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (alive && !(*alive)[k]) continue;
      const auto& lead = basis[k].front();
      if (!divides(lead.m, m)) continue;
      if (best < 0 || dom_.less(lead.c, basis[static_cast<std::size_t>(best)].front().c))
        best = static_cast<long>(k);
      if (Domain::is_one(lead.c)) break;
    }
    return best;
  }

  /// Full reduction with canonical remainders.
  P reduce(P f, const std::vector<P>& basis, const std::vector<char>* alive = nullptr) {
    P rem;
    C q, r;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term<C>& t = f[pos];
      long k = find_reducer(t.m, basis, alive);
      if (k < 0) {
        rem.push_back(t);
        ++pos;
        continue;
      }
      const P& g = basis[static_cast<std::size_t>(k)];
      dom_.divrem(t.c, g.front().c, q, r);
      if (Domain::is_zero(q)) {
        rem.push_back(t);
        ++pos;
        continue;
      }
      if (++stats_.steps > opts_.step_budget)
        throw BudgetExceeded("Groebner step budget of " + std::to_string(opts_.step_budget) +
                             " reduction steps exceeded");
      Monomial shift = quotient(t.m, g.front().m);
      if (!Domain::is_zero(r)) rem.push_back({t.m, r});
      f = sub_scaled(f, pos + 1, q, shift, g, 1);
      pos = 0;
    }
    return rem;
  }

  /// Runs the completion on `gens` and returns the reduced basis, sorted
  /// descending by leading monomial.
  std::vector<P> groebner(std::vector<P> gens) {
    basis_.clear();
    alive_.clear();
    done_.clear();
    while (!queue_.empty()) queue_.pop();
    age_ = 0;

    for (auto& g : gens) {
      dom_.normalize(g);
      P r = reduce(std::move(g), basis_, &alive_);
      if (!r.empty()) insert(std::move(r));
    }
    while (!queue_.empty()) {
      Pair pr = queue_.top();
      queue_.pop();
      if (pr.kind == Kind::s) done_.insert({pr.i, pr.j});
      if (pr.kind == Kind::s && chain_skip(pr)) {
        ++stats_.pairs_skipped;
        continue;
      }
      ++stats_.pairs_processed;
      P h = pr.kind == Kind::s ? s_poly(pr.i, pr.j) : g_poly(pr.i, pr.j);
      if (++stats_.steps > opts_.step_budget)
        throw BudgetExceeded("Groebner step budget of " + std::to_string(opts_.step_budget) +
                             " reduction steps exceeded");
      P r = reduce(std::move(h), basis_, &alive_);
      if (!r.empty()) insert(std::move(r));
    }
    return interreduce();
  }

 private:
  enum class Kind : std::uint8_t { g = 0, s = 1 };

  struct Pair {
    std::size_t i, j;
    Kind kind;
    std::uint32_t deg;
    std::uint64_t age;
  };

  struct PairLater {
    bool operator()(const Pair& x, const Pair& y) const {
      if (x.deg != y.deg) return x.deg > y.deg;
      if (x.kind != y.kind) return x.kind > y.kind;  // G-pairs first
      return x.age > y.age;
    }
  };

  void insert(P h) {
    dom_.normalize(h);
    const std::size_t n = basis_.size();
    basis_.push_back(std::move(h));
    alive_.push_back(1);
    const auto& hn = basis_[n].front();
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive_[i]) continue;
      const auto& hi = basis_[i].front();
      const Monomial l = ord_.lcm(hi.m, hn.m);
      if (!dom_.divides(hi.c, hn.c) && !dom_.divides(hn.c, hi.c)) {
        queue_.push({i, n, Kind::g, l.deg, age_++});
        ++stats_.g_polys;
      }
      if (opts_.product_criterion && coprime(hi.m, hn.m) && dom_.coprime(hi.c, hn.c)) {
        ++stats_.pairs_skipped;
        done_.insert({i, n});
        continue;
      }
      queue_.push({i, n, Kind::s, l.deg, age_++});
    }
    // Elements whose leading term is a multiple of the new one stop acting as
    // reducers and get no new pairs; their queued pairs (including the one
    // with the new element) are still processed.
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive_[i]) continue;
      const auto& hi = basis_[i].front();
      if (divides(hn.m, hi.m) && dom_.divides(hn.c, hi.c)) alive_[i] = 0;
    }
    stats_.max_basis = std::max(stats_.max_basis, basis_.size());
  }

  bool chain_skip(const Pair& pr) const {
    if (!opts_.chain_criterion) return false;
    const auto& fi = basis_[pr.i].front();
    const auto& fj = basis_[pr.j].front();
    const Monomial l = ord_.lcm(fi.m, fj.m);
    const C lc = dom_.lcm(fi.c, fj.c);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pr.i || k == pr.j || !alive_[k]) continue;
      const auto& fk = basis_[k].front();
      if (!divides(fk.m, l) || !dom_.divides(fk.c, lc)) continue;
      auto key = [](std::size_t x, std::size_t y) {
        return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
      };
      if (done_.count(key(pr.i, k)) && done_.count(key(pr.j, k))) return true;
    }
    return false;
  }

  P s_poly(std::size_t i, std::size_t j) {
    const auto& fi = basis_[i];
    const auto& fj = basis_[j];
    const Monomial l = ord_.lcm(fi.front().m, fj.front().m);
    const C lc = dom_.lcm(fi.front().c, fj.front().c);
    const C a = dom_.exquo(lc, fi.front().c);
    const C b = dom_.neg(dom_.exquo(lc, fj.front().c));
    return combine(a, quotient(l, fi.front().m), fi, b, quotient(l, fj.front().m), fj);
  }

  P g_poly(std::size_t i, std::size_t j) {
    const auto& fi = basis_[i];
    const auto& fj = basis_[j];
    const Monomial l = ord_.lcm(fi.front().m, fj.front().m);
    C u, v;
    dom_.gcdext(fi.front().c, fj.front().c, u, v);
    return combine(u, quotient(l, fi.front().m), fi, v, quotient(l, fj.front().m), fj);
  }

  std::vector<P> interreduce() {
    std::vector<P> cand;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (alive_[i]) cand.push_back(basis_[i]);
    // Minimalize: drop elements whose leading term is a multiple of another's.
    std::sort(cand.begin(), cand.end(), [&](const P& x, const P& y) {
      int c = ord_.compare(x.front().m, y.front().m);
      if (c != 0) return c < 0;
      return dom_.less(x.front().c, y.front().c);
    });
    std::vector<P> kept;
    for (auto& g : cand) {
      bool redundant = false;
      for (const auto& h : kept)
        if (divides(h.front().m, g.front().m) && dom_.divides(h.front().c, g.front().c)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(std::move(g));
    }
    std::vector<P> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      P tail(kept[i].begin() + 1, kept[i].end());
      P red = reduce(std::move(tail), kept);
      P full;
      full.reserve(red.size() + 1);
      full.push_back(kept[i].front());
      for (auto& t : red) full.push_back(std::move(t));
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const P& x, const P& y) {
      return ord_.compare(x.front().m, y.front().m) > 0;
    });
    return out;
  }

  MonomialOrder ord_;
  Domain dom_;
  EngineOptions opts_;
  EngineStats stats_;
  std::vector<P> basis_;
  std::vector<char> alive_;
  std::set<std::pair<std::size_t, std::size_t>> done_;  // S-pairs handled or product-skipped
  std::priority_queue<Pair, std::vector<Pair>, PairLater> queue_;
  std::uint64_t age_ = 0;
};

// ---------------------------------------------------------------------------
// Standard monomials

/// Monomials in `nvars` variables divisible by none of `leads`. Returns false
/// (and stops) once more than `limit` are found.
inline bool enumerate_standard(const std::vector<Monomial>& leads, const MonomialOrder& ord,
                               std::size_t limit, std::vector<Monomial>& out) {
  out.clear();
  const std::size_t n = ord.nvars();
  auto reducible = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (divides(l, m)) return true;
    return false;
  };
  Monomial one;
  ord.finish(one);
  if (reducible(one)) return true;
  // Depth-first over exponent vectors, raising variables with index >= the
  // last raised one so every monomial is produced once.
  std::vector<std::pair<Monomial, std::size_t>> stack{{one, 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    out.push_back(m);
    if (out.size() > limit) return false;
    for (std::size_t v = first; v < n; ++v) {
      Monomial next = m;
      if (next.e[v] == 0xFFFFu) return false;
      ++next.e[v];
      ord.finish(next);
      if (!reducible(next)) stack.push_back({next, v});
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& x, const Monomial& y) { return ord.compare(x, y) < 0; });
  return true;
}

/// True iff every variable has a pure power among the leading monomials.
inline bool zero_dimensional(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& l : leads)
      if (l.mask == (1u << v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace k0::detail
