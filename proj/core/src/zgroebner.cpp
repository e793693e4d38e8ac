#include "k0ring/zgroebner.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gb_engine.hpp"

namespace k0 {

using detail::IntegerDomain;
using detail::Monomial;
using detail::MonomialOrder;
using detail::PrimeDomain;
using ZPoly = detail::Poly<mpz_class>;

struct StrongGroebnerBasis::Impl {
  MonomialOrder order;
  std::vector<ZPoly> basis;
  GbStats stats;
};

namespace {

constexpr std::size_t kEnumerationLimit = 1'000'000;
constexpr unsigned long kPrimeBoundLimit = 100'000;

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

MonomialOrder engine_order(const PolynomializedRing& ring) {
  return MonomialOrder(ring.block_sizes());
}

detail::EngineOptions engine_options(const GbOptions& o) {
  return {o.step_budget, o.product_criterion, o.chain_criterion};
}

template <class Domain>
detail::Poly<typename Domain::Coeff> to_engine(const LaurentPolynomial& f,
                                               const MonomialOrder& ord, const Domain& dom) {
  detail::Poly<typename Domain::Coeff> p;
  p.reserve(f.size());
  for (const auto& [exps, c] : f.terms()) {
    auto cc = dom.from_mpz(c);
    if (Domain::is_zero(cc)) continue;
    Monomial m;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] < 0 || exps[v] > 0xFFFF) throw DomainError("exponent out of range for the Groebner engine");
      m.e[v] = static_cast<std::uint16_t>(exps[v]);
    }
    ord.finish(m);
    p.push_back({m, std::move(cc)});
  }
  std::sort(p.begin(), p.end(),
            [&](const auto& x, const auto& y) { return ord.compare(x.m, y.m) > 0; });
  return p;
}

Exponents monomial_exponents(const Monomial& m, std::size_t n) {
  Exponents e(n);
  for (std::size_t v = 0; v < n; ++v) e[v] = m.e[v];
  return e;
}

LaurentPolynomial from_engine(const ZPoly& p, const AlphabetPtr& alpha) {
  LaurentPolynomial f(alpha);
  for (const auto& t : p) f.add_term(monomial_exponents(t.m, alpha->size()), t.c);
  return f;
}

void check_alphabet(const LaurentPolynomial& f, const AlphabetPtr& expected, const char* what) {
  if (!same_alphabet(f.alphabet(), expected))
    throw AlphabetMismatch(std::string(what) + ": expected alphabet {" + expected->describe() +
                           "}, got {" + f.alphabet()->describe() + "}");
}

template <class Domain>
std::vector<detail::Poly<typename Domain::Coeff>> engine_inputs(
    std::span<const LaurentPolynomial> poly_gens, const PolynomializedRing& ring,
    const MonomialOrder& ord, const Domain& dom) {
  std::vector<detail::Poly<typename Domain::Coeff>> in;
  for (const auto& u : ring.unit_relations()) in.push_back(to_engine(u, ord, dom));
  for (const auto& g : poly_gens) {
    check_alphabet(g, ring.poly_alphabet(), "Groebner generator");
    auto p = to_engine(g, ord, dom);
    if (!p.empty()) in.push_back(std::move(p));
  }
  return in;
}

// Unit multiple of f with no negative exponents; generates the same ideal
// and keeps inverse variables out of the inputs.
LaurentPolynomial clear_denominators(const LaurentPolynomial& f) {
  Exponents shift(f.alphabet()->size(), 0);
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -std::min(0, f.min_exponent(i));
  return f.shifted(shift);
}

std::vector<LaurentPolynomial> polynomialize(std::span<const LaurentPolynomial> gens,
                                             const PolynomializedRing& ring) {
  std::vector<LaurentPolynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(ring.to_poly(clear_denominators(g)));
  return out;
}

std::vector<unsigned long> prime_factors(mpz_class n) {
  std::vector<unsigned long> out;
  n = abs(n);
  if (n < 2) return out;
  for (unsigned long p = 2; p <= 1'000'000; ++p) {
    if (mpz_class(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  if (n > 1 && n.fits_ulong_p() && mpz_probab_prime_p(n.get_mpz_t(), 30)) out.push_back(n.get_ui());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string TermOrder::describe() const {
  std::vector<std::string> parts;
  for (const auto& b : blocks) parts.push_back("[" + join(b, ",") + "]");
  return join(parts, " > ");
}

PolynomializedRing::PolynomializedRing(AlphabetPtr base,
                                       std::vector<std::vector<std::string>> base_blocks,
                                       std::vector<std::string> tags)
    : base_(std::move(base)), base_blocks_(std::move(base_blocks)), tags_(std::move(tags)) {
  if (!base_) throw DomainError("ring needs a base alphabet");
  if (base_blocks_.empty()) base_blocks_.push_back(base_->names());
  std::set<std::string> seen;
  for (const auto& block : base_blocks_) {
    if (block.empty()) throw DomainError("empty order block");
    for (const auto& n : block) {
      base_->index(n);
      if (!seen.insert(n).second) throw DomainError("variable listed twice in order: " + n);
    }
  }
  if (seen.size() != base_->size()) throw DomainError("order blocks must cover every base variable");

  std::vector<std::string> inverse;
  for (std::size_t i = 0; i < base_->size(); ++i)
    if (base_->invertible(i)) inverse.push_back(base_->name(i) + "_inv");

  std::vector<std::string> names = tags_;
  names.insert(names.end(), inverse.begin(), inverse.end());
  for (const auto& block : base_blocks_) names.insert(names.end(), block.begin(), block.end());
  if (names.size() > detail::kMaxVars)
    throw DomainError("at most " + std::to_string(detail::kMaxVars) +
                      " polynomial variables are supported");
  poly_ = make_alphabet(names);  // validates uniqueness, e.g. tag clashes

  if (!tags_.empty()) {
    order_.blocks.push_back(tags_);
    block_sizes_.push_back(tags_.size());
  }
  if (!inverse.empty()) {
    order_.blocks.push_back(inverse);
    block_sizes_.push_back(inverse.size());
  }
  for (const auto& block : base_blocks_) {
    order_.blocks.push_back(block);
    block_sizes_.push_back(block.size());
  }
  if (block_sizes_.size() > detail::kMaxBlocks) throw DomainError("too many order blocks");

  base_to_poly_.resize(base_->size());
  inv_of_.resize(base_->size());
  for (std::size_t i = 0; i < base_->size(); ++i) {
    base_to_poly_[i] = poly_->index(base_->name(i));
    if (base_->invertible(i)) inv_of_[i] = poly_->index(base_->name(i) + "_inv");
  }
}

LaurentPolynomial PolynomializedRing::to_poly(const LaurentPolynomial& f) const {
  check_alphabet(f, base_, "to_poly");
  LaurentPolynomial p(poly_);
  for (const auto& [exps, c] : f.terms()) {
    Exponents e(poly_->size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] >= 0)
        e[base_to_poly_[i]] = exps[i];
      else
        e[*inv_of_[i]] = -exps[i];
    }
    p.add_term(e, c);
  }
  return p;
}

LaurentPolynomial PolynomializedRing::from_poly(const LaurentPolynomial& p) const {
  check_alphabet(p, poly_, "from_poly");
  LaurentPolynomial f(base_);
  for (const auto& [exps, c] : p.terms()) {
    for (std::size_t t = 0; t < tags_.size(); ++t)
      if (exps[t] != 0) throw DomainError("tag variable " + tags_[t] + " still present");
    Exponents e(base_->size(), 0);
    for (std::size_t i = 0; i < base_->size(); ++i) {
      e[i] = exps[base_to_poly_[i]];
      if (inv_of_[i]) e[i] -= exps[*inv_of_[i]];
    }
    f.add_term(e, c);
  }
  return f;
}

std::vector<LaurentPolynomial> PolynomializedRing::unit_relations() const {
  std::vector<LaurentPolynomial> out;
  for (std::size_t i = 0; i < base_->size(); ++i) {
    if (!inv_of_[i]) continue;
    Exponents e(poly_->size(), 0);
    e[base_to_poly_[i]] = 1;
    e[*inv_of_[i]] = 1;
    out.push_back(LaurentPolynomial::monomial(poly_, e) - LaurentPolynomial::constant(poly_, 1));
  }
  return out;
}

RingPtr PolynomializedRing::with_tags(std::vector<std::string> tags) const {
  return std::make_shared<const PolynomializedRing>(base_, base_blocks_, std::move(tags));
}

RingPtr make_ring(AlphabetPtr base, std::vector<std::vector<std::string>> base_blocks) {
  return std::make_shared<const PolynomializedRing>(std::move(base), std::move(base_blocks));
}

// ---------------------------------------------------------------------------

StrongGroebnerBasis::StrongGroebnerBasis(RingPtr ring, std::shared_ptr<const Impl> impl)
    : ring_(std::move(ring)), impl_(std::move(impl)) {
  for (const auto& g : impl_->basis) generators_.push_back(from_engine(g, ring_->poly_alphabet()));
}

std::vector<LaurentPolynomial> StrongGroebnerBasis::leading_terms() const {
  std::vector<LaurentPolynomial> out;
  for (const auto& g : impl_->basis)
    out.push_back(from_engine(ZPoly{g.front()}, ring_->poly_alphabet()));
  return out;
}

mpz_class StrongGroebnerBasis::max_leading_coefficient() const {
  mpz_class best = 0;
  for (const auto& g : impl_->basis) best = std::max(best, mpz_class(abs(g.front().c)));
  return best;
}

const GbStats& StrongGroebnerBasis::stats() const { return impl_->stats; }

StrongGroebnerBasis strong_gb_poly(std::span<const LaurentPolynomial> gens, RingPtr ring,
                                   const GbOptions& options) {
  auto impl = std::make_shared<StrongGroebnerBasis::Impl>();
  impl->order = engine_order(*ring);
  IntegerDomain dom;
  auto inputs = engine_inputs(gens, *ring, impl->order, dom);
  if (gens.empty() && inputs.empty()) throw DomainError("strong_gb needs at least one generator");
  detail::Engine<IntegerDomain> engine(impl->order, dom, engine_options(options));
  impl->basis = engine.groebner(std::move(inputs));
  const auto& st = engine.stats();
  impl->stats = {st.steps, st.pairs_processed, st.pairs_skipped, st.max_basis};
  return StrongGroebnerBasis(std::move(ring), std::move(impl));
}

StrongGroebnerBasis strong_gb(std::span<const LaurentPolynomial> gens, RingPtr ring,
                              const GbOptions& options) {
  const auto polys = polynomialize(gens, *ring);
  return strong_gb_poly(polys, std::move(ring), options);
}

LaurentPolynomial normal_form_poly(const LaurentPolynomial& f, const StrongGroebnerBasis& gb) {
  check_alphabet(f, gb.ring().poly_alphabet(), "normal_form");
  const auto& impl = gb.impl();
  detail::EngineOptions unlimited{~std::uint64_t{0}, true, true};
  detail::Engine<IntegerDomain> engine(impl.order, IntegerDomain{}, unlimited);
  return from_engine(engine.reduce(to_engine(f, impl.order, IntegerDomain{}), impl.basis),
                     gb.ring().poly_alphabet());
}

LaurentPolynomial normal_form(const LaurentPolynomial& f, const StrongGroebnerBasis& gb) {
  return gb.ring().from_poly(normal_form_poly(gb.ring().to_poly(f), gb));
}

bool ideal_contains(const StrongGroebnerBasis& gb, const LaurentPolynomial& f) {
  // unit monomial multiples do not change membership
  return normal_form_poly(gb.ring().to_poly(clear_denominators(f)), gb).is_zero();
}

std::vector<LaurentPolynomial> eliminate(const StrongGroebnerBasis& gb,
                                         const std::vector<std::string>& drop_vars) {
  const auto& ring = gb.ring();
  const auto& alpha = ring.poly_alphabet();
  std::set<std::size_t> drop;
  for (const auto& n : drop_vars) {
    auto idx = alpha->find(n);
    if (!idx) throw OrderMismatch("cannot eliminate unknown variable " + n);
    drop.insert(*idx);
  }
  // drop must be the variable set of a prefix of the blocks
  std::set<std::size_t> prefix;
  std::size_t start = 0;
  bool matches = drop.empty();
  for (std::size_t size : ring.block_sizes()) {
    if (matches) break;
    for (std::size_t v = start; v < start + size; ++v) prefix.insert(v);
    start += size;
    if (prefix == drop) matches = true;
    if (prefix.size() >= drop.size()) break;
  }
  if (!matches)
    throw OrderMismatch("variables {" + join(drop_vars, ",") +
                        "} are not the leading blocks of the order " + ring.order().describe());

  std::vector<LaurentPolynomial> out;
  for (const auto& g : gb.impl().basis) {
    bool free_of_drop = true;
    for (const auto& t : g) {
      for (std::size_t v : drop)
        if (t.m.e[v]) free_of_drop = false;
      if (!free_of_drop) break;
    }
    if (!free_of_drop) continue;
    auto f = ring.from_poly(from_engine(g, alpha));
    if (f.is_zero()) continue;
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::string> PolynomializedRing::inverse_names() const {
  std::vector<std::string> out;
  for (const auto& idx : inv_of_)
    if (idx) out.push_back(poly_->name(*idx));
  return out;
}

std::vector<LaurentPolynomial> contraction(std::span<const LaurentPolynomial> gens, RingPtr ring,
                                          const GbOptions& options) {
  const auto inverse = ring->inverse_names();
  if (inverse.empty()) return {gens.begin(), gens.end()};
  return eliminate(strong_gb(gens, ring, options), inverse);
}

std::vector<LaurentPolynomial> ideal_intersect(std::span<const LaurentPolynomial> I,
                                               std::span<const LaurentPolynomial> J,
                                               RingPtr ring, const GbOptions& options) {
  const auto& base = ring->base();
  const auto Ic = contraction(I, ring, options);
  const auto Jc = contraction(J, ring, options);

  const auto plain = make_alphabet(base->names());
  std::string tag = "w";
  while (base->find(tag)) tag += "_";
  auto tagged = std::make_shared<const PolynomializedRing>(plain, ring->base_blocks(),
                                                           std::vector<std::string>{tag});
  const auto& alpha = tagged->poly_alphabet();
  const auto w = LaurentPolynomial::variable(alpha, tag);
  const auto one_minus_w = LaurentPolynomial::constant(alpha, 1) - w;
  std::vector<LaurentPolynomial> gens;
  for (const auto& f : Ic) gens.push_back(w * tagged->to_poly(f.over(plain)));
  for (const auto& g : Jc) gens.push_back(one_minus_w * tagged->to_poly(g.over(plain)));
  std::vector<LaurentPolynomial> out;
  for (const auto& h : eliminate(strong_gb_poly(gens, tagged, options), {tag}))
    out.push_back(h.over(base));
  return out;
}

bool ideals_equal(std::span<const LaurentPolynomial> I, std::span<const LaurentPolynomial> J,
                  RingPtr ring, const GbOptions& options) {
  const auto gi = strong_gb(I, ring, options);
  const auto gj = strong_gb(J, ring, options);
  for (const auto& f : J)
    if (!ideal_contains(gi, f)) return false;
  for (const auto& f : I)
    if (!ideal_contains(gj, f)) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<unsigned long> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (unsigned long p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (unsigned long q = p * p; q <= n; q += p) composite[q] = true;
  }
  return out;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Standard monomials of a monic/strong basis, or nullopt when infinite.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads,
                                                        const MonomialOrder& ord) {
  std::vector<Monomial> out;
  for (const auto& l : leads)
    if (l.deg == 0) return out;
  if (!detail::zero_dimensional(leads, ord.nvars())) return std::nullopt;
  if (!detail::enumerate_standard(leads, ord, kEnumerationLimit, out)) return std::nullopt;
  return out;
}

}  // namespace

std::optional<std::size_t> rank_mod_p(std::span<const LaurentPolynomial> gens, RingPtr ring,
                                      unsigned long p, const GbOptions& options) {
  if (p < 2 || p >= (1ul << 31)) throw DomainError("prime out of range: " + std::to_string(p));
  const auto ord = engine_order(*ring);
  PrimeDomain dom{p};
  const auto polys = polynomialize(gens, *ring);
  auto inputs = engine_inputs(std::span<const LaurentPolynomial>(polys), *ring, ord, dom);
  detail::Engine<PrimeDomain> engine(ord, dom, engine_options(options));
  const auto basis = engine.groebner(std::move(inputs));
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.front().m);
  const auto sm = standard_monomials(leads, ord);
  if (!sm) return std::nullopt;
  return sm->size();
}

namespace {

using Row = std::vector<mpz_class>;

// The quotient as an abelian group: generated by the monomials not divisible
// by a unit-LC leading monomial, subject to one relation per such monomial
// that some leading monomial still divides.
struct Presentation {
  bool bounded = true;
  std::vector<Monomial> span;  // ascending
  std::map<std::array<std::uint16_t, detail::kMaxVars>, std::size_t> index;
  std::vector<std::pair<Monomial, mpz_class>> torsion;
  std::vector<Row> relations;

  Row coordinates(const ZPoly& p) const {
    Row row(span.size(), 0);
    for (const auto& t : p) {
      auto it = index.find(t.m.e);
      if (it == index.end()) throw Error("normal form outside the spanning monomials");
      row[it->second] = t.c;
    }
    return row;
  }
};

Presentation present(const StrongGroebnerBasis& gb) {
  const auto& impl = gb.impl();
  const auto& ord = impl.order;
  Presentation pr;
  std::vector<Monomial> unit_leads;
  for (const auto& g : impl.basis)
    if (g.front().c == 1) unit_leads.push_back(g.front().m);
  const auto T = standard_monomials(unit_leads, ord);
  if (!T) {
    pr.bounded = false;
    return pr;
  }
  pr.span = *T;
  for (std::size_t i = 0; i < pr.span.size(); ++i) pr.index[pr.span[i].e] = i;

  detail::Engine<IntegerDomain> engine(ord, IntegerDomain{}, detail::EngineOptions{});
  for (const auto& m : pr.span) {
    const ZPoly* best = nullptr;
    for (const auto& g : impl.basis)
      if (detail::divides(g.front().m, m) && (!best || g.front().c < best->front().c)) best = &g;
    if (!best) continue;
    const mpz_class c = best->front().c;
    pr.torsion.push_back({m, c});
    // shift * g = c*m + tail, so c*m + nf(tail) = 0 in the quotient
    const Monomial shift = detail::quotient(m, best->front().m);
    ZPoly tail;
    for (std::size_t i = 1; i < best->size(); ++i)
      tail.push_back({detail::mul((*best)[i].m, shift), (*best)[i].c});
    Row row = pr.coordinates(engine.reduce(std::move(tail), impl.basis));
    row[pr.index.at(m.e)] += c;
    pr.relations.push_back(std::move(row));
  }
  return pr;
}

// Columns of a unimodular maximal minor of `rel`, found by pivoting on unit
// entries with backtracking; nullopt if none turns up within the budget.
bool unit_pivots(std::vector<Row> rel, std::vector<std::size_t>& cols, std::size_t& budget) {
  if (rel.empty()) return true;
  const std::size_t n = rel.front().size();
  for (std::size_t j = n; j-- > 0;) {
    for (std::size_t r = 0; r < rel.size(); ++r) {
      if (abs(rel[r][j]) != 1) continue;
      if (budget == 0) return false;
      --budget;
      std::vector<Row> next;
      for (std::size_t i = 0; i < rel.size(); ++i) {
        if (i == r) continue;
        Row row = rel[i];
        const mpz_class f = row[j] * rel[r][j];
        if (f != 0)
          for (std::size_t k = 0; k < n; ++k) row[k] -= f * rel[r][k];
        next.push_back(std::move(row));
      }
      if (unit_pivots(std::move(next), cols, budget)) {
        cols.push_back(j);
        return true;
      }
    }
  }
  return false;
}

// Rows of W with R V = [L | 0] for a column echelon form, W = V^-1: rows
// rank(R).. of W span a complement of the row lattice of R. They form a
// Z-basis of Z^n / rows(R) whenever that quotient is torsion free.
std::vector<Row> lattice_complement(std::vector<Row> rel, std::size_t n) {
  std::vector<Row> w(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
  std::size_t k = 0;
  for (auto& row : rel) {
    if (k == n) break;
    for (std::size_t b = k + 1; b < n; ++b) {
      if (row[b] == 0) continue;
      const std::size_t a = k;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[a].get_mpz_t(),
                 row[b].get_mpz_t());
      const mpz_class u = row[a] / g, v = row[b] / g;
      // columns a, b <- (s a + t b, u b - v a); W picks up the inverse rows
      for (auto& r : rel) {
        const mpz_class ra = r[a], rb = r[b];
        r[a] = s * ra + t * rb;
        r[b] = u * rb - v * ra;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const mpz_class wa = w[a][j], wb = w[b][j];
        w[a][j] = u * wa + v * wb;
        w[b][j] = s * wb - t * wa;
      }
    }
    if (row[k] != 0) ++k;
  }
  return {w.begin() + static_cast<std::ptrdiff_t>(k), w.end()};
}

}  // namespace

std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> m) {
  std::vector<mpz_class> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        if (q != 0)
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[t][t] == 0) break;
    diag.push_back(abs(m[t][t]));
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g = gcd(diag[i], diag[j]);
      mpz_class l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

QuotientReport quotient_report(const StrongGroebnerBasis& gb,
                               std::span<const LaurentPolynomial> gens,
                               const std::vector<unsigned long>& primes,
                               const GbOptions& options) {
  const auto& ring = gb.ring_ptr();
  const auto& impl = gb.impl();
  const auto& ord = impl.order;
  const auto& alpha = ring->poly_alphabet();

  QuotientReport rep;
  rep.gb_size = impl.basis.size();
  rep.order = ring->order().describe();
  rep.max_leading_coefficient = gb.max_leading_coefficient();

  std::vector<Monomial> leads;
  for (const auto& g : impl.basis) leads.push_back(g.front().m);
  const auto S = standard_monomials(leads, ord);
  if (!S) throw InfiniteRank("quotient has infinite rank over Q (order " + rep.order + ")");
  rep.rank_Q = S->size();

  auto to_base = [&](const Monomial& m) {
    return ring->from_poly(
        LaurentPolynomial::monomial(alpha, monomial_exponents(m, alpha->size())));
  };

  const auto pr = present(gb);
  rep.torsion_bounded = pr.bounded;
  for (const auto& [m, c] : pr.torsion) rep.torsion.push_back({to_base(m), c});
  if (pr.bounded)
    for (const auto& d : smith_invariants(pr.relations))
      if (d > 1) rep.torsion_invariants.push_back(d);

  std::set<unsigned long> pset(primes.begin(), primes.end());
  for (const auto& g : impl.basis)
    for (unsigned long p : prime_factors(g.front().c)) pset.insert(p);
  if (rep.max_leading_coefficient <= kPrimeBoundLimit)
    for (unsigned long p : primes_up_to(rep.max_leading_coefficient.get_ui())) pset.insert(p);
  rep.prime_set.assign(pset.begin(), pset.end());

  bool all_match = true;
  for (unsigned long p : rep.prime_set) {
    const auto r = rank_mod_p(gens, ring, p, options);
    rep.rank_mod_p[p] = r;
    if (!r || *r != rep.rank_Q) all_match = false;
    if (rep.torsion_bounded) {
      std::size_t predicted = rep.rank_Q;
      for (const auto& d : rep.torsion_invariants)
        if (mpz_divisible_ui_p(d.get_mpz_t(), p)) ++predicted;
      if (!r || *r != predicted) rep.mod_p_consistent = false;
    } else if (r) {
      rep.mod_p_consistent = false;
    }
  }
  rep.free = rep.torsion_bounded && rep.torsion_invariants.empty() && all_match;

  // Standard monomials are a Z-basis unless some spanning monomial has a
  // non-unit relation; then drop the columns of a unimodular minor instead.
  // When no maximal minor is unimodular the Z-basis needs integer
  // combinations of spanning monomials.
  std::vector<Monomial> basis = *S;
  if (rep.free && !pr.relations.empty()) {
    std::vector<std::size_t> cols;
    std::size_t budget = 100000;
    if (unit_pivots(pr.relations, cols, budget)) {
      std::set<std::size_t> drop(cols.begin(), cols.end());
      basis.clear();
      for (std::size_t i = 0; i < pr.span.size(); ++i)
        if (!drop.count(i)) basis.push_back(pr.span[i]);
    } else {
      for (const auto& row : lattice_complement(pr.relations, pr.span.size())) {
        LaurentPolynomial f(ring->base());
        for (std::size_t i = 0; i < row.size(); ++i)
          if (row[i] != 0) f += to_base(pr.span[i]) * row[i];
        rep.basis.push_back(std::move(f));
      }
      return rep;
    }
  }
  for (const auto& m : basis) rep.basis.push_back(to_base(m));
  return rep;
}

CandidateBasisCheck verify_candidate_basis(const StrongGroebnerBasis& gb,
                                           const QuotientReport& report,
                                           std::span<const LaurentPolynomial> candidate) {
  const auto& ring = gb.ring();
  const auto& ord = gb.impl().order;
  CandidateBasisCheck chk;
  chk.supplied = true;
  chk.size = candidate.size();
  if (!report.free) {
    chk.failure = "quotient is not a free abelian group";
    return chk;
  }
  if (candidate.size() != report.rank_Q) {
    chk.failure = "candidate has " + std::to_string(candidate.size()) + " elements, rank is " +
                  std::to_string(report.rank_Q);
    return chk;
  }
  // Candidates plus the relations must give a unimodular square matrix over
  // the spanning monomials.
  const auto pr = present(gb);
  std::vector<Row> mat = pr.relations;
  std::vector<LaurentPolynomial> forms;
  for (const auto& c : candidate) {
    check_alphabet(c, ring.base(), "candidate basis");
    auto nf = normal_form_poly(ring.to_poly(c), gb);
    mat.push_back(pr.coordinates(to_engine(nf, ord, IntegerDomain{})));
    if (nf.is_zero() || std::find(forms.begin(), forms.end(), nf) != forms.end())
      chk.offending.push_back(c.to_string());
    forms.push_back(std::move(nf));
  }
  chk.determinant = bareiss_determinant(std::move(mat));
  chk.passed = abs(*chk.determinant) == 1;
  if (!chk.passed) chk.failure = "change of basis has determinant " + chk.determinant->get_str();
  return chk;
}

QuotientReport quotient_report(std::span<const LaurentPolynomial> gens, RingPtr ring,
                               const std::vector<unsigned long>& primes,
                               const std::optional<std::vector<LaurentPolynomial>>& candidate,
                               const GbOptions& options) {
  const auto gb = strong_gb(gens, ring, options);
  auto rep = quotient_report(gb, gens, primes, options);
  if (candidate) rep.candidate = verify_candidate_basis(gb, rep, *candidate);
  return rep;
}

}  // namespace k0
