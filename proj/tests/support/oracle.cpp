#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace k0::oracle {

namespace {

void axpy(Row& y, const mpz_class& a, const Row& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Row(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

bool diagonal(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (i != j && m[i][j] != 0) return false;
  return true;
}

mpq_class power(const mpq_class& x, int e) {
  mpq_class out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= x;
  if (e < 0) out = 1 / out;
  return out;
}

}  // namespace

Matrix hermite(Matrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows.size(); ++c) {
    for (std::size_t r = pr + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      if (rows[pr][c] == 0) {
        std::swap(rows[pr], rows[r]);
        continue;
      }
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rows[pr][c].get_mpz_t(),
                 rows[r][c].get_mpz_t());
      const mpz_class u = rows[pr][c] / g, v = rows[r][c] / g;
      Row top(cols), bottom(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        top[j] = s * rows[pr][j] + t * rows[r][j];
        bottom[j] = u * rows[r][j] - v * rows[pr][j];
      }
      rows[pr] = std::move(top);
      rows[r] = std::move(bottom);
    }
    if (rows[pr][c] == 0) continue;
    if (rows[pr][c] < 0)
      for (auto& x : rows[pr]) x = -x;
    for (std::size_t r = 0; r < pr; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pr][c].get_mpz_t());
      axpy(rows[r], -q, rows[pr]);
    }
    ++pr;
  }
  rows.resize(pr);
  return rows;
}

bool in_row_span(const Matrix& echelon, Row v) {
  for (const auto& row : echelon) {
    const auto it = std::find_if(row.begin(), row.end(), [](const mpz_class& x) { return x != 0; });
    const std::size_t c = static_cast<std::size_t>(it - row.begin());
    if (v[c] % row[c] != 0) return false;
    axpy(v, -(v[c] / row[c]), row);
  }
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

std::vector<mpz_class> invariant_factors(const Matrix& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  Matrix m = hermite(rows);
  while (!diagonal(m)) {
    Matrix t = hermite(transpose(m, cols));
    m = hermite(transpose(t, m.size()));
  }
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < m.size(); ++i) d.push_back(abs(m[i][i]));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const mpz_class g = gcd(d[i], d[j]);
      const mpz_class l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

BoxIdeal::BoxIdeal(AlphabetPtr alphabet, std::vector<int> degrees,
                   std::vector<LaurentPolynomial> extra)
    : alphabet_(std::move(alphabet)), degrees_(std::move(degrees)) {
  const std::size_t n = alphabet_->size();
  if (degrees_.size() != n) throw std::invalid_argument("one degree per variable");
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = degrees_[i];
    gens_.push_back(LaurentPolynomial::monomial(alphabet_, e));
  }
  Exponents e(n, 0);
  while (true) {
    box_.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] == degrees_[i]) e[i++] = 0;
    if (i == n) break;
  }
  Matrix rows;
  for (const auto& g : extra) {
    for (const auto& m : box_) rows.push_back(coordinates(g.shifted(m)));
    gens_.push_back(g);
  }
  echelon_ = hermite(rows);
  for (const auto& d : invariant_factors(echelon_))
    if (d > 1) factors_.push_back(d);
}

Row BoxIdeal::coordinates(const LaurentPolynomial& f) const {
  Row v(box_.size());
  for (const auto& [e, c] : f.terms()) {
    bool inside = true;
    std::size_t index = 0, stride = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= degrees_[i]) inside = false;
      index += stride * static_cast<std::size_t>(e[i]);
      stride *= static_cast<std::size_t>(degrees_[i]);
    }
    if (inside) v[index] += c;
  }
  return v;
}

bool BoxIdeal::contains(const LaurentPolynomial& f) const {
  return in_row_span(echelon_, coordinates(f));
}

std::size_t BoxIdeal::rank_Q() const { return box_.size() - echelon_.size(); }

std::vector<mpz_class> BoxIdeal::torsion() const { return factors_; }

std::size_t BoxIdeal::rank_mod_p(unsigned long p) const {
  std::size_t extra = 0;
  for (const auto& d : factors_)
    if (d % p == 0) ++extra;
  return rank_Q() + extra;
}

LaurentPolynomial random_poly(std::mt19937_64& rng, const AlphabetPtr& alphabet, int terms,
                              int degree, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::uniform_int_distribution<int> count(1, terms);
  const std::size_t n = alphabet->size();
  LaurentPolynomial f(alphabet);
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    Exponents e(n, 0);
    int budget = degree;
    for (std::size_t i = 0; i < n; ++i) {
      const int lo = alphabet->invertible(i) ? -budget : 0;
      std::uniform_int_distribution<int> pick(lo, budget);
      e[i] = pick(rng);
      budget -= std::abs(e[i]);
    }
    std::shuffle(e.begin(), e.end(), rng);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] < 0 && !alphabet->invertible(i)) e[i] = -e[i];
    f.add_term(e, coeff(rng));
  }
  return f;
}

mpq_class evaluate(const LaurentPolynomial& f, const std::vector<mpq_class>& point) {
  mpq_class sum = 0;
  for (const auto& [e, c] : f.terms()) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) term *= power(point.at(i), e[i]);
    sum += term;
  }
  return sum;
}

mpq_class localization_sum(int q, int r, int N, int k, const mpq_class& a, const mpq_class& b,
                           const mpq_class& t) {
  const int s = N - q * r;
  auto chi = [&](int n, int i) -> mpq_class { return power(a, n - i) * power(b, i); };
  auto euler = [&](int n, int i) {
    mpq_class e = 1;
    for (int l = 0; l <= n; ++l)
      if (l != i) e *= 1 - chi(n, l) / chi(n, i);
    return e;
  };
  auto point_class = [&](int m) {
    mpq_class e = 1;
    for (int l = 0; l <= N; ++l)
      if (l != m) e *= 1 - chi(N, l) / t;
    return e;
  };
  mpq_class sum = 0;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= s; ++j)
      sum += power(chi(r, i), k) * point_class(q * i + j) / (euler(r, i) * euler(s, j));
  return sum;
}

}  // namespace k0::oracle
