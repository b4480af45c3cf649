#include "oracles.hpp"

#include <algorithm>
#include <optional>

namespace oracle {

long long toric_h0_hirzebruch(long long r, long long a, long long b) {
  // Fan rays (1,0), (0,1), (-1,r), (0,-1); E is the divisor of (0,1) and F the
  // divisor of (1,0). Sections of aE+bF are the m with <m, v_i> >= -a_i.
  long long count = 0;
  for (long long m1 = -b; m1 <= b + r * a; ++m1)
    for (long long m2 = -a; m2 <= a; ++m2)
      if (m1 >= -b && m2 >= -a && -m1 + r * m2 >= 0 && -m2 >= 0) ++count;
  return count;
}

long long monomials_p2(long long d) {
  long long count = 0;
  for (long long i = 0; i <= d; ++i)
    for (long long j = 0; j <= d; ++j)
      for (long long k = 0; k <= d; ++k)
        if (i + j + k == d) ++count;
  return count;
}

Rational genus_hirzebruch(long long r, long long a, long long b) {
  return Rational((a - 1) * (b - 1)) - Rational(r * a * (a - 1), 2);
}

Rational chi_hirzebruch(long long r, long long a, long long b) {
  return Rational((a + 1) * (b + 1)) - Rational(r * a * (a + 1), 2);
}

Rational genus_p2(long long d) { return Rational((d - 1) * (d - 2), 2); }

std::vector<std::pair<long long, long long>> brute_hirzebruch(long long r, long long n, long long a_max,
                                                              long long b_max) {
  std::vector<std::pair<long long, long long>> out;
  for (long long a = 0; a <= a_max; ++a)
    for (long long b = 0; b <= b_max; ++b)
      if (chi_hirzebruch(r, a, b) == Rational(3 * n)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<long long, long long>> brute_k3(long long deg, long long n_max, long long d_max) {
  std::vector<std::pair<long long, long long>> out;
  for (long long d = 1; d <= d_max; ++d)
    for (long long n = 1; n <= n_max; ++n)
      if (deg * d * d + 4 == 6 * n) out.emplace_back(d, n);
  return out;
}

namespace {

// Solves sum x_i g_i = v for linearly independent g_i. Empty if dependent or inconsistent.
std::optional<Vec> solve_independent(const std::vector<Vec>& gens, const Vec& v) {
  const std::size_t k = gens.size();
  const std::size_t d = v.size();
  std::vector<Vec> a(d, Vec(k + 1));
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < k; ++col) a[row][col] = gens[col][row];
    a[row][k] = v[row];
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = pivot_row;
    while (p < d && a[p][col] == 0) ++p;
    if (p == d) return std::nullopt;
    std::swap(a[p], a[pivot_row]);
    for (std::size_t row = 0; row < d; ++row) {
      if (row == pivot_row || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[pivot_row][col];
      for (std::size_t c = col; c <= k; ++c) a[row][c] -= f * a[pivot_row][c];
    }
    ++pivot_row;
  }
  for (std::size_t row = k; row < d; ++row)
    if (a[row][k] != 0) return std::nullopt;
  Vec x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k] / a[i][i];
  return x;
}

}  // namespace

bool caratheodory_in_cone(const std::vector<Vec>& generators, const Vec& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
  const std::size_t m = generators.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Vec> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(generators[i]);
    if (subset.size() > v.size()) continue;
    const auto x = solve_independent(subset, v);
    if (x && std::all_of(x->begin(), x->end(), [](const Rational& c) { return c >= 0; })) return true;
  }
  return false;
}

Vec random_vec(std::mt19937& rng, std::size_t dim, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Vec v(dim);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::vector<Vec> random_rays(std::mt19937& rng, std::size_t dim, std::size_t count, int bound) {
  std::vector<Vec> out;
  while (out.size() < count) {
    Vec v = random_vec(rng, dim, bound);
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace oracle
