#include "hilbcone/linalg.hpp"

#include <stdexcept>

namespace hilbcone {

namespace mp = boost::multiprecision;

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const Mat bt = transpose(b);
  Mat out(a.size(), Vec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) out[i][j] = dot(a[i], bt[j]);
  return out;
}

Mat identity(std::size_t n) {
  Mat m(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat from_columns(const std::vector<Vec>& cols) { return transpose(Mat(cols.begin(), cols.end())); }

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Rational& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const std::vector<Vec>& rows) {
  Mat m(rows.begin(), rows.end());
  return rref(m).size();
}

std::vector<Vec> nullspace(const Mat& m, std::size_t cols) {
  Mat r(m.begin(), m.end());
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b, std::size_t cols) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  Mat aug;
  aug.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw std::invalid_argument("solve: ragged matrix");
    Vec row = m[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug);
  for (auto p : pivots)
    if (p == cols) return std::nullopt;
  Vec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

Mat inverse(const Mat& m) {
  const std::size_t n = m.size();
  Mat aug;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    Vec row = m[i];
    for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? Rational(1) : Rational(0));
    aug.push_back(std::move(row));
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) {
    throw std::invalid_argument("inverse: singular matrix");
  }
  Mat inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = Vec(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return inv;
}

Vec primitive(const Vec& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& x : v) den_lcm = mp::lcm(den_lcm, Integer(mp::denominator(x)));
  Integer num_gcd = 0;
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Integer k = mp::numerator(x) * (den_lcm / mp::denominator(x));
    num_gcd = mp::gcd(num_gcd, Integer(mp::abs(k)));
    ints.push_back(std::move(k));
  }
  Vec out;
  out.reserve(v.size());
  for (auto& k : ints) out.emplace_back(Integer(k / num_gcd));
  return out;
}

}  // namespace hilbcone
