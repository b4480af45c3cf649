#pragma once

#include "hilbcone/rational.hpp"

#include <optional>
#include <vector>

namespace hilbcone {

using Vec = std::vector<Rational>;
/// Row-major dense matrix.
using Mat = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
Mat identity(std::size_t n);
/// Matrix whose columns are the given vectors.
Mat from_columns(const std::vector<Vec>& cols);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& v);
bool is_zero(const Vec& v);

/// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(const std::vector<Vec>& rows);

/// Basis of {x : m x = 0}. `cols` is needed when m has no rows.
std::vector<Vec> nullspace(const Mat& m, std::size_t cols);

/// Some solution of m x = b, or nullopt when inconsistent. Free variables are 0.
std::optional<Vec> solve(const Mat& m, const Vec& b, std::size_t cols);

/// Throws std::invalid_argument when singular.
Mat inverse(const Mat& m);

/// Positive multiple with coprime integer entries. Zero stays zero.
Vec primitive(const Vec& v);

}  // namespace hilbcone
