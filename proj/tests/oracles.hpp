#pragma once

// Reference computations that share no code with the library: brute-force
// lattice point counts, closed-form genus and Euler characteristic, exhaustive
// searches and cone membership by Caratheodory subsets.

#include "hilbcone/linalg.hpp"

#include <random>
#include <utility>
#include <vector>

namespace oracle {

using hilbcone::Integer;
using hilbcone::Rational;
using hilbcone::Vec;

/// Lattice points of the toric polygon of aE+bF on F_r, counted over a box.
long long toric_h0_hirzebruch(long long r, long long a, long long b);
/// Monomials of degree d in three variables.
long long monomials_p2(long long d);

/// (a-1)(b-1) - r a(a-1)/2
Rational genus_hirzebruch(long long r, long long a, long long b);
/// (a+1)(b+1) - r a(a+1)/2
Rational chi_hirzebruch(long long r, long long a, long long b);
Rational genus_p2(long long d);

/// All (a, b) with a <= a_max, b <= b_max and chi = 3n.
std::vector<std::pair<long long, long long>> brute_hirzebruch(long long r, long long n, long long a_max,
                                                              long long b_max);
/// All (d, n) with n <= n_max and deg d^2 / 2 + 2 = 3n, searching d <= d_max.
std::vector<std::pair<long long, long long>> brute_k3(long long deg, long long n_max, long long d_max);

/// Is v a nonnegative combination of the generators? Tries every linearly
/// independent subset.
bool caratheodory_in_cone(const std::vector<Vec>& generators, const Vec& v);

/// Random integral vector with entries in [-bound, bound].
Vec random_vec(std::mt19937& rng, std::size_t dim, int bound);
std::vector<Vec> random_rays(std::mt19937& rng, std::size_t dim, std::size_t count, int bound);

}  // namespace oracle
