#include "hilbcone/expr.hpp"
#include "hilbcone/severi.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <doctest.h>

using namespace hilbcone;

namespace {

Vec v(const SurfaceLattice& s, const std::string& text) { return ExprContext::for_surface(s, true).parse(text); }

}  // namespace

TEST_CASE("plane Severi classes") {
  const auto p2 = make_p2();
  const auto r = severi_class_p2(7, 12);
  CHECK(r.cls.to_vector() == v(p2, "18H-5/2B"));
  CHECK(r.flags.empty());
  CHECK(r.checks.dimension_equation.status == CheckStatus::Pass);
  CHECK(r.checks.genus_bound == CheckStatus::Pass);
  CHECK(r.checks.k3c_effective == Tri::Yes);
  CHECK(severi_class_p2(28, 145).cls.to_vector() == v(p2, "81H-5/2B"));

  const auto r18 = severi_class_p2(9, 18, 1);
  CHECK(r18.cls.to_vector() == v(p2, "24H-5/2B"));
  CHECK(r18.checks.dimension_equation.lhs == 55);
  CHECK(r18.checks.dimension_equation.rhs == 55);
  CHECK(r18.has_flag(flags::kEqSevPlusOne));

  const auto bad = severi_class_p2(9, 17);
  CHECK(bad.has_flag(flags::kDimEquationFail));
  CHECK(bad.checks.dimension_equation.status == CheckStatus::Fail);
  CHECK(severi_class_p2(6, 9).has_flag(flags::kTregerException));
  CHECK(severi_class_p2(4, 5).has_flag(flags::kDegreeBelow7));
}

TEST_CASE("specializations agree with the general formula") {
  const auto p2 = make_p2();
  for (long long d = 1; d <= 20; ++d)
    for (int n = 1; n <= 30; ++n)
      CHECK(severi_class_p2(d, n).cls == severi_class_general(p2, p2.make_class({d}), n).cls);
  for (int r = 0; r <= 5; ++r) {
    const auto fr = make_hirzebruch(r);
    for (long long a = 0; a <= 6; ++a)
      for (long long b = 0; b <= 8; ++b) {
        const auto sev = severi_class_hirzebruch(r, a, b, 7);
        CHECK(sev.cls == severi_class_general(fr, fr.make_class({a, b}), 7).cls);
        CHECK(sev.cls.b_coeff == Rational(-5, 2));
        CHECK(sev.cls.surface_part == fr.make_class({3 * a - 2, 3 * b - r - 2}));
      }
  }
}

TEST_CASE("Hirzebruch Severi classes") {
  const auto f1 = make_hirzebruch(1);
  CHECK(severi_class_hirzebruch(1, 3, 8, 10).cls.to_vector() == v(f1, "7E+21F-5/2B"));
  CHECK(severi_class_hirzebruch(1, 4, 7, 10).cls.to_vector() == v(f1, "10E+18F-5/2B"));
  const auto r = severi_class_hirzebruch(1, 7, 7, 12);
  CHECK(r.cls.to_vector() == v(f1, "19E+18F-5/2B"));
  CHECK(r.cls.to_vector() == v(f1, "18H+E-5/2B"));
  CHECK(r.checks.expected_dim_condition == CheckStatus::Pass);
  CHECK(severi_class_hirzebruch(1, 0, 35, 12).checks.k3c_effective == Tri::No);
  CHECK_THROWS_AS(severi_class_hirzebruch(1, -1, 3, 2), std::invalid_argument);
}

TEST_CASE("subcollection variant") {
  const auto p2 = make_p2();
  const auto r = severi_class_subcollection(7, 12, 13);
  CHECK(r.cls.to_vector() == v(p2, "216H-55/2B"));
  REQUIRE(r.ray);
  CHECK(r.ray->to_vector() == v(p2, "216/11H-5/2B"));
  CHECK(severi_class_subcollection(7, 12, 12).cls == severi_class_p2(7, 12).cls);
  CHECK_THROWS_AS(severi_class_subcollection(7, 12, 11), std::invalid_argument);
}

TEST_CASE("K3 and general classes") {
  const auto k3 = make_k3(8);
  const auto r = severi_class_general(k3, k3.make_class({1}), 2);
  CHECK(r.cls.to_vector() == v(k3, "3L-5/2B"));
  const auto bl = blow_up(make_p2(), 1);
  CHECK_THROWS_AS(severi_class_general(bl, bl.make_class({5, -1}), 4), std::invalid_argument);
  const auto with_h0 = severi_class_general(bl, bl.make_class({5, -1}), 6, Integer(20));
  CHECK(with_h0.cls.to_vector() == Vec{12, -2, Rational(-5, 2)});
}

TEST_CASE("ramification report") {
  const auto p2 = make_p2();
  const auto rep = ramification_report(p2, p2.make_class({7}), 12);
  CHECK(rep.gamma1_degree == 18);
  CHECK(rep.gamma2_degree == 5);
  const auto f1 = make_hirzebruch(1);
  const auto rf = ramification_report(f1, f1.make_class({7, 7}), 12);
  CHECK(rf.gamma1_degree == 19);
  CHECK(rf.gamma2_degree == 5);
}

TEST_CASE("plane enumeration") {
  CHECK(enumerate_p2_by_d(7) == 12);
  CHECK_FALSE(enumerate_p2_by_d(9));
  CHECK(enumerate_p2_by_d(28) == 145);
  const auto c = enumerate_p2(12);
  REQUIRE(c.size() == 1);
  CHECK(c[0].d == 7);
  CHECK(c[0].degree_at_least_7);
  CHECK(enumerate_p2(9).empty());
  const auto c7 = enumerate_p2(7);
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].d == 5);
  CHECK_FALSE(c7[0].degree_at_least_7);
  for (long long n = 1; n <= 200; ++n)
    for (const auto& cand : enumerate_p2(n)) {
      CHECK(oracle::monomials_p2(cand.d) == 3 * n);
      CHECK_FALSE(cand.treger_exception);
    }
}

TEST_CASE("Hirzebruch enumeration matches brute force") {
  for (long long r = 0; r <= 6; ++r)
    for (long long n : {1, 5, 10, 12}) {
      const auto e = enumerate_hirzebruch(r, n);
      std::vector<std::pair<long long, long long>> got;
      for (const auto& c : e.candidates) got.emplace_back(c.a, c.b);
      CHECK(got == oracle::brute_hirzebruch(r, n, 6 * n, 40 * n));
    }
}

TEST_CASE("Hirzebruch enumeration examples") {
  const auto e = enumerate_hirzebruch(1, 12);
  for (auto p : {std::pair<long long, long long>{7, 7}, {2, 12}, {0, 35}}) {
    const bool found = std::any_of(e.candidates.begin(), e.candidates.end(),
                                   [&](const HirzCandidate& c) { return c.a == p.first && c.b == p.second; });
    CHECK(found);
  }
  const auto e10 = enumerate_hirzebruch(1, 10, {HirzFilter::Chi, HirzFilter::Genus, HirzFilter::K3cEffective});
  std::vector<std::pair<long long, long long>> sel;
  for (const auto& c : e10.selected())
    if (c.a >= 1) sel.emplace_back(c.a, c.b);
  CHECK(sel == std::vector<std::pair<long long, long long>>{{3, 8}, {4, 7}});

  for (long long k = 1; k <= 5; ++k) {
    std::vector<long long> as;
    for (const auto& c : enumerate_hirzebruch(2 * k, 12).candidates) {
      as.push_back(c.a);
      CHECK(c.b == 36 / (c.a + 1) - 1 + k * c.a);
    }
    CHECK(as == std::vector<long long>{0, 1, 2, 3, 5, 8, 11, 17, 35});
  }
  CHECK(parse_hirz_filter("genus") == HirzFilter::Genus);
  CHECK_THROWS_AS(parse_hirz_filter("smooth"), std::invalid_argument);
}

TEST_CASE("K3 enumeration") {
  const auto e8 = enumerate_k3(8, 10);
  std::vector<std::pair<long long, long long>> got;
  for (const auto& s : e8.solutions) got.emplace_back(s.d, s.n);
  CHECK(got == oracle::brute_k3(8, 10, 10));
  CHECK(std::find(got.begin(), got.end(), std::pair<long long, long long>{1, 2}) != got.end());
  const auto extra = std::find_if(e8.solutions.begin(), e8.solutions.end(),
                                  [](const K3Candidate& c) { return c.d == 2 && c.n == 6; });
  REQUIRE(extra != e8.solutions.end());
  CHECK(std::find(extra->flags.begin(), extra->flags.end(), flags::kK3ExtraSolution) != extra->flags.end());
  CHECK(enumerate_k3(6, 100).solutions.empty());
  CHECK(enumerate_k3(4, 100).solutions.empty());
  for (int deg : {4, 6, 8}) {
    std::vector<std::pair<long long, long long>> all;
    for (const auto& s : enumerate_k3(deg, 300).solutions) all.emplace_back(s.d, s.n);
    CHECK(all == oracle::brute_k3(deg, 300, 40));
  }
  CHECK_THROWS_AS(enumerate_k3(5, 10), std::invalid_argument);
}

TEST_CASE("imposing walls") {
  for (long long d : {6, 11, 16, 21}) {
    const auto w = imposing_wall(d);
    CHECK(w.k == (3 * d - 3) / 5);
    CHECK(w.cls.b_coeff == Rational(-1, 2));
  }
  for (long long d : {7, 8, 9, 10}) CHECK_THROWS_AS(imposing_wall(d), std::invalid_argument);
}
