#include "hilbcone/expr.hpp"
#include "hilbcone/hilbpic.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hilbcone;

namespace {

HilbDivClass cls(const SurfaceLattice& s, const std::string& text, int n) {
  ExprContext ctx = ExprContext::for_surface(s, true);
  return HilbDivClass::from_vector(ctx.parse(text), n);
}

}  // namespace

TEST_CASE("lifts and the exceptional divisor") {
  const auto p2 = make_p2();
  const auto h3 = lift_divisor(p2, p2.named("H"), 3);
  CHECK(h3.b_coeff == 0);
  CHECK(h3.surface_part == p2.named("H"));
  CHECK(exceptional_divisor(p2, 3).b_coeff == 1);

  const auto f1 = make_hirzebruch(1);
  CHECK(lift_divisor(f1, f1.make_class({1, 1}), 12) == lift_divisor(f1, f1.named("H"), 12));
}

TEST_CASE("Pic integrality") {
  const auto p2 = make_p2();
  CHECK(is_pic_integral(cls(p2, "18H-5/2B", 12)));
  CHECK(is_pic_integral(cls(p2, "7H-B", 12)));
  CHECK(is_pic_integral(cls(p2, "17H-1/2B", 145)));
  CHECK_FALSE(is_pic_integral(cls(p2, "18H-5/4B", 12)));
  CHECK_FALSE(is_pic_integral(cls(p2, "1/2H-B", 12)));
}

TEST_CASE("curve pairings") {
  const auto p2 = make_p2();
  const auto gamma1 = curve_from_divisor(p2, p2.named("H"), 12);
  CHECK(pair(gamma1, cls(p2, "18H-5/2B", 12)) == 18);
  CHECK(pair(gamma1, exceptional_divisor(p2, 12)) == 0);

  const auto fr = make_hirzebruch(2);
  const auto cf = curve_from_divisor(fr, fr.named("F"), 5);
  CHECK(pair(cf, lift_divisor(fr, fr.named("E"), 5)) == 1);

  const auto p4 = curve_from_pairings({Rational(4)}, Rational(28), 12, "P4");
  CHECK(pair(p4, cls(p2, "7H-B", 12)) == 0);
  CHECK(pair(p4, cls(p2, "18H-5/2B", 12)) == 2);
  CHECK(pair(p4, exceptional_divisor(p2, 12)) == 28);
}

TEST_CASE("gamma2 is the Hilbert-Chow fiber") {
  const auto p2 = make_p2();
  const auto g2 = gamma2(p2, 12);
  // gamma2 . Sev = 5 with B-coefficient -5/2 forces gamma2 . B = 5 / (-5/2).
  const Rational forced = Rational(5) / Rational(-5, 2);
  CHECK(g2.b_value == forced);
  CHECK(pair(g2, cls(p2, "18H-5/2B", 12)) == 5);
  CHECK(pair(g2, lift_divisor(p2, p2.named("H"), 12)) == 0);
  CHECK_THROWS_AS(gamma2(p2, 1), std::invalid_argument);
}

TEST_CASE("lifted pairing equals the surface pairing") {
  std::mt19937 rng(7);
  const auto f3 = make_hirzebruch(3);
  for (int i = 0; i < 50; ++i) {
    const SurfaceClass d0(oracle::random_vec(rng, 2, 9));
    const SurfaceClass d(oracle::random_vec(rng, 2, 9));
    CHECK(pair(curve_from_divisor(f3, d0, 4), lift_divisor(f3, d, 4)) == pair(f3, d0, d));
  }
}

TEST_CASE("pullback along a blowup") {
  const auto p2 = make_p2();
  const auto bl = blow_up(p2, 1);
  const auto h = lift_divisor(p2, p2.named("H"), 3);
  const auto up = pullback_blowup_hilb(h, p2, bl);
  CHECK(up.surface_part == bl.make_class({1, 0}));
  CHECK(pullback_blowup_hilb(exceptional_divisor(p2, 3), p2, bl) == exceptional_divisor(bl, 3));
  CHECK(pullback_blowup_hilb(cls(p2, "7H-B", 3), p2, bl).to_vector() == Vec{7, 0, -1});
  CHECK_THROWS_AS(pullback_blowup_hilb(h, make_hirzebruch(1), bl), std::invalid_argument);
}

TEST_CASE("roof transport") {
  for (int r = 0; r <= 10; ++r) {
    const auto fr = make_hirzebruch(r);
    const auto fr1 = make_hirzebruch(r + 1);
    CHECK(transport_up(fr, lift_divisor(fr, fr.named("H"), 4)) == lift_divisor(fr1, fr1.named("H"), 4));
    CHECK(transport_up(fr, lift_divisor(fr, fr.named("E"), 4)) == lift_divisor(fr1, fr1.make_class({1, 1}), 4));
    CHECK(transport_up(fr, lift_divisor(fr, fr.named("F"), 4)) == lift_divisor(fr1, fr1.named("F"), 4));
    CHECK(transport_down(fr1, lift_divisor(fr1, fr1.named("E"), 4)) == lift_divisor(fr, fr.named("E"), 4));
    CHECK(transport_down(fr1, exceptional_divisor(fr1, 4)) == exceptional_divisor(fr, 4));
    // aH + bB keeps its (H, B) coordinates.
    const auto d = cls(fr, "3H-7/2B", 4);
    CHECK(transport_up(fr, d) == cls(fr1, "3H-7/2B", 4));
  }
  CHECK(transport_up_matrix(2) == Mat{{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
}

TEST_CASE("slope decomposition") {
  const auto p2 = make_p2();
  const auto j = cls(p2, "7H-B", 12);
  const auto h = lift_divisor(p2, p2.named("H"), 12);
  CHECK(slope_decompose(cls(p2, "18H-5/2B", 12), j, h) == Rational(1, 5));
  CHECK(slope_decompose(cls(p2, "25H-7/2B", 12), j, h) == Rational(1, 7));
  CHECK(slope_decompose(j, j, h) == 0);
  CHECK_THROWS_AS(slope_decompose(h, j, h), std::invalid_argument);
}

TEST_CASE("class formatting") {
  const auto p2 = make_p2();
  CHECK(format_class(p2, cls(p2, "18H-5/2B", 12)) == "18H-5/2B");
  CHECK(format_class(p2, cls(p2, "0H", 12)) == "0");
  CHECK(format_vector({"E", "F", "B"}, Vec{1, -1, Rational(1, 2)}) == "E-F+1/2B");
}
