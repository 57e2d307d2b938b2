#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "arbelos/core_geometry.hpp"
#include "arbelos/error.hpp"
#include "arbelos/tolerance.hpp"
#include "support/reference.hpp"

using namespace arbelos;
using arbelos::testing::random_configs;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ArbelosError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected ArbelosError";
  return ErrorKind::InvalidOptions;
}

}  // namespace

TEST(ValidateConfig, AcceptsAdmissibleRange) {
  const ArbelosConfig c = validate_config(2.0, 1.0);
  EXPECT_EQ(c.radius(), 2.0);
  EXPECT_EQ(c.chord(), 1.0);
  EXPECT_NO_THROW(validate_config(1.0, 0.0));
  EXPECT_NO_THROW(validate_config(1.0, 1.0));
}

TEST(ValidateConfig, RejectsBadRadius) {
  EXPECT_EQ(kind_of([] { validate_config(0.0, 0.0); }), ErrorKind::NonPositiveRadius);
  EXPECT_EQ(kind_of([] { validate_config(-1.0, 0.5); }), ErrorKind::NonPositiveRadius);
  EXPECT_EQ(kind_of([] { validate_config(NAN, 0.5); }), ErrorKind::NonPositiveRadius);
  EXPECT_EQ(kind_of([] { validate_config(INFINITY, 0.5); }), ErrorKind::NonPositiveRadius);
}

TEST(ValidateConfig, RejectsChordOutsideRange) {
  EXPECT_EQ(kind_of([] { validate_config(1.0, 1.0000001); }), ErrorKind::ChordOutOfRange);
  EXPECT_EQ(kind_of([] { validate_config(1.0, -1e-300); }), ErrorKind::ChordOutOfRange);
  EXPECT_EQ(kind_of([] { validate_config(1.0, NAN); }), ErrorKind::ChordOutOfRange);
}

TEST(KnifeArea, Examples) {
  EXPECT_EQ(knife_area(validate_config(3.0, 0.0)), 0.0);
  EXPECT_NEAR(knife_area(validate_config(1.0, 1.0)), pi / 4, 1e-15);
  EXPECT_NEAR(knife_area(validate_config(2.0, 1.0)), 0.78539816339744831, 1e-15);
}

TEST(KnifeArea, IndependentOfRadius) {
  EXPECT_EQ(knife_area(validate_config(1.0, 0.5)), knife_area(validate_config(100.0, 0.5)));
}

TEST(ChordFromRadii, Examples) {
  EXPECT_TRUE(approx_equal(chord_from_radii(0.9, 0.1), 0.6));
  EXPECT_EQ(chord_from_radii(0.0, 7.0), 0.0);
  EXPECT_EQ(chord_from_radii(4.0, 1.0), 4.0);
}

TEST(ChordFromRadii, RejectsNegative) {
  EXPECT_EQ(kind_of([] { chord_from_radii(-0.1, 1.0); }), ErrorKind::NegativeRadius);
  EXPECT_EQ(kind_of([] { chord_from_radii(1.0, -2.0); }), ErrorKind::NegativeRadius);
}

TEST(RadiiFromChord, Examples) {
  const Radii eq = radii_from_chord(validate_config(2.0, 2.0), Branch::Plus);
  EXPECT_EQ(eq.R1, 1.0);
  EXPECT_EQ(eq.R2, 1.0);

  const Radii p = radii_from_chord(validate_config(1.0, 0.6), Branch::Plus);
  EXPECT_TRUE(approx_equal(p.R1, 0.9));
  EXPECT_TRUE(approx_equal(p.R2, 0.1));

  // (2 +- sqrt 3) / 2, 40-digit reference values.
  const Radii q = radii_from_chord(validate_config(2.0, 1.0), Branch::Plus);
  EXPECT_TRUE(approx_equal(q.R1, 1.8660254037844386));
  EXPECT_TRUE(approx_equal(q.R2, 0.13397459621556135));
  EXPECT_TRUE(approx_equal(4 * q.R1 * q.R2, 1.0));
}

TEST(RadiiFromChord, MinusSwapsPlus) {
  for (const auto& s : random_configs(200, 11)) {
    const ArbelosConfig c = validate_config(s.R, s.T);
    const Radii p = radii_from_chord(c, Branch::Plus);
    const Radii m = radii_from_chord(c, Branch::Minus);
    EXPECT_EQ(p.R1, m.R2);
    EXPECT_EQ(p.R2, m.R1);
    EXPECT_GE(p.R1, s.R / 2);
    EXPECT_LE(p.R2, s.R / 2);
  }
}

TEST(RadiiFromChord, MatchesBisection) {
  for (const auto& s : random_configs(200, 12)) {
    const Radii p = radii_from_chord(validate_config(s.R, s.T));
    const double ref = arbelos::testing::bisect_larger_root(s.T / s.R) * s.R;
    EXPECT_NEAR(p.R1, ref, 1e-12 * s.R);
  }
}

TEST(SemicircleAreas, Examples) {
  const SemicircleAreas a = semicircle_areas(validate_config(1.0, 0.6));
  EXPECT_TRUE(approx_equal(a.C1, 1.2723450247038663));
  EXPECT_TRUE(approx_equal(a.C2, 0.015707963267948966));

  const SemicircleAreas h = semicircle_areas(validate_config(1.0, 1.0));
  EXPECT_TRUE(approx_equal(h.C1, pi / 8));
  EXPECT_TRUE(approx_equal(h.C2, pi / 8));

  const SemicircleAreas b = semicircle_areas(validate_config(2.0, 1.0));
  EXPECT_TRUE(approx_equal(b.C1, 5.4695926182423959));
  EXPECT_TRUE(approx_equal(b.C2, 0.028194525539742308));
  EXPECT_TRUE(approx_equal(b.C1 + b.C2, 7 * pi / 4));
}

TEST(AreaDecomposition, Examples) {
  const AreaReport r = area_decomposition(validate_config(1.0, 0.6));
  EXPECT_TRUE(approx_equal(r.area_C, pi / 2));
  EXPECT_TRUE(approx_equal(r.area_C1, 0.405 * pi));
  EXPECT_TRUE(approx_equal(r.area_C2, 0.005 * pi));
  EXPECT_TRUE(approx_equal(r.area_knife, 0.09 * pi));
  EXPECT_TRUE(approx_equal(r.area_C1 + r.area_C2 + r.area_knife, pi / 2));

  const AreaReport d = area_decomposition(validate_config(1.0, 0.0));
  EXPECT_EQ(d.area_C, pi / 2);
  EXPECT_EQ(d.area_C1, pi / 2);
  EXPECT_EQ(d.area_C2, 0.0);
  EXPECT_EQ(d.area_knife, 0.0);

  const AreaReport s = area_decomposition(validate_config(3.0, 1.8));
  EXPECT_TRUE(approx_equal(s.area_C, 9 * r.area_C));
  EXPECT_TRUE(approx_equal(s.area_C1, 9 * r.area_C1));
  EXPECT_TRUE(approx_equal(s.area_C2, 9 * r.area_C2));
  EXPECT_TRUE(approx_equal(s.area_knife, 9 * r.area_knife));
}

TEST(CoreProperties, IdentitiesOnRandomConfigs) {
  for (const auto& s : random_configs(1000, 13)) {
    const ArbelosConfig c = validate_config(s.R, s.T);
    const AreaReport a = area_decomposition(c);
    const double half_disk = pi / 2 * s.R * s.R;
    EXPECT_TRUE(approx_equal_scaled(a.area_C1 + a.area_C2 + a.area_knife, half_disk, half_disk));
    EXPECT_TRUE(approx_equal_scaled(a.area_C1 + a.area_C2, half_disk - pi / 4 * s.T * s.T,
                                    half_disk));
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const Radii r = radii_from_chord(c, b);
      EXPECT_TRUE(approx_equal(r.R1 + r.R2, s.R));
      EXPECT_TRUE(approx_equal(4 * r.R1 * r.R2, s.T * s.T, 1e-12, 0.0));
    }
    const Radii p = radii_from_chord(c, Branch::Plus);
    EXPECT_TRUE(approx_equal(chord_from_radii(p.R1, p.R2), s.T, 1e-12, 0.0));
  }
}

TEST(CoreProperties, ScaleCovariance) {
  for (const double lambda : {1e-6, 1.0, 1e6}) {
    for (const auto& s : random_configs(100, 14)) {
      const AreaReport base = area_decomposition(validate_config(s.R, s.T));
      const AreaReport scaled = area_decomposition(validate_config(lambda * s.R, lambda * s.T));
      const double l2 = lambda * lambda;
      EXPECT_TRUE(approx_equal(scaled.area_C, l2 * base.area_C, 1e-12, 0.0));
      EXPECT_TRUE(approx_equal(scaled.area_C1, l2 * base.area_C1, 1e-12, 0.0));
      EXPECT_TRUE(approx_equal(scaled.area_C2, l2 * base.area_C2, 1e-12, 0.0));
      EXPECT_TRUE(approx_equal(scaled.area_knife, l2 * base.area_knife, 1e-12, 0.0));
    }
  }
}
