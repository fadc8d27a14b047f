#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "quadclass/qform.hpp"
#include "quadclass/rayclass.hpp"

using namespace quadclass;

TEST(DiscData, Basics) {
  const DiscData d47 = disc_data(47);
  EXPECT_EQ(d47.delta, 2112);
  EXPECT_EQ(d47.delta0, 33);
  EXPECT_EQ(d47.f, 8);
  EXPECT_EQ(d47.d_prime, 47);
  EXPECT_EQ(disc_data(12).d_prime, 24);
  EXPECT_THROW(disc_data(3), std::domain_error);
  EXPECT_THROW(disc_data(1), std::domain_error);
  for (long d = 4; d <= 2000; ++d) {
    const DiscData data = disc_data(d);
    EXPECT_EQ(data.f * data.f * data.delta0, (d + 1) * (d - 3));
    EXPECT_TRUE(is_fundamental_discriminant(data.delta0));
  }
}

TEST(PhiK, Examples) {
  EXPECT_EQ(phi_K(5, 1), 1);
  EXPECT_EQ(phi_K(5, 4), 12);
  EXPECT_EQ(phi_K(5, 24), 384);
  EXPECT_THROW(phi_K(5, 0), std::invalid_argument);
}

TEST(PhiK, AgreesWithResidueEnumeration) {
  for (long disc0 : {5L, 8L, 12L, 13L, 33L, 105L}) {
    for (long n = 1; n <= 60; ++n) EXPECT_EQ(phi_K(disc0, n), oracle::phi_K_enumerate(disc0, n)) << disc0 << " " << n;
  }
}

TEST(RayClassSize, Examples) {
  EXPECT_EQ(ray_class_size(4, 1, 2, false), 4);
  EXPECT_EQ(ray_class_size(4, 1, 2, true), 8);
  EXPECT_EQ(ray_class_size(12, 3, 2, false), 48);
  EXPECT_EQ(ray_class_size(12, 3, 2, true), 96);
  EXPECT_EQ(ray_class_size(47, 1, 2, false), 1472);
  EXPECT_THROW(ray_class_size(47, 3, 2, false), std::invalid_argument);
  EXPECT_THROW(ray_class_size(47, 1, 3, false), std::invalid_argument);
  EXPECT_THROW(ray_class_size(47, 1, 2, true), std::invalid_argument);
}

TEST(RayClassSize, NineBranch) {
  // d = 12 = 3 mod 9 and 3 | f' selects c = 9; f' = 1 keeps c = 6.
  const RayClassField field = RayClassField::for_dimension(12);
  EXPECT_EQ(field.class_number_K, 1);
  EXPECT_EQ(field.data.delta0, 13);
  EXPECT_EQ(field.unit_index, 2u);  // eps_12 = ((3 + sqrt 13)/2)^2
  // phi_K(36) over Q(sqrt 13): 36^2 (1/2)(3/2)(2/3)(2/3).
  EXPECT_EQ(phi_K(13, 36), 432);
  EXPECT_EQ(field.ray_class_size(3, 2, false), Integer(4 * 432) / (9 * 2 * 2));
  EXPECT_EQ(field.ray_class_size(1, 2, false), Integer(4 * phi_K(13, 12)) / (6 * 2));
}

TEST(Degrees, Examples) {
  EXPECT_EQ(degree_E(5, 1), 16);
  EXPECT_EQ(degree_Etilde(5, 1), 16);
  EXPECT_EQ(degree_E(8, 3), 32);
  EXPECT_EQ(degree_Etilde(8, 3), 64);
  EXPECT_EQ(degree_E(15, 4), 192);
  EXPECT_EQ(degree_Etilde(15, 4), 192);
}

TEST(Degrees, DoublingLawsAndIntegrality) {
  for (long d = 4; d <= 500; ++d) {
    const RayClassField field = RayClassField::for_dimension(d);
    for (const Integer& fp : field.data.conductors()) {
      const Integer s0 = field.ray_class_size(fp, 0, false);
      EXPECT_EQ(field.ray_class_size(fp, 1, false), 2 * s0);
      EXPECT_EQ(field.ray_class_size(fp, 2, false), 4 * s0);
      if (d % 2 == 0) {
        EXPECT_EQ(field.ray_class_size(fp, 0, true), 2 * s0);
        EXPECT_EQ(field.degree_Etilde(fp), 2 * field.degree_E(fp));
      } else {
        EXPECT_EQ(field.degree_Etilde(fp), field.degree_E(fp));
      }
    }
  }
}

TEST(Degrees, DivisibilityAlongInclusions) {
  for (long d = 4; d <= 200; ++d) {
    const RayClassField field = RayClassField::for_dimension(d);
    const auto cs = field.data.conductors();
    for (const Integer& f1 : cs) {
      for (const Integer& f2 : cs) {
        if (!divides(f1, f2)) continue;
        EXPECT_TRUE(divides(field.degree_Etilde(f1), field.degree_Etilde(f2))) << d << " " << f1 << " " << f2;
      }
    }
  }
}

TEST(Degeneration, Predicate) {
  EXPECT_TRUE(degeneration_predicate(47));
  EXPECT_FALSE(degeneration_predicate(48));
  EXPECT_TRUE(degeneration_predicate(303));
  EXPECT_THROW(degeneration_predicate(3), std::domain_error);
}

TEST(Degeneration, Pairs) {
  using Pairs = std::vector<std::pair<Integer, Integer>>;
  EXPECT_EQ(degenerate_pairs(47), (Pairs{{1, 2}}));
  EXPECT_EQ(degenerate_pairs(303), (Pairs{{1, 2}, {5, 10}}));
  EXPECT_EQ(degenerate_pairs(467), (Pairs{{1, 2}, {3, 6}}));
  EXPECT_TRUE(degenerate_pairs(4).empty());
}

TEST(Degeneration, EvenSmallerConductorDoesNotDegenerate) {
  // d = 47 has f = 8; the comparable pairs (2,4) and (4,8) have distinct degrees.
  const RayClassField field = RayClassField::for_dimension(47);
  EXPECT_NE(field.degree_E(2), field.degree_E(4));
  EXPECT_NE(field.degree_E(4), field.degree_E(8));
}

TEST(Density, SmallScans) {
  const DensityScan s500 = density_scan(500);
  EXPECT_EQ(s500.count(), 11u);
  EXPECT_EQ(s500.members,
            (std::vector<Integer>{47, 67, 83, 175, 211, 259, 303, 339, 431, 447, 467}));
  EXPECT_TRUE(s500.family_violations.empty());
  EXPECT_EQ(s500.ratio, mpq_class(11, 500));
  const DensityScan s128 = density_scan(128);
  EXPECT_EQ(s128.members, (std::vector<Integer>{47, 67, 83}));
  EXPECT_THROW(density_scan(3), std::invalid_argument);
}

TEST(Multiplets, Examples) {
  const MultipletReport r8 = multiplet_report(8);
  ASSERT_EQ(r8.entries.size(), 2u);
  EXPECT_EQ(r8.entries[0].degree_E, 8);
  EXPECT_EQ(r8.entries[0].degree_Etilde, 16);
  EXPECT_EQ(r8.entries[1].conductor, 3);
  EXPECT_EQ(r8.entries[1].degree_E, 32);
  EXPECT_EQ(r8.entries[1].degree_Etilde, 64);
  const MultipletReport r47 = multiplet_report(47);
  EXPECT_EQ(r47.entries[1].conductor, 2);
  EXPECT_EQ(r47.entries[1].degenerate_with, Integer(1));
  const MultipletReport r4 = multiplet_report(4);
  ASSERT_EQ(r4.entries.size(), 1u);
  EXPECT_EQ(r4.entries[0].class_number, 1);
  EXPECT_EQ(r4.entries[0].degree_E, 4);
  EXPECT_EQ(r4.entries[0].degree_Etilde, 8);
  EXPECT_FALSE(r4.entries[0].degenerate_with.has_value());
  const MultipletReport r11 = multiplet_report(11);
  ASSERT_EQ(r11.entries.size(), 2u);
  EXPECT_EQ(r11.entries[0].class_number, 1);
  EXPECT_EQ(r11.entries[1].class_number, 2);
  EXPECT_EQ(r11.entries[0].degree_Etilde, 80);
  EXPECT_EQ(r11.entries[1].degree_Etilde, 160);
  const MultipletReport r9 = multiplet_report(9);
  ASSERT_EQ(r9.entries.size(), 1u);
  EXPECT_EQ(r9.entries[0].class_number, 2);
  EXPECT_EQ(r9.entries[0].degree_E, 72);
  EXPECT_EQ(r9.entries[0].degree_Etilde, 72);
  const MultipletReport r14 = multiplet_report(14);
  ASSERT_EQ(r14.entries.size(), 1u);
  EXPECT_EQ(r14.entries[0].class_number, 2);
  EXPECT_EQ(r14.entries[0].degree_E, 144);
  EXPECT_EQ(r14.entries[0].degree_Etilde, 288);
}

TEST(Multiplets, TotalIsClassMonoidSize) {
  for (long d = 4; d <= 90; ++d) EXPECT_EQ(multiplet_report(d).total, class_monoid_size(d)) << d;
}

TEST(Uniqueness, Scans) {
  EXPECT_EQ(smallest_monoid_scan(30), (std::vector<Integer>{4, 5, 6, 10, 22}));
  EXPECT_EQ(smallest_monoid_scan(4), (std::vector<Integer>{4}));
}

TEST(GrowthTrend, Samples) {
  const auto s22 = brauer_siegel_trend(22, 22);
  EXPECT_DOUBLE_EQ(s22[0].log_ratio, 0.0);
  const auto s41 = brauer_siegel_trend(41, 41);
  EXPECT_NEAR(s41[0].log_ratio, std::log(8.0) / std::log(41.0), 1e-12);
}
