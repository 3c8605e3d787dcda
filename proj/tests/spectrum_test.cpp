#include "consec/spectrum.hpp"

#include <gtest/gtest.h>

#include "consec/arith.hpp"
#include "oracles.hpp"

namespace consec {
namespace {

using V = std::vector<Natural>;

V lengths_of(const std::vector<Decomposition>& ds) {
  V out;
  for (const auto& d : ds) out.push_back(d.length);
  return out;
}

TEST(Decompositions, Table1) {
  const auto ds = decompositions(45);
  const std::vector<Decomposition> expect = {
      {45, 1, 45}, {22, 2, 45}, {14, 3, 45}, {7, 5, 45}, {5, 6, 45}, {1, 9, 45}};
  EXPECT_EQ(ds, expect);
  const V factors = {1, 45, 3, 5, 15, 9};
  for (std::size_t i = 0; i < ds.size(); ++i) EXPECT_EQ(ds[i].factor(), factors[i]);
}

TEST(Decompositions, PowerOfTwoIsTrivialOnly) {
  EXPECT_EQ(decompositions(8), (std::vector<Decomposition>{{8, 1, 8}}));
}

TEST(Decompositions, TwentyOneMatchesExhaustiveRuns) {
  std::vector<Decomposition> expect;
  for (auto [first, len] : oracle::runs(21)) expect.push_back({first, len, 21});
  EXPECT_EQ(decompositions(21), expect);
  EXPECT_EQ(decompositions(21), (std::vector<Decomposition>{{21, 1, 21}, {10, 2, 21}, {6, 3, 21}, {1, 6, 21}}));
}

TEST(Decompositions, MatchExhaustiveRunsUpTo2000) {
  for (Natural n = 1; n <= 2000; ++n) {
    std::vector<Decomposition> expect;
    for (auto [first, len] : oracle::runs(n)) expect.push_back({first, len, n});
    ASSERT_EQ(decompositions(n), expect) << n;
  }
}

TEST(Decompositions, CompletenessAndSumInvariant) {
  for (Natural n = 1; n <= 100000; ++n) {
    const auto ds = decompositions(n);
    ASSERT_EQ(ds.size(), odd_divisors(n).size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const auto& d = ds[i];
      ASSERT_GE(d.first, 1u);
      ASSERT_EQ(d.length * d.first + d.length * (d.length - 1) / 2, n);
      if (i > 0) ASSERT_LT(ds[i - 1].length, d.length);
    }
  }
}

TEST(Decompositions, NearTopOfRange) {
  const Natural n = 18446744073709551557ull;  // prime: lengths 1 and 2
  const auto ds = decompositions(n);
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[1].length, 2u);
  EXPECT_EQ(ds[1].first, n / 2);
  EXPECT_EQ(ds[1].last(), n / 2 + 1);
}

TEST(Lspec, Examples) {
  EXPECT_EQ(lspec(45).elements(), (V{1, 2, 3, 5, 6, 9}));
  EXPECT_EQ(lspec(90).elements(), (V{1, 3, 4, 5, 9, 12}));
  EXPECT_EQ(lspec(1).elements(), (V{1}));
  EXPECT_EQ(lspec(45).odd(), (V{1, 3, 5, 9}));
  EXPECT_EQ(lspec(45).even(), (V{2, 6}));
  EXPECT_EQ(lspec(45).max_even(), 6u);
  EXPECT_EQ(lspec(1).max_even(), std::nullopt);
}

TEST(LspecOracle, Examples) {
  EXPECT_EQ(lspec_oracle(9).elements(), (V{1, 2, 3}));
  for (unsigned j = 0; j < 40; ++j) EXPECT_EQ(lspec_oracle(Natural{1} << j).elements(), (V{1}));
  EXPECT_EQ(lspec_oracle(15).elements(), oracle::spectrum(15));
  EXPECT_EQ(lspec_oracle(15).elements(), (V{1, 2, 3, 5}));
}

TEST(Lspec, EqualsOracleAndBruteForce) {
  for (Natural n = 1; n <= 100000; ++n) ASSERT_EQ(lspec(n), lspec_oracle(n)) << n;
  for (Natural n = 1; n <= 1500; ++n) ASSERT_EQ(lspec(n).elements(), oracle::spectrum(n)) << n;
}

TEST(Lspec, StructuralInvariantsUpTo1e5) {
  for (Natural n = 1; n <= 100000; ++n) {
    const auto s = lspec(n);
    const auto d = s.diagnose();
    ASSERT_TRUE(d.all()) << n;
    ASSERT_LE(s.even().size(), s.odd().size()) << n;
    ASSERT_EQ(s.elements() == V{1}, is_power_of_two(n)) << n;
  }
}

TEST(Shape, OfSpectrum) {
  EXPECT_EQ(shape_of(lspec(9)), SpectrumShape::Lopsided);
  EXPECT_EQ(shape_of(lspec(3)), SpectrumShape::Balanced);
  EXPECT_EQ(shape_of(lspec(1)), SpectrumShape::Unmixed);
}

TEST(Shape, OfNumber) {
  EXPECT_EQ(shape_of_number(75), SpectrumShape::Balanced);
  EXPECT_EQ(shape_of_number(9), SpectrumShape::Lopsided);
  EXPECT_EQ(shape_of_number(12), SpectrumShape::Unmixed);
  EXPECT_EQ(oracle::spectrum(12), (V{1, 3}));
  EXPECT_EQ(oracle::spectrum(75), (V{1, 2, 3, 5, 6, 10}));
}

TEST(Shape, NumberRouteAgreesWithSpectrum) {
  for (Natural n = 1; n <= 100000; ++n) ASSERT_EQ(shape_of_number(n), shape_of(lspec(n))) << n;
}

TEST(V2FromSpectrum, Examples) {
  EXPECT_EQ(v2_from_spectrum(Spectrum::from_elements({1, 3, 4, 5, 9, 12})), 1u);
  EXPECT_EQ(v2_from_spectrum(Spectrum::from_elements({1, 2})), 0u);
  EXPECT_EQ(v2_from_spectrum(Spectrum::from_elements({1})), std::nullopt);
  EXPECT_THROW(v2_from_spectrum(Spectrum::from_elements({1, 2, 4})), InvalidInput);
}

TEST(Spectrum, FromElementsCanonicalizes) {
  const auto s = Spectrum::from_elements({9, 1, 3, 3, 2, 1});
  EXPECT_EQ(s.elements(), (V{1, 2, 3, 9}));
  EXPECT_THROW(Spectrum::from_elements({1, 0, 2}), InvalidInput);
}

TEST(Spectrum, DiagnoseReportsEachFailure) {
  EXPECT_TRUE(Spectrum::from_elements({1, 3, 4, 5, 9, 12}).diagnose().all());
  auto d = Spectrum::from_elements({2, 3}).diagnose();
  EXPECT_FALSE(d.contains_one);
  EXPECT_FALSE(d.odd_divisor_closed);
  d = Spectrum::from_elements({1, 2, 4}).diagnose();
  EXPECT_FALSE(d.even_not_more_than_odd);
  EXPECT_FALSE(d.uniform_even_valuation);
  d = Spectrum::from_elements({1, 3, 6}).diagnose();
  EXPECT_TRUE(d.uniform_even_valuation);
  EXPECT_FALSE(d.even_mirrors_odd);
  EXPECT_FALSE(Spectrum::from_elements({}).diagnose().nonempty);
  EXPECT_EQ(Spectrum::from_elements({1, 9}).diagnose().failures(),
            (std::vector<std::string>{"odd part is not closed under divisors"}));
}

}  // namespace
}  // namespace consec
