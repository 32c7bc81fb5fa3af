#include "golden_tables.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rhotensor;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_algebra(name)); }

template <std::size_t N>
std::map<Weight, Integer> golden_map(const std::array<golden::Entry, N>& table) {
  std::map<Weight, Integer> out;
  for (const auto& e : table) out.emplace(Weight{e.a, e.b}, e.mult);
  return out;
}

/// Peel irreducibles off the product of full characters, highest first.
std::map<Weight, Integer> peel_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  oracle::Poly prod;
  for (const auto& [a, ca] : oracle::weyl_character(rs, lam))
    for (const auto& [b, cb] : oracle::weyl_character(rs, mu)) prod[a + b] += ca * cb;
  auto height = [&](const Weight& w) {
    Rational h = 0;
    for (const auto& c : oracle::root_coords(rs, w)) h += c;
    return h;
  };
  std::map<Weight, Integer> out;
  while (true) {
    for (auto it = prod.begin(); it != prod.end();) it = it->second == 0 ? prod.erase(it) : std::next(it);
    if (prod.empty()) break;
    auto top = prod.begin();
    for (auto it = prod.begin(); it != prod.end(); ++it)
      if (height(it->first) > height(top->first)) top = it;
    const Weight nu = top->first;
    const Integer c = top->second;
    out[nu] += c;
    for (const auto& [w, m] : oracle::weyl_character(rs, nu)) prod[w] -= c * m;
  }
  return out;
}

Weight random_dominant(std::mt19937& gen, int rank, int max) {
  std::uniform_int_distribution<int> dist(0, max);
  Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[i] = dist(gen);
  return w;
}

}  // namespace

TEST(Klimyk, ClebschGordan) {
  auto rs = rs_of("A1");
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b) {
      std::map<Weight, Integer> expected;
      for (int k = 0; k <= std::min(a, b); ++k) expected[Weight{a + b - 2 * k}] = 1;
      EXPECT_EQ(klimyk(rs, Weight{a}, Weight{b}).components, expected) << a << " x " << b;
    }
}

TEST(Klimyk, PublishedRankTwoTables) {
  auto b2 = rs_of("B2");
  auto g2 = rs_of("G2");
  EXPECT_EQ(klimyk(b2, Weight{5, 5}, Weight{2, 2}).components, golden_map(golden::kB2Product55x22));
  EXPECT_EQ(klimyk(g2, Weight{5, 5}, Weight{2, 2}).components, golden_map(golden::kG2Product55x22));
  EXPECT_EQ(klimyk(g2, Weight{3, 3}, Weight{4, 4}).components, golden_map(golden::kG2Product33x44));
  EXPECT_EQ(klimyk(g2, Weight{3, 3}, Weight{4, 4}).multiplicity(Weight{4, 4}), 48);
  EXPECT_EQ(klimyk(b2, Weight{5, 5}, Weight{2, 2}).multiplicity(Weight{5, 5}), 5);
}

TEST(Klimyk, AgreesWithCharacterPeeling) {
  for (auto [name, lam, mu] : std::vector<std::tuple<const char*, Weight, Weight>>{
           {"A2", {2, 1}, {1, 1}}, {"B2", {2, 1}, {1, 2}}, {"G2", {1, 1}, {1, 0}}, {"C3", {1, 0, 1}, {0, 1, 0}},
           {"A3", {1, 1, 0}, {0, 1, 1}}, {"B3", {1, 0, 1}, {1, 0, 0}}}) {
    auto rs = rs_of(name);
    EXPECT_EQ(klimyk(rs, lam, mu).components, peel_decompose(rs, lam, mu)) << name << lam.tuple() << mu.tuple();
  }
}

TEST(Klimyk, AgreesWithOracleDecompose) {
  std::mt19937 gen(41);
  for (const char* name : {"A2", "B2", "G2", "A3", "C3", "B3"}) {
    auto rs = rs_of(name);
    for (int t = 0; t < 5; ++t) {
      Weight lam = random_dominant(gen, rs.rank(), rs.rank() == 2 ? 3 : 2);
      Weight mu = random_dominant(gen, rs.rank(), 2);
      EXPECT_EQ(klimyk(rs, lam, mu), oracle_decompose(rs, lam, mu)) << name << lam.tuple() << mu.tuple();
    }
  }
}

TEST(Klimyk, CommutativeUnitalAndConserving) {
  std::mt19937 gen(43);
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3", "D4"}) {
    auto rs = rs_of(name);
    const Weight zero(static_cast<std::size_t>(rs.rank()));
    for (int t = 0; t < 4; ++t) {
      Weight lam = random_dominant(gen, rs.rank(), rs.rank() >= 4 ? 1 : 3);
      Weight mu = random_dominant(gen, rs.rank(), rs.rank() >= 4 ? 1 : 2);
      auto ab = klimyk(rs, lam, mu);
      auto ba = klimyk(rs, mu, lam);
      EXPECT_EQ(ab.components, ba.components);
      EXPECT_NO_THROW(check_conservation(rs, ab));
      EXPECT_EQ(ab.multiplicity(lam + mu), 1);
      for (const auto& nu : ab.support()) EXPECT_TRUE(dominance_le(rs, nu, lam + mu));
      EXPECT_EQ(klimyk(rs, lam, zero).components, (std::map<Weight, Integer>{{lam, 1}}));
    }
  }
}

TEST(Klimyk, ConservationDetectsTampering) {
  auto rs = rs_of("B2");
  auto d = klimyk(rs, Weight{1, 1}, Weight{1, 0});
  d.components.begin()->second += 1;
  EXPECT_THROW(check_conservation(rs, d), InvariantError);
  d.components.begin()->second = 0;
  EXPECT_THROW(check_conservation(rs, d), InvariantError);
}

TEST(Klimyk, RejectsBadArguments) {
  auto rs = rs_of("B2");
  EXPECT_THROW(klimyk(rs, Weight{1, -1}, Weight{0, 0}), std::invalid_argument);
  EXPECT_THROW(klimyk(rs, Weight{1}, Weight{0, 0}), std::invalid_argument);
  EXPECT_THROW(klimyk(rs_of("B2~"), Weight{0, 1, 1}, Weight{0, 1, 1}), std::invalid_argument);
}

TEST(Containment, ComponentQueries) {
  auto rs = rs_of("B2");
  CharacterCache cache;
  EXPECT_FALSE(contains_component(rs, Weight{5, 5}, Weight{2, 2}, Weight{0, 1}, cache));
  EXPECT_TRUE(contains_component(rs, Weight{5, 5}, Weight{2, 2}, Weight{7, 7}, cache));
  EXPECT_TRUE(contains_component(rs, Weight{5, 5}, Weight{2, 2}, Weight{3, 3}, cache));
  EXPECT_FALSE(contains_component(rs, Weight{5, 5}, Weight{2, 2}, Weight{2, 2}, cache));
}

TEST(Saturation, ScalingBehaviour) {
  auto rs = rs_of("B2");
  CharacterCache cache;
  const Weight rho = rs.rho();
  EXPECT_TRUE(saturation_check(rs, rho, rho, 2 * rho, 1, cache));
  EXPECT_THROW(saturation_check(rs, rho, rho, rho, 1, cache), LatticeError);
  EXPECT_TRUE(saturation_check(rs, rho, rho, Weight{0, 0}, 1, cache));
  for (int d = 1; d <= 3; ++d) EXPECT_TRUE(saturation_check(rs, Weight{1, 0}, Weight{0, 2}, Weight{1, 2}, d, cache));
  auto a1 = rs_of("A1");
  EXPECT_FALSE(saturation_check(a1, Weight{1}, Weight{1}, Weight{4}, 2, cache));
  EXPECT_THROW(saturation_check(a1, Weight{1}, Weight{0}, Weight{0}, 1, cache), LatticeError);
  EXPECT_THROW(saturation_check(a1, Weight{1}, Weight{1}, Weight{0}, 0, cache), std::invalid_argument);
}

TEST(Schur, Comparison) {
  auto rs = rs_of("A1");
  auto a = klimyk(rs, Weight{3}, Weight{1});
  auto b = klimyk(rs, Weight{2}, Weight{2});
  EXPECT_TRUE(schur_compare(a, b).dominates);
  auto back = schur_compare(b, a);
  EXPECT_FALSE(back.dominates);
  ASSERT_EQ(back.witnesses.size(), 1u);
  EXPECT_EQ(back.witnesses[0], (SchurWitness{Weight{0}, 1, 0}));
  EXPECT_THROW(schur_compare(a, klimyk(rs, Weight{1}, Weight{1})), std::invalid_argument);
  EXPECT_THROW(schur_compare(a, klimyk(rs_of("A2"), Weight{2, 0}, Weight{2, 0})), std::invalid_argument);
}

TEST(Schur, RhoMultiplesOnRankTwo) {
  // Moving one copy of rho to the smaller factor can only enlarge the product.
  for (const char* name : {"A2", "B2", "G2"}) {
    auto rs = rs_of(name);
    const Weight rho = rs.rho();
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {4, 1}}) {
      auto a = klimyk(rs, m * rho, n * rho);
      auto b = klimyk(rs, (m - 1) * rho, (n + 1) * rho);
      EXPECT_TRUE(schur_compare(a, b).dominates) << name << " " << m << "," << n;
    }
  }
}

TEST(PairOrder, Cases) {
  auto rs = rs_of("B2");
  const Weight rho = rs.rho();
  EXPECT_TRUE(pair_order_le(rs, rho, rho, rho, rho));
  for (int m = 2; m <= 5; ++m)
    for (int n = 0; n < m - 1; ++n) EXPECT_TRUE(pair_order_le(rs, m * rho, n * rho, (m - 1) * rho, (n + 1) * rho));
  auto fail = pair_order_le(rs, rho, rho, 2 * rho, Weight{0, 0});
  EXPECT_FALSE(fail);
  ASSERT_TRUE(fail.violating_root.has_value());
  EXPECT_TRUE(fail.violating_root->in_positive_cone());
  EXPECT_GT(oracle::coroot_pairing(rs, rho, *fail.violating_root), 0);
  EXPECT_THROW(pair_order_le(rs, rho, rho, rho, Weight{0, 0}), std::invalid_argument);
}

TEST(PairOrder, AgreesWithCorootOracle) {
  std::mt19937 gen(47);
  for (const char* name : {"B2", "G2", "A3"}) {
    auto rs = rs_of(name);
    for (int t = 0; t < 40; ++t) {
      Weight lam = random_dominant(gen, rs.rank(), 3), mu = random_dominant(gen, rs.rank(), 3);
      Weight total = lam + mu;
      Weight lam_p = random_dominant(gen, rs.rank(), 3);
      for (int i = 0; i < rs.rank(); ++i) lam_p[i] = std::min(lam_p[i], total[i]);
      Weight mu_p = total - lam_p;
      bool expected = true;
      for (const auto& beta : rs.positive_roots()) {
        auto left = std::min(oracle::coroot_pairing(rs, lam, beta), oracle::coroot_pairing(rs, mu, beta));
        auto right = std::min(oracle::coroot_pairing(rs, lam_p, beta), oracle::coroot_pairing(rs, mu_p, beta));
        if (left > right) expected = false;
      }
      EXPECT_EQ(bool(pair_order_le(rs, lam, mu, lam_p, mu_p)), expected);
    }
  }
}
