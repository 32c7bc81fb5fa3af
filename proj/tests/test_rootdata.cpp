#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rhotensor;

namespace {

RootSystem rs_of(const char* name) { return build_root_system(parse_algebra(name)); }

Weight random_weight(std::mt19937& gen, int rank, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Weight w(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) w[i] = dist(gen);
  return w;
}

const std::vector<const char*> kFiniteTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
                                               "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

}  // namespace

TEST(AlgebraId, ParsesFiniteAndAffineNames) {
  auto id = parse_algebra("A1~");
  EXPECT_EQ(id.family, 'A');
  EXPECT_EQ(id.rank, 1);
  EXPECT_TRUE(id.affine);
  EXPECT_EQ(id.str(), "A1~");
  EXPECT_EQ(parse_algebra("E8").str(), "E8");
  EXPECT_FALSE(parse_algebra("G2").affine);
}

TEST(AlgebraId, RejectsInvalidRanksNamingTheConstraint) {
  auto message = [](const char* s) {
    try {
      parse_algebra(s);
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(message("E9").find("6"), std::string::npos);
  EXPECT_NE(message("D2").find("3"), std::string::npos);
  EXPECT_NE(message("F3").find("4"), std::string::npos);
  EXPECT_NE(message("G3").find("2"), std::string::npos);
  EXPECT_NE(message("B1~").find("2"), std::string::npos);
  EXPECT_EQ(message("H3").find("accepted"), std::string::npos);
  EXPECT_EQ(message("A0").find("accepted"), std::string::npos);
  EXPECT_EQ(message("B").find("accepted"), std::string::npos);
}

TEST(RootSystem, PositiveRootCountsMatchClassicalFormulas) {
  auto expected = [](const AlgebraId& id) {
    const int n = id.rank;
    switch (id.family) {
      case 'A': return n * (n + 1) / 2;
      case 'B':
      case 'C': return n * n;
      case 'D': return n * (n - 1);
      case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
      case 'F': return 24;
      default: return 6;
    }
  };
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    EXPECT_EQ(static_cast<int>(rs.positive_roots().size()), expected(rs.id())) << name;
  }
}

TEST(RootSystem, RankOneAndRankTwoCartanMatrices) {
  auto a1 = rs_of("A1");
  EXPECT_EQ(a1.cartan()(0, 0), 2);
  EXPECT_EQ(a1.positive_roots().size(), 1u);

  auto b2 = rs_of("B2");
  EXPECT_EQ(b2.cartan()(0, 1), -1);
  EXPECT_EQ(b2.cartan()(1, 0), -2);
  EXPECT_EQ(b2.positive_roots().size(), 4u);

  auto g2 = rs_of("G2");
  EXPECT_EQ(g2.cartan()(0, 1), -3);
  EXPECT_EQ(g2.cartan()(1, 0), -1);
  EXPECT_EQ(g2.positive_roots().size(), 6u);
}

TEST(RootSystem, CartanIsSymmetrizableAndNormalized) {
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    const auto& a = rs.cartan();
    const auto& d = rs.symmetrizers();
    for (int i = 0; i < rs.rank(); ++i) {
      EXPECT_EQ(a(i, i), 2);
      EXPECT_GT(d[i], 0);
      for (int j = 0; j < rs.rank(); ++j) {
        if (i != j) {
          EXPECT_LE(a(i, j), 0);
        }
        EXPECT_EQ(d[i] * a(i, j), d[j] * a(j, i)) << name;
      }
    }
    const Weight& theta = rs.highest_root_weight();
    EXPECT_EQ(bilinear_form(rs, theta, theta), 2) << name;
    EXPECT_EQ(oracle::form(rs, theta, theta), 2) << name;
  }
}

TEST(RootSystem, PositiveRootsLieInThePositiveCone) {
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    for (const auto& root : rs.positive_roots()) EXPECT_TRUE(root.in_positive_cone()) << name;
  }
}

TEST(RootSystem, PositiveRootsSumToTwiceRho) {
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    std::vector<Rational> sum(rs.rank(), 0);
    for (const auto& root : rs.positive_roots())
      for (int i = 0; i < rs.rank(); ++i) sum[i] += root.coords[i];
    EXPECT_EQ(sum, oracle::root_coords(rs, 2 * rs.rho())) << name;
  }
}

TEST(RootSystem, PositiveRootWeightsMatchRootCoordinates) {
  for (const char* name : {"B3", "G2", "F4"}) {
    auto rs = rs_of(name);
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      auto c = oracle::root_coords(rs, rs.positive_root_weights()[k]);
      for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(c[i], rs.positive_roots()[k].coords[i]);
    }
  }
}

TEST(RootSystem, StrangeFormulaHolds) {
  // (rho|rho) = h^vee dim(g) / 12 with long roots of square length 2.
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    EXPECT_EQ(oracle::form(rs, rs.rho(), rs.rho()), Rational(rs.dual_coxeter() * rs.finite_dimension(), 12)) << name;
  }
}

TEST(RootSystem, DualCoxeterNumbers) {
  EXPECT_EQ(rs_of("A1").dual_coxeter(), 2);
  EXPECT_EQ(rs_of("A3").dual_coxeter(), 4);
  EXPECT_EQ(rs_of("B2").dual_coxeter(), 3);
  EXPECT_EQ(rs_of("B3").dual_coxeter(), 5);
  EXPECT_EQ(rs_of("C3").dual_coxeter(), 4);
  EXPECT_EQ(rs_of("D4").dual_coxeter(), 6);
  EXPECT_EQ(rs_of("E8").dual_coxeter(), 30);
  EXPECT_EQ(rs_of("F4").dual_coxeter(), 9);
  EXPECT_EQ(rs_of("G2").dual_coxeter(), 4);
}

TEST(RootSystem, AffineDataExtendsTheFiniteData) {
  for (const char* name : {"A1~", "A2~", "B2~", "G2~", "D4~"}) {
    auto rs = rs_of(name);
    ASSERT_TRUE(rs.affine());
    EXPECT_EQ(rs.weight_size(), rs.rank() + 1);
    EXPECT_EQ(rs.dual_marks()[0], 1);
    int sum = 0;
    for (int a : rs.dual_marks()) sum += a;
    EXPECT_EQ(sum, rs.dual_coxeter()) << name;
    for (int m = 0; m <= 3; ++m) EXPECT_EQ(level(rs, affine_rho_multiple(rs, m)), m * rs.dual_coxeter());
    // Affine Cartan: finite block plus node 0 with <alpha_0, alpha_i^vee> = -<theta, alpha_i^vee>.
    const auto& a = rs.affine_cartan();
    EXPECT_EQ(a(0, 0), 2);
    for (int i = 0; i < rs.rank(); ++i) {
      EXPECT_EQ(a(i + 1, 0), -rs.highest_root_weight()[i]);
      for (int j = 0; j < rs.rank(); ++j) EXPECT_EQ(a(i + 1, j + 1), rs.cartan()(i, j));
    }
  }
}

TEST(RootSystem, MakeAffineRecoversLevelAndFinitePart) {
  auto rs = rs_of("A2~");
  Weight fin{2, 1};
  Weight w = make_affine(rs, fin, 6, -2);
  EXPECT_EQ(level(rs, w), 6);
  EXPECT_EQ(finite_part(w), fin);
  EXPECT_EQ(w.delta(), -2);
  EXPECT_EQ(w[0], 3);
}

// ---------------------------------------------------------------------------

TEST(ToDominant, DominantRegularInputIsFixedWithPlusSign) {
  auto rs = rs_of("B2");
  auto r = to_dominant(rs, Weight{2, 3});
  EXPECT_EQ(r.dominant, (Weight{2, 3}));
  EXPECT_EQ(r.sign, 1);
  EXPECT_TRUE(r.word.empty());
}

TEST(ToDominant, Sl2SingleReflection) {
  auto rs = rs_of("A1");
  auto r = to_dominant(rs, Weight{-3});
  EXPECT_EQ(r.dominant, Weight{3});
  EXPECT_EQ(r.sign, -1);
}

TEST(ToDominant, B2WallCase) {
  auto rs = rs_of("B2");
  auto r = to_dominant(rs, Weight{-1, 0});
  EXPECT_EQ(r.sign, 0);
  EXPECT_EQ(r.dominant, dominant_of(rs, Weight{-1, 0}));
  // The orbit is short, so the stabilizer is nontrivial.
  EXPECT_LT(oracle::brute_orbit(rs, Weight{-1, 0}).size(), 8u);
}

TEST(ToDominant, SignZeroExactlyOnWallsAndWordReproducesInput) {
  std::mt19937 gen(7);
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    auto rs = rs_of(name);
    const auto group_order = oracle::weyl_group(rs).size();
    for (int trial = 0; trial < 200; ++trial) {
      Weight w = random_weight(gen, rs.rank(), -4, 4);
      auto r = to_dominant(rs, w);
      EXPECT_TRUE(r.dominant.is_dominant());
      const auto orb = oracle::brute_orbit(rs, w);
      EXPECT_TRUE(orb.contains(r.dominant));
      EXPECT_EQ(r.sign == 0, orb.size() < group_order) << name << " " << w.tuple();
      std::vector<int> back(r.word.rbegin(), r.word.rend());
      EXPECT_EQ(apply_word(rs, r.dominant, back), w);
      // The sign of a regular weight is that of the unique element mapping it.
      if (r.sign != 0) {
        for (const auto& g : oracle::weyl_group(rs))
          if (oracle::apply(rs, g, w) == r.dominant) {
            EXPECT_EQ(g.sign, r.sign);
          }
      }
      Weight xi = w;
      const int reg = reflect_regular(rs, xi);
      EXPECT_EQ(reg, r.sign);
      if (reg != 0) {
        EXPECT_EQ(xi, r.dominant);
      }
    }
  }
}

TEST(Orbit, SmallCases) {
  EXPECT_EQ(orbit(rs_of("B2"), Weight{0, 0}), std::vector<Weight>{(Weight{0, 0})});
  EXPECT_EQ(orbit(rs_of("B2"), Weight{1, 1}).size(), 8u);
  EXPECT_EQ(orbit(rs_of("G2"), Weight{1, 0}).size(), 6u);
}

TEST(Orbit, MatchesGroupEnumeration) {
  std::mt19937 gen(11);
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    auto rs = rs_of(name);
    const auto order = oracle::weyl_group(rs).size();
    for (int trial = 0; trial < 30; ++trial) {
      Weight w = random_weight(gen, rs.rank(), -3, 3);
      auto mine = orbit(rs, w);
      auto ref = oracle::brute_orbit(rs, w);
      EXPECT_EQ(std::vector<Weight>(ref.begin(), ref.end()), mine) << name << " " << w.tuple();
      EXPECT_EQ(order % mine.size(), 0u);
    }
  }
}

TEST(Orbit, WeylGroupOrders) {
  EXPECT_EQ(oracle::weyl_group(rs_of("B2")).size(), 8u);
  EXPECT_EQ(oracle::weyl_group(rs_of("G2")).size(), 12u);
  EXPECT_EQ(oracle::weyl_group(rs_of("A3")).size(), 24u);
  EXPECT_EQ(oracle::weyl_group(rs_of("B3")).size(), 48u);
}

// ---------------------------------------------------------------------------

TEST(Dominance, Examples) {
  auto a1 = rs_of("A1");
  EXPECT_TRUE(dominance_le(a1, Weight{0}, Weight{2}));
  EXPECT_FALSE(dominance_le(a1, Weight{1}, Weight{2}));
  EXPECT_TRUE(dominance_le(a1, Weight{3}, Weight{3}));
  auto b2 = rs_of("B2");
  EXPECT_TRUE(dominance_le(b2, Weight{0, 1}, 7 * b2.rho()));
}

TEST(Dominance, AgreesWithRationalSolve) {
  std::mt19937 gen(3);
  for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
    auto rs = rs_of(name);
    for (int trial = 0; trial < 200; ++trial) {
      Weight a = random_weight(gen, rs.rank(), -3, 3), b = random_weight(gen, rs.rank(), -3, 3);
      EXPECT_EQ(dominance_le(rs, a, b), oracle::is_nonneg_integral(oracle::root_coords(rs, b - a)));
      EXPECT_EQ(root_coordinates(rs, b - a), oracle::root_coords(rs, b - a));
    }
  }
}

TEST(Dominance, PartialOrderAxiomsOnRandomDominantTriples) {
  std::mt19937 gen(5);
  for (const char* name : {"A2", "B2", "G2", "B3"}) {
    auto rs = rs_of(name);
    for (int trial = 0; trial < 400; ++trial) {
      Weight a = random_weight(gen, rs.rank(), 0, 3), b = random_weight(gen, rs.rank(), 0, 3),
             c = random_weight(gen, rs.rank(), 0, 3);
      EXPECT_TRUE(dominance_le(rs, a, a));
      if (dominance_le(rs, a, b) && dominance_le(rs, b, a)) {
        EXPECT_EQ(a, b);
      }
      if (dominance_le(rs, a, b) && dominance_le(rs, b, c)) {
        EXPECT_TRUE(dominance_le(rs, a, c));
      }
    }
  }
}

// ---------------------------------------------------------------------------

TEST(BilinearForm, BasicIdentities) {
  auto a1 = rs_of("A1");
  EXPECT_EQ(bilinear_form(a1, Weight{1}, Weight{1}), Rational(1, 2));
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    Weight zero(static_cast<std::size_t>(rs.rank()));
    EXPECT_EQ(bilinear_form(rs, zero, rs.rho()), 0);
    for (int i = 0; i < rs.rank(); ++i) {
      EXPECT_EQ(bilinear_form(rs, rs.simple_root(i), rs.simple_root(i)), 2 * rs.symmetrizers()[i]);
      for (int j = 0; j < rs.rank(); ++j) {
        Weight om(static_cast<std::size_t>(rs.rank()));
        om[i] = 1;
        EXPECT_EQ(bilinear_form(rs, om, rs.simple_root(j)), i == j ? rs.symmetrizers()[j] : Rational(0));
      }
    }
  }
}

TEST(BilinearForm, SymmetricAndMatchesOracle) {
  std::mt19937 gen(13);
  for (const char* name : {"B3", "C3", "G2", "F4", "D4"}) {
    auto rs = rs_of(name);
    for (int trial = 0; trial < 50; ++trial) {
      Weight a = random_weight(gen, rs.rank(), -4, 4), b = random_weight(gen, rs.rank(), -4, 4);
      EXPECT_EQ(bilinear_form(rs, a, b), bilinear_form(rs, b, a));
      EXPECT_EQ(bilinear_form(rs, a, b), oracle::form(rs, a, b));
    }
  }
}

TEST(BilinearForm, AffineFormHasIsotropicDeltaAndLevelPairing) {
  auto rs = rs_of("A2~");
  Weight delta = Weight{0, 0, 0}.with_delta(1);
  Weight lam = make_affine(rs, Weight{1, 2}, 5, 0);
  EXPECT_EQ(bilinear_form(rs, delta, delta), 0);
  EXPECT_EQ(bilinear_form(rs, lam, delta), 5);
  // Finite part contributes the finite form.
  auto fin = rs_of("A2");
  Weight mu = make_affine(rs, Weight{2, 0}, 5, -3);
  EXPECT_EQ(bilinear_form(rs, lam, mu), bilinear_form(fin, Weight{1, 2}, Weight{2, 0}) + 5 * -3);
}

// ---------------------------------------------------------------------------

TEST(WeylDimension, ClassicalValues) {
  auto a1 = rs_of("A1");
  for (int m = 0; m <= 20; ++m) EXPECT_EQ(weyl_dimension(a1, Weight{m}), m + 1);
  EXPECT_EQ(weyl_dimension(rs_of("B2"), Weight{1, 0}), 5);
  EXPECT_EQ(weyl_dimension(rs_of("B2"), Weight{0, 1}), 4);
  EXPECT_EQ(weyl_dimension(rs_of("G2"), Weight{1, 0}), 7);
  EXPECT_EQ(weyl_dimension(rs_of("G2"), Weight{0, 1}), 14);
  for (const char* name : kFiniteTypes) {
    auto rs = rs_of(name);
    EXPECT_EQ(weyl_dimension(rs, Weight(static_cast<std::size_t>(rs.rank()))), 1);
    EXPECT_EQ(weyl_dimension(rs, rs.highest_root_weight()), rs.finite_dimension()) << name;
  }
}

TEST(WeylDimension, RejectsNonDominantAndAffine) {
  EXPECT_THROW(weyl_dimension(rs_of("B2"), Weight{-1, 2}), std::invalid_argument);
  EXPECT_THROW(weyl_dimension(rs_of("A1~"), Weight{1, 1}), std::invalid_argument);
}

TEST(WeylDimension, MatchesOrbitCountOfTheCharacterQuotient) {
  for (auto [name, w] : std::vector<std::pair<const char*, Weight>>{{"B2", {2, 2}}, {"G2", {1, 1}}, {"A2", {2, 1}}}) {
    auto rs = rs_of(name);
    Integer total = 0;
    for (const auto& [mu, m] : oracle::weyl_character(rs, w)) total += m;
    EXPECT_EQ(weyl_dimension(rs, w), total) << name;
  }
}

TEST(CorootPairing, MatchesRootCoordinateFormula) {
  std::mt19937 gen(17);
  for (const char* name : {"B2", "G2", "C3", "F4"}) {
    auto rs = rs_of(name);
    for (int trial = 0; trial < 20; ++trial) {
      Weight lam = random_weight(gen, rs.rank(), 0, 5);
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
        EXPECT_EQ(Rational(coroot_pairing(rs, lam, k)), oracle::coroot_pairing(rs, lam, rs.positive_roots()[k]));
    }
  }
}

TEST(WeightParsing, AcceptsCommaListsAndDeltaSuffix) {
  EXPECT_EQ(parse_weight("5,5"), (Weight{5, 5}));
  EXPECT_EQ(parse_weight("(1,-2)"), (Weight{1, -2}));
  Weight w = parse_weight("1,1:d-2");
  EXPECT_EQ(w.delta(), -2);
  EXPECT_EQ(w.str(), "1,1:d-2");
  EXPECT_THROW(parse_weight(""), std::invalid_argument);
  EXPECT_THROW(parse_weight("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_weight("a"), std::invalid_argument);
}
