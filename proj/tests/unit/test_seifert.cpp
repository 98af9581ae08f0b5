#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rspin/seifert.hpp"
#include "rspin/verify.hpp"

using namespace rspin;

TEST(SolveRaymondVasquez, OrderOneIsUnitTangentBundle) {
  for (const auto& sig : signature_grid(3, 3, 9)) {
    const auto ctx = solve_raymond_vasquez(sig, 1);
    EXPECT_EQ(ctx.invariants.b, 2 * sig.genus - 2);
    for (std::size_t j = 0; j < sig.cone_count(); ++j) {
      EXPECT_EQ(ctx.invariants.fibres[j].beta, sig.cone_points[j] - 1);
      EXPECT_EQ(ctx.k[j], 0);
    }
    EXPECT_EQ(unit_tangent_bundle(sig), ctx);
  }
}

TEST(SolveRaymondVasquez, GenusOneOneCone) {
  const auto ctx = solve_raymond_vasquez(signature(1, {3}), 2);
  EXPECT_EQ(ctx.invariants.fibres, (std::vector<fibre>{{3, 1}}));
  EXPECT_EQ(ctx.k, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(ctx.invariants.b, 0);
  EXPECT_EQ(ctx.euler_number, rational(-1, 3));
}

TEST(SolveRaymondVasquez, GenusTwoOneCone) {
  const auto ctx = solve_raymond_vasquez(signature(2, {3}), 2);
  EXPECT_EQ(ctx.invariants.fibres, (std::vector<fibre>{{3, 1}}));
  EXPECT_EQ(ctx.k, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(ctx.invariants.b, 1);
  EXPECT_EQ(ctx.euler_number, rational(-4, 3));
}

TEST(SolveRaymondVasquez, Errors) {
  try {
    solve_raymond_vasquez(signature(1, {3}), 5);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::inadmissible_order);
  }
  try {
    solve_raymond_vasquez(signature(1, {}), 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_hyperbolic);
  }
}

TEST(UnitTangentBundle, Examples) {
  const auto a = unit_tangent_bundle(signature(2, {}));
  EXPECT_EQ(a.invariants.b, 2);
  EXPECT_TRUE(a.invariants.fibres.empty());
  EXPECT_EQ(a.euler_number, rational(-2));

  const auto b = unit_tangent_bundle(signature(0, {2, 3, 7}));
  EXPECT_EQ(b.invariants.b, -2);
  EXPECT_EQ(b.invariants.fibres, (std::vector<fibre>{{2, 1}, {3, 2}, {7, 6}}));
  EXPECT_EQ(b.euler_number, rational(-1, 42));

  const auto c = unit_tangent_bundle(signature(1, {3}));
  EXPECT_EQ(c.invariants.b, 0);
  EXPECT_EQ(c.invariants.fibres, (std::vector<fibre>{{3, 2}}));
  EXPECT_EQ(c.euler_number, rational(-2, 3));
}

// Smaller grid than the acceptance run; both directions of the existence
// criterion against an exhaustive search over beta.
TEST(SolveRaymondVasquez, EquivalenceWithBruteForce) {
  for (const auto& sig : signature_grid(2, 2, 7)) {
    for (std::int64_t r = 1; r <= 30; ++r) {
      const bool admissible = root_order_admissible(sig, r);
      ASSERT_EQ(admissible, oracle::rv_solvable(sig.genus, sig.cone_points, r)) << sig.str() << " r=" << r;
      if (!admissible) {
        EXPECT_THROW(solve_raymond_vasquez(sig, r), error);
        continue;
      }
      const auto ctx = solve_raymond_vasquez(sig, r);
      EXPECT_EQ(rational(r) * ctx.euler_number, chi_orb(sig));
      std::int64_t sum_k = 0;
      for (std::size_t j = 0; j < ctx.k.size(); ++j) {
        const auto [alpha, beta] = ctx.invariants.fibres[j];
        EXPECT_GE(beta, 1);
        EXPECT_LE(beta, alpha - 1);
        EXPECT_EQ(r * beta, alpha - 1 + ctx.k[j] * alpha);
        sum_k += ctx.k[j];
      }
      EXPECT_EQ(r * ctx.invariants.b, 2 * sig.genus - 2 - sum_k);
    }
  }
}

TEST(SolveRaymondVasquez, EqualMultiplicitiesShareBetaAndK) {
  for (std::int64_t a = 3; a <= 9; ++a) {
    const signature sig(0, {a, a, a, a});
    for (auto r : admissible_root_orders(sig)) {
      const auto ctx = solve_raymond_vasquez(sig, r);
      for (std::size_t j = 1; j < 4; ++j) {
        EXPECT_EQ(ctx.k[j], ctx.k[0]);
        EXPECT_EQ(ctx.invariants.fibres[j], ctx.invariants.fibres[0]);
      }
    }
  }
}

TEST(RecognizeFibreIndex, Examples) {
  const auto ctx = recognize_fibre_index({2, 1, {{3, 1}}});
  EXPECT_EQ(ctx.order, 2);
  EXPECT_EQ(ctx.k, (std::vector<std::int64_t>{0}));
  EXPECT_EQ(ctx.euler_number, rational(-4, 3));
  EXPECT_EQ(ctx, solve_raymond_vasquez(signature(2, {3}), 2));

  EXPECT_EQ(recognize_fibre_index({2, 2, {}}).order, 1);

  try {
    recognize_fibre_index({2, 0, {}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_sl2_quotient);
  }
}

TEST(RecognizeFibreIndex, RejectsNonQuotients) {
  // e = -3 but chi = -2: ratio 2/3.
  EXPECT_THROW(recognize_fibre_index({2, 3, {}}), error);
  // e = -1/3, chi = -4/3, r = 4, but 4 * 5 - 6 + 1 is not divisible by 6.
  try {
    recognize_fibre_index({1, -1, {{2, 1}, {6, 5}}});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_sl2_quotient);
  }
  // beta outside [1, alpha - 1]
  EXPECT_THROW(recognize_fibre_index({2, 1, {{3, 3}}}), error);
  EXPECT_THROW(recognize_fibre_index({1, 0, {}}), error);
}

TEST(RecognizeFibreIndex, RoundTripsSolve) {
  for (const auto& sig : signature_grid(3, 2, 9))
    for (auto r : admissible_root_orders(sig)) {
      const auto ctx = solve_raymond_vasquez(sig, r);
      EXPECT_EQ(recognize_fibre_index(ctx.invariants), ctx);
    }
}
