#include <gtest/gtest.h>

#include <set>

#include "rspin/roots.hpp"
#include "rspin/verify.hpp"

using namespace rspin;

TEST(EnumerateRoots, GenusZeroHasOnlyTheEmptyTuple) {
  const auto ctx = solve_raymond_vasquez(signature(0, {2, 3, 7}), 1);
  const auto stream = enumerate_roots(ctx);
  std::vector<root_tuple> all(stream.begin(), stream.end());
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].coords().empty());
}

TEST(EnumerateRoots, GenusOneOrderTwo) {
  const auto ctx = solve_raymond_vasquez(signature(1, {3}), 2);
  std::vector<std::string> got;
  for (const auto& root : enumerate_roots(ctx)) got.push_back(root.str());
  EXPECT_EQ(got, (std::vector<std::string>{"0,0", "0,1", "1,0", "1,1"}));
}

TEST(EnumerateRoots, LexicographicWithoutDuplicates) {
  const auto ctx = solve_raymond_vasquez(signature(2, {}), 2);
  std::set<root_tuple> seen;
  root_tuple prev;
  bool first = true;
  for (const auto& root : enumerate_roots(ctx)) {
    EXPECT_TRUE(seen.insert(root).second);
    if (!first) {
      EXPECT_LT(prev, root);
    }
    prev = root;
    first = false;
  }
  EXPECT_EQ(seen.size(), 16u);

  const auto ctx3 = solve_raymond_vasquez(signature(3, {}), 4);
  EXPECT_EQ(enumerate_roots(ctx3).size(), 4096u);
}

TEST(EnumerateRoots, CapOverflow) {
  const auto ctx = solve_raymond_vasquez(signature(3, {}), 4);
  try {
    enumerate_roots(ctx, 4095);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::count_overflow);
  }
  EXPECT_NO_THROW(enumerate_roots(ctx, 4096));
}

TEST(StateCodec, PackIsInverseOfUnpack) {
  const state_codec codec(5, 2);
  for (std::uint64_t i = 0; i < codec.size(); ++i) EXPECT_EQ(codec.pack(codec.unpack(i)), i);
}

TEST(RootTuple, ReducesCoordinates) {
  const root_tuple t(5, {7, -1});
  EXPECT_EQ(t.s(1), 2);
  EXPECT_EQ(t.t(1), 4);
  EXPECT_THROW(root_tuple(5, {1, 2, 3}), error);
  EXPECT_THROW(root_tuple(0, {}), error);
}

TEST(DeterminedValues, Examples) {
  const auto a = determined_values(solve_raymond_vasquez(signature(1, {3}), 2));
  EXPECT_EQ(a.h_value, 1);
  EXPECT_EQ(a.q_values, (std::vector<std::int64_t>{0}));

  const auto b = determined_values(solve_raymond_vasquez(signature(0, {2, 3, 7}), 1));
  EXPECT_EQ(b.h_value, 0);
  EXPECT_EQ(b.q_values, (std::vector<std::int64_t>{0, 0, 0}));
}

// (0; 5,5,5) has alpha * chi = -50, so r = 3 is inadmissible; r = 2 gives
// 2 beta = 4 (mod 5), beta = 2, k = 0 for every cone point.
TEST(DeterminedValues, EqualConesShareValue) {
  EXPECT_THROW(solve_raymond_vasquez(signature(0, {5, 5, 5}), 3), error);
  const auto ctx = solve_raymond_vasquez(signature(0, {5, 5, 5}), 2);
  const auto v = determined_values(ctx);
  EXPECT_EQ(v.h_value, 1);
  EXPECT_EQ(v.q_values, (std::vector<std::int64_t>{0, 0, 0}));

  const auto ctx7 = solve_raymond_vasquez(signature(0, {3, 3, 3, 3}), 2);  // 81 * -2/3 = -54
  const auto v7 = determined_values(ctx7);
  EXPECT_EQ(v7.q_values[0], v7.q_values[1]);
  EXPECT_EQ(v7.q_values[0], v7.q_values[3]);
}

TEST(DeterminedValues, ConsistentWithRelations) {
  for (const auto& sig : signature_grid(3, 3, 9)) {
    for (auto r : admissible_root_orders(sig)) {
      const auto ctx = solve_raymond_vasquez(sig, r);
      const auto v = determined_values(ctx);
      std::int64_t sum = 0;
      for (std::size_t j = 0; j < v.q_values.size(); ++j) {
        sum += v.q_values[j];
        const auto alpha = sig.cone_points[j];
        // delta(q_j^alpha h^{alpha-1}) = 0
        EXPECT_EQ(mod_floor(v.q_values[j] * alpha + (alpha - 1) * v.h_value, r), 0);
      }
      // delta(prod q_j) = delta(h^{2g-2})
      EXPECT_EQ(mod_floor(sum, r), mod_floor((2 * sig.genus - 2) * v.h_value, r));
    }
  }
}
