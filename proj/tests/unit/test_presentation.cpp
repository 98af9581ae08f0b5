#include <gtest/gtest.h>

#include "rspin/presentation.hpp"

using namespace rspin;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    out.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return out;
}

bool contains_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines(text))
    if (l.find(line) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Presentation, RootGroupGenusOne) {
  const auto ctx = solve_raymond_vasquez(signature(1, {3}), 2);
  const auto p = root_group_presentation(ctx, root_tuple(2, {0, 0}));
  ASSERT_EQ(p.generators.size(), 4u);
  EXPECT_EQ(p.generators[0].name(), "u~1");
  EXPECT_EQ(p.generators[1].name(), "v~1");
  EXPECT_EQ(p.generators[2].name(), "q~1");
  EXPECT_EQ(p.generators[3].name(), "h~");
  EXPECT_EQ(p.generators[3].shift, 2);

  ASSERT_EQ(p.relations.size(), 3u);
  const auto& lr = p.relations[0];
  ASSERT_EQ(lr.lhs.size(), 2u);
  EXPECT_EQ(lr.lhs[0].type, syllable::kind::commutator);
  EXPECT_EQ(lr.rhs, (group_word{{syllable::kind::power, 3, 0, 0}}));  // h~^b, b = 0
  EXPECT_EQ(p.relations[1].lhs, (group_word{{syllable::kind::power, 2, 0, 3}, {syllable::kind::power, 3, 0, 1}}));
  EXPECT_TRUE(p.relations[2].central);

  const auto text = render(p);
  EXPECT_TRUE(contains_line(text, "[u~1,v~1]q~1 = h~^0"));
  EXPECT_TRUE(contains_line(text, "q~1^3h~ = 1"));
  EXPECT_TRUE(contains_line(text, "h~ central"));
}

TEST(Presentation, TangentGroupGenusTwo) {
  const auto ctx = solve_raymond_vasquez(signature(2, {}), 1);
  const auto p = root_group_presentation(ctx, root_tuple(1, {0, 0, 0, 0}), group_kind::tangent);
  EXPECT_TRUE(contains_line(render(p), "[u1,v1][u2,v2] = h^2"));
  EXPECT_TRUE(contains_line(render(p), "h central"));
}

TEST(Presentation, OrbifoldGroupHasNoFibre) {
  const auto ctx = solve_raymond_vasquez(signature(0, {2, 3, 7}), 1);
  const auto p = root_group_presentation(ctx, root_tuple(1, {}), group_kind::orbifold);
  EXPECT_EQ(p.generators.size(), 3u);
  const auto text = render(p);
  EXPECT_TRUE(contains_line(text, "q1q2q3 = 1"));
  EXPECT_TRUE(contains_line(text, "q3^7 = 1"));
  EXPECT_FALSE(contains_line(text, "central"));
}

TEST(Presentation, OrderOneDecorationsVanish) {
  const auto ctx = solve_raymond_vasquez(signature(2, {5}), 1);
  const auto p = root_group_presentation(ctx, root_tuple(1, {0, 0, 0, 0}));
  for (const auto& g : p.generators)
    if (g.family != 'h') {
      EXPECT_EQ(g.shift, 0);
    }
  EXPECT_EQ(p.generators.back().shift, 1);
}

TEST(Presentation, DecorationsFollowRootAndK) {
  const auto ctx = solve_raymond_vasquez(signature(2, {7}), 5);  // 7 * chi = -20
  const auto p = root_group_presentation(ctx, root_tuple(5, {1, 2, 0, 1}));
  EXPECT_EQ(p.generators[0].shift, 1);
  EXPECT_EQ(p.generators[1].shift, 2);
  EXPECT_EQ(p.generators[3].shift, 1);
  EXPECT_EQ(p.generators[4].shift, ctx.k[0]);
  EXPECT_TRUE(contains_line(render(p), "u~1 := u1 h^-1"));
}

TEST(Presentation, DimensionMismatch) {
  const auto ctx = solve_raymond_vasquez(signature(1, {3}), 2);
  EXPECT_THROW(root_group_presentation(ctx, root_tuple(2, {0, 0, 0, 0})), error);
  EXPECT_THROW(root_group_presentation(ctx, root_tuple(1, {0, 0})), error);
}
