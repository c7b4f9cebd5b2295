#include "test_util.hpp"

#include "udapp/demos.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace udapp;
using namespace udapp::test;

TEST(GroupFrameTest, PaddedBoundingBox)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("b", {40, 20, 10, 10}));
    s.create_group("g", "G", {"a", "b"}, 8);
    EXPECT_EQ(s.group("g").frame, (RectBounds{-8, -8, 66, 46}));
    EXPECT_EQ(s.group("g").frame, padded_box({{0, 0, 10, 10}, {40, 20, 10, 10}}, 8));
}

TEST(GroupFrameTest, ZeroMargin)
{
    Scene s;
    s.add_element(rect("a", {5, 5, 10, 10}));
    s.create_group("g", "G", {"a"}, 0);
    EXPECT_EQ(s.group("g").frame, (RectBounds{5, 5, 10, 10}));
}

TEST(GroupFrameTest, AllHiddenEmptiesFrame)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("b", {20, 0, 10, 10}));
    s.create_group("g", "G", {"a", "b"});
    s.set_hidden("a", true);
    s.set_hidden("b", true);
    EXPECT_FALSE(s.group("g").frame);
    EXPECT_FALSE(s.is_visible("g"));
    EXPECT_EQ(s.recompute_frame("g"), std::nullopt);
}

TEST(GroupFrameTest, GroupSitsBelowMembers)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("b", {20, 0, 10, 10}));
    s.create_group("g", "G", {"a", "b"});
    const auto& z = s.z_order();
    const auto pos = [&](const ElementId& id) { return std::find(z.begin(), z.end(), id) - z.begin(); };
    EXPECT_LT(pos("g"), pos("a"));
    EXPECT_LT(pos("g"), pos("b"));
    s.raise("g");
    EXPECT_LT(pos("g"), pos("a"));
    EXPECT_LT(pos("g"), pos("b"));
}

TEST(MoveGroupTest, TranslatesMembersAndFrame)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("b", {40, 20, 10, 10}));
    s.add_element(rect("c", {300, 300, 10, 10}));
    s.create_group("g", "G", {"a", "b"});
    const auto frame = *s.group("g").frame;
    s.move_group("g", 10, 0);
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{10, 0, 10, 10}));
    EXPECT_EQ(s.element("b").params.bounds, (RectBounds{50, 20, 10, 10}));
    EXPECT_EQ(s.element("c").params.bounds, (RectBounds{300, 300, 10, 10}));
    EXPECT_EQ(s.group("g").frame, translate(frame, 10, 0));

    const Scene before = s;
    s.move_group("g", 0, 0);
    EXPECT_EQ(s, before);
    expect_error([&] { s.move_group("none", 1, 1); }, ErrorCode::UnknownGroup);
}

TEST(MoveGroupTest, NestedMembersShiftOnce)
{
    Scene s = demos::build_personaldata();
    const Scene before = s;
    s.move_group("personal", 12, -5);
    for (const auto& id : before.leaf_members("personal")) {
        EXPECT_EQ(s.element(id).params.bounds, translate(before.element(id).params.bounds, 12, -5)) << id;
    }
    for (const auto& [id, g] : s.groups()) {
        EXPECT_EQ(g.frame, translate(*before.group(id).frame, 12, -5)) << id;
    }
}

TEST(MoveGroupTest, SharedMemberMovesOnce)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("b", {20, 0, 10, 10}));
    s.create_group("g1", "G1", {"a", "b"});
    s.create_group("g2", "G2", {"a"});
    s.create_group("outer", "Outer", {"g1", "g2"});
    s.move_group("outer", 5, 5);
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{5, 5, 10, 10}));
}

TEST(MembershipTest, CycleRejected)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("b", {20, 0, 10, 10}));
    s.create_group("A", "A", {"a"});
    s.create_group("B", "B", {"b"});
    s.add_member("B", "A");
    expect_error([&] { s.add_member("A", "B"); }, ErrorCode::CycleError);
    expect_error([&] { s.add_member("A", "A"); }, ErrorCode::CycleError);
}

TEST(MembershipTest, FrameGrowsAndEmpties)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 10, 10}));
    s.add_element(rect("far", {100, 80, 20, 10}));
    s.create_group("g", "G", {"a"});
    s.add_member("g", "far");
    EXPECT_EQ(s.group("g").frame, padded_box({{0, 0, 10, 10}, {100, 80, 20, 10}}, 8));
    s.remove_member("g", "far");
    s.remove_member("g", "a");
    EXPECT_FALSE(s.group("g").frame);
    expect_error([&] { s.add_member("g", "nobody"); }, ErrorCode::UnknownId);
    expect_error([&] { s.add_member("zz", "a"); }, ErrorCode::UnknownGroup);
}

TEST(MembershipTest, DissolveKeepsPositions)
{
    Scene s;
    s.add_element(rect("a", {3, 4, 10, 10}));
    s.create_group("g", "G", {"a"});
    s.dissolve_group("g");
    EXPECT_FALSE(s.contains("g"));
    EXPECT_FALSE(s.is_group("g"));
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{3, 4, 10, 10}));
}

TEST(RubberBandTest, SelectsContainedElements)
{
    Scene s;
    std::vector<RectBounds> boxes{{0, 0, 20, 20}, {30, 0, 20, 20}, {60, 0, 20, 20}, {90, 0, 20, 20}, {120, 0, 20, 20}};
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        s.add_element(button("b" + std::to_string(i), boxes[i]));
    }
    const RectBounds marquee{-5, -5, 90, 30};
    std::vector<ElementId> expected;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (marquee.contains(boxes[i])) {
            expected.push_back("b" + std::to_string(i));
        }
    }
    ASSERT_EQ(expected.size(), 3u);

    const auto id = s.rubber_band_select(marquee);
    ASSERT_TRUE(id);
    EXPECT_EQ(*id, "tmp1");
    EXPECT_TRUE(s.group(*id).temporary);
    auto members = s.group(*id).members;
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, expected);

    s.move_group(*id, 10, 0);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const double dx = i < 3 ? 10 : 0;
        EXPECT_EQ(s.element("b" + std::to_string(i)).params.bounds, translate(boxes[i], dx, 0));
    }
}

TEST(RubberBandTest, NothingInside)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 20, 20}));
    const Scene before = s;
    EXPECT_FALSE(s.rubber_band_select({100, 100, 10, 10}));
    EXPECT_EQ(s, before);
}

TEST(ElasticInvariantTest, RandomOperations)
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coin(0, 5);
    std::uniform_int_distribution<int> delta(-30, 30);
    Scene s = demos::build_personaldata();
    std::vector<ElementId> leaves = s.leaf_members("personal");
    std::vector<ElementId> groups;
    for (const auto& [id, g] : s.groups()) {
        groups.push_back(id);
    }
    for (int step = 0; step < 400; ++step) {
        const auto& leaf = leaves[rng() % leaves.size()];
        const auto& group = groups[rng() % groups.size()];
        switch (coin(rng)) {
        case 0: s.set_hidden(leaf, !s.element(leaf).hidden); break;
        case 1: s.move_group(group, delta(rng), delta(rng)); break;
        case 2: {
            auto p = s.element(leaf).params;
            p.bounds = translate(p.bounds, delta(rng), delta(rng));
            s.set_visibility_params(leaf, p);
            break;
        }
        case 3: s.set_hidden(group, rng() % 2 == 0); break;
        default: s.raise(rng() % 2 ? leaf : group); break;
        }
        for (const auto& gid : groups) {
            const auto& g = s.group(gid);
            std::vector<RectBounds> visible;
            for (const auto& m : g.members) {
                if (!s.element(m).hidden && (!s.is_group(m) || s.group(m).frame)) {
                    visible.push_back(s.is_group(m) ? *s.group(m).frame : s.element(m).params.bounds);
                }
            }
            if (visible.empty()) {
                EXPECT_FALSE(g.frame) << gid;
                continue;
            }
            double l = 1e300, t = 1e300, r = -1e300, b = -1e300;
            for (const auto& v : visible) {
                l = std::min(l, v.left);
                t = std::min(t, v.top);
                r = std::max(r, v.right());
                b = std::max(b, v.bottom());
            }
            EXPECT_EQ(g.frame, (RectBounds{l - g.margin, t - g.margin, r - l + 2 * g.margin, b - t + 2 * g.margin}))
                << gid << " at step " << step;
        }
    }
}
