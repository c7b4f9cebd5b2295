#include "udapp/covers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace udapp;

namespace {

// Independent description of the nine-node layout.
std::optional<std::size_t> scan(const Cover& cover, Point p)
{
    for (std::size_t i = 0; i < cover.nodes.size(); ++i) {
        if (contains(cover.nodes[i].shape, p)) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace

TEST(GraphicalCoverTest, Layout)
{
    const auto cover = graphical_cover({0, 0, 100, 50});
    ASSERT_EQ(cover.nodes.size(), 9u);
    EXPECT_EQ(cover.nodes[0].action, NodeAction::resize(Compass::NW));
    EXPECT_EQ(cover.nodes[2].action, NodeAction::resize(Compass::SE));
    EXPECT_EQ(cover.nodes[4].action, NodeAction::resize(Compass::N));
    EXPECT_EQ(cover.nodes[5].action, NodeAction::resize(Compass::E));
    EXPECT_EQ(cover.nodes[8].action, NodeAction::move());
}

TEST(GraphicalCoverTest, Examples)
{
    const auto cover = graphical_cover({0, 0, 100, 50});
    EXPECT_EQ(hit_cover({0, 0}, cover), 0u);
    EXPECT_EQ(hit_cover({50, 25}, cover), 8u);
    EXPECT_EQ(hit_cover({50, -2}, cover), 4u);
    EXPECT_EQ(hit_cover({50, -4}, cover), std::nullopt);
    EXPECT_EQ(hit_cover({200, 25}, cover), std::nullopt);
}

TEST(GraphicalCoverTest, CornerBeatsEdge)
{
    const auto cover = graphical_cover({0, 0, 100, 50});
    // (3,-1) lies in the NW circle and in the N strip.
    ASSERT_TRUE(contains(cover.nodes[4].shape, {3, -1}));
    EXPECT_EQ(hit_cover({3, -1}, cover), 0u);
}

TEST(GraphicalCoverTest, FirstHitOracle)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(-20, 140);
    const auto cover = graphical_cover({10, 10, 100, 60});
    for (int i = 0; i < 5000; ++i) {
        const Point p{std::round(c(rng) * 4) / 4, std::round(c(rng) * 4) / 4};
        EXPECT_EQ(hit_cover(p, cover), scan(cover, p));
    }
}

TEST(ControlCoverTest, Examples)
{
    const auto cover = control_cover({0, 0, 80, 24});
    EXPECT_EQ(cover.nodes.size(), 8u);
    EXPECT_EQ(hit_cover({40, 12}, cover), std::nullopt);

    const auto top = hit_cover({40, 0}, cover);
    ASSERT_TRUE(top);
    EXPECT_EQ(cover.nodes[*top].action, NodeAction::move());

    const auto corner = hit_cover({80, 24}, cover);
    ASSERT_TRUE(corner);
    EXPECT_EQ(cover.nodes[*corner].action, NodeAction::resize(Compass::SE));
}

TEST(GroupCoverTest, Examples)
{
    const auto cover = group_cover({-8, -8, 66, 46});
    ASSERT_EQ(cover.nodes.size(), 1u);
    EXPECT_EQ(hit_cover({0, 0}, cover), 0u);
    EXPECT_EQ(cover.nodes[0].action, NodeAction::frame_move());
    EXPECT_EQ(hit_cover({100, 100}, cover), std::nullopt);
}

TEST(CoverTest, EmptyAndOnlyLast)
{
    EXPECT_EQ(hit_cover({0, 0}, Cover{}), std::nullopt);
    const auto cover = graphical_cover({0, 0, 100, 50});
    EXPECT_EQ(hit_cover({30, 30}, cover), 8u);
}

TEST(CursorHintTest, ForActions)
{
    EXPECT_EQ(hint_for(NodeAction::move()), CursorHint::Move);
    EXPECT_EQ(hint_for(NodeAction::resize(Compass::E)), CursorHint::ResizeEW);
    EXPECT_EQ(hint_for(NodeAction::resize(Compass::S)), CursorHint::ResizeNS);
    EXPECT_EQ(hint_for(NodeAction::resize(Compass::NW)), CursorHint::ResizeNWSE);
    EXPECT_EQ(hint_for(NodeAction::resize(Compass::NE)), CursorHint::ResizeNESW);
}

TEST(NodeActionTest, AnchorIsOpposite)
{
    EXPECT_EQ(NodeAction::resize(Compass::E).anchor(), Compass::W);
    EXPECT_EQ(NodeAction::resize(Compass::NW).anchor(), Compass::SE);
}
