#include "test_util.hpp"

#include "udapp/demos.hpp"
#include "udapp/mover.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace udapp;
using namespace udapp::test;

TEST(MoverRegistrationTest, AddAllAndIdempotent)
{
    Scene s = demos::build_calculator();
    Mover m(s);
    for (const auto& [id, e] : s.elements()) {
        m.add(id);
        m.add(id);
    }
    EXPECT_EQ(m.registered().size(), s.elements().size());
    expect_error([&] { m.add("nope"); }, ErrorCode::UnknownId);
}

TEST(MoverRegistrationTest, UnregisteredIsNotCaught)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    Mover m(s);
    EXPECT_EQ(m.catch_at({50, 25}, MouseButton::Left).kind, CatchResult::Kind::NoCatch);
    m.add("a");
    EXPECT_EQ(m.catch_at({50, 25}, MouseButton::Left).kind, CatchResult::Kind::CaughtMove);
}

TEST(MoverCatchTest, TopmostInOverlap)
{
    Scene s;
    s.add_element(rect("low", {0, 0, 100, 100}));
    s.add_element(rect("high", {50, 50, 100, 100}));
    Mover m(s);
    m.add_all();
    const auto r = m.catch_at({75, 75}, MouseButton::Left);
    EXPECT_EQ(r.kind, CatchResult::Kind::CaughtMove);
    EXPECT_EQ(r.element, "high");
}

TEST(MoverCatchTest, CatchRaises)
{
    Scene s;
    s.add_element(rect("low", {0, 0, 100, 100}));
    s.add_element(rect("high", {50, 50, 100, 100}));
    Mover m(s);
    m.add_all();
    m.catch_at({20, 20}, MouseButton::Left);
    EXPECT_EQ(s.z_order().back(), "low");
    expect_error([&] { m.catch_at({20, 20}, MouseButton::Left); }, ErrorCode::StateError);
}

TEST(MoverCatchTest, FixedElementSkipped)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    Mover m(s);
    m.add_all();
    s.set_movable("a", false);
    EXPECT_EQ(m.catch_at({50, 25}, MouseButton::Left).kind, CatchResult::Kind::NoCatch);
    EXPECT_FALSE(m.move({60, 30}));
    m.release();
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{0, 0, 100, 50}));

    s.set_movable("a", true);
    ASSERT_EQ(m.catch_at({50, 25}, MouseButton::Left).kind, CatchResult::Kind::CaughtMove);
    EXPECT_TRUE(m.move({60, 30}));
    m.release();
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{10, 5, 100, 50}));
}

TEST(MoverCatchTest, FixedAddressGroupDoesNotMove)
{
    Scene s;
    s.add_element(button("street", {0, 0, 100, 20}));
    s.add_element(button("city", {0, 30, 100, 20}));
    s.create_group("address", "Address", {"street", "city"});
    Mover m(s);
    m.add_all();
    const Point frame_point{-4, 25}; // inside the frame, outside both fields
    ASSERT_EQ(m.pick(frame_point)->element, "address");

    s.set_movable("address", false);
    const auto before = s.state();
    m.catch_at(frame_point, MouseButton::Left);
    m.move({40, 60});
    m.release();
    EXPECT_EQ(s.state(), before);
}

TEST(MoverCatchTest, RightClickIsContextTarget)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    s.set_movable("a", false);
    Mover m(s);
    m.add_all();
    const auto r = m.catch_at({50, 25}, MouseButton::Right);
    EXPECT_EQ(r.kind, CatchResult::Kind::ContextTarget);
    EXPECT_EQ(r.element, "a");
    EXPECT_FALSE(m.caught());
}

TEST(MoverCatchTest, ControlInteriorTakesPress)
{
    Scene s;
    s.add_element(rect("under", {0, 0, 200, 200}));
    s.add_element(button("b", {50, 50, 80, 24}));
    Mover m(s);
    m.add_all();
    EXPECT_EQ(m.control_at({90, 62}), "b");
    EXPECT_EQ(m.catch_at({90, 62}, MouseButton::Left).kind, CatchResult::Kind::NoCatch);
    const auto edge = m.catch_at({90, 50}, MouseButton::Left);
    EXPECT_EQ(edge.kind, CatchResult::Kind::CaughtMove);
    EXPECT_EQ(edge.element, "b");
}

TEST(MoverMoveTest, ExactTranslation)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    Mover m(s);
    m.add_all();
    EXPECT_FALSE(m.move({1, 1}));
    m.catch_at({10, 10}, MouseButton::Left);
    EXPECT_TRUE(m.move({15, 17}));
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{5, 7, 100, 50}));
    const auto info = m.release();
    EXPECT_TRUE(info.was_caught);
    EXPECT_EQ(info.element, "a");
    EXPECT_FALSE(m.move({30, 30}));
    EXPECT_FALSE(m.release().was_caught);
}

TEST(MoverMoveTest, ResizeEastClampsKeepingLeft)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 50, 30}, {20, 10, 500, 500}));
    Mover m(s);
    m.add_all();
    const auto r = m.catch_at({50, 15}, MouseButton::Left);
    ASSERT_EQ(r.kind, CatchResult::Kind::CaughtResize);
    EXPECT_EQ(r.handle, Compass::E);
    m.move({10, 15});
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{0, 0, 20, 30}));
}

TEST(MoverMoveTest, ResizeNorthWestKeepsSouthEast)
{
    Scene s;
    s.add_element(rect("a", {100, 100, 50, 40}, {20, 20, 500, 500}));
    Mover m(s);
    m.add_all();
    ASSERT_EQ(m.catch_at({100, 100}, MouseButton::Left).handle, Compass::NW);
    m.move({90, 80});
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{90, 80, 60, 60}));
    m.move({200, 200});
    const auto b = s.element("a").params.bounds;
    EXPECT_EQ(b.right(), 150);
    EXPECT_EQ(b.bottom(), 140);
    EXPECT_EQ(b.width, 20);
    EXPECT_EQ(b.height, 20);
}

TEST(MoverMoveTest, ButtonTraceEndsAtInitialPlusDelta)
{
    Scene s = demos::build_calculator();
    Mover m(s);
    m.add_all();
    const auto start = s.element("key_7").params.bounds;
    // Top edge of a button moves it.
    ASSERT_EQ(m.catch_at({start.left + 20, start.top}, MouseButton::Left).kind, CatchResult::Kind::CaughtMove);
    double x = start.left + 20, y = start.top;
    const int steps[][2] = {{3, 4}, {-7, 2}, {11, -9}, {0, 5}};
    double dx = 0, dy = 0;
    for (const auto& st : steps) {
        x += st[0];
        y += st[1];
        dx += st[0];
        dy += st[1];
        m.move({x, y});
    }
    m.release();
    EXPECT_EQ(s.element("key_7").params.bounds, translate(start, dx, dy));
}

TEST(MoverMoveTest, FrameMoveDragsGroup)
{
    Scene s = demos::build_calculator();
    Mover m(s);
    m.add_all();
    const auto frame = *s.group("numbers").frame;
    const auto before = s;
    const Point p{frame.left + 2, frame.top + 2};
    const auto r = m.catch_at(p, MouseButton::Left);
    EXPECT_EQ(r.element, "numbers");
    m.move({p.x + 10, p.y + 3});
    m.release();
    for (const auto& id : before.leaf_members("numbers")) {
        EXPECT_EQ(s.element(id).params.bounds, translate(before.element(id).params.bounds, 10, 3));
    }
    EXPECT_EQ(s.element("display").params, before.element("display").params);
}

TEST(MoverMoveTest, RemoveDuringDragForcesRelease)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    Mover m(s);
    m.add_all();
    m.catch_at({10, 10}, MouseButton::Left);
    const auto info = m.remove("a");
    EXPECT_TRUE(info.forced);
    EXPECT_FALSE(m.caught());
}

TEST(MoverMoveTest, HiddenDuringDragReleases)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    Mover m(s);
    m.add_all();
    m.catch_at({10, 10}, MouseButton::Left);
    s.set_hidden("a", true);
    EXPECT_FALSE(m.move({20, 20}));
    EXPECT_FALSE(m.caught());
    EXPECT_EQ(s.element("a").params.bounds, (RectBounds{0, 0, 100, 50}));
}

TEST(MoverCursorTest, Hints)
{
    Scene s;
    s.add_element(rect("a", {0, 0, 100, 50}));
    Mover m(s);
    m.add_all();
    EXPECT_EQ(m.cursor_hint({50, 25}), CursorHint::Move);
    EXPECT_EQ(m.cursor_hint({100, 25}), CursorHint::ResizeEW);
    EXPECT_EQ(m.cursor_hint({500, 500}), CursorHint::Default);
}

TEST(MoverCatchTest, MatchesBruteForceScan)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pos(0, 300);
    std::uniform_int_distribution<int> size(10, 120);
    for (int round = 0; round < 300; ++round) {
        Scene s;
        const int n = 1 + round % 8;
        for (int i = 0; i < n; ++i) {
            const RectBounds b{double(pos(rng)), double(pos(rng)), double(size(rng)), double(size(rng))};
            s.add_element(i % 3 == 0 ? button("e" + std::to_string(i), b) : rect("e" + std::to_string(i), b));
            if (rng() % 5 == 0) {
                s.set_movable("e" + std::to_string(i), false);
            }
        }
        Mover m(s);
        m.add_all();
        for (int k = 0; k < 30; ++k) {
            const Point p{double(pos(rng)), double(pos(rng))};
            std::optional<ElementId> want;
            const auto& z = s.z_order();
            for (auto it = z.rbegin(); it != z.rend(); ++it) {
                const auto& e = s.element(*it);
                const auto cover = e.is_control() ? control_cover(e.params.bounds) : graphical_cover(e.params.bounds);
                bool hit = false;
                for (const auto& node : cover.nodes) {
                    hit = hit || contains(node.shape, p);
                }
                // A fixed control still owns presses inside its bounds.
                if (hit && e.movable) {
                    want = *it;
                    break;
                }
                if (e.is_control() && e.params.bounds.contains(p)) {
                    break;
                }
            }
            const auto picked = m.pick(p);
            EXPECT_EQ(picked ? std::optional<ElementId>(picked->element) : std::nullopt, want);
        }
    }
}
