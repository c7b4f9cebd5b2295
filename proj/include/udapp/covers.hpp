#pragma once

// Invisible covers: ordered hit areas laid over an object, each one bound to
// the action it performs when pressed.

#include "udapp/geometry.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace udapp {

inline constexpr double kCornerRadius = 6.0;
inline constexpr double kEdgeHalfwidth = 3.0;

enum class ActionKind : std::uint8_t { Move, Resize, FrameMove };

struct NodeAction {
    ActionKind kind = ActionKind::Move;
    Compass handle = Compass::SE; // only meaningful for Resize

    /** The side held fixed while resizing by `handle`. */
    Compass anchor() const { return opposite(handle); }

    static NodeAction move() { return {ActionKind::Move, Compass::SE}; }
    static NodeAction frame_move() { return {ActionKind::FrameMove, Compass::SE}; }
    static NodeAction resize(Compass handle) { return {ActionKind::Resize, handle}; }

    bool operator==(const NodeAction& other) const
    {
        return kind == other.kind && (kind != ActionKind::Resize || handle == other.handle);
    }
};

enum class CursorHint : std::uint8_t { Default, Move, ResizeNS, ResizeEW, ResizeNWSE, ResizeNESW };

const char* to_string(CursorHint hint);

CursorHint hint_for(const NodeAction& action);

struct CoverNode {
    Shape shape;
    NodeAction action;
    CursorHint cursor = CursorHint::Default;
};

/** First node in order containing a point wins. */
struct Cover {
    std::vector<CoverNode> nodes;
};

bool hit_node(Point p, const CoverNode& node);

std::optional<std::size_t> hit_cover(Point p, const Cover& cover);

/** Corners resize, edges resize, interior moves. */
Cover graphical_cover(const RectBounds& bounds);

/** Corners resize, edges move; the interior belongs to the control itself. */
Cover control_cover(const RectBounds& bounds);

/** Whole frame interior moves the group. */
Cover group_cover(const RectBounds& frame);

} // namespace udapp
