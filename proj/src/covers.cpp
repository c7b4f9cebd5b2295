#include "udapp/covers.hpp"

namespace udapp {

namespace {

// Corners in cover order: NW, NE, SE, SW.
constexpr Compass kCorners[] = {Compass::NW, Compass::NE, Compass::SE, Compass::SW};
// Edges in cover order: N, E, S, W.
constexpr Compass kEdges[] = {Compass::N, Compass::E, Compass::S, Compass::W};

Point corner_point(const RectBounds& r, Compass c)
{
    switch (c) {
    case Compass::NW: return {r.left, r.top};
    case Compass::NE: return {r.right(), r.top};
    case Compass::SE: return {r.right(), r.bottom()};
    default: return {r.left, r.bottom()};
    }
}

Strip edge_strip(const RectBounds& r, Compass edge)
{
    switch (edge) {
    case Compass::N: return {{r.left, r.top}, {r.right(), r.top}, kEdgeHalfwidth};
    case Compass::E: return {{r.right(), r.top}, {r.right(), r.bottom()}, kEdgeHalfwidth};
    case Compass::S: return {{r.left, r.bottom()}, {r.right(), r.bottom()}, kEdgeHalfwidth};
    default: return {{r.left, r.top}, {r.left, r.bottom()}, kEdgeHalfwidth};
    }
}

ConvexPolygon rect_polygon(const RectBounds& r)
{
    return {{{r.left, r.top}, {r.right(), r.top}, {r.right(), r.bottom()}, {r.left, r.bottom()}}};
}

CoverNode make_node(Shape shape, NodeAction action)
{
    return {std::move(shape), action, hint_for(action)};
}

void add_corners(Cover& cover, const RectBounds& r)
{
    for (Compass c : kCorners) {
        cover.nodes.push_back(make_node(Circle{corner_point(r, c), kCornerRadius}, NodeAction::resize(c)));
    }
}

} // namespace

const char* to_string(CursorHint hint)
{
    switch (hint) {
    case CursorHint::Default: return "default";
    case CursorHint::Move: return "move";
    case CursorHint::ResizeNS: return "ns-resize";
    case CursorHint::ResizeEW: return "ew-resize";
    case CursorHint::ResizeNWSE: return "nwse-resize";
    case CursorHint::ResizeNESW: return "nesw-resize";
    }
    return "default";
}

CursorHint hint_for(const NodeAction& action)
{
    if (action.kind != ActionKind::Resize) {
        return CursorHint::Move;
    }
    switch (action.handle) {
    case Compass::N:
    case Compass::S: return CursorHint::ResizeNS;
    case Compass::E:
    case Compass::W: return CursorHint::ResizeEW;
    case Compass::NW:
    case Compass::SE: return CursorHint::ResizeNWSE;
    default: return CursorHint::ResizeNESW;
    }
}

bool hit_node(Point p, const CoverNode& node)
{
    return contains(node.shape, p);
}

std::optional<std::size_t> hit_cover(Point p, const Cover& cover)
{
    for (std::size_t i = 0; i < cover.nodes.size(); ++i) {
        if (hit_node(p, cover.nodes[i])) {
            return i;
        }
    }
    return std::nullopt;
}

Cover graphical_cover(const RectBounds& bounds)
{
    Cover cover;
    cover.nodes.reserve(9);
    add_corners(cover, bounds);
    for (Compass e : kEdges) {
        cover.nodes.push_back(make_node(edge_strip(bounds, e), NodeAction::resize(e)));
    }
    cover.nodes.push_back(make_node(rect_polygon(bounds), NodeAction::move()));
    return cover;
}

Cover control_cover(const RectBounds& bounds)
{
    Cover cover;
    cover.nodes.reserve(8);
    add_corners(cover, bounds);
    for (Compass e : kEdges) {
        cover.nodes.push_back(make_node(edge_strip(bounds, e), NodeAction::move()));
    }
    return cover;
}

Cover group_cover(const RectBounds& frame)
{
    Cover cover;
    cover.nodes.push_back(make_node(rect_polygon(frame), NodeAction::frame_move()));
    return cover;
}

} // namespace udapp
