#include "udapp/mover.hpp"

namespace udapp {

namespace {

bool has_west(Compass c) { return c == Compass::NW || c == Compass::W || c == Compass::SW; }
bool has_east(Compass c) { return c == Compass::NE || c == Compass::E || c == Compass::SE; }
bool has_north(Compass c) { return c == Compass::NW || c == Compass::N || c == Compass::NE; }
bool has_south(Compass c) { return c == Compass::SW || c == Compass::S || c == Compass::SE; }

} // namespace

void Mover::add(const ElementId& id)
{
    if (!scene_->contains(id)) {
        throw Error(ErrorCode::UnknownId, "cannot register unknown element '" + id + "'");
    }
    registered_.insert(id);
}

void Mover::add_all()
{
    for (const auto& [id, element] : scene_->elements()) {
        registered_.insert(id);
    }
}

ReleaseInfo Mover::remove(const ElementId& id)
{
    ReleaseInfo info;
    if (const auto* c = std::get_if<MoverCaught>(&state_); c && c->element == id) {
        info = release();
        info.forced = true;
    }
    registered_.erase(id);
    return info;
}

bool Mover::catchable(const ElementId& id) const
{
    return registered_.count(id) && scene_->contains(id) && scene_->is_visible(id) &&
           scene_->element(id).movable;
}

std::optional<PickResult> Mover::pick(Point p) const
{
    const auto& z = scene_->z_order();
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        if (!scene_->is_visible(*it)) {
            continue;
        }
        if (catchable(*it)) {
            const Cover cover = scene_->cover_of(*it);
            if (const auto node = hit_cover(p, cover)) {
                return PickResult{*it, *node, cover.nodes[*node].action};
            }
        }
        const auto& e = scene_->element(*it);
        if (e.is_control() && e.params.bounds.contains(p)) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<ElementId> Mover::control_at(Point p) const
{
    const auto& z = scene_->z_order();
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        if (!scene_->is_visible(*it)) {
            continue;
        }
        if (catchable(*it) && hit_cover(p, scene_->cover_of(*it))) {
            return std::nullopt;
        }
        const auto& e = scene_->element(*it);
        if (e.is_control() && e.params.bounds.contains(p)) {
            return *it;
        }
    }
    return std::nullopt;
}

CatchResult Mover::catch_at(Point p, MouseButton button)
{
    if (caught()) {
        throw Error(ErrorCode::StateError, "catch while an element is already caught");
    }
    if (button == MouseButton::Right) {
        const auto& z = scene_->z_order();
        for (auto it = z.rbegin(); it != z.rend(); ++it) {
            if (!registered_.count(*it) || !scene_->is_visible(*it)) {
                continue;
            }
            const auto& e = scene_->element(*it);
            if (hit_cover(p, scene_->cover_of(*it)) ||
                (e.is_control() && e.params.bounds.contains(p))) {
                return {CatchResult::Kind::ContextTarget, *it, std::nullopt};
            }
        }
        return {};
    }

    const auto picked = pick(p);
    if (!picked) {
        return {};
    }
    scene_->raise(picked->element);
    const RectBounds bounds = scene_->element(picked->element).params.bounds;
    state_ = MoverCaught{picked->element,
                         picked->node,
                         picked->action,
                         {p.x - bounds.left, p.y - bounds.top},
                         p,
                         bounds,
                         p};
    if (picked->action.kind == ActionKind::Resize) {
        return {CatchResult::Kind::CaughtResize, picked->element, picked->action.handle};
    }
    return {CatchResult::Kind::CaughtMove, picked->element, std::nullopt};
}

bool Mover::move(Point p)
{
    auto* caught = std::get_if<MoverCaught>(&state_);
    if (!caught) {
        return false;
    }
    if (!catchable(caught->element)) {
        release();
        return false;
    }
    switch (caught->action.kind) {
    case ActionKind::Move: {
        RectBounds bounds = scene_->element(caught->element).params.bounds;
        const RectBounds before = bounds;
        bounds.left = p.x - caught->grab_offset.x;
        bounds.top = p.y - caught->grab_offset.y;
        caught->last_point = p;
        if (bounds == before) {
            return false;
        }
        scene_->set_bounds(caught->element, bounds);
        return true;
    }
    case ActionKind::FrameMove: {
        const double dx = p.x - caught->last_point.x;
        const double dy = p.y - caught->last_point.y;
        caught->last_point = p;
        if (dx == 0 && dy == 0) {
            return false;
        }
        scene_->move_group(caught->element, dx, dy);
        return true;
    }
    case ActionKind::Resize: {
        caught->last_point = p;
        return resize_to(*caught, p);
    }
    }
    return false;
}

bool Mover::resize_to(const MoverCaught& caught, Point p)
{
    const auto& e = scene_->element(caught.element);
    const RectBounds& start = caught.catch_bounds;
    const double dx = p.x - caught.catch_point.x;
    const double dy = p.y - caught.catch_point.y;
    const Compass handle = caught.action.handle;

    RectBounds proposed = start;
    if (has_west(handle)) {
        proposed.left = start.left + dx;
        proposed.width = start.right() - proposed.left;
    } else if (has_east(handle)) {
        proposed.width = (start.right() + dx) - start.left;
    }
    if (has_north(handle)) {
        proposed.top = start.top + dy;
        proposed.height = start.bottom() - proposed.top;
    } else if (has_south(handle)) {
        proposed.height = (start.bottom() + dy) - start.top;
    }
    const RectBounds clamped = clamp_resize(proposed, e.size_range, caught.action.anchor());
    if (clamped == e.params.bounds) {
        return false;
    }
    scene_->set_bounds(caught.element, clamped);
    return true;
}

ReleaseInfo Mover::release()
{
    const auto* caught = std::get_if<MoverCaught>(&state_);
    if (!caught) {
        return {};
    }
    ReleaseInfo info{true, caught->element, false};
    state_ = MoverIdle{};
    scene_->refresh_frames();
    return info;
}

CursorHint Mover::cursor_hint(Point p) const
{
    const auto picked = pick(p);
    return picked ? hint_for(picked->action) : CursorHint::Default;
}

} // namespace udapp
