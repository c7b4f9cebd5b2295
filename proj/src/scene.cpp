#include "scene_internal.hpp"

#include "udapp/interpreter.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace udapp {

namespace {

Error unknown_id(const ElementId& id)
{
    return Error(ErrorCode::UnknownId, "unknown element id '" + id + "'");
}

void validate_plot(const ElementId& id, const PlotSpec& plot)
{
    if (!plot.world.valid()) {
        throw Error(ErrorCode::InvalidArgument, "plot '" + id + "' has an invalid world range");
    }
    for (const auto& curve : plot.curves) {
        if (curve.samples < 2) {
            throw Error(ErrorCode::InvalidArgument, "plot '" + id + "' curve needs >= 2 samples");
        }
        expr::parse(curve.expression);
    }
}

void validate_element(const SceneElement& e)
{
    if (e.id.empty()) {
        throw Error(ErrorCode::InvalidArgument, "element id must not be empty");
    }
    if (!e.params.valid()) {
        throw Error(ErrorCode::InvalidArgument, "element '" + e.id + "' has invalid parameters");
    }
    if (!e.size_range.valid()) {
        throw Error(ErrorCode::InvalidArgument, "element '" + e.id + "' has an invalid size range");
    }
    if (!e.is_group() && !e.size_range.admits(e.params.bounds.width, e.params.bounds.height)) {
        throw Error(ErrorCode::SizeRangeViolation, "element '" + e.id + "' is outside its size range");
    }
    if (const auto* g = std::get_if<GraphicalPrimitive>(&e.kind)) {
        if ((g->shape == ShapeKind::PlotArea) != g->plot.has_value()) {
            throw Error(ErrorCode::InvalidArgument,
                        "element '" + e.id + "': plot data only on plot areas, and required there");
        }
        if (g->plot) {
            validate_plot(e.id, *g->plot);
        }
    }
}

DrawCommand command(const SceneElement& e, DrawOp op, Rgba color)
{
    DrawCommand cmd;
    cmd.op = op;
    cmd.element = e.id;
    cmd.origin = e.params.bounds.origin();
    cmd.rect = {0, 0, e.params.bounds.width, e.params.bounds.height};
    cmd.color = color;
    cmd.font = e.params.font;
    return cmd;
}

DrawCommand text_command(const SceneElement& e, std::string text, Point at, TextAnchor anchor,
                         Rgba color)
{
    DrawCommand cmd = command(e, DrawOp::Text, color);
    cmd.rect = {};
    cmd.points = {at};
    cmd.text = std::move(text);
    cmd.anchor = anchor;
    return cmd;
}

constexpr Rgba kInk{20, 20, 20, 255};
constexpr Rgba kOutline{60, 60, 60, 255};

} // namespace

const ElementId& Scene::add_element(SceneElement element)
{
    if (contains(element.id)) {
        throw Error(ErrorCode::DuplicateId, "duplicate element id '" + element.id + "'");
    }
    if (element.is_group()) {
        throw Error(ErrorCode::InvalidArgument, "groups are created with create_group");
    }
    validate_element(element);
    const ElementId id = element.id;
    state_.elements.emplace(id, std::move(element));
    state_.z_order.push_back(id);
    return state_.elements.at(id).id;
}

void Scene::remove_element(const ElementId& id)
{
    if (!contains(id)) {
        throw unknown_id(id);
    }
    if (const auto parents = parents_of(id); !parents.empty()) {
        throw Error(ErrorCode::GroupMembershipViolation,
                    "'" + id + "' is a member of group '" + parents.front() + "'");
    }
    state_.groups.erase(id);
    state_.elements.erase(id);
    std::erase(state_.z_order, id);
    detail::refresh_frames(state_);
}

void Scene::set_movable(const ElementId& id, bool movable)
{
    mutable_element(id).movable = movable;
    if (is_group(id)) {
        for (const auto& member : group(id).members) {
            set_movable(member, movable);
        }
    }
}

void Scene::set_hidden(const ElementId& id, bool hidden)
{
    mutable_element(id).hidden = hidden;
    if (is_group(id)) {
        for (const auto& member : group(id).members) {
            set_hidden(member, hidden);
        }
    }
    if (!hidden) {
        // A shown element would stay invisible inside a hidden group.
        std::vector<ElementId> pending = parents_of(id);
        while (!pending.empty()) {
            const ElementId parent = pending.back();
            pending.pop_back();
            if (state_.groups.at(parent).temporary) {
                continue;
            }
            mutable_element(parent).hidden = false;
            for (auto& p : parents_of(parent)) {
                pending.push_back(std::move(p));
            }
        }
    }
    detail::refresh_frames(state_);
}

void Scene::set_visibility_params(const ElementId& id, const VisibilityParams& params)
{
    auto& e = mutable_element(id);
    if (!params.valid()) {
        throw Error(ErrorCode::InvalidArgument, "invalid visibility parameters for '" + id + "'");
    }
    if (e.is_group()) {
        const auto frame = group(id).frame;
        e.params.color = params.color;
        e.params.font = params.font;
        if (frame) {
            move_group(id, params.bounds.left - frame->left, params.bounds.top - frame->top);
        }
        return;
    }
    if (!e.size_range.admits(params.bounds.width, params.bounds.height)) {
        throw Error(ErrorCode::SizeRangeViolation, "size outside the range of '" + id + "'");
    }
    if (e.params == params) {
        return;
    }
    e.params = params;
    detail::refresh_frames(state_);
}

void Scene::set_bounds(const ElementId& id, const RectBounds& bounds)
{
    auto& e = mutable_element(id);
    if (e.is_group()) {
        throw Error(ErrorCode::InvalidArgument, "group frames are derived; move the group instead");
    }
    if (!bounds.valid()) {
        throw Error(ErrorCode::InvalidArgument, "invalid bounds for '" + id + "'");
    }
    if (!e.size_range.admits(bounds.width, bounds.height)) {
        throw Error(ErrorCode::SizeRangeViolation, "size outside the range of '" + id + "'");
    }
    if (e.params.bounds == bounds) {
        return;
    }
    e.params.bounds = bounds;
    detail::refresh_frames(state_);
}

void Scene::spread_sample(const ElementId& sample_id, std::span<const ElementId> targets)
{
    const auto& sample = element(sample_id);
    std::vector<ElementId> resolved;
    for (const auto& target : targets) {
        if (!contains(target)) {
            throw unknown_id(target);
        }
        if (is_group(target)) {
            const auto leaves = leaf_members(target);
            resolved.insert(resolved.end(), leaves.begin(), leaves.end());
        } else {
            resolved.push_back(target);
        }
    }
    const double w = sample.params.bounds.width;
    const double h = sample.params.bounds.height;
    for (const auto& target : resolved) {
        if (!element(target).size_range.admits(w, h)) {
            throw Error(ErrorCode::SizeRangeViolation,
                        "sample size outside the range of '" + target + "'");
        }
    }
    const VisibilityParams view = sample.params;
    for (const auto& target : resolved) {
        auto& params = mutable_element(target).params;
        params.bounds.width = w;
        params.bounds.height = h;
        params.color = view.color;
        params.font = view.font;
    }
    detail::refresh_frames(state_);
}

void Scene::raise(const ElementId& id)
{
    if (!contains(id)) {
        throw unknown_id(id);
    }
    std::set<ElementId> block{id};
    if (is_group(id)) {
        std::vector<ElementId> pending{id};
        while (!pending.empty()) {
            const ElementId g = pending.back();
            pending.pop_back();
            for (const auto& member : group(g).members) {
                if (block.insert(member).second && is_group(member)) {
                    pending.push_back(member);
                }
            }
        }
    }
    std::vector<ElementId> rest;
    std::vector<ElementId> top;
    for (const auto& z : state_.z_order) {
        (block.count(z) ? top : rest).push_back(z);
    }
    rest.insert(rest.end(), top.begin(), top.end());
    state_.z_order = std::move(rest);
    detail::normalize_z(state_);
}

void Scene::snapshot_default()
{
    snapshot_ = state_;
}

void Scene::restore_default_view()
{
    if (!snapshot_) {
        throw Error(ErrorCode::NoSnapshot, "no default view has been recorded");
    }
    state_ = *snapshot_;
}

const SceneElement& Scene::element(const ElementId& id) const
{
    const auto it = state_.elements.find(id);
    if (it == state_.elements.end()) {
        throw unknown_id(id);
    }
    return it->second;
}

const ElasticGroup& Scene::group(const ElementId& id) const
{
    const auto it = state_.groups.find(id);
    if (it == state_.groups.end()) {
        throw Error(ErrorCode::UnknownGroup, "unknown group '" + id + "'");
    }
    return it->second;
}

SceneElement& Scene::mutable_element(const ElementId& id)
{
    const auto it = state_.elements.find(id);
    if (it == state_.elements.end()) {
        throw unknown_id(id);
    }
    return it->second;
}

ElasticGroup& Scene::mutable_group(const ElementId& id)
{
    const auto it = state_.groups.find(id);
    if (it == state_.groups.end()) {
        throw Error(ErrorCode::UnknownGroup, "unknown group '" + id + "'");
    }
    return it->second;
}

bool Scene::is_visible(const ElementId& id) const
{
    const auto& e = element(id);
    if (e.hidden) {
        return false;
    }
    return !e.is_group() || group(id).frame.has_value();
}

std::vector<ElementId> Scene::parents_of(const ElementId& id) const
{
    std::vector<ElementId> out;
    for (const auto& [gid, g] : state_.groups) {
        if (std::find(g.members.begin(), g.members.end(), id) != g.members.end()) {
            out.push_back(gid);
        }
    }
    return out;
}

Cover Scene::cover_of(const ElementId& id) const
{
    if (!is_visible(id)) {
        return {};
    }
    const auto& e = element(id);
    if (e.is_group()) {
        return group_cover(*group(id).frame);
    }
    if (e.is_control()) {
        return control_cover(e.params.bounds);
    }
    return graphical_cover(e.params.bounds);
}

DisplayList Scene::build_display_list() const
{
    DisplayList out;
    for (const auto& id : state_.z_order) {
        if (!is_visible(id)) {
            continue;
        }
        const auto& e = element(id);
        const double w = e.params.bounds.width;
        const double h = e.params.bounds.height;
        const double baseline = h / 2 + e.params.font.size * 0.35;

        if (e.is_group()) {
            const auto& g = group(id);
            DrawCommand frame = command(e, DrawOp::Frame, e.params.color);
            frame.text = g.title;
            frame.dashed = g.temporary;
            out.push_back(std::move(frame));
        } else if (const auto* c = std::get_if<ControlProxy>(&e.kind)) {
            const bool is_field = c->role != ControlRole::Button;
            out.push_back(command(e, DrawOp::FillRect, e.params.color));
            out.push_back(command(e, DrawOp::StrokeRect, kOutline));
            if (is_field) {
                const auto value = record_.find(c->logical_key);
                std::string text = value != record_.end() ? value->second : c->caption;
                out.push_back(text_command(e, std::move(text), {4, baseline}, TextAnchor::Start, kInk));
            } else {
                out.push_back(text_command(e, c->caption, {w / 2, baseline}, TextAnchor::Middle, kInk));
            }
        } else {
            const auto& g = std::get<GraphicalPrimitive>(e.kind);
            switch (g.shape) {
            case ShapeKind::Rect:
                out.push_back(command(e, DrawOp::FillRect, e.params.color));
                out.push_back(command(e, DrawOp::StrokeRect, kOutline));
                break;
            case ShapeKind::Ellipse:
                out.push_back(command(e, DrawOp::FillEllipse, e.params.color));
                break;
            case ShapeKind::Label:
                out.push_back(text_command(e, g.text, {0, baseline}, TextAnchor::Start, e.params.color));
                break;
            case ShapeKind::PlotArea: {
                const PlotArea plot{e.id, e.params.bounds, *g.plot, e.params.color, e.params.font};
                auto fragment = plot_display(plot);
                out.insert(out.end(), std::make_move_iterator(fragment.begin()),
                           std::make_move_iterator(fragment.end()));
                break;
            }
            }
        }
    }
    return out;
}

void Scene::validate(const SceneState& state)
{
    for (const auto& [id, e] : state.elements) {
        if (id != e.id) {
            throw Error(ErrorCode::InvalidArgument, "element key '" + id + "' differs from its id");
        }
        validate_element(e);
        if (e.is_group() != (state.groups.count(id) != 0)) {
            throw Error(ErrorCode::ReferentialError,
                        "element '" + id + "' and the group table disagree");
        }
    }
    std::set<ElementId> seen;
    for (const auto& id : state.z_order) {
        if (!state.elements.count(id)) {
            throw Error(ErrorCode::ReferentialError, "z-order names unknown element '" + id + "'");
        }
        if (!seen.insert(id).second) {
            throw Error(ErrorCode::InvalidArgument, "z-order lists '" + id + "' twice");
        }
    }
    if (seen.size() != state.elements.size()) {
        throw Error(ErrorCode::InvalidArgument, "z-order is not a permutation of the elements");
    }
    for (const auto& [id, g] : state.groups) {
        if (id != g.id) {
            throw Error(ErrorCode::InvalidArgument, "group key '" + id + "' differs from its id");
        }
        if (!std::isfinite(g.margin) || g.margin < 0) {
            throw Error(ErrorCode::InvalidArgument, "group '" + id + "' has an invalid margin");
        }
        std::set<ElementId> members;
        for (const auto& m : g.members) {
            if (!state.elements.count(m)) {
                throw Error(ErrorCode::ReferentialError,
                            "group '" + id + "' names unknown member '" + m + "'");
            }
            if (!members.insert(m).second) {
                throw Error(ErrorCode::InvalidArgument, "group '" + id + "' lists '" + m + "' twice");
            }
        }
    }
    // Cycle check: depth-first with colors.
    std::map<ElementId, int> color;
    auto visit = [&](auto& self, const ElementId& id) -> void {
        color[id] = 1;
        for (const auto& m : state.groups.at(id).members) {
            if (!state.groups.count(m)) {
                continue;
            }
            if (color[m] == 1) {
                throw Error(ErrorCode::CycleError, "group '" + m + "' contains itself");
            }
            if (color[m] == 0) {
                self(self, m);
            }
        }
        color[id] = 2;
    };
    for (const auto& [id, g] : state.groups) {
        if (color[id] == 0) {
            visit(visit, id);
        }
    }
}

void Scene::assign(SceneState state, std::optional<SceneState> snapshot,
                   std::map<std::string, std::string> record)
{
    validate(state);
    if (snapshot) {
        validate(*snapshot);
    }
    detail::normalize_z(state);
    detail::refresh_frames(state);
    if (snapshot) {
        detail::normalize_z(*snapshot);
        detail::refresh_frames(*snapshot);
    }
    state_ = std::move(state);
    snapshot_ = std::move(snapshot);
    record_ = std::move(record);
}

const char* to_string(ShapeKind kind)
{
    switch (kind) {
    case ShapeKind::Rect: return "rect";
    case ShapeKind::Ellipse: return "ellipse";
    case ShapeKind::Label: return "label";
    case ShapeKind::PlotArea: return "plot-area";
    }
    return "?";
}

const char* to_string(ControlRole role)
{
    switch (role) {
    case ControlRole::Button: return "button";
    case ControlRole::TextField: return "text-field";
    case ControlRole::List: return "list";
    }
    return "?";
}

} // namespace udapp
