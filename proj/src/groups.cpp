#include "scene_internal.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace udapp {

namespace detail {

std::optional<RectBounds> compute_frame(SceneState& state, const ElementId& group_id)
{
    auto& group = state.groups.at(group_id);
    std::vector<RectBounds> visible;
    visible.reserve(group.members.size());
    for (const auto& member_id : group.members) {
        const auto& member = state.elements.at(member_id);
        if (member.is_group()) {
            const auto frame = compute_frame(state, member_id);
            if (frame && !member.hidden) {
                visible.push_back(*frame);
            }
        } else if (!member.hidden) {
            visible.push_back(member.params.bounds);
        }
    }
    group.frame.reset();
    if (!visible.empty()) {
        group.frame = inflate(bounding_box(visible), group.margin);
    }
    state.elements.at(group_id).params.bounds = group.frame.value_or(RectBounds{});
    return group.frame;
}

void refresh_frames(SceneState& state)
{
    for (const auto& [id, group] : state.groups) {
        compute_frame(state, id);
    }
}

void normalize_z(SceneState& state)
{
    std::map<ElementId, int> pending_parents;
    for (const auto& [id, group] : state.groups) {
        for (const auto& member : group.members) {
            ++pending_parents[member];
        }
    }
    std::vector<ElementId> order;
    order.reserve(state.z_order.size());
    std::vector<bool> emitted(state.z_order.size(), false);
    while (order.size() < state.z_order.size()) {
        // Lowest element whose groups are all placed already.
        std::size_t pick = state.z_order.size();
        for (std::size_t i = 0; i < state.z_order.size(); ++i) {
            if (!emitted[i] && pending_parents[state.z_order[i]] == 0) {
                pick = i;
                break;
            }
        }
        if (pick == state.z_order.size()) {
            throw Error(ErrorCode::CycleError, "group membership contains a cycle");
        }
        emitted[pick] = true;
        const auto& id = state.z_order[pick];
        order.push_back(id);
        if (auto it = state.groups.find(id); it != state.groups.end()) {
            for (const auto& member : it->second.members) {
                --pending_parents[member];
            }
        }
    }
    state.z_order = std::move(order);
}

} // namespace detail

const ElementId& Scene::create_group(const ElementId& id, std::string title,
                                     std::vector<ElementId> members, double margin, bool temporary)
{
    if (contains(id)) {
        throw Error(ErrorCode::DuplicateId, "duplicate element id '" + id + "'");
    }
    if (!std::isfinite(margin) || margin < 0) {
        throw Error(ErrorCode::InvalidArgument, "group margin must be finite and >= 0");
    }
    std::set<ElementId> seen;
    for (const auto& member : members) {
        if (!contains(member)) {
            throw Error(ErrorCode::UnknownId, "unknown element id '" + member + "'");
        }
        if (!seen.insert(member).second) {
            throw Error(ErrorCode::InvalidArgument, "duplicate member '" + member + "'");
        }
    }

    SceneElement element;
    element.id = id;
    element.kind = GroupRef{};
    element.params.color = {70, 70, 70, 255};
    state_.elements.emplace(id, element);
    state_.z_order.push_back(id);
    state_.groups.emplace(id, ElasticGroup{id, std::move(title), std::move(members), margin,
                                           std::nullopt, temporary});
    detail::normalize_z(state_);
    detail::refresh_frames(state_);
    return state_.elements.at(id).id;
}

std::optional<RectBounds> Scene::recompute_frame(const ElementId& group_id)
{
    if (!is_group(group_id)) {
        throw Error(ErrorCode::UnknownGroup, "unknown group '" + group_id + "'");
    }
    return detail::compute_frame(state_, group_id);
}

void Scene::move_group(const ElementId& group_id, double dx, double dy)
{
    if (!is_group(group_id)) {
        throw Error(ErrorCode::UnknownGroup, "unknown group '" + group_id + "'");
    }
    if (dx == 0 && dy == 0) {
        return;
    }
    for (const auto& leaf : leaf_members(group_id)) {
        auto& bounds = state_.elements.at(leaf).params.bounds;
        bounds = translate(bounds, dx, dy);
    }
    detail::refresh_frames(state_);
}

void Scene::add_member(const ElementId& group_id, const ElementId& id)
{
    auto& group = mutable_group(group_id);
    if (!contains(id)) {
        throw Error(ErrorCode::UnknownId, "unknown element id '" + id + "'");
    }
    if (id == group_id || reaches(id, group_id)) {
        throw Error(ErrorCode::CycleError,
                    "adding '" + id + "' to '" + group_id + "' would create a cycle");
    }
    if (std::find(group.members.begin(), group.members.end(), id) != group.members.end()) {
        return;
    }
    group.members.push_back(id);
    detail::normalize_z(state_);
    detail::refresh_frames(state_);
}

void Scene::remove_member(const ElementId& group_id, const ElementId& id)
{
    auto& group = mutable_group(group_id);
    const auto it = std::find(group.members.begin(), group.members.end(), id);
    if (it == group.members.end()) {
        throw Error(ErrorCode::UnknownId, "'" + id + "' is not a member of '" + group_id + "'");
    }
    group.members.erase(it);
    detail::refresh_frames(state_);
}

void Scene::dissolve_group(const ElementId& group_id)
{
    if (!is_group(group_id)) {
        throw Error(ErrorCode::UnknownGroup, "unknown group '" + group_id + "'");
    }
    remove_element(group_id);
}

std::optional<ElementId> Scene::rubber_band_select(const RectBounds& marquee)
{
    if (!marquee.valid()) {
        throw Error(ErrorCode::InvalidArgument, "marquee must be a valid rectangle");
    }
    std::vector<ElementId> members;
    for (const auto& id : state_.z_order) {
        if (!is_visible(id)) {
            continue;
        }
        if (auto g = state_.groups.find(id); g != state_.groups.end() && g->second.temporary) {
            continue;
        }
        if (marquee.contains(state_.elements.at(id).params.bounds)) {
            members.push_back(id);
        }
    }
    if (members.empty()) {
        return std::nullopt;
    }
    int n = 1;
    while (contains("tmp" + std::to_string(n))) {
        ++n;
    }
    return create_group("tmp" + std::to_string(n), "", std::move(members), kDefaultGroupMargin,
                        true);
}

void Scene::refresh_frames()
{
    detail::refresh_frames(state_);
}

std::vector<ElementId> Scene::leaf_members(const ElementId& group_id) const
{
    std::vector<ElementId> out;
    collect_leaves(group_id, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Scene::collect_leaves(const ElementId& group_id, std::vector<ElementId>& out) const
{
    for (const auto& member : group(group_id).members) {
        if (is_group(member)) {
            collect_leaves(member, out);
        } else {
            out.push_back(member);
        }
    }
}

bool Scene::reaches(const ElementId& from, const ElementId& to) const
{
    const auto it = state_.groups.find(from);
    if (it == state_.groups.end()) {
        return false;
    }
    for (const auto& member : it->second.members) {
        if (member == to || reaches(member, to)) {
            return true;
        }
    }
    return false;
}

} // namespace udapp
