#pragma once

// The element store: identity, z-order, visibility parameters, flags and
// elastic groups.
//
// Every group is also a scene element whose id is the group id. Its bounds
// mirror the derived frame. The z-order keeps each group below all of its
// members, so pressing inside a member reaches the member before the frame.

#include "udapp/covers.hpp"
#include "udapp/display_list.hpp"
#include "udapp/error.hpp"
#include "udapp/geometry.hpp"
#include "udapp/plotting.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace udapp {

inline constexpr double kDefaultGroupMargin = 8.0;

/** Position, size, color and font: everything the user owns about an element. */
struct VisibilityParams {
    RectBounds bounds;
    Rgba color{220, 220, 220, 255};
    Font font;

    bool valid() const { return bounds.valid() && font.valid(); }
    bool operator==(const VisibilityParams&) const = default;
};

enum class ShapeKind : std::uint8_t { Rect, Ellipse, Label, PlotArea };
enum class ControlRole : std::uint8_t { Button, TextField, List };

const char* to_string(ShapeKind kind);
const char* to_string(ControlRole role);

struct GraphicalPrimitive {
    ShapeKind shape = ShapeKind::Rect;
    std::string text;            // labels
    std::optional<PlotSpec> plot; // plot areas

    bool operator==(const GraphicalPrimitive&) const = default;
};

/**
 * Stand-in for a real control. `logical_key` binds it to application logic
 * (a calculator key, or a record field for text fields) independently of
 * where it is or how it looks.
 */
struct ControlProxy {
    ControlRole role = ControlRole::Button;
    std::string caption;
    std::string logical_key;

    bool operator==(const ControlProxy&) const = default;
};

struct GroupRef {
    bool operator==(const GroupRef&) const = default;
};

using ElementKind = std::variant<GraphicalPrimitive, ControlProxy, GroupRef>;

struct SceneElement {
    ElementId id;
    ElementKind kind;
    VisibilityParams params;
    SizeRange size_range;
    bool movable = true;
    bool hidden = false;
    std::optional<std::string> group_tag;

    bool is_group() const { return std::holds_alternative<GroupRef>(kind); }
    bool is_control() const { return std::holds_alternative<ControlProxy>(kind); }

    bool operator==(const SceneElement&) const = default;
};

struct ElasticGroup {
    ElementId id;
    std::string title;
    std::vector<ElementId> members;
    double margin = kDefaultGroupMargin;
    std::optional<RectBounds> frame; // derived; empty when no member is visible
    bool temporary = false;

    bool operator==(const ElasticGroup&) const = default;
};

/** Everything that a saved layout captures and the default view restores. */
struct SceneState {
    std::map<ElementId, SceneElement> elements;
    std::vector<ElementId> z_order; // bottom to top
    std::map<ElementId, ElasticGroup> groups;

    bool operator==(const SceneState&) const = default;
};

class Scene {
public:
    // Elements ------------------------------------------------------------

    /** New elements go on top. Throws DuplicateId or InvalidArgument. */
    const ElementId& add_element(SceneElement element);
    /** Throws UnknownId or GroupMembershipViolation. Removing a group dissolves it. */
    void remove_element(const ElementId& id);

    /** Applies to every member (recursively) when `id` is a group. */
    void set_movable(const ElementId& id, bool movable);
    /** Applies to every member when `id` is a group; showing also reveals hidden ancestors. */
    void set_hidden(const ElementId& id, bool hidden);

    /**
     * Stores `params` exactly. For a group only color/font are stored and a
     * change of origin moves the group; the frame size is derived.
     * Throws UnknownId, SizeRangeViolation or InvalidArgument.
     */
    void set_visibility_params(const ElementId& id, const VisibilityParams& params);

    /** Geometry update used by the mover. Throws SizeRangeViolation. */
    void set_bounds(const ElementId& id, const RectBounds& bounds);

    /** Copy size, color and font of `sample` onto each target; positions stay. */
    void spread_sample(const ElementId& sample, std::span<const ElementId> targets);

    /** Moves an element (a group with all its members) to the top of the z-order. */
    void raise(const ElementId& id);

    // Default view ----------------------------------------------------------

    void snapshot_default();
    /** Throws NoSnapshot. */
    void restore_default_view();
    bool has_snapshot() const { return snapshot_.has_value(); }
    const std::optional<SceneState>& default_snapshot() const { return snapshot_; }

    // Groups (groups.cpp) ---------------------------------------------------

    const ElementId& create_group(const ElementId& id, std::string title,
                                  std::vector<ElementId> members,
                                  double margin = kDefaultGroupMargin, bool temporary = false);
    /** Throws UnknownGroup. */
    std::optional<RectBounds> recompute_frame(const ElementId& group);
    /** Translates every member once, however it is nested. Throws UnknownGroup. */
    void move_group(const ElementId& group, double dx, double dy);
    /** Throws UnknownGroup, UnknownId or CycleError. */
    void add_member(const ElementId& group, const ElementId& id);
    void remove_member(const ElementId& group, const ElementId& id);
    /** Deletes the group; members keep their positions. */
    void dissolve_group(const ElementId& group);

    /**
     * Temporary group of every visible, non-temporary element lying entirely
     * inside `marquee`. Nothing inside: no group.
     */
    std::optional<ElementId> rubber_band_select(const RectBounds& marquee);

    /** Recomputes every frame, inner groups first. */
    void refresh_frames();

    // Queries -------------------------------------------------------------

    bool contains(const ElementId& id) const { return state_.elements.count(id) != 0; }
    bool is_group(const ElementId& id) const { return state_.groups.count(id) != 0; }
    /** Throws UnknownId. */
    const SceneElement& element(const ElementId& id) const;
    /** Throws UnknownGroup. */
    const ElasticGroup& group(const ElementId& id) const;

    const std::map<ElementId, SceneElement>& elements() const { return state_.elements; }
    const std::map<ElementId, ElasticGroup>& groups() const { return state_.groups; }
    const std::vector<ElementId>& z_order() const { return state_.z_order; }

    /** Drawn and hittable: not hidden, and a group needs a non-empty frame. */
    bool is_visible(const ElementId& id) const;

    /** Groups that list `id` as a direct member, in id order. */
    std::vector<ElementId> parents_of(const ElementId& id) const;
    /** Every non-group element reachable from `group`, each once, in id order. */
    std::vector<ElementId> leaf_members(const ElementId& group) const;

    /** The cover of a visible element; empty for hidden ones. */
    Cover cover_of(const ElementId& id) const;

    /** Painter's order, hidden elements omitted. */
    DisplayList build_display_list() const;

    /** Application data bound to controls by logical key. Not part of the layout view. */
    std::map<std::string, std::string>& record() { return record_; }
    const std::map<std::string, std::string>& record() const { return record_; }

    const SceneState& state() const { return state_; }

    /**
     * Replace the whole state. Validates first and leaves the scene untouched
     * on error. Frames are recomputed.
     */
    void assign(SceneState state, std::optional<SceneState> snapshot,
                std::map<std::string, std::string> record);

    /** Structural checks on a state: z-order permutation, resolvable groups, no cycles. */
    static void validate(const SceneState& state);

    bool operator==(const Scene&) const = default;

private:
    SceneElement& mutable_element(const ElementId& id);
    ElasticGroup& mutable_group(const ElementId& id);
    void collect_leaves(const ElementId& group, std::vector<ElementId>& out) const;
    bool reaches(const ElementId& from, const ElementId& to) const;

    SceneState state_;
    std::optional<SceneState> snapshot_;
    std::map<std::string, std::string> record_;
};

} // namespace udapp
