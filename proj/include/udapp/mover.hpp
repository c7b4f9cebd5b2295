#pragma once

// The supervising object behind all moving and resizing. A front end
// forwards exactly three mouse events:
//
//   on press:   mover.catch_at(location, button);
//   on release: mover.release();
//   on move:    if (mover.move(location)) redraw();

#include "udapp/covers.hpp"
#include "udapp/scene.hpp"

#include <optional>
#include <set>
#include <variant>

namespace udapp {

enum class MouseButton : std::uint8_t { Left, Right };

struct MoverIdle {
    bool operator==(const MoverIdle&) const = default;
};

struct MoverCaught {
    ElementId element;
    std::size_t node = 0;
    NodeAction action;
    Point grab_offset;   // cursor minus element origin at catch time
    Point catch_point;
    RectBounds catch_bounds;
    Point last_point;

    bool operator==(const MoverCaught&) const = default;
};

using MoverState = std::variant<MoverIdle, MoverCaught>;

struct CatchResult {
    enum class Kind : std::uint8_t { NoCatch, CaughtMove, CaughtResize, ContextTarget };

    Kind kind = Kind::NoCatch;
    std::optional<ElementId> element;
    std::optional<Compass> handle; // CaughtResize only

    bool operator==(const CatchResult&) const = default;
};

struct ReleaseInfo {
    bool was_caught = false;
    std::optional<ElementId> element;
    bool forced = false; // released because the element left the mover's reach

    bool operator==(const ReleaseInfo&) const = default;
};

/** What a press at some point would reach. */
struct PickResult {
    ElementId element;
    std::size_t node = 0;
    NodeAction action;
};

class Mover {
public:
    explicit Mover(Scene& scene) : scene_(&scene) {}

    /** Register an element for catching; idempotent. Throws UnknownId. */
    void add(const ElementId& id);
    /** Registers every element of the scene. */
    void add_all();
    /** Unregister; a drag of that element is released first. */
    ReleaseInfo remove(const ElementId& id);
    bool is_registered(const ElementId& id) const { return registered_.count(id) != 0; }
    const std::set<ElementId>& registered() const { return registered_; }

    /**
     * Left button: the topmost registered, visible, movable element whose
     * cover is hit is caught and raised. The interior of a control takes the
     * press for itself and stops the scan. Right button: the element (fixed
     * ones included) for a context menu, without changing state.
     * Throws StateError when already caught.
     */
    CatchResult catch_at(Point p, MouseButton button);

    /** Returns true iff some geometry changed. False while idle. */
    bool move(Point p);

    ReleaseInfo release();

    CursorHint cursor_hint(Point p) const;

    /** Element and node a left press at `p` would catch. */
    std::optional<PickResult> pick(Point p) const;

    /** The visible control whose interior contains `p` and takes a left press there. */
    std::optional<ElementId> control_at(Point p) const;

    const MoverState& state() const { return state_; }
    bool caught() const { return std::holds_alternative<MoverCaught>(state_); }

private:
    bool catchable(const ElementId& id) const;
    bool resize_to(const MoverCaught& caught, Point p);

    Scene* scene_;
    std::set<ElementId> registered_;
    MoverState state_ = MoverIdle{};
};

} // namespace udapp
