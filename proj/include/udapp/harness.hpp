#pragma once

// Headless operation: event traces (JSON Lines), deterministic replay,
// scene hashing and SVG snapshots.
//
// Trace lines:
//   {"type":"down","x":10,"y":20,"button":"left"}
//   {"type":"move","x":15,"y":27}
//   {"type":"up","x":15,"y":27}
//   {"type":"command","name":"hide","args":{"id":"address"}}
//   {"type":"save","path":"layout.json"}
//   {"type":"load","path":"layout.json"}
//
// Relative paths resolve against the directory given to replay().

#include "udapp/demos.hpp"
#include "udapp/mover.hpp"
#include "udapp/scene.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace udapp::harness {

struct MouseDown {
    Point point;
    MouseButton button = MouseButton::Left;
};
struct MouseMove {
    Point point;
};
struct MouseUp {
    Point point;
};
struct Command {
    std::string name;
    nlohmann::json args = nlohmann::json::object();
};
struct SaveLayout {
    std::string path;
};
struct LoadLayout {
    std::string path;
};

using TraceEvent = std::variant<MouseDown, MouseMove, MouseUp, Command, SaveLayout, LoadLayout>;

/** Every command name a trace may use. */
const std::vector<std::string>& command_names();

/** Throws PositionedError(TraceParseError) with the 1-based line number as position. */
std::vector<TraceEvent> parse_trace(std::string_view jsonl);
std::string to_json_line(const TraceEvent& event);
std::string to_jsonl(std::span<const TraceEvent> events);

using SceneHash = std::uint64_t;

std::uint64_t fnv1a64(std::string_view bytes);
/** 16 lowercase hex digits. */
std::string format_hash(SceneHash hash);

/** A failed trace event. */
class EventError : public Error {
public:
    EventError(std::size_t index, ErrorCode cause, const std::string& what)
        : Error(ErrorCode::EventError, "event " + std::to_string(index) + ": " + what),
          index_(index), cause_(cause)
    {
    }

    std::size_t index() const noexcept { return index_; }
    ErrorCode cause() const noexcept { return cause_; }

private:
    std::size_t index_;
    ErrorCode cause_;
};

/**
 * One demo scene with its mover and application state, driven exactly the
 * way an interactive front end drives it. Every element is registered with
 * the mover.
 */
class Session {
public:
    explicit Session(demos::DemoKind kind);
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    demos::DemoKind kind() const { return kind_; }
    Scene& scene() { return scene_; }
    const Scene& scene() const { return scene_; }
    Mover& mover() { return mover_; }
    const Mover& mover() const { return mover_; }
    const demos::CalcState& calc() const { return calc_; }
    const std::optional<ElementId>& last_context_target() const { return context_target_; }

    /** Throws the underlying error. */
    void apply(const TraceEvent& event, const std::filesystem::path& base_dir = {});

    /** Click on a control: a calculator key, the analyser's "Add plot" button. */
    void activate(const ElementId& control);

    void press_key(demos::CalcKey key);

    /** Canonical layout bytes followed by the application state. */
    std::string canonical_bytes() const;
    SceneHash hash() const;

private:
    void run_command(const Command& command);
    void sync_registration();

    demos::DemoKind kind_;
    Scene scene_;
    Mover mover_;
    demos::CalcState calc_;
    std::optional<ElementId> pressed_control_;
    std::optional<ElementId> context_target_;
};

/** Applies events in order. Throws EventError naming the failing index. */
SceneHash replay(Session& session, std::span<const TraceEvent> trace,
                 const std::filesystem::path& base_dir = {});

/**
 * SVG 1.1, one element per display command, coordinates rounded to three
 * decimals, fixed attribute order.
 */
std::string render_svg(const Scene& scene, double width = 800, double height = 600);

// Invariant fuzzing ---------------------------------------------------------

/** Random but valid events for the session's current state, integer coordinates. */
std::vector<TraceEvent> random_events(const Session& session, std::mt19937_64& rng);

/** Empty when every structural invariant holds; otherwise one line per violation. */
std::vector<std::string> check_invariants(const Session& session);

struct VerifyReport {
    std::size_t sequences = 0;
    std::size_t events = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

VerifyReport verify(demos::DemoKind kind, std::uint64_t seed = 1, std::size_t sequences = 40,
                    std::size_t steps = 25);

} // namespace udapp::harness
