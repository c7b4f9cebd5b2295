#pragma once

// The three reference applications: Calculator, PersonalData and the
// Functions analyser. Each builder returns a scene with its default view
// already snapshotted.

#include "udapp/plotting.hpp"
#include "udapp/scene.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace udapp::demos {

// Calculator ------------------------------------------------------------------

enum class CalcKey : std::uint8_t {
    D0, D1, D2, D3, D4, D5, D6, D7, D8, D9,
    Dot, Add, Sub, Mul, Div, Equals, Clear, Sqrt, Inverse, Negate,
};

/** "0".."9", ".", "+", "-", "*", "/", "=", "C", "sqrt", "1/x", "+/-" */
const char* to_string(CalcKey key);
std::optional<CalcKey> parse_calc_key(std::string_view text);
const std::vector<CalcKey>& all_calc_keys();

enum class CalcOp : std::uint8_t { Add, Sub, Mul, Div };

/** Immediate-execution desk calculator. */
struct CalcState {
    std::string display = "0";
    double entry = 0; // full-precision value behind the display
    double accumulator = 0;
    std::optional<CalcOp> pending;
    bool typing = false;    // digits append to the display
    bool has_entry = false; // an operand was entered since the last operator
    bool error = false;     // only C recovers

    bool operator==(const CalcState&) const = default;
};

CalcState calc_press(CalcState state, CalcKey key);

/** Display plus buttons in three groups: numbers, operations, functions. */
Scene build_calculator();

// PersonalData ----------------------------------------------------------------

/** One outer group holding five smaller groups and loose fields, bound to an in-memory record. */
Scene build_personaldata();

// Functions analyser ----------------------------------------------------------

Scene build_functions_analyser();

inline constexpr WorldRange kDefaultPlotWorld{-5, 5, -5, 5};

/**
 * New topmost plot of `expression`. Throws the interpreter's errors before
 * touching the scene, or BadRange for an invalid world.
 */
ElementId add_plot(Scene& scene, const std::string& expression, const WorldRange& world);

/** Throws UnknownId if `id` is not a plot. */
void remove_plot(Scene& scene, const ElementId& id);

// Registry ---------------------------------------------------------------------

enum class DemoKind : std::uint8_t { Calculator, PersonalData, Functions };

/** "calculator", "personaldata", "functions". */
std::optional<DemoKind> parse_demo(std::string_view name);
const char* to_string(DemoKind kind);
Scene build(DemoKind kind);

} // namespace udapp::demos
