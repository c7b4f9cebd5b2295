#pragma once

// Plot areas: world <-> screen mapping, axis ticks and curve display.
// World y grows upward, screen y grows downward.

#include "udapp/display_list.hpp"
#include "udapp/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace udapp {

inline constexpr std::size_t kDefaultCurveSamples = 256;

struct WorldRange {
    double x_min = 0;
    double x_max = 1;
    double y_min = 0;
    double y_max = 1;

    bool valid() const;
    bool operator==(const WorldRange&) const = default;
};

struct PlotCurve {
    std::string expression;
    Rgba color{0, 0, 200, 255};
    std::size_t samples = kDefaultCurveSamples;

    bool operator==(const PlotCurve&) const = default;
};

struct PlotSpec {
    WorldRange world;
    std::vector<PlotCurve> curves;
    std::string comment;

    bool operator==(const PlotSpec&) const = default;
};

/** A plot as placed on screen. */
struct PlotArea {
    ElementId id;
    RectBounds bounds;
    PlotSpec spec;
    Rgba background{255, 255, 255, 255};
    Font font;
};

Point world_to_screen(const PlotArea& plot, Point world);
Point screen_to_world(const PlotArea& plot, Point screen);

/**
 * Tick values at multiples of a step from the {1, 2, 5} x 10^k ladder, the
 * step chosen so the count is closest to `target` (ties go to the larger
 * step). Throws BadRange.
 */
std::vector<double> nice_ticks(double lo, double hi, int target);

/** The step nice_ticks would use. */
double nice_step(double lo, double hi, int target);

/** Curve samples as screen-local polylines, split at gaps and clipped to the world range. */
std::vector<std::vector<Point>> curve_polylines(const PlotArea& plot, const PlotCurve& curve);

/** Frame, axes, ticks, comment and one polyline per continuous curve piece. */
DisplayList plot_display(const PlotArea& plot);

} // namespace udapp
