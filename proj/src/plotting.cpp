#include "udapp/plotting.hpp"

#include "udapp/error.hpp"
#include "udapp/interpreter.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace udapp {

namespace {

struct Ladder {
    int mantissa; // 1, 2 or 5
    int exponent;

    double step() const { return mantissa * std::pow(10.0, exponent); }

    // k * step, computed so that decimal ticks land on the nearest double
    // (3 * 0.2 would otherwise give 0.6000000000000001).
    double tick(std::int64_t k) const
    {
        const double units = static_cast<double>(k) * mantissa;
        return exponent >= 0 ? units * std::pow(10.0, exponent) : units / std::pow(10.0, -exponent);
    }
};

struct TickSpan {
    std::int64_t first;
    std::int64_t last;

    std::int64_t count() const { return last >= first ? last - first + 1 : 0; }
};

TickSpan span_for(const Ladder& ladder, double lo, double hi)
{
    const double step = ladder.step();
    auto first = static_cast<std::int64_t>(std::ceil(lo / step)) - 1;
    while (ladder.tick(first) < lo) {
        ++first;
    }
    auto last = static_cast<std::int64_t>(std::floor(hi / step)) + 1;
    while (ladder.tick(last) > hi) {
        --last;
    }
    return {first, last};
}

Ladder choose_ladder(double lo, double hi, int target)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw Error(ErrorCode::BadRange, "nice_ticks needs finite lo < hi");
    }
    if (target < 2) {
        throw Error(ErrorCode::BadRange, "nice_ticks needs target >= 2");
    }
    const int base = static_cast<int>(std::floor(std::log10((hi - lo) / target)));
    Ladder best{1, base};
    std::int64_t best_diff = -1;
    // Ascending step order; ">=" lets a later (larger) step win ties.
    for (int e = base - 1; e <= base + 1; ++e) {
        for (int m : {1, 2, 5}) {
            const Ladder ladder{m, e};
            const std::int64_t diff = std::llabs(span_for(ladder, lo, hi).count() - target);
            if (best_diff < 0 || diff <= best_diff) {
                best = ladder;
                best_diff = diff;
            }
        }
    }
    return best;
}

std::string format_tick(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v == 0 ? 0.0 : v);
    return buf;
}

// Local (relative to plot origin) screen coordinates.
Point to_local(const PlotArea& plot, Point w)
{
    const auto& world = plot.spec.world;
    const double fx = (w.x - world.x_min) / (world.x_max - world.x_min);
    const double fy = (w.y - world.y_min) / (world.y_max - world.y_min);
    return {fx * plot.bounds.width, plot.bounds.height - fy * plot.bounds.height};
}

DrawCommand base_command(const PlotArea& plot, DrawOp op, Rgba color)
{
    DrawCommand cmd;
    cmd.op = op;
    cmd.element = plot.id;
    cmd.origin = plot.bounds.origin();
    cmd.color = color;
    cmd.font = plot.font;
    return cmd;
}

DrawCommand polyline(const PlotArea& plot, std::vector<Point> points, Rgba color)
{
    DrawCommand cmd = base_command(plot, DrawOp::Polyline, color);
    cmd.points = std::move(points);
    return cmd;
}

DrawCommand text(const PlotArea& plot, Point at, std::string s, TextAnchor anchor)
{
    DrawCommand cmd = base_command(plot, DrawOp::Text, {40, 40, 40, 255});
    cmd.points = {at};
    cmd.text = std::move(s);
    cmd.anchor = anchor;
    return cmd;
}

} // namespace

bool WorldRange::valid() const
{
    return std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
           std::isfinite(y_max) && x_min < x_max && y_min < y_max;
}

Point world_to_screen(const PlotArea& plot, Point world)
{
    const Point local = to_local(plot, world);
    return {plot.bounds.left + local.x, plot.bounds.top + local.y};
}

Point screen_to_world(const PlotArea& plot, Point screen)
{
    const auto& world = plot.spec.world;
    const double fx = (screen.x - plot.bounds.left) / plot.bounds.width;
    const double fy = (plot.bounds.bottom() - screen.y) / plot.bounds.height;
    return {world.x_min + fx * (world.x_max - world.x_min),
            world.y_min + fy * (world.y_max - world.y_min)};
}

double nice_step(double lo, double hi, int target)
{
    return choose_ladder(lo, hi, target).step();
}

std::vector<double> nice_ticks(double lo, double hi, int target)
{
    const Ladder ladder = choose_ladder(lo, hi, target);
    const TickSpan span = span_for(ladder, lo, hi);
    std::vector<double> ticks;
    ticks.reserve(static_cast<std::size_t>(span.count()));
    for (std::int64_t k = span.first; k <= span.last; ++k) {
        const double v = ladder.tick(k);
        ticks.push_back(v == 0 ? 0.0 : v); // no "-0"
    }
    return ticks;
}

std::vector<std::vector<Point>> curve_polylines(const PlotArea& plot, const PlotCurve& curve)
{
    const auto& world = plot.spec.world;
    const auto ast = expr::parse(curve.expression);
    const auto samples = expr::sample_curve(ast, world.x_min, world.x_max, curve.samples);

    std::vector<std::vector<Point>> lines;
    std::vector<Point> current;
    auto flush = [&] {
        if (current.size() >= 2) {
            lines.push_back(std::move(current));
        }
        current.clear();
    };

    for (std::size_t i = 1; i < samples.size(); ++i) {
        const auto& a = samples[i - 1];
        const auto& b = samples[i];
        if (!a.finite || !b.finite) {
            flush();
            continue;
        }
        // A jump from below the window to above it (or back) is a pole, not a line.
        const bool a_low = a.y < world.y_min;
        const bool a_high = a.y > world.y_max;
        const bool b_low = b.y < world.y_min;
        const bool b_high = b.y > world.y_max;
        if ((a_low && b_high) || (a_high && b_low) || (a_low && b_low) || (a_high && b_high)) {
            flush();
            continue;
        }
        // Clip the segment to the y range (x is always inside).
        double t0 = 0;
        double t1 = 1;
        const double dy = b.y - a.y;
        if (dy > 0) {
            if (a_low) t0 = (world.y_min - a.y) / dy;
            if (b_high) t1 = (world.y_max - a.y) / dy;
        } else if (dy < 0) {
            if (a_high) t0 = (world.y_max - a.y) / dy;
            if (b_low) t1 = (world.y_min - a.y) / dy;
        }
        auto at = [&](double t) -> Point {
            if (t == 0) return {a.x, a.y};
            if (t == 1) return {b.x, b.y};
            return {a.x + t * (b.x - a.x), a.y + t * dy};
        };
        if (current.empty() || t0 > 0) {
            flush();
            current.push_back(to_local(plot, at(t0)));
        }
        current.push_back(to_local(plot, at(t1)));
        if (t1 < 1) {
            flush();
        }
    }
    flush();
    return lines;
}

DisplayList plot_display(const PlotArea& plot)
{
    DisplayList out;
    const auto& world = plot.spec.world;
    const double w = plot.bounds.width;
    const double h = plot.bounds.height;
    const Rgba axis_color{90, 90, 90, 255};
    constexpr double kTick = 4;

    DrawCommand background = base_command(plot, DrawOp::FillRect, plot.background);
    background.rect = {0, 0, w, h};
    out.push_back(background);
    DrawCommand border = base_command(plot, DrawOp::StrokeRect, {0, 0, 0, 255});
    border.rect = {0, 0, w, h};
    out.push_back(border);

    if (world.x_min <= 0 && world.x_max >= 0) {
        const double x = to_local(plot, {0, 0}).x;
        out.push_back(polyline(plot, {{x, 0}, {x, h}}, axis_color));
    }
    if (world.y_min <= 0 && world.y_max >= 0) {
        const double y = to_local(plot, {0, 0}).y;
        out.push_back(polyline(plot, {{0, y}, {w, y}}, axis_color));
    }

    for (double t : nice_ticks(world.x_min, world.x_max, 5)) {
        const double x = to_local(plot, {t, world.y_min}).x;
        out.push_back(polyline(plot, {{x, h}, {x, h - kTick}}, axis_color));
        out.push_back(text(plot, {x, h - kTick - 2}, format_tick(t), TextAnchor::Middle));
    }
    for (double t : nice_ticks(world.y_min, world.y_max, 5)) {
        const double y = to_local(plot, {world.x_min, t}).y;
        out.push_back(polyline(plot, {{0, y}, {kTick, y}}, axis_color));
        out.push_back(text(plot, {kTick + 2, y}, format_tick(t), TextAnchor::Start));
    }

    if (!plot.spec.comment.empty()) {
        out.push_back(text(plot, {w - 4, plot.font.size + 4}, plot.spec.comment, TextAnchor::End));
    }

    for (const auto& curve : plot.spec.curves) {
        for (auto& line : curve_polylines(plot, curve)) {
            out.push_back(polyline(plot, std::move(line), curve.color));
        }
    }
    return out;
}

} // namespace udapp
