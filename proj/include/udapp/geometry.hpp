#pragma once

// Plane geometry in logical pixels. The y axis grows downward.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace udapp {

struct Point {
    double x = 0;
    double y = 0;

    bool operator==(const Point&) const = default;
};

/** Axis-aligned rectangle: top-left origin and size. */
struct RectBounds {
    double left = 0;
    double top = 0;
    double width = 0;
    double height = 0;

    double right() const { return left + width; }
    double bottom() const { return top + height; }
    Point origin() const { return {left, top}; }

    /** Finite with non-negative size. */
    bool valid() const;
    /** Boundary inclusive. */
    bool contains(Point p) const;
    bool contains(const RectBounds& other) const;

    bool operator==(const RectBounds&) const = default;
};

/** Allowed range of an element's size. */
struct SizeRange {
    double min_w = 1;
    double min_h = 1;
    double max_w = 1e6;
    double max_h = 1e6;

    bool valid() const;
    bool admits(double width, double height) const;

    bool operator==(const SizeRange&) const = default;
};

/**
 * Compass position of an edge or corner. Used both for the handle being
 * dragged and for the side held fixed while resizing.
 */
enum class Compass : std::uint8_t { NW, N, NE, E, SE, S, SW, W };

Compass opposite(Compass c);
const char* to_string(Compass c);

struct Circle {
    Point center;
    double radius = 0;
};

/** Points within `halfwidth` of the segment a-b (a capsule). */
struct Strip {
    Point a;
    Point b;
    double halfwidth = 0;
};

struct ConvexPolygon {
    std::vector<Point> vertices;
};

using Shape = std::variant<Circle, Strip, ConvexPolygon>;

bool shape_valid(const Shape& shape);

/** Boundary-inclusive containment test. */
bool contains(const Shape& shape, Point p);

/** Smallest rectangle containing every input. Throws EmptyCollection. */
RectBounds bounding_box(std::span<const RectBounds> rects);

RectBounds translate(const RectBounds& r, double dx, double dy);

RectBounds inflate(const RectBounds& r, double margin);

/**
 * Clip the proposed size into `range`, keeping the `anchor` edge or corner
 * where `proposed` has it. Sides not named by the anchor keep left/top.
 */
RectBounds clamp_resize(const RectBounds& proposed, const SizeRange& range, Compass anchor);

} // namespace udapp
