#pragma once

// Drawing commands shared by the SVG renderer and interactive front ends.

#include "udapp/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace udapp {

using ElementId = std::string;

struct Rgba {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    std::uint8_t a = 255;

    bool operator==(const Rgba&) const = default;
};

struct Font {
    std::string family = "sans-serif";
    double size = 10; // points
    bool bold = false;
    bool italic = false;

    bool valid() const;
    bool operator==(const Font&) const = default;
};

enum class DrawOp : std::uint8_t { FillRect, StrokeRect, FillEllipse, Text, Polyline, Frame };

const char* to_string(DrawOp op);

enum class TextAnchor : std::uint8_t { Start, Middle, End };

/**
 * One drawing command. Geometry is local to `origin`; the absolute position
 * of a local point q is origin + q. Moving an element therefore changes only
 * the origins of its commands.
 */
struct DrawCommand {
    DrawOp op = DrawOp::FillRect;
    ElementId element;
    Point origin;
    RectBounds rect;           // FillRect, StrokeRect, FillEllipse, Frame
    std::vector<Point> points; // Polyline; Text uses points[0] as its baseline anchor
    Rgba color;
    std::string text; // Text; Frame title
    Font font;
    TextAnchor anchor = TextAnchor::Start;
    bool dashed = false;

    bool operator==(const DrawCommand&) const = default;
};

using DisplayList = std::vector<DrawCommand>;

} // namespace udapp
