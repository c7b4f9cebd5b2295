#include "udapp/geometry.hpp"

#include "udapp/error.hpp"

#include <algorithm>
#include <cmath>

namespace udapp {

namespace {

bool finite(double v) { return std::isfinite(v); }

bool finite(Point p) { return finite(p.x) && finite(p.y); }

double cross(Point o, Point a, Point b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double distance_sq_to_segment(Point p, Point a, Point b)
{
    const double vx = b.x - a.x;
    const double vy = b.y - a.y;
    const double len_sq = vx * vx + vy * vy;
    double t = 0;
    if (len_sq > 0) {
        t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len_sq, 0.0, 1.0);
    }
    const double ex = p.x - (a.x + t * vx);
    const double ey = p.y - (a.y + t * vy);
    return ex * ex + ey * ey;
}

} // namespace

bool RectBounds::valid() const
{
    return finite(left) && finite(top) && finite(width) && finite(height) && width >= 0 &&
           height >= 0;
}

bool RectBounds::contains(Point p) const
{
    return p.x >= left && p.x <= right() && p.y >= top && p.y <= bottom();
}

bool RectBounds::contains(const RectBounds& other) const
{
    return other.left >= left && other.top >= top && other.right() <= right() &&
           other.bottom() <= bottom();
}

bool SizeRange::valid() const
{
    return finite(min_w) && finite(min_h) && finite(max_w) && finite(max_h) && min_w > 0 &&
           min_h > 0 && min_w <= max_w && min_h <= max_h;
}

bool SizeRange::admits(double width, double height) const
{
    return width >= min_w && width <= max_w && height >= min_h && height <= max_h;
}

Compass opposite(Compass c)
{
    switch (c) {
    case Compass::NW: return Compass::SE;
    case Compass::N: return Compass::S;
    case Compass::NE: return Compass::SW;
    case Compass::E: return Compass::W;
    case Compass::SE: return Compass::NW;
    case Compass::S: return Compass::N;
    case Compass::SW: return Compass::NE;
    case Compass::W: return Compass::E;
    }
    return c;
}

const char* to_string(Compass c)
{
    switch (c) {
    case Compass::NW: return "NW";
    case Compass::N: return "N";
    case Compass::NE: return "NE";
    case Compass::E: return "E";
    case Compass::SE: return "SE";
    case Compass::S: return "S";
    case Compass::SW: return "SW";
    case Compass::W: return "W";
    }
    return "?";
}

bool shape_valid(const Shape& shape)
{
    if (const auto* c = std::get_if<Circle>(&shape)) {
        return finite(c->center) && finite(c->radius) && c->radius > 0;
    }
    if (const auto* s = std::get_if<Strip>(&shape)) {
        return finite(s->a) && finite(s->b) && finite(s->halfwidth) && s->halfwidth > 0;
    }
    const auto& poly = std::get<ConvexPolygon>(shape);
    const auto& v = poly.vertices;
    if (v.size() < 3) {
        return false;
    }
    // Convex: every turn has the same sign (collinear turns allowed).
    int sign = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!finite(v[i])) {
            return false;
        }
        const double c = cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]);
        const int s = (c > 0) - (c < 0);
        if (s != 0) {
            if (sign != 0 && s != sign) {
                return false;
            }
            sign = s;
        }
    }
    return true;
}

bool contains(const Shape& shape, Point p)
{
    if (const auto* c = std::get_if<Circle>(&shape)) {
        const double dx = p.x - c->center.x;
        const double dy = p.y - c->center.y;
        return dx * dx + dy * dy <= c->radius * c->radius;
    }
    if (const auto* s = std::get_if<Strip>(&shape)) {
        return distance_sq_to_segment(p, s->a, s->b) <= s->halfwidth * s->halfwidth;
    }
    const auto& v = std::get<ConvexPolygon>(shape).vertices;
    bool has_pos = false;
    bool has_neg = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double c = cross(v[i], v[(i + 1) % v.size()], p);
        has_pos = has_pos || c > 0;
        has_neg = has_neg || c < 0;
        if (has_pos && has_neg) {
            return false;
        }
    }
    return true;
}

RectBounds bounding_box(std::span<const RectBounds> rects)
{
    if (rects.empty()) {
        throw Error(ErrorCode::EmptyCollection, "bounding_box of an empty list");
    }
    double l = rects.front().left;
    double t = rects.front().top;
    double r = rects.front().right();
    double b = rects.front().bottom();
    for (const auto& rect : rects.subspan(1)) {
        l = std::min(l, rect.left);
        t = std::min(t, rect.top);
        r = std::max(r, rect.right());
        b = std::max(b, rect.bottom());
    }
    return {l, t, r - l, b - t};
}

RectBounds translate(const RectBounds& r, double dx, double dy)
{
    return {r.left + dx, r.top + dy, r.width, r.height};
}

RectBounds inflate(const RectBounds& r, double margin)
{
    return {r.left - margin, r.top - margin, r.width + 2 * margin, r.height + 2 * margin};
}

RectBounds clamp_resize(const RectBounds& proposed, const SizeRange& range, Compass anchor)
{
    const double width = std::clamp(proposed.width, range.min_w, range.max_w);
    const double height = std::clamp(proposed.height, range.min_h, range.max_h);

    const bool keep_right = anchor == Compass::NE || anchor == Compass::E || anchor == Compass::SE;
    const bool keep_bottom = anchor == Compass::SW || anchor == Compass::S || anchor == Compass::SE;

    RectBounds out = proposed;
    out.width = width;
    out.height = height;
    if (keep_right && width != proposed.width) {
        out.left = proposed.right() - width;
    }
    if (keep_bottom && height != proposed.height) {
        out.top = proposed.bottom() - height;
    }
    return out;
}

} // namespace udapp
