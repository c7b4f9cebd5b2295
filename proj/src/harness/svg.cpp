#include "udapp/harness.hpp"

#include <cstdio>

namespace udapp::harness {

namespace {

std::string num(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') {
        s.pop_back();
    }
    return s == "-0" ? "0" : s;
}

std::string color(Rgba c)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string opacity(Rgba c, const char* attr)
{
    if (c.a == 255) {
        return {};
    }
    return std::string(" ") + attr + "=\"" + num(c.a / 255.0) + "\"";
}

std::string escape(const std::string& text)
{
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string rect_attrs(const DrawCommand& c)
{
    return "x=\"" + num(c.origin.x + c.rect.left) + "\" y=\"" + num(c.origin.y + c.rect.top) +
           "\" width=\"" + num(c.rect.width) + "\" height=\"" + num(c.rect.height) + "\"";
}

std::string font_attrs(const Font& f)
{
    std::string out = " font-family=\"" + escape(f.family) + "\" font-size=\"" + num(f.size) + "\"";
    if (f.bold) {
        out += " font-weight=\"bold\"";
    }
    if (f.italic) {
        out += " font-style=\"italic\"";
    }
    return out;
}

const char* anchor_name(TextAnchor a)
{
    switch (a) {
    case TextAnchor::Start: return "start";
    case TextAnchor::Middle: return "middle";
    case TextAnchor::End: return "end";
    }
    return "start";
}

std::string text_element(double x, double y, const std::string& text, const Font& font, Rgba fill,
                         TextAnchor anchor)
{
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" fill=\"" + color(fill) + "\"" +
           opacity(fill, "fill-opacity") + font_attrs(font) + " text-anchor=\"" +
           anchor_name(anchor) + "\">" + escape(text) + "</text>";
}

std::string render(const DrawCommand& c)
{
    const std::string id = " data-id=\"" + escape(c.element) + "\"";
    switch (c.op) {
    case DrawOp::FillRect:
        return "<rect" + id + " " + rect_attrs(c) + " fill=\"" + color(c.color) + "\"" +
               opacity(c.color, "fill-opacity") + "/>";
    case DrawOp::StrokeRect:
        return "<rect" + id + " " + rect_attrs(c) + " fill=\"none\" stroke=\"" + color(c.color) +
               "\"" + opacity(c.color, "stroke-opacity") + (c.dashed ? " stroke-dasharray=\"4 3\"" : "") +
               "/>";
    case DrawOp::FillEllipse:
        return "<ellipse" + id + " cx=\"" + num(c.origin.x + c.rect.left + c.rect.width / 2) +
               "\" cy=\"" + num(c.origin.y + c.rect.top + c.rect.height / 2) + "\" rx=\"" +
               num(c.rect.width / 2) + "\" ry=\"" + num(c.rect.height / 2) + "\" fill=\"" +
               color(c.color) + "\"" + opacity(c.color, "fill-opacity") + "/>";
    case DrawOp::Text: {
        const Point at = c.points.empty() ? Point{} : c.points.front();
        auto t = text_element(c.origin.x + at.x, c.origin.y + at.y, c.text, c.font, c.color, c.anchor);
        return t.insert(5, id);
    }
    case DrawOp::Polyline: {
        std::string pts;
        for (const auto& p : c.points) {
            if (!pts.empty()) {
                pts += ' ';
            }
            pts += num(c.origin.x + p.x) + "," + num(c.origin.y + p.y);
        }
        return "<polyline" + id + " points=\"" + pts + "\" fill=\"none\" stroke=\"" + color(c.color) +
               "\"" + opacity(c.color, "stroke-opacity") + (c.dashed ? " stroke-dasharray=\"4 3\"" : "") +
               "/>";
    }
    case DrawOp::Frame: {
        std::string out = "<g" + id + "><rect " + rect_attrs(c) + " fill=\"none\" stroke=\"" +
                          color(c.color) + "\"" + opacity(c.color, "stroke-opacity") +
                          (c.dashed ? " stroke-dasharray=\"4 3\"" : "") + "/>";
        if (!c.text.empty()) {
            out += text_element(c.origin.x + c.rect.left + 4, c.origin.y + c.rect.top - 2, c.text,
                                c.font, c.color, TextAnchor::Start);
        }
        return out + "</g>";
    }
    }
    return {};
}

} // namespace

std::string render_svg(const Scene& scene, double width, double height)
{
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    for (const auto& c : scene.build_display_list()) {
        out += render(c);
        out += '\n';
    }
    out += "</svg>\n";
    return out;
}

} // namespace udapp::harness
