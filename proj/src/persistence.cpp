#include "udapp/persistence.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <system_error>

namespace udapp {

using nlohmann::json;

namespace {

PositionedError parse_error(std::size_t position, const std::string& reason)
{
    return PositionedError(ErrorCode::ParseError, position, reason);
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& name, const Enum (&values)[N], const char* what)
{
    for (Enum v : values) {
        if (name == to_string(v)) {
            return v;
        }
    }
    throw parse_error(0, std::string("unknown ") + what + " '" + name + "'");
}

constexpr ShapeKind kShapes[] = {ShapeKind::Rect, ShapeKind::Ellipse, ShapeKind::Label,
                                 ShapeKind::PlotArea};
constexpr ControlRole kRoles[] = {ControlRole::Button, ControlRole::TextField, ControlRole::List};

// Writing -------------------------------------------------------------------

json rect_json(const RectBounds& r) { return json::array({r.left, r.top, r.width, r.height}); }

json color_json(const Rgba& c) { return json::array({c.r, c.g, c.b, c.a}); }

json plot_json(const PlotSpec& plot)
{
    json curves = json::array();
    for (const auto& c : plot.curves) {
        curves.push_back({{"color", color_json(c.color)},
                          {"expression", c.expression},
                          {"samples", c.samples}});
    }
    const auto& w = plot.world;
    return {{"comment", plot.comment},
            {"curves", std::move(curves)},
            {"world", json::array({w.x_min, w.x_max, w.y_min, w.y_max})}};
}

json kind_json(const ElementKind& kind)
{
    if (const auto* g = std::get_if<GraphicalPrimitive>(&kind)) {
        json out = {{"type", "primitive"}, {"shape", to_string(g->shape)}, {"text", g->text}};
        if (g->plot) {
            out["plot"] = plot_json(*g->plot);
        }
        return out;
    }
    if (const auto* c = std::get_if<ControlProxy>(&kind)) {
        return {{"type", "control"},
                {"role", to_string(c->role)},
                {"caption", c->caption},
                {"key", c->logical_key}};
    }
    return {{"type", "group"}};
}

json element_json(const SceneElement& e)
{
    const auto& f = e.params.font;
    const auto& s = e.size_range;
    return {
        {"id", e.id},
        {"kind", kind_json(e.kind)},
        {"params",
         {{"bounds", rect_json(e.params.bounds)},
          {"color", color_json(e.params.color)},
          {"font", {{"family", f.family}, {"size", f.size}, {"bold", f.bold}, {"italic", f.italic}}}}},
        {"movable", e.movable},
        {"hidden", e.hidden},
        {"size_range", json::array({s.min_w, s.min_h, s.max_w, s.max_h})},
        {"group_tag", e.group_tag ? json(*e.group_tag) : json(nullptr)},
    };
}

json state_json(const SceneState& state)
{
    json elements = json::array();
    for (const auto& [id, e] : state.elements) {
        elements.push_back(element_json(e));
    }
    json groups = json::array();
    for (const auto& [id, g] : state.groups) {
        groups.push_back({{"id", g.id},
                          {"title", g.title},
                          {"members", g.members},
                          {"margin", g.margin},
                          {"temporary", g.temporary}});
    }
    return {{"elements", std::move(elements)},
            {"groups", std::move(groups)},
            {"z_order", state.z_order}};
}

// Reading -------------------------------------------------------------------

RectBounds rect_from(const json& j)
{
    if (!j.is_array() || j.size() != 4) {
        throw parse_error(0, "bounds must be [left, top, width, height]");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Rgba color_from(const json& j)
{
    if (!j.is_array() || j.size() != 4) {
        throw parse_error(0, "color must be [r, g, b, a]");
    }
    std::uint8_t c[4];
    for (int i = 0; i < 4; ++i) {
        const int v = j[i].get<int>();
        if (v < 0 || v > 255) {
            throw parse_error(0, "color channel out of range");
        }
        c[i] = static_cast<std::uint8_t>(v);
    }
    return {c[0], c[1], c[2], c[3]};
}

PlotSpec plot_from(const json& j)
{
    PlotSpec plot;
    const auto& w = j.at("world");
    if (!w.is_array() || w.size() != 4) {
        throw parse_error(0, "plot world must be [x_min, x_max, y_min, y_max]");
    }
    plot.world = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>(), w[3].get<double>()};
    plot.comment = j.at("comment").get<std::string>();
    for (const auto& c : j.at("curves")) {
        plot.curves.push_back({c.at("expression").get<std::string>(), color_from(c.at("color")),
                               c.at("samples").get<std::size_t>()});
    }
    return plot;
}

ElementKind kind_from(const json& j)
{
    const auto type = j.at("type").get<std::string>();
    if (type == "primitive") {
        GraphicalPrimitive g;
        g.shape = enum_from(j.at("shape").get<std::string>(), kShapes, "shape");
        g.text = j.at("text").get<std::string>();
        if (j.contains("plot")) {
            g.plot = plot_from(j.at("plot"));
        }
        return g;
    }
    if (type == "control") {
        return ControlProxy{enum_from(j.at("role").get<std::string>(), kRoles, "role"),
                            j.at("caption").get<std::string>(), j.at("key").get<std::string>()};
    }
    if (type == "group") {
        return GroupRef{};
    }
    throw parse_error(0, "unknown element type '" + type + "'");
}

SceneElement element_from(const json& j)
{
    SceneElement e;
    e.id = j.at("id").get<std::string>();
    e.kind = kind_from(j.at("kind"));
    const auto& p = j.at("params");
    e.params.bounds = rect_from(p.at("bounds"));
    e.params.color = color_from(p.at("color"));
    const auto& f = p.at("font");
    e.params.font = {f.at("family").get<std::string>(), f.at("size").get<double>(),
                     f.at("bold").get<bool>(), f.at("italic").get<bool>()};
    e.movable = j.at("movable").get<bool>();
    e.hidden = j.at("hidden").get<bool>();
    const auto& s = j.at("size_range");
    if (!s.is_array() || s.size() != 4) {
        throw parse_error(0, "size_range must be [min_w, min_h, max_w, max_h]");
    }
    e.size_range = {s[0].get<double>(), s[1].get<double>(), s[2].get<double>(), s[3].get<double>()};
    if (const auto& tag = j.at("group_tag"); !tag.is_null()) {
        e.group_tag = tag.get<std::string>();
    }
    return e;
}

SceneState state_from(const json& j)
{
    SceneState state;
    for (const auto& ej : j.at("elements")) {
        SceneElement e = element_from(ej);
        const ElementId id = e.id;
        if (!state.elements.emplace(id, std::move(e)).second) {
            throw Error(ErrorCode::DuplicateId, "duplicate element id '" + id + "'");
        }
    }
    for (const auto& gj : j.at("groups")) {
        ElasticGroup g;
        g.id = gj.at("id").get<std::string>();
        g.title = gj.at("title").get<std::string>();
        g.members = gj.at("members").get<std::vector<ElementId>>();
        g.margin = gj.at("margin").get<double>();
        g.temporary = gj.at("temporary").get<bool>();
        const ElementId id = g.id;
        if (!state.groups.emplace(id, std::move(g)).second) {
            throw Error(ErrorCode::DuplicateId, "duplicate group id '" + id + "'");
        }
    }
    state.z_order = j.at("z_order").get<std::vector<ElementId>>();
    return state;
}

} // namespace

std::string save_layout(const Scene& scene)
{
    json doc = state_json(scene.state());
    doc["format"] = std::string(kLayoutFormat);
    doc["record"] = scene.record();
    doc["default_snapshot"] =
        scene.default_snapshot() ? state_json(*scene.default_snapshot()) : json(nullptr);
    return doc.dump(2) + "\n";
}

void load_layout(std::string_view bytes, Scene& scene)
{
    json doc;
    try {
        doc = json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        throw parse_error(e.byte, e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string()) {
        throw parse_error(0, "missing \"format\" tag");
    }
    if (doc["format"].get<std::string>() != kLayoutFormat) {
        throw Error(ErrorCode::VersionError,
                    "unsupported layout format '" + doc["format"].get<std::string>() + "'");
    }
    SceneState state;
    std::optional<SceneState> snapshot;
    std::map<std::string, std::string> record;
    try {
        state = state_from(doc);
        if (const auto& snap = doc.at("default_snapshot"); !snap.is_null()) {
            snapshot = state_from(snap);
        }
        record = doc.at("record").get<std::map<std::string, std::string>>();
    } catch (const json::exception& e) {
        throw parse_error(0, e.what());
    }
    try {
        scene.assign(std::move(state), std::move(snapshot), std::move(record));
    } catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::ReferentialError: throw;
        case ErrorCode::CycleError: throw Error(ErrorCode::ReferentialError, e.what());
        default: throw parse_error(0, e.what());
        }
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes)
{
    auto temp = path;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "cannot open '" + temp.string() + "' for writing");
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out.flush()) {
            throw Error(ErrorCode::IoError, "write to '" + temp.string() + "' failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot rename onto '" + path.string() + "': " + ec.message());
    }
}

void save_layout_file(const Scene& scene, const std::filesystem::path& path)
{
    write_file_atomic(path, save_layout(scene));
}

void load_layout_file(const std::filesystem::path& path, Scene& scene)
{
    load_layout(read_file(path), scene);
}

} // namespace udapp
