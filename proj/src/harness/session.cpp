#include "udapp/harness.hpp"

#include "udapp/persistence.hpp"

#include <cstdio>

namespace udapp::harness {

using nlohmann::json;

namespace {

Error bad_args(const std::string& command, const std::string& what)
{
    return Error(ErrorCode::InvalidArgument, "command '" + command + "': " + what);
}

const json& arg(const Command& c, const char* key)
{
    if (!c.args.is_object() || !c.args.contains(key)) {
        throw bad_args(c.name, std::string("missing argument '") + key + "'");
    }
    return c.args.at(key);
}

std::string string_arg(const Command& c, const char* key)
{
    const auto& v = arg(c, key);
    if (!v.is_string()) {
        throw bad_args(c.name, std::string("argument '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

double number_arg(const Command& c, const char* key)
{
    const auto& v = arg(c, key);
    if (!v.is_number()) {
        throw bad_args(c.name, std::string("argument '") + key + "' must be a number");
    }
    return v.get<double>();
}

std::vector<double> numbers(const Command& c, const json& v, std::size_t n, const char* what)
{
    if (!v.is_array() || v.size() != n) {
        throw bad_args(c.name, std::string(what) + " must be an array of " + std::to_string(n));
    }
    std::vector<double> out;
    for (const auto& x : v) {
        if (!x.is_number()) {
            throw bad_args(c.name, std::string(what) + " must hold numbers");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

Point point_of(const json& j)
{
    return {j.at("x").get<double>(), j.at("y").get<double>()};
}

json point_json(const char* type, Point p)
{
    return {{"type", type}, {"x", p.x}, {"y", p.y}};
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& path)
{
    const std::filesystem::path p(path);
    return p.is_absolute() || base.empty() ? p : base / p;
}

TraceEvent event_from(const json& j)
{
    const auto type = j.at("type").get<std::string>();
    if (type == "down") {
        const auto button = j.value("button", std::string("left"));
        if (button != "left" && button != "right") {
            throw std::invalid_argument("button must be \"left\" or \"right\"");
        }
        return MouseDown{point_of(j), button == "left" ? MouseButton::Left : MouseButton::Right};
    }
    if (type == "move") {
        return MouseMove{point_of(j)};
    }
    if (type == "up") {
        return MouseUp{point_of(j)};
    }
    if (type == "command") {
        Command c{j.at("name").get<std::string>(), j.value("args", json::object())};
        if (!c.args.is_object()) {
            throw std::invalid_argument("command args must be an object");
        }
        return c;
    }
    if (type == "save") {
        return SaveLayout{j.at("path").get<std::string>()};
    }
    if (type == "load") {
        return LoadLayout{j.at("path").get<std::string>()};
    }
    throw std::invalid_argument("unknown event type '" + type + "'");
}

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {
        "hide",       "show",       "fix",       "unfix",      "spread",     "restore-default",
        "rubber-band", "dissolve",  "add-plot",  "remove-plot", "press-key", "set-params",
        "set-field",  "move-group",
    };
    return names;
}

std::vector<TraceEvent> parse_trace(std::string_view jsonl)
{
    std::vector<TraceEvent> events;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < jsonl.size()) {
        std::size_t end = jsonl.find('\n', start);
        if (end == std::string_view::npos) {
            end = jsonl.size();
        }
        ++line_no;
        const auto line = jsonl.substr(start, end - start);
        start = end + 1;
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
            continue;
        }
        try {
            events.push_back(event_from(json::parse(line)));
        } catch (const std::exception& e) {
            throw PositionedError(ErrorCode::TraceParseError, line_no, e.what());
        }
    }
    return events;
}

std::string to_json_line(const TraceEvent& event)
{
    json j = std::visit(
        [](const auto& ev) -> json {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, MouseDown>) {
                json out = point_json("down", ev.point);
                out["button"] = ev.button == MouseButton::Left ? "left" : "right";
                return out;
            } else if constexpr (std::is_same_v<T, MouseMove>) {
                return point_json("move", ev.point);
            } else if constexpr (std::is_same_v<T, MouseUp>) {
                return point_json("up", ev.point);
            } else if constexpr (std::is_same_v<T, Command>) {
                return {{"type", "command"}, {"name", ev.name}, {"args", ev.args}};
            } else if constexpr (std::is_same_v<T, SaveLayout>) {
                return {{"type", "save"}, {"path", ev.path}};
            } else {
                return {{"type", "load"}, {"path", ev.path}};
            }
        },
        event);
    return j.dump();
}

std::string to_jsonl(std::span<const TraceEvent> events)
{
    std::string out;
    for (const auto& e : events) {
        out += to_json_line(e);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_hash(SceneHash hash)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

Session::Session(demos::DemoKind kind) : kind_(kind), scene_(demos::build(kind)), mover_(scene_)
{
    mover_.add_all();
}

void Session::sync_registration()
{
    std::vector<ElementId> stale;
    for (const auto& id : mover_.registered()) {
        if (!scene_.contains(id)) {
            stale.push_back(id);
        }
    }
    for (const auto& id : stale) {
        mover_.remove(id);
    }
    mover_.add_all();
}

void Session::press_key(demos::CalcKey key)
{
    calc_ = demos::calc_press(calc_, key);
    if (kind_ == demos::DemoKind::Calculator) {
        scene_.record()["display"] = calc_.display;
    }
}

void Session::activate(const ElementId& control)
{
    const auto* proxy = std::get_if<ControlProxy>(&scene_.element(control).kind);
    if (!proxy || proxy->role != ControlRole::Button) {
        return;
    }
    if (kind_ == demos::DemoKind::Calculator) {
        if (const auto key = demos::parse_calc_key(proxy->logical_key)) {
            press_key(*key);
        }
    } else if (kind_ == demos::DemoKind::Functions && proxy->logical_key == "add-plot") {
        demos::add_plot(scene_, scene_.record()["expression"], demos::kDefaultPlotWorld);
        sync_registration();
    }
}

void Session::apply(const TraceEvent& event, const std::filesystem::path& base_dir)
{
    if (const auto* down = std::get_if<MouseDown>(&event)) {
        pressed_control_.reset();
        if (down->button == MouseButton::Right) {
            const auto result = mover_.catch_at(down->point, MouseButton::Right);
            context_target_ = result.element;
            return;
        }
        if (const auto control = mover_.control_at(down->point)) {
            pressed_control_ = control;
            return;
        }
        mover_.catch_at(down->point, MouseButton::Left);
    } else if (const auto* move = std::get_if<MouseMove>(&event)) {
        mover_.move(move->point);
    } else if (const auto* up = std::get_if<MouseUp>(&event)) {
        if (mover_.caught()) {
            mover_.move(up->point);
            mover_.release();
        } else if (pressed_control_ && mover_.control_at(up->point) == pressed_control_) {
            const ElementId control = *pressed_control_;
            pressed_control_.reset();
            activate(control);
        }
        pressed_control_.reset();
    } else if (const auto* command = std::get_if<Command>(&event)) {
        run_command(*command);
    } else if (const auto* save = std::get_if<SaveLayout>(&event)) {
        save_layout_file(scene_, resolve(base_dir, save->path));
    } else if (const auto* load = std::get_if<LoadLayout>(&event)) {
        const auto path = resolve(base_dir, load->path);
        Scene loaded = scene_;
        load_layout_file(path, loaded);
        mover_.release();
        scene_ = std::move(loaded);
        sync_registration();
        if (kind_ == demos::DemoKind::Calculator) {
            // The display text is data; restart the calculator from it.
            calc_ = demos::CalcState{};
            const auto shown = scene_.record().find("display");
            if (shown != scene_.record().end() && shown->second != "Error") {
                calc_.display = shown->second;
                calc_.entry = std::strtod(shown->second.c_str(), nullptr);
            }
            scene_.record()["display"] = calc_.display;
        }
    }
}

void Session::run_command(const Command& c)
{
    const auto& name = c.name;
    if (name == "hide" || name == "show") {
        scene_.set_hidden(string_arg(c, "id"), name == "hide");
    } else if (name == "fix" || name == "unfix") {
        scene_.set_movable(string_arg(c, "id"), name == "unfix");
    } else if (name == "spread") {
        const auto& targets = arg(c, "targets");
        if (!targets.is_array()) {
            throw bad_args(name, "targets must be an array of ids");
        }
        scene_.spread_sample(string_arg(c, "sample"), targets.get<std::vector<ElementId>>());
    } else if (name == "restore-default") {
        mover_.release();
        scene_.restore_default_view();
        sync_registration();
    } else if (name == "rubber-band") {
        const auto r = numbers(c, arg(c, "rect"), 4, "rect");
        if (scene_.rubber_band_select({r[0], r[1], r[2], r[3]})) {
            sync_registration();
        }
    } else if (name == "dissolve") {
        const auto id = string_arg(c, "id");
        if (mover_.caught() && std::get<MoverCaught>(mover_.state()).element == id) {
            mover_.release();
        }
        scene_.dissolve_group(id);
    } else if (name == "add-plot") {
        WorldRange world = demos::kDefaultPlotWorld;
        if (c.args.contains("world")) {
            const auto w = numbers(c, c.args.at("world"), 4, "world");
            world = {w[0], w[1], w[2], w[3]};
        }
        demos::add_plot(scene_, string_arg(c, "expr"), world);
        sync_registration();
    } else if (name == "remove-plot") {
        const auto id = string_arg(c, "id");
        mover_.remove(id);
        demos::remove_plot(scene_, id);
    } else if (name == "press-key") {
        const auto key = demos::parse_calc_key(string_arg(c, "key"));
        if (!key) {
            throw bad_args(name, "unknown key '" + string_arg(c, "key") + "'");
        }
        press_key(*key);
    } else if (name == "set-params") {
        const auto id = string_arg(c, "id");
        const auto& p = arg(c, "params");
        VisibilityParams params = scene_.element(id).params;
        if (p.contains("bounds")) {
            const auto b = numbers(c, p.at("bounds"), 4, "bounds");
            params.bounds = {b[0], b[1], b[2], b[3]};
        }
        if (p.contains("color")) {
            const auto rgba = numbers(c, p.at("color"), 4, "color");
            for (double v : rgba) {
                if (v < 0 || v > 255 || v != static_cast<int>(v)) {
                    throw bad_args(name, "color channels are integers in 0..255");
                }
            }
            params.color = {static_cast<std::uint8_t>(rgba[0]), static_cast<std::uint8_t>(rgba[1]),
                            static_cast<std::uint8_t>(rgba[2]), static_cast<std::uint8_t>(rgba[3])};
        }
        if (p.contains("font")) {
            const auto& f = p.at("font");
            params.font.family = f.value("family", params.font.family);
            params.font.size = f.value("size", params.font.size);
            params.font.bold = f.value("bold", params.font.bold);
            params.font.italic = f.value("italic", params.font.italic);
        }
        scene_.set_visibility_params(id, params);
    } else if (name == "set-field") {
        scene_.record()[string_arg(c, "key")] = string_arg(c, "value");
    } else if (name == "move-group") {
        scene_.move_group(string_arg(c, "id"), number_arg(c, "dx"), number_arg(c, "dy"));
    } else {
        throw bad_args(name, "unknown command");
    }
    sync_registration();
    // A caught element that a command hid or fixed is let go.
    if (mover_.caught()) {
        const auto& id = std::get<MoverCaught>(mover_.state()).element;
        if (!scene_.contains(id) || !scene_.is_visible(id) || !scene_.element(id).movable) {
            mover_.release();
        }
    }
}

std::string Session::canonical_bytes() const
{
    std::string out = save_layout(scene_);
    if (kind_ == demos::DemoKind::Calculator) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "calc entry=%a acc=%a pending=%d typing=%d entered=%d error=%d\n",
                      calc_.entry, calc_.accumulator,
                      calc_.pending ? static_cast<int>(*calc_.pending) : -1, calc_.typing,
                      calc_.has_entry, calc_.error);
        out += "calc display=" + calc_.display + "\n";
        out += buf;
    }
    return out;
}

SceneHash Session::hash() const
{
    return fnv1a64(canonical_bytes());
}

SceneHash replay(Session& session, std::span<const TraceEvent> trace,
                 const std::filesystem::path& base_dir)
{
    for (std::size_t i = 0; i < trace.size(); ++i) {
        try {
            session.apply(trace[i], base_dir);
        } catch (const Error& e) {
            throw EventError(i, e.code(), e.what());
        } catch (const std::exception& e) {
            throw EventError(i, ErrorCode::InvalidArgument, e.what());
        }
    }
    return session.hash();
}

} // namespace udapp::harness
