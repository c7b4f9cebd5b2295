#include "udapp/demos.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace udapp::demos {

namespace {

constexpr std::size_t kMaxDigits = 20;

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

CalcState error_state()
{
    CalcState s;
    s.display = "Error";
    s.error = true;
    return s;
}

CalcState show_result(CalcState s, double v)
{
    if (!std::isfinite(v)) {
        return error_state();
    }
    s.entry = v;
    s.display = format_number(v);
    return s;
}

std::optional<CalcOp> op_of(CalcKey key)
{
    switch (key) {
    case CalcKey::Add: return CalcOp::Add;
    case CalcKey::Sub: return CalcOp::Sub;
    case CalcKey::Mul: return CalcOp::Mul;
    case CalcKey::Div: return CalcOp::Div;
    default: return std::nullopt;
    }
}

std::optional<double> apply(double lhs, CalcOp op, double rhs)
{
    switch (op) {
    case CalcOp::Add: return lhs + rhs;
    case CalcOp::Sub: return lhs - rhs;
    case CalcOp::Mul: return lhs * rhs;
    case CalcOp::Div:
        if (rhs == 0) {
            return std::nullopt;
        }
        return lhs / rhs;
    }
    return std::nullopt;
}

CalcState type_char(CalcState s, char c)
{
    if (!s.typing) {
        s.display = c == '.' ? "0." : std::string(1, c);
        s.typing = true;
    } else if (c == '.') {
        if (s.display.find('.') == std::string::npos) {
            s.display += '.';
        }
    } else if (s.display == "0") {
        s.display = std::string(1, c);
    } else if (s.display == "-0") {
        s.display = std::string("-") + c;
    } else if (s.display.size() < kMaxDigits) {
        s.display += c;
    }
    s.entry = std::strtod(s.display.c_str(), nullptr);
    s.has_entry = true;
    return s;
}

} // namespace

const char* to_string(CalcKey key)
{
    static constexpr const char* kNames[] = {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9",
                                             ".", "+", "-", "*", "/", "=", "C", "sqrt", "1/x", "+/-"};
    return kNames[static_cast<int>(key)];
}

const std::vector<CalcKey>& all_calc_keys()
{
    static const std::vector<CalcKey> keys = [] {
        std::vector<CalcKey> out;
        for (int i = 0; i <= static_cast<int>(CalcKey::Negate); ++i) {
            out.push_back(static_cast<CalcKey>(i));
        }
        return out;
    }();
    return keys;
}

std::optional<CalcKey> parse_calc_key(std::string_view text)
{
    for (CalcKey key : all_calc_keys()) {
        if (text == to_string(key)) {
            return key;
        }
    }
    return std::nullopt;
}

CalcState calc_press(CalcState s, CalcKey key)
{
    if (key == CalcKey::Clear) {
        return CalcState{};
    }
    if (s.error) {
        return s;
    }
    if (key <= CalcKey::D9) {
        return type_char(std::move(s), static_cast<char>('0' + static_cast<int>(key)));
    }
    if (key == CalcKey::Dot) {
        return type_char(std::move(s), '.');
    }
    if (const auto op = op_of(key)) {
        if (s.pending && s.has_entry) {
            const auto r = apply(s.accumulator, *s.pending, s.entry);
            if (!r) {
                return error_state();
            }
            s = show_result(std::move(s), *r);
            if (s.error) {
                return s;
            }
            s.accumulator = *r;
        } else if (!s.pending) {
            s.accumulator = s.entry;
        }
        s.pending = op;
        s.typing = false;
        s.has_entry = false;
        return s;
    }
    switch (key) {
    case CalcKey::Equals: {
        if (s.pending) {
            const auto r = apply(s.accumulator, *s.pending, s.entry);
            if (!r) {
                return error_state();
            }
            s = show_result(std::move(s), *r);
            if (s.error) {
                return s;
            }
            s.accumulator = *r;
            s.pending.reset();
        } else {
            s.accumulator = s.entry;
        }
        s.typing = false;
        s.has_entry = false;
        return s;
    }
    case CalcKey::Sqrt:
        if (s.entry < 0) {
            return error_state();
        }
        s = show_result(std::move(s), std::sqrt(s.entry));
        break;
    case CalcKey::Inverse:
        if (s.entry == 0) {
            return error_state();
        }
        s = show_result(std::move(s), 1.0 / s.entry);
        break;
    case CalcKey::Negate:
        if (s.typing) {
            if (!s.display.empty() && s.display[0] == '-') {
                s.display.erase(0, 1);
            } else {
                s.display.insert(0, "-");
            }
            s.entry = -s.entry;
            s.has_entry = true;
            return s;
        }
        s = show_result(std::move(s), -s.entry);
        break;
    default: break;
    }
    if (!s.error) {
        s.typing = false;
        s.has_entry = true;
    }
    return s;
}

namespace {

struct KeySpec {
    CalcKey key;
    const char* id;
    double x;
    double y;
    double w;
};

constexpr double kKeyH = 32;

constexpr KeySpec kNumbers[] = {
    {CalcKey::D7, "key_7", 10, 60, 40},   {CalcKey::D8, "key_8", 56, 60, 40},
    {CalcKey::D9, "key_9", 102, 60, 40},  {CalcKey::D4, "key_4", 10, 98, 40},
    {CalcKey::D5, "key_5", 56, 98, 40},   {CalcKey::D6, "key_6", 102, 98, 40},
    {CalcKey::D1, "key_1", 10, 136, 40},  {CalcKey::D2, "key_2", 56, 136, 40},
    {CalcKey::D3, "key_3", 102, 136, 40}, {CalcKey::D0, "key_0", 10, 174, 40},
    {CalcKey::Dot, "key_dot", 56, 174, 40},
};
constexpr KeySpec kOperations[] = {
    {CalcKey::Div, "key_div", 166, 60, 40}, {CalcKey::Mul, "key_mul", 212, 60, 40},
    {CalcKey::Sub, "key_sub", 166, 98, 40}, {CalcKey::Add, "key_add", 212, 98, 40},
    {CalcKey::Equals, "key_eq", 166, 136, 86},
};
constexpr KeySpec kFunctions[] = {
    {CalcKey::Sqrt, "key_sqrt", 10, 230, 40},
    {CalcKey::Inverse, "key_inv", 56, 230, 40},
    {CalcKey::Negate, "key_neg", 102, 230, 40},
};
constexpr KeySpec kClear{CalcKey::Clear, "key_clear", 166, 230, 86};

const SizeRange kKeyRange{20, 16, 400, 200};

void add_key(Scene& scene, const KeySpec& spec, Rgba color, const char* tag)
{
    SceneElement e;
    e.id = spec.id;
    e.kind = ControlProxy{ControlRole::Button, to_string(spec.key), to_string(spec.key)};
    e.params.bounds = {spec.x, spec.y, spec.w, kKeyH};
    e.params.color = color;
    e.params.font = {"sans-serif", 12, false, false};
    e.size_range = kKeyRange;
    if (tag) {
        e.group_tag = tag;
    }
    scene.add_element(std::move(e));
}

template <std::size_t N>
void add_key_group(Scene& scene, const char* id, const char* title, const KeySpec (&keys)[N],
                   Rgba color, Rgba frame_color)
{
    std::vector<ElementId> members;
    for (const auto& spec : keys) {
        add_key(scene, spec, color, id);
        members.push_back(spec.id);
    }
    scene.create_group(id, title, std::move(members));
    auto params = scene.element(id).params;
    params.color = frame_color;
    scene.set_visibility_params(id, params);
}

} // namespace

Scene build_calculator()
{
    Scene scene;

    SceneElement display;
    display.id = "display";
    display.kind = ControlProxy{ControlRole::TextField, "0", "display"};
    display.params.bounds = {10, 10, 242, 36};
    display.params.color = {255, 255, 255, 255};
    display.params.font = {"monospace", 16, false, false};
    display.size_range = {60, 20, 1000, 200};
    scene.add_element(std::move(display));
    scene.record()["display"] = "0";

    add_key_group(scene, "numbers", "Numbers", kNumbers, {200, 220, 255, 255}, {40, 80, 160, 255});
    add_key_group(scene, "operations", "Operations", kOperations, {255, 225, 190, 255},
                  {170, 100, 30, 255});
    add_key_group(scene, "functions", "Functions", kFunctions, {205, 240, 205, 255},
                  {40, 130, 40, 255});
    add_key(scene, kClear, {255, 205, 205, 255}, nullptr);

    scene.snapshot_default();
    return scene;
}

} // namespace udapp::demos
