#include "udapp/demos.hpp"

#include "udapp/interpreter.hpp"

#include <numbers>

namespace udapp::demos {

namespace {

const SizeRange kPlotRange{80, 60, 4000, 4000};
constexpr double kPlotWidth = 360;
constexpr double kPlotHeight = 240;

bool is_plot(const SceneElement& e)
{
    const auto* g = std::get_if<GraphicalPrimitive>(&e.kind);
    return g && g->shape == ShapeKind::PlotArea;
}

ElementId add_plot_at(Scene& scene, const ElementId& id, const std::string& expression,
                      const WorldRange& world, RectBounds bounds, Rgba curve_color)
{
    SceneElement e;
    e.id = id;
    PlotSpec spec{world, {PlotCurve{expression, curve_color, kDefaultCurveSamples}}, "y = " + expression};
    e.kind = GraphicalPrimitive{ShapeKind::PlotArea, "", std::move(spec)};
    e.params.bounds = bounds;
    e.params.color = {252, 252, 246, 255};
    e.params.font = {"sans-serif", 9, false, false};
    e.size_range = kPlotRange;
    scene.add_element(std::move(e));
    return id;
}

} // namespace

ElementId add_plot(Scene& scene, const std::string& expression, const WorldRange& world)
{
    expr::parse(expression);
    if (!world.valid()) {
        throw Error(ErrorCode::BadRange, "plot world needs finite x_min < x_max and y_min < y_max");
    }
    int n = 1;
    while (scene.contains("plot" + std::to_string(n))) {
        ++n;
    }
    int existing = 0;
    for (const auto& [id, e] : scene.elements()) {
        existing += is_plot(e) ? 1 : 0;
    }
    const double offset = 24.0 * existing;
    return add_plot_at(scene, "plot" + std::to_string(n), expression, world,
                       {40 + offset, 70 + offset, kPlotWidth, kPlotHeight}, {180, 30, 30, 255});
}

void remove_plot(Scene& scene, const ElementId& id)
{
    if (!scene.contains(id) || !is_plot(scene.element(id))) {
        throw Error(ErrorCode::UnknownId, "no plot with id '" + id + "'");
    }
    scene.remove_element(id);
}

Scene build_functions_analyser()
{
    Scene scene;

    SceneElement title;
    title.id = "title";
    title.kind = GraphicalPrimitive{ShapeKind::Label, "Functions analyser", std::nullopt};
    title.params.bounds = {20, 10, 220, 26};
    title.params.color = {30, 30, 80, 255};
    title.params.font = {"sans-serif", 16, true, false};
    title.size_range = {40, 12, 1000, 200};
    scene.add_element(std::move(title));

    const double pi = std::numbers::pi;
    add_plot_at(scene, "plot1", "sin(x)", {-2 * pi, 2 * pi, -1.5, 1.5},
                {20, 50, kPlotWidth, kPlotHeight}, {0, 70, 200, 255});
    add_plot_at(scene, "plot2", "exp(x)", {-3, 3, -1, 10},
                {400, 50, kPlotWidth, kPlotHeight}, {200, 60, 0, 255});

    SceneElement input;
    input.id = "expression";
    input.kind = ControlProxy{ControlRole::TextField, "", "expression"};
    input.params.bounds = {20, 310, 280, 24};
    input.params.color = {255, 255, 255, 255};
    input.size_range = {40, 16, 1000, 200};
    scene.add_element(std::move(input));
    scene.record()["expression"] = "x^3 - 2*x";

    SceneElement button;
    button.id = "add_plot";
    button.kind = ControlProxy{ControlRole::Button, "Add plot", "add-plot"};
    button.params.bounds = {310, 310, 80, 24};
    button.params.color = {225, 225, 235, 255};
    button.size_range = {30, 16, 600, 200};
    scene.add_element(std::move(button));

    scene.snapshot_default();
    return scene;
}

std::optional<DemoKind> parse_demo(std::string_view name)
{
    if (name == "calculator") return DemoKind::Calculator;
    if (name == "personaldata") return DemoKind::PersonalData;
    if (name == "functions") return DemoKind::Functions;
    return std::nullopt;
}

const char* to_string(DemoKind kind)
{
    switch (kind) {
    case DemoKind::Calculator: return "calculator";
    case DemoKind::PersonalData: return "personaldata";
    case DemoKind::Functions: return "functions";
    }
    return "?";
}

Scene build(DemoKind kind)
{
    switch (kind) {
    case DemoKind::Calculator: return build_calculator();
    case DemoKind::PersonalData: return build_personaldata();
    case DemoKind::Functions: return build_functions_analyser();
    }
    return {};
}

} // namespace udapp::demos
