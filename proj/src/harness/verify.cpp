#include "udapp/harness.hpp"

#include "udapp/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace udapp::harness {

using nlohmann::json;

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items)
{
    return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

Point near(std::mt19937_64& rng, const RectBounds& b)
{
    // Integer coordinates keep every sum exact.
    const int l = static_cast<int>(std::floor(b.left)) - 8;
    const int t = static_cast<int>(std::floor(b.top)) - 8;
    const int r = static_cast<int>(std::ceil(b.right())) + 8;
    const int d = static_cast<int>(std::ceil(b.bottom())) + 8;
    return {static_cast<double>(uniform(rng, l, r)), static_cast<double>(uniform(rng, t, d))};
}

Command command(std::string name, json args = json::object())
{
    return Command{std::move(name), std::move(args)};
}

const std::vector<std::string> kPlotExpressions = {"x^2 - 3", "sin(2*x)", "1/x", "sqrt(abs(x))",
                                                  "exp(-x^2)*4", "ln(x)"};

} // namespace

std::vector<TraceEvent> random_events(const Session& session, std::mt19937_64& rng)
{
    const Scene& scene = session.scene();
    std::vector<ElementId> all;
    std::vector<ElementId> visible;
    std::vector<ElementId> leaves;
    std::vector<ElementId> groups;
    std::vector<ElementId> temporary;
    std::vector<ElementId> plots;
    for (const auto& [id, e] : scene.elements()) {
        all.push_back(id);
        if (scene.is_visible(id)) {
            visible.push_back(id);
        }
        if (e.is_group()) {
            groups.push_back(id);
            if (scene.group(id).temporary) {
                temporary.push_back(id);
            }
        } else {
            leaves.push_back(id);
        }
        const auto* g = std::get_if<GraphicalPrimitive>(&e.kind);
        if (g && g->shape == ShapeKind::PlotArea) {
            plots.push_back(id);
        }
    }

    std::vector<TraceEvent> out;
    const int roll = uniform(rng, 0, 99);
    if (roll < 55) {
        Point p = visible.empty() || uniform(rng, 0, 9) == 0
                      ? Point{static_cast<double>(uniform(rng, 0, 799)), static_cast<double>(uniform(rng, 0, 599))}
                      : near(rng, scene.element(pick(rng, visible)).params.bounds);
        out.push_back(MouseDown{p, MouseButton::Left});
        const int moves = uniform(rng, 0, 4);
        for (int i = 0; i < moves; ++i) {
            p.x += uniform(rng, -15, 15);
            p.y += uniform(rng, -15, 15);
            out.push_back(MouseMove{p});
        }
        out.push_back(MouseUp{p});
        return out;
    }
    if (roll < 60 && !visible.empty()) {
        const Point p = near(rng, scene.element(pick(rng, visible)).params.bounds);
        out.push_back(MouseDown{p, MouseButton::Right});
        out.push_back(MouseUp{p});
        return out;
    }
    if (roll < 68) {
        out.push_back(command(uniform(rng, 0, 1) ? "hide" : "show", {{"id", pick(rng, all)}}));
    } else if (roll < 74) {
        out.push_back(command(uniform(rng, 0, 1) ? "fix" : "unfix", {{"id", pick(rng, all)}}));
    } else if (roll < 78 && !groups.empty()) {
        out.push_back(command("move-group", {{"id", pick(rng, groups)},
                                             {"dx", uniform(rng, -20, 20)},
                                             {"dy", uniform(rng, -20, 20)}}));
    } else if (roll < 82) {
        const int l = uniform(rng, 0, 500);
        const int t = uniform(rng, 0, 350);
        out.push_back(command("rubber-band", {{"rect", {l, t, uniform(rng, 20, 300), uniform(rng, 20, 250)}}}));
    } else if (roll < 85 && !temporary.empty()) {
        out.push_back(command("dissolve", {{"id", pick(rng, temporary)}}));
    } else if (roll < 88 && !leaves.empty()) {
        json targets = json::array();
        const int n = uniform(rng, 1, 3);
        for (int i = 0; i < n; ++i) {
            targets.push_back(pick(rng, all));
        }
        out.push_back(command("spread", {{"sample", pick(rng, leaves)}, {"targets", targets}}));
    } else if (roll < 92 && !leaves.empty()) {
        const auto& id = pick(rng, leaves);
        const auto& b = scene.element(id).params.bounds;
        out.push_back(command("set-params",
                              {{"id", id},
                               {"params",
                                {{"bounds", {b.left + uniform(rng, -10, 10), b.top + uniform(rng, -10, 10),
                                             b.width + uniform(rng, -10, 10), b.height + uniform(rng, -10, 10)}},
                                 {"color", {uniform(rng, 0, 255), uniform(rng, 0, 255), uniform(rng, 0, 255), 255}}}}}));
    } else if (roll < 94) {
        out.push_back(command("restore-default"));
    } else {
        switch (session.kind()) {
        case demos::DemoKind::Calculator:
            out.push_back(command("press-key", {{"key", demos::to_string(pick(rng, demos::all_calc_keys()))}}));
            break;
        case demos::DemoKind::Functions:
            if (!plots.empty() && uniform(rng, 0, 2) == 0) {
                out.push_back(command("remove-plot", {{"id", pick(rng, plots)}}));
            } else {
                out.push_back(command("add-plot", {{"expr", pick(rng, kPlotExpressions)}}));
            }
            break;
        case demos::DemoKind::PersonalData:
            out.push_back(command("set-field", {{"key", "notes"}, {"value", "n" + std::to_string(uniform(rng, 0, 999))}}));
            break;
        }
    }
    return out;
}

namespace {

struct Extent {
    double l = 0, t = 0, r = 0, b = 0;
    bool any = false;

    void add(const RectBounds& x)
    {
        if (!any) {
            l = x.left, t = x.top, r = x.left + x.width, b = x.top + x.height;
            any = true;
            return;
        }
        l = std::min(l, x.left);
        t = std::min(t, x.top);
        r = std::max(r, x.left + x.width);
        b = std::max(b, x.top + x.height);
    }
};

// Frame of a group from first principles: visible leaves and visible inner frames, padded.
std::optional<RectBounds> expected_frame(const Scene& scene, const ElementId& id)
{
    const auto& g = scene.group(id);
    Extent ext;
    for (const auto& m : g.members) {
        const auto& e = scene.element(m);
        if (e.hidden) {
            continue;
        }
        if (e.is_group()) {
            if (const auto inner = expected_frame(scene, m)) {
                ext.add(*inner);
            }
        } else {
            ext.add(e.params.bounds);
        }
    }
    if (!ext.any) {
        return std::nullopt;
    }
    return RectBounds{ext.l - g.margin, ext.t - g.margin, ext.r - ext.l + 2 * g.margin,
                      ext.b - ext.t + 2 * g.margin};
}

std::string rect_text(const RectBounds& r)
{
    return "[" + std::to_string(r.left) + "," + std::to_string(r.top) + "," + std::to_string(r.width) + "," +
           std::to_string(r.height) + "]";
}

} // namespace

std::vector<std::string> check_invariants(const Session& session)
{
    std::vector<std::string> bad;
    const Scene& scene = session.scene();

    const auto& z = scene.z_order();
    std::map<ElementId, std::size_t> rank;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (!scene.contains(z[i]) || !rank.emplace(z[i], i).second) {
            bad.push_back("z-order entry '" + z[i] + "' is unknown or repeated");
        }
    }
    if (rank.size() != scene.elements().size()) {
        bad.push_back("z-order does not cover every element");
    }

    for (const auto& [id, e] : scene.elements()) {
        if (!e.params.bounds.valid()) {
            bad.push_back("'" + id + "' has invalid bounds");
        }
        if (!e.is_group() && !e.size_range.admits(e.params.bounds.width, e.params.bounds.height)) {
            bad.push_back("'" + id + "' violates its size range");
        }
        if (!session.mover().is_registered(id)) {
            bad.push_back("'" + id + "' is not registered with the mover");
        }
    }
    for (const auto& id : session.mover().registered()) {
        if (!scene.contains(id)) {
            bad.push_back("mover holds unknown id '" + id + "'");
        }
    }

    for (const auto& [id, g] : scene.groups()) {
        const auto want = expected_frame(scene, id);
        if (want != g.frame) {
            bad.push_back("frame of '" + id + "' is " + (g.frame ? rect_text(*g.frame) : "empty") +
                          ", expected " + (want ? rect_text(*want) : "empty"));
        }
        const auto mirrored = want.value_or(RectBounds{});
        if (scene.element(id).params.bounds != mirrored) {
            bad.push_back("group element '" + id + "' bounds do not mirror its frame");
        }
        for (const auto& m : g.members) {
            if (!scene.contains(m)) {
                bad.push_back("group '" + id + "' holds unknown member '" + m + "'");
            } else if (rank.count(id) && rank.count(m) && rank[id] >= rank[m]) {
                bad.push_back("group '" + id + "' is not below member '" + m + "'");
            }
        }
    }

    if (const auto* caught = std::get_if<MoverCaught>(&session.mover().state())) {
        if (!scene.contains(caught->element) || !scene.is_visible(caught->element) ||
            !scene.element(caught->element).movable) {
            bad.push_back("mover holds '" + caught->element + "' which is not catchable");
        }
    }

    const std::string first = save_layout(scene);
    Scene reloaded;
    try {
        load_layout(first, reloaded);
        if (save_layout(reloaded) != first) {
            bad.push_back("save/load/save is not byte-identical");
        }
        if (!(reloaded.state() == scene.state()) || !(reloaded.record() == scene.record()) ||
            !(reloaded.default_snapshot() == scene.default_snapshot())) {
            bad.push_back("load of saved layout differs from the scene");
        }
    } catch (const Error& e) {
        bad.push_back(std::string("saved layout does not load: ") + e.what());
    }

    if (session.kind() == demos::DemoKind::Calculator) {
        const auto it = scene.record().find("display");
        if (it == scene.record().end() || it->second != session.calc().display) {
            bad.push_back("calculator display field is out of sync");
        }
    }
    return bad;
}

VerifyReport verify(demos::DemoKind kind, std::uint64_t seed, std::size_t sequences, std::size_t steps)
{
    VerifyReport report;
    for (std::size_t s = 0; s < sequences; ++s) {
        std::mt19937_64 rng(seed * 1000003 + s);
        Session session(kind);
        std::vector<TraceEvent> accepted;
        const auto fail = [&](const std::string& what) {
            report.failures.push_back("sequence " + std::to_string(s) + ", event " +
                                      std::to_string(accepted.size()) + ": " + what);
        };
        bool stop = false;
        for (std::size_t step = 0; step < steps && !stop; ++step) {
            for (const auto& ev : random_events(session, rng)) {
                const std::string before = session.canonical_bytes();
                try {
                    session.apply(ev);
                } catch (const Error& e) {
                    if (session.canonical_bytes() != before) {
                        fail(std::string("failed command changed the scene: ") + e.what());
                        stop = true;
                        break;
                    }
                    continue;
                }
                ++report.events;
                accepted.push_back(ev);
                for (const auto& v : check_invariants(session)) {
                    fail(to_json_line(ev) + ": " + v);
                    stop = true;
                }
                if (stop) {
                    break;
                }
            }
        }
        ++report.sequences;
        if (stop) {
            continue;
        }

        // The accepted events must replay, through their text form, to the same state.
        try {
            Session again(kind);
            const auto trace = parse_trace(to_jsonl(accepted));
            const SceneHash h = replay(again, trace);
            if (h != session.hash()) {
                fail("replay gives hash " + format_hash(h) + ", live session " + format_hash(session.hash()));
            }
        } catch (const Error& e) {
            fail(std::string("replay failed: ") + e.what());
        }
    }
    return report;
}

} // namespace udapp::harness
