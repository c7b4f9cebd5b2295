// udapp: headless driver for the demo scenes.
//
//   udapp demo <name> [--layout FILE]
//   udapp replay <name> <trace.jsonl> [--layout FILE] [--save-layout FILE] [--svg FILE]
//   udapp eval "<expr>" --at <x>
//   udapp verify <name>
//
// Exit status: 0 ok, 1 invariant or replay failure, 2 usage or parse error.

#include "udapp/harness.hpp"
#include "udapp/interpreter.hpp"
#include "udapp/persistence.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

using namespace udapp;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

int exit_code(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::LexError:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownFunction:
    case ErrorCode::TraceParseError:
    case ErrorCode::VersionError:
    case ErrorCode::ReferentialError:
    case ErrorCode::IoError:
    case ErrorCode::InvalidArgument:
        return kUsage;
    default:
        return kFailure;
    }
}

demos::DemoKind demo_kind(const std::string& name)
{
    const auto kind = demos::parse_demo(name);
    if (!kind) {
        throw Error(ErrorCode::InvalidArgument,
                    "unknown demo '" + name + "' (calculator, personaldata, functions)");
    }
    return *kind;
}

void load_initial(harness::Session& session, const std::string& layout)
{
    if (!layout.empty()) {
        session.apply(harness::LoadLayout{std::filesystem::absolute(layout).string()});
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Headless driver for user-driven demo scenes"};
    app.require_subcommand(1);

    std::string name;
    std::string layout;

    auto* demo = app.add_subcommand("demo", "Build a demo, optionally load a layout, print its hash");
    demo->add_option("name", name, "calculator, personaldata or functions")->required();
    demo->add_option("--layout", layout, "Layout file to load");

    std::string trace_path;
    std::string save_path;
    std::string svg_path;
    auto* replay = app.add_subcommand("replay", "Replay a JSON Lines trace and print the final hash");
    replay->add_option("name", name, "Demo to start from")->required();
    replay->add_option("trace", trace_path, "Trace file")->required();
    replay->add_option("--layout", layout, "Layout file to load before replay");
    replay->add_option("--save-layout", save_path, "Write the final layout here");
    replay->add_option("--svg", svg_path, "Write an SVG snapshot of the final scene here");

    std::string expression;
    double at = 0;
    auto* eval = app.add_subcommand("eval", "Evaluate an expression in x");
    eval->add_option("expr", expression, "Expression")->required();
    eval->add_option("--at", at, "Value of x")->required();

    auto* verify = app.add_subcommand("verify", "Run the invariant fuzz suite on a demo");
    verify->add_option("name", name, "Demo to fuzz")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*demo) {
            harness::Session session(demo_kind(name));
            load_initial(session, layout);
            std::cout << harness::format_hash(session.hash()) << '\n';
        } else if (*replay) {
            harness::Session session(demo_kind(name));
            load_initial(session, layout);
            const std::filesystem::path path(trace_path);
            const auto trace = harness::parse_trace(read_file(path));
            const auto hash = harness::replay(session, trace, path.parent_path());
            if (!save_path.empty()) {
                save_layout_file(session.scene(), save_path);
            }
            if (!svg_path.empty()) {
                write_file_atomic(svg_path, harness::render_svg(session.scene()));
            }
            std::cout << harness::format_hash(hash) << '\n';
        } else if (*eval) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", expr::evaluate(expr::parse(expression), at));
            std::cout << buf << '\n';
        } else if (*verify) {
            const auto report = harness::verify(demo_kind(name));
            for (const auto& f : report.failures) {
                std::cerr << f << '\n';
            }
            std::cout << name << ": " << report.sequences << " sequences, " << report.events
                      << " events, " << report.failures.size() << " failures\n";
            return report.ok() ? kOk : kFailure;
        }
    } catch (const PositionedError& e) {
        std::cerr << "udapp: " << e.what() << '\n';
        return exit_code(e);
    } catch (const Error& e) {
        std::cerr << "udapp: " << e.what() << '\n';
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "udapp: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}
