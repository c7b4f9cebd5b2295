#include "test_util.hpp"

#include "udapp/demos.hpp"
#include "udapp/persistence.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>

using namespace udapp;
using namespace udapp::test;

TEST(SaveLayoutTest, Deterministic)
{
    const Scene s = demos::build_personaldata();
    EXPECT_EQ(save_layout(s), save_layout(s));
    EXPECT_EQ(save_layout(s), save_layout(demos::build_personaldata()));
}

TEST(SaveLayoutTest, AfterRestoreMatchesFresh)
{
    Scene s = demos::build_functions_analyser();
    s.set_hidden("plot1", true);
    auto p = s.element("plot2").params;
    p.bounds = translate(p.bounds, 30, 30);
    s.set_visibility_params("plot2", p);
    s.restore_default_view();
    EXPECT_EQ(save_layout(s), save_layout(demos::build_functions_analyser()));
}

TEST(SaveLayoutTest, EmptyScene)
{
    const auto doc = nlohmann::json::parse(save_layout(Scene{}));
    EXPECT_EQ(doc.at("format"), std::string(kLayoutFormat));
    EXPECT_TRUE(doc.at("elements").empty());
    EXPECT_TRUE(doc.at("groups").empty());
    EXPECT_TRUE(doc.at("z_order").empty());
}

TEST(SaveLayoutTest, NewlineTerminatedSortedKeys)
{
    const auto text = save_layout(demos::build_calculator());
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(text.back(), '\n');
    // Canonical form: re-serializing the parsed document (keys sorted) reproduces it.
    EXPECT_EQ(nlohmann::json::parse(text).dump(2) + "\n", text);
}

TEST(LoadLayoutTest, RoundTrip)
{
    for (auto kind : {demos::DemoKind::Calculator, demos::DemoKind::PersonalData, demos::DemoKind::Functions}) {
        Scene s = demos::build(kind);
        s.rubber_band_select({0, 0, 200, 120});
        const auto first = save_layout(s);
        Scene loaded;
        load_layout(first, loaded);
        EXPECT_EQ(save_layout(loaded), first);
        EXPECT_EQ(loaded, s);
    }
}

TEST(LoadLayoutTest, TruncatedLeavesSceneUntouched)
{
    const auto text = save_layout(demos::build_calculator());
    Scene s = demos::build_personaldata();
    const Scene before = s;
    expect_error([&] { load_layout(text.substr(0, text.size() / 2), s); }, ErrorCode::ParseError);
    EXPECT_EQ(s, before);
}

TEST(LoadLayoutTest, UnknownMemberIsReferentialError)
{
    auto doc = nlohmann::json::parse(save_layout(demos::build_calculator()));
    doc["groups"][0]["members"].push_back("ghost");
    Scene s;
    expect_error([&] { load_layout(doc.dump(), s); }, ErrorCode::ReferentialError);
    EXPECT_TRUE(s.elements().empty());
}

TEST(LoadLayoutTest, WrongFormatIsVersionError)
{
    auto doc = nlohmann::json::parse(save_layout(Scene{}));
    doc["format"] = "udapp-layout/99";
    Scene s;
    expect_error([&] { load_layout(doc.dump(), s); }, ErrorCode::VersionError);
}

TEST(LoadLayoutTest, SchemaErrors)
{
    Scene s;
    expect_error([&] { load_layout("[]", s); }, ErrorCode::ParseError);
    auto doc = nlohmann::json::parse(save_layout(demos::build_calculator()));
    doc["elements"][0]["params"]["bounds"] = {0, 0, -5, 3};
    expect_error([&] { load_layout(doc.dump(), s); }, ErrorCode::ParseError);
}

TEST(LayoutFileTest, AtomicWriteAndRead)
{
    const auto dir = std::filesystem::temp_directory_path() / "udapp_persistence_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "layout.json";
    const Scene s = demos::build_calculator();
    save_layout_file(s, path);
    EXPECT_EQ(read_file(path), save_layout(s));
    Scene t;
    load_layout_file(path, t);
    EXPECT_EQ(t, s);
    expect_error([&] { read_file(dir / "missing.json"); }, ErrorCode::IoError);
    std::filesystem::remove_all(dir);
}
