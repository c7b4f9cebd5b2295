#pragma once

// Layout documents (format "udapp-layout/1"): canonical UTF-8 JSON with
// sorted keys and shortest round-trip numbers, newline terminated. Equal
// scenes give identical bytes.

#include "udapp/scene.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace udapp {

inline constexpr std::string_view kLayoutFormat = "udapp-layout/1";

std::string save_layout(const Scene& scene);

/**
 * Replace the scene's state with the document's. Throws ParseError,
 * VersionError or ReferentialError; on any error the scene is unchanged.
 */
void load_layout(std::string_view bytes, Scene& scene);

/** Writes through a temporary file and a rename. Throws IoError. */
void save_layout_file(const Scene& scene, const std::filesystem::path& path);
void load_layout_file(const std::filesystem::path& path, Scene& scene);

/** Whole-file helpers shared with the trace reader. Throw IoError. */
std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

} // namespace udapp
