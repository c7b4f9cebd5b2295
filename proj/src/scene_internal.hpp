#pragma once

#include "udapp/scene.hpp"

namespace udapp::detail {

/** Recomputes (and stores) the frame of `group`, inner groups first. */
std::optional<RectBounds> compute_frame(SceneState& state, const ElementId& group);

void refresh_frames(SceneState& state);

/** Stable reorder keeping every group below all of its members. */
void normalize_z(SceneState& state);

} // namespace udapp::detail
