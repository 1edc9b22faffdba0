#pragma once

#include <optional>
#include <string>
#include <utility>

#include "oscm/model.hpp"

namespace oscm {

struct RenderSpec {
    bool show_arrows = true;
    /// Slots of two placed requests whose edges get the "highlight" class.
    std::optional<std::pair<Slot, Slot>> highlight;
    int unit = 40;  // spacing between neighbouring slots / vertices
};

/// Slots as squares on the top line (filled when fulfilled), vertices as
/// circles on the bottom line, edges as straight segments and propagation
/// arrows as directed curves. Output is byte-stable for identical inputs.
std::string render_svg(const PlacementState& state, const RenderSpec& spec = {});

} // namespace oscm
