#pragma once

#include <string>

#include "walks/bijections.hpp"
#include "walks/walk.hpp"

namespace walks::render {

/// Plane drawings of a valid walk of a type with at most two dimensions:
/// dimension 0 is vertical (N/S), dimension 1 horizontal (E/W). The promenade
/// y = 0 is a dashed double line; repeated traversals of one edge are shifted
/// sideways by 0.1 grid units per earlier traversal. Throws InputError for
/// wider types or invalid walks.
[[nodiscard]] std::string walk_ascii(const Walk& walk, const WalkType& type);
[[nodiscard]] std::string walk_svg(const Walk& walk, const WalkType& type);

/// Timeline zig-zag of a Dyck word: x = step index, y = height.
[[nodiscard]] std::string dyck_ascii(const bijections::DyckPath& path);
[[nodiscard]] std::string dyck_svg(const bijections::DyckPath& path);

}  // namespace walks::render
