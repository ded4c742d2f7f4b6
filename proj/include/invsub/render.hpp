// Plain-text and SVG rendering of planar point diagrams: the hexagonal
// projection of dimension types and the square grid used for pairs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsub/dimtype.hpp"

namespace invsub {

enum class DiagramFormat { text, svg };

/// Throws std::invalid_argument for anything other than "text"/"hex" or "svg".
DiagramFormat parse_diagram_format(const std::string& name);

struct DiagramPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::string label;
    /// Drawn as an open circle (points on the axis of the cylinder).
    bool hollow = false;

    auto operator<=>(const DiagramPoint&) const = default;
};

struct DiagramAxis {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
    std::string name;
};

struct Diagram {
    std::vector<DiagramPoint> points;
    std::vector<DiagramAxis> axes;
    /// Closed dotted polygon, empty for none.
    std::vector<std::pair<std::int64_t, std::int64_t>> outline;
};

/// Byte-identical output for identical input; points are drawn in sorted order.
std::string render(const Diagram& d, DiagramFormat format);

/// Axes x, y, z along (2,-1), (0,2), (-2,-1) and the dotted hexagon where the
/// largest coordinate difference is 3.
Diagram hex_diagram(std::vector<DiagramPoint> points);
/// Collapses types with the same projection; the label is the smallest
/// min(x,y,z) among them when `labels` is set.
Diagram hex_diagram_for_types(const std::vector<DimensionType>& types, bool labels);

}  // namespace invsub
