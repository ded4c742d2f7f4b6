#include "invsub/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "invsub/classify.hpp"

namespace invsub {

namespace {

constexpr std::int64_t kScale = 10;
constexpr std::int64_t kAxisLength = 4;

struct Extent {
    std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;

    void include(std::int64_t x, std::int64_t y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

Extent extent_of(const Diagram& d) {
    Extent e;
    for (const auto& p : d.points) e.include(p.x, p.y);
    for (const auto& a : d.axes) e.include(a.dx * kAxisLength, a.dy * kAxisLength);
    for (const auto& [x, y] : d.outline) e.include(x, y);
    return e;
}

// Lattice points on the segment from a to b.
std::vector<std::pair<std::int64_t, std::int64_t>> segment_points(std::pair<std::int64_t, std::int64_t> a,
                                                                  std::pair<std::int64_t, std::int64_t> b) {
    const std::int64_t dx = b.first - a.first;
    const std::int64_t dy = b.second - a.second;
    const std::int64_t steps = std::max<std::int64_t>(1, std::gcd(std::abs(dx), std::abs(dy)));
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t i = 0; i <= steps; ++i) out.emplace_back(a.first + dx / steps * i, a.second + dy / steps * i);
    return out;
}

std::string render_text(const Diagram& d) {
    const Extent e = extent_of(d);
    const auto width = static_cast<std::size_t>(e.max_x - e.min_x + 1);
    const auto height = static_cast<std::size_t>(e.max_y - e.min_y + 1);
    constexpr std::size_t kCell = 3;
    std::vector<std::string> grid(height, std::string(width * kCell, ' '));
    auto put = [&](std::int64_t x, std::int64_t y, const std::string& s) {
        auto& row = grid[static_cast<std::size_t>(e.max_y - y)];
        const std::size_t end = static_cast<std::size_t>(x - e.min_x + 1) * kCell;
        const std::string cell = s.size() > kCell ? s.substr(s.size() - kCell) : s;
        row.replace(end - cell.size(), cell.size(), cell);
    };
    for (std::size_t i = 0; i < d.outline.size(); ++i) {
        for (auto [x, y] : segment_points(d.outline[i], d.outline[(i + 1) % d.outline.size()])) put(x, y, ".");
    }
    for (const auto& a : d.axes) put(a.dx * kAxisLength, a.dy * kAxisLength, a.name);
    auto sorted = d.points;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) {
        std::string glyph = p.hollow ? "o" : "*";
        if (!p.label.empty()) glyph = p.label + glyph;
        put(p.x, p.y, glyph);
    }
    std::ostringstream os;
    for (auto& row : grid) {
        row.erase(row.find_last_not_of(' ') + 1);
        os << row << '\n';
    }
    return os.str();
}

std::string render_svg(const Diagram& d) {
    const Extent e = extent_of(d);
    constexpr std::int64_t kMargin = 2;
    const std::int64_t w = (e.max_x - e.min_x + 2 * kMargin) * kScale;
    const std::int64_t h = (e.max_y - e.min_y + 2 * kMargin) * kScale;
    auto sx = [&](std::int64_t x) { return (x - e.min_x + kMargin) * kScale; };
    auto sy = [&](std::int64_t y) { return (e.max_y - y + kMargin) * kScale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (const auto& a : d.axes) {
        os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(a.dx * kAxisLength) << "\" y2=\""
           << sy(a.dy * kAxisLength) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << sx(a.dx * kAxisLength) << "\" y=\"" << sy(a.dy * kAxisLength)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << a.name << "</text>\n";
    }
    if (!d.outline.empty()) {
        os << "<polygon points=\"";
        for (std::size_t i = 0; i < d.outline.size(); ++i) {
            if (i) os << ' ';
            os << sx(d.outline[i].first) << ',' << sy(d.outline[i].second);
        }
        os << "\" fill=\"none\" stroke=\"black\" stroke-dasharray=\"2,3\"/>\n";
    }
    auto sorted = d.points;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) {
        os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"3\" "
           << (p.hollow ? "fill=\"white\" stroke=\"black\"" : "fill=\"black\"") << "/>\n";
        if (!p.label.empty()) {
            os << "<text x=\"" << sx(p.x) + 4 << "\" y=\"" << sy(p.y) - 4 << "\" font-size=\"9\">" << p.label
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

DiagramFormat parse_diagram_format(const std::string& name) {
    if (name == "text" || name == "hex") return DiagramFormat::text;
    if (name == "svg") return DiagramFormat::svg;
    throw std::invalid_argument("unknown diagram format: " + name);
}

std::string render(const Diagram& d, DiagramFormat format) {
    return format == DiagramFormat::svg ? render_svg(d) : render_text(d);
}

Diagram hex_diagram(std::vector<DiagramPoint> points) {
    Diagram d;
    d.points = std::move(points);
    d.axes = {{2, -1, "x"}, {0, 2, "y"}, {-2, -1, "z"}};
    d.outline = {{0, 6}, {-6, 3}, {-6, -3}, {0, -6}, {6, -3}, {6, 3}};
    return d;
}

Diagram hex_diagram_for_types(const std::vector<DimensionType>& types, bool labels) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> lowest;
    for (const auto& t : types) {
        const auto key = hex_project(t);
        auto it = lowest.find(key);
        if (it == lowest.end() || t.min_entry() < it->second) lowest[key] = t.min_entry();
    }
    std::vector<DiagramPoint> pts;
    for (const auto& [xy, m] : lowest) {
        const bool on_axis = xy.first == 0 && xy.second == 0;
        pts.push_back({xy.first, xy.second, labels ? std::to_string(m) : std::string(), on_axis});
    }
    return hex_diagram(std::move(pts));
}

}  // namespace invsub
