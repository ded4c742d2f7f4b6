#include "invsub/covering.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invsub {

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

// Rows top to bottom; the bottom row is level 1.
const Table kH = {{0}, {0, 1}, {0, 1, 2}, {1, 2, 2}, {1, 1, 1}};
const Table kH1 = {{1}, {1, 2}, {1, 2, 2}, {1, 1, 1}, {0, 0, 0}};

// The first four modules on each ray, six levels each.
const std::array<std::array<Table, 4>, 3> kRays = {{
    {{
        {{0}, {0, 0}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
        {{0}, {0, 0}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {0, 0, 0}},
        {{0}, {0, 1}, {1, 1, 2}, {1, 1, 2}, {1, 1, 1}, {0, 0, 0}},
        {{0}, {0, 1}, {1, 1, 2}, {1, 2, 2}, {1, 1, 1}, {0, 0, 0}},
    }},
    {{
        {{0}, {1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 1, 1}, {0, 0, 0}},
        {{0}, {1, 1}, {0, 1, 1}, {0, 1, 1}, {1, 1, 1}, {0, 0, 0}},
        {{0}, {1, 1}, {0, 1, 1}, {1, 2, 2}, {1, 1, 1}, {0, 0, 0}},
        {{0}, {1, 1}, {0, 1, 2}, {1, 2, 2}, {1, 1, 1}, {0, 0, 0}},
    }},
    {{
        {{1}, {0, 1}, {0, 0, 1}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}},
        {{1}, {0, 1}, {0, 0, 1}, {0, 1, 1}, {0, 0, 0}, {0, 0, 0}},
        {{1}, {0, 1}, {0, 1, 2}, {1, 2, 2}, {1, 1, 1}, {1, 1, 1}},
        {{1}, {0, 1}, {0, 1, 2}, {1, 2, 2}, {1, 1, 1}, {0, 0, 0}},
    }},
}};

const char* column_suffix(Column c) {
    switch (c) {
        case Column::plain: return "";
        case Column::primed: return "'";
        case Column::double_primed: return "''";
    }
    return "";
}

}  // namespace

std::string CoveringVertex::to_string() const { return std::to_string(level) + column_suffix(column); }

std::int64_t DimVector::at(const CoveringVertex& v) const {
    auto it = e_.find(v);
    return it == e_.end() ? 0 : it->second;
}

void DimVector::set(const CoveringVertex& v, std::int64_t value) {
    if (value == 0) {
        e_.erase(v);
    } else {
        e_[v] = value;
    }
}

std::int64_t DimVector::min_level() const {
    if (e_.empty()) return 1;
    return e_.begin()->first.level;
}

std::int64_t DimVector::max_level() const {
    if (e_.empty()) return 0;
    return e_.rbegin()->first.level;
}

DimVector DimVector::from_table(const Table& rows, std::int64_t bottom_level) {
    static constexpr Column kOrder[3] = {Column::double_primed, Column::primed, Column::plain};
    DimVector d;
    std::int64_t level = bottom_level + static_cast<std::int64_t>(rows.size()) - 1;
    for (const auto& row : rows) {
        if (row.empty() || row.size() > 3) throw std::invalid_argument("table rows need 1 to 3 entries");
        const std::size_t skip = 3 - row.size();
        for (std::size_t i = 0; i < row.size(); ++i) d.set({level, kOrder[skip + i]}, row[i]);
        --level;
    }
    return d;
}

std::string DimVector::to_table(std::int64_t bottom, std::int64_t top) const {
    std::ostringstream os;
    for (std::int64_t level = top; level >= bottom; --level) {
        os << at(level, Column::double_primed) << ' ' << at(level, Column::primed) << ' ' << at(level, Column::plain)
           << '\n';
    }
    return os.str();
}

DimVector operator+(const DimVector& a, const DimVector& b) {
    DimVector r = a;
    for (const auto& [v, x] : b.entries()) r.add(v, x);
    return r;
}

DimVector operator-(const DimVector& a, const DimVector& b) { return a + (-1) * b; }

DimVector operator*(std::int64_t k, const DimVector& a) {
    DimVector r;
    for (const auto& [v, x] : a.entries()) r.set(v, checked_mul(k, x));
    return r;
}

DimensionType project(const DimVector& d) {
    DimensionType t;
    for (const auto& [v, x] : d.entries()) {
        switch (v.column) {
            case Column::double_primed:
                t.x = checked_add(t.x, x);
                t.y = checked_sub(t.y, x);
                break;
            case Column::primed:
                t.y = checked_add(t.y, x);
                t.z = checked_sub(t.z, x);
                break;
            case Column::plain:
                t.z = checked_add(t.z, x);
                break;
        }
    }
    return t;
}

DimVector shift(const DimVector& d, std::int64_t k) {
    DimVector r;
    for (const auto& [v, x] : d.entries()) r.set({checked_add(v.level, k), v.column}, x);
    return r;
}

bool is_chain_dim_vector(const DimVector& d) {
    for (std::int64_t level = d.min_level(); level <= d.max_level(); ++level) {
        const auto pp = d.at(level, Column::double_primed);
        const auto p = d.at(level, Column::primed);
        const auto q = d.at(level, Column::plain);
        if (pp < 0 || pp > p || p > q) return false;
    }
    return true;
}

DimVector radical_h() { return DimVector::from_table(kH); }
DimVector radical_h1() { return DimVector::from_table(kH1); }

DimVector ray_dim_vector(int ray, std::int64_t step) {
    if (ray < 1 || ray > 3) throw std::invalid_argument("ray must be 1, 2 or 3");
    if (step < 0) throw std::invalid_argument("ray step must be nonnegative");
    const DimVector base = DimVector::from_table(kRays[ray - 1][step % 4]);
    return base + (step / 4) * radical_h1();
}

DimensionType ray_type(int ray, std::int64_t step) { return project(ray_dim_vector(ray, step)); }

const std::array<const char*, kAVertexCount> kAVertexLabels = {"1", "2", "3", "4", "5", "2''", "3''", "4'", "3bar"};

DimensionType a_dim_type(const ADimVector& d) {
    if (d[a3bar] > d[a3]) throw std::invalid_argument("a_dim_type: d_3bar exceeds d_3");
    const std::int64_t x = checked_add(checked_add(d[a1], d[a2pp]), d[a3pp]);
    const std::int64_t y =
        checked_sub(checked_add(checked_sub(checked_add(d[a2], d[a3]), d[a3bar]), d[a4p]), checked_add(d[a2pp], d[a3pp]));
    const std::int64_t z = checked_add(checked_sub(checked_add(d[a4], d[a5]), d[a4p]), d[a3bar]);
    return {x, y, z};
}

DimVector a_to_covering(const ADimVector& d) {
    if (d[a3bar] > d[a3]) throw std::invalid_argument("a_to_covering: d_3bar exceeds d_3");
    DimVector m;
    for (std::int64_t i = 1; i <= 5; ++i) m.set({i, Column::plain}, d[static_cast<std::size_t>(i - 1)]);
    m.set({1, Column::primed}, d[a1]);
    m.set({2, Column::primed}, d[a2]);
    m.set({3, Column::primed}, d[a3] - d[a3bar]);
    m.set({4, Column::primed}, d[a4p]);
    m.set({1, Column::double_primed}, d[a1]);
    m.set({2, Column::double_primed}, d[a2pp]);
    m.set({3, Column::double_primed}, d[a3pp]);
    return m;
}

ADimVector radical_h_a() { return {1, 2, 2, 1, 0, 1, 0, 0, 1}; }
ADimVector radical_h1_a() { return {0, 1, 2, 2, 1, 1, 1, 1, 0}; }

}  // namespace invsub
