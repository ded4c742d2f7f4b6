// Dimension vectors on the Z-graded covering quiver with vertices i, i', i''
// (i in Z), the projection to dimension types, and the A-coordinates of the
// tubular algebra used for the root-theoretic description.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invsub/dimtype.hpp"

namespace invsub {

enum class Column : std::uint8_t { plain, primed, double_primed };

struct CoveringVertex {
    std::int64_t level = 0;
    Column column = Column::plain;

    constexpr auto operator<=>(const CoveringVertex&) const = default;
    std::string to_string() const;
};

/// Finitely supported integer vector over covering vertices. Zero entries are
/// never stored, so equality is equality of the maps.
class DimVector {
public:
    DimVector() = default;

    std::int64_t at(const CoveringVertex& v) const;
    std::int64_t at(std::int64_t level, Column c) const { return at({level, c}); }
    void set(const CoveringVertex& v, std::int64_t value);
    void add(const CoveringVertex& v, std::int64_t delta) { set(v, checked_add(at(v), delta)); }

    const std::map<CoveringVertex, std::int64_t>& entries() const noexcept { return e_; }
    bool is_zero() const noexcept { return e_.empty(); }

    /// Levels lo..hi that carry a nonzero entry; {1, 0} when empty.
    std::int64_t min_level() const;
    std::int64_t max_level() const;

    /// Reads a digit triangle printed top to bottom with the bottom row at
    /// `bottom_level`. Each row is right-aligned to the columns
    /// (double-primed, primed, plain); rows may have 1 to 3 entries.
    static DimVector from_table(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t bottom_level = 1);
    /// The inverse rendering, rows from `top` down to `bottom`, three cells each.
    std::string to_table(std::int64_t bottom, std::int64_t top) const;

    friend bool operator==(const DimVector&, const DimVector&) = default;

private:
    std::map<CoveringVertex, std::int64_t> e_;
};

DimVector operator+(const DimVector& a, const DimVector& b);
DimVector operator-(const DimVector& a, const DimVector& b);
DimVector operator*(std::int64_t k, const DimVector& a);

/// (sum d_i'', sum (d_i' - d_i''), sum (d_i - d_i'))
DimensionType project(const DimVector& d);
/// Translate every entry by k levels: shift(d, k) at level i equals d at i - k.
DimVector shift(const DimVector& d, std::int64_t k);

/// Dimension vector of an object of the covering category of systems:
/// 0 <= d_i'' <= d_i' <= d_i at every level.
bool is_chain_dim_vector(const DimVector& d);

DimVector radical_h();
DimVector radical_h1();

/// Step `step` on ray 1, 2 or 3 (starting at P(4''), P(5'), P(6)). Steps 0..3
/// are stored; later steps add h[1] once per four steps.
DimVector ray_dim_vector(int ray, std::int64_t step);
DimensionType ray_type(int ray, std::int64_t step);

/// Vertices of the quiver of the tubular algebra A, in storage order.
enum AVertex : std::size_t { a1, a2, a3, a4, a5, a2pp, a3pp, a4p, a3bar };
inline constexpr std::size_t kAVertexCount = 9;
using ADimVector = std::array<std::int64_t, kAVertexCount>;
extern const std::array<const char*, kAVertexCount> kAVertexLabels;

/// Dimension type of the covering object attached to an A-module, where the
/// primed space at level 3 is the kernel of N_3 -> N_3bar.
/// Throws std::invalid_argument when d_3bar > d_3.
DimensionType a_dim_type(const ADimVector& d);
/// The covering dimension vector of the same object, levels 1..5.
DimVector a_to_covering(const ADimVector& d);

ADimVector radical_h_a();
ADimVector radical_h1_a();

}  // namespace invsub
