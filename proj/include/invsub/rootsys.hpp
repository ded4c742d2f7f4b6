// Integral quadratic forms of quivers with relations, the positive roots of
// E7, and the passage from roots to dimension types.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invsub/covering.hpp"
#include "invsub/dimtype.hpp"

namespace invsub {

/// Vertices, arrows and relations (by vertex index). The form is
/// q(v) = sum v_i^2 - sum_{arrows s->t} v_s v_t + sum_{relations s~>t} v_s v_t.
struct FormPresentation {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::pair<std::size_t, std::size_t>> relations;

    /// Builds a presentation from labels; throws std::invalid_argument when an
    /// endpoint is not a declared vertex.
    static FormPresentation from_labels(std::vector<std::string> vertices,
                                        const std::vector<std::pair<std::string, std::string>>& arrows,
                                        const std::vector<std::pair<std::string, std::string>>& relations);
    std::size_t index_of(const std::string& label) const;
    /// The symmetric matrix B with q(v) = v^T B v / 2.
    std::vector<std::vector<std::int64_t>> bilinear_matrix() const;
};

/// Dynkin diagram E7 on a, b, g, c, d, d', b''.
const FormPresentation& e7_diagram();
/// The quiver of A on 1, 2, 3, 4, 5, 2'', 3'', 4', 3bar (same order as ADimVector).
const FormPresentation& quiver_a();
/// The quiver of A' on 1, 2, 3, 4, 2'', 3'', 4'.
const FormPresentation& quiver_a_prime();

/// Throws std::invalid_argument when v has the wrong length.
std::int64_t tits(const FormPresentation& p, std::span<const std::int64_t> v);

struct E7Root {
    std::int64_t a = 0, b = 0, g = 0, c = 0, d = 0, dp = 0, bpp = 0;

    constexpr auto operator<=>(const E7Root&) const = default;
    std::array<std::int64_t, 7> coords() const { return {a, b, g, c, d, dp, bpp}; }
    static E7Root from_coords(const std::array<std::int64_t, 7>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5], v[6]}; }
    std::string to_string() const;
};

/// Closure of the simple roots under simple reflections; sorted.
std::vector<E7Root> positive_roots_e7();
/// Applies the simple reflection at vertex i (E7 vertex order).
std::array<std::int64_t, 7> reflect_e7(const std::array<std::int64_t, 7>& v, std::size_t i);

using APrimeVector = std::array<std::int64_t, 7>;
/// (a, b, c, d, b'', c'', d') on (1, 2, 3, 4, 2'', 3'', 4') with c'' = b'' + c - g.
APrimeVector root_to_aprime(const E7Root& r);
/// The same vector on the quiver of A, zero at 5 and 3bar.
ADimVector extend_aprime(const APrimeVector& v);
/// (a + 2b'' + c - g, b - 2b'' + g + d', d - d'); entries may be negative.
DimensionType root_type(const E7Root& r);

/// Nonzero nonnegative types with x+y+z <= max_sum of the form
/// +-root_type + k(2,2,2), ray_type + m(2,2,2) (m >= 0), or k(2,2,2) (k >= 1).
std::vector<DimensionType> generated_type_set(std::int64_t max_sum);

/// Nonnegative A-vectors over `target` with d_3bar <= d_3, entries bounded by
/// x+y+z and form value 0 or 1, sorted. Throws std::invalid_argument for a
/// negative target and std::length_error above (12,12,12).
std::vector<ADimVector> fiber_scan(const DimensionType& target);

}  // namespace invsub
