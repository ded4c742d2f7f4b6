// Dimension types (x, y, z) = (dim U1, dim U2/U1, dim V/U2) and checked
// integer helpers shared by the combinatorial modules.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace invsub {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// A class in the Grothendieck group of S, written in the basis of the three
/// simples. Types of actual systems are nonnegative; root-theoretic
/// intermediates may carry negative entries.
struct DimensionType {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    constexpr auto operator<=>(const DimensionType&) const = default;

    bool is_nonnegative() const noexcept { return x >= 0 && y >= 0 && z >= 0; }
    bool is_zero() const noexcept { return x == 0 && y == 0 && z == 0; }
    std::int64_t total() const { return checked_add(checked_add(x, y), z); }
    std::int64_t min_entry() const noexcept { return std::min(x, std::min(y, z)); }
    /// max(|x-y|, |y-z|, |z-x|)
    std::int64_t spread() const noexcept;
    /// (z, y, x), the effect of the duality on types.
    DimensionType reversed() const noexcept { return {z, y, x}; }

    /// "x y z"
    std::string to_string() const;
    /// "(x,y,z)"
    std::string to_tuple_string() const;
};

inline DimensionType operator+(const DimensionType& a, const DimensionType& b) {
    return {checked_add(a.x, b.x), checked_add(a.y, b.y), checked_add(a.z, b.z)};
}

inline DimensionType operator-(const DimensionType& a, const DimensionType& b) {
    return {checked_sub(a.x, b.x), checked_sub(a.y, b.y), checked_sub(a.z, b.z)};
}

inline DimensionType operator-(const DimensionType& a) { return DimensionType{} - a; }

inline DimensionType operator*(std::int64_t k, const DimensionType& a) {
    return {checked_mul(k, a.x), checked_mul(k, a.y), checked_mul(k, a.z)};
}

/// The axis (2,2,2) of the cylinder containing all types of S(4).
inline constexpr DimensionType kAxis{2, 2, 2};

inline std::int64_t DimensionType::spread() const noexcept {
    auto d = [](std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; };
    return std::max(d(x, y), std::max(d(y, z), d(z, x)));
}

inline std::string DimensionType::to_string() const {
    return std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(z);
}

inline std::string DimensionType::to_tuple_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const DimensionType& t) { return os << t.to_tuple_string(); }

}  // namespace invsub
