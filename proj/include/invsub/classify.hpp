// Which dimension types carry an indecomposable system: the closed-form
// predicate for S(4), region analysis, frozen tables for n <= 3 and S1(5),
// and a constructive search engine over explicit systems.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "invsub/dimtype.hpp"
#include "invsub/systems.hpp"

namespace invsub {

/// Throws std::invalid_argument on a negative component.
bool is_realizable(const DimensionType& t);

/// Realizable types with x+y+z <= max_sum, sorted.
std::vector<DimensionType> realizable_set(std::int64_t max_sum);

/// Nonzero nonnegative points with pairwise differences <= 4 that are not
/// realizable, x+y+z <= max_sum.
std::vector<DimensionType> holes(std::int64_t max_sum);

/// Connectivity of the realizable points below the bound under L1 steps of 1.
bool region_connected(std::int64_t max_sum);
bool is_connected(const std::vector<DimensionType>& points);

struct RegionReport {
    std::int64_t max_sum = 0;
    std::vector<DimensionType> realizable;
    std::vector<DimensionType> holes;
    bool connected = false;
    /// Predicate says yes, root-theoretic generation does not, and vice versa.
    std::vector<DimensionType> predicate_only;
    std::vector<DimensionType> generated_only;

    bool consistent() const { return predicate_only.empty() && generated_only.empty(); }
};

RegionReport verify_theorem(std::int64_t max_sum);

/// (2(x - z), 2y - x - z), the projection along (1,1,1) used for diagrams.
std::pair<std::int64_t, std::int64_t> hex_project(const DimensionType& t);

/// Frozen indecomposable types of S(n), n = 1, 2, 3.
std::vector<DimensionType> finite_types(int n);

struct S15Record {
    std::int64_t x = 0;  // dim U
    std::int64_t y = 0;  // dim V/U
    int blocks = 0;      // Jordan blocks of T

    auto operator<=>(const S15Record&) const = default;
};

/// One record per indecomposable of S1(5), sorted; several records may share a point.
std::vector<S15Record> s15_records();
/// The distinct (x, y) points.
std::vector<std::pair<std::int64_t, std::int64_t>> s15_types();

struct SearchOptions {
    unsigned n = 1;
    std::uint32_t field = 2;
    /// Random sampling covers types with x+y+z <= max_dim.
    unsigned max_dim = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Every system with dim V <= exhaustive_dim is enumerated.
    unsigned exhaustive_dim = 3;
    /// Optional extra types to sample, on top of the box above.
    std::vector<DimensionType> sample_types;
};

struct SearchResult {
    /// One certified indecomposable witness per type found.
    std::map<DimensionType, System> witnesses;
    std::size_t exhaustive_systems = 0;
    std::size_t sampled_systems = 0;
    /// Leaves whose indecomposability could not be certified (types not recorded).
    std::size_t uncertified_leaves = 0;
    /// Sampled types the generator could not reach within its budget.
    std::vector<DimensionType> unreachable;

    std::vector<DimensionType> types() const;
};

/// Throws std::invalid_argument for n = 0, max_dim > 12 or exhaustive_dim > 4.
SearchResult search_types(const SearchOptions& opts);

/// Every T-invariant flag U1 <= U2 for the given operator, as canonical bases.
std::vector<std::pair<Mat, Mat>> invariant_flags(const Mat& t);
/// All subspaces of F_p^d (canonical bases).
std::vector<Mat> all_subspaces(PrimeField field, std::size_t d);

}  // namespace invsub
