#include "invsub/classify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "datasets.hpp"
#include "invsub/rootsys.hpp"

namespace invsub {

namespace {

constexpr std::array<DimensionType, 3> kExcludedBase = {{{1, 3, 1}, {1, 4, 1}, {3, 1, 3}}};
constexpr std::array<DimensionType, 13> kExceptionalBase = {{{4, 0, 0},
                                                             {0, 4, 0},
                                                             {0, 0, 4},
                                                             {4, 2, 0},
                                                             {2, 4, 0},
                                                             {4, 0, 2},
                                                             {2, 0, 4},
                                                             {0, 4, 2},
                                                             {0, 2, 4},
                                                             {5, 4, 1},
                                                             {5, 2, 1},
                                                             {1, 4, 5},
                                                             {1, 2, 5}}};

// t in base + N(2,2,2)
bool on_forward_ray(const DimensionType& t, const DimensionType& base) {
    const auto dx = t.x - base.x;
    return dx >= 0 && dx % 2 == 0 && t.y - base.y == dx && t.z - base.z == dx;
}

template <std::size_t N>
bool on_any_ray(const DimensionType& t, const std::array<DimensionType, N>& bases) {
    return std::any_of(bases.begin(), bases.end(), [&](const auto& b) { return on_forward_ray(t, b); });
}

std::vector<DimensionType> box(std::int64_t max_sum) {
    std::vector<DimensionType> out;
    for (std::int64_t x = 0; x <= max_sum; ++x)
        for (std::int64_t y = 0; x + y <= max_sum; ++y)
            for (std::int64_t z = 0; x + y + z <= max_sum; ++z) out.push_back({x, y, z});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::int64_t>> parse_rows(const char* text, std::size_t width) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::int64_t> row;
        std::int64_t v;
        while (fields >> v) row.push_back(v);
        if (row.empty()) continue;
        if (row.size() != width) throw std::logic_error("malformed embedded dataset line: " + line);
        rows.push_back(std::move(row));
    }
    return rows;
}

// splitmix64, to derive independent per-sample seeds from one user seed
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

bool is_realizable(const DimensionType& t) {
    if (!t.is_nonnegative()) throw std::invalid_argument("is_realizable: negative component in " + t.to_tuple_string());
    if (t.is_zero()) return false;
    if (t.spread() <= 3 && !on_any_ray(t, kExcludedBase)) return true;
    return on_any_ray(t, kExceptionalBase);
}

std::vector<DimensionType> realizable_set(std::int64_t max_sum) {
    std::vector<DimensionType> out;
    for (const auto& t : box(max_sum))
        if (is_realizable(t)) out.push_back(t);
    return out;
}

std::vector<DimensionType> holes(std::int64_t max_sum) {
    std::vector<DimensionType> out;
    for (const auto& t : box(max_sum))
        if (!t.is_zero() && t.spread() <= 4 && !is_realizable(t)) out.push_back(t);
    return out;
}

bool is_connected(const std::vector<DimensionType>& points) {
    if (points.empty()) return true;
    const std::set<DimensionType> all(points.begin(), points.end());
    std::set<DimensionType> seen{points.front()};
    std::vector<DimensionType> stack{points.front()};
    static constexpr std::array<DimensionType, 6> kSteps = {
        {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};
    while (!stack.empty()) {
        const DimensionType t = stack.back();
        stack.pop_back();
        for (const auto& s : kSteps) {
            const DimensionType u = t + s;
            if (all.count(u) && seen.insert(u).second) stack.push_back(u);
        }
    }
    return seen.size() == all.size();
}

bool region_connected(std::int64_t max_sum) {
    if (max_sum < 1) throw std::invalid_argument("region_connected: max_sum must be positive");
    return is_connected(realizable_set(max_sum));
}

RegionReport verify_theorem(std::int64_t max_sum) {
    if (max_sum < 1) throw std::invalid_argument("verify_theorem: max_sum must be positive");
    RegionReport r;
    r.max_sum = max_sum;
    r.realizable = realizable_set(max_sum);
    r.holes = holes(max_sum);
    r.connected = is_connected(r.realizable);
    const auto generated = generated_type_set(max_sum);
    std::set_difference(r.realizable.begin(), r.realizable.end(), generated.begin(), generated.end(),
                        std::back_inserter(r.predicate_only));
    std::set_difference(generated.begin(), generated.end(), r.realizable.begin(), r.realizable.end(),
                        std::back_inserter(r.generated_only));
    return r;
}

std::pair<std::int64_t, std::int64_t> hex_project(const DimensionType& t) {
    return {checked_mul(2, checked_sub(t.x, t.z)), checked_sub(checked_mul(2, t.y), checked_add(t.x, t.z))};
}

std::vector<DimensionType> finite_types(int n) {
    const char* text = nullptr;
    switch (n) {
        case 1: text = datasets::finite_types_n1; break;
        case 2: text = datasets::finite_types_n2; break;
        case 3: text = datasets::finite_types_n3; break;
        default: throw std::invalid_argument("finite_types: n must be 1, 2 or 3");
    }
    std::vector<DimensionType> out;
    for (const auto& row : parse_rows(text, 3)) out.push_back({row[0], row[1], row[2]});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<S15Record> s15_records() {
    std::vector<S15Record> out;
    for (const auto& row : parse_rows(datasets::s15_records, 3)) out.push_back({row[0], row[1], static_cast<int>(row[2])});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> s15_types() {
    std::set<std::pair<std::int64_t, std::int64_t>> pts;
    for (const auto& r : s15_records()) pts.emplace(r.x, r.y);
    return {pts.begin(), pts.end()};
}

std::vector<Mat> all_subspaces(PrimeField field, std::size_t d) {
    std::vector<Mat> out;
    const Residue p = field.p();
    // Enumerate reduced echelon forms: choose pivot columns, then fill every
    // free cell (non-pivot column to the right of the row's pivot).
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < d; ++c)
            if (mask >> c & 1) pivots.push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::size_t c = pivots[r] + 1; c < d; ++c)
                if (!(mask >> c & 1)) free_cells.emplace_back(r, c);
        std::vector<Residue> digits(free_cells.size(), 0);
        for (;;) {
            Mat m(field, pivots.size(), d);
            for (std::size_t r = 0; r < pivots.size(); ++r) m.set_residue(r, pivots[r], 1);
            for (std::size_t k = 0; k < free_cells.size(); ++k)
                m.set_residue(free_cells[k].first, free_cells[k].second, digits[k]);
            out.push_back(std::move(m));
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
            if (k == digits.size()) break;
        }
    }
    return out;
}

std::vector<std::pair<Mat, Mat>> invariant_flags(const Mat& t) {
    const Mat tt = transpose(t);
    std::vector<Mat> invariant;
    for (auto& u : all_subspaces(t.field(), t.rows()))
        if (row_space_contains(u, u * tt)) invariant.push_back(std::move(u));
    std::vector<std::pair<Mat, Mat>> out;
    for (const auto& u2 : invariant)
        for (const auto& u1 : invariant)
            if (u1.rows() <= u2.rows() && row_space_contains(u2, u1)) out.emplace_back(u1, u2);
    return out;
}

std::vector<DimensionType> SearchResult::types() const {
    std::vector<DimensionType> out;
    for (const auto& [t, w] : witnesses) out.push_back(t);
    return out;
}

namespace {

// Records the types of certified indecomposable leaves. Leaves of a type
// already seen are skipped without certification; unseen types are split
// fully before being recorded.
void harvest(const System& s, std::uint64_t seed, bool exact_only, SearchResult& result) {
    DecomposeOptions quick;
    quick.seed = seed;
    if (!exact_only) {
        quick.max_trials = 8;
        quick.exhaustive_certify = false;
        quick.min_poly_splits = false;
    }
    const Decomposition d = decompose(s, quick);
    for (const auto& part : d.parts) {
        const DimensionType t = dim_type(part);
        if (result.witnesses.count(t)) continue;
        if (exact_only || d.certified) {
            result.witnesses.emplace(t, part);
            continue;
        }
        const Decomposition full = decompose(part, seed ^ 0x5bd1e995ULL);
        if (!full.certified) {
            ++result.uncertified_leaves;
            continue;
        }
        for (const auto& leaf : full.parts) result.witnesses.emplace(dim_type(leaf), leaf);
    }
}

}  // namespace

SearchResult search_types(const SearchOptions& opts) {
    if (opts.n == 0) throw std::invalid_argument("search_types: n must be at least 1");
    if (opts.max_dim > 12) throw std::invalid_argument("search_types: max_dim above the budget of 12");
    if (opts.exhaustive_dim > 4) throw std::invalid_argument("search_types: exhaustive_dim above the budget of 4");
    const PrimeField field(opts.field);
    SearchResult result;

    // Every system with small dim V is isomorphic to one with T in Jordan form.
    for (std::size_t d = 1; d <= opts.exhaustive_dim; ++d) {
        for (const auto& shape : partitions(d, opts.n)) {
            const Mat t = jordan_matrix(field, shape);
            for (const auto& [u1, u2] : invariant_flags(t)) {
                ++result.exhaustive_systems;
                harvest(System(field, opts.n, t, u1, u2), result.exhaustive_systems, true, result);
            }
        }
    }

    std::set<DimensionType> targets(opts.sample_types.begin(), opts.sample_types.end());
    if (opts.samples > 0) {
        for (const auto& t : box(opts.max_dim))
            if (!t.is_zero()) targets.insert(t);
    }
    for (const auto& t : targets) {
        const std::uint64_t type_seed = mix(opts.seed ^ mix(static_cast<std::uint64_t>(t.x) << 40 ^
                                                            static_cast<std::uint64_t>(t.y) << 20 ^
                                                            static_cast<std::uint64_t>(t.z)));
        for (std::size_t i = 0; i < opts.samples; ++i) {
            const std::uint64_t s = mix(type_seed + i);
            System sys = System::zero(field, opts.n);
            try {
                sys = random_system(t, opts.n, field, s, false);
            } catch (const std::runtime_error&) {
                result.unreachable.push_back(t);
                break;
            }
            ++result.sampled_systems;
            harvest(sys, s, false, result);
        }
    }
    return result;
}

}  // namespace invsub
