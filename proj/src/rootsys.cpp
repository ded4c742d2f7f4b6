#include "invsub/rootsys.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace invsub {

FormPresentation FormPresentation::from_labels(std::vector<std::string> vertices,
                                               const std::vector<std::pair<std::string, std::string>>& arrows,
                                               const std::vector<std::pair<std::string, std::string>>& relations) {
    FormPresentation p;
    p.vertices = std::move(vertices);
    for (const auto& [s, t] : arrows) p.arrows.emplace_back(p.index_of(s), p.index_of(t));
    for (const auto& [s, t] : relations) p.relations.emplace_back(p.index_of(s), p.index_of(t));
    return p;
}

std::size_t FormPresentation::index_of(const std::string& label) const {
    auto it = std::find(vertices.begin(), vertices.end(), label);
    if (it == vertices.end()) throw std::invalid_argument("unknown vertex " + label);
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::vector<std::int64_t>> FormPresentation::bilinear_matrix() const {
    const std::size_t n = vertices.size();
    std::vector<std::vector<std::int64_t>> b(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
    for (auto [s, t] : arrows) {
        b[s][t] -= 1;
        b[t][s] -= 1;
    }
    for (auto [s, t] : relations) {
        b[s][t] += 1;
        b[t][s] += 1;
    }
    return b;
}

const FormPresentation& e7_diagram() {
    static const FormPresentation p = FormPresentation::from_labels(
        {"a", "b", "g", "c", "d", "d'", "b''"},
        {{"a", "b"}, {"b", "g"}, {"g", "c"}, {"c", "d"}, {"d", "d'"}, {"g", "b''"}}, {});
    return p;
}

const FormPresentation& quiver_a() {
    static const FormPresentation p = FormPresentation::from_labels(
        {"1", "2", "3", "4", "5", "2''", "3''", "4'", "3bar"},
        {{"4'", "4"}, {"3''", "3"}, {"2''", "2"}, {"3''", "2''"}, {"5", "4"}, {"4", "3"}, {"3", "2"}, {"2", "1"},
         {"3", "3bar"}},
        {{"3''", "2"}, {"5", "1"}, {"3''", "3bar"}, {"4'", "3bar"}});
    return p;
}

const FormPresentation& quiver_a_prime() {
    static const FormPresentation p = FormPresentation::from_labels(
        {"1", "2", "3", "4", "2''", "3''", "4'"},
        {{"4'", "4"}, {"3''", "3"}, {"2''", "2"}, {"3''", "2''"}, {"4", "3"}, {"3", "2"}, {"2", "1"}},
        {{"3''", "2"}});
    return p;
}

std::int64_t tits(const FormPresentation& p, std::span<const std::int64_t> v) {
    if (v.size() != p.vertices.size()) throw std::invalid_argument("tits: vector length does not match the quiver");
    std::int64_t q = 0;
    for (auto x : v) q = checked_add(q, checked_mul(x, x));
    for (auto [s, t] : p.arrows) q = checked_sub(q, checked_mul(v[s], v[t]));
    for (auto [s, t] : p.relations) q = checked_add(q, checked_mul(v[s], v[t]));
    return q;
}

std::string E7Root::to_string() const {
    // The diagram layout used in print: b'' above g, then the long arm.
    return "(" + std::to_string(bpp) + "; " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(g) +
           " " + std::to_string(c) + " " + std::to_string(d) + " " + std::to_string(dp) + ")";
}

std::array<std::int64_t, 7> reflect_e7(const std::array<std::int64_t, 7>& v, std::size_t i) {
    static const auto b = e7_diagram().bilinear_matrix();
    std::int64_t bv = 0;
    for (std::size_t j = 0; j < 7; ++j) bv += b[i][j] * v[j];
    auto w = v;
    w[i] -= bv;
    return w;
}

std::vector<E7Root> positive_roots_e7() {
    using V = std::array<std::int64_t, 7>;
    std::set<V> roots;
    std::vector<V> frontier;
    for (std::size_t i = 0; i < 7; ++i) {
        V e{};
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<V> next;
        for (const auto& v : frontier) {
            for (std::size_t i = 0; i < 7; ++i) {
                V w = reflect_e7(v, i);
                if (std::any_of(w.begin(), w.end(), [](auto x) { return x < 0; })) continue;
                if (roots.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    std::vector<E7Root> out;
    for (const auto& v : roots) out.push_back(E7Root::from_coords(v));
    std::sort(out.begin(), out.end());
    return out;
}

APrimeVector root_to_aprime(const E7Root& r) {
    const std::int64_t cpp = r.bpp + r.c - r.g;
    return {r.a, r.b, r.c, r.d, r.bpp, cpp, r.dp};
}

ADimVector extend_aprime(const APrimeVector& v) { return {v[0], v[1], v[2], v[3], 0, v[4], v[5], v[6], 0}; }

DimensionType root_type(const E7Root& r) {
    return {r.a + 2 * r.bpp + r.c - r.g, r.b - 2 * r.bpp + r.g + r.dp, r.d - r.dp};
}

std::vector<DimensionType> generated_type_set(std::int64_t max_sum) {
    if (max_sum < 1) throw std::invalid_argument("generated_type_set: max_sum must be positive");
    std::set<DimensionType> out;
    // Every shift t + k(2,2,2) that lands in the nonnegative region below the bound.
    auto add_line = [&](DimensionType t, std::int64_t k_min) {
        // lowest k with all entries >= 0 is -floor(min / 2)
        const std::int64_t m = t.min_entry();
        const std::int64_t floor_half = m >= 0 ? m / 2 : -((1 - m) / 2);
        const std::int64_t k = std::max(k_min, -floor_half);
        for (DimensionType u = t + k * kAxis; u.total() <= max_sum; u = u + kAxis) {
            if (u.is_nonnegative() && !u.is_zero()) out.insert(u);
        }
    };
    constexpr std::int64_t kAnyShift = std::numeric_limits<std::int32_t>::min();
    for (const auto& r : positive_roots_e7()) {
        const DimensionType t = root_type(r);
        add_line(t, kAnyShift);
        add_line(-t, kAnyShift);
    }
    for (int ray = 1; ray <= 3; ++ray)
        for (std::int64_t step = 0; step < 4; ++step) add_line(ray_type(ray, step), 0);
    add_line(kAxis, 0);
    return {out.begin(), out.end()};
}

std::vector<ADimVector> fiber_scan(const DimensionType& target) {
    if (!target.is_nonnegative()) throw std::invalid_argument("fiber_scan: negative target");
    if (target.x > 12 || target.y > 12 || target.z > 12) {
        throw std::length_error("fiber_scan: target exceeds the (12,12,12) enumeration budget");
    }
    const std::int64_t bound = target.total();
    const auto& qa = quiver_a();
    std::vector<ADimVector> out;
    ADimVector d{};
    // x fixes d1 + d2'' + d3''; choosing d3, d3bar, d4' then forces d2, and
    // choosing d4 forces d5.
    for (std::int64_t d1 = 0; d1 <= target.x; ++d1) {
        for (std::int64_t d2pp = 0; d1 + d2pp <= target.x; ++d2pp) {
            const std::int64_t d3pp = target.x - d1 - d2pp;
            for (std::int64_t d3 = 0; d3 <= bound; ++d3) {
                for (std::int64_t d3bar = 0; d3bar <= d3; ++d3bar) {
                    for (std::int64_t d4p = 0; d4p <= bound; ++d4p) {
                        const std::int64_t d2 = target.y - d3 + d3bar - d4p + d2pp + d3pp;
                        if (d2 < 0 || d2 > bound) continue;
                        for (std::int64_t d4 = 0; d4 <= bound; ++d4) {
                            const std::int64_t d5 = target.z - d4 + d4p - d3bar;
                            if (d5 < 0 || d5 > bound) continue;
                            d = {d1, d2, d3, d4, d5, d2pp, d3pp, d4p, d3bar};
                            if (std::all_of(d.begin(), d.end(), [](auto v) { return v == 0; })) continue;
                            const auto q = tits(qa, d);
                            if (q == 0 || q == 1) out.push_back(d);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace invsub
