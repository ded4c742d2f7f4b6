#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "invsub/classify.hpp"
#include "invsub/rootsys.hpp"

using namespace invsub;

namespace {

using V7 = std::array<std::int64_t, 7>;

// Tree form of E7 written out by hand from the edge list, independent of
// FormPresentation: vertices a b g c d d' b''.
std::int64_t e7_form(const V7& v) {
    const auto [a, b, g, c, d, dp, bpp] = v;
    return a * a + b * b + g * g + c * c + d * d + dp * dp + bpp * bpp - a * b - b * g - g * c - c * d - d * dp -
           g * bpp;
}

// Oracle: all nonzero vectors with entries 0..6 and form value 1.
std::set<V7> brute_force_roots() {
    std::set<V7> out;
    V7 v{};
    for (v[0] = 0; v[0] <= 6; ++v[0])
        for (v[1] = 0; v[1] <= 6; ++v[1])
            for (v[2] = 0; v[2] <= 6; ++v[2])
                for (v[3] = 0; v[3] <= 6; ++v[3])
                    for (v[4] = 0; v[4] <= 6; ++v[4])
                        for (v[5] = 0; v[5] <= 6; ++v[5])
                            for (v[6] = 0; v[6] <= 6; ++v[6])
                                if (e7_form(v) == 1) out.insert(v);
    return out;
}

E7Root simple_root(std::size_t i) {
    V7 v{};
    v[i] = 1;
    return E7Root::from_coords(v);
}

}  // namespace

TEST(Tits, Presets) {
    EXPECT_EQ(tits(quiver_a(), radical_h_a()), 0);
    EXPECT_EQ(tits(quiver_a(), radical_h1_a()), 0);
    const V7 a{1, 0, 0, 0, 0, 0, 0};
    EXPECT_EQ(tits(e7_diagram(), a), 1);
    EXPECT_EQ(e7_diagram().vertices.size(), 7u);
    EXPECT_EQ(quiver_a().arrows.size(), 9u);
    EXPECT_EQ(quiver_a().relations.size(), 4u);
    EXPECT_EQ(quiver_a_prime().vertices.size(), 7u);
}

TEST(Tits, LengthMismatchThrows) {
    const std::vector<std::int64_t> v(3, 1);
    EXPECT_THROW(tits(e7_diagram(), v), std::invalid_argument);
}

TEST(FormPresentation, UnknownLabelThrows) {
    EXPECT_THROW(FormPresentation::from_labels({"x", "y"}, {{"x", "z"}}, {}), std::invalid_argument);
    EXPECT_THROW(e7_diagram().index_of("e"), std::invalid_argument);
    EXPECT_EQ(quiver_a().index_of("3bar"), static_cast<std::size_t>(a3bar));
}

TEST(FormPresentation, BilinearMatrixReproducesForm) {
    const auto& p = quiver_a();
    const auto b = p.bilinear_matrix();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> e(-5, 5);
    for (int i = 0; i < 200; ++i) {
        ADimVector v;
        for (auto& x : v) x = e(rng);
        std::int64_t twice = 0;
        for (std::size_t r = 0; r < v.size(); ++r)
            for (std::size_t c = 0; c < v.size(); ++c) twice += v[r] * b[r][c] * v[c];
        EXPECT_EQ(twice, 2 * tits(p, v));
    }
}

TEST(Tits, RadicalInvariance) {
    const auto& qa = quiver_a();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> e(-5, 5);
    for (int i = 0; i < 500; ++i) {
        ADimVector d, dh, dh1;
        for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = e(rng);
            dh[k] = d[k] + radical_h_a()[k];
            dh1[k] = d[k] + radical_h1_a()[k];
        }
        EXPECT_EQ(tits(qa, dh), tits(qa, d));
        EXPECT_EQ(tits(qa, dh1), tits(qa, d));
    }
}

TEST(E7, SixtyThreeRootsMatchBruteForce) {
    const auto roots = positive_roots_e7();
    ASSERT_EQ(roots.size(), 63u);
    EXPECT_TRUE(std::is_sorted(roots.begin(), roots.end()));
    std::set<V7> ours;
    for (const auto& r : roots) {
        EXPECT_EQ(tits(e7_diagram(), r.coords()), 1);
        ours.insert(r.coords());
    }
    EXPECT_EQ(ours, brute_force_roots());
}

TEST(E7, ReflectionsPermuteRoots) {
    std::set<V7> plus_minus;
    for (const auto& r : positive_roots_e7()) {
        auto v = r.coords();
        plus_minus.insert(v);
        for (auto& x : v) x = -x;
        plus_minus.insert(v);
    }
    for (const auto& v : plus_minus)
        for (std::size_t i = 0; i < 7; ++i) EXPECT_TRUE(plus_minus.count(reflect_e7(v, i))) << i;
    // s_i is an involution sending e_i to -e_i.
    const V7 e3{0, 0, 0, 1, 0, 0, 0};
    EXPECT_EQ(reflect_e7(e3, 3), (V7{0, 0, 0, -1, 0, 0, 0}));
    EXPECT_EQ(reflect_e7(reflect_e7(e3, 2), 2), e3);
}

TEST(E7, HighestRootDominatesAll) {
    const auto roots = positive_roots_e7();
    auto dominates = [](const E7Root& x, const E7Root& y) {
        const auto a = x.coords(), b = y.coords();
        for (std::size_t i = 0; i < 7; ++i)
            if (a[i] < b[i]) return false;
        return true;
    };
    std::vector<E7Root> maximal;
    for (const auto& r : roots)
        if (std::all_of(roots.begin(), roots.end(), [&](const E7Root& s) { return r == s || !dominates(s, r); }))
            maximal.push_back(r);
    ASSERT_EQ(maximal.size(), 1u);
    for (const auto& r : roots) EXPECT_TRUE(dominates(maximal.front(), r));
}

TEST(E7, RootStringLayout) {
    EXPECT_EQ(simple_root(6).to_string(), "(1; 0 0 0 0 0 0)");
    EXPECT_EQ(simple_root(0).to_string(), "(0; 1 0 0 0 0 0)");
}

TEST(RootToAPrime, SimpleRoots) {
    EXPECT_EQ(root_to_aprime(simple_root(0)), (APrimeVector{1, 0, 0, 0, 0, 0, 0}));
    const auto g = root_to_aprime(simple_root(2));
    EXPECT_EQ(g, (APrimeVector{0, 0, 0, 0, 0, -1, 0}));
    EXPECT_EQ(tits(quiver_a_prime(), g), 1);
    EXPECT_EQ(root_type(simple_root(0)), (DimensionType{1, 0, 0}));
    EXPECT_EQ(root_type(simple_root(6)), (DimensionType{2, -2, 0}));
    EXPECT_EQ(root_type(simple_root(5)), (DimensionType{0, 1, -1}));
}

TEST(RootToAPrime, BijectionOntoRootsOfAPrime) {
    std::set<APrimeVector> images;
    for (const auto& r : positive_roots_e7()) {
        const auto v = root_to_aprime(r);
        EXPECT_EQ(tits(quiver_a_prime(), v), 1) << r.to_string();
        images.insert(v);
        const auto ext = extend_aprime(v);
        EXPECT_EQ(ext[a5], 0);
        EXPECT_EQ(ext[a3bar], 0);
        EXPECT_EQ(root_type(r), a_dim_type(ext)) << r.to_string();
    }
    EXPECT_EQ(images.size(), 63u);
}

TEST(RootTypes, LandInMarkedRegion) {
    for (const auto& r : positive_roots_e7()) {
        for (const DimensionType t : {root_type(r), -root_type(r)}) {
            DimensionType u = t;
            while (!u.is_nonnegative() || u.is_zero()) u = u + kAxis;
            EXPECT_TRUE(is_realizable(u)) << r.to_string() << " -> " << u;
        }
    }
}

TEST(GeneratedTypes, Landmarks) {
    const auto g = generated_type_set(20);
    auto has = [&](DimensionType t) { return std::binary_search(g.begin(), g.end(), t); };
    EXPECT_TRUE(has({2, 2, 2}));
    EXPECT_TRUE(has({6, 2, 2}));
    EXPECT_FALSE(has({3, 1, 3}));
    EXPECT_FALSE(has({1, 3, 1}));
    EXPECT_FALSE(has({0, 0, 0}));
    for (const auto& t : g) {
        EXPECT_TRUE(t.is_nonnegative());
        EXPECT_LE(t.total(), 20);
        EXPECT_TRUE(has(t.reversed())) << t;
    }
    EXPECT_THROW(generated_type_set(0), std::invalid_argument);
}

TEST(FiberScan, SmallTargets) {
    const auto unit = fiber_scan({1, 0, 0});
    ADimVector e1{};
    e1[a1] = 1;
    EXPECT_TRUE(std::binary_search(unit.begin(), unit.end(), e1));

    const auto axis = fiber_scan(kAxis);
    EXPECT_TRUE(std::binary_search(axis.begin(), axis.end(), radical_h_a()));
    EXPECT_TRUE(std::binary_search(axis.begin(), axis.end(), radical_h1_a()));
    for (const auto& d : axis) {
        EXPECT_EQ(a_dim_type(d), kAxis);
        const auto q = tits(quiver_a(), d);
        EXPECT_TRUE(q == 0 || q == 1);
    }
}

TEST(FiberScan, HoleTarget) {
    // Recorded outcome: no nonnegative A-vector over (3,1,3) has form value 0 or 1.
    EXPECT_TRUE(fiber_scan({3, 1, 3}).empty());
}

TEST(FiberScan, Errors) {
    EXPECT_THROW(fiber_scan({-1, 0, 0}), std::invalid_argument);
    EXPECT_THROW(fiber_scan({13, 0, 0}), std::length_error);
    EXPECT_TRUE(fiber_scan({0, 0, 0}).empty());
}
