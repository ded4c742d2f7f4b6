// Acceptance run: one PASS/FAIL line per numbered criterion. With no
// arguments all ten run in order; --criterion N runs a single one. The exit
// status is nonzero when any selected criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invsub/classify.hpp"
#include "invsub/covering.hpp"
#include "invsub/rootsys.hpp"
#include "invsub/systems.hpp"

using namespace invsub;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string join(const std::vector<DimensionType>& ts) {
    std::string s;
    for (const auto& t : ts) s += (s.empty() ? "" : " ") + t.to_tuple_string();
    return s;
}

Verdict roots() {
    Verdict v;
    const auto rs = positive_roots_e7();
    v.require(rs.size() == 63, "got " + std::to_string(rs.size()) + " roots");
    std::set<std::array<std::int64_t, 7>> pm;
    for (const auto& r : rs) {
        v.require(tits(e7_diagram(), r.coords()) == 1, "q != 1 at " + r.to_string());
        auto c = r.coords();
        pm.insert(c);
        for (auto& x : c) x = -x;
        pm.insert(c);
    }
    for (const auto& c : pm)
        for (std::size_t i = 0; i < 7; ++i)
            if (!pm.count(reflect_e7(c, i))) v.require(false, "reflection leaves the root set");
    v.detail = v.pass ? "63 roots, q = 1, closed under s_1..s_7" : v.detail;
    return v;
}

Verdict radicals() {
    Verdict v;
    const auto& qa = quiver_a();
    v.require(tits(qa, radical_h_a()) == 0, "chi(h) != 0");
    v.require(tits(qa, radical_h1_a()) == 0, "chi(h[1]) != 0");
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> e(-6, 6);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        ADimVector d, dh;
        for (std::size_t k = 0; k < d.size(); ++k) {
            d[k] = e(rng);
            dh[k] = d[k] + radical_h_a()[k];
        }
        if (tits(qa, dh) != tits(qa, d)) ++bad;
    }
    v.require(bad == 0, std::to_string(bad) + "/500 random d changed under +h");
    if (v.pass) v.detail = "chi(h) = chi(h[1]) = 0, 500/500 random shifts invariant";
    return v;
}

Verdict projections() {
    Verdict v;
    v.require(project(radical_h()) == kAxis, "project(h) = " + project(radical_h()).to_tuple_string());
    v.require(project(radical_h1()) == kAxis, "project(h[1]) = " + project(radical_h1()).to_tuple_string());
    const std::vector<std::vector<DimensionType>> printed = {
        {{4, 0, 0}, {3, 0, 0}, {3, 0, 3}, {3, 1, 2}, {6, 2, 2}},
        {{0, 4, 0}, {1, 3, 0}, {2, 5, 0}, {2, 5, 1}, {2, 6, 2}},
        {{0, 0, 4}, {0, 1, 3}, {3, 2, 3}, {2, 2, 3}, {2, 2, 6}},
    };
    for (int ray = 1; ray <= 3; ++ray) {
        std::vector<DimensionType> got;
        for (int k = 0; k <= 4; ++k) got.push_back(ray_type(ray, k));
        v.require(got == printed[ray - 1],
                  "ray " + std::to_string(ray) + " computed " + join(got) + " vs printed " + join(printed[ray - 1]));
        for (int k = 0; k <= 16; ++k)
            v.require(ray_type(ray, k + 4) == ray_type(ray, k) + kAxis,
                      "ray " + std::to_string(ray) + " not periodic at step " + std::to_string(k));
    }
    if (v.pass) v.detail = "project(h) = project(h[1]) = (2,2,2), printed ray triples, periodic to k = 16";
    return v;
}

Verdict sweep() {
    Verdict v;
    const RegionReport r = verify_theorem(40);
    v.require(r.predicate_only.empty(), "predicate only: " + join(r.predicate_only));
    v.require(r.generated_only.empty(), "generated only: " + join(r.generated_only));
    if (v.pass) v.detail = std::to_string(r.realizable.size()) + " types up to sum 40, empty symmetric difference";
    return v;
}

Verdict cheese() {
    Verdict v;
    const DimensionType units[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (std::int64_t k = 0; k <= 10; ++k) {
        const DimensionType hole = DimensionType{3, 1, 3} + k * kAxis;
        v.require(!is_realizable(hole), hole.to_tuple_string() + " realizable");
        for (const auto& u : units) {
            v.require(is_realizable(hole + u), (hole + u).to_tuple_string() + " not realizable");
            v.require(is_realizable(hole - u), (hole - u).to_tuple_string() + " not realizable");
        }
        for (const DimensionType base : {DimensionType{1, 3, 1}, DimensionType{1, 4, 1}})
            v.require(!is_realizable(base + k * kAxis), (base + k * kAxis).to_tuple_string() + " realizable");
    }
    if (v.pass) v.detail = "(3,1,3)+k(2,2,2), k <= 10, are holes; (1,3,1), (1,4,1) families absent";
    return v;
}

Verdict topology() {
    Verdict v;
    v.require(region_connected(40), "realizable set up to sum 40 is disconnected");
    if (v.pass) v.detail = "realizable set up to sum 40 connected";
    return v;
}

Verdict finite_cases() {
    Verdict v;
    SearchOptions o1;
    o1.n = 1;
    o1.exhaustive_dim = 3;
    const auto t1 = search_types(o1).types();
    v.require(t1.size() == 3, "n=1 gave " + std::to_string(t1.size()) + " types");

    SearchOptions o2;
    o2.n = 2;
    o2.exhaustive_dim = 4;
    const auto t2 = search_types(o2).types();
    v.require(t2.size() == 9, "n=2 gave " + std::to_string(t2.size()) + " types");

    SearchOptions o3;
    o3.n = 3;
    o3.exhaustive_dim = 3;
    o3.max_dim = 6;
    o3.samples = 100000;
    o3.seed = 7;
    const SearchResult r3 = search_types(o3);
    const auto t3 = r3.types();
    v.require(t3.size() == 27, "n=3 gave " + std::to_string(t3.size()) + " types");
    v.require(t3 == finite_types(3), "n=3 types differ from the frozen table");
    for (const DimensionType missing : {DimensionType{2, 1, 2}, DimensionType{1, 2, 1}})
        v.require(!std::binary_search(t3.begin(), t3.end(), missing), missing.to_tuple_string() + " found");
    v.require(r3.unreachable.empty(), "unreachable sample types: " + join(r3.unreachable));
    if (v.pass)
        v.detail = "3, 9, 27 types; n=3 used " + std::to_string(r3.sampled_systems) + " samples, " +
                   std::to_string(r3.uncertified_leaves) + " uncertified leaves";
    return v;
}

Verdict decomposition() {
    Verdict v;
    const PrimeField f2(2);
    std::vector<System> pickets;
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t b = 0; b <= m; ++b)
            for (std::size_t a = 0; a <= b; ++a) pickets.push_back(System::jordan_block(f2, 3, m, a, b));
    std::mt19937_64 rng(8);
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t k = 2 + rng() % 3;
        std::vector<System> chosen;
        std::vector<DimensionType> want;
        for (std::size_t j = 0; j < k; ++j) {
            chosen.push_back(pickets[rng() % pickets.size()]);
            want.push_back(dim_type(chosen.back()));
        }
        std::sort(want.begin(), want.end());
        const System sum = direct_sum(chosen, f2, 3);
        const System s = base_change(sum, random_invertible(f2, sum.dim(), rng));
        const Decomposition d = decompose(s, rng());
        std::vector<DimensionType> got;
        for (const auto& p : d.parts) got.push_back(dim_type(p));
        std::sort(got.begin(), got.end());
        if (d.certified && got == want) ++ok;
    }
    v.require(ok == 1000, std::to_string(ok) + "/1000 exact and certified");
    if (v.pass) v.detail = "1000/1000 exact multisets, certified";
    return v;
}

Verdict duality() {
    Verdict v;
    std::mt19937_64 rng(9);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const PrimeField f(i % 2 == 0 ? 2 : 3);
        const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        DimensionType t;
        do {
            t = {static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3),
                 static_cast<std::int64_t>(rng() % 3)};
        } while (t.is_zero());
        const System s = random_system(t, n, f, rng());
        const System r = dualize(s);
        if (!r.valid() || dim_type(r) != t.reversed() || !is_isomorphic(dualize(r), s, rng())) ++bad;
    }
    v.require(bad == 0, std::to_string(bad) + "/500 systems broke duality");
    for (std::int64_t x = 0; x <= 40; ++x)
        for (std::int64_t y = 0; x + y <= 40; ++y)
            for (std::int64_t z = 0; x + y + z <= 40; ++z) {
                const DimensionType t{x, y, z};
                if (is_realizable(t) != is_realizable(t.reversed())) v.require(false, t.to_tuple_string() + " asymmetric");
            }
    if (v.pass) v.detail = "500/500 systems, predicate symmetric up to sum 40";
    return v;
}

Verdict s15() {
    Verdict v;
    const auto records = s15_records();
    v.require(records.size() == 50, std::to_string(records.size()) + " records");
    const auto pts = s15_types();
    v.require(std::find(pts.begin(), pts.end(), std::pair<std::int64_t, std::int64_t>{5, 5}) == pts.end(),
              "(5,5) present");
    if (v.pass) v.detail = "50 indecomposables on " + std::to_string(pts.size()) + " points, (5,5) absent";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance checks"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Verdict()>> checks = {roots,    radicals,      projections, sweep,   cheese,
                                                          topology, finite_cases, decomposition, duality, s15};
    bool all = true;
    for (int i = 1; i <= 10; ++i) {
        if (only != 0 && only != i) continue;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = checks[i - 1]();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s (%.1f s) %s\n", i, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
