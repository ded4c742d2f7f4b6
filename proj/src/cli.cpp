#include "invsub/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "invsub/classify.hpp"
#include "invsub/render.hpp"
#include "invsub/rootsys.hpp"
#include "invsub/sysio.hpp"

namespace invsub {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Sink {
    std::ostream& out;
    std::string path;

    // Writes to --out when given, stdout otherwise.
    void emit(const std::string& text) const {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path);
        if (!f || !(f << text)) throw FormatError("cannot write " + path);
    }
};

std::string type_lines(const std::vector<DimensionType>& types) {
    std::string s;
    for (const auto& t : types) s += t.to_string() + "\n";
    return s;
}

int cmd_check(std::int64_t x, std::int64_t y, std::int64_t z, std::ostream& out) {
    const DimensionType t{x, y, z};
    if (!t.is_nonnegative()) throw UsageError("check: components must be nonnegative");
    out << (is_realizable(t) ? "realizable" : "not realizable") << '\n';
    return kExitOk;
}

int cmd_map(std::int64_t max_sum, const std::string& parity, const std::string& format, bool labels,
            const Sink& sink) {
    std::vector<DimensionType> pts;
    for (const auto& t : realizable_set(max_sum)) {
        const bool even = t.min_entry() % 2 == 0;
        if (parity == "all" || (parity == "even") == even) pts.push_back(t);
    }
    if (format == "table") {
        sink.emit(type_lines(pts));
    } else {
        sink.emit(render(hex_diagram_for_types(pts, labels), parse_diagram_format(format)));
    }
    return kExitOk;
}

int cmd_verify(std::int64_t max_sum, std::ostream& out) {
    const RegionReport r = verify_theorem(max_sum);
    out << "max-sum " << r.max_sum << '\n';
    out << "realizable " << r.realizable.size() << '\n';
    out << "holes " << r.holes.size() << '\n';
    out << "connected " << (r.connected ? "yes" : "no") << '\n';
    out << "predicate-only " << r.predicate_only.size() << '\n';
    for (const auto& t : r.predicate_only) out << "  " << t.to_string() << '\n';
    out << "generated-only " << r.generated_only.size() << '\n';
    for (const auto& t : r.generated_only) out << "  " << t.to_string() << '\n';
    out << (r.consistent() ? "consistent" : "INCONSISTENT") << '\n';
    return r.consistent() ? kExitOk : kExitVerification;
}

int cmd_roots(bool with_types, std::ostream& out) {
    for (const auto& r : positive_roots_e7()) {
        out << r.to_string();
        if (with_types) out << ' ' << root_type(r).to_tuple_string();
        out << '\n';
    }
    return kExitOk;
}

int cmd_rays(std::int64_t steps, std::ostream& out) {
    for (int ray = 1; ray <= 3; ++ray) {
        for (std::int64_t k = 0; k < steps; ++k) out << (k ? " " : "") << ray_type(ray, k).to_tuple_string();
        out << '\n';
    }
    return kExitOk;
}

System load_valid(const std::string& path, std::ostream& err) {
    System s = load_system(path);
    if (!s.valid()) {
        for (const auto& v : s.violations()) err << path << ": " << v << '\n';
        throw FormatError(path + ": not a valid system");
    }
    return s.canonicalized();
}

int cmd_decompose(const std::string& path, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    const System s = load_valid(path, err);
    out << "seed " << seed << '\n';
    const Decomposition d = decompose(s, seed);
    DimensionType sum;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto t = dim_type(d.parts[i]);
        sum = sum + t;
        out << "part " << i + 1 << ' ' << t.to_tuple_string() << " dim " << d.parts[i].dim() << '\n';
    }
    out << "total " << sum.to_tuple_string() << '\n';
    out << "certified " << (d.certified ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
    const System s = load_system(path);
    if (s.valid()) {
        out << "valid " << dim_type(s).to_tuple_string() << '\n';
        return kExitOk;
    }
    for (const auto& v : s.violations()) out << v << '\n';
    return kExitInput;
}

int cmd_dualize(const std::string& path, const std::string& target, std::ostream& out, std::ostream& err) {
    const System s = load_valid(path, err);
    const System r = dualize(s);
    save_system(r, target);
    out << dim_type(s).to_tuple_string() << " -> " << dim_type(r).to_tuple_string() << '\n';
    return kExitOk;
}

int cmd_search(const SearchOptions& opts, std::ostream& out) {
    out << "seed " << opts.seed << '\n';
    const SearchResult r = search_types(opts);
    out << "exhaustive-systems " << r.exhaustive_systems << '\n';
    out << "sampled-systems " << r.sampled_systems << '\n';
    out << "uncertified-leaves " << r.uncertified_leaves << '\n';
    for (const auto& t : r.unreachable) out << "unreachable " << t.to_string() << '\n';
    out << "types " << r.witnesses.size() << '\n';
    out << type_lines(r.types());
    return kExitOk;
}

int cmd_s15(const std::string& format, std::ostream& out) {
    const auto records = s15_records();
    if (format == "table") {
        for (const auto& r : records) out << r.x << ' ' << r.y << ' ' << r.blocks << '\n';
        return kExitOk;
    }
    std::map<std::pair<std::int64_t, std::int64_t>, std::string> labels;
    for (const auto& r : records) labels[{r.x, r.y}] += std::to_string(r.blocks);
    Diagram d;
    // x = dim U upwards, y = dim V/U to the right
    d.axes = {{0, 2, "x"}, {2, 0, "y"}};
    for (const auto& [xy, label] : labels) d.points.push_back({xy.second, xy.first, label, false});
    out << render(d, parse_diagram_format(format));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariant subspaces of nilpotent operators: dimension types and decompositions", "invsub"};
    app.require_subcommand(1);

    std::int64_t x = 0, y = 0, z = 0;
    auto* check = app.add_subcommand("check", "Is (x,y,z) the type of an indecomposable in S(4)?");
    check->add_option("x", x)->required();
    check->add_option("y", y)->required();
    check->add_option("z", z)->required();

    std::int64_t max_sum = 0;
    std::string parity = "all", format = "table", out_path;
    bool labels = false;
    auto* map = app.add_subcommand("map", "Realizable types up to a total dimension");
    map->add_option("--max-sum", max_sum)->required()->check(CLI::Range(1, 200));
    map->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "all"}));
    map->add_option("--format", format)->check(CLI::IsMember({"table", "hex", "svg"}));
    map->add_option("--out", out_path);
    map->add_flag("--labels", labels, "Label hex points by min(x,y,z)");

    auto* holes_cmd = app.add_subcommand("holes", "Unrealizable points inside the cylinder");
    holes_cmd->add_option("--max-sum", max_sum)->required()->check(CLI::Range(1, 200));

    auto* verify = app.add_subcommand("verify-theorem", "Compare the predicate with the root-theoretic type set");
    verify->add_option("--max-sum", max_sum)->required()->check(CLI::Range(1, 200));

    bool with_types = false;
    auto* roots = app.add_subcommand("roots", "Positive roots of E7, written (b''; a b g c d d')");
    roots->add_flag("--types", with_types);

    std::int64_t steps = 5;
    auto* rays = app.add_subcommand("rays", "Dimension types along the three inserted rays");
    rays->add_option("--steps", steps)->check(CLI::Range(1, 1000));

    std::string file;
    std::uint64_t seed = 0;
    auto* decomp = app.add_subcommand("decompose", "Split a system file into indecomposables");
    decomp->add_option("file", file)->required();
    decomp->add_option("--seed", seed);

    auto* validate_cmd = app.add_subcommand("validate", "List the violated axioms of a system file");
    validate_cmd->add_option("file", file)->required();

    auto* dual = app.add_subcommand("dualize", "Write the dual system");
    dual->add_option("file", file)->required();
    dual->add_option("--out", out_path)->required();

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Collect indecomposable types from explicit systems");
    search->add_option("--n", so.n)->required()->check(CLI::Range(1, 12));
    search->add_option("--field", so.field)->check(CLI::Range(2, 65521));
    search->add_option("--max-dim", so.max_dim)->check(CLI::Range(1, 12));
    search->add_option("--samples", so.samples);
    search->add_option("--seed", so.seed);
    search->add_option("--exhaustive-dim", so.exhaustive_dim)->check(CLI::Range(0, 4));

    auto* s15 = app.add_subcommand("s15-map", "Indecomposables of S1(5) by (dim U, dim V/U)");
    s15->add_option("--format", format)->check(CLI::IsMember({"table", "hex", "svg"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) {
            err << "usage: " << sub->help();
        }
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(x, y, z, out);
        if (*map) return cmd_map(max_sum, parity, format, labels, Sink{out, out_path});
        if (*holes_cmd) {
            out << type_lines(holes(max_sum));
            return kExitOk;
        }
        if (*verify) return cmd_verify(max_sum, out);
        if (*roots) return cmd_roots(with_types, out);
        if (*rays) return cmd_rays(steps, out);
        if (*decomp) return cmd_decompose(file, seed, out, err);
        if (*validate_cmd) return cmd_validate(file, out);
        if (*dual) return cmd_dualize(file, out_path, out, err);
        if (*search) {
            if (!is_prime(so.field)) throw UsageError("--field must be prime");
            return cmd_search(so, out);
        }
        if (*s15) return cmd_s15(format, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace invsub
