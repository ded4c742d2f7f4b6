#include "invsub/sysio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace invsub {

namespace {

using nlohmann::json;

std::int64_t read_count(const json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw FormatError(std::string("field \"") + key + "\" must be a nonnegative integer");
    }
    return v.get<std::int64_t>();
}

Mat read_matrix(const json& j, const char* key, PrimeField f, std::size_t cols) {
    if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    const json& rows = j.at(key);
    if (!rows.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array of rows");
    Mat m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = rows[r];
        if (!row.is_array() || row.size() != cols) {
            throw FormatError(std::string(key) + " row " + std::to_string(r) + " must have " + std::to_string(cols) +
                              " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer()) throw FormatError(std::string(key) + " entries must be integers");
            const auto v = row[c].get<std::int64_t>();
            if (v < 0 || v >= static_cast<std::int64_t>(f.p())) {
                throw FormatError(std::string(key) + " entry " + std::to_string(v) + " outside [0, p)");
            }
            m.set_residue(r, c, static_cast<Residue>(v));
        }
    }
    return m;
}

json matrix_json(const Mat& m) {
    json rows = json::array();
    for (const auto& r : m.to_rows()) rows.push_back(r);
    return rows;
}

}  // namespace

System parse_system(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("a system file holds a single JSON object");
    const auto p = read_count(j, "field");
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
        throw FormatError("field must be a prime below 2^31");
    }
    const auto n = read_count(j, "n");
    const auto dim = static_cast<std::size_t>(read_count(j, "dim"));
    const PrimeField f(static_cast<std::uint32_t>(p));
    Mat t = read_matrix(j, "T", f, dim);
    if (t.rows() != dim) throw FormatError("T must have dim rows");
    Mat u1 = read_matrix(j, "U1", f, dim);
    Mat u2 = read_matrix(j, "U2", f, dim);
    return System(f, static_cast<unsigned>(n), std::move(t), std::move(u1), std::move(u2));
}

System load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

std::string system_to_json(const System& s) {
    json j;
    j["field"] = s.field().p();
    j["n"] = s.n();
    j["dim"] = s.dim();
    j["T"] = matrix_json(s.t());
    j["U1"] = matrix_json(s.u1());
    j["U2"] = matrix_json(s.u2());
    return j.dump() + "\n";
}

void save_system(const System& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << system_to_json(s);
    if (!out) throw FormatError("write failed for " + path);
}

}  // namespace invsub
