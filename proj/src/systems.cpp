#include "invsub/systems.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace invsub {

namespace {

std::vector<std::string> compute_violations(unsigned n, const Mat& t, const Mat& u1, const Mat& u2) {
    std::vector<std::string> out;
    if (n == 0) {
        out.emplace_back("nilpotency bound n must be at least 1");
    } else if (!power(t, n).is_zero()) {
        out.push_back("T^" + std::to_string(n) + " != 0");
    }
    const bool u1_indep = rank(u1) == u1.rows();
    const bool u2_indep = rank(u2) == u2.rows();
    if (!u1_indep) out.emplace_back("U1 rows dependent");
    if (!u2_indep) out.emplace_back("U2 rows dependent");
    if (!row_space_contains(u2, u1)) out.emplace_back("U1 not contained in U2");
    // Row u of U maps to (T u^T)^T = u T^T.
    const Mat tt = transpose(t);
    if (!row_space_contains(u1, u1 * tt)) out.emplace_back("U1 not invariant");
    if (!row_space_contains(u2, u2 * tt)) out.emplace_back("U2 not invariant");
    return out;
}

void require_compatible(const System& a, const System& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("systems over different fields");
    if (a.n() != b.n()) throw std::invalid_argument("systems with different nilpotency bounds");
}

void require_valid(const System& s, const char* what) {
    if (!s.valid()) throw std::invalid_argument(std::string(what) + ": invalid system (" + s.violations().front() + ")");
}

Mat reshape(const Mat& flat_rows, std::size_t index, std::size_t rows, std::size_t cols) {
    Mat m(flat_rows.field(), rows, cols);
    auto src = flat_rows.row(index);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set_residue(r, c, src[r * cols + c]);
    return m;
}

bool fits_budget(std::uint32_t p, std::size_t m, unsigned log2_budget) {
    std::uint64_t count = 1;
    const std::uint64_t cap = std::uint64_t{1} << log2_budget;
    for (std::size_t i = 0; i < m; ++i) {
        count *= p;
        if (count > cap) return false;
    }
    return true;
}

enum class ScanOutcome { none, found, over_budget };

// Enumerates every element of the span of `basis` (flattened d x d matrices)
// and stops at the first idempotent other than 0 and 1.
ScanOutcome scan_idempotents(const std::vector<Mat>& basis, const PrimeField& f, unsigned log2_budget,
                             Mat& found) {
    const std::size_t m = basis.size();
    if (m == 0) return ScanOutcome::none;
    if (!fits_budget(f.p(), m, log2_budget)) return ScanOutcome::over_budget;
    const std::size_t d = basis.front().rows();
    const std::size_t dd = d * d;
    std::vector<std::vector<Residue>> flat(m);
    for (std::size_t i = 0; i < m; ++i) flat[i].assign(basis[i].data().begin(), basis[i].data().end());

    std::vector<Residue> e(dd, 0);
    std::vector<Residue> digits(m, 0);
    std::vector<Residue> row(d);
    const std::uint64_t p = f.p();

    auto is_nontrivial_idempotent = [&]() {
        bool zero = true;
        bool ident = true;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Residue x = e[r * d + c];
                if (x != 0) zero = false;
                if (x != (r == c ? 1u : 0u)) ident = false;
            }
        if (zero || ident) return false;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < d; ++k) acc += static_cast<std::uint64_t>(e[r * d + k]) * e[k * d + c];
                if (acc % p != e[r * d + c]) return false;
            }
        }
        return true;
    };

    for (;;) {
        // Odometer step: each changed digit adds its basis element once (a
        // wrap from p-1 to 0 also adds it, since p * b = 0).
        std::size_t i = 0;
        for (; i < m; ++i) {
            for (std::size_t k = 0; k < dd; ++k) e[k] = static_cast<Residue>((e[k] + flat[i][k]) % p);
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
        if (i == m) return ScanOutcome::none;
        if (is_nontrivial_idempotent()) {
            found = Mat(f, d, d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) found.set_residue(r, c, e[r * d + c]);
            return ScanOutcome::found;
        }
    }
}

Mat linear_combination(const std::vector<Mat>& basis, std::mt19937_64& rng) {
    const auto& f = basis.front().field();
    std::uniform_int_distribution<Residue> dist(0, f.p() - 1);
    Mat acc(f, basis.front().rows(), basis.front().cols());
    for (const auto& b : basis) {
        const Residue c = dist(rng);
        if (c == 0) continue;
        for (std::size_t r = 0; r < acc.rows(); ++r) {
            auto dst = acc.row(r);
            auto src = b.row(r);
            for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = f.add(dst[k], f.mul(c, src[k]));
        }
    }
    return acc;
}

// Fitting decomposition V = ker psi^d + im psi^d for psi = phi - lambda.
enum class FittingOutcome { split, nilpotent, none };

FittingOutcome fitting_split(const Mat& phi, Residue lambda, std::pair<Mat, Mat>& parts) {
    const auto& f = phi.field();
    const std::size_t d = phi.rows();
    Mat psi = phi;
    for (std::size_t i = 0; i < d; ++i) psi.set_residue(i, i, f.sub(psi(i, i), lambda));
    // psi^(2^k) with 2^k >= d
    for (std::size_t e = 1; e < d; e *= 2) psi = psi * psi;
    // phi - lambda nilpotent: lambda is the only eigenvalue, so phi cannot split V.
    if (psi.is_zero()) return FittingOutcome::nilpotent;
    Mat kernel = nullspace_basis(psi);
    if (kernel.rows() == 0) return FittingOutcome::none;
    parts = {std::move(kernel), row_space(transpose(psi))};
    return FittingOutcome::split;
}

// Eigenvalues worth trying for a linear Fitting split.
std::size_t linear_candidates(const PrimeField& f) { return f.p() <= 7 ? f.p() : 1; }

}  // namespace

// ---------------------------------------------------------------------------
// System

System::System(PrimeField field, unsigned n, Mat t, Mat u1, Mat u2)
    : n_(n), t_(std::move(t)), u1_(std::move(u1)), u2_(std::move(u2)) {
    if (!t_.is_square()) throw std::invalid_argument("T must be square");
    if (!(t_.field() == field) || !(u1_.field() == field) || !(u2_.field() == field)) {
        throw std::invalid_argument("system matrices over different fields");
    }
    if (u1_.cols() != t_.rows() || u2_.cols() != t_.rows()) {
        throw std::invalid_argument("subspace bases must have dim columns");
    }
}

const std::vector<std::string>& System::violations() const {
    if (!violations_) violations_ = compute_violations(n_, t_, u1_, u2_);
    return *violations_;
}

System System::zero(PrimeField field, unsigned n) {
    return System(field, n, Mat(field, 0, 0), Mat(field, 0, 0), Mat(field, 0, 0));
}

System System::jordan_block(PrimeField field, unsigned n, std::size_t size, std::size_t dim_u1,
                            std::size_t dim_u2) {
    if (dim_u1 > dim_u2 || dim_u2 > size) throw std::invalid_argument("jordan_block: need dim_u1 <= dim_u2 <= size");
    Mat t = jordan_matrix(field, {size});
    Mat u1(field, dim_u1, size);
    Mat u2(field, dim_u2, size);
    for (std::size_t i = 0; i < dim_u1; ++i) u1.set_residue(i, i, 1);
    for (std::size_t i = 0; i < dim_u2; ++i) u2.set_residue(i, i, 1);
    return System(field, n, std::move(t), std::move(u1), std::move(u2));
}

System System::canonicalized() const { return System(field(), n_, t_, row_space(u1_), row_space(u2_)); }

std::vector<std::string> validate(const System& s) { return s.violations(); }

DimensionType dim_type(const System& s) {
    require_valid(s, "dim_type");
    const auto x = static_cast<std::int64_t>(s.u1().rows());
    const auto xy = static_cast<std::int64_t>(s.u2().rows());
    return {x, xy - x, static_cast<std::int64_t>(s.dim()) - xy};
}

System simple(int i, PrimeField field, unsigned n) {
    Mat t(field, 1, 1);
    Mat one = Mat::identity(field, 1);
    Mat none(field, 0, 1);
    switch (i) {
        case 1: return System(field, n, t, one, one);
        case 2: return System(field, n, t, none, one);
        case 3: return System(field, n, t, none, none);
        default: throw std::invalid_argument("simple: index must be 1, 2 or 3");
    }
}

System direct_sum(const System& a, const System& b) {
    require_compatible(a, b);
    return System(a.field(), a.n(), block_diag(a.t(), b.t()), row_space(block_diag(a.u1(), b.u1())),
                  row_space(block_diag(a.u2(), b.u2())));
}

System direct_sum(const std::vector<System>& parts, PrimeField field, unsigned n) {
    System acc = System::zero(field, n);
    for (const auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

System base_change(const System& s, const Mat& p) {
    auto p_inv = inverse(p);
    if (!p_inv) throw std::invalid_argument("base_change: matrix not invertible");
    const Mat pt = transpose(p);
    return System(s.field(), s.n(), p * s.t() * *p_inv, row_space(s.u1() * pt), row_space(s.u2() * pt));
}

bool is_morphism(const System& a, const System& b, const Mat& f) {
    if (f.rows() != b.dim() || f.cols() != a.dim()) return false;
    if (!(f * a.t() == b.t() * f)) return false;
    const Mat ft = transpose(f);
    return row_space_contains(b.u1(), a.u1() * ft) && row_space_contains(b.u2(), a.u2() * ft);
}

namespace {

// hom_space over F_2 with the equations packed as bit rows.
Mat hom_space_f2(const System& a, const System& b, const Mat& ann1, const Mat& ann2, std::size_t eqs) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t unknowns = da * db;
    const std::size_t words = (unknowns + 63) / 64;
    std::vector<std::uint64_t> bits(eqs * words, 0);
    auto flip = [&](std::size_t e, std::size_t u) { bits[e * words + u / 64] ^= std::uint64_t{1} << (u % 64); };
    std::size_t e = 0;
    for (std::size_t r = 0; r < db; ++r) {
        for (std::size_t c = 0; c < da; ++c, ++e) {
            for (std::size_t k = 0; k < da; ++k)
                if (a.t()(k, c)) flip(e, r * da + k);
            for (std::size_t k = 0; k < db; ++k)
                if (b.t()(r, k)) flip(e, k * da + c);
        }
    }
    auto add_subspace = [&](const Mat& ann, const Mat& u) {
        for (std::size_t i = 0; i < ann.rows(); ++i) {
            for (std::size_t j = 0; j < u.rows(); ++j, ++e) {
                for (std::size_t r = 0; r < db; ++r) {
                    if (!ann(i, r)) continue;
                    for (std::size_t c = 0; c < da; ++c)
                        if (u(j, c)) flip(e, r * da + c);
                }
            }
        }
    };
    add_subspace(ann1, a.u1());
    add_subspace(ann2, a.u2());
    return nullspace_basis_f2(std::move(bits), eqs, unknowns);
}

}  // namespace

Mat hom_space(const System& a, const System& b) {
    require_compatible(a, b);
    const auto& f = a.field();
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    const std::size_t unknowns = da * db;
    if (unknowns == 0) return Mat(f, 0, 0);
    const Mat ann1 = nullspace_basis(b.u1());
    const Mat ann2 = nullspace_basis(b.u2());
    const std::size_t eqs = da * db + ann1.rows() * a.u1().rows() + ann2.rows() * a.u2().rows();
    if (f.p() == 2) return hom_space_f2(a, b, ann1, ann2, eqs);
    Mat sys(f, eqs, unknowns);
    std::size_t e = 0;
    // (f T_a - T_b f)[r][c] = 0
    for (std::size_t r = 0; r < db; ++r) {
        for (std::size_t c = 0; c < da; ++c, ++e) {
            auto row = sys.row(e);
            for (std::size_t k = 0; k < da; ++k) row[r * da + k] = f.add(row[r * da + k], a.t()(k, c));
            for (std::size_t k = 0; k < db; ++k) row[k * da + c] = f.sub(row[k * da + c], b.t()(r, k));
        }
    }
    // alpha . (f u) = 0 for u in U_i(a), alpha annihilating U_i(b)
    auto add_subspace = [&](const Mat& ann, const Mat& u) {
        for (std::size_t i = 0; i < ann.rows(); ++i) {
            for (std::size_t j = 0; j < u.rows(); ++j, ++e) {
                auto row = sys.row(e);
                for (std::size_t r = 0; r < db; ++r) {
                    Residue ar = ann(i, r);
                    if (ar == 0) continue;
                    for (std::size_t c = 0; c < da; ++c) row[r * da + c] = f.mul(ar, u(j, c));
                }
            }
        }
    };
    add_subspace(ann1, a.u1());
    add_subspace(ann2, a.u2());
    return nullspace_basis(sys);
}

std::vector<Morphism> hom_basis(const System& a, const System& b) {
    const Mat h = hom_space(a, b);
    std::vector<Morphism> out;
    for (std::size_t i = 0; i < h.rows(); ++i) out.push_back({a.dim(), b.dim(), reshape(h, i, b.dim(), a.dim())});
    return out;
}

std::size_t hom_dim(const System& a, const System& b) { return hom_space(a, b).rows(); }

std::vector<Mat> end_basis(const System& s) {
    const Mat h = hom_space(s, s);
    std::vector<Mat> out;
    out.reserve(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(reshape(h, i, s.dim(), s.dim()));
    return out;
}

System restrict_to(const System& s, const Mat& w) {
    const auto& f = s.field();
    const Echelon e = row_echelon(w);
    const std::size_t r = e.pivots.size();
    Mat t(f, r, r);
    for (std::size_t j = 0; j < r; ++j) {
        const Vec image = invsub::apply(s.t(), e.basis.row(j));
        const Vec c = echelon_coordinates(e, image);
        for (std::size_t k = 0; k < r; ++k) t.set_residue(k, j, c[k]);
    }
    auto coords = [&](const Mat& u) {
        const Mat meet = row_space_intersection(u, e.basis);
        Mat out(f, meet.rows(), r);
        for (std::size_t i = 0; i < meet.rows(); ++i) {
            const Vec c = echelon_coordinates(e, meet.row(i));
            std::ranges::copy(c, out.row(i).begin());
        }
        return row_space(out);
    };
    return System(f, s.n(), std::move(t), coords(s.u1()), coords(s.u2()));
}

namespace {

// Both summands of V = W1 + W2, a splitting by a pair of complementary
// idempotents. Each U_i is the sum of its pieces in W1 and W2, so the pieces
// are the projections of U_i along the other summand.
std::pair<System, System> split_along(const System& s, const Mat& w1, const Mat& w2) {
    const auto& f = s.field();
    const Mat b1 = row_space(w1);
    const Mat b2 = row_space(w2);
    const std::size_t k = b1.rows();
    const std::size_t d = s.dim();
    const Mat basis = vstack(b1, b2);
    const auto inv = inverse(basis);
    if (!inv) throw std::logic_error("split_along: summands are not complementary");
    // Row-vector coordinates: v = c * basis, so c = v * basis^-1.
    const Mat t_coords = basis * transpose(s.t()) * *inv;
    auto block = [&](const Mat& rows_coords, std::size_t from, std::size_t len) {
        Mat out(f, rows_coords.rows(), len);
        for (std::size_t r = 0; r < rows_coords.rows(); ++r)
            for (std::size_t c = 0; c < len; ++c) out.set_residue(r, c, rows_coords(r, from + c));
        return out;
    };
    auto t_block = [&](std::size_t from, std::size_t len) {
        // Column-vector convention for the restricted operator.
        Mat out(f, len, len);
        for (std::size_t r = 0; r < len; ++r)
            for (std::size_t c = 0; c < len; ++c) out.set_residue(c, r, t_coords(from + r, from + c));
        return out;
    };
    const Mat u1c = s.u1() * *inv;
    const Mat u2c = s.u2() * *inv;
    System first(f, s.n(), t_block(0, k), row_space(block(u1c, 0, k)), row_space(block(u2c, 0, k)));
    System second(f, s.n(), t_block(k, d - k), row_space(block(u1c, k, d - k)), row_space(block(u2c, k, d - k)));
    return {std::move(first), std::move(second)};
}

}  // namespace

Decomposition decompose(const System& s, const DecomposeOptions& opts) {
    require_valid(s, "decompose");
    std::mt19937_64 rng(opts.seed);
    Decomposition result;
    std::vector<System> pending{s};
    while (!pending.empty()) {
        System m = std::move(pending.back());
        pending.pop_back();
        if (m.dim() == 0) continue;
        const std::vector<Mat> end = end_basis(m);
        if (end.size() == 1) {
            // End = k, certainly local.
            result.parts.push_back(std::move(m));
            continue;
        }
        const std::size_t trials = opts.max_trials ? opts.max_trials : 30 * end.size();
        bool split = false;
        for (std::size_t t = 0; t < trials && !split; ++t) {
            const Mat phi = linear_combination(end, rng);
            std::optional<std::pair<Mat, Mat>> parts;
            bool single_eigenvalue = false;
            for (Residue lambda = 0; lambda < linear_candidates(m.field()); ++lambda) {
                std::pair<Mat, Mat> found;
                const auto outcome = fitting_split(phi, lambda, found);
                if (outcome == FittingOutcome::split) parts = std::move(found);
                single_eigenvalue = outcome == FittingOutcome::nilpotent;
                if (outcome != FittingOutcome::none) break;
            }
            if (!parts && !single_eigenvalue && opts.min_poly_splits) {
                if (const auto factors = coprime_factorization(minimal_polynomial(phi))) {
                    parts.emplace(nullspace_basis(evaluate(factors->first, phi)),
                                  nullspace_basis(evaluate(factors->second, phi)));
                }
            }
            if (!parts) continue;
            auto [first, second] = split_along(m, parts->first, parts->second);
            pending.push_back(std::move(second));
            pending.push_back(std::move(first));
            split = true;
        }
        if (split) continue;
        if (!opts.exhaustive_certify) {
            result.certified = false;
            result.parts.push_back(std::move(m));
            continue;
        }
        Mat idem;
        switch (scan_idempotents(end, m.field(), opts.exhaustive_log2, idem)) {
            case ScanOutcome::found: {
                auto [first, second] = split_along(m, row_space(transpose(idem)), nullspace_basis(idem));
                pending.push_back(std::move(second));
                pending.push_back(std::move(first));
                break;
            }
            case ScanOutcome::none:
                result.parts.push_back(std::move(m));
                break;
            case ScanOutcome::over_budget:
                result.certified = false;
                result.parts.push_back(std::move(m));
                break;
        }
    }
    std::stable_sort(result.parts.begin(), result.parts.end(),
                     [](const System& a, const System& b) { return dim_type(a) < dim_type(b); });
    return result;
}

Decomposition decompose(const System& s, std::uint64_t seed, std::size_t max_trials) {
    DecomposeOptions opts;
    opts.seed = seed;
    opts.max_trials = max_trials;
    return decompose(s, opts);
}

std::optional<bool> is_indecomposable_exact(const System& s, unsigned log2_budget) {
    require_valid(s, "is_indecomposable_exact");
    if (s.dim() == 0) return false;
    const std::vector<Mat> end = end_basis(s);
    if (end.size() == 1) return true;
    Mat idem;
    switch (scan_idempotents(end, s.field(), log2_budget, idem)) {
        case ScanOutcome::found: return false;
        case ScanOutcome::none: return true;
        case ScanOutcome::over_budget: break;
    }
    return std::nullopt;
}

bool is_isomorphic(const System& a, const System& b, std::uint64_t seed) {
    require_compatible(a, b);
    require_valid(a, "is_isomorphic");
    require_valid(b, "is_isomorphic");
    if (dim_type(a) != dim_type(b)) return false;
    const std::size_t d = a.dim();
    if (d == 0) return true;
    const Mat hab = hom_space(a, b);
    const std::size_t m = hab.rows();
    if (m == 0 || hom_dim(b, a) != m || hom_dim(a, a) != m || hom_dim(b, b) != m) return false;
    std::vector<Mat> basis;
    for (std::size_t i = 0; i < m; ++i) basis.push_back(reshape(hab, i, d, d));

    std::mt19937_64 rng(seed);
    const std::size_t trials = 64 + 8 * m;
    for (std::size_t t = 0; t < trials; ++t) {
        if (rank(linear_combination(basis, rng)) == d) return true;
    }
    if (!fits_budget(a.field().p(), m, 20)) return false;
    const auto& f = a.field();
    std::vector<Residue> digits(m, 0);
    Mat acc(f, d, d);
    for (;;) {
        std::size_t i = 0;
        for (; i < m; ++i) {
            acc = acc + basis[i];
            if (++digits[i] < f.p()) break;
            digits[i] = 0;
        }
        if (i == m) return false;
        if (rank(acc) == d) return true;
    }
}

System dualize(const System& s) {
    require_valid(s, "dualize");
    return System(s.field(), s.n(), transpose(s.t()), nullspace_basis(s.u2()), nullspace_basis(s.u1()));
}

std::vector<std::vector<std::size_t>> partitions(std::size_t total, std::size_t max_part) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t rest, std::size_t cap) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    if (max_part > 0) rec(rec, total, max_part);
    return out;
}

Mat jordan_matrix(PrimeField field, const std::vector<std::size_t>& blocks) {
    std::size_t d = 0;
    for (auto b : blocks) d += b;
    Mat t(field, d, d);
    std::size_t off = 0;
    for (auto b : blocks) {
        for (std::size_t k = 0; k + 1 < b; ++k) t.set_residue(off + k, off + k + 1, 1);
        off += b;
    }
    return t;
}

namespace {

const std::vector<std::vector<std::size_t>>& cached_partitions(std::size_t total, std::size_t max_part) {
    thread_local std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> cache;
    auto key = std::make_pair(total, max_part);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, partitions(total, max_part)).first;
    return it->second;
}

// Grows a T-invariant subspace of `ambient` (echelon rows) to dimension
// `target` by adding T-closures of random vectors; nullopt on overshoot.
std::optional<Mat> grow_invariant(const Mat& t, const std::vector<Mat>& kernels, const Mat& ambient,
                                  std::size_t target, std::mt19937_64& rng) {
    const auto& f = t.field();
    const std::size_t d = t.rows();
    Mat span(f, 0, d);
    std::uniform_int_distribution<std::size_t> pick(0, kernels.size() - 1);
    std::vector<std::optional<Mat>> pools(kernels.size());
    std::size_t attempts = 0;
    while (span.rows() < target) {
        if (++attempts > 64 * (target + 1)) return std::nullopt;
        // A random vector killed by T^j for a random j.
        const std::size_t j = pick(rng);
        if (!pools[j]) pools[j] = row_space_intersection(ambient, kernels[j]);
        const Mat& pool = *pools[j];
        if (pool.rows() == 0) continue;
        Vec v = random_combination(pool, rng);
        if (std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; })) continue;
        // span, v, Tv, T^2 v, ... stacked into one matrix; T is nilpotent of
        // index at most d, so d images suffice.
        std::vector<Vec> orbit;
        while (!std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; })) {
            orbit.push_back(v);
            v = invsub::apply(t, v);
        }
        Mat stacked(f, span.rows() + orbit.size(), d);
        for (std::size_t i = 0; i < span.rows(); ++i) std::ranges::copy(span.row(i), stacked.row(i).begin());
        for (std::size_t i = 0; i < orbit.size(); ++i) std::ranges::copy(orbit[i], stacked.row(span.rows() + i).begin());
        span = row_space(stacked);
        if (span.rows() > target) return std::nullopt;
    }
    return span;
}

}  // namespace

System random_system(const DimensionType& t, unsigned n, PrimeField field, std::uint64_t seed,
                     bool base_change) {
    if (!t.is_nonnegative() || t.total() < 1) throw std::invalid_argument("random_system: need a nonzero nonnegative type");
    if (n == 0) throw std::invalid_argument("random_system: n must be at least 1");
    const auto d = static_cast<std::size_t>(t.total());
    const auto dim_u2 = static_cast<std::size_t>(t.x + t.y);
    const auto dim_u1 = static_cast<std::size_t>(t.x);
    const auto& shapes = cached_partitions(d, n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
    constexpr int kRounds = 2000;
    for (int round = 0; round < kRounds; ++round) {
        Mat op = jordan_matrix(field, shapes[pick_shape(rng)]);
        if (base_change) {
            const Mat p = random_invertible(field, d, rng);
            op = p * op * *inverse(p);
        }
        std::vector<Mat> kernels;
        Mat pw = op;
        for (unsigned k = 1; k <= n; ++k) {
            kernels.push_back(nullspace_basis(pw));
            pw = pw * op;
        }
        const Mat whole = Mat::identity(field, d);
        auto u2 = grow_invariant(op, kernels, whole, dim_u2, rng);
        if (!u2) continue;
        auto u1 = grow_invariant(op, kernels, *u2, dim_u1, rng);
        if (!u1) continue;
        return System(field, n, op, std::move(*u1), std::move(*u2));
    }
    throw std::runtime_error("unreachable type under sampling budget: " + t.to_tuple_string());
}

}  // namespace invsub
