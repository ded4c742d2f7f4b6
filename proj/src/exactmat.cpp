#include "invsub/exactmat.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace invsub {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
        throw std::invalid_argument("field modulus must be a prime below 2^31, got " + std::to_string(p));
    }
}

Residue PrimeField::reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
    Residue result = 1 % p_;
    Residue base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

std::int64_t PrimeField::signed_value(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat Mat::identity(PrimeField field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

Mat Mat::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Mat m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Mat Mat::from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(field, v);
}

bool Mat::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](Residue x) { return x == 0; });
}

std::vector<std::vector<std::int64_t>> Mat::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
    return out;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

namespace {

void require_same_field(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

// dst += c * src over F_p, starting at column `from`.
void axpy(const PrimeField& f, std::span<Residue> dst, std::span<const Residue> src, Residue c,
          std::size_t from = 0) {
    if (c == 0) return;
    const std::size_t n = dst.size();
    if (f.p() == 2) {
        for (std::size_t k = from; k < n; ++k) dst[k] ^= src[k];
        return;
    }
    const std::uint64_t p = f.p();
    for (std::size_t k = from; k < n; ++k) {
        dst[k] = static_cast<Residue>((dst[k] + static_cast<std::uint64_t>(c) * src[k]) % p);
    }
}

void scale_row(const PrimeField& f, std::span<Residue> row, Residue c) {
    if (c == 1) return;
    for (auto& x : row) x = f.mul(x, c);
}

// In-place RREF on a residue matrix; returns pivot columns.
std::vector<std::size_t> rref_generic(std::vector<Residue>& a, std::size_t rows, std::size_t cols,
                                      const PrimeField& f) {
    std::vector<std::size_t> pivots;
    pivots.reserve(std::min(rows, cols));
    std::size_t r = 0;
    auto row = [&](std::size_t i) { return std::span<Residue>(a.data() + i * cols, cols); };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r) std::swap_ranges(row(sel).begin(), row(sel).end(), row(r).begin());
        scale_row(f, row(r), f.inv(a[r * cols + c]));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Residue x = a[i * cols + c];
            if (x != 0) axpy(f, row(i), row(r), f.neg(x), c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// In-place RREF of packed F_2 rows (column c is bit c % 64 of word c / 64).
std::vector<std::size_t> rref_bits(std::uint64_t* bits, std::size_t rows, std::size_t words, std::size_t cols) {
    std::vector<std::size_t> pivots;
    pivots.reserve(std::min(rows, cols));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::size_t sel = r;
        while (sel < rows && !(bits[sel * words + w] & mask)) ++sel;
        if (sel == rows) continue;
        if (sel != r) std::swap_ranges(bits + sel * words, bits + (sel + 1) * words, bits + r * words);
        const std::uint64_t* prow = bits + r * words;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint64_t* irow = bits + i * words;
            if (irow[w] & mask) {
                for (std::size_t k = w; k < words; ++k) irow[k] ^= prow[k];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::size_t> rref_f2(std::vector<Residue>& a, std::size_t rows, std::size_t cols) {
    const std::size_t words = (cols + 63) / 64;
    thread_local std::vector<std::uint64_t> bits;
    bits.assign(rows * words, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            bits[i * words + c / 64] |= std::uint64_t{a[i * cols + c] & 1} << (c % 64);
    auto pivots = rref_bits(bits.data(), rows, words, cols);
    // Only the leading rows survive into the echelon basis.
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const std::uint64_t* brow = bits.data() + i * words;
        Residue* arow = a.data() + i * cols;
        for (std::size_t c = 0; c < cols; ++c) arow[c] = (brow[c / 64] >> (c % 64)) & 1;
    }
    return pivots;
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto orow = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Residue x = a(i, k);
            if (x != 0) axpy(a.field(), orow, b.row(k), x);
        }
    }
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    Mat out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.field(), out.row(i), b.row(i), 1);
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
    Mat out = a;
    const Residue minus_one = a.field().neg(1);
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(a.field(), out.row(i), b.row(i), minus_one);
    return out;
}

Mat scaled(const Mat& a, Residue c) {
    Mat out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) scale_row(a.field(), out.row(i), c);
    if (c == 0) out = Mat(a.field(), a.rows(), a.cols());
    return out;
}

Mat transpose(const Mat& a) {
    Mat out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set_residue(j, i, a(i, j));
    return out;
}

Mat power(const Mat& a, unsigned e) {
    if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
    Mat result = Mat::identity(a.field(), a.rows());
    Mat base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Vec apply(const Mat& m, std::span<const Residue> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
    const auto& f = m.field();
    Vec out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        auto row = m.row(i);
        for (std::size_t k = 0; k < v.size(); ++k) {
            acc += static_cast<std::uint64_t>(row[k]) * v[k] % f.p();
        }
        out[i] = static_cast<Residue>(acc % f.p());
    }
    return out;
}

Mat vstack(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Mat out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) std::ranges::copy(a.row(i), out.row(i).begin());
    for (std::size_t i = 0; i < b.rows(); ++i) std::ranges::copy(b.row(i), out.row(a.rows() + i).begin());
    return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set_residue(i, j, a(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set_residue(a.rows() + i, a.cols() + j, b(i, j));
    return out;
}

Mat row_matrix(PrimeField field, std::span<const Residue> v) {
    Mat m(field, 1, v.size());
    std::ranges::copy(v, m.row(0).begin());
    return m;
}

namespace {

// Pivot columns when m is already in reduced row echelon form without zero rows.
std::optional<std::vector<std::size_t>> rref_pivots(const Mat& m) {
    std::vector<std::size_t> pivots;
    pivots.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        if (c == row.size() || row[c] != 1) return std::nullopt;
        if (!pivots.empty() && c <= pivots.back()) return std::nullopt;
        pivots.push_back(c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (i != r && m(r, pivots[i]) != 0) return std::nullopt;
    return pivots;
}

}  // namespace

Echelon row_echelon(const Mat& m) {
    if (auto pivots = rref_pivots(m)) return {m, std::move(*pivots)};
    thread_local std::vector<Residue> a;
    a.assign(m.data().begin(), m.data().end());
    auto pivots = m.field().p() == 2 ? rref_f2(a, m.rows(), m.cols())
                                     : rref_generic(a, m.rows(), m.cols(), m.field());
    Mat basis(m.field(), pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(i * m.cols()), m.cols(), basis.row(i).begin());
    }
    return {std::move(basis), std::move(pivots)};
}

Mat row_space(const Mat& m) { return row_echelon(m).basis; }

std::size_t rank(const Mat& m) { return row_echelon(m).pivots.size(); }

Mat nullspace_basis_f2(std::vector<std::uint64_t> bits, std::size_t rows, std::size_t cols) {
    const std::size_t words = (cols + 63) / 64;
    if (bits.size() != rows * words) throw std::invalid_argument("nullspace_basis_f2: packed size mismatch");
    const auto pivots = rref_bits(bits.data(), rows, words, cols);
    const PrimeField f(2);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat out(f, cols - pivots.size(), cols);
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        out.set_residue(k, free, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if ((bits[i * words + free / 64] >> (free % 64)) & 1) out.set_residue(k, pivots[i], 1);
        ++k;
    }
    return row_space(out);
}

Mat nullspace_basis(const Mat& m) {
    const auto e = row_echelon(m);
    const auto& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Mat out(f, m.cols() - e.pivots.size(), m.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        out.set_residue(k, free, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            out.set_residue(k, e.pivots[i], f.neg(e.basis(i, free)));
        }
        ++k;
    }
    return row_space(out);
}

std::optional<Vec> solve_membership(const Mat& space, std::span<const Residue> v) {
    if (v.size() != space.cols()) throw std::invalid_argument("solve_membership: vector length mismatch");
    const std::size_t k = space.rows();
    // Columns: one per spanning row, plus the right-hand side.
    Mat aug(space.field(), space.cols(), k + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < space.cols(); ++j) aug.set_residue(j, i, space(i, j));
    for (std::size_t j = 0; j < space.cols(); ++j) aug.set_residue(j, k, v[j]);
    const auto e = row_echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    Vec coef(k, 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) coef[e.pivots[i]] = e.basis(i, k);
    return coef;
}

namespace {

// Reduces v against an echelon basis in place.
void reduce_against(const Echelon& e, Vec& v) {
    const auto& f = e.basis.field();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        Residue x = v[e.pivots[i]];
        if (x != 0) axpy(f, v, e.basis.row(i), f.neg(x));
    }
}

}  // namespace

bool row_space_contains(const Mat& space, const Mat& vectors) {
    require_same_field(space, vectors);
    if (vectors.rows() == 0) return true;
    if (space.cols() != vectors.cols()) throw std::invalid_argument("row_space_contains: column mismatch");
    const auto e = row_echelon(space);
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
        Vec v(vectors.row(i).begin(), vectors.row(i).end());
        reduce_against(e, v);
        if (std::ranges::any_of(v, [](Residue x) { return x != 0; })) return false;
    }
    return true;
}

Mat row_space_intersection(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("intersection: column mismatch");
    const std::size_t d = a.cols();
    // Zassenhaus: rows [a | a] and [b | 0]; echelon rows with zero left half span a ∩ b.
    Mat z(a.field(), a.rows() + b.rows(), 2 * d);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            z.set_residue(i, j, a(i, j));
            z.set_residue(i, d + j, a(i, j));
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < d; ++j) z.set_residue(a.rows() + i, j, b(i, j));
    const auto e = row_echelon(z);
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] < d) continue;
        std::vector<std::int64_t> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = e.basis(i, d + j);
        rows.push_back(std::move(r));
    }
    return row_space(Mat::from_rows(a.field(), rows, d));
}

std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set_residue(i, j, m(i, j));
        aug.set_residue(i, n + i, 1);
    }
    const auto e = row_echelon(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    Mat out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set_residue(i, j, e.basis(i, n + j));
    return out;
}

Vec echelon_coordinates(const Echelon& e, std::span<const Residue> v) {
    Vec c(e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) c[i] = v[e.pivots[i]];
    return c;
}

Mat random_mat(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(field, rows, cols);
    std::uniform_int_distribution<Residue> dist(0, field.p() - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (auto& x : m.row(i)) x = dist(rng);
    return m;
}

Mat random_invertible(PrimeField field, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Mat m = random_mat(field, n, n, rng);
        if (rank(m) == n) return m;
    }
}

Vec random_combination(const Mat& basis, std::mt19937_64& rng) {
    const auto& f = basis.field();
    Vec v(basis.cols(), 0);
    std::uniform_int_distribution<Residue> dist(0, f.p() - 1);
    for (std::size_t i = 0; i < basis.rows(); ++i) axpy(f, v, basis.row(i), dist(rng));
    return v;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(PrimeField field, std::vector<Residue> coefficients) : field_(field), c_(std::move(coefficients)) {
    for (auto& x : c_) x %= field_.p();
    trim();
}

Poly Poly::monomial(PrimeField field, std::size_t degree, Residue c) {
    std::vector<Residue> v(degree + 1, 0);
    v[degree] = c;
    return Poly(field, std::move(v));
}

Poly Poly::constant(PrimeField field, Residue c) { return Poly(field, {c}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    Residue inv = field_.inv(c_.back());
    std::vector<Residue> v = c_;
    for (auto& x : v) x = field_.mul(x, inv);
    return Poly(field_, std::move(v));
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c_[i] != 1 || i == 0) os << c_[i];
        if (i >= 1) os << 't';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    std::vector<Residue> v(std::max(a.coefficients().size(), b.coefficients().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coefficient(i), b.coefficient(i));
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    std::vector<Residue> v(std::max(a.coefficients().size(), b.coefficients().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coefficient(i), b.coefficient(i));
    return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Residue> v(a.coefficients().size() + b.coefficients().size() - 1, 0);
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a.coefficient(i), b.coefficient(j)));
    return Poly(f, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& f = a.field();
    std::vector<Residue> rem = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(f), a};
    std::vector<Residue> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Residue lead_inv = f.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        Residue c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        if (c == 0) continue;
        const auto shift = static_cast<std::size_t>(i - db);
        quo[shift] = c;
        for (int j = 0; j <= db; ++j) {
            auto& r = rem[shift + static_cast<std::size_t>(j)];
            r = f.sub(r, f.mul(c, b.coefficient(static_cast<std::size_t>(j))));
        }
    }
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return divmod(a * b, poly_gcd(a, b)).first.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly result = divmod(Poly::constant(base.field(), 1), mod).second;
    Poly b = divmod(base, mod).second;
    while (e) {
        if (e & 1) result = divmod(result * b, mod).second;
        e >>= 1;
        if (e) b = divmod(b * b, mod).second;
    }
    return result;
}

namespace {

// t^(p^k) mod f for k = 1, 2, ... computed incrementally.
class FrobeniusPowers {
public:
    explicit FrobeniusPowers(const Poly& f) : f_(f), cur_(divmod(Poly::monomial(f.field(), 1), f).second) {}
    const Poly& next() {
        cur_ = pow_mod(cur_, f_.field().p(), f_);
        return cur_;
    }

private:
    Poly f_;
    Poly cur_;
};

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    return smallest_irreducible_factor(f).degree() == f.degree();
}

Poly smallest_irreducible_factor(const Poly& f_in) {
    if (f_in.degree() < 1) throw std::invalid_argument("constant polynomial has no irreducible factor");
    const Poly f = f_in.monic();
    const auto& field = f.field();
    const Poly t = Poly::monomial(field, 1);
    FrobeniusPowers frob(f);
    for (int k = 1; k <= f.degree(); ++k) {
        // Product of the distinct irreducible factors whose degree divides k.
        Poly g = poly_gcd(f, frob.next() - t);
        if (g.degree() < 1) continue;
        if (g.degree() == k) return g;
        // Several factors of degree k: the first monic degree-k divisor in
        // lexicographic order is one of them.
        const std::uint64_t p = field.p();
        std::vector<Residue> coef(static_cast<std::size_t>(k) + 1, 0);
        coef[static_cast<std::size_t>(k)] = 1;
        for (;;) {
            Poly cand(field, coef);
            if (divmod(g, cand).second.is_zero()) return cand;
            std::size_t i = 0;
            while (i < static_cast<std::size_t>(k) && ++coef[i] == p) coef[i++] = 0;
            if (i == static_cast<std::size_t>(k)) break;
        }
        throw std::logic_error("distinct-degree factor without a divisor of that degree");
    }
    return f;
}

std::optional<std::pair<Poly, Poly>> coprime_factorization(const Poly& f_in) {
    if (f_in.degree() < 2) return std::nullopt;
    const Poly f = f_in.monic();
    const Poly g = smallest_irreducible_factor(f);
    Poly rest = f;
    Poly part = Poly::constant(f.field(), 1);
    for (;;) {
        auto [q, r] = divmod(rest, g);
        if (!r.is_zero()) break;
        rest = q;
        part = part * g;
    }
    if (rest.degree() < 1) return std::nullopt;
    return std::make_pair(part.monic(), rest.monic());
}

Mat evaluate(const Poly& f, const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("evaluate: non-square matrix");
    const auto& field = m.field();
    Mat acc(field, m.rows(), m.cols());
    const Mat id = Mat::identity(field, m.rows());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * m + scaled(id, f.coefficient(static_cast<std::size_t>(i)));
    }
    return acc;
}

Poly minimal_polynomial(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("minimal_polynomial: non-square matrix");
    const auto& f = m.field();
    const std::size_t n = m.rows();
    Poly result = Poly::constant(f, 1);
    // Basis vectors already inside an earlier Krylov space contribute nothing new.
    Echelon covered{Mat(f, 0, n), {}};
    for (std::size_t i = 0; i < n; ++i) {
        Vec unit(n, 0);
        unit[i] = 1;
        {
            Vec probe = unit;
            reduce_against(covered, probe);
            if (std::ranges::all_of(probe, [](Residue x) { return x == 0; })) continue;
        }
        // Incremental elimination of the Krylov sequence, tracking each reduced
        // row as a combination of the sequence vectors.
        std::vector<Vec> reduced;
        std::vector<std::size_t> piv;
        std::vector<Vec> combo;
        Vec v = unit;
        std::vector<Vec> krylov;
        for (std::size_t k = 0;; ++k) {
            Vec w = v;
            Vec c(k + 1, 0);
            c[k] = 1;
            for (std::size_t j = 0; j < reduced.size(); ++j) {
                Residue x = w[piv[j]];
                if (x == 0) continue;
                const Residue nx = f.neg(x);
                axpy(f, w, reduced[j], nx);
                for (std::size_t t = 0; t < combo[j].size(); ++t) c[t] = f.add(c[t], f.mul(nx, combo[j][t]));
            }
            auto nz = std::ranges::find_if(w, [](Residue x) { return x != 0; });
            if (nz == w.end()) {
                result = poly_lcm(result, Poly(f, c));
                break;
            }
            const auto p = static_cast<std::size_t>(nz - w.begin());
            const Residue inv = f.inv(w[p]);
            for (auto& x : w) x = f.mul(x, inv);
            for (auto& x : c) x = f.mul(x, inv);
            reduced.push_back(std::move(w));
            piv.push_back(p);
            combo.push_back(std::move(c));
            krylov.push_back(v);
            v = invsub::apply(m, v);
        }
        Mat span_rows(f, krylov.size(), n);
        for (std::size_t r = 0; r < krylov.size(); ++r) std::ranges::copy(krylov[r], span_rows.row(r).begin());
        covered = row_echelon(vstack(covered.basis, span_rows));
        if (covered.pivots.size() == n) break;
    }
    return result.monic();
}

std::pair<Mat, Mat> coprime_split(const Mat& m, const Poly& f, const Poly& g) {
    if (f.degree() < 1 || g.degree() < 1) throw std::invalid_argument("coprime_split: constant factor");
    if (poly_gcd(f, g).degree() != 0) throw std::invalid_argument("coprime_split: factors not coprime");
    if (!((f * g).monic() == minimal_polynomial(m))) {
        throw std::invalid_argument("coprime_split: product is not the minimal polynomial");
    }
    return {nullspace_basis(evaluate(f, m)), nullspace_basis(evaluate(g, m))};
}

}  // namespace invsub
