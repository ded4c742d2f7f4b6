// Exact dense linear algebra over prime fields.
//
// Matrices act on column vectors; subspaces are stored as row-basis matrices
// kept in reduced row echelon form, so two subspaces are equal exactly when
// their basis matrices are equal.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace invsub {

using Residue = std::uint32_t;

/// The field Z/pZ. The modulus is checked for primality on construction.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p = 2);

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::int64_t v) const noexcept;
    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Residue pow(Residue a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; throws std::domain_error on zero.
    Residue inv(Residue a) const;

    /// Centered representative in (-p/2, p/2], used for printing.
    std::int64_t signed_value(Residue a) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix with entries reduced into [0, p).
class Mat {
public:
    Mat() = default;
    Mat(PrimeField field, std::size_t rows, std::size_t cols);

    static Mat identity(PrimeField field, std::size_t n);
    /// Builds a matrix from integer rows; entries are reduced mod p.
    /// `cols` is needed when `rows` is empty.
    static Mat from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols = 0);
    static Mat from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Residue operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) noexcept { a_[r * cols_ + c] = field_.reduce(v); }
    void set_residue(std::size_t r, std::size_t c, Residue v) noexcept { a_[r * cols_ + c] = v; }

    std::span<const Residue> row(std::size_t r) const noexcept { return {a_.data() + r * cols_, cols_}; }
    std::span<Residue> row(std::size_t r) noexcept { return {a_.data() + r * cols_, cols_}; }
    std::span<const Residue> data() const noexcept { return a_; }

    bool is_zero() const noexcept;
    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::string to_string() const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    PrimeField field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> a_;
};

using Vec = std::vector<Residue>;

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scaled(const Mat& a, Residue c);
Mat transpose(const Mat& a);
Mat power(const Mat& a, unsigned e);
Vec apply(const Mat& m, std::span<const Residue> v);
/// Rows of `a` followed by rows of `b`.
Mat vstack(const Mat& a, const Mat& b);
/// Block diagonal matrix diag(a, b).
Mat block_diag(const Mat& a, const Mat& b);
Mat row_matrix(PrimeField field, std::span<const Residue> v);

/// Reduced row echelon form with zero rows removed; `pivots[i]` is the pivot
/// column of row i, strictly ascending.
struct Echelon {
    Mat basis;
    std::vector<std::size_t> pivots;
};

Echelon row_echelon(const Mat& m);
/// Canonical basis of the row space.
Mat row_space(const Mat& m);
std::size_t rank(const Mat& m);
/// Rows form the canonical basis of {v : m v = 0}; row count is cols - rank.
Mat nullspace_basis(const Mat& m);
/// The same over F_2 for a matrix given as packed rows: bit c % 64 of word
/// rows[r * W + c / 64] is entry (r, c), with W = ceil(cols / 64).
Mat nullspace_basis_f2(std::vector<std::uint64_t> bits, std::size_t rows, std::size_t cols);
/// Coefficients c with sum_i c_i * space.row(i) = v, or nullopt when v is not
/// in the row space. Throws std::invalid_argument on a length mismatch.
std::optional<Vec> solve_membership(const Mat& space, std::span<const Residue> v);
/// True when every row of `vectors` lies in the row space of `space`.
bool row_space_contains(const Mat& space, const Mat& vectors);
Mat row_space_intersection(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& m);

/// Coordinates of v with respect to an echelon basis (v must lie in its span).
Vec echelon_coordinates(const Echelon& e, std::span<const Residue> v);

Mat random_mat(PrimeField field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Mat random_invertible(PrimeField field, std::size_t n, std::mt19937_64& rng);
Vec random_combination(const Mat& basis, std::mt19937_64& rng);

/// Polynomial over F_p, coefficients stored low degree first, no trailing zeros.
class Poly {
public:
    explicit Poly(PrimeField field) : field_(field) {}
    Poly(PrimeField field, std::vector<Residue> coefficients);

    static Poly monomial(PrimeField field, std::size_t degree, Residue c = 1);
    static Poly constant(PrimeField field, Residue c);

    const PrimeField& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Residue coefficient(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Residue>& coefficients() const noexcept { return c_; }
    Poly monic() const;
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

private:
    void trim();

    PrimeField field_;
    std::vector<Residue> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);
bool is_irreducible(const Poly& f);
/// Some irreducible monic factor of smallest degree, chosen deterministically.
Poly smallest_irreducible_factor(const Poly& f);
/// f = f1 * f2 with f1, f2 monic, nonconstant and coprime; nullopt when f is a
/// power of a single irreducible (or constant).
std::optional<std::pair<Poly, Poly>> coprime_factorization(const Poly& f);

/// f(m) by Horner's rule.
Mat evaluate(const Poly& f, const Mat& m);
/// Monic minimal polynomial, the lcm of the local minimal polynomials of the
/// standard basis vectors.
Poly minimal_polynomial(const Mat& m);
/// Bases of ker f(m) and ker g(m). Throws std::invalid_argument unless f and
/// g are nonconstant, coprime and multiply to the minimal polynomial of m.
std::pair<Mat, Mat> coprime_split(const Mat& m, const Poly& f, const Poly& g);

}  // namespace invsub
