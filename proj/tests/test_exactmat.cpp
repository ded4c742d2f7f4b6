#include <gtest/gtest.h>

#include <random>
#include <set>

#include "invsub/exactmat.hpp"

using namespace invsub;

namespace {

// Size of the row space over F_p, counted by enumerating every combination.
std::size_t span_size(const Mat& m) {
    const auto p = m.field().p();
    std::set<std::vector<Residue>> seen;
    std::vector<Residue> coef(m.rows(), 0);
    for (;;) {
        std::vector<Residue> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + coef[i] * m(i, j)) % p;
        seen.insert(v);
        std::size_t i = 0;
        while (i < m.rows() && ++coef[i] == p) coef[i++] = 0;
        if (i == m.rows()) break;
    }
    return seen.size();
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST(PrimeField, RejectsComposite) {
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
    EXPECT_NO_THROW(PrimeField(7));
}

TEST(PrimeField, InverseRoundTrip) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
        PrimeField f(p);
        for (Residue a = 1; a < p; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
        EXPECT_THROW(f.inv(0), std::domain_error);
    }
}

TEST(PrimeField, SignedValue) {
    PrimeField f(7);
    EXPECT_EQ(f.signed_value(6), -1);
    EXPECT_EQ(f.signed_value(3), 3);
    EXPECT_EQ(f.reduce(-1), 6u);
}

TEST(Mat, RankMatchesSpanCount) {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t r = 1 + rng() % 4;
            const std::size_t c = 1 + rng() % 4;
            Mat m = random_mat(f, r, c, rng);
            EXPECT_EQ(ipow(p, rank(m)), span_size(m));
        }
    }
}

TEST(Mat, NullspaceIsKernel) {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {2u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 100; ++trial) {
            Mat m = random_mat(f, 1 + rng() % 5, 1 + rng() % 6, rng);
            Mat k = nullspace_basis(m);
            EXPECT_EQ(k.rows() + rank(m), m.cols());
            EXPECT_TRUE((m * transpose(k)).is_zero() || k.rows() == 0);
        }
    }
}

TEST(Mat, InverseOfRandomInvertible) {
    std::mt19937_64 rng(3);
    PrimeField f(3);
    for (int trial = 0; trial < 50; ++trial) {
        Mat a = random_invertible(f, 4, rng);
        auto inv = inverse(a);
        ASSERT_TRUE(inv);
        EXPECT_EQ(a * *inv, Mat::identity(f, 4));
    }
    EXPECT_FALSE(inverse(Mat(f, 2, 2)));
}

TEST(Mat, MembershipAndIntersection) {
    PrimeField f(2);
    Mat a = Mat::from_rows(f, {{1, 0, 0}, {0, 1, 0}});
    Mat b = Mat::from_rows(f, {{0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(row_space_intersection(a, b), Mat::from_rows(f, {{0, 1, 0}}));
    Vec v{1, 1, 0};
    auto c = solve_membership(a, v);
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (Vec{1, 1}));
    EXPECT_FALSE(solve_membership(a, Vec{0, 0, 1}));
    EXPECT_THROW(solve_membership(a, Vec{1, 0}), std::invalid_argument);
}

TEST(Mat, IntersectionAgreesWithBruteForce) {
    std::mt19937_64 rng(8);
    PrimeField f(2);
    for (int trial = 0; trial < 100; ++trial) {
        Mat a = random_mat(f, 2, 4, rng);
        Mat b = random_mat(f, 3, 4, rng);
        // dim(A ∩ B) = dim A + dim B - dim(A + B)
        EXPECT_EQ(rank(row_space_intersection(a, b)), rank(a) + rank(b) - rank(vstack(a, b)));
        EXPECT_TRUE(row_space_contains(a, row_space_intersection(a, b)));
        EXPECT_TRUE(row_space_contains(b, row_space_intersection(a, b)));
    }
}

TEST(Poly, DivmodIdentity) {
    PrimeField f(5);
    Poly a(f, {1, 2, 3, 4});
    Poly b(f, {2, 1});
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(divmod(a, Poly(f)), std::domain_error);
}

TEST(Poly, ToString) {
    PrimeField f(2);
    EXPECT_EQ(Poly(f, {1, 0, 0, 1}).to_string(), "t^3 + 1");
}

TEST(Poly, IrreducibilityOverF2) {
    PrimeField f(2);
    EXPECT_TRUE(is_irreducible(Poly(f, {1, 1, 1})));       // t^2+t+1
    EXPECT_FALSE(is_irreducible(Poly(f, {1, 0, 1})));      // (t+1)^2
    EXPECT_TRUE(is_irreducible(Poly(f, {1, 1, 0, 1})));    // t^3+t+1
    EXPECT_FALSE(is_irreducible(Poly(f, {0, 1, 0, 1})));
}

TEST(Poly, CoprimeFactorization) {
    PrimeField f(2);
    // t^2 (t+1): splits
    auto split = coprime_factorization(Poly(f, {0, 0, 1, 1}));
    ASSERT_TRUE(split);
    EXPECT_EQ(split->first * split->second, Poly(f, {0, 0, 1, 1}));
    EXPECT_EQ(poly_gcd(split->first, split->second).degree(), 0);
    // (t^2+t+1)^2 is primary
    EXPECT_FALSE(coprime_factorization(Poly(f, {1, 1, 1}) * Poly(f, {1, 1, 1})));
}

TEST(Poly, MinimalPolynomialAnnihilates) {
    std::mt19937_64 rng(21);
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 60; ++trial) {
            Mat m = random_mat(f, 4, 4, rng);
            Poly mp = minimal_polynomial(m);
            EXPECT_TRUE(evaluate(mp, m).is_zero());
            EXPECT_EQ(mp.leading(), 1u);
            // no proper divisor of lower degree annihilates: check every
            // monic polynomial of smaller degree (degree <= 3 over F_p)
            for (int deg = 0; deg < mp.degree(); ++deg) {
                std::vector<Residue> c(deg + 1, 0);
                c[deg] = 1;
                for (;;) {
                    EXPECT_FALSE(evaluate(Poly(f, c), m).is_zero());
                    int i = 0;
                    while (i < deg && ++c[i] == p) c[i++] = 0;
                    if (i == deg) break;
                }
            }
        }
    }
}

TEST(Poly, CoprimeSplitDimensions) {
    PrimeField f(2);
    Mat m = Mat::from_rows(f, {{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    Poly mp = minimal_polynomial(m);
    auto split = coprime_factorization(mp);
    ASSERT_TRUE(split);
    auto [k1, k2] = coprime_split(m, split->first, split->second);
    EXPECT_EQ(k1.rows() + k2.rows(), 3u);
    EXPECT_THROW(coprime_split(m, mp, Poly::constant(f, 1)), std::invalid_argument);
}
