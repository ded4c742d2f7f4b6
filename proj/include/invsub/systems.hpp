// The categories S(n): nilpotent operators T on V with T^n = 0 and two
// T-invariant subspaces U1 ⊆ U2 ⊆ V, realized as explicit matrices over F_p.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsub/dimtype.hpp"
#include "invsub/exactmat.hpp"

namespace invsub {

/// A quadruple (V, T, U1, U2) with V = F_p^dim.
///
/// T acts on column vectors. U1 and U2 are given by basis rows. Construction
/// checks only shapes; the category invariants are evaluated on first query
/// and cached, so malformed input can be inspected rather than thrown. The
/// cache makes concurrent first queries on one shared object unsafe.
class System {
public:
    System(PrimeField field, unsigned n, Mat t, Mat u1, Mat u2);

    /// The zero system of S(n).
    static System zero(PrimeField field, unsigned n);
    /// Jordan block J_size (T e_{k+1} = e_k) with the given subspaces spanned
    /// by the first `dim_u1` and `dim_u2` basis vectors (the T-invariant flags).
    static System jordan_block(PrimeField field, unsigned n, std::size_t size, std::size_t dim_u1,
                               std::size_t dim_u2);

    const PrimeField& field() const noexcept { return t_.field(); }
    unsigned n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return t_.rows(); }
    const Mat& t() const noexcept { return t_; }
    const Mat& u1() const noexcept { return u1_; }
    const Mat& u2() const noexcept { return u2_; }

    bool valid() const { return violations().empty(); }
    const std::vector<std::string>& violations() const;

    /// Same system with U1 and U2 replaced by their canonical echelon bases.
    System canonicalized() const;

    friend bool operator==(const System& a, const System& b) {
        return a.n_ == b.n_ && a.t_ == b.t_ && a.u1_ == b.u1_ && a.u2_ == b.u2_;
    }

private:
    unsigned n_;
    Mat t_;
    Mat u1_;
    Mat u2_;
    mutable std::optional<std::vector<std::string>> violations_;
};

/// A linear map between ambient spaces, target.dim x source.dim.
struct Morphism {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    Mat map;
};

std::vector<std::string> validate(const System& s);
/// Throws std::invalid_argument for an invalid system.
DimensionType dim_type(const System& s);
/// E1 = (k,0,k,k), E2 = (k,0,0,k), E3 = (k,0,0,0).
System simple(int i, PrimeField field = PrimeField(2), unsigned n = 1);
System direct_sum(const System& a, const System& b);
System direct_sum(const std::vector<System>& parts, PrimeField field, unsigned n);
/// The isomorphic copy (P T P^-1, P U1, P U2) for invertible P.
System base_change(const System& s, const Mat& p);

bool is_morphism(const System& a, const System& b, const Mat& f);
/// Canonical basis of Hom(a, b) as vectorized maps (row-major f[r][c]).
Mat hom_space(const System& a, const System& b);
std::vector<Morphism> hom_basis(const System& a, const System& b);
std::size_t hom_dim(const System& a, const System& b);
std::vector<Mat> end_basis(const System& s);

/// Restriction of s to a T-invariant subspace W (echelon basis rows) that is
/// compatible with the flag, i.e. U_i = (U_i ∩ W) ⊕ (U_i ∩ W') for some
/// invariant complement W'. Coordinates are taken in the echelon basis of W.
System restrict_to(const System& s, const Mat& w);

struct DecomposeOptions {
    std::uint64_t seed = 0;
    /// Random endomorphisms tried per node; 0 selects 30 * dim End.
    std::size_t max_trials = 0;
    /// Run the exhaustive idempotent scan when |F|^(dim End) <= 2^exhaustive_log2.
    bool exhaustive_certify = true;
    unsigned exhaustive_log2 = 20;
    /// Each trial first tries the Fitting split of phi - lambda for lambda in
    /// F_p (p <= 7). When that fails, the full minimal polynomial is factored
    /// unless this is off.
    bool min_poly_splits = true;
};

struct Decomposition {
    std::vector<System> parts;
    /// True when every leaf was shown indecomposable exactly.
    bool certified = true;
};

/// Krull-Remak-Schmidt decomposition by Fitting splits of random
/// endomorphisms, with an exact idempotent scan as the certificate.
/// Parts are sorted by dimension type; deterministic given the seed.
Decomposition decompose(const System& s, const DecomposeOptions& opts);
Decomposition decompose(const System& s, std::uint64_t seed = 0, std::size_t max_trials = 0);

/// Exact check that End(s) has no idempotent other than 0 and 1, when the
/// scan fits the budget; nullopt otherwise.
std::optional<bool> is_indecomposable_exact(const System& s, unsigned log2_budget = 20);

bool is_isomorphic(const System& a, const System& b, std::uint64_t seed = 0);

/// The duality R: (D(V/U2) ⊆ D(V/U1) ⊆ D(V)) with T replaced by its transpose.
System dualize(const System& s);

/// Random valid system of type t; throws std::runtime_error when the sampling
/// budget is exhausted. Without `base_change` the operator is left in Jordan
/// form, which gives the same distribution over isomorphism classes.
System random_system(const DimensionType& t, unsigned n, PrimeField field, std::uint64_t seed,
                     bool base_change = true);

/// All partitions of `total` into parts <= max_part, parts in decreasing order.
std::vector<std::vector<std::size_t>> partitions(std::size_t total, std::size_t max_part);
/// Nilpotent Jordan matrix with the given block sizes.
Mat jordan_matrix(PrimeField field, const std::vector<std::size_t>& blocks);

}  // namespace invsub
