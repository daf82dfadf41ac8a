#ifndef SUMRANK_MSRD_HPP
#define SUMRANK_MSRD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sumrank/seeds.hpp"

namespace sumrank {

/// Parameter bundle of a sum-rank code built from an extended Moore matrix:
/// g = ell * mu matrix sets of r columns each, length N = g r, redundancy h,
/// dimension k = N - h, over F_{q^m} with base field F_q.
struct MsrdParams {
    std::uint64_t q = 0;
    std::size_t r = 0;
    std::size_t m = 0;
    std::size_t ell = 0;
    std::size_t mu = 0;
    std::size_t g = 0;
    std::size_t N = 0;
    std::size_t h = 0;
    std::size_t k = 0;
    std::size_t t = 0;  // min(h, mu)

    void validate() const;
};

struct BuildOptions {
    RepChoice reps = RepChoice::PrimitivePowers;
    bool bruteforce_verify = false;  // run the GL oracle after the theorem checker
};

/// A linear MSRD code described by its parity check M_h(a, beta). Immutable.
struct MsrdCode {
    std::shared_ptr<const FieldContext> ctx;
    MsrdParams params;
    std::vector<Elem> a;     // ell pairwise non-conjugate class representatives
    std::vector<Elem> beta;  // mu * r evaluation points, shared across classes
    Matrix parity_check;     // h x N over F_{q^m}
    std::vector<Elem> alpha_vec;  // basis of F_{q^r} over F_q used in the tensor product
    SeedCode provenance;

    FieldLevel level_qm() const;
    FieldLevel level_q() const;
    Basis alpha() const;
    /// Canonical generator: null space basis of the parity check (k x N).
    Matrix generator() const;
};

/// alpha (x) gamma = (alpha_1 gamma_1, ..., alpha_r gamma_1 | ... | alpha_1 gamma_mu, ...).
std::vector<Elem> tensor_beta(const Basis& alpha, std::span<const Elem> gamma);

/// M_h(a, beta): entry in row k+1, class i, column j is beta_{i,j}^(q^k) N_k(a_i).
/// Representatives must be pairwise non-conjugate; per-class vectors may
/// differ (the general matrix builder used by the MDS characterization).
Matrix extended_moore_matrix(FieldLevel qm_level, std::uint64_t q, std::span<const Elem> a,
                             const std::vector<std::vector<Elem>>& beta_blocks, std::size_t h);

/// The theorem-side MSRD test in rank form: every Gamma of size min(h, mu)
/// spans the full r*|Gamma| dimensions over F_q.
bool check_msrd_conditions(const FieldContext& ctx, std::span<const Elem> beta, std::size_t r,
                           std::size_t mu, std::size_t h, FieldLevel q_level);

/// The oracle-side MSRD test: M diag(A_1..A_g) is an MDS matrix for every
/// tuple of invertible A_i over F_q. Identity tuple first, short-circuits on
/// the first failure. Desk cap |GL_r(F_q)|^g <= enumeration_cap().
bool is_msrd_matrix_bruteforce(const Matrix& m, std::size_t g, std::size_t r, FieldLevel q_level);

/// Assembles the code: gamma from the seed, beta = alpha (x) gamma,
/// representatives from the level primitive (or F_q^* under the flag), parity
/// check M_h(a, beta). Validates with the theorem checker; the GL oracle is
/// opt-in.
MsrdCode build_msrd_code(std::shared_ptr<const FieldContext> ctx, const SeedCode& seed,
                         std::size_t ell, std::size_t h, const BuildOptions& opts = {});

/// Sum of the F_q-ranks of the g matrix representations of the blocks.
std::size_t sum_rank_weight(std::span<const Elem> v, std::size_t g, std::size_t r,
                            const Basis& alpha_m);

/// Minimum sum-rank weight over all nonzero codewords of the row space.
/// Desk cap q^(m * rows) <= enumeration_cap().
std::size_t min_sum_rank_distance_exhaustive(const Matrix& generator, std::size_t g, std::size_t r,
                                             const Basis& alpha_m);

struct CodePair {
    Matrix generator;
    Matrix parity_check;
};

/// Dual description: the parity check becomes the generator and vice versa.
CodePair dual_code(const MsrdCode& code);

/// Projection of a code onto surviving columns, with per-block column counts.
struct DerivedCode {
    std::vector<std::size_t> block_cols;  // r_i <= r per retained block
    Matrix generator;
    Matrix parity_check;
};

/// Deletes the given columns from the code (generator side); the parity
/// check of the projection is recomputed.
DerivedCode puncture(const MsrdCode& code, std::span<const std::size_t> cols);

/// Deletes the given columns from the parity check, i.e. shortens the primal
/// code (equivalently punctures the dual).
DerivedCode shorten(const MsrdCode& code, std::span<const std::size_t> cols);

/// C (x) F_{q^(m M)}: same parity-check entries re-embedded into the ambient
/// field of degree M times larger; distance and MSRD-ness are preserved.
MsrdCode extend_scalars(const MsrdCode& code, unsigned M);

}  // namespace sumrank

#endif
