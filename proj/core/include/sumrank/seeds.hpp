#ifndef SUMRANK_SEEDS_HPP
#define SUMRANK_SEEDS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sumrank/matrix.hpp"

namespace sumrank {

enum class SeedKind { Trivial, Mds, Hamming, Bch, Hermitian };

std::string seed_kind_name(SeedKind k);
SeedKind seed_kind_from_name(const std::string& s);

/// Hamming-metric seed code over F_{q^r}: full-rank parity-check matrix H
/// (rho x mu) whose code is guaranteed to have minimum distance at least
/// guaranteed_distance. The guarantee is a stored lower bound, never
/// recomputed as exact.
struct SeedCode {
    SeedKind kind;
    std::uint64_t q = 0;
    std::size_t r = 0;
    std::size_t mu = 0;
    std::size_t rho = 0;
    std::size_t guaranteed_distance = 0;
    Matrix H;
};

/// Partition of {0..mu-1} into q^r-cyclotomic cosets, plus the order
/// s = ord_mu(q^r). Cosets are sorted internally and listed by smallest
/// member.
struct CyclotomicData {
    std::uint64_t modulus = 0;  // mu
    std::uint64_t base = 0;     // q^r
    std::uint64_t s = 0;
    std::vector<std::vector<std::uint64_t>> cosets;
    std::vector<std::uint64_t> defining_set;  // filled when a BCH instance is built
};

inline constexpr std::size_t kMaxSeedLength = 4096;

CyclotomicData cyclotomic_cosets(std::uint64_t qr, std::uint64_t mu);

/// Union C_b u ... u C_{b+t-1} (indices mod mu), sorted.
std::vector<std::uint64_t> bch_defining_set(const CyclotomicData& data, std::uint64_t b,
                                            std::size_t t);

/// mu = rho = 1, H = (1): the zero code with the d = mu + 1 convention,
/// lifting to duals of linearized Reed-Solomon codes.
SeedCode trivial_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r);

/// t x mu Vandermonde parity check over F_{q^r}, projectively extended with
/// the column (0..0,1) when mu = q^r + 1; distance t + 1.
SeedCode mds_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                  std::size_t mu, std::size_t t);

/// Columns are the canonical projective-point transversal of F_{q^r}^rho
/// (first nonzero coordinate 1, lexicographic order); distance 3.
SeedCode hamming_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                      std::size_t rho);

/// Primitive BCH seed: mu = q^(r s) - 1, defining set C_b u ... u C_{b+t-1},
/// parity rows expanded from F_{q^(r s)} over F_{q^r}; distance t + 1 by the
/// BCH bound.
SeedCode bch_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                  std::size_t s, std::size_t t, std::uint64_t b = 0);

/// One-point code on the Hermitian curve y^q0 + y = x^(q0+1) over F_{q^r},
/// q0 = sqrt(q^r), with G = (mu - h - 1) Q at the point at infinity;
/// rho = h + genus and distance h + 1 by the Goppa bound.
SeedCode hermitian_seed(std::shared_ptr<const FieldContext> ctx, std::uint64_t q, std::size_t r,
                        std::size_t h);

/// gamma_j = sum_i delta[i] H[i][j]; M_delta(gamma) reconstructs H exactly,
/// and gamma inherits (guaranteed_distance - 1)-wise independence over
/// F_{q^r}.
std::vector<Elem> seed_to_gamma(const SeedCode& seed, const Basis& delta);

/// Power basis of F_{q^(r rho)} over F_{q^r}. Any basis yields an equivalent
/// code; this is the deterministic default.
Basis default_delta_basis(const FieldContext& ctx, const SeedCode& seed);

}  // namespace sumrank

#endif
