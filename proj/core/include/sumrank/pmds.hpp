#ifndef SUMRANK_PMDS_HPP
#define SUMRANK_PMDS_HPP

#include <optional>

#include "sumrank/msrd.hpp"

namespace sumrank {

/// Locally repairable code built from an MSRD outer code: g local groups of
/// nu = r + delta_loc - 1 coordinates, each the image of one r-column block
/// under a local MDS generator A_i over F_q.
struct PmdsCode {
    MsrdCode outer;
    std::size_t nu = 0;
    std::size_t delta_loc = 0;
    std::vector<Matrix> local_gens;  // g generators, r x nu over F_q
    Matrix global_gen;               // k x (g nu) over F_{q^m}

    std::size_t length() const { return outer.params.g * nu; }
};

/// Systematic r x nu generator of an MDS code over F_q: the identity for
/// nu = r, identity plus an all-ones parity column for nu = r + 1, a
/// systematized (extended) Reed-Solomon generator otherwise (needs
/// nu <= q + 1).
Matrix rs_local_generator(FieldLevel q_level, std::size_t r, std::size_t nu);

/// Global code C_out . diag(A_1..A_g) with explicit local generators; each
/// A_i is checked to generate an MDS code of dimension r.
PmdsCode construct_pmds(const MsrdCode& outer, std::vector<Matrix> local_gens);

/// Uniform lift with rs_local_generator for every block.
PmdsCode construct_pmds(const MsrdCode& outer, std::size_t nu);

/// Every restriction to r coordinates per local group generates an MDS code:
/// all C(nu, r)^g patterns, every k columns of the restricted generator of
/// full rank. Desk cap C(nu, r)^g <= enumeration_cap().
bool verify_pmds_bruteforce(const PmdsCode& code);

struct ErasureResult {
    bool ok = false;
    std::vector<Elem> codeword;  // full corrected codeword when ok
    std::string reason;          // "uncorrectable" or "inconsistent" otherwise
};

/// Solves the linear system on surviving coordinates. Returns the unique
/// codeword agreeing with the survivors, or an explicit failure when the
/// erasure pattern is information-theoretically uncorrectable.
ErasureResult correct_erasures(const PmdsCode& code,
                               std::span<const std::optional<Elem>> word);

}  // namespace sumrank

#endif
