#ifndef SUMRANK_RECIPE_HPP
#define SUMRANK_RECIPE_HPP

#include <optional>

#include "sumrank/pmds.hpp"

namespace sumrank {

struct PmdsLift {
    std::size_t nu = 0;
    std::size_t delta_loc = 0;
};

/// Named construction: a seed family with its numeric parameters, the number
/// of conjugacy classes ell, the redundancy h, and an optional local lift.
struct Recipe {
    SeedKind kind = SeedKind::Trivial;
    std::uint64_t q = 0;
    std::size_t r = 0;
    std::size_t ell = 1;
    std::size_t h = 1;
    std::size_t rho = 0;  // hamming
    std::size_t mu = 0;   // mds
    std::size_t t = 0;    // mds, bch
    std::size_t s = 0;    // bch
    std::uint64_t b = 0;  // bch shift
    std::optional<PmdsLift> pmds;
};

struct BuiltCode {
    std::shared_ptr<const FieldContext> ctx;
    MsrdCode code;
    std::optional<PmdsCode> pmds;
};

/// Ambient degree over the prime field required to build the recipe: hosts
/// F_{q^r}, F_{q^(r rho)} and, for BCH seeds, F_{q^(r s)}.
unsigned recipe_ambient_degree(const Recipe& recipe);

/// Validates the recipe, builds the deterministic ambient field, the seed,
/// the MSRD code, and the optional local lift.
BuiltCode build_from_recipe(const Recipe& recipe, const BuildOptions& opts = {});

}  // namespace sumrank

#endif
