#ifndef SUMRANK_BOUNDS_HPP
#define SUMRANK_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumrank/msrd.hpp"

namespace sumrank {

enum class BoundStatus { Satisfied, Tight, Violated, NotApplicable };

std::string bound_status_name(BoundStatus s);

struct BoundEntry {
    std::string id;
    std::string description;
    BoundStatus status;
    std::string lhs;  // exact decimal value, empty when not applicable
    std::string rhs;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    bool all_ok() const;  // no violated entry
};

/// Parameters for the bound evaluators. mu defaults to g / ell (ell defaults
/// to 1). delta/nu switch on the locally-repairable bounds.
struct BoundQuery {
    std::uint64_t q = 0;
    std::size_t r = 0;
    std::size_t m = 0;
    std::size_t g = 0;
    std::size_t h = 0;
    std::optional<std::size_t> ell;
    std::optional<std::size_t> mu;
    std::optional<std::size_t> delta;  // local distance of a lifted code
};

/// Evaluates every applicable bound with exact big-integer arithmetic:
/// the sum-rank Singleton count, the necessary field size m >= r min{h, mu},
/// the four g-vs-field-size bounds, and the two field-size lower bounds for
/// locally repairable liftings.
BoundReport evaluate_bounds(const BoundQuery& query);

BoundQuery bound_query_for(const MsrdParams& params);

}  // namespace sumrank

#endif
