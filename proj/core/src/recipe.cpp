#include "sumrank/recipe.hpp"

#include <numeric>
#include <stdexcept>

namespace sumrank {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_capped(std::uint64_t b, std::size_t e) {
    u128 v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= b;
        if (v > FieldContext::kMaxOrder) throw CapError("parameters exceed the desk-scale field cap");
    }
    return std::uint64_t(v);
}

std::size_t seed_rho(const Recipe& rec, std::uint64_t p, unsigned e) {
    switch (rec.kind) {
        case SeedKind::Trivial:
            return 1;
        case SeedKind::Mds:
            if (rec.t == 0 || rec.mu == 0)
                throw std::invalid_argument("mds seed needs --mu and --t");
            return rec.t;
        case SeedKind::Hamming:
            if (rec.rho == 0) throw std::invalid_argument("hamming seed needs --rho");
            return rec.rho;
        case SeedKind::Bch: {
            if (rec.s == 0 || rec.t == 0)
                throw std::invalid_argument("bch seed needs --s and --t");
            const std::uint64_t mu = pow_capped(rec.q, rec.r * rec.s) - 1;
            CyclotomicData cosets = cyclotomic_cosets(pow_capped(rec.q, rec.r), mu);
            return bch_defining_set(cosets, rec.b, rec.t).size();
        }
        case SeedKind::Hermitian: {
            const unsigned er = e * unsigned(rec.r);
            if (er % 2 != 0)
                throw std::invalid_argument("hermitian seed needs q^r to be a square");
            const std::uint64_t q0 = pow_capped(p, er / 2);
            return rec.h + std::size_t(q0 * (q0 - 1) / 2);
        }
    }
    throw std::logic_error("unknown seed kind");
}

}  // namespace

unsigned recipe_ambient_degree(const Recipe& rec) {
    auto [p, e] = factor_prime_power(rec.q);
    if (rec.r == 0) throw std::invalid_argument("r must be positive");
    const std::size_t rho = seed_rho(rec, p, e);
    unsigned L = e * unsigned(rec.r) * unsigned(rho);
    if (rec.kind == SeedKind::Bch) L = std::lcm(L, e * unsigned(rec.r) * unsigned(rec.s));
    pow_capped(p, L);  // cap check
    return L;
}

BuiltCode build_from_recipe(const Recipe& rec, const BuildOptions& opts) {
    auto [p, e] = factor_prime_power(rec.q);
    const unsigned L = recipe_ambient_degree(rec);
    auto ctx = FieldContext::make(p, L);

    SeedCode seed = [&] {
        switch (rec.kind) {
            case SeedKind::Trivial:
                return trivial_seed(ctx, rec.q, rec.r);
            case SeedKind::Mds:
                return mds_seed(ctx, rec.q, rec.r, rec.mu, rec.t);
            case SeedKind::Hamming:
                return hamming_seed(ctx, rec.q, rec.r, rec.rho);
            case SeedKind::Bch:
                return bch_seed(ctx, rec.q, rec.r, rec.s, rec.t, rec.b);
            case SeedKind::Hermitian:
                return hermitian_seed(ctx, rec.q, rec.r, rec.h);
        }
        throw std::logic_error("unknown seed kind");
    }();

    BuiltCode built;
    built.code = build_msrd_code(ctx, seed, rec.ell, rec.h, opts);
    built.ctx = std::move(ctx);
    if (rec.pmds) {
        std::size_t nu = rec.pmds->nu;
        if (nu == 0 && rec.pmds->delta_loc > 0) nu = rec.r + rec.pmds->delta_loc - 1;
        if (nu == 0) throw std::invalid_argument("pmds lift needs --nu or --delta");
        if (rec.pmds->delta_loc > 0 && nu != rec.r + rec.pmds->delta_loc - 1)
            throw std::invalid_argument("nu and delta are inconsistent: nu = r + delta - 1");
        built.pmds = construct_pmds(built.code, nu);
    }
    return built;
}

}  // namespace sumrank
