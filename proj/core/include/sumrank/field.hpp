#ifndef SUMRANK_FIELD_HPP
#define SUMRANK_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumrank {

/// Packed element of F_{p^L}: coefficient vector over F_p in base-p digits,
/// digit i = coefficient of x^i. Always < p^L.
using Elem = std::uint64_t;

class FieldContext;

/// Subfield F_{p^degree} of an ambient FieldContext, realized as the set of
/// Frobenius fixed points {x : x^(p^degree) = x}. Non-owning.
struct FieldLevel {
    const FieldContext* ctx = nullptr;
    unsigned degree = 0;  // over the prime field; divides ambient degree

    std::uint64_t cardinality() const;
    bool contains(Elem x) const;
    Elem primitive() const;                // generator of the level's multiplicative group
    std::vector<Elem> elements() const;    // all elements, ascending packed value
    bool operator==(const FieldLevel& o) const { return ctx == o.ctx && degree == o.degree; }
    bool operator!=(const FieldLevel& o) const { return !(*this == o); }
};

/// Thrown when a desk-scale enumeration cap would be exceeded.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration budget for brute-force oracles (default 2^24 work items).
/// Overridable through the SUMRANK_ENUM_CAP environment variable; a warning
/// is printed to stderr when the override is active.
std::uint64_t enumeration_cap();

/// q = p^e with p prime, e >= 1; throws when q is not a prime power.
std::pair<std::uint64_t, unsigned> factor_prime_power(std::uint64_t q);

/// One ambient field F_{p^L}. All subfields of the tower live inside it as
/// levels; there is never more than one representation of a given subfield.
/// Immutable after construction and safe to share across threads.
class FieldContext {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 40;
    static constexpr std::uint64_t kLogTableMaxOrder = std::uint64_t(1) << 20;

    /// Deterministic construction: the modulus is the monic irreducible of
    /// degree L over F_p with the fewest nonzero terms, ties broken by
    /// smallest packed coefficient value; the primitive element is the
    /// smallest element (packed order) of multiplicative order p^L - 1.
    static std::shared_ptr<const FieldContext> make(std::uint64_t p, unsigned L);

    /// Rebuild from serialized parts; validates irreducibility and
    /// primitivity.
    static std::shared_ptr<const FieldContext> from_parts(std::uint64_t p, unsigned L,
                                                          std::vector<std::uint32_t> modulus,
                                                          Elem primitive);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return L_; }
    std::uint64_t order() const { return q_; }  // p^L
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    Elem primitive() const { return primitive_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    std::uint32_t coeff(Elem a, unsigned i) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;

    std::uint64_t mul_order(Elem a) const;  // order of a in the multiplicative group

    FieldLevel level(unsigned degree_over_prime) const;
    FieldLevel prime_level() const { return level(1); }
    FieldLevel top_level() const { return level(L_); }
    /// Level holding exactly q = p^a elements; rejects q that is not a
    /// subfield cardinality of this context.
    FieldLevel subfield_level(std::uint64_t q) const;

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

private:
    FieldContext(std::uint64_t p, unsigned L, std::vector<std::uint32_t> modulus);
    void find_primitive();
    void build_tables();
    Elem mul_generic(Elem a, Elem b) const;

    std::uint64_t p_;
    unsigned L_;
    std::uint64_t q_;  // p^L
    std::vector<std::uint32_t> modulus_;
    Elem primitive_ = 0;
    std::uint64_t mod_mask_ = 0;  // p == 2: modulus as bitmask

    bool has_tables_ = false;
    std::vector<std::uint32_t> log_;  // index: packed element, value: dlog
    std::vector<Elem> exp_;           // index: dlog, value: packed element
    std::vector<std::uint64_t> primefactors_;  // prime divisors of p^L - 1

    friend struct FieldLevel;
};

/// x -> x^q for a subfield cardinality q of ctx; the Frobenius of the
/// extension over F_q.
Elem frobenius(const FieldContext& ctx, Elem x, std::uint64_t q);

/// Truncated norm N_i(a) = sigma^(i-1)(a) ... sigma(a) a = a^((q^i - 1)/(q - 1))
/// with sigma: x -> x^q. N_0 = 1 (empty product, also for a = 0); N_i(0) = 0
/// for i >= 1.
Elem truncated_norm(const FieldContext& ctx, Elem a, std::uint64_t q, std::uint64_t i);

/// F_q-rank of a set of ambient elements, computed through prime-field
/// vectorization: rank_q(S) = rank_p({s*b : s in S, b basis of F_q/F_p}) / [F_q:F_p].
std::size_t rank_over_subfield(const FieldContext& ctx, std::span<const Elem> elems,
                               FieldLevel q_level);

/// Every subset of <= t distinct elements linearly independent over the
/// subfield, and all elements pairwise distinct.
bool is_t_wise_independent_over_subfield(const FieldContext& ctx, std::span<const Elem> elems,
                                         FieldLevel q_level, std::size_t t);

/// Ordered basis of level_top over level_bottom. Validates independence (and
/// the degree count) at construction and precomputes the coordinate solver.
class Basis {
public:
    Basis(FieldLevel top, FieldLevel bottom, std::vector<Elem> vec);

    /// Power basis (1, g, g^2, ...) of the top level's multiplicative
    /// generator g; always a valid basis since F_bottom(g) = F_top.
    static Basis power_basis(FieldLevel top, FieldLevel bottom);

    FieldLevel top() const { return top_; }
    FieldLevel bottom() const { return bottom_; }
    const std::vector<Elem>& vec() const { return vec_; }
    std::size_t size() const { return vec_.size(); }

    /// Unique coordinates (c_1..c_n) over the bottom level with
    /// x = sum c_i vec[i]; throws if x is not in the top level.
    std::vector<Elem> coords(Elem x) const;
    /// Inverse of coords.
    Elem combine(std::span<const Elem> c) const;

private:
    FieldLevel top_, bottom_;
    std::vector<Elem> vec_;
    // prime-field solver: rref of the vectorized products vec[i]*w_j together
    // with the recorded elimination, applied to fresh right-hand sides
    std::vector<Elem> bottom_basis_;               // F_p-basis w_j of the bottom level
    std::vector<std::vector<std::uint32_t>> elim_;  // row operations over F_p
    std::vector<std::size_t> pivot_of_row_;        // solution slot per eliminated row
    std::size_t nrows_ = 0;
};

enum class RepChoice {
    PrimitivePowers,  // gamma^0, ..., gamma^(l-1) for the level primitive
    BaseField,        // first l elements of F_q^*; valid only under the gcd criterion
};

/// True when gcd(q - 1, (q^m - 1)/(q - 1)) = 1, i.e. when F_q^* itself
/// represents the q - 1 nonzero conjugacy classes of F_{q^m}.
bool base_field_reps_valid(std::uint64_t q, unsigned m);

/// l pairwise non-conjugate nonzero elements of the level F_{q^m}.
std::vector<Elem> conjugacy_representatives(FieldLevel qm_level, std::uint64_t q, std::size_t ell,
                                            RepChoice choice = RepChoice::PrimitivePowers);

/// a ~ b iff b = c^(q-1) a for some nonzero c in the level; decided by
/// (b a^-1)^((q^m-1)/(q-1)) = 1.
bool is_conjugate(FieldLevel qm_level, Elem a, Elem b, std::uint64_t q);

/// Field embedding from one ambient context into a larger one, determined by
/// the smallest root of the source modulus inside the matching sublevel of
/// the target.
class FieldEmbedding {
public:
    FieldEmbedding(std::shared_ptr<const FieldContext> from, std::shared_ptr<const FieldContext> to);
    Elem map(Elem x) const;
    const FieldContext& from() const { return *from_; }
    const FieldContext& to() const { return *to_; }

private:
    std::shared_ptr<const FieldContext> from_, to_;
    std::vector<Elem> root_pows_;
};

}  // namespace sumrank

#endif
