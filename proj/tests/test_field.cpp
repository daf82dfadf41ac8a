#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "sumrank/field.hpp"

using namespace sumrank;

TEST_CASE("prime field F_2") {
    auto f = FieldContext::make(2, 1);
    CHECK(f->order() == 2);
    CHECK(f->primitive() == 1);
    CHECK(f->add(1, 1) == 0);
    CHECK(f->mul(1, 1) == 1);
}

TEST_CASE("F_4 group structure") {
    auto f = FieldContext::make(2, 2);
    std::multiset<std::uint64_t> orders;
    for (Elem x = 1; x < 4; ++x) orders.insert(f->mul_order(x));
    CHECK(orders == std::multiset<std::uint64_t>{1, 3, 3});
}

TEST_CASE("deterministic construction is frozen") {
    auto f4 = FieldContext::make(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->primitive() == 2);  // the class of x

    auto f16 = FieldContext::make(2, 4);
    CHECK(f16->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});  // x^4 + x + 1
    CHECK(f16->primitive() == 2);

    auto f9 = FieldContext::make(3, 2);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
    CHECK(f9->primitive() == 4);                                  // 1 + x
    CHECK(f9->mul_order(4) == 8);

    // same parameters give the same context every time
    auto again = FieldContext::make(3, 2);
    CHECK(again->modulus() == f9->modulus());
    CHECK(again->primitive() == f9->primitive());
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldContext::make(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::make(2, 41), CapError);
}

TEST_CASE("subfield fixed point counts in F_{2^12}") {
    auto f = FieldContext::make(2, 12);
    for (unsigned a : {1u, 2u, 3u, 4u, 6u, 12u}) {
        std::uint64_t fixed = 0;
        const std::uint64_t qa = std::uint64_t(1) << a;
        for (Elem x = 0; x < f->order(); ++x)
            if (f->pow(x, qa) == x) ++fixed;
        CHECK(fixed == qa);
        CHECK(f->level(a).cardinality() == qa);
    }
}

TEST_CASE("frobenius") {
    auto f = FieldContext::make(2, 4);
    CHECK(frobenius(*f, 0, 4) == 0);
    CHECK(frobenius(*f, 1, 4) == 1);
    for (Elem x : f->level(2).elements()) CHECK(frobenius(*f, x, 4) == x);
    Elem g = f->primitive();
    CHECK(frobenius(*f, g, 4) == f->pow(g, 4));
    CHECK(frobenius(*f, frobenius(*f, g, 4), 4) == g);  // order L/a = 2
    CHECK_THROWS_AS(frobenius(*f, g, 8), std::invalid_argument);

    SUBCASE("field automorphism, exhaustive for |field| <= 256") {
        auto f256 = FieldContext::make(2, 8);
        for (Elem x = 0; x < 256; ++x)
            for (Elem y = 0; y < 256; ++y) {
                CHECK(frobenius(*f256, f256->mul(x, y), 16) ==
                      f256->mul(frobenius(*f256, x, 16), frobenius(*f256, y, 16)));
                CHECK(frobenius(*f256, f256->add(x, y), 16) ==
                      f256->add(frobenius(*f256, x, 16), frobenius(*f256, y, 16)));
            }
        auto f81 = FieldContext::make(3, 4);
        for (Elem x = 0; x < 81; ++x)
            for (Elem y = 0; y < 81; ++y) {
                CHECK(frobenius(*f81, f81->mul(x, y), 3) ==
                      f81->mul(frobenius(*f81, x, 3), frobenius(*f81, y, 3)));
                CHECK(frobenius(*f81, f81->add(x, y), 3) ==
                      f81->add(frobenius(*f81, x, 3), frobenius(*f81, y, 3)));
            }
    }
}

TEST_CASE("truncated norms") {
    auto f4 = FieldContext::make(2, 2);
    Elem w = f4->primitive();
    CHECK(truncated_norm(*f4, w, 2, 2) == 1);  // sigma(w) w = w^2 w = w^3

    auto f16 = FieldContext::make(2, 4);
    for (Elem a = 0; a < 16; ++a) CHECK(truncated_norm(*f16, a, 4, 0) == 1);
    for (std::uint64_t i = 1; i <= 4; ++i) CHECK(truncated_norm(*f16, 0, 4, i) == 0);
    // a in F_q: N_i(a) = a^i
    for (Elem a : f16->level(2).elements())
        for (std::uint64_t i = 0; i <= 5; ++i)
            if (a != 0) CHECK(truncated_norm(*f16, a, 4, i) == f16->pow(a, i));
    CHECK_THROWS_AS(truncated_norm(*f16, 3, 5, 1), std::invalid_argument);

    SUBCASE("matches the literal product and the recursion, fields <= 256") {
        for (auto [p, L, q] : {std::tuple<std::uint64_t, unsigned, std::uint64_t>{2, 8, 4},
                               {2, 8, 16}, {3, 4, 9}, {2, 4, 2}}) {
            auto f = FieldContext::make(p, L);
            for (Elem a = 0; a < f->order(); ++a)
                for (std::uint64_t i = 0; i <= 6; ++i) {
                    Elem n = truncated_norm(*f, a, q, i);
                    CHECK(n == oracle::truncated_norm(*f, a, q, i));
                    // N_{i+1}(a) = sigma(N_i(a)) a
                    CHECK(truncated_norm(*f, a, q, i + 1) == f->mul(f->pow(n, q), a));
                }
        }
    }
}

TEST_CASE("coords over subfield") {
    auto f16 = FieldContext::make(2, 4);
    Elem g = f16->primitive();
    Basis b(f16->top_level(), f16->prime_level(), {1, g, f16->pow(g, 2), f16->pow(g, 3)});

    CHECK(b.coords(0) == std::vector<Elem>{0, 0, 0, 0});
    CHECK(b.coords(1) == std::vector<Elem>{1, 0, 0, 0});

    auto gen = oracle::rng(7);
    for (int i = 0; i < 100; ++i) {
        Elem x = oracle::random_element(gen, f16->top_level());
        auto c = b.coords(x);
        Elem back = 0;
        for (std::size_t j = 0; j < 4; ++j)
            back = f16->add(back, f16->mul(c[j], b.vec()[j]));
        CHECK(back == x);
    }

    SUBCASE("identity on random elements per tower") {
        auto f64 = FieldContext::make(2, 6);
        auto f729 = FieldContext::make(3, 6);
        for (auto [ctx, top_deg, bot_deg] :
             {std::tuple<const FieldContext*, unsigned, unsigned>{f64.get(), 6, 2},
              {f64.get(), 6, 3},
              {f729.get(), 6, 2}}) {
            Basis pb = Basis::power_basis(ctx->level(top_deg), ctx->level(bot_deg));
            auto gen2 = oracle::rng(11);
            for (int i = 0; i < 1000; ++i) {
                Elem x = oracle::random_element(gen2, ctx->level(top_deg));
                CHECK(pb.combine(pb.coords(x)) == x);
            }
        }
    }

    SUBCASE("element outside the top level is rejected") {
        auto f = FieldContext::make(2, 4);
        Basis pb = Basis::power_basis(f->level(2), f->prime_level());
        CHECK_THROWS_AS(pb.coords(f->primitive()), std::invalid_argument);
    }

    SUBCASE("dependent or short basis is rejected") {
        auto f = FieldContext::make(2, 4);
        CHECK_THROWS_AS(Basis(f->top_level(), f->prime_level(), {1, g, g, 5}),
                        std::invalid_argument);
        CHECK_THROWS_AS(Basis(f->top_level(), f->prime_level(), {1, g}), std::invalid_argument);
    }
}

TEST_CASE("rank over subfield and t-wise independence of field elements") {
    auto f16 = FieldContext::make(2, 4);
    FieldLevel f4 = f16->level(2);
    Elem g = f16->primitive();

    // {1, g} independent over F_4, {1, g, g^2...} ranks cap at [F_16:F_4] = 2
    std::vector<Elem> one_g = {1, g};
    CHECK(rank_over_subfield(*f16, one_g, f4) == 2);
    std::vector<Elem> three = {1, g, f16->pow(g, 2)};
    CHECK(rank_over_subfield(*f16, three, f4) == 2);

    std::vector<Elem> with_zero = {0, g};
    CHECK_FALSE(is_t_wise_independent_over_subfield(*f16, with_zero, f4, 1));
    std::vector<Elem> distinct = {1, g, f16->pow(g, 2)};
    CHECK(is_t_wise_independent_over_subfield(*f16, distinct, f4, 1));
}

TEST_CASE("conjugacy") {
    auto f9 = FieldContext::make(3, 2);
    FieldLevel top = f9->top_level();

    SUBCASE("agreement with the exhaustive c-search in F_9") {
        for (Elem a = 1; a < 9; ++a)
            for (Elem b = 1; b < 9; ++b)
                CHECK(is_conjugate(top, a, b, 3) == oracle::conjugate(top, a, b, 3));
    }

    SUBCASE("reflexive, and q = 2 has a single class") {
        auto f16 = FieldContext::make(2, 4);
        for (Elem a = 1; a < 16; ++a) {
            CHECK(is_conjugate(f16->top_level(), a, a, 2));
            CHECK(is_conjugate(f16->top_level(), 1, a, 2));
        }
    }

    SUBCASE("representatives") {
        auto f16 = FieldContext::make(2, 4);
        auto reps2 = conjugacy_representatives(f16->top_level(), 2, 1);
        CHECK(reps2 == std::vector<Elem>{1});
        CHECK_THROWS_AS(conjugacy_representatives(f16->top_level(), 2, 2),
                        std::invalid_argument);

        auto reps3 = conjugacy_representatives(top, 3, 2);
        CHECK(reps3[0] == 1);
        CHECK(reps3[1] == f9->primitive());
        CHECK_FALSE(is_conjugate(top, reps3[0], reps3[1], 3));

        // q = 4, m = 2: gcd(3, 5) = 1, F_4^* is a full set of representatives
        CHECK(base_field_reps_valid(4, 2));
        auto repsF4 = conjugacy_representatives(f16->top_level(), 4, 3, RepChoice::BaseField);
        for (std::size_t i = 0; i < repsF4.size(); ++i) {
            CHECK(f16->level(2).contains(repsF4[i]));
            for (std::size_t j = i + 1; j < repsF4.size(); ++j)
                CHECK_FALSE(is_conjugate(f16->top_level(), repsF4[i], repsF4[j], 4));
        }
        // q = 2, m = 2: gcd(1, 3) = 1 holds; q = 3, m = 2: gcd(2, 4) = 2 fails
        CHECK(base_field_reps_valid(2, 2));
        CHECK_FALSE(base_field_reps_valid(3, 2));
        CHECK_THROWS_AS(conjugacy_representatives(top, 3, 2, RepChoice::BaseField),
                        std::invalid_argument);
    }

    SUBCASE("zero arguments are rejected") {
        CHECK_THROWS_AS(is_conjugate(top, 0, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(is_conjugate(top, 1, 0, 3), std::invalid_argument);
    }
}

TEST_CASE("field embedding is a homomorphism") {
    auto f4 = FieldContext::make(2, 2);
    auto f16 = FieldContext::make(2, 4);
    FieldEmbedding emb(f4, f16);
    for (Elem x = 0; x < 4; ++x)
        for (Elem y = 0; y < 4; ++y) {
            CHECK(emb.map(f4->add(x, y)) == f16->add(emb.map(x), emb.map(y)));
            CHECK(emb.map(f4->mul(x, y)) == f16->mul(emb.map(x), emb.map(y)));
        }
    CHECK(emb.map(0) == 0);
    CHECK(emb.map(1) == 1);
    // injective, lands in the degree-2 level
    std::set<Elem> images;
    for (Elem x = 0; x < 4; ++x) {
        images.insert(emb.map(x));
        CHECK(f16->level(2).contains(emb.map(x)));
    }
    CHECK(images.size() == 4);
}

TEST_CASE("level element enumeration is sorted and complete") {
    auto f = FieldContext::make(2, 6);
    for (unsigned a : {1u, 2u, 3u, 6u}) {
        auto elems = f->level(a).elements();
        CHECK(elems.size() == (std::uint64_t(1) << a));
        CHECK(std::is_sorted(elems.begin(), elems.end()));
        for (Elem x : elems) CHECK(f->level(a).contains(x));
    }
}

TEST_CASE("prime power factoring") {
    CHECK(factor_prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
    CHECK(factor_prime_power(9) == std::pair<std::uint64_t, unsigned>{3, 2});
    CHECK(factor_prime_power(7) == std::pair<std::uint64_t, unsigned>{7, 1});
    CHECK_THROWS_AS(factor_prime_power(6), std::invalid_argument);
    CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
}
