#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "sumrank/bounds.hpp"
#include "sumrank/pmds.hpp"
#include "sumrank/recipe.hpp"

using namespace sumrank;

namespace {

BuiltCode desk_instance(std::size_t nu) {
    Recipe rec;
    rec.kind = SeedKind::Hamming;
    rec.q = 2;
    rec.r = 2;
    rec.rho = 2;
    rec.ell = 1;
    rec.h = 2;
    rec.pmds = PmdsLift{nu, 0};
    return build_from_recipe(rec);
}

std::vector<Elem> encode(const PmdsCode& code, const std::vector<Elem>& msg) {
    const FieldContext& f = *code.outer.ctx;
    std::vector<Elem> cw(code.length(), 0);
    for (std::size_t j = 0; j < cw.size(); ++j)
        for (std::size_t i = 0; i < msg.size(); ++i)
            cw[j] = f.add(cw[j], f.mul(msg[i], code.global_gen.at(i, j)));
    return cw;
}

}  // namespace

TEST_CASE("local generators") {
    auto f4 = FieldContext::make(2, 2);
    FieldLevel q4 = f4->top_level();

    SUBCASE("nu = r is the identity") {
        CHECK(rs_local_generator(q4, 2, 2) == Matrix::identity(q4, 2));
    }

    SUBCASE("nu = r + 1 appends the all-ones parity column") {
        Matrix g = rs_local_generator(q4, 2, 3);
        CHECK(g.at(0, 0) == 1);
        CHECK(g.at(1, 1) == 1);
        CHECK(g.at(0, 2) == 1);
        CHECK(g.at(1, 2) == 1);
        CHECK(g.at(0, 1) == 0);
        // works over the prime field too
        auto f2 = FieldContext::make(2, 1);
        Matrix g2 = rs_local_generator(f2->top_level(), 2, 3);
        CHECK(g2.rows() == 2);
    }

    SUBCASE("systematic reed-solomon generator over F_4") {
        Matrix g = rs_local_generator(q4, 2, 4);  // delta_loc = 3 needs nu <= q + 1
        // systematic part
        CHECK(g.at(0, 0) == 1);
        CHECK(g.at(1, 1) == 1);
        CHECK(g.at(0, 1) == 0);
        CHECK(g.at(1, 0) == 0);
        // every 2 columns invertible
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) {
                std::vector<std::size_t> cols = {a, b};
                CHECK(rank(g.select_columns(cols)) == 2);
            }
    }

    SUBCASE("length bound for delta_loc > 2") {
        CHECK_THROWS_AS(rs_local_generator(q4, 2, 6), std::invalid_argument);  // 6 > q + 1
        Matrix ext = rs_local_generator(q4, 2, 5);  // exactly q + 1, projective RS
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b) {
                std::vector<std::size_t> cols = {a, b};
                CHECK(rank(ext.select_columns(cols)) == 2);
            }
    }
}

TEST_CASE("construction") {
    SUBCASE("delta_loc = 1 keeps the outer code") {
        BuiltCode built = desk_instance(2);  // nu = r, identity locals
        REQUIRE(built.pmds);
        CHECK(built.pmds->delta_loc == 1);
        CHECK(built.pmds->global_gen == built.code.generator());
    }

    SUBCASE("puncturing the parity coordinate per local set recovers the outer code") {
        BuiltCode built = desk_instance(3);
        REQUIRE(built.pmds);
        const PmdsCode& code = *built.pmds;
        std::vector<std::size_t> systematic_cols;
        for (std::size_t b = 0; b < code.outer.params.g; ++b)
            for (std::size_t j = 0; j < code.outer.params.r; ++j)
                systematic_cols.push_back(b * code.nu + j);
        Matrix restricted = code.global_gen.select_columns(systematic_cols);
        CHECK(restricted == built.code.generator());
    }

    SUBCASE("invalid local generators are rejected") {
        BuiltCode built = desk_instance(3);
        Matrix bad(built.code.level_q(), 2, 3);  // zero matrix, not MDS
        std::vector<Matrix> gens(5, bad);
        CHECK_THROWS_AS(construct_pmds(built.code, gens), std::invalid_argument);
    }
}

TEST_CASE("bruteforce verification") {
    SUBCASE("small instance passes") {
        // trivial seed, q = 5, l = 2, h = 1: g = 2, N = 4, k = 3 over F_25
        Recipe rec;
        rec.kind = SeedKind::Trivial;
        rec.q = 5;
        rec.r = 2;
        rec.ell = 2;
        rec.h = 1;
        rec.pmds = PmdsLift{3, 0};
        BuiltCode built = build_from_recipe(rec);
        REQUIRE(built.pmds);
        CHECK(verify_pmds_bruteforce(*built.pmds));
    }

    SUBCASE("a corrupted global generator fails") {
        BuiltCode built = desk_instance(3);
        PmdsCode broken = *built.pmds;
        // wipe one local group in the generator: its restrictions lose rank
        for (std::size_t i = 0; i < broken.global_gen.rows(); ++i)
            for (std::size_t j = 0; j < 3; ++j) broken.global_gen.set(i, j, 0);
        CHECK_FALSE(verify_pmds_bruteforce(broken));
    }
}

TEST_CASE("erasure correction") {
    BuiltCode built = desk_instance(3);
    const PmdsCode& code = *built.pmds;
    auto gen = oracle::rng(47);
    FieldLevel top = built.ctx->top_level();

    SUBCASE("no erasures reproduces the word") {
        std::vector<Elem> msg(8);
        for (auto& x : msg) x = oracle::random_element(gen, top);
        std::vector<Elem> cw = encode(code, msg);
        std::vector<std::optional<Elem>> w(cw.begin(), cw.end());
        auto res = correct_erasures(code, w);
        REQUIRE(res.ok);
        CHECK(res.codeword == cw);
    }

    SUBCASE("random legal patterns round-trip") {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Elem> msg(8);
            for (auto& x : msg) x = oracle::random_element(gen, top);
            std::vector<Elem> cw = encode(code, msg);
            std::vector<std::optional<Elem>> w(cw.begin(), cw.end());
            // one erasure per local set
            std::vector<std::size_t> erased;
            for (std::size_t b = 0; b < 5; ++b) {
                std::uniform_int_distribution<std::size_t> d(0, 2);
                erased.push_back(b * 3 + d(gen));
            }
            // two extra anywhere else
            while (erased.size() < 7) {
                std::uniform_int_distribution<std::size_t> d(0, 14);
                std::size_t pos = d(gen);
                if (std::find(erased.begin(), erased.end(), pos) == erased.end())
                    erased.push_back(pos);
            }
            for (auto pos : erased) w[pos].reset();
            auto res = correct_erasures(code, w);
            REQUIRE(res.ok);
            CHECK(res.codeword == cw);
        }
    }

    SUBCASE("k + 1 concentrated erasures are uncorrectable") {
        std::vector<Elem> msg(8, 1);
        std::vector<Elem> cw = encode(code, msg);
        std::vector<std::optional<Elem>> w(cw.begin(), cw.end());
        for (std::size_t j = 0; j < 9; ++j) w[j].reset();
        auto res = correct_erasures(code, w);
        CHECK_FALSE(res.ok);
        CHECK(res.reason == "uncorrectable");
    }

    SUBCASE("a non-codeword is reported as inconsistent") {
        std::vector<Elem> msg(8, 1);
        std::vector<Elem> cw = encode(code, msg);
        cw[0] = built.ctx->add(cw[0], 1);  // now off the code
        std::vector<std::optional<Elem>> w(cw.begin(), cw.end());
        auto res = correct_erasures(code, w);
        CHECK_FALSE(res.ok);
        CHECK(res.reason == "inconsistent");
    }
}

TEST_CASE("field-size lower bounds hold for the built instance") {
    BuiltCode built = desk_instance(3);
    BoundQuery query = bound_query_for(built.code.params);
    query.delta = built.pmds->delta_loc;
    BoundReport rep = evaluate_bounds(query);
    CHECK(rep.all_ok());
}
