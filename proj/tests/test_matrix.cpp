#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "sumrank/matrix.hpp"

using namespace sumrank;

namespace {

Matrix random_matrix(std::mt19937_64& gen, FieldLevel level, std::size_t rows, std::size_t cols) {
    Matrix m(level, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, oracle::random_element(gen, level));
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto f4 = FieldContext::make(2, 2);
    FieldLevel top = f4->top_level();

    Matrix zero(top, 3, 4);
    CHECK(rref(zero).rank == 0);

    Matrix id = Matrix::identity(top, 3);
    auto r = rref(id);
    CHECK(r.rank == 3);
    CHECK(r.mat == id);

    SUBCASE("rank agrees with the maximal-independent-row search") {
        auto gen = oracle::rng(3);
        for (int i = 0; i < 25; ++i) {
            Matrix m = random_matrix(gen, top, 4, 6);
            CHECK(rank(m) == oracle::matrix_rank(m));
        }
    }

    SUBCASE("idempotent") {
        auto gen = oracle::rng(5);
        for (int i = 0; i < 25; ++i) {
            Matrix m = random_matrix(gen, top, 3, 5);
            Matrix once = rref(m).mat;
            CHECK(rref(once).mat == once);
        }
    }

    SUBCASE("rank equals transpose rank") {
        auto f64 = FieldContext::make(2, 6);
        auto gen = oracle::rng(9);
        for (auto level : {f4->top_level(), f64->top_level()})
            for (int i = 0; i < 200; ++i) {
                Matrix m = random_matrix(gen, level, 3 + i % 3, 4 + i % 4);
                CHECK(rank(m) == rank(m.transpose()));
            }
    }
}

TEST_CASE("null space") {
    auto f16 = FieldContext::make(2, 4);
    FieldLevel top = f16->top_level();

    CHECK(null_space(Matrix::identity(top, 3)).rows() == 0);
    CHECK(null_space(Matrix(top, 4, 4)).rows() == 4);

    auto gen = oracle::rng(13);
    for (int i = 0; i < 20; ++i) {
        Matrix m = random_matrix(gen, top, 2, 5);
        Matrix ns = null_space(m);
        CHECK(ns.rows() == 5 - rank(m));
        for (std::size_t b = 0; b < ns.rows(); ++b)
            for (std::size_t row = 0; row < m.rows(); ++row) {
                Elem acc = 0;
                for (std::size_t j = 0; j < 5; ++j)
                    acc = f16->add(acc, f16->mul(m.at(row, j), ns.at(b, j)));
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("mds matrices") {
    auto f16 = FieldContext::make(2, 4);
    FieldLevel top = f16->top_level();
    Elem g = f16->primitive();

    SUBCASE("single row: nonzero entries") {
        Matrix m(top, 1, 4, {1, g, 3, 7});
        CHECK(is_mds_matrix(m));
        m.set(0, 2, 0);
        CHECK_FALSE(is_mds_matrix(m));
    }

    SUBCASE("zero column fails") {
        Matrix m(top, 2, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            m.set(0, j, 1);
            m.set(1, j, f16->pow(g, j));
        }
        m.set(0, 1, 0);
        m.set(1, 1, 0);
        CHECK_FALSE(is_mds_matrix(m));
    }

    SUBCASE("vandermonde, against the row-combination oracle") {
        Matrix m(top, 2, 5);
        for (std::size_t j = 0; j < 5; ++j) {
            m.set(0, j, 1);
            m.set(1, j, f16->pow(g, j));
        }
        CHECK(is_mds_matrix(m));
        CHECK(oracle::is_mds(m));
        // random matrices agree with the oracle either way
        auto gen = oracle::rng(17);
        for (int i = 0; i < 30; ++i) {
            Matrix rm = random_matrix(gen, f16->level(2), 2, 5);
            CHECK(is_mds_matrix(rm) == oracle::is_mds(rm));
        }
    }

    SUBCASE("column scaling by invertible diagonals preserves MDS") {
        auto gen = oracle::rng(19);
        int found = 0;
        while (found < 50) {
            Matrix m = random_matrix(gen, top, 2, 5);
            if (!is_mds_matrix(m)) continue;
            ++found;
            Matrix scaled = m;
            for (std::size_t j = 0; j < 5; ++j) {
                Elem d = 0;
                while (d == 0) d = oracle::random_element(gen, top);
                for (std::size_t i = 0; i < 2; ++i)
                    scaled.set(i, j, f16->mul(m.at(i, j), d));
            }
            CHECK(is_mds_matrix(scaled));
        }
    }

    CHECK_THROWS_AS(is_mds_matrix(Matrix(top, 3, 2)), std::invalid_argument);
}

TEST_CASE("t-wise independence of columns") {
    auto f16 = FieldContext::make(2, 4);
    FieldLevel f4 = f16->level(2);

    SUBCASE("zero vector fails, distinct nonzero pass t = 1") {
        Matrix cols(f4, 2, 3, {1, 0, 2, 0, 0, 1});  // columns (1,0), (0,0), (2,1)
        CHECK_FALSE(is_t_wise_independent(cols, 1));
        Matrix ok(f4, 2, 3, {1, 0, 2, 0, 1, 1});
        CHECK(is_t_wise_independent(ok, 1));
    }

    SUBCASE("projective representatives of F_16 over F_4") {
        // the five points (1,0), (0,1), (1,1), (1,w), (1,w^2)
        Elem w = f4.primitive();
        Matrix cols(f4, 2, 5, {1, 0, 1, 1, 1, 0, 1, 1, w, f16->mul(w, w)});
        CHECK(is_t_wise_independent(cols, 2));
        // appending a scalar multiple of an existing column breaks it
        Matrix more(f4, 2, 6);
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t i = 0; i < 2; ++i) more.set(i, j, cols.at(i, j));
        more.set(0, 5, f16->mul(w, cols.at(0, 2)));
        more.set(1, 5, f16->mul(w, cols.at(1, 2)));
        CHECK_FALSE(is_t_wise_independent(more, 2));
    }

    SUBCASE("duplicate columns are rejected even for t = 1") {
        Matrix cols(f4, 2, 2, {1, 1, 0, 0});
        CHECK_FALSE(is_t_wise_independent(cols, 1));
    }
}

TEST_CASE("GL enumeration") {
    auto f2 = FieldContext::make(2, 1);
    auto f3 = FieldContext::make(3, 1);

    CHECK(gl_order(1, 2) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);

    auto all1 = enumerate_gl(f2->top_level(), 1);
    REQUIRE(all1.size() == 1);
    CHECK(all1[0].at(0, 0) == 1);

    auto all2 = enumerate_gl(f2->top_level(), 2);
    CHECK(all2.size() == 6);
    auto all3 = enumerate_gl(f3->top_level(), 2);
    CHECK(all3.size() == 48);

    SUBCASE("each matrix invertible and unique") {
        std::set<std::vector<Elem>> seen;
        for (const auto& m : all3) {
            CHECK(rank(m) == 2);
            CHECK(seen.insert(m.entries()).second);
        }
    }

    SUBCASE("row-extension mode matches the order formula") {
        // q^(r^2) = 4^9 > 2^16 forces the rowwise path
        auto f4 = FieldContext::make(2, 2);
        GlEnumerator en(f4->top_level(), 3);
        std::size_t count = 0;
        while (auto m = en.next()) {
            if (count < 5) CHECK(rank(*m) == 3);
            ++count;
        }
        CHECK(count == gl_order(3, 4));
    }

    SUBCASE("cap") {
        auto f2b = FieldContext::make(2, 1);
        CHECK_THROWS_AS(GlEnumerator(f2b->top_level(), 5), CapError);
    }
}

TEST_CASE("matrix representation map") {
    auto f16 = FieldContext::make(2, 4);
    Basis alpha = Basis::power_basis(f16->top_level(), f16->prime_level());

    std::vector<Elem> zero(3, 0);
    Matrix mz = matrix_representation(zero, alpha);
    for (std::size_t i = 0; i < mz.rows(); ++i)
        for (std::size_t j = 0; j < mz.cols(); ++j) CHECK(mz.at(i, j) == 0);

    // basis images give unit columns
    Matrix mb = matrix_representation(alpha.vec(), alpha);
    CHECK(mb == Matrix::identity(f16->prime_level(), 4));

    SUBCASE("linearity on random pairs") {
        auto gen = oracle::rng(23);
        for (int i = 0; i < 50; ++i) {
            std::vector<Elem> u(3), v(3), sum(3);
            for (int j = 0; j < 3; ++j) {
                u[j] = oracle::random_element(gen, f16->top_level());
                v[j] = oracle::random_element(gen, f16->top_level());
                sum[j] = f16->add(u[j], v[j]);
            }
            Matrix mu = matrix_representation(u, alpha);
            Matrix mv = matrix_representation(v, alpha);
            Matrix ms = matrix_representation(sum, alpha);
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    CHECK(ms.at(a, b) == f16->add(mu.at(a, b), mv.at(a, b)));
        }
    }
}
