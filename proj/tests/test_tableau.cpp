#include "doctest.h"

#include <algorithm>

#include "sclab/combinatorics.hpp"
#include "sclab/tableau.hpp"
#include "support.hpp"

using namespace sclab;
using namespace sclab::testing;

namespace {

Tableau random_tableau(Rng& rng, std::size_t rows, std::size_t cols, double density)
{
    std::bernoulli_distribution coin(density);
    Tableau t(rows, cols);
    for (std::size_t j = 0; j < rows; ++j)
        for (std::size_t k = 0; k < cols; ++k)
            if (coin(rng))
                t.mark(j, k);
    return t;
}

// Applies the completion rewriting until no right triangle remains, each
// time picking a random completable cell.
Tableau saturate_by_random_schedule(Tableau t, Rng& rng)
{
    for (auto cells = completing_cells(t); !cells.empty(); cells = completing_cells(t)) {
        std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
        auto [j, k] = cells[pick(rng)];
        t.mark(j, k);
    }
    return t;
}

} // namespace

TEST_CASE("Tableau basics")
{
    Tableau t(2, 3);
    t.mark(1, 2);
    CHECK(t.marked(1, 2));
    CHECK(t.bits() == (CellMask(1) << 5));
    CHECK(t.row_mask(1) == 0b100);
    CHECK(t.col_mask(2) == 0b10);
    CHECK_THROWS_AS(t.mark(2, 0), InvalidArgument);
    CHECK_THROWS_AS(Tableau(9, 8), InvalidArgument);
    CHECK_THROWS_AS(Tableau(2, 2, 0b10000), InvalidArgument);
}

TEST_CASE("is_saturated")
{
    CHECK(is_saturated(Tableau(3, 3)));
    CHECK(is_saturated(Tableau(3, 3, 0x1FF)));

    Tableau triangle(2, 2);
    triangle.mark(0, 0);
    triangle.mark(0, 1);
    triangle.mark(1, 0);
    CHECK_FALSE(is_saturated(triangle));

    SUBCASE("matches the literal definition on every 3x3 and 2x4 tableau")
    {
        for (CellMask bits = 0; bits < (1u << 9); ++bits) {
            Tableau t(3, 3, bits);
            REQUIRE(is_saturated(t) == !has_right_triangle(t));
        }
        for (CellMask bits = 0; bits < (1u << 8); ++bits) {
            Tableau t(2, 4, bits);
            REQUIRE(is_saturated(t) == !has_right_triangle(t));
        }
    }
}

TEST_CASE("saturate")
{
    Tableau triangle(2, 2);
    triangle.mark(0, 0);
    triangle.mark(0, 1);
    triangle.mark(1, 0);
    CHECK(saturate(triangle) == Tableau(2, 2, 0b1111));

    SUBCASE("saturated input is returned unchanged")
    {
        enumerate_saturated(3, 3, [](const Tableau& t) { REQUIRE(saturate(t) == t); });
    }

    SUBCASE("equals the intersection of saturated supersets on random 4x4 tableaux")
    {
        Rng rng(41);
        for (int trial = 0; trial < 40; ++trial) {
            Tableau t = random_tableau(rng, 4, 4, 0.12 + 0.02 * (trial % 6));
            REQUIRE(saturate(t) == saturate_by_intersection(t));
        }
    }

    SUBCASE("extensive, idempotent, monotone")
    {
        Rng rng(43);
        for (int trial = 0; trial < 500; ++trial) {
            Tableau t = random_tableau(rng, 4, 5, 0.2);
            Tableau bigger = t;
            bigger.mark(trial % 4, trial % 5);
            const Tableau s = saturate(t);
            CHECK(s.contains(t));
            CHECK(is_saturated(s));
            CHECK(saturate(s) == s);
            CHECK(saturate(bigger).contains(s));
        }
    }

    SUBCASE("independent of the rewriting schedule")
    {
        Rng rng(47);
        for (int trial = 0; trial < 300; ++trial) {
            Tableau t = random_tableau(rng, 5, 5, 0.15);
            const Tableau first = saturate_by_random_schedule(t, rng);
            const Tableau second = saturate_by_random_schedule(t, rng);
            CHECK(first == second);
            CHECK(first == saturate(t));
        }
    }

    SUBCASE("empty rows and columns stay empty")
    {
        Rng rng(53);
        for (int trial = 0; trial < 300; ++trial) {
            Tableau t = random_tableau(rng, 5, 4, 0.15);
            const Tableau s = saturate(t);
            for (std::size_t j = 0; j < 5; ++j)
                CHECK((t.row_mask(j) == 0) == (s.row_mask(j) == 0));
            for (std::size_t k = 0; k < 4; ++k)
                CHECK((t.col_mask(k) == 0) == (s.col_mask(k) == 0));
        }
    }
}

TEST_CASE("completing_cells marks exactly the rectangle corners")
{
    Tableau triangle(2, 2);
    triangle.mark(0, 0);
    triangle.mark(0, 1);
    triangle.mark(1, 0);
    CHECK(completing_cells(triangle) == std::vector<Cell>{{1, 1}});
    CHECK(completing_cells(Tableau(2, 2, 0b1111)).empty());
}

TEST_CASE("enumerate_saturated")
{
    CHECK(count_saturated(2, 2) == 12);
    CHECK(count_saturated(3, 3) == 128);
    CHECK(count_saturated(1, 1) == 2);
    CHECK(count_saturated(0, 5) == 1);
    CHECK(count_saturated(4, 0) == 1);

    SUBCASE("same tableaux as filtering every grid, in increasing bit order")
    {
        for (std::size_t rows = 1; rows <= 4; ++rows)
            for (std::size_t cols = 1; rows * cols <= 16; ++cols) {
                std::vector<CellMask> seen;
                enumerate_saturated(rows, cols, [&](const Tableau& t) { seen.push_back(t.bits()); });
                REQUIRE(seen == saturated_by_filter(rows, cols));
            }
    }

    SUBCASE("transpose symmetry")
    {
        for (std::size_t rows = 1; rows <= 5; ++rows)
            for (std::size_t cols = 1; cols <= 5; ++cols)
                CHECK(count_saturated(rows, cols) == count_saturated(cols, rows));
    }

    SUBCASE("guard")
    {
        CHECK_THROWS_AS(count_saturated(5, 6), SizeGuardExceeded);
        CHECK_NOTHROW(count_saturated(5, 6, 30));
        CHECK_THROWS_AS(count_saturated(9, 8, 100), SizeGuardExceeded);
    }
}

TEST_CASE("count_saturated_with_origin")
{
    CHECK(count_saturated_with_origin(2, 2) == 5);
    for (unsigned p = 1; p <= 6; ++p)
        CHECK(count_saturated_with_origin(1, p) == (1u << (p - 1)));
    // 4^(p-1) + 3 * 3^(p-1) at p = 3
    CHECK(count_saturated_with_origin(3, 3) == 43);
    CHECK(count_saturated_with_origin(6, 2) == 275);
}

TEST_CASE("count_saturated_by_weight sums marked cells to np times the origin count")
{
    for (std::size_t rows = 1; rows <= 4; ++rows)
        for (std::size_t cols = 1; cols <= 4; ++cols) {
            auto by_weight = count_saturated_by_weight(rows, cols);
            std::uint64_t cells = 0;
            for (std::size_t j = 0; j < by_weight.size(); ++j)
                cells += j * by_weight[j];
            CHECK(cells == rows * cols * count_saturated_with_origin(rows, cols));
        }
}

TEST_CASE("word encoding")
{
    SUBCASE("example 4x5 tableau")
    {
        // Rows 0-based: columns {0,3}, {2}, {}, {0}, {2,3}.
        Tableau t(4, 5);
        for (auto [j, k] : std::vector<Cell>{{0, 0}, {3, 0}, {2, 1}, {0, 3}, {2, 4}, {3, 4}})
            t.mark(j, k);
        const TableauWord w = encode(t);
        CHECK(w.letters == std::vector<std::uint64_t>{0b1001, 0b0100, 0, 0b0001, 0b1100});
        CHECK(to_string(w) == "c{0,3} c{2} c{} c{0} c{2,3}");
        CHECK(decode(w) == t);
    }

    SUBCASE("zero columns")
    {
        const TableauWord w = encode(Tableau(3, 0));
        CHECK(w.rows == 3);
        CHECK(w.letters.empty());
        CHECK(decode(w) == Tableau(3, 0));
    }

    SUBCASE("gluing words glues tableaux")
    {
        Rng rng(59);
        for (int trial = 0; trial < 50; ++trial) {
            Tableau left = random_tableau(rng, 3, 2, 0.4);
            Tableau right = random_tableau(rng, 3, 3, 0.4);
            const Tableau glued = decode(encode(left) * encode(right));
            REQUIRE(glued.cols() == 5);
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(glued.row_mask(j) == (left.row_mask(j) | (right.row_mask(j) << 2)));
            CHECK(decode(encode(glued)) == glued);
        }
    }

    SUBCASE("saturated iff letters form a partial set partition")
    {
        for (std::size_t rows = 1; rows <= 4; ++rows)
            for (std::size_t cols = 1; rows * cols <= 16; ++cols)
                for (CellMask bits = 0; bits < (CellMask(1) << (rows * cols)); ++bits) {
                    Tableau t(rows, cols, bits);
                    REQUIRE(is_saturated(t) == letters_form_partial_partition(encode(t)));
                }
    }
}

TEST_CASE("is_final_tableau")
{
    CHECK_FALSE(is_final_tableau(Tableau(3, 3), 0b100, 0b100));

    Tableau single(3, 3);
    single.mark(2, 0);
    CHECK(is_final_tableau(single, 0b100, 0b100));
    Tableau corner(3, 3);
    corner.mark(2, 2);
    CHECK_FALSE(is_final_tableau(corner, 0b100, 0b100));

    SUBCASE("finality is preserved by saturation for every choice of final rows and columns")
    {
        for (std::size_t rows = 1; rows <= 3; ++rows)
            for (std::size_t cols = 1; cols <= 3; ++cols)
                for (std::uint64_t fr = 0; fr < (1u << rows); ++fr)
                    for (std::uint64_t fc = 0; fc < (1u << cols); ++fc)
                        for (CellMask bits = 0; bits < (CellMask(1) << (rows * cols)); ++bits) {
                            Tableau t(rows, cols, bits);
                            REQUIRE(is_final_tableau(t, fr, fc) ==
                                    is_final_tableau(saturate(t), fr, fc));
                        }
    }
}

TEST_CASE("tableau text format")
{
    const Tableau t = parse_tableau("X..\n.X.\n\nX.X\n");
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 3);
    CHECK(to_text(t) == "X..\n.X.\nX.X\n");
    CHECK(parse_tableau(to_text(t)) == t);
    CHECK_THROWS_AS(parse_tableau("X.\nX..\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_tableau("Xo\n"), InvalidArgument);
}
