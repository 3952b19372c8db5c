#include "fibvar/fibonacci.hpp"
#include "fibvar/moments.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace fibvar;

TEST_CASE("moment_table small values")
{
    const MomentTable zero = moment_table(0);
    CHECK(zero.a == std::vector<std::uint64_t>{1});
    CHECK(zero.v == std::vector<std::uint64_t>{1});

    const MomentTable three = moment_table(3);
    CHECK(three.a[3] == 5);
    CHECK(three.v[3] == 7);

    CHECK(moment_table(8).v[8] == 26);
}

TEST_CASE("moment_table agrees with squared subset counts")
{
    const auto counts = oracle::subset_counts(1500);
    const MomentTable table = moment_table(1500);
    std::uint64_t a = 0, v = 0;
    for (std::uint64_t n = 0; n <= 1500; ++n) {
        a += counts[n];
        v += counts[n] * counts[n];
        REQUIRE(table.a[n] == a);
        REQUIRE(table.v[n] == v);
    }
}

TEST_CASE("moment invariants up to 1e5")
{
    const MomentTable table = moment_table(100'000);
    for (std::uint64_t n = 1; n <= table.h_max; ++n) {
        REQUIRE(table.a[n] > table.a[n - 1]);
        REQUIRE(table.v[n] > table.v[n - 1]);
    }
    // (n + 1) V(n) >= A(n)^2, in 128 bits
    for (std::uint64_t n = 0; n <= table.h_max; ++n) {
        const auto lhs = static_cast<unsigned __int128>(n + 1) * table.v[n];
        const auto rhs = static_cast<unsigned __int128>(table.a[n]) * table.a[n];
        REQUIRE(lhs >= rhs);
    }
}

TEST_CASE("V at Fibonacci arguments")
{
    const FibMomentSeries series = fib_moment_series(12);
    const std::uint64_t initial[] = {2, 3, 7, 12, 26};
    for (int m = 2; m <= 6; ++m)
        CHECK(series.v(m) == initial[m - 2]);
    for (int m = 3; m <= 12; ++m)
        CHECK(series.v(m) > series.v(m - 1));

    CHECK(v_at_fib(2) == 2);
    CHECK(v_at_fib(5) == 12);
    CHECK(v_at_fib(7) == 53);
    CHECK_THROWS_AS(v_at_fib(1), std::domain_error);
    CHECK_THROWS_AS(series.v(13), std::out_of_range);

    // the series is sampled from the same prefix sums as moment_table
    const MomentTable table = moment_table(fib_u64(12));
    for (int m = 2; m <= 12; ++m)
        CHECK(series.v(m) == table.v[fib_u64(m)]);
}

TEST_CASE("verify_lemma")
{
    const auto rows = verify_lemma(7, 28);
    REQUIRE(rows.size() == 22);
    CHECK(rows.front().lhs == 53);
    CHECK(rows.front().rhs == 53);
    for (const LemmaRow& row : rows)
        CHECK_MESSAGE(row.equal, "m = " << row.m);
    CHECK(rows[1].m == 8);
    CHECK(rows[1].equal);

    CHECK_THROWS_AS(verify_lemma(6, 10), std::domain_error);
    CHECK_THROWS_AS(verify_lemma(9, 8), std::domain_error);
}

TEST_CASE("w_closed_form")
{
    CHECK(w_closed_form(7) == 2);
    CHECK(w_closed_form(8) == 6);
    // 26 - 3 - 2 - 7; confirmed by count_w in test_diophantine
    CHECK(w_closed_form(9) == 14);
    CHECK_THROWS_AS(w_closed_form(6), std::domain_error);
}
