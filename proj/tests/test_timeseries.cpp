#include "agewatch/error.hpp"
#include "agewatch/timeseries.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace agewatch;

TEST_SUITE("timeseries") {

TEST_CASE("parse_series_csv reads a uniform series") {
    const auto s = parse_series_csv("timestamp,value\n0,1.0\n10,2.0\n20,3.0");
    CHECK(s.start_time == 0.0);
    CHECK(s.interval == 10.0);
    CHECK(s.values == std::vector<double>{1, 2, 3});
}

TEST_CASE("parse_series_csv accepts CRLF and a trailing newline") {
    const auto s = parse_series_csv("timestamp,value\r\n5,1.5\r\n7,2.5\r\n");
    CHECK(s.start_time == 5.0);
    CHECK(s.interval == 2.0);
    CHECK(s.values == std::vector<double>{1.5, 2.5});
}

TEST_CASE("single-row series needs an interval override") {
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n0,5.0"), doctest::Contains("interval"), Error);
    const auto s = parse_series_csv("timestamp,value\n0,5.0", 30.0);
    CHECK(s.size() == 1);
    CHECK(s.interval == 30.0);
    CHECK(s.values[0] == 5.0);
}

TEST_CASE("parse_series_csv errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n0,1\n10,2\n25,3"),
                         doctest::Contains("non-uniform spacing at line 4"), Error);
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n0,1\n10,abc"),
                         doctest::Contains("malformed row at line 3"), Error);
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n0,1\n10,nan"),
                         doctest::Contains("non-finite value at line 3"), Error);
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n0,1\n0,2"),
                         doctest::Contains("not strictly increasing at line 3"), Error);
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n0,1,2"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_series_csv("timestamp,value\n"), doctest::Contains("empty body"), Error);
    CHECK_THROWS_WITH_AS(parse_series_csv(""), doctest::Contains("empty"), Error);
    CHECK_THROWS_AS(parse_series_csv("time,val\n0,1\n1,2"), Error);
    CHECK_THROWS_AS(parse_series_csv("timestamp,value\n0,1\n\n2,3"), Error);
    CHECK_THROWS_AS(parse_series_csv("timestamp,value\n0,1,000\n"), Error);
}

TEST_CASE("interval override must agree with observed spacing") {
    CHECK_NOTHROW(parse_series_csv("timestamp,value\n0,1\n10,2", 10.0));
    CHECK_THROWS_AS(parse_series_csv("timestamp,value\n0,1\n10,2", 5.0), Error);
}

TEST_CASE("write_series_csv round-trips values exactly") {
    std::mt19937_64 rng(3);
    TimeSeries s;
    s.start_time = 100;
    s.interval = 0.5;
    s.values = oracle::random_vector(rng, 50, -1e6, 1e6);
    const auto back = parse_series_csv(write_series_csv(s));
    CHECK(back.values == s.values);
    CHECK(back.start_time == s.start_time);
    CHECK(back.interval == s.interval);
}

TEST_CASE("parse_proc_snapshot") {
    SUBCASE("swap used is SwapTotal - SwapFree") {
        const auto r = parse_proc_snapshot("MemFree: 1024 kB\nSwapTotal: 2048 kB\nSwapFree: 1024 kB", 42.0);
        CHECK(r.timestamp == 42.0);
        CHECK(r.free_mem_kb == 1024.0);
        CHECK(r.swap_used_kb == 1024.0);
    }
    SUBCASE("no swap in use") {
        const auto r = parse_proc_snapshot("SwapFree: 500 kB\nMemFree: 7 kB\nSwapTotal: 500 kB\n", 0.0);
        CHECK(r.swap_used_kb == 0.0);
        CHECK(r.free_mem_kb == 7.0);
    }
    SUBCASE("real meminfo layout with unknown keys") {
        const char* doc = "MemTotal:       16318412 kB\n"
                          "MemFree:         3170960 kB\n"
                          "MemAvailable:   10905036 kB\n"
                          "HugePages_Total:       0\n"
                          "SwapTotal:       2097148 kB\n"
                          "SwapFree:        2096124 kB\n";
        const auto r = parse_proc_snapshot(doc, 1.0);
        CHECK(r.free_mem_kb == 3170960.0);
        CHECK(r.swap_used_kb == 1024.0);
    }
    SUBCASE("missing key is named") {
        CHECK_THROWS_WITH_AS(parse_proc_snapshot("MemFree: 1 kB\nSwapTotal: 2 kB\n", 0.0),
                             doctest::Contains("SwapFree"), Error);
    }
    SUBCASE("keys are case-sensitive") {
        CHECK_THROWS_AS(parse_proc_snapshot("memfree: 1 kB\nSwapTotal: 2 kB\nSwapFree: 1 kB", 0.0), Error);
    }
    SUBCASE("negative usage") {
        CHECK_THROWS_WITH_AS(parse_proc_snapshot("MemFree: 1 kB\nSwapTotal: 1 kB\nSwapFree: 2 kB", 0.0),
                             doctest::Contains("negative swap"), Error);
    }
    SUBCASE("malformed required value") {
        CHECK_THROWS_AS(parse_proc_snapshot("MemFree: x kB\nSwapTotal: 1 kB\nSwapFree: 1 kB", 0.0), Error);
        CHECK_THROWS_AS(parse_proc_snapshot("MemFree: 12\nSwapTotal: 1 kB\nSwapFree: 1 kB", 0.0), Error);
    }
}

TEST_CASE("min_max_scale and inverse_scale") {
    TimeSeries s;
    s.values = {0, 5, 10};
    const auto [scaled, params] = min_max_scale(s);
    CHECK(scaled.values == std::vector<double>{0.0, 0.5, 1.0});
    CHECK(params == ScaleParams{0, 10});

    TimeSeries unit;
    unit.values = {0, 1};
    CHECK(min_max_scale(unit).first.values == unit.values);

    TimeSeries constant;
    constant.values = {7, 7, 7};
    CHECK_THROWS_WITH_AS(min_max_scale(constant), doctest::Contains("constant series"), Error);

    TimeSeries one;
    one.values = {1};
    CHECK_THROWS_AS(min_max_scale(one), Error);

    TimeSeries back;
    back.values = {0, 0.5, 1};
    CHECK(inverse_scale(back, {0, 10}).values == std::vector<double>{0, 5, 10});
    TimeSeries quarter;
    quarter.values = {0.25};
    CHECK(inverse_scale(quarter, {100, 200}).values == std::vector<double>{125});
    CHECK_THROWS_AS(inverse_scale(quarter, {3, 3}), Error);
}

TEST_CASE("scale then inverse is the identity within 1e-12 relative") {
    // Relative to the series magnitude: values near zero inside a wide series
    // only keep absolute precision of order eps * range.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(2, 300);
    std::uniform_real_distribution<double> mag(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        TimeSeries s;
        const double scale = std::pow(10.0, mag(rng));
        const double offset = scale * (rng() % 3);
        s.values = oracle::random_vector(rng, static_cast<std::size_t>(len(rng)), offset - scale, offset + scale);
        const auto [scaled, params] = min_max_scale(s);
        const auto back = inverse_scale(scaled, params);
        const double magnitude = std::max(std::abs(params.min), std::abs(params.max));
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(std::abs(back.values[i] - s.values[i]) <= 1e-12 * magnitude);
        }
    }
}

TEST_CASE("split is a chronological prefix split") {
    TimeSeries s;
    s.start_time = 100;
    s.interval = 10;
    s.values = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    const auto [train, test] = split(s, 0.8);
    CHECK(train.size() == 8);
    CHECK(test.size() == 2);
    CHECK(test.start_time == 180.0);
    CHECK(test.values == std::vector<double>{8, 9});

    TimeSeries three;
    three.values = {1, 2, 3};
    const auto [a, b] = split(three, 0.5);
    CHECK(a.size() == 1);
    CHECK(b.size() == 2);

    TimeSeries two;
    two.values = {1, 2};
    CHECK_THROWS_WITH_AS(split(two, 0.1), doctest::Contains("empty train segment"), Error);
    // floor(f * N) < N for f < 1, so the test segment is never empty
    CHECK(split(two, 0.99).second.size() == 1);
    CHECK_THROWS_AS(split(two, 0.0), Error);
    CHECK_THROWS_AS(split(two, 1.0), Error);
}

TEST_CASE("split preserves length and order") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> frac(0.01, 0.99);
    for (int trial = 0; trial < 200; ++trial) {
        TimeSeries s;
        s.values = oracle::random_vector(rng, 2 + rng() % 100, 0, 1);
        const double f = frac(rng);
        const auto n_train = static_cast<std::size_t>(std::floor(f * static_cast<double>(s.size())));
        if (n_train == 0 || n_train == s.size()) {
            CHECK_THROWS_AS(split(s, f), Error);
            continue;
        }
        auto [train, test] = split(s, f);
        std::vector<double> joined = train.values;
        joined.insert(joined.end(), test.values.begin(), test.values.end());
        REQUIRE(joined == s.values);
        REQUIRE(train.size() == n_train);
    }
}

TEST_CASE("embed enumerates windows oldest first") {
    TimeSeries s;
    s.values = {1, 2, 3, 4, 5};
    const auto ds = embed(s, 1, 1);
    REQUIRE(ds.size() == 3);
    CHECK(ds.inputs[0] == std::vector<double>{1, 2});
    CHECK(ds.inputs[1] == std::vector<double>{2, 3});
    CHECK(ds.inputs[2] == std::vector<double>{3, 4});
    CHECK(ds.targets == std::vector<double>{3, 4, 5});
    CHECK(ds.input_dim() == 2);

    TimeSeries two;
    two.values = {1, 2};
    const auto smallest = embed(two, 0, 1);
    REQUIRE(smallest.size() == 1);
    CHECK(smallest.inputs[0] == std::vector<double>{1});
    CHECK(smallest.targets[0] == 2);

    TimeSeries four;
    four.values = {1, 2, 3, 4};
    CHECK_THROWS_WITH_AS(embed(four, 2, 2), doctest::Contains("need >= 5 samples"), Error);
    CHECK_THROWS_AS(embed(four, 1, 0), Error);
}

TEST_CASE("embed matches brute-force enumeration up to N = 200") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = static_cast<int>(rng() % 8);
        const int n = 1 + static_cast<int>(rng() % 5);
        const int size = m + n + 1 + static_cast<int>(rng() % (200 - m - n));
        const auto x = oracle::random_vector(rng, static_cast<std::size_t>(size), -10, 10);
        const auto expected = oracle::enumerate_windows(x, m, n);
        const auto ds = embed(std::span<const double>(x), static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        REQUIRE(ds.size() == static_cast<std::size_t>(size - m - n));
        REQUIRE(ds.size() == expected.size());
        for (std::size_t k = 0; k < ds.size(); ++k) {
            REQUIRE(ds.inputs[k] == expected[k].first);
            REQUIRE(ds.targets[k] == expected[k].second);
        }
    }
}

}
