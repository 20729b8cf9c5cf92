#include <doctest.h>

#include "wittrep/report.hpp"

using namespace wittrep;

TEST_CASE("run_verify passes for p=5") {
    VerificationReport rep = run_verify(5);
    for (const CheckResult& c : rep.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(rep.all_passed());
}

TEST_CASE("run_selftest passes for p=11") {
    CHECK(run_selftest(11).all_passed());
}

TEST_CASE("JSON output is byte-identical across runs") {
    std::string a = render_json(run_verify(5));
    std::string b = render_json(run_verify(5));
    CHECK(a == b);
    CHECK(a.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(a.find("millis") == std::string::npos);
}

TEST_CASE("series selectors") {
    SeriesLine a1 = run_series(5, "A1");
    CHECK(a1.report.chain == std::vector<std::size_t>{5, 1, 0});
    CHECK(format_series(a1, 5).find("5 ⊃ 1 ⊃ 0") != std::string::npos);

    SeriesLine asp = run_series(7, "AsPlus");
    CHECK(asp.report.chain == std::vector<std::size_t>{21, 14, 7, 0});

    SeriesLine l3 = run_series(5, "L:3");
    CHECK(l3.report.factors.size() == 1);

    SeriesLine z0 = run_series(5, "Z:0");
    CHECK(z0.report.factors.size() == 2);

    CHECK_THROWS_AS(run_series(5, "bogus"), std::invalid_argument);
    CHECK_THROWS_AS(run_series(5, "L:9"), std::invalid_argument);
}

TEST_CASE("invalid primes rejected") {
    CHECK_THROWS_AS(run_verify(9), std::invalid_argument);
    CHECK_THROWS_AS(run_selftest(3), std::invalid_argument);
}

TEST_CASE("markdown and text renderings mention every check") {
    VerificationReport rep = run_selftest(5);
    std::string text = render_text(rep);
    std::string md = render_markdown(rep);
    for (const CheckResult& c : rep.checks) {
        CHECK(text.find(c.name) != std::string::npos);
        CHECK(md.find(c.name) != std::string::npos);
    }
}
