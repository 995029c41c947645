// The exit gate: runs all ten verification criteria and prints one pass/fail
// line per criterion, then asserts each one passed.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fla/acceptance.hpp"

#include <cstdio>

using namespace fla;

TEST_CASE("all ten criteria pass") {
    const auto results = run_acceptance(0);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) std::puts(criterion_line(r).c_str());
    std::fflush(stdout);
    for (const auto& r : results) {
        CAPTURE(r.number);
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("criteria are numbered 1..10 in order and deterministic") {
    const auto a = run_acceptance(0);
    const auto b = run_acceptance(0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].number == static_cast<int>(i) + 1);
        CHECK(criterion_line(a[i]) == criterion_line(b[i]));
    }
}
