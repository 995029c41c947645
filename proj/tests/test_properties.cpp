// Seeded property suites at full volume, plus determinism and
// seed-robustness of the suite runner itself.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fla/acceptance.hpp"

using namespace fla;

TEST_CASE("the five suites run 100 cases each without a violation") {
    const auto suites = run_property_suites(0, 100);
    REQUIRE(suites.size() == 5);
    for (const auto& pr : suites) {
        CAPTURE(pr.name);
        CAPTURE(pr.first_failure);
        CHECK(pr.cases == 100);
        CHECK(pr.failures == 0);
    }
}

TEST_CASE("other seeds hold as well") {
    for (std::uint64_t seed : {std::uint64_t(42), std::uint64_t(987654321)}) {
        CAPTURE(seed);
        for (const auto& pr : run_property_suites(seed, 25)) {
            CAPTURE(pr.name);
            CAPTURE(pr.first_failure);
            CHECK(pr.failures == 0);
        }
    }
}

TEST_CASE("suite results are reproducible for a fixed seed") {
    const auto a = run_property_suites(7, 10);
    const auto b = run_property_suites(7, 10);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].cases == b[i].cases);
        CHECK(a[i].failures == b[i].failures);
        CHECK(a[i].first_failure == b[i].first_failure);
    }
}
