// Runs the full verification suite and asserts every item, printing one
// pass/fail line per item. The corrupted-fixture run is the negative control
// showing the suite can fail.

#include <doctest.h>

#include <cstdio>

#include "entmom/acceptance.hpp"

using namespace entmom;

TEST_CASE("verification suite passes every item") {
    const auto results = run_acceptance();
    REQUIRE(results.size() == 11);
    for (const auto& r : results) {
        std::printf("%s\n", format_acceptance_line(r).c_str());
        INFO(r.name << " -- " << r.details);
        CHECK(r.pass);
    }
    CHECK(all_passed(results));
}

TEST_CASE("corrupted sigma_b fixture fails the PPT item and nothing else") {
    AcceptanceOptions options;
    options.corrupt_sigma_b = true;
    const auto results = run_acceptance(options);
    REQUIRE(results.size() == 11);
    for (const auto& r : results) {
        if (r.id == 6) {
            CHECK_FALSE(r.pass);
        } else {
            INFO(r.name << " -- " << r.details);
            CHECK(r.pass);
        }
    }
    CHECK_FALSE(all_passed(results));
}
