#include "dimer/verify.hpp"

#include "doctest.h"

using namespace dimer;

TEST_CASE("verification passes on the built-in table") {
    const auto checks = run_verification(builtin_table());
    REQUIRE(checks.size() == 10);
    for (const auto& check : checks) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.pass);
    }
    CHECK(all_passed(checks));
}

TEST_CASE("verification catches a corrupted table") {
    SeriesTable corrupted = builtin_table();
    corrupted.entries.at(3).values[2] = Decimal::parse("0.9999");

    const auto checks = run_verification(corrupted);
    CHECK(!all_passed(checks));
    bool d3_failed = false;
    bool counting_still_fine = true;
    for (const auto& check : checks) {
        if (check.name == "estimate d=3") d3_failed = !check.pass;
        if (check.name.rfind("count", 0) == 0) counting_still_fine &= check.pass;
    }
    CHECK(d3_failed);
    CHECK(counting_still_fine);
}

TEST_CASE("verification notices a missing column") {
    SeriesTable partial = builtin_table();
    partial.entries.erase(4);
    const auto checks = run_verification(partial);
    CHECK(!all_passed(checks));
}
