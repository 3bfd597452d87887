#include "thermal/fixtures.hpp"

#include <doctest.h>

using namespace thermal;
using namespace thermal::fixtures;

TEST_SUITE("fixtures") {
    TEST_CASE("shipped fixtures reproduce their expected outputs") {
        const auto report = validate_fixtures(THERMAL_FIXTURE_DIR, CityZoneTable::builtin());
        INFO(report.describe());
        CHECK(report.outcomes.size() >= 6);
        CHECK(report.passed());
    }

    TEST_CASE("cell-level csv diff") {
        CHECK(diff_csv("a,b\n1,2\n", "a,b\n1,2\n").empty());
        const auto d = diff_csv("a,b\n1,2\n", "a,b\n1,3\n");
        REQUIRE(d.size() == 1);
        CHECK(d[0].find("row 1, b") != std::string::npos);
        CHECK(diff_csv("a,b\n", "a,c\n") == std::vector<std::string>{"header differs"});
        CHECK(diff_csv("a\n1\n2\n", "a\n1\n").size() == 1);
    }
}
