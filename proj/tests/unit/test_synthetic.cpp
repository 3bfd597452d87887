#include "thermal/synthetic.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace thermal;
using namespace thermal::synthetic;

namespace {

std::string dump(const std::vector<ComfortRecord>& rs) {
    std::ostringstream s;
    write_records(s, rs);
    return s.str();
}

}  // namespace

TEST_SUITE("synthetic") {
    TEST_CASE("same spec and seed give the same scenario") {
        ScenarioSpec spec;
        spec.source_rows = 400;
        spec.target_rows = 50;
        const auto a = generate_synthetic_scenario(spec, 5);
        const auto b = generate_synthetic_scenario(spec, 5);
        const auto c = generate_synthetic_scenario(spec, 6);
        CHECK(dump(a.source_first) == dump(b.source_first));
        CHECK(dump(a.target) == dump(b.target));
        CHECK(dump(a.target) != dump(c.target));
    }

    TEST_CASE("shape of the default scenario") {
        const ScenarioSpec spec;
        const auto s = generate_synthetic_scenario(spec, 1);
        CHECK(s.source_first.size() + s.source_second.size() == 5000);
        CHECK(s.target.size() == 300);
        CHECK(s.cities.size() == 12);
        CHECK(s.target_city.zone == ClimateZone::C);

        std::set<ClimateZone> zones;
        for (const auto& r : s.source_first) {
            zones.insert(*r.climate_zone);
            CHECK(r.ventilation == Ventilation::hvac);
            CHECK_FALSE(r.clo.has_value());
            CHECK_FALSE(r.met.has_value());
            CHECK(r.dataset_id == "synthetic-first");
        }
        CHECK(zones.size() == 4);
        for (const auto& r : s.target) {
            CHECK(r.clo.has_value());
            CHECK(r.met.has_value());
            CHECK(r.age.has_value());
        }
        // every class appears in the target
        const auto counts = class_counts(s.target_noiseless);
        for (auto n : counts) CHECK(n > 0);
    }

    TEST_CASE("target sits closer to its own zone") {
        const auto s = generate_synthetic_scenario(ScenarioSpec{}, 2);
        const auto shared = shared_source_features();
        auto zone_rows = [&](ClimateZone z) {
            std::vector<ComfortRecord> out;
            for (const auto* part : {&s.source_first, &s.source_second}) {
                for (const auto& r : *part) {
                    if (r.climate_zone == z) out.push_back(r);
                }
            }
            return out;
        };
        const double own = mean_shift_distance(s.target, zone_rows(ClimateZone::C), shared);
        for (auto z : {ClimateZone::A, ClimateZone::B, ClimateZone::D}) {
            CAPTURE(zone_letter(z));
            CHECK(own < mean_shift_distance(s.target, zone_rows(z), shared));
        }
    }

    TEST_CASE("label noise rate") {
        ScenarioSpec spec;
        spec.target_rows = 4000;
        spec.source_rows = 100;
        const auto s = generate_synthetic_scenario(spec, 3);
        std::size_t moved = 0;
        for (std::size_t i = 0; i < s.target.size(); ++i) {
            const int d = static_cast<int>(s.target[i].raw_vote) - s.target_noiseless[i].value();
            CHECK(std::abs(d) <= 1);
            moved += d != 0;
        }
        CHECK(static_cast<double>(moved) / 4000.0 == doctest::Approx(0.1).epsilon(0.2));
    }

    TEST_CASE("spec validation") {
        ScenarioSpec bad;
        bad.target_zone = 4;
        CHECK_THROWS_AS(bad.validate(), DataError);
        bad = {};
        bad.label_noise = 1.5;
        CHECK_THROWS_AS(bad.validate(), DataError);
    }
}
