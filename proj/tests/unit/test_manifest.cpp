#include "thermal/manifest.hpp"
#include "thermal/types.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace thermal;
using namespace thermal::manifest;

namespace {

std::filesystem::path scratch_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

}  // namespace

TEST_SUITE("manifest") {
    TEST_CASE("fnv-1a reference values") {
        CHECK(fingerprint_file(scratch_file("thermal_fnv_empty", "")) == 0xcbf29ce484222325ULL);
        CHECK(fingerprint_file(scratch_file("thermal_fnv_a", "a")) == 0xaf63dc4c8601ec8cULL);
        CHECK(hex64(0xaf63dc4c8601ec8cULL) == "af63dc4c8601ec8c");
        CHECK(hex64(1) == "0000000000000001");
        CHECK_THROWS_AS(fingerprint_file("/nonexistent/file"), InputError);
    }

    TEST_CASE("manifest text is independent of insertion order") {
        const auto data = scratch_file("thermal_manifest_data.csv", "x\n1\n");
        RunManifest a("evaluate"), b("evaluate");
        a.flag("seed", "42");
        a.flag("model", "mlp");
        a.seed("master", 42);
        a.dataset("target", data, 1);
        b.dataset("target", data, 1);
        b.seed("master", 42);
        b.flag("model", "mlp");
        b.flag("seed", "42");
        CHECK(a.to_json() == b.to_json());

        const auto j = nlohmann::json::parse(a.to_json());
        CHECK(j["command"] == "evaluate");
        CHECK(j["datasets"]["target"]["rows"] == 1);
        CHECK(j["datasets"]["target"]["fnv1a64"] == hex64(fingerprint_file(data)));
        CHECK_FALSE(j.contains("timing"));
    }

    TEST_CASE("timing phases") {
        Timing t;
        CHECK_THROWS_AS(t.stop("never"), InvariantError);
        t.start("fit");
        t.stop("fit");
        const auto path = std::filesystem::temp_directory_path() / "thermal_timing.json";
        t.write(path);
        std::ifstream in(path);
        const auto j = nlohmann::json::parse(in);
        CHECK(j["fit"].get<double>() >= 0.0);
    }
}
