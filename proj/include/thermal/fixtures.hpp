#pragma once

#include "thermal/dataset.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace thermal::fixtures {

struct FixtureOutcome {
    std::string name;
    std::vector<std::string> diffs;  // field-level, empty when the fixture matches

    bool passed() const { return diffs.empty(); }
};

struct FixtureReport {
    std::vector<FixtureOutcome> outcomes;

    bool passed() const;
    std::string describe() const;
};

/// Checks every ingestion fixture under `dir/ingest` and the zone list under
/// `dir/zones` against their expected files.
///
/// Ingestion fixture `name` is `name.csv` plus an optional `name.map`
/// (canonical columns otherwise), compared with `name.expected.csv` (canonical
/// records) and `name.dropped.csv` (line, reason, detail).
/// Zone fixtures are `city,zone` lists resolved through `table`.
FixtureReport validate_fixtures(const std::filesystem::path& dir, const CityZoneTable& table);

/// Cell-by-cell comparison of two CSV texts.
std::vector<std::string> diff_csv(std::string_view expected, std::string_view actual);

/// Canonical text of a loaded fixture: records, then the drop list.
std::string canonical_text(const LoadResult& result);
std::string dropped_text(const LoadResult& result);

}  // namespace thermal::fixtures
