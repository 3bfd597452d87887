#include "thermal/fixtures.hpp"

#include "thermal/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace thermal::fixtures {

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::filesystem::path> files_with_suffix(const std::filesystem::path& dir, std::string_view suffix) {
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.ends_with(suffix)) out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool FixtureReport::passed() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed(); });
}

std::string FixtureReport::describe() const {
    std::ostringstream s;
    for (const auto& o : outcomes) {
        s << (o.passed() ? "ok   " : "FAIL ") << o.name << '\n';
        for (const auto& d : o.diffs) s << "       " << d << '\n';
    }
    return s.str();
}

std::vector<std::string> diff_csv(std::string_view expected, std::string_view actual) {
    const auto e = csv::parse(expected);
    const auto a = csv::parse(actual);
    std::vector<std::string> diffs;
    if (e.header != a.header) {
        diffs.push_back("header differs");
        return diffs;
    }
    if (e.rows.size() != a.rows.size()) {
        diffs.push_back("expected " + std::to_string(e.rows.size()) + " rows, got " + std::to_string(a.rows.size()));
    }
    const std::size_t n = std::min(e.rows.size(), a.rows.size());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < e.header.size(); ++c) {
            if (e.rows[r][c] != a.rows[r][c]) {
                diffs.push_back("row " + std::to_string(r + 1) + ", " + e.header[c] + ": expected '" + e.rows[r][c] +
                                "', got '" + a.rows[r][c] + "'");
            }
        }
    }
    return diffs;
}

std::string canonical_text(const LoadResult& result) {
    std::ostringstream s;
    write_records(s, result.records);
    return s.str();
}

std::string dropped_text(const LoadResult& result) {
    std::ostringstream s;
    csv::write_row(s, {"line", "reason", "detail"});
    for (const auto& d : result.dropped) {
        csv::write_row(s, {std::to_string(d.line), std::string(drop_reason_name(d.reason)), d.detail});
    }
    return s.str();
}

FixtureReport validate_fixtures(const std::filesystem::path& dir, const CityZoneTable& table) {
    FixtureReport report;
    const auto ingest = dir / "ingest";
    for (const auto& expected : files_with_suffix(ingest, ".expected.csv")) {
        const std::string file = expected.filename().string();
        const std::string name = file.substr(0, file.size() - std::string_view(".expected.csv").size());
        FixtureOutcome outcome{"ingest/" + name, {}};
        try {
            const auto map_path = ingest / (name + ".map");
            const auto mapping =
                std::filesystem::exists(map_path) ? ColumnMapping::load(map_path) : ColumnMapping::canonical();
            const auto loaded = load_dataset(ingest / (name + ".csv"), mapping, name);
            for (auto& d : diff_csv(slurp(expected), canonical_text(loaded))) outcome.diffs.push_back("records: " + d);
            const auto dropped_path = ingest / (name + ".dropped.csv");
            if (std::filesystem::exists(dropped_path)) {
                for (auto& d : diff_csv(slurp(dropped_path), dropped_text(loaded))) {
                    outcome.diffs.push_back("dropped: " + d);
                }
            } else if (!loaded.dropped.empty()) {
                outcome.diffs.push_back("dropped: " + std::to_string(loaded.dropped.size()) +
                                        " rows dropped but no .dropped.csv expectation");
            }
        } catch (const Error& e) {
            outcome.diffs.push_back(std::string("error: ") + e.what());
        }
        report.outcomes.push_back(std::move(outcome));
    }

    for (const auto& zones : files_with_suffix(dir / "zones", ".csv")) {
        FixtureOutcome outcome{"zones/" + zones.filename().string(), {}};
        try {
            const auto t = csv::read_file(zones);
            const auto city = t.column("city");
            const auto zone = t.column("zone");
            if (!city || !zone) throw FormatError("zone fixture needs city and zone columns");
            for (const auto& row : t.rows) {
                const auto want = parse_zone(row[*zone]);
                const auto got = table.lookup(row[*city]);
                if (!want) {
                    outcome.diffs.push_back(row[*city] + ": bad expected zone '" + row[*zone] + "'");
                } else if (!got) {
                    outcome.diffs.push_back(row[*city] + ": not in the table");
                } else if (*got != *want) {
                    outcome.diffs.push_back(row[*city] + ": expected " + zone_letter(*want) + ", got " +
                                            zone_letter(*got));
                }
            }
        } catch (const Error& e) {
            outcome.diffs.push_back(std::string("error: ") + e.what());
        }
        report.outcomes.push_back(std::move(outcome));
    }
    if (report.outcomes.empty()) {
        report.outcomes.push_back({dir.string(), {"no fixtures found"}});
    }
    return report;
}

}  // namespace thermal::fixtures
