#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace thermal::manifest {

/// FNV-1a 64 of a file's bytes.
std::uint64_t fingerprint_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t value);

/// Everything needed to re-run a command: flags, seeds, input fingerprints and
/// derived counts. Written as sorted JSON so identical runs give identical files.
/// Wall-clock timing is kept in a separate file.
class RunManifest {
public:
    explicit RunManifest(std::string command) : command_(std::move(command)) {}

    void flag(const std::string& name, std::string value) { flags_[name] = std::move(value); }
    void seed(const std::string& name, std::uint64_t value) { seeds_[name] = value; }
    void dataset(const std::string& name, const std::filesystem::path& path, std::size_t rows);
    void count(const std::string& name, std::size_t value) { counts_[name] = value; }
    void artifact(const std::string& name, std::string file) { artifacts_[name] = std::move(file); }
    void note(std::string text) { notes_.push_back(std::move(text)); }

    const std::string& command() const { return command_; }
    std::string to_json() const;
    void write(const std::filesystem::path& path) const;

private:
    struct Dataset {
        std::string path;
        std::string fingerprint;
        std::size_t rows;
    };
    std::string command_;
    std::map<std::string, std::string> flags_;
    std::map<std::string, std::uint64_t> seeds_;
    std::map<std::string, Dataset> datasets_;
    std::map<std::string, std::size_t> counts_;
    std::map<std::string, std::string> artifacts_;
    std::vector<std::string> notes_;
};

/// Named wall-clock phases, written as JSON seconds.
class Timing {
public:
    void start(const std::string& phase);
    void stop(const std::string& phase);
    void write(const std::filesystem::path& path) const;

private:
    std::map<std::string, std::chrono::steady_clock::time_point> open_;
    std::map<std::string, double> seconds_;
};

}  // namespace thermal::manifest
