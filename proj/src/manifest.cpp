#include "thermal/manifest.hpp"

#include "thermal/hash.hpp"
#include "thermal/types.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>

namespace thermal::manifest {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace

std::uint64_t fingerprint_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    Fnv1a h;
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    return h.digest();
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

void RunManifest::dataset(const std::string& name, const std::filesystem::path& path, std::size_t rows) {
    datasets_[name] = {path.string(), hex64(fingerprint_file(path)), rows};
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command_;
    j["flags"] = flags_;
    j["seeds"] = seeds_;
    j["counts"] = counts_;
    j["artifacts"] = artifacts_;
    j["notes"] = notes_;
    auto& ds = j["datasets"] = nlohmann::json::object();
    for (const auto& [name, d] : datasets_) {
        ds[name] = {{"path", d.path}, {"fnv1a64", d.fingerprint}, {"rows", d.rows}};
    }
    return j.dump(2) + "\n";
}

void RunManifest::write(const std::filesystem::path& path) const {
    write_text(path, to_json());
}

void Timing::start(const std::string& phase) {
    open_[phase] = std::chrono::steady_clock::now();
}

void Timing::stop(const std::string& phase) {
    auto it = open_.find(phase);
    if (it == open_.end()) throw InvariantError("timing phase '" + phase + "' was never started");
    seconds_[phase] += std::chrono::duration<double>(std::chrono::steady_clock::now() - it->second).count();
    open_.erase(it);
}

void Timing::write(const std::filesystem::path& path) const {
    nlohmann::json j = seconds_;
    write_text(path, j.dump(2) + "\n");
}

}  // namespace thermal::manifest
