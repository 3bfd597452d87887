#pragma once

#include <cstdint>
#include <string_view>

namespace thermal {

/// 64-bit FNV-1a; content fingerprints for manifests and model provenance.
class Fnv1a {
public:
    void update(const void* data, std::size_t size) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            state_ ^= bytes[i];
            state_ *= 0x100000001b3ULL;
        }
    }
    void update(std::string_view text) { update(text.data(), text.size()); }
    std::uint64_t digest() const { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace thermal
