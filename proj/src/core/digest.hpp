#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace polysft {

// FNV-1a 64-bit, used as the stable content hash in run reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string digest_hex(const std::string& content) {
    std::uint64_t h = fnv1a64(content.data(), content.size());
    char buf[17];
    static const char* hexdigits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = hexdigits[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

} // namespace polysft
