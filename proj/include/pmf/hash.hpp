#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace pmf {

// FNV-1a, 64 bit, as 16 lowercase hex digits
inline std::string fnv1a64_hex(const std::string& s)
{
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace pmf
