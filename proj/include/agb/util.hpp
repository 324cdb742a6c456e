#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace agb::util {

// FNV-1a, used for content hashing of artifacts and for deriving RNG streams.
// Stable across platforms; not cryptographic.
constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr uint64_t kFnvPrime = 0x100000001b3ull;

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = kFnvOffset) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= kFnvPrime;
    }
    return h;
}

inline uint64_t hash_str(std::string_view s, uint64_t h = kFnvOffset) {
    return fnv1a64(s.data(), s.size(), h);
}

inline uint64_t hash_u64(uint64_t v, uint64_t h = kFnvOffset) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
    return fnv1a64(bytes, 8, h);
}

// Fixed-format float rendering so emitted artifacts are byte-stable.
std::string format_float(double v, int precision = 6);

// Shortest round-trip text for a float payload (used in JSON-like artifacts).
std::string float_repr(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
uint64_t hash_file(const std::filesystem::path& path);
std::string hex64(uint64_t v);

// Runs fn(i) for i in [0, n). With jobs <= 1 this is a plain loop; otherwise a
// fixed block partition over worker threads. Caller guarantees per-index
// independence; determinism comes from indices, never thread order.
void parallel_for(int64_t n, int jobs, const std::function<void(int64_t)>& fn);

// Effective worker count: jobs <= 0 means "use hardware concurrency".
int resolve_jobs(int jobs);

}  // namespace agb::util
