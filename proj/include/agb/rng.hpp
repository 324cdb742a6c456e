#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "agb/util.hpp"

namespace agb {

// Counter-style pseudo-random stream (splitmix64 finalizer over an advancing
// counter). Every consumer derives its own child stream from a parent seed and
// a tag, so draw order in one component never perturbs another.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), counter_(0) {}

    uint64_t next_u64() {
        uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): 53 mantissa bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive integer range.
    int uniform_int(int lo, int hi) {
        uint64_t span = static_cast<uint64_t>(static_cast<int64_t>(hi) - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    // Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Independent derived stream; depends only on the construction seed and
    // the tag, never on how much this stream has been consumed.
    Rng child(uint64_t tag) const { return Rng(util::hash_u64(tag, util::hash_u64(seed_))); }
    Rng child(std::string_view tag) const { return Rng(util::hash_str(tag, util::hash_u64(seed_))); }

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t counter_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace agb
