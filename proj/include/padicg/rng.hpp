#pragma once

#include "padicg/residue.hpp"

namespace padicg {

// splitmix64: tiny, seeded, identical on every platform, which keeps sampled
// verification runs byte-reproducible.
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) by rejection
    u64 below(u64 n) {
        u64 limit = UINT64_MAX - UINT64_MAX % n;
        u64 v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    u64 in_range(u64 lo, u64 hi) { return lo + below(hi - lo + 1); }

private:
    u64 state_;
};

} // namespace padicg
