// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace masklab {

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace detail {
inline void join_label(std::string&) {}

template <class T, class... Rest>
void join_label(std::string& out, const T& head, const Rest&... rest) {
    out += '/';
    if constexpr (std::is_convertible_v<T, std::string>) {
        out += std::string(head);
    } else {
        out += std::to_string(head);
    }
    join_label(out, rest...);
}
}  // namespace detail

// Builds a hierarchical stream label, e.g. stream_label("rollout", 3, 7) == "rollout/3/7".
template <class... Parts>
std::string stream_label(const std::string& head, const Parts&... parts) {
    std::string out = head;
    detail::join_label(out, parts...);
    return out;
}

// Deterministic, label-addressed random stream. Two streams constructed from the
// same (seed, label) yield identical draw sequences; distinct labels give
// statistically independent streams. All mappings from raw engine output to
// floats/ints are hand-rolled so draws are bit-identical across platforms.
class RngStream {
public:
    RngStream(uint64_t master_seed, const std::string& label)
        : seed_(master_seed), label_(label) {
        uint64_t s = splitmix64(master_seed ^ splitmix64(fnv1a64(label)));
        engine_.seed(s);
    }

    template <class... Parts>
    RngStream substream(const Parts&... parts) const {
        return RngStream(seed_, stream_label(label_, parts...));
    }

    uint64_t master_seed() const { return seed_; }
    const std::string& label() const { return label_; }
    uint64_t draws() const { return counter_; }

    uint64_t next_u64() {
        ++counter_;
        return engine_();
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n) by rejection, bias-free.
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) throw std::domain_error("uniform_int: n must be positive");
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; spare value cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t seed_;
    std::string label_;
    std::mt19937_64 engine_;
    uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace masklab
