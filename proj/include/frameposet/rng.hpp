#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace frameposet {

// Seeded generator with hand-rolled distributions. std::mt19937_64 output is
// standardized, the std distributions are not; Box-Muller on raw bits keeps
// every sampled value reproducible across platforms.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    double uniform01() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    long long uniform_int(long long lo, long long hi) {  // inclusive
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(gen_() % range);
    }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::vector<double> unit_vector(int n) {
        std::vector<double> v(n);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& x : v) {
                x = gauss();
                norm += x * x;
            }
        } while (norm < 1e-12);
        norm = std::sqrt(norm);
        for (auto& x : v) x /= norm;
        return v;
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace frameposet
