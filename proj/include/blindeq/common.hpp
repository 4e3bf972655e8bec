#pragma once

// Shared primitives: dual-polarization sample buffers, deterministic RNG
// streams, and a radix-2 FFT used for frequency-domain channel application.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace blindeq {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Two jointly processed polarization streams of equal length.
struct DualPol {
    std::vector<cdouble> h;
    std::vector<cdouble> v;

    DualPol() = default;
    DualPol(std::vector<cdouble> h_, std::vector<cdouble> v_)
        : h(std::move(h_)), v(std::move(v_)) {
        if (h.size() != v.size())
            throw std::invalid_argument("DualPol: polarization lengths differ");
    }
    explicit DualPol(std::size_t n) : h(n), v(n) {}

    std::size_t size() const { return h.size(); }
};

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// In-place iterative radix-2 FFT. `inverse` applies the 1/N scaling.
inline void fft_inplace(std::vector<cdouble>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_inplace: length must be a power of two");

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const cdouble wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cdouble u = a[i + k];
                const cdouble t = a[i + k + len / 2] * w;
                a[i + k] = u + t;
                a[i + k + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= s;
    }
}

/// Deterministic seeded stream. Gaussian draws use Box-Muller so results do
/// not depend on the standard library's distribution implementations.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        gen_.seed(seq);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * kPi * u2;
        spare_ = r * std::sin(th);
        has_spare_ = true;
        return r * std::cos(th);
    }

    /// Circularly symmetric complex normal with total variance `var`.
    cdouble complex_gaussian(double var) {
        const double s = std::sqrt(var / 2.0);
        const double re = gaussian();
        const double im = gaussian();
        return {s * re, s * im};
    }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace blindeq
