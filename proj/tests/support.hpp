#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ramify/dvr.hpp"
#include "ramify/dvr_matrix.hpp"

namespace testing_support {

using namespace ramify;

/// Seeded generator for random algebraic test objects.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return rng_; }

    DVRElement element(const DVRSpec& spec) {
        std::vector<DVRElement::Digit> d(spec.precision());
        for (auto& x : d) x = static_cast<DVRElement::Digit>(uniform(0, static_cast<int>(spec.order()) - 1));
        return DVRElement::from_digits(spec, d);
    }

    /// Random element of exact valuation v < N.
    DVRElement element_of_valuation(const DVRSpec& spec, int v) {
        DVRElement u = unit(spec);
        return u.shift_up(v);
    }

    DVRElement unit(const DVRSpec& spec) {
        for (;;) {
            DVRElement x = element(spec);
            if (x.is_unit()) return x;
        }
    }

    /// Random unimodular matrix: product of elementary operations and unit scalings.
    DVRMatrix unimodular(const DVRSpec& spec, int n, int ops = 12) {
        DVRMatrix m = DVRMatrix::identity(spec, n);
        if (n == 0) return m;
        for (int k = 0; k < ops; ++k) {
            const int i = uniform(0, n - 1), j = uniform(0, n - 1);
            if (i != j) {
                const DVRElement c = element(spec);
                for (int col = 0; col < n; ++col) m(i, col) += c * m(j, col);
            } else {
                const DVRElement u = unit(spec);
                for (int col = 0; col < n; ++col) m(i, col) = m(i, col) * u;
            }
        }
        return m;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support

#include "ramify/eisenstein.hpp"
#include "ramify/multipoly.hpp"

namespace testing_support {

inline ramify::EisensteinExtension make_ext(const std::string& E, const ramify::DVRSpec& spec) {
    return ramify::EisensteinExtension::extend(ramify::parse_polynomial(E, spec).to_univariate());
}

inline ramify::DVRSpec eq(std::uint32_t q, int N = 8) { return ramify::DVRSpec::equal_char(q, N); }
inline ramify::DVRSpec mixed(std::uint32_t p, int N = 10) { return ramify::DVRSpec::mixed_char(p, N); }

}  // namespace testing_support
