#pragma once

#include <cstdint>
#include <vector>

namespace ramify {

/// The field F_q, q = p^k, with elements encoded as integers in [0, q): the
/// base-p digits of an element are the coefficients of its polynomial
/// representative modulo a primitive polynomial of degree k.
///
/// Instances are interned; obtain them through FiniteField::get.
class FiniteField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    static const FiniteField& get(std::uint32_t q);
    static bool is_prime(std::uint32_t n);
    /// Returns p if q = p^k with k >= 1, else 0.
    static std::uint32_t prime_of(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem from_int(long long n) const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t n) const noexcept;

    /// A generator of the multiplicative group.
    Elem primitive_element() const noexcept { return exp_[1]; }

private:
    explicit FiniteField(std::uint32_t q);

    std::uint32_t q_ = 0;
    std::uint32_t p_ = 0;
    unsigned k_ = 0;
    std::vector<Elem> exp_;  // exp_[i] = g^i, doubled length to skip a modulo
    std::vector<std::uint32_t> log_;
};

}  // namespace ramify
