#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramify/errors.hpp"
#include "ramify/finite_field.hpp"

namespace ramify {

/// A complete DVR truncated at a fixed precision N.
///
/// EqualChar(q): F_q[[t]] / t^N, uniformizer t.
/// MixedChar(p): Z_p / p^N = Z / p^N, uniformizer p.
class DVRSpec {
public:
    enum class Kind : std::uint8_t { EqualChar, MixedChar };

    static constexpr int kMaxPrecision = 64;

    static DVRSpec equal_char(std::uint32_t q, int precision);
    static DVRSpec mixed_char(std::uint32_t p, int precision);

    Kind kind() const noexcept { return kind_; }
    bool is_equal_char() const noexcept { return kind_ == Kind::EqualChar; }
    /// q for EqualChar, p for MixedChar.
    std::uint32_t order() const noexcept { return order_; }
    int precision() const noexcept { return precision_; }
    /// Characteristic of the residue field.
    std::uint32_t residue_characteristic() const noexcept;
    /// Size of the residue field.
    std::uint32_t residue_order() const noexcept { return order_; }
    const FiniteField& residue_field() const;

    /// Same ring at another precision (validated like the constructors).
    DVRSpec with_precision(int precision) const;

    /// p^N for MixedChar.
    std::uint64_t modulus() const noexcept { return modulus_; }

    std::string describe() const;

    friend bool operator==(const DVRSpec& a, const DVRSpec& b) noexcept {
        return a.kind_ == b.kind_ && a.order_ == b.order_ && a.precision_ == b.precision_;
    }
    friend bool operator!=(const DVRSpec& a, const DVRSpec& b) noexcept { return !(a == b); }

private:
    Kind kind_ = Kind::MixedChar;
    std::uint32_t order_ = 2;
    int precision_ = 2;
    std::uint64_t modulus_ = 4;
    const FiniteField* field_ = nullptr;
};

/// Valuation of a truncated element: an exact integer below the precision,
/// or AtLeast(N) when the element vanishes at precision N.
struct Valuation {
    int value = 0;
    bool at_least = false;

    static Valuation exact(int v) noexcept { return {v, false}; }
    static Valuation lower_bound(int v) noexcept { return {v, true}; }

    bool is_exact() const noexcept { return !at_least; }

    friend bool operator==(const Valuation& a, const Valuation& b) noexcept {
        return a.value == b.value && a.at_least == b.at_least;
    }
    std::string to_string() const;
};

class DVRElement {
public:
    using Digit = std::uint32_t;

    DVRElement() = default;

    static DVRElement zero(const DVRSpec& spec);
    static DVRElement one(const DVRSpec& spec);
    static DVRElement from_int(const DVRSpec& spec, long long n);
    /// Residue-field constant lifted as a digit-0 element (EqualChar: an F_q
    /// element code; MixedChar: an integer in [0, p)).
    static DVRElement constant(const DVRSpec& spec, Digit residue);
    static DVRElement uniformizer_power(const DVRSpec& spec, int k);
    /// Little-endian pi-adic digits. MixedChar digits are base-p integers.
    static DVRElement from_digits(const DVRSpec& spec, const std::vector<Digit>& digits);

    const DVRSpec& spec() const noexcept { return spec_; }

    std::vector<Digit> digits() const;

    Valuation valuation() const noexcept;
    bool is_zero() const noexcept;
    bool is_unit() const noexcept;

    DVRElement operator+(const DVRElement& o) const;
    DVRElement operator-(const DVRElement& o) const;
    DVRElement operator-() const;
    DVRElement operator*(const DVRElement& o) const;
    DVRElement& operator+=(const DVRElement& o) { return *this = *this + o; }
    DVRElement& operator-=(const DVRElement& o) { return *this = *this - o; }
    DVRElement& operator*=(const DVRElement& o) { return *this = *this * o; }

    /// Inverse of a unit; PrecisionLoss-free, InvalidArgument on non-units.
    DVRElement unit_inverse() const;
    /// Multiply by pi^k (digits pushed past N are dropped).
    DVRElement shift_up(int k) const;
    /// Divide by pi^k; requires valuation >= k. The top k digits become 0.
    DVRElement shift_down(int k) const;
    /// a / b for v(a) >= v(b), v(b) exact. The result is determined modulo
    /// pi^(N - v(b)); the canonical zero-padded representative is returned.
    static DVRElement exact_div(const DVRElement& a, const DVRElement& b);

    /// Reduce to a lower precision, or pad with zero digits to a higher one
    /// (treating the stored representative as exact).
    DVRElement with_precision(int precision) const;

    std::string to_string() const;

    friend bool operator==(const DVRElement& a, const DVRElement& b) noexcept;
    friend bool operator!=(const DVRElement& a, const DVRElement& b) noexcept { return !(a == b); }

private:
    explicit DVRElement(const DVRSpec& spec) : spec_(spec) {}
    void check_same(const DVRElement& o) const;

    DVRSpec spec_;
    std::uint64_t value_ = 0;                       // MixedChar representative
    std::array<std::uint16_t, DVRSpec::kMaxPrecision> series_{};  // EqualChar digits
};

/// Dense polynomial over a truncated DVR, lowest degree first.
class DVRPoly {
public:
    DVRPoly() = default;
    explicit DVRPoly(const DVRSpec& spec) : spec_(spec) {}
    DVRPoly(const DVRSpec& spec, std::vector<DVRElement> coeffs);
    static DVRPoly from_ints(const DVRSpec& spec, const std::vector<long long>& coeffs);
    static DVRPoly monomial(const DVRSpec& spec, int degree, const DVRElement& c);

    const DVRSpec& spec() const noexcept { return spec_; }
    const std::vector<DVRElement>& coeffs() const noexcept { return coeffs_; }
    /// Degree after trimming exact zeros; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    DVRElement coeff(int i) const;
    bool is_monic() const;

    DVRPoly operator+(const DVRPoly& o) const;
    DVRPoly operator-(const DVRPoly& o) const;
    DVRPoly operator*(const DVRPoly& o) const;
    DVRPoly scaled(const DVRElement& c) const;

    DVRPoly derivative() const;
    /// j-th Hasse derivative: sum_i binom(i, j) c_i x^(i-j).
    DVRPoly hasse_derivative(int j) const;
    DVRElement evaluate(const DVRElement& x) const;
    DVRPoly with_precision(int precision) const;

    friend bool operator==(const DVRPoly& a, const DVRPoly& b) noexcept {
        return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    DVRSpec spec_;
    std::vector<DVRElement> coeffs_;
};

/// True iff E is monic, every lower coefficient has valuation >= 1 and the
/// constant term has valuation exactly 1.
bool is_eisenstein(const DVRPoly& E);

}  // namespace ramify
