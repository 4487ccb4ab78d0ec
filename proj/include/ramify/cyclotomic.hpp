#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string rational_to_string(const Rational& r);

/// Q(zeta_m) presented as Q[z] / Phi_m(z). Interned per m.
class CyclotomicField {
public:
    static const CyclotomicField& get(int m);

    int m() const noexcept { return m_; }
    int degree() const noexcept { return phi_; }
    /// Coefficients of zeta^k, 0 <= k < m, in the power basis.
    const std::vector<Rational>& zeta_power(int k) const { return powers_[((k % m_) + m_) % m_]; }
    const std::vector<BigInt>& cyclotomic_polynomial() const noexcept { return poly_; }

private:
    explicit CyclotomicField(int m);
    int m_;
    int phi_;
    std::vector<BigInt> poly_;
    std::vector<std::vector<Rational>> powers_;
};

std::vector<BigInt> cyclotomic_polynomial(int m);

class CycloRational {
public:
    CycloRational() : CycloRational(CyclotomicField::get(1)) {}
    explicit CycloRational(const CyclotomicField& field);
    CycloRational(const CyclotomicField& field, const Rational& r);

    static CycloRational zeta(const CyclotomicField& field, int k);

    const CyclotomicField& field() const noexcept { return *field_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    CycloRational operator+(const CycloRational& o) const;
    CycloRational operator-(const CycloRational& o) const;
    CycloRational operator-() const;
    CycloRational operator*(const CycloRational& o) const;
    CycloRational operator*(const Rational& r) const;
    CycloRational& operator+=(const CycloRational& o) { return *this = *this + o; }
    CycloRational& operator-=(const CycloRational& o) { return *this = *this - o; }
    CycloRational& operator*=(const CycloRational& o) { return *this = *this * o; }

    CycloRational inverse() const;
    /// Complex conjugation zeta -> zeta^{-1}.
    CycloRational conj() const;
    bool is_zero() const;
    bool is_rational() const;
    /// Throws InvalidArgument unless is_rational().
    Rational to_rational() const;

    std::string to_string() const;

    friend bool operator==(const CycloRational& a, const CycloRational& b);
    friend bool operator!=(const CycloRational& a, const CycloRational& b) { return !(a == b); }

private:
    const CyclotomicField* field_;
    std::vector<Rational> c_;
};

/// Dense matrix over Q(zeta_m).
class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(const CyclotomicField& field, int rows, int cols);

    static CycloMatrix identity(const CyclotomicField& field, int n);
    static CycloMatrix from_ints(const CyclotomicField& field, const std::vector<std::vector<long long>>& rows);

    const CyclotomicField& field() const { return *field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    CycloRational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const CycloRational& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    CycloMatrix operator+(const CycloMatrix& o) const;
    CycloMatrix operator-(const CycloMatrix& o) const;
    CycloMatrix operator*(const CycloMatrix& o) const;
    CycloMatrix scaled(const CycloRational& c) const;
    CycloMatrix transpose() const;
    CycloRational trace() const;
    bool is_zero() const;

    int rank() const;
    /// Indices of a maximal set of linearly independent columns (leftmost first).
    std::vector<int> independent_columns() const;
    CycloMatrix select_columns(const std::vector<int>& cols) const;
    /// Solve A X = B for A of full column rank with B in its column span.
    static CycloMatrix solve(const CycloMatrix& A, const CycloMatrix& B);
    CycloMatrix inverse() const;
    /// Block-diagonal sum.
    static CycloMatrix direct_sum(const CycloMatrix& a, const CycloMatrix& b);
    /// Kronecker product.
    static CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);

    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void set_from(const CycloMatrix& A, const CycloMatrix& B);

    const CyclotomicField* field_ = nullptr;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<CycloRational> data_;
};

}  // namespace ramify
