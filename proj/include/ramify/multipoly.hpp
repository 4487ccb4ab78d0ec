#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramify/dvr.hpp"
#include "ramify/dvr_matrix.hpp"

namespace ramify {

using Monomial = std::vector<int>;

/// Sparse polynomial in x_0..x_{n-1} over a truncated DVR.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const DVRSpec& spec, int nvars);

    static MultiPoly constant(const DVRSpec& spec, int nvars, const DVRElement& c);
    static MultiPoly variable(const DVRSpec& spec, int nvars, int i);

    const DVRSpec& spec() const noexcept { return spec_; }
    int nvars() const noexcept { return nvars_; }
    const std::map<Monomial, DVRElement>& terms() const noexcept { return terms_; }
    DVRElement coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const DVRElement& c);
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly pow(int k) const;
    MultiPoly derivative(int i) const;
    /// x_i -> sum_j L(i, j) x_j.
    MultiPoly linear_substitution(const DVRMatrix& L) const;
    MultiPoly with_precision(int precision) const;
    MultiPoly with_nvars(int nvars) const;
    /// Requires nvars == 1.
    DVRPoly to_univariate() const;

    std::string to_string() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    DVRSpec spec_;
    int nvars_ = 0;
    std::map<Monomial, DVRElement> terms_;
};

/// Integer infix expressions over {t, x, x0..x9} with + - * ^ and parentheses.
/// `x` means x0. `t` is the uniformizer and is rejected in mixed characteristic.
/// The result has max(min_vars, highest variable index + 1) variables.
MultiPoly parse_polynomial(const std::string& text, const DVRSpec& spec, int min_vars = 1);

}  // namespace ramify
