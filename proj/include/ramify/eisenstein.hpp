#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ramify/dvr.hpp"
#include "ramify/dvr_matrix.hpp"
#include "ramify/finite_group.hpp"

namespace ramify {

/// A' = A[x] / <E(x)> for an Eisenstein polynomial E of degree e >= 2.
/// Elements are coefficient vectors (length e) in the basis 1, pi, ..., pi^{e-1}
/// with pi = pi_L = x. A' / pi_K^N = A' / pi_L^{eN}.
class EisensteinExtension {
public:
    using Elem = std::vector<DVRElement>;

    /// Raises NotEisenstein or DegreeOne.
    static EisensteinExtension extend(const DVRPoly& E);

    const DVRSpec& base() const noexcept { return spec_; }
    const DVRPoly& polynomial() const noexcept { return E_; }
    int degree() const noexcept { return e_; }
    /// eN: the pi_L-adic precision of A'.
    int precision_L() const noexcept { return e_ * spec_.precision(); }

    Elem zero() const;
    Elem one() const;
    Elem uniformizer() const;
    Elem from_base(const DVRElement& a) const;
    /// sum_k c_k pi^k for residue digits c_k (lifted as constants of A).
    Elem from_digits(const std::vector<std::uint32_t>& digits) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const DVRElement& c) const;
    Elem pow(const Elem& a, int k) const;
    bool is_zero(const Elem& a) const;
    bool equal(const Elem& a, const Elem& b) const;

    /// v_L(a) = min_i (e v_K(a_i) + i); AtLeast(eN) when every coefficient vanishes.
    Valuation valuation(const Elem& a) const;

    /// f(y) for f with coefficients in A.
    Elem evaluate(const DVRPoly& f, const Elem& y) const;
    /// Substitute y for pi in an element: sum_i a_i y^i.
    Elem substitute(const Elem& a, const Elem& y) const;

    /// Matrix of multiplication by a on the A-basis 1, pi, ..., pi^{e-1}.
    DVRMatrix multiplication_matrix(const Elem& a) const;

    /// The same extension over the base truncated or padded to `precision`.
    EisensteinExtension with_precision(int precision) const;

    std::string to_string(const Elem& a) const;

private:
    EisensteinExtension(const DVRPoly& E);
    DVRSpec spec_;
    DVRPoly E_;
    int e_ = 0;
};

/// v_L(E'(pi_L)); PrecisionLoss when E'(pi_L) vanishes at precision.
int different_valuation(const EisensteinExtension& ext);

/// Automorphisms of A' over A, each determined by the image of pi_L.
class GaloisData {
public:
    const EisensteinExtension& extension() const noexcept { return ext_; }
    int order() const noexcept { return static_cast<int>(images_.size()); }
    bool is_galois() const noexcept { return order() == ext_.degree(); }
    /// Image of pi_L under element g; element 0 is the identity.
    const EisensteinExtension::Elem& image(int g) const { return images_[g]; }
    /// pi_L-adic residue digits of g(pi_L), known modulo pi_L^{known_digits}.
    const std::vector<std::uint32_t>& image_digits(int g) const { return digits_[g]; }
    int known_digits() const noexcept { return known_digits_; }
    const std::shared_ptr<const FiniteGroup>& group() const noexcept { return group_; }
    /// Elements of p-power order, p the residue characteristic.
    const std::vector<int>& p_sylow() const noexcept { return p_sylow_; }
    int different() const noexcept { return different_; }

    /// Throws NotGalois unless is_galois().
    void require_galois() const;

private:
    friend GaloisData automorphism_group(const EisensteinExtension& ext);
    explicit GaloisData(const EisensteinExtension& ext) : ext_(ext) {}

    EisensteinExtension ext_;
    std::vector<EisensteinExtension::Elem> images_;
    std::vector<std::vector<std::uint32_t>> digits_;
    int known_digits_ = 0;
    int different_ = 0;
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<int> p_sylow_;
};

/// Roots of E in A' by pi_L-adic digit search with Newton-polygon pruning and
/// Hensel certification.
GaloisData automorphism_group(const EisensteinExtension& ext);

int artin_character(const GaloisData& G, int g);
int swan_character(const GaloisData& G, int g);

struct CharacterTable {
    std::vector<int> ar;
    std::vector<int> sw;
};
CharacterTable character_table(const GaloisData& G);

}  // namespace ramify
