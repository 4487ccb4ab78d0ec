#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ramify/cyclotomic.hpp"
#include "ramify/finite_group.hpp"
#include "ramify/representation.hpp"

namespace ramify {

/// sum_h c_h e_h in F[H], multiplied by convolution.
class GroupAlgebraElement {
public:
    GroupAlgebraElement(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field);
    static GroupAlgebraElement basis(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field, int h);

    const std::shared_ptr<const FiniteGroup>& group() const noexcept { return group_; }
    const CycloRational& coeff(int h) const { return c_[h]; }
    CycloRational& coeff(int h) { return c_[h]; }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(const CycloRational& s) const;
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.c_ == b.c_; }

private:
    std::shared_ptr<const FiniteGroup> group_;
    const CyclotomicField* field_;
    std::vector<CycloRational> c_;
};

/// A class in HH_0(F[H]/F) on the basis <e_C> of conjugacy classes. In reduced
/// mode it lives in HH_0(F(H)/F): the relation sum_C |C| <e_C> = 0 is used to
/// eliminate the identity class, whose coefficient is then zero.
class HH0Class {
public:
    HH0Class(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field, bool reduced = false);
    /// Image of a group algebra element under the canonical map.
    static HH0Class canonical(const GroupAlgebraElement& x);

    const std::shared_ptr<const FiniteGroup>& group() const noexcept { return group_; }
    bool reduced() const noexcept { return reduced_; }
    /// Coefficient of <e_C> for the class with index c.
    const CycloRational& coeff(int c) const { return c_[c]; }
    const std::vector<CycloRational>& coeffs() const noexcept { return c_; }
    void add_to(int h, const CycloRational& value);

    /// Image in HH_0(F(H)/F).
    HH0Class reduction() const;
    HH0Class operator+(const HH0Class& o) const;
    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const HH0Class& a, const HH0Class& b) {
        return a.group_ == b.group_ && a.reduced_ == b.reduced_ && a.c_ == b.c_;
    }

private:
    std::shared_ptr<const FiniteGroup> group_;
    const CyclotomicField* field_;
    bool reduced_ = false;
    std::vector<CycloRational> c_;
};

/// M^v = Hom_F(M, F) as row vectors with right action f.h = f rho(h), the plain
/// duality gamma = sum_i f_i (x) e_i, eps(m (x) f) = f(m), coev = r o gamma and
/// ev(m (x) f) = (1/|H|) sum_g eps(g^{-1} m (x) f) e_g.
class DualityDatum {
public:
    /// Raises TriangularIdentityFailed if a triangular identity does not hold.
    explicit DualityDatum(const GroupModule& M);

    const GroupModule& module() const noexcept { return M_; }
    /// ev(m (x) f) for a column vector m and a row vector f.
    GroupAlgebraElement ev(const CycloMatrix& m, const CycloMatrix& f) const;
    /// coev(1) in M^v (x)_{F[H]} M, represented by the coinvariant average of
    /// gamma; entry (j, i) is the coefficient of f_i (x) e_j.
    const CycloMatrix& coev() const noexcept { return coev_; }

    /// (ev (x) id)(id (x) coev) on M, as a matrix.
    CycloMatrix left_triangle() const;
    /// (id (x) ev)(coev (x) id) on M^v, as a matrix acting on row vectors from the right.
    CycloMatrix right_triangle() const;
    /// ev is F[H]-bilinear on basis vectors.
    bool ev_is_bilinear() const;
    /// can(ev((T (x) id) coev(1))) before passing to conjugacy classes.
    GroupAlgebraElement ev_hh(const CycloMatrix& T) const;

private:
    GroupModule M_;
    std::vector<CycloMatrix> ev_table_;
    CycloMatrix coev_;
};

DualityDatum build_duality(const GroupModule& M);

/// Raises NotEquivariant unless T rho(h) = rho(h) T for all h.
void require_equivariant(const GroupModule& M, const CycloMatrix& T);

/// ev^HH o (id (x) T) o coev through the explicit duality datum.
HH0Class trace_via_duality(const GroupModule& M, const CycloMatrix& T);
/// (1/|H|) sum_h Tr_F(T rho(h^{-1})) <e_h>.
HH0Class trace_via_characters(const GroupModule& M, const CycloMatrix& T);

/// M/M^H realized on the image of id - (averaging projector).
GroupModule coinvariant_complement(const GroupModule& M);
/// Tr_{F(H)}(id : M/M^H) in HH_0(F(H)/F), computed through the duality datum of M/M^H.
HH0Class reduced_trace(const GroupModule& M);

/// Reynolds average of a random integer matrix: an H-linear endomorphism.
CycloMatrix random_equivariant(const GroupModule& M, std::mt19937_64& rng);

}  // namespace ramify
