#pragma once

#include <vector>

#include "ramify/cyclotomic.hpp"
#include "ramify/eisenstein.hpp"
#include "ramify/representation.hpp"

namespace ramify {

/// A class function with values in Q(zeta_m), stored per conjugacy class.
class ClassFunction {
public:
    ClassFunction(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                  std::vector<CycloRational> class_values);
    /// From per-element values; throws InvalidArgument if not constant on classes.
    static ClassFunction from_elements(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                       const std::vector<CycloRational>& values);
    static ClassFunction from_ints(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                   const std::vector<int>& values);
    static ClassFunction character_of(const GroupModule& V);

    const std::shared_ptr<const FiniteGroup>& group() const noexcept { return group_; }
    const CycloRational& value(int g) const { return values_[group_->class_of(g)]; }
    const std::vector<CycloRational>& class_values() const noexcept { return values_; }

    /// <f1, f2> = (1/|G|) sum f1(g) conj(f2(g)).
    CycloRational pairing(const ClassFunction& other) const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    const CyclotomicField* field_;
    std::vector<CycloRational> values_;
};

/// Field used for a Galois group: Q(zeta_m), m = exponent.
const CyclotomicField& field_for(const GaloisData& G);

/// sw and ar as class functions.
ClassFunction swan_class_function(const GaloisData& G, const CyclotomicField& field);
ClassFunction artin_class_function(const GaloisData& G, const CyclotomicField& field);

/// (1/|G|) sum_{g in P} sw(g) chi_V(g); V must be a representation of G.group().
Rational swan_conductor(const GroupModule& V, const GaloisData& G);
/// (1/|G|) sum_g ar(g) chi_V(g).
Rational artin_conductor(const GroupModule& V, const GaloisData& G);
/// chi + Sw over a graded family, each summand weighted by (-1)^degree.
Rational dimtot(const std::vector<GroupModule>& graded, const GaloisData& G);
Rational dimtot(const GroupModule& V, const GaloisData& G);

struct ConductorIdentityReport {
    Rational dimtot;
    Rational artin;
    int fixed_dim = 0;
    bool holds = false;
};
/// dimtot(V) = Ar(V) + dim V^G for V in degree 0.
ConductorIdentityReport verify_conductor_identity(const GroupModule& V, const GaloisData& G);

/// The augmentation representation modelling the vanishing cycles at n = 0.
GroupModule vanishing_cycle_rep_n0(const GaloisData& G, const CyclotomicField& field);

}  // namespace ramify
