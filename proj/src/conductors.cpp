#include "ramify/conductors.hpp"

#include <algorithm>

namespace ramify {

ClassFunction::ClassFunction(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                             std::vector<CycloRational> class_values)
    : group_(std::move(group)), field_(&field), values_(std::move(class_values)) {
    if (values_.size() != group_->classes().size())
        raise(ErrorKind::InvalidArgument, "one value per conjugacy class required");
}

ClassFunction ClassFunction::from_elements(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                           const std::vector<CycloRational>& values) {
    std::vector<CycloRational> cls;
    for (const auto& c : group->classes()) {
        for (int g : c)
            if (values[g] != values[c.front()])
                raise(ErrorKind::InvalidArgument, "values are not constant on conjugacy classes");
        cls.push_back(values[c.front()]);
    }
    return ClassFunction(std::move(group), field, std::move(cls));
}

ClassFunction ClassFunction::from_ints(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                       const std::vector<int>& values) {
    std::vector<CycloRational> v;
    for (int x : values) v.emplace_back(field, Rational(x));
    return from_elements(std::move(group), field, v);
}

ClassFunction ClassFunction::character_of(const GroupModule& V) {
    std::vector<CycloRational> v;
    for (int g = 0; g < V.group()->order(); ++g) v.push_back(V.character(g));
    return from_elements(V.group(), V.field(), v);
}

CycloRational ClassFunction::pairing(const ClassFunction& other) const {
    if (group_ != other.group_) raise(ErrorKind::InvalidArgument, "pairing across different groups");
    CycloRational s(*field_);
    for (std::size_t c = 0; c < values_.size(); ++c)
        s += (values_[c] * other.values_[c].conj()) * Rational(static_cast<long>(group_->classes()[c].size()));
    return s * Rational(1, group_->order());
}

const CyclotomicField& field_for(const GaloisData& G) { return CyclotomicField::get(G.group()->exponent()); }

ClassFunction swan_class_function(const GaloisData& G, const CyclotomicField& field) {
    return ClassFunction::from_ints(G.group(), field, character_table(G).sw);
}

ClassFunction artin_class_function(const GaloisData& G, const CyclotomicField& field) {
    return ClassFunction::from_ints(G.group(), field, character_table(G).ar);
}

namespace {

void check_module(const GroupModule& V, const GaloisData& G) {
    G.require_galois();
    if (V.group() != G.group()) raise(ErrorKind::InvalidArgument, "representation of a different group");
}

}  // namespace

Rational swan_conductor(const GroupModule& V, const GaloisData& G) {
    check_module(V, G);
    CycloRational s(V.field());
    for (int g : G.p_sylow()) {
        const int sw = swan_character(G, g);
        if (sw != 0) s += V.character(g) * Rational(sw);
    }
    return (s * Rational(1, G.order())).to_rational();
}

Rational artin_conductor(const GroupModule& V, const GaloisData& G) {
    check_module(V, G);
    CycloRational s(V.field());
    for (int g = 0; g < G.order(); ++g) s += V.character(g) * Rational(artin_character(G, g));
    return (s * Rational(1, G.order())).to_rational();
}

Rational dimtot(const std::vector<GroupModule>& graded, const GaloisData& G) {
    G.require_galois();
    Rational total = 0;
    for (const auto& V : graded) {
        const int sign = (V.degree() % 2 == 0) ? 1 : -1;
        total += sign * (Rational(V.dim()) + swan_conductor(V, G));
    }
    return total;
}

Rational dimtot(const GroupModule& V, const GaloisData& G) { return dimtot(std::vector<GroupModule>{V}, G); }

ConductorIdentityReport verify_conductor_identity(const GroupModule& V, const GaloisData& G) {
    if (V.degree() != 0) raise(ErrorKind::InvalidArgument, "conductor identity expects V in degree 0");
    ConductorIdentityReport r;
    r.dimtot = dimtot(V, G);
    r.artin = artin_conductor(V, G);
    r.fixed_dim = V.fixed_dimension();
    r.holds = r.dimtot == r.artin + r.fixed_dim;
    return r;
}

GroupModule vanishing_cycle_rep_n0(const GaloisData& G, const CyclotomicField& field) {
    G.require_galois();
    return GroupModule::augmentation(G.group(), field);
}

}  // namespace ramify
