#pragma once

#include <memory>
#include <random>
#include <vector>

#include "ramify/cyclotomic.hpp"
#include "ramify/finite_group.hpp"

namespace ramify {

/// Finite-dimensional representation of a finite group over Q(zeta_m), with one
/// matrix per group element and a cohomological degree.
class GroupModule {
public:
    GroupModule(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                std::vector<CycloMatrix> rho, int degree = 0);

    static GroupModule trivial(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field);
    static GroupModule regular(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field);
    /// Permutation representation from an action table perm[g][i] = g.i.
    static GroupModule permutation(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                   const std::vector<std::vector<int>>& perm);
    /// Left action on the cosets g<h>.
    static GroupModule cosets(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field, int h);
    /// Augmentation representation Q[G]/triv, basis e_g (g != id), e_id = -sum e_g.
    static GroupModule augmentation(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field);
    /// One-dimensional character g^k -> zeta_n^{jk} of a cyclic group generated by gen.
    static GroupModule cyclic_character(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                        int gen, int j);
    /// Sign of S3 (or of any group given by permutations of three points).
    static GroupModule sign(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field);
    /// Two-dimensional standard representation of S3.
    static GroupModule standard(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field);

    const std::shared_ptr<const FiniteGroup>& group() const noexcept { return group_; }
    const CyclotomicField& field() const noexcept { return *field_; }
    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    const CycloMatrix& rho(int g) const { return rho_[g]; }
    CycloRational character(int g) const { return rho_[g].trace(); }

    GroupModule shifted(int degree) const;
    GroupModule conjugated(const CycloMatrix& P) const;
    static GroupModule direct_sum(const GroupModule& a, const GroupModule& b);

    /// Checks rho(g) rho(h) = rho(gh) on the whole table and rho(id) = I.
    bool is_homomorphism() const;
    /// dim V^G = dim - rank(stacked rho(g) - I).
    int fixed_dimension() const;
    /// Averaging idempotent (1/|G|) sum rho(g).
    CycloMatrix averaging_projector() const;

private:
    std::shared_ptr<const FiniteGroup> group_;
    const CyclotomicField* field_;
    std::vector<CycloMatrix> rho_;
    int dim_ = 0;
    int degree_ = 0;
};

/// An element of maximal order when the group is cyclic, else -1.
int cyclic_generator(const FiniteGroup& G);

/// Random invertible integer matrix with entries in [-2, 2].
CycloMatrix random_invertible(const CyclotomicField& field, int n, std::mt19937_64& rng);

/// Random finite-monodromy representation: a direct sum of one to three
/// permutation models and characters, conjugated by a random invertible
/// integer matrix.
GroupModule random_module(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                          std::mt19937_64& rng, int max_dim = 8);

}  // namespace ramify
