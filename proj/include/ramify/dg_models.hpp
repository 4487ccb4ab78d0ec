#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ramify/dvr.hpp"
#include "ramify/dvr_matrix.hpp"
#include "ramify/eisenstein.hpp"
#include "ramify/multipoly.hpp"

namespace ramify {

// ---------------------------------------------------------------------------
// Strict dg-modules

/// The dg-algebra a module is defined over.
///   Plain:   A (a complex of free A-modules)
///   KA:      A[eps], d(eps) = pi_K
///   KA2:     A[eps1, eps2]
///   KAprime: A'[eps], d(eps) = pi_L
///   Aprime:  A' = A[x]/E(x)
///   Adouble: A'' = A[x1, x2]/(E(x1), E(x2))
enum class DGBase { Plain, KA, KA2, KAprime, Aprime, Adouble };

const char* dg_base_name(DGBase base) noexcept;

/// A dg-module over one of the strict models, free of finite rank over A.
/// Every structure map is a square matrix over A on the same basis:
/// `odd` holds the actions of the degree -1 generators and `even` the actions
/// of x (or x1, x2).
class FreeDGModule {
public:
    FreeDGModule() = default;
    FreeDGModule(DGBase base, const DVRSpec& spec, std::vector<int> degrees, DVRMatrix d,
                 std::vector<DVRMatrix> odd = {}, std::vector<DVRMatrix> even = {},
                 std::optional<DVRPoly> E = std::nullopt);

    DGBase base() const noexcept { return base_; }
    const DVRSpec& spec() const noexcept { return spec_; }
    int rank() const noexcept { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    const DVRMatrix& d() const noexcept { return d_; }
    const std::vector<DVRMatrix>& odd() const noexcept { return odd_; }
    const std::vector<DVRMatrix>& even() const noexcept { return even_; }
    const std::optional<DVRPoly>& eisenstein() const noexcept { return E_; }

    /// Empty when every relation of the base holds, else the failing relation.
    std::string check() const;
    /// Raises InvalidArgument with the failing relation.
    void validate() const;

    // Standard objects.
    static FreeDGModule unit_ka(const DVRSpec& spec);
    /// K_A with both eps1 and eps2 acting as eps.
    static FreeDGModule unit_ka_diagonal(const DVRSpec& spec);
    static FreeDGModule regular_ka2(const DVRSpec& spec);
    static FreeDGModule unit_aprime(const EisensteinExtension& ext);
    /// A' with x1 and x2 both acting as x.
    static FreeDGModule unit_aprime_diagonal(const EisensteinExtension& ext);
    static FreeDGModule regular_adouble(const EisensteinExtension& ext);
    /// [A' eps -> A'] with d(eps) = pi_L: the Koszul model of k over K_{A'}.
    static FreeDGModule residue_model_kaprime(const EisensteinExtension& ext);

    /// X (x)_A C for a plain complex C; the structure of X acts on the left factor.
    static FreeDGModule tensor_complex(const FreeDGModule& X, const FreeDGModule& C);
    /// Hom_A(X, A) with transposed actions; degrees are negated.
    FreeDGModule dual() const;
    /// Forget to a complex of A-modules.
    FreeDGModule underlying_complex() const;

private:
    DGBase base_ = DGBase::Plain;
    DVRSpec spec_;
    std::vector<int> degrees_;
    DVRMatrix d_;
    std::vector<DVRMatrix> odd_;
    std::vector<DVRMatrix> even_;
    std::optional<DVRPoly> E_;
};

/// Random complex of free A-modules: cones of random maps plus free summands,
/// conjugated by random unimodular changes of basis in each degree.
FreeDGModule random_complex(const DVRSpec& spec, std::mt19937_64& rng, int max_rank = 3);

/// Cohomology of the underlying complex of A-modules, by degree.
std::map<int, DVRCohomology> dg_cohomology(const FreeDGModule& M);

/// A quotient of M (x)_A N by relations, with the maps from M (x)_A N.
struct TensorQuotient {
    FreeDGModule module;
    DVRMatrix projection;  // rank(Q) x rank(M) rank(N)
    DVRMatrix section;     // rank(M) rank(N) x rank(Q)
};

/// M (x)_{K_A} N with K_A acting on M by eps2 and on N by eps1.
/// M is a K_A2-module; N a K_A- or K_A2-module.
TensorQuotient convolution_with_maps(const FreeDGModule& M, const FreeDGModule& N);
FreeDGModule convolution(const FreeDGModule& M, const FreeDGModule& N);

/// M (x)_{A'} N with A' acting on M by x2 and on N by x1.
/// M is an A''-module; N an A'- or A''-module.
TensorQuotient circled_product_with_maps(const FreeDGModule& M, const FreeDGModule& N);
FreeDGModule circled_product(const FreeDGModule& M, const FreeDGModule& N);

/// M (x)_{A'} N for A'-modules (single x action on each side).
TensorQuotient tensor_over_aprime(const FreeDGModule& M, const FreeDGModule& N);

struct StructureCheck {
    bool ok = true;
    std::string failure;
};

/// Builds the canonical comparison map between (M1 . M2) . M3 and
/// M1 . (M2 . M3) and checks it is an isomorphism of dg-modules over the base.
StructureCheck check_associativity(const FreeDGModule& M1, const FreeDGModule& M2, const FreeDGModule& M3,
                                   bool circled);
/// unit . N -> N through the multiplication map; checks it is an isomorphism.
StructureCheck check_left_unit(const FreeDGModule& N, bool circled);

// ---------------------------------------------------------------------------
// Hopf algebroids

/// A commutative dg-algebra over A with generators g_1..g_n that are either all
/// odd (exterior, degree -1, d g_i = pi_K) or all even with E(g_i) = 0.
class GeneratedAlgebra {
public:
    using Elem = std::vector<DVRElement>;

    static GeneratedAlgebra exterior(const DVRSpec& spec, int ngens);
    static GeneratedAlgebra eisenstein_power(const EisensteinExtension& ext, int ngens);

    const DVRSpec& spec() const noexcept { return spec_; }
    int ngens() const noexcept { return ngens_; }
    bool odd() const noexcept { return odd_; }
    int dim() const noexcept { return static_cast<int>(basis_.size()); }
    int degree(int basis_index) const;

    Elem zero() const;
    Elem one() const;
    Elem generator(int i) const;
    Elem basis_element(int i) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem differential(const Elem& a) const;
    /// Homogeneous degree, or nullopt if mixed; zero has every degree.
    std::optional<int> homogeneous_degree(const Elem& a) const;
    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    const std::optional<DVRPoly>& eisenstein() const noexcept { return E_; }

private:
    GeneratedAlgebra() = default;
    int index_of(const Monomial& m) const;
    Elem basis_product(int a, int b) const;

    DVRSpec spec_;
    int ngens_ = 0;
    bool odd_ = true;
    int e_ = 2;
    std::optional<DVRPoly> E_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int> index_;
    std::vector<Elem> power_reduction_;  // x^k in the basis 1..x^{e-1}, k < 2e - 1
};

/// A map of generated algebras determined by generator images.
struct AlgebraMap {
    const GeneratedAlgebra* source = nullptr;
    const GeneratedAlgebra* target = nullptr;
    std::vector<GeneratedAlgebra::Elem> images;

    GeneratedAlgebra::Elem apply(const GeneratedAlgebra::Elem& a) const;
    /// target.dim() x source.dim()
    DVRMatrix matrix() const;
    /// Empty when it is a dg-algebra map, else the failing condition.
    std::string check_dg_ring_map() const;
};

enum class HopfKind { KA2, Adouble };

/// The tensor powers T_1..T_4 of the base algebra over A together with the
/// structure maps on generators.
class HopfAlgebroidModel {
public:
    static HopfAlgebroidModel ka2(const DVRSpec& spec);
    static HopfAlgebroidModel adouble(const EisensteinExtension& ext);
    /// Negative control: the antipode replaced by the identity.
    HopfAlgebroidModel with_identity_antipode() const;

    HopfKind kind() const noexcept { return kind_; }
    /// T_n for n = 1..4.
    const GeneratedAlgebra& power(int n) const { return powers_.at(n - 1); }

    AlgebraMap left_unit() const;   // T1 -> T2, g -> g1
    AlgebraMap right_unit() const;  // T1 -> T2, g -> g2
    AlgebraMap counit() const;      // T2 -> T1, g1, g2 -> g
    AlgebraMap composition() const; // T2 -> T3, g1 -> g1, g2 -> g3
    AlgebraMap antipode() const;    // T2 -> T2

private:
    HopfKind kind_ = HopfKind::KA2;
    std::vector<GeneratedAlgebra> powers_;
    std::vector<int> antipode_images_{1, 0};
};

/// Units are ring maps, the counit retracts both, the antipode is an involution
/// exchanging the units, and the composition is coassociative and counital.
StructureCheck check_hopf_axioms(const HopfAlgebroidModel& model);

// ---------------------------------------------------------------------------
// Matrix factorizations

/// (phi: E -> F, psi: F -> E) with psi phi = f id_E and phi psi = f id_F over
/// R = k[[x]], realized as the equal-characteristic DVR with x as uniformizer,
/// or over its residue field k when `residue` is set. Entries are polynomials
/// in x so the factorization can be rebuilt at any precision.
class MatrixFactorization {
public:
    MatrixFactorization(const DVRSpec& ring, const DVRElement& potential, const DVRMatrix& phi, const DVRMatrix& psi,
                        bool residue = false);

    const DVRSpec& ring() const noexcept { return ring_; }
    bool over_residue_field() const noexcept { return residue_; }
    const DVRElement& potential() const noexcept { return f_; }
    const DVRMatrix& phi() const noexcept { return phi_; }
    const DVRMatrix& psi() const noexcept { return psi_; }
    int rank_E() const noexcept { return phi_.cols(); }
    int rank_F() const noexcept { return phi_.rows(); }

    MatrixFactorization with_precision(int precision) const;
    static MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);
    /// (f, 1) on rank-one modules.
    static MatrixFactorization contractible(const DVRSpec& ring, const DVRElement& potential);
    /// x^e as a potential on k[[x]].
    static DVRSpec power_series_ring(std::uint32_t q);

private:
    void validate() const;
    DVRSpec ring_;
    DVRElement f_;
    DVRMatrix phi_;
    DVRMatrix psi_;
    bool residue_ = false;
};

struct PeriodicCohomology {
    int even = 0;
    int odd = 0;
    friend bool operator==(const PeriodicCohomology& a, const PeriodicCohomology& b) noexcept {
        return a.even == b.even && a.odd == b.odd;
    }
};

/// (phi, psi) = (x, x^{e-1}) for the potential x^e on k[[x]].
MatrixFactorization stabilized_residue_field(std::uint32_t q, int e);

/// The Z/2-graded Hom complex Hom(M, N) as a periodic complex:
/// even part Hom(E, E') + Hom(F, F'), odd part Hom(E, F') + Hom(F, E').
PeriodicComplex mf_hom_complex(const MatrixFactorization& M, const MatrixFactorization& N);

/// Lengths of the even and odd cohomology of Hom(M, N), certified by doubling
/// the precision. Raises NotStabilized.
PeriodicCohomology mf_hom_cohomology(const MatrixFactorization& M, const MatrixFactorization& N);

/// The object k (x)_{A'} k^v for A' = F_q[[t]][x]/(x^e - t), read in the
/// 2-periodic model as 1_B^a + 1_B[1]^b, and the dimensions of its endomorphisms.
struct MoritaObject {
    int even_multiplicity = 0;
    int odd_multiplicity = 0;
    PeriodicCohomology end;
};
MoritaObject morita_object(int e, std::uint32_t q);
PeriodicCohomology morita_object_class(int e, std::uint32_t q);
/// Endomorphisms of 1_B in MF(s, 0).
PeriodicCohomology unit_object_end(std::uint32_t q);

/// Cohomology of 0 -> A' -0-> A' -E'(pi)-> A' -0-> A' -> ... in degrees 0..max_degree.
std::vector<DVRCohomology> hochschild_cohomology_profile(const EisensteinExtension& ext, int max_degree);

/// Diagonal: the pair (0, E'(pi_L)) on A'; graph of g: (g(pi_L) - pi_L, 0).
struct IntegrationClass {
    enum class Kind { Diagonal, Graph } kind = Kind::Diagonal;
    int element = 0;
    static IntegrationClass diagonal() { return {Kind::Diagonal, 0}; }
    static IntegrationClass graph(int g) { return {Kind::Graph, g}; }
};

/// The periodic pair over A' (as A-modules) at the precision of the extension.
PeriodicComplex integration_complex(const GaloisData& G, IntegrationClass which, int precision);
/// perclass = odd length - even length of the periodic cohomology.
int integrate_class(const GaloisData& G, IntegrationClass which);

}  // namespace ramify
