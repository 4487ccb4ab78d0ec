#include "doctest.h"
#include "ramify/dg_models.hpp"
#include "support.hpp"

using namespace ramify;
using namespace testing_support;

namespace {

FreeDGModule random_ka2(const DVRSpec& spec, std::mt19937_64& rng) {
    return FreeDGModule::tensor_complex(FreeDGModule::regular_ka2(spec), random_complex(spec, rng, 2));
}

FreeDGModule random_adouble(const EisensteinExtension& ext, std::mt19937_64& rng) {
    const int max_rank = ext.degree() == 2 ? 2 : 1;
    return FreeDGModule::tensor_complex(FreeDGModule::regular_adouble(ext), random_complex(ext.base(), rng, max_rank));
}

int total_rank(const std::map<int, DVRCohomology>& h) {
    int s = 0;
    for (const auto& [k, c] : h) s += c.free_rank;
    return s;
}

}  // namespace

TEST_CASE("standard dg-modules satisfy their relations") {
    const auto A = eq(5);
    CHECK(FreeDGModule::unit_ka(A).check().empty());
    CHECK(FreeDGModule::unit_ka_diagonal(A).check().empty());
    CHECK(FreeDGModule::regular_ka2(A).check().empty());
    const auto ext = make_ext("x^3-t", eq(7));
    CHECK(FreeDGModule::unit_aprime(ext).check().empty());
    CHECK(FreeDGModule::unit_aprime_diagonal(ext).check().empty());
    CHECK(FreeDGModule::regular_adouble(ext).check().empty());
    CHECK(FreeDGModule::residue_model_kaprime(ext).check().empty());
    CHECK(FreeDGModule::residue_model_kaprime(ext).dual().check().empty());

    FreeDGModule broken(DGBase::KA, A, {0, -1}, DVRMatrix(A, 2, 2), {FreeDGModule::unit_ka(A).odd()[0]});
    CHECK(broken.check() == "[d, h] != pi");
    CHECK_THROWS_AS(broken.validate(), RamifyError);
}

TEST_CASE("K_A is quasi-isomorphic to the residue field") {
    const auto h = dg_cohomology(FreeDGModule::unit_ka(eq(3)));
    CHECK(h.at(0).free_rank == 0);
    CHECK(h.at(0).torsion_length == 1);
    CHECK(h.at(-1).free_rank == 0);
    CHECK(h.at(-1).torsion_length == 0);
}

TEST_CASE("convolution examples") {
    const auto A = eq(5);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 5; ++k) {
        const auto N = random_ka2(A, rng);
        const auto U = convolution(FreeDGModule::unit_ka_diagonal(A), N);
        CHECK(U.rank() == N.rank());
        CHECK(dg_cohomology(U) == dg_cohomology(N));
        CHECK(check_left_unit(N, false).ok);

        const auto C = random_complex(A, rng);
        const auto KN = FreeDGModule::tensor_complex(FreeDGModule::unit_ka(A), C);
        const auto P = convolution(FreeDGModule::regular_ka2(A), KN);
        CHECK(P.rank() == 2 * KN.rank());
        CHECK(P.base() == DGBase::KA);
        CHECK(dg_cohomology(P) == dg_cohomology(FreeDGModule::tensor_complex(FreeDGModule::unit_ka(A), KN.underlying_complex())));
    }
}

TEST_CASE("circled product examples") {
    const auto ext = make_ext("x^3-t", eq(7));
    const int e = ext.degree();
    std::mt19937_64 rng(4);
    const auto unit = FreeDGModule::unit_aprime_diagonal(ext);
    const auto N = FreeDGModule::tensor_complex(FreeDGModule::unit_aprime(ext), random_complex(ext.base(), rng));
    const auto U = circled_product(unit, N);
    CHECK(U.rank() == N.rank());
    CHECK(check_left_unit(N, true).ok);
    const auto R = circled_product(FreeDGModule::regular_adouble(ext), N);
    CHECK(R.rank() == e * N.rank());
    CHECK(R.base() == DGBase::Aprime);
    CHECK(dg_cohomology(R).size() == dg_cohomology(N).size());
}

TEST_CASE("property: convolution is associative and unital with d^2 = 0") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto A = k % 2 ? eq(3, 6) : mixed(2, 6);
        const auto M1 = random_ka2(A, rng), M2 = random_ka2(A, rng);
        const auto M3 = k % 3 ? random_ka2(A, rng)
                              : FreeDGModule::tensor_complex(FreeDGModule::unit_ka(A), random_complex(A, rng, 2));
        const auto r = check_associativity(M1, M2, M3, false);
        CHECK_MESSAGE(r.ok, r.failure);
        CHECK(convolution(M1, M3).check().empty());
        CHECK(check_left_unit(M3, false).ok);
    }
}

TEST_CASE("property: circled product is associative and unital") {
    std::mt19937_64 rng(12);
    const auto ext2 = make_ext("x^2+t*x+t", eq(2, 6));
    const auto ext3 = make_ext("x^3-t", eq(7, 6));
    for (int k = 0; k < 50; ++k) {
        const auto& ext = k % 2 ? ext2 : ext3;
        const auto M1 = random_adouble(ext, rng), M2 = random_adouble(ext, rng);
        const auto M3 = k % 3 ? random_adouble(ext, rng)
                              : FreeDGModule::tensor_complex(FreeDGModule::unit_aprime(ext), random_complex(ext.base(), rng, 2));
        const auto r = check_associativity(M1, M2, M3, true);
        CHECK_MESSAGE(r.ok, r.failure);
        CHECK(circled_product(M1, M3).check().empty());
        CHECK(check_left_unit(M3, true).ok);
    }
}

TEST_CASE("Hopf algebroid axioms") {
    const auto A = eq(5);
    const auto ka2 = check_hopf_axioms(HopfAlgebroidModel::ka2(A));
    CHECK_MESSAGE(ka2.ok, ka2.failure);
    for (const auto& [E, spec] : std::vector<std::pair<std::string, DVRSpec>>{
             {"x^2-t", eq(3)}, {"x^3-t", eq(7)}, {"x^2-2", mixed(2)}, {"x^2+t*x+t", eq(2)}}) {
        CAPTURE(E);
        const auto model = HopfAlgebroidModel::adouble(make_ext(E, spec));
        const auto r = check_hopf_axioms(model);
        CHECK_MESSAGE(r.ok, r.failure);
        const auto bad = check_hopf_axioms(model.with_identity_antipode());
        CHECK_FALSE(bad.ok);
        CHECK(bad.failure == "antipode does not exchange the units");
    }
    CHECK_FALSE(check_hopf_axioms(HopfAlgebroidModel::ka2(A).with_identity_antipode()).ok);
}

TEST_CASE("stabilized_residue_field examples") {
    const auto two = stabilized_residue_field(5, 2);
    CHECK(two.phi()(0, 0) == DVRElement::uniformizer_power(two.ring(), 1));
    CHECK(two.psi()(0, 0) == DVRElement::uniformizer_power(two.ring(), 1));
    const auto three = stabilized_residue_field(7, 3);
    CHECK(three.psi()(0, 0) == DVRElement::uniformizer_power(three.ring(), 2));
    const auto one = stabilized_residue_field(7, 1);
    CHECK(one.psi()(0, 0) == DVRElement::one(one.ring()));
}

TEST_CASE("mf_hom_cohomology examples") {
    for (int e = 2; e <= 5; ++e) {
        const auto k = stabilized_residue_field(7, e);
        CHECK(mf_hom_cohomology(k, k) == PeriodicCohomology{1, 1});
    }
    const auto k1 = stabilized_residue_field(7, 1);
    CHECK(mf_hom_cohomology(k1, k1) == PeriodicCohomology{0, 0});
    const auto k3 = stabilized_residue_field(3, 3);
    const auto c = MatrixFactorization::contractible(k3.ring(), k3.potential());
    const auto k3c = MatrixFactorization::direct_sum(k3, c);
    CHECK(mf_hom_cohomology(k3c, k3) == PeriodicCohomology{1, 1});
    CHECK(mf_hom_cohomology(k3, k3c) == PeriodicCohomology{1, 1});
    CHECK(mf_hom_cohomology(k3c, k3c) == PeriodicCohomology{1, 1});
    const auto two = MatrixFactorization::direct_sum(k3, k3);
    CHECK(mf_hom_cohomology(two, k3) == PeriodicCohomology{2, 2});
    const auto R = k3.ring();
    CHECK_THROWS_AS(MatrixFactorization(R, k3.potential(), k3.phi(), k3.phi()), RamifyError);
}

TEST_CASE("property: Hom cohomology ignores contractible summands") {
    Gen gen(5);
    for (int k = 0; k < 20; ++k) {
        const int e = gen.uniform(1, 5);
        const auto base = stabilized_residue_field(5, e);
        auto M = base;
        for (int j = gen.uniform(0, 2); j > 0; --j)
            M = MatrixFactorization::direct_sum(M, MatrixFactorization::contractible(base.ring(), base.potential()));
        CHECK(mf_hom_cohomology(M, base) == mf_hom_cohomology(base, base));
    }
}

TEST_CASE("morita_object_class examples") {
    CHECK(morita_object_class(2, 3) == PeriodicCohomology{2, 2});
    CHECK(morita_object_class(3, 7) == PeriodicCohomology{2, 2});
    CHECK(morita_object_class(4, 5) == PeriodicCohomology{2, 2});
    const auto obj = morita_object(3, 7);
    CHECK(obj.even_multiplicity == 1);
    CHECK(obj.odd_multiplicity == 1);
    CHECK(unit_object_end(7) == PeriodicCohomology{1, 0});
}

TEST_CASE("hochschild_cohomology_profile examples") {
    auto expect = [](const std::vector<DVRCohomology>& h, int e, int d) {
        REQUIRE(h.size() == 6);
        CHECK(h[0] == DVRCohomology{e, 0});
        for (int k = 1; k < 6; ++k) CHECK(h[k] == (k % 2 ? DVRCohomology{0, 0} : DVRCohomology{0, d}));
    };
    expect(hochschild_cohomology_profile(make_ext("x^3-t", eq(7)), 5), 3, 2);
    expect(hochschild_cohomology_profile(make_ext("x^2-2", mixed(2)), 5), 2, 3);
    expect(hochschild_cohomology_profile(make_ext("x^2+t*x+t", eq(2)), 5), 2, 2);
}

TEST_CASE("integrate_class examples") {
    const auto G = automorphism_group(make_ext("x^3-t", eq(7)));
    CHECK(integrate_class(G, IntegrationClass::diagonal()) == -2);
    CHECK(integrate_class(G, IntegrationClass::graph(1)) == 1);
    CHECK(integrate_class(G, IntegrationClass::graph(2)) == 1);
    const auto W = automorphism_group(make_ext("x^2+t*x+t", eq(2)));
    CHECK(integrate_class(W, IntegrationClass::graph(1)) == 2);
    CHECK(integrate_class(W, IntegrationClass::diagonal()) == -2);
    CHECK_THROWS_AS(integrate_class(G, IntegrationClass::graph(0)), RamifyError);
    CHECK_THROWS_AS(integrate_class(automorphism_group(make_ext("x^3-t", eq(5))), IntegrationClass::diagonal()),
                    RamifyError);
}

TEST_CASE("property: integrate_class reproduces -ar on the Galois family") {
    for (const auto& [E, spec] : std::vector<std::pair<std::string, DVRSpec>>{
             {"x^2-t", eq(3)}, {"x^3-t", eq(7)}, {"x^4-t", eq(5)}, {"x^5-t", eq(11)}, {"x^6-t", eq(7)},
             {"x^2-2", mixed(2)}, {"x^2+2*x+2", mixed(2)}, {"x^2+t*x+t", eq(2)}}) {
        CAPTURE(E);
        const auto G = automorphism_group(make_ext(E, spec));
        CHECK(integrate_class(G, IntegrationClass::diagonal()) == -artin_character(G, 0));
        for (int g = 1; g < G.order(); ++g)
            CHECK(integrate_class(G, IntegrationClass::graph(g)) == -artin_character(G, g));
        const auto h = hochschild_cohomology_profile(G.extension(), 7);
        for (int k = 3; k <= 7; ++k) CHECK(h[k] == h[k - 2]);
        CHECK(h[2].torsion_length == different_valuation(G.extension()));
    }
}
