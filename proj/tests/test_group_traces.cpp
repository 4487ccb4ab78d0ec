#include "doctest.h"
#include "ramify/errors.hpp"
#include "ramify/group_traces.hpp"

using namespace ramify;

namespace {

CycloRational q(const CyclotomicField& F, long long a, long long b = 1) { return CycloRational(F, Rational(a, b)); }

int class_with_order(const FiniteGroup& G, int order) {
    for (std::size_t c = 0; c < G.classes().size(); ++c)
        if (G.element_order(G.class_rep(static_cast<int>(c))) == order) return static_cast<int>(c);
    return -1;
}

CycloMatrix id(const GroupModule& M) { return CycloMatrix::identity(M.field(), M.dim()); }

}  // namespace

TEST_CASE("group algebra multiplication") {
    const auto C3 = FiniteGroup::named("C3");
    const auto& F = CyclotomicField::get(3);
    const auto a = GroupAlgebraElement::basis(C3, F, 1);
    CHECK(a * a * a == GroupAlgebraElement::basis(C3, F, 0));
    const auto s = a + GroupAlgebraElement::basis(C3, F, 0);
    CHECK((s * a).coeff(2) == q(F, 1));
}

TEST_CASE("regular representation has trace e_id") {
    for (const char* name : {"C2", "C3", "C4", "S3"}) {
        const auto G = FiniteGroup::named(name);
        const auto& F = CyclotomicField::get(G->exponent());
        const auto M = GroupModule::regular(G, F);
        const HH0Class t = trace_via_duality(M, id(M));
        HH0Class expected(G, F);
        expected.add_to(G->identity(), q(F, 1));
        CHECK(t == expected);
        CHECK(trace_via_characters(M, id(M)) == expected);
    }
}

TEST_CASE("sign character of C2") {
    const auto C2 = FiniteGroup::named("C2");
    const auto& F = CyclotomicField::get(2);
    const auto M = GroupModule::cyclic_character(C2, F, 1, 1);
    const HH0Class t = trace_via_duality(M, id(M));
    CHECK(t.coeff(C2->class_of(0)) == q(F, 1, 2));
    CHECK(t.coeff(C2->class_of(1)) == q(F, -1, 2));
    CHECK(t.to_string().find("<σ>") != std::string::npos);
}

TEST_CASE("standard representation of S3") {
    const auto S3 = FiniteGroup::symmetric3();
    const auto& F = CyclotomicField::get(6);
    const auto M = GroupModule::standard(S3, F);
    const HH0Class t = trace_via_duality(M, id(M));
    CHECK(t.coeff(S3->class_of(0)) == q(F, 2, 6));
    CHECK(t.coeff(class_with_order(*S3, 2)) == q(F, 0));
    CHECK(t.coeff(class_with_order(*S3, 3)) == q(F, -2, 6));
    CHECK(t == trace_via_characters(M, id(M)));
}

TEST_CASE("C3 distinguishes h from its inverse") {
    const auto C3 = FiniteGroup::named("C3");
    const auto& F = CyclotomicField::get(3);
    const auto M = GroupModule::cyclic_character(C3, F, 1, 1);
    const HH0Class t = trace_via_duality(M, id(M));
    // Coefficient of <e_h> is Tr(h^{-1}) / |H|.
    CHECK(t.coeff(C3->class_of(1)) == CycloRational::zeta(F, -1) * Rational(1, 3));
    CHECK(t.coeff(C3->class_of(2)) == CycloRational::zeta(F, -2) * Rational(1, 3));
}

TEST_CASE("reduced traces") {
    for (const char* name : {"C2", "C3", "S3"}) {
        const auto G = FiniteGroup::named(name);
        const auto& F = CyclotomicField::get(G->exponent());
        const auto triv = GroupModule::trivial(G, F);
        CHECK(reduced_trace(triv).is_zero());
        CHECK(reduced_trace(triv).reduced());
        CHECK(trace_via_characters(triv, id(triv)).reduction().is_zero());
        const auto reg = GroupModule::regular(G, F);
        CHECK(reduced_trace(reg) == trace_via_characters(reg, id(reg)).reduction());
        CHECK(coinvariant_complement(reg).dim() == G->order() - 1);
    }
    const auto C2 = FiniteGroup::named("C2");
    const auto& F = CyclotomicField::get(2);
    const auto sign = GroupModule::cyclic_character(C2, F, 1, 1);
    const HH0Class r = reduced_trace(sign);
    CHECK(r.coeff(C2->class_of(0)) == q(F, 0));
    CHECK(r.coeff(C2->class_of(1)) == q(F, -1));
}

TEST_CASE("duality datum satisfies the triangular identities") {
    const auto S3 = FiniteGroup::symmetric3();
    const auto& F = CyclotomicField::get(6);
    const auto D = build_duality(GroupModule::regular(S3, F));
    CHECK(D.left_triangle() == CycloMatrix::identity(F, 6));
    CHECK(D.right_triangle() == CycloMatrix::identity(F, 6));
    CHECK(D.ev_is_bilinear());
    // A matrix family that is not a homomorphism breaks the datum.
    std::vector<CycloMatrix> bad(6, CycloMatrix::identity(F, 2));
    bad[1] = CycloMatrix::from_ints(F, {{1, 1}, {0, 1}});
    CHECK_THROWS_AS(build_duality(GroupModule(S3, F, bad)), RamifyError);
    try {
        build_duality(GroupModule(S3, F, bad));
    } catch (const RamifyError& e) {
        CHECK(e.kind() == ErrorKind::TriangularIdentityFailed);
    }
}

TEST_CASE("non-equivariant endomorphisms are rejected") {
    const auto C2 = FiniteGroup::named("C2");
    const auto& F = CyclotomicField::get(2);
    const auto M = GroupModule::regular(C2, F);
    const CycloMatrix T = CycloMatrix::from_ints(F, {{1, 0}, {0, 0}});
    try {
        trace_via_duality(M, T);
        FAIL("expected NotEquivariant");
    } catch (const RamifyError& e) {
        CHECK(e.kind() == ErrorKind::NotEquivariant);
    }
    CHECK_THROWS_AS(trace_via_characters(M, T), RamifyError);
}

TEST_CASE("property: trace routes agree on random equivariant endomorphisms") {
    std::mt19937_64 rng(20260611);
    const char* groups[] = {"C2", "C3", "C4", "S3"};
    for (int k = 0; k < 100; ++k) {
        const auto G = FiniteGroup::named(groups[k % 4]);
        const auto& F = CyclotomicField::get(G->exponent());
        const auto M = random_module(G, F, rng, 6);
        const auto N = random_module(G, F, rng, 4);
        const CycloMatrix T = random_equivariant(M, rng);
        const HH0Class a = trace_via_duality(M, T);
        CHECK(a == trace_via_characters(M, T));
        // Identity-class coefficient is Tr(T)/|H|.
        CHECK(a.coeff(G->class_of(0)) == T.trace() * Rational(1, G->order()));
        // Additivity over direct sums.
        const auto S = GroupModule::direct_sum(M, N);
        CHECK(trace_via_duality(S, id(S)) == trace_via_duality(M, id(M)) + trace_via_duality(N, id(N)));
        // Reduced trace is the reduction of the trace of M minus that of M^H.
        CHECK(reduced_trace(M) == trace_via_characters(M, id(M)).reduction());
        CHECK(reduced_trace(S) == reduced_trace(M) + reduced_trace(N));
    }
}

TEST_CASE("property: trace is a class function of T") {
    std::mt19937_64 rng(77);
    const char* groups[] = {"C3", "S3"};
    for (int k = 0; k < 20; ++k) {
        const auto G = FiniteGroup::named(groups[k % 2]);
        const auto& F = CyclotomicField::get(G->exponent());
        const auto M = random_module(G, F, rng, 5);
        const CycloMatrix A = random_equivariant(M, rng);
        const CycloMatrix B = random_equivariant(M, rng);
        CHECK(trace_via_duality(M, A * B) == trace_via_duality(M, B * A));
    }
}
