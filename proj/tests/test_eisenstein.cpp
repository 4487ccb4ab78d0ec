#include "doctest.h"
#include "ramify/eisenstein.hpp"
#include "ramify/multipoly.hpp"
#include "support.hpp"

using namespace ramify;
using namespace testing_support;

TEST_CASE("polynomial parser") {
    const auto s = eq(7, 6);
    const auto p = parse_polynomial("x^3 - t", s);
    CHECK(p.nvars() == 1);
    CHECK(p.to_univariate().degree() == 3);
    CHECK(p.coeff({0}) == -DVRElement::uniformizer_power(s, 1));
    const auto q = parse_polynomial("x0^2 + x1^2 + t", s);
    CHECK(q.nvars() == 2);
    CHECK(parse_polynomial("(x+1)^2", s) == parse_polynomial("x^2 + 2*x + 1", s));
    CHECK(parse_polynomial("-x^2", s) == -parse_polynomial("x^2", s));
    CHECK(parse_polynomial("2x", s) == parse_polynomial("2*x", s));
    CHECK_THROWS_AS(parse_polynomial("x^2 - t", mixed(2)), RamifyError);
    CHECK_THROWS_AS(parse_polynomial("x^", s), RamifyError);
    CHECK_THROWS_AS(parse_polynomial("x + y", s), RamifyError);
    CHECK_THROWS_AS(parse_polynomial("(x", s), RamifyError);
}

TEST_CASE("extend examples") {
    const auto a = make_ext("x^3-t", eq(7, 6));
    CHECK(a.valuation(a.from_base(DVRElement::uniformizer_power(a.base(), 1))) == Valuation::exact(3));
    const auto b = make_ext("x^2-2", mixed(2, 10));
    CHECK(b.valuation(b.from_base(DVRElement::from_int(b.base(), 2))) == Valuation::exact(2));
    const auto c = make_ext("x^2+t*x+t", eq(2, 8));
    CHECK(c.valuation(c.from_base(DVRElement::uniformizer_power(c.base(), 1))) == Valuation::exact(2));
    try {
        make_ext("x^2-t^2", eq(5));
        FAIL("expected NotEisenstein");
    } catch (const RamifyError& e) {
        CHECK(e.kind() == ErrorKind::NotEisenstein);
    }
    try {
        make_ext("x-t", eq(5));
        FAIL("expected DegreeOne");
    } catch (const RamifyError& e) {
        CHECK(e.kind() == ErrorKind::DegreeOne);
    }
}

TEST_CASE("A' arithmetic: E(pi) = 0 and valuations") {
    const auto ext = make_ext("x^3-t", eq(7, 6));
    CHECK(ext.is_zero(ext.evaluate(ext.polynomial(), ext.uniformizer())));
    CHECK(ext.valuation(ext.pow(ext.uniformizer(), 7)) == Valuation::exact(7));
    CHECK(ext.valuation(ext.zero()) == Valuation::lower_bound(18));
    const auto w = make_ext("x^2+t*x+t", eq(2, 8));
    CHECK(w.is_zero(w.evaluate(w.polynomial(), w.uniformizer())));
}

TEST_CASE("automorphism_group examples") {
    const auto G1 = automorphism_group(make_ext("x^3-t", eq(7, 6)));
    CHECK(G1.order() == 3);
    CHECK(G1.is_galois());
    std::set<std::uint32_t> zetas;
    for (int g = 0; g < 3; ++g) {
        CHECK(G1.image_digits(g)[0] == 0);
        zetas.insert(G1.image_digits(g)[1]);
        for (std::size_t k = 2; k < G1.image_digits(g).size(); ++k) CHECK(G1.image_digits(g)[k] == 0);
    }
    CHECK(zetas == std::set<std::uint32_t>{1, 2, 4});

    const auto G2 = automorphism_group(make_ext("x^3-t", eq(5, 6)));
    CHECK(G2.order() == 1);
    CHECK_FALSE(G2.is_galois());
    try {
        artin_character(G2, 0);
        FAIL("expected NotGalois");
    } catch (const RamifyError& e) {
        CHECK(e.kind() == ErrorKind::NotGalois);
    }

    const auto ext3 = make_ext("x^2-2", mixed(2, 10));
    const auto G3 = automorphism_group(ext3);
    CHECK(G3.order() == 2);
    CHECK(G3.is_galois());
    const auto minus_pi = ext3.neg(ext3.uniformizer());
    const auto v = ext3.valuation(ext3.sub(G3.image(1), minus_pi));
    CHECK((v.at_least || v.value > different_valuation(ext3)));
}

TEST_CASE("artin and swan characters") {
    const auto G1 = automorphism_group(make_ext("x^3-t", eq(7, 6)));
    CHECK(artin_character(G1, 0) == 2);
    CHECK(artin_character(G1, 1) == -1);
    CHECK(artin_character(G1, 2) == -1);
    for (int g = 0; g < 3; ++g) CHECK(swan_character(G1, g) == 0);

    const auto G2 = automorphism_group(make_ext("x^2-2", mixed(2, 10)));
    CHECK(artin_character(G2, 0) == 3);
    CHECK(artin_character(G2, 1) == -3);
    CHECK(swan_character(G2, 0) == 2);
    CHECK(swan_character(G2, 1) == -2);

    const auto G3 = automorphism_group(make_ext("x^2+t*x+t", eq(2, 8)));
    CHECK(G3.order() == 2);
    CHECK(artin_character(G3, 0) == 2);
    CHECK(artin_character(G3, 1) == -2);
    CHECK(swan_character(G3, 0) == 1);
    CHECK(swan_character(G3, 1) == -1);
}

TEST_CASE("different_valuation examples") {
    CHECK(different_valuation(make_ext("x^3-t", eq(7, 6))) == 2);
    CHECK(different_valuation(make_ext("x^2-2", mixed(2, 10))) == 3);
    CHECK(different_valuation(make_ext("x^2+t*x+t", eq(2, 8))) == 2);
}

TEST_CASE("property: character identities over the generated family") {
    const std::vector<std::pair<std::string, DVRSpec>> family = {
        {"x^2-t", eq(3)},  {"x^2-t", eq(5)},  {"x^3-t", eq(7)},      {"x^4-t", eq(5)},
        {"x^5-t", eq(11)}, {"x^6-t", eq(7)},  {"x^6-t", eq(13)},     {"x^2-2", mixed(2)},
        {"x^2+t*x+t", eq(2)}, {"x^2+2*x+2", mixed(2)}, {"x^3-3", mixed(3, 8)}, {"x^2-t", eq(9)}};
    for (const auto& [E, spec] : family) {
        CAPTURE(E);
        const auto G = automorphism_group(make_ext(E, spec));
        if (!G.is_galois()) continue;
        const auto t = character_table(G);
        int sum = 0;
        for (int g = 0; g < G.order(); ++g) {
            sum += t.ar[g];
            const int reg = g == 0 ? G.order() : 0;
            CHECK(t.sw[g] == t.ar[g] - reg + 1);
            const bool in_p = std::find(G.p_sylow().begin(), G.p_sylow().end(), g) != G.p_sylow().end();
            if (!in_p) CHECK(t.sw[g] == 0);
        }
        CHECK(sum == 0);
        // Tame: each nontrivial g moves pi_L by exactly one step.
        if (spec.residue_characteristic() != 0 && G.order() % spec.residue_characteristic() != 0)
            for (int g = 1; g < G.order(); ++g) CHECK(t.ar[g] == -1);
        // Group table is a group with identity 0 and the expected order.
        CHECK(G.group()->order() == G.order());
    }
}
