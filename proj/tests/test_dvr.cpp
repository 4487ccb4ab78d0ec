#include <cmath>
#include <set>

#include "doctest.h"
#include "ramify/dvr.hpp"
#include "ramify/dvr_matrix.hpp"
#include "support.hpp"

using namespace ramify;
using testing_support::Gen;

namespace {

DVRElement t_poly(const DVRSpec& s, const std::vector<std::uint32_t>& digits) {
    return DVRElement::from_digits(s, digits);
}

// Enumerates every element of A / pi^N.
std::vector<DVRElement> all_elements(const DVRSpec& s) {
    std::vector<DVRElement> out;
    const int N = s.precision();
    const auto q = s.order();
    std::size_t total = 1;
    for (int i = 0; i < N; ++i) total *= q;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::uint32_t> d(N);
        std::size_t c = code;
        for (int i = 0; i < N; ++i) {
            d[i] = static_cast<std::uint32_t>(c % q);
            c /= q;
        }
        out.push_back(DVRElement::from_digits(s, d));
    }
    return out;
}

// Length of coker(M) on a 2x2 matrix by counting the image inside (A/pi^N)^2.
int brute_force_length_2x2(const DVRMatrix& m) {
    const auto elems = all_elements(m.spec());
    std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> image;
    for (const auto& u : elems)
        for (const auto& v : elems) {
            const DVRElement a = m(0, 0) * u + m(0, 1) * v;
            const DVRElement b = m(1, 0) * u + m(1, 1) * v;
            image.insert({a.digits(), b.digits()});
        }
    const double total = std::pow(static_cast<double>(m.spec().order()), 2 * m.spec().precision());
    const double coker = total / static_cast<double>(image.size());
    return static_cast<int>(std::lround(std::log(coker) / std::log(m.spec().order())));
}

}  // namespace

TEST_CASE("DVRSpec validation") {
    CHECK_THROWS_AS(DVRSpec::equal_char(6, 4), RamifyError);
    CHECK_THROWS_AS(DVRSpec::mixed_char(4, 4), RamifyError);
    CHECK_THROWS_AS(DVRSpec::mixed_char(2, 1), RamifyError);
    CHECK_THROWS_AS(DVRSpec::mixed_char(2, 63), RamifyError);
    CHECK_NOTHROW(DVRSpec::mixed_char(2, 62));
    CHECK_NOTHROW(DVRSpec::equal_char(9, 8));
    CHECK(DVRSpec::equal_char(9, 8).residue_characteristic() == 3);
}

TEST_CASE("valuation examples") {
    const auto s5 = DVRSpec::equal_char(5, 8);
    CHECK(t_poly(s5, {0, 0, 0, 3, 0, 1}).valuation() == Valuation::exact(3));
    const auto s2 = DVRSpec::mixed_char(2, 8);
    CHECK(DVRElement::from_int(s2, 12).valuation() == Valuation::exact(2));
    CHECK(DVRElement::zero(s5).valuation() == Valuation::lower_bound(8));
    CHECK(DVRElement::zero(s2).valuation() == Valuation::lower_bound(8));
    CHECK(DVRElement::from_int(s2, 256).valuation() == Valuation::lower_bound(8));
}

TEST_CASE("finite field arithmetic") {
    for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 25u, 49u}) {
        const auto& F = FiniteField::get(q);
        for (std::uint32_t a = 1; a < q; ++a) {
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.pow(a, q - 1) == 1);
        }
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; c += 3)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
}

TEST_CASE("is_eisenstein examples") {
    const auto s5 = DVRSpec::equal_char(5, 6);
    const auto t = t_poly(s5, {0, 1});
    const auto one = DVRElement::one(s5), zero = DVRElement::zero(s5);
    CHECK(is_eisenstein(DVRPoly(s5, {-t, zero, zero, one})));
    CHECK_FALSE(is_eisenstein(DVRPoly(s5, {-(t * t), zero, one})));
    const auto s2 = DVRSpec::equal_char(2, 6);
    const auto t2 = t_poly(s2, {0, 1});
    CHECK(is_eisenstein(DVRPoly(s2, {t2, t2, DVRElement::one(s2)})));
    CHECK_FALSE(is_eisenstein(DVRPoly::from_ints(DVRSpec::mixed_char(2, 8), {-2, 1, 1})));
    CHECK_FALSE(is_eisenstein(DVRPoly::from_ints(DVRSpec::mixed_char(2, 8), {-2, 0, 3})));
    CHECK(is_eisenstein(DVRPoly::from_ints(DVRSpec::mixed_char(2, 8), {-2, 0, 1})));
}

TEST_CASE("exact division and inverses") {
    Gen g(11);
    for (const auto& s : {DVRSpec::equal_char(7, 10), DVRSpec::mixed_char(3, 12), DVRSpec::equal_char(4, 9)}) {
        for (int rep = 0; rep < 60; ++rep) {
            const auto u = g.unit(s);
            CHECK(u * u.unit_inverse() == DVRElement::one(s));
            const int vb = g.uniform(0, s.precision() - 1);
            const int va = g.uniform(vb, s.precision() - 1);
            const auto b = g.element_of_valuation(s, vb);
            const auto a = g.element_of_valuation(s, va);
            CHECK(DVRElement::exact_div(a, b) * b == a);
        }
    }
    const auto s = DVRSpec::mixed_char(2, 8);
    CHECK_THROWS_AS(DVRElement::from_int(s, 2).unit_inverse(), RamifyError);
    CHECK_THROWS_AS(DVRElement::exact_div(DVRElement::one(s), DVRElement::zero(s)), RamifyError);
}

TEST_CASE("Hasse derivatives") {
    const auto s = DVRSpec::mixed_char(5, 6);
    const auto f = DVRPoly::from_ints(s, {1, 2, 3, 4, 1});
    CHECK(f.derivative() == DVRPoly::from_ints(s, {2, 6, 12, 4}));
    CHECK(f.hasse_derivative(2) == DVRPoly::from_ints(s, {3, 12, 6}));
    CHECK(f.hasse_derivative(4) == DVRPoly::from_ints(s, {1}));
    CHECK(f.evaluate(DVRElement::from_int(s, 2)) == DVRElement::from_int(s, 1 + 4 + 12 + 32 + 16));
}

TEST_CASE("quotient_length examples") {
    const auto s5 = DVRSpec::equal_char(5, 8);
    DVRMatrix m1(s5, 1, 1);
    m1(0, 0) = t_poly(s5, {0, 0, 0, 1});
    CHECK(quotient_length(m1) == 3);

    const auto s2 = DVRSpec::mixed_char(2, 8);
    CHECK(quotient_length(DVRMatrix::from_ints(s2, {{2, 0}, {0, 4}})) == 3);

    const auto s3 = DVRSpec::equal_char(3, 4);
    DVRMatrix m3(s3, 2, 2);
    m3(0, 0) = t_poly(s3, {0, 1});
    m3(0, 1) = DVRElement::one(s3);
    m3(1, 1) = t_poly(s3, {0, 1});
    CHECK(quotient_length(m3) == 2);
    CHECK(brute_force_length_2x2(m3) == 2);

    CHECK_THROWS_AS(quotient_length(DVRMatrix(s2, 2, 1)), RamifyError);
    try {
        quotient_length(DVRMatrix::from_ints(s2, {{2, 0}, {0, 0}}));
        FAIL("expected PrecisionLoss");
    } catch (const RamifyError& e) {
        CHECK(e.kind() == ErrorKind::PrecisionLoss);
    }
}

TEST_CASE("quotient_length agrees with brute force on random 2x2 matrices over F_3") {
    Gen g(3);
    const auto s = DVRSpec::equal_char(3, 3);
    int checked = 0;
    for (int rep = 0; rep < 40; ++rep) {
        DVRMatrix m(s, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = g.element(s);
        const SmithResult r = smith(m);
        if (r.vanishing() > 0) continue;
        CHECK(quotient_length(m) == brute_force_length_2x2(m));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("property: valuation axioms") {
    Gen g(2024);
    for (const auto& s : {DVRSpec::equal_char(5, 10), DVRSpec::mixed_char(2, 20), DVRSpec::equal_char(9, 8)}) {
        for (int rep = 0; rep < 100; ++rep) {
            const auto x = g.element(s), y = g.element(s);
            const auto vx = x.valuation(), vy = y.valuation();
            if (vx.at_least || vy.at_least) continue;
            const auto vxy = (x * y).valuation();
            if (vx.value + vy.value < s.precision()) CHECK(vxy == Valuation::exact(vx.value + vy.value));
            const auto vs = (x + y).valuation();
            const int m = std::min(vx.value, vy.value);
            CHECK(vs.value >= m);
            if (vx.value != vy.value) CHECK(vs == Valuation::exact(m));
            const auto u = x.shift_down(vx.value);
            CHECK(u.is_unit());
            CHECK(u.shift_up(vx.value) == x);
        }
    }
}

TEST_CASE("property: quotient_length invariant under unimodular transforms") {
    Gen g(77);
    for (const auto& s : {DVRSpec::equal_char(3, 12), DVRSpec::mixed_char(2, 16), DVRSpec::mixed_char(5, 10)}) {
        for (int rep = 0; rep < 25; ++rep) {
            const int n = g.uniform(1, 5);
            std::vector<DVRElement> diag;
            int expected = 0;
            for (int i = 0; i < n; ++i) {
                const int v = g.uniform(0, 3);
                expected += v;
                diag.push_back(g.element_of_valuation(s, v));
            }
            const DVRMatrix D = DVRMatrix::diagonal(diag);
            CHECK(quotient_length(D) == expected);
            const DVRMatrix M = g.unimodular(s, n) * D * g.unimodular(s, n);
            CHECK(quotient_length(M) == expected);
            CHECK(smith(M).pivots == smith_reference(M).pivots);
        }
    }
}

TEST_CASE("smith and the serial reference agree on random rectangular matrices") {
    Gen g(5);
    const auto s = DVRSpec::equal_char(2, 6);
    for (int rep = 0; rep < 40; ++rep) {
        const int r = g.uniform(1, 7), c = g.uniform(1, 7);
        DVRMatrix m(s, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (g.uniform(0, 2) == 0) m(i, j) = g.element(s).shift_up(g.uniform(0, 3));
        CHECK(smith(m).pivots == smith_reference(m).pivots);
    }
}

TEST_CASE("smith transform and free quotients") {
    Gen g(9);
    const auto s = DVRSpec::mixed_char(3, 10);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = g.uniform(2, 5);
        DVRMatrix m(s, n, g.uniform(1, n));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = g.element(s);
        const SmithTransform st = smith_with_transform(m);
        CHECK(st.P * st.P_inv == DVRMatrix::identity(s, n));
        CHECK(smith(st.P * m).pivots == smith(m).pivots);
    }
    // Relations e0 - e1 inside A^3: quotient free of rank 2.
    const DVRMatrix rel = DVRMatrix::from_ints(s, {{1}, {-1}, {0}});
    const FreeQuotient fq = free_quotient(rel);
    CHECK(fq.rank == 2);
    CHECK(fq.projection * fq.section == DVRMatrix::identity(s, 2));
    CHECK((fq.projection * rel).is_zero());
    CHECK_THROWS_AS(free_quotient(DVRMatrix::from_ints(s, {{3}, {0}})), RamifyError);
}

TEST_CASE("complex cohomology over a DVR") {
    const auto s = DVRSpec::mixed_char(2, 10);
    // A --2--> A --0--> A: H^1 = A/2.
    const auto d = DVRMatrix::from_ints(s, {{2}});
    const auto z = DVRMatrix::from_ints(s, {{0}});
    CHECK(cohomology_at(d, z) == DVRCohomology{0, 1});
    CHECK(cohomology_at(z, d) == DVRCohomology{0, 0});
    PeriodicComplex pc{DVRMatrix::from_ints(s, {{0}}), DVRMatrix::from_ints(s, {{8}})};
    const auto h = periodic_cohomology(pc);
    CHECK(h.even == DVRCohomology{0, 3});
    CHECK(h.odd == DVRCohomology{0, 0});
}
