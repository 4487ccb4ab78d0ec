#include "doctest.h"
#include "ramify/milnor.hpp"
#include "support.hpp"

using namespace ramify;
using namespace testing_support;

namespace {

/// v_p(Res(E, E')) from the integer Sylvester matrix by fraction-free elimination.
int resultant_valuation(const std::vector<long long>& E, long long p) {
    const int n = static_cast<int>(E.size()) - 1;
    std::vector<long long> D;
    for (int i = 1; i <= n; ++i) D.push_back(i * E[i]);
    const int m = n - 1, size = n + m;
    std::vector<std::vector<BigInt>> S(size, std::vector<BigInt>(size, 0));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S[r][r + k] = E[n - k];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S[m + r][r + k] = D[m - k];
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (S[k][k] == 0) {
            int r = k + 1;
            while (r < size && S[r][k] == 0) ++r;
            if (r == size) return -1;
            std::swap(S[k], S[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]) / prev;
        prev = S[k][k];
    }
    BigInt det = S[size - 1][size - 1] * sign;
    if (det == 0) return -1;
    int v = 0;
    while (det % p == 0) {
        det /= p;
        ++v;
    }
    return v;
}

}  // namespace

TEST_CASE("hypersurface validation") {
    CHECK_THROWS_AS(Hypersurface::parse("x^2+1", eq(5)), RamifyError);
    CHECK_NOTHROW(Hypersurface::parse("x^2+t", eq(5)));
    CHECK(Hypersurface::parse("x0^2+x1^2+x2^2+t", eq(5)).relative_dimension() == 2);
    CHECK(Hypersurface::parse("x^2-2", mixed(2)).base().precision() > 32);
}

TEST_CASE("milnor_number examples") {
    for (auto [e, q] : std::vector<std::pair<int, std::uint32_t>>{{2, 3}, {3, 7}, {4, 5}, {5, 11}, {6, 7}, {3, 2}}) {
        CAPTURE(e);
        const auto h = Hypersurface::parse("x^" + std::to_string(e) + "-t", eq(q, 24));
        const auto r = milnor_number(h);
        CHECK(r.mu == e - 1);
        CHECK(truncated_jacobian_length(h, r.degree_cutoff + 2, r.precision + 2) == r.mu);
    }
    CHECK(milnor_number(Hypersurface::parse("x^2-2", mixed(2))).mu == 3);
    CHECK(milnor_number(Hypersurface::parse("x^2+t*x+t", eq(2, 24))).mu == 2);
}

TEST_CASE("milnor_number detects non-isolated singularities") {
    CHECK_THROWS_AS(milnor_number(Hypersurface::parse("x^2-t", eq(2, 24))), RamifyError);
    try {
        milnor_number(Hypersurface::parse("x0^2+0*x1", eq(5, 24)));
        FAIL("expected NotIsolated");
    } catch (const RamifyError& err) {
        CHECK(err.kind() == ErrorKind::NotIsolated);
    }
}

TEST_CASE("ordinary quadratic singularities") {
    for (std::uint32_t q : {3u, 5u, 9u}) {
        std::string f = "t";
        for (int n = 0; n <= 3; ++n) {
            f = "x" + std::to_string(n) + "^2+" + f;
            CAPTURE(f);
            CHECK(milnor_number(Hypersurface::parse(f, eq(q, 24))).mu == 1);
        }
    }
}

TEST_CASE("univariate Jacobian length matches the resultant oracle") {
    const std::vector<std::pair<std::vector<long long>, long long>> cases{
        {{-2, 0, 1}, 2}, {{2, 2, 1}, 2}, {{-3, 0, 0, 1}, 3}, {{3, 3, 0, 1}, 3},
        {{-5, 0, 0, 0, 0, 1}, 5}, {{2, 0, 2, 0, 1}, 2}, {{6, 0, 0, 1}, 3}, {{7, 7, 0, 1}, 7}};
    for (const auto& [coeffs, p] : cases) {
        CAPTURE(p);
        const auto spec = DVRSpec::mixed_char(static_cast<std::uint32_t>(p), p == 2 ? 40 : 16);
        const auto ext = EisensteinExtension::extend(DVRPoly::from_ints(spec, coeffs));
        const int mu = milnor_number(eisenstein_hypersurface(ext)).mu;
        CHECK(mu == resultant_valuation(coeffs, p));
        CHECK(mu == different_valuation(ext));
    }
}

TEST_CASE("verify_deligne_milnor_n0 examples") {
    const auto a = verify_deligne_milnor_n0(make_ext("x^3-t", eq(7, 12)));
    CHECK(a.mu == 2);
    CHECK(a.dimtot == 2);
    CHECK(a.equal);
    const auto b = verify_deligne_milnor_n0(make_ext("x^2-2", mixed(2, 20)));
    CHECK(b.mu == 3);
    CHECK(b.dimtot == 3);
    CHECK(b.equal);
    const auto c = verify_deligne_milnor_n0(make_ext("x^2+t*x+t", eq(2, 12)));
    CHECK(c.mu == 2);
    CHECK(c.equal);
    CHECK_THROWS_AS(verify_deligne_milnor_n0(make_ext("x^3-t", eq(5, 12))), RamifyError);
}

TEST_CASE("property: milnor number agrees with the different on the Eisenstein family") {
    for (const auto& [E, spec] : std::vector<std::pair<std::string, DVRSpec>>{
             {"x^2-t", eq(3, 16)}, {"x^4-t", eq(5, 16)}, {"x^6-t", eq(13, 16)}, {"x^2+t*x+t", eq(2, 16)},
             {"x^2+2*x+2", mixed(2, 30)}, {"x^3-3", mixed(3, 16)}, {"x^2+t^2*x+t", eq(2, 16)}}) {
        CAPTURE(E);
        const auto ext = make_ext(E, spec);
        CHECK(milnor_number(eisenstein_hypersurface(ext)).mu == different_valuation(ext));
    }
}

TEST_CASE("property: milnor number is invariant under unimodular coordinate changes") {
    Gen gen(2024);
    const std::vector<std::string> polys{"x0^2+x1^2+t", "x0^2+x1^3+t", "x0^3+x1^2+t*x0+t", "x0*x1+t",
                                         "x0^2+x1^2+x2^2+t"};
    for (int k = 0; k < 50; ++k) {
        const auto& text = polys[k % polys.size()];
        CAPTURE(text);
        const auto spec = eq(k % 2 ? 5 : 7, 16);
        const auto h = Hypersurface::parse(text, spec);
        const MultiPoly& f = h.polynomial();
        const auto L = gen.unimodular(f.spec(), f.nvars());
        const Hypersurface g(f.linear_substitution(L));
        CHECK(milnor_number(g).mu == milnor_number(h).mu);
    }
}
