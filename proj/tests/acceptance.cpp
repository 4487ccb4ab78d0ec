#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ramify/conductors.hpp"
#include "ramify/dg_models.hpp"
#include "ramify/milnor.hpp"
#include "ramify/suites.hpp"
#include "support.hpp"

using namespace ramify;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = false;
    std::string note;
};

Outcome suite_outcome(const std::string& name, const SuiteConfig& config = {}) {
    const auto r = run_suite(name, config);
    std::string note = std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases";
    if (!r.ok()) note += ", first failure " + r.to_json().value("counterexample", Json{}).dump();
    return {r.ok(), note};
}

Outcome character_identities() {
    int checked = 0;
    for (const auto& m : galois_family()) {
        const auto G = automorphism_group(m.extension());
        const auto t = character_table(G);
        int sum = 0;
        for (int g = 0; g < G.order(); ++g) {
            sum += t.ar[g];
            const int reg = g == 0 ? G.order() : 0;
            if (t.sw[g] != t.ar[g] - reg + 1) return {false, m.label() + ": sw != ar - reg + triv"};
            const bool wild = std::find(G.p_sylow().begin(), G.p_sylow().end(), g) != G.p_sylow().end();
            if (!wild && t.sw[g] != 0) return {false, m.label() + ": sw nonzero on a tame element"};
        }
        if (sum != 0) return {false, m.label() + ": sum of ar is nonzero"};
        ++checked;
    }
    return {true, std::to_string(checked) + " extensions"};
}

Outcome morita_end() {
    auto r = suite_outcome("morita-end");
    if (!r.pass) return r;
    for (int e : {2, 3, 4}) {
        const auto k = stabilized_residue_field(5, e);
        if (!(mf_hom_cohomology(k, k) == PeriodicCohomology{1, 1})) return {false, "end k e=" + std::to_string(e)};
    }
    return r;
}

Outcome hochschild_profiles() {
    int checked = 0;
    for (const auto& m : galois_family()) {
        const auto ext = m.extension();
        const int d = different_valuation(ext);
        const auto h = hochschild_cohomology_profile(ext, 7);
        if (!(h[0] == DVRCohomology{ext.degree(), 0})) return {false, m.label() + ": degree 0"};
        for (int k = 1; k < static_cast<int>(h.size()); ++k) {
            const DVRCohomology expected = k % 2 ? DVRCohomology{0, 0} : DVRCohomology{0, d};
            if (!(h[k] == expected)) return {false, m.label() + ": degree " + std::to_string(k)};
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " extensions, degrees 0..7"};
}

Outcome hopf_axioms() {
    int models = 0;
    for (const auto& spec : {DVRSpec::equal_char(5, 8), DVRSpec::mixed_char(2, 10)}) {
        const auto model = HopfAlgebroidModel::ka2(spec);
        const auto r = check_hopf_axioms(model);
        if (!r.ok) return {false, "K_A^2: " + r.failure};
        if (check_hopf_axioms(model.with_identity_antipode()).ok) return {false, "K_A^2 control passed"};
        ++models;
    }
    for (const auto& m : galois_family()) {
        const auto model = HopfAlgebroidModel::adouble(m.extension());
        const auto r = check_hopf_axioms(model);
        if (!r.ok) return {false, m.label() + ": " + r.failure};
        if (check_hopf_axioms(model.with_identity_antipode()).ok) return {false, m.label() + ": control passed"};
        ++models;
    }
    return {true, std::to_string(models) + " models, tampered antipodes rejected"};
}

Outcome structural() {
    constexpr int kInstances = 50;
    Gen gen(20261016);
    int v = 0, q = 0, mu = 0, d2 = 0, tr = 0;
    const std::vector<DVRSpec> specs{DVRSpec::equal_char(5, 10), DVRSpec::mixed_char(2, 20), DVRSpec::equal_char(9, 8)};
    for (int k = 0; k < kInstances; ++k) {
        const auto& s = specs[k % specs.size()];
        const auto x = gen.element(s), y = gen.element(s);
        const auto vx = x.valuation(), vy = y.valuation();
        if (vx.at_least || vy.at_least) continue;
        if (vx.value + vy.value < s.precision() &&
            !((x * y).valuation() == Valuation::exact(vx.value + vy.value)))
            return {false, "valuation of a product"};
        const auto vs = (x + y).valuation();
        if (vs.value < std::min(vx.value, vy.value)) return {false, "valuation of a sum"};
        if (!(x.shift_down(vx.value).shift_up(vx.value) == x)) return {false, "unit decomposition"};
        ++v;
    }
    for (int k = 0; k < kInstances; ++k) {
        const auto& s = specs[k % 2];
        const int n = gen.uniform(1, 5);
        std::vector<DVRElement> diag;
        int expected = 0;
        for (int i = 0; i < n; ++i) {
            const int e = gen.uniform(0, 3);
            expected += e;
            diag.push_back(gen.element_of_valuation(s, e));
        }
        const DVRMatrix M = gen.unimodular(s, n) * DVRMatrix::diagonal(diag) * gen.unimodular(s, n);
        if (quotient_length(M) != expected) return {false, "quotient_length under row/column operations"};
        ++q;
    }
    const std::vector<std::string> polys{"x0^2+x1^2+t", "x0^2+x1^3+t", "x0^3+x1^2+t*x0+t", "x0*x1+t"};
    for (int k = 0; k < kInstances; ++k) {
        const auto h = Hypersurface::parse(polys[k % polys.size()], DVRSpec::equal_char(k % 2 ? 5 : 7, 16));
        const MultiPoly& f = h.polynomial();
        const Hypersurface g(f.linear_substitution(gen.unimodular(f.spec(), f.nvars())));
        if (milnor_number(g).mu != milnor_number(h).mu) return {false, "mu under a coordinate change"};
        ++mu;
    }
    const auto ext = make_ext("x^3-t", eq(7, 6));
    for (int k = 0; k < kInstances; ++k) {
        const auto A = k % 2 ? eq(3, 6) : mixed(2, 6);
        const auto C = random_complex(A, gen.engine(), 2);
        const auto X = FreeDGModule::tensor_complex(FreeDGModule::regular_ka2(A), C);
        const auto Y = FreeDGModule::tensor_complex(FreeDGModule::unit_ka(A), random_complex(A, gen.engine(), 2));
        const auto P = FreeDGModule::tensor_complex(FreeDGModule::regular_adouble(ext), random_complex(ext.base(), gen.engine(), 1));
        const auto U = FreeDGModule::tensor_complex(FreeDGModule::unit_aprime(ext), random_complex(ext.base(), gen.engine(), 1));
        for (const auto& M : {X, Y, convolution(X, Y), convolution(X, X), circled_product(P, U), X.dual()})
            if (!M.check().empty()) return {false, "dg relation after a construction: " + M.check()};
        ++d2;
    }
    const char* groups[] = {"C2", "C3", "C4", "S3"};
    for (int k = 0; k < kInstances; ++k) {
        const auto G = FiniteGroup::named(groups[k % 4]);
        const auto& F = CyclotomicField::get(G->exponent());
        const auto M = random_module(G, F, gen.engine(), 4), N = random_module(G, F, gen.engine(), 4);
        const auto S = GroupModule::direct_sum(M, N);
        auto id = [&](const GroupModule& V) { return CycloMatrix::identity(F, V.dim()); };
        if (!(trace_via_duality(S, id(S)) == trace_via_duality(M, id(M)) + trace_via_duality(N, id(N))))
            return {false, "trace additivity"};
        ++tr;
    }
    const bool ok = v >= 45 && q == kInstances && mu == kInstances && d2 == kInstances && tr == kInstances;
    return {ok, "valuation " + std::to_string(v) + ", quotient_length " + std::to_string(q) + ", mu " +
                    std::to_string(mu) + ", dg " + std::to_string(d2) + ", trace " + std::to_string(tr)};
}

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Deligne-Milnor at n = 0", 5, [] { return suite_outcome("dm-n0"); }},
        {2, "ordinary quadratic singularities", 10, [] { return suite_outcome("dm-quadratic"); }},
        {3, "character identities", 0, character_identities},
        {4, "dimtot = Ar + dim V^G", 0, [] { return suite_outcome("eq-1-2"); }},
        {5, "trace formula for group algebras", 10,
         [] { return suite_outcome("appendix-a", SuiteConfig{7, 100}); }},
        {6, "Morita End computations", 0, morita_end},
        {7, "matrix factorization Artin character", 0, [] { return suite_outcome("integrate-ar"); }},
        {8, "Hochschild profile", 0, hochschild_profiles},
        {9, "Hopf algebroid axioms", 0, hopf_axioms},
        {10, "structural property suites", 0, structural},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
            o.pass = false;
            o.note += ", over the time budget";
        }
        if (!o.pass) ++failures;
        std::printf("%s %2d %-40s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                    o.note.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
