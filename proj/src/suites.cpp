#include "ramify/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

#include "ramify/conductors.hpp"
#include "ramify/dg_models.hpp"
#include "ramify/errors.hpp"
#include "ramify/milnor.hpp"
#include "ramify/multipoly.hpp"

namespace ramify {

DVRSpec FamilyMember::spec(int precision) const {
    return mixed ? DVRSpec::mixed_char(q, precision) : DVRSpec::equal_char(q, precision);
}

EisensteinExtension FamilyMember::extension(int precision) const {
    return EisensteinExtension::extend(parse_polynomial(polynomial, spec(precision)).to_univariate());
}

std::string FamilyMember::label() const {
    return polynomial + (mixed ? "/Z" : "/F") + std::to_string(q);
}

const std::vector<FamilyMember>& galois_family() {
    static const std::vector<FamilyMember> family{
        {"x^2-t", false, 3, 8},     {"x^3-t", false, 7, 8},     {"x^4-t", false, 5, 8},
        {"x^5-t", false, 11, 8},    {"x^6-t", false, 7, 8},     {"x^2-2", true, 2, 10},
        {"x^2+2*x+2", true, 2, 10}, {"x^2+t*x+t", false, 2, 8},
    };
    return family;
}

int SuiteReport::passed() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

int SuiteReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

Json SuiteReport::to_json() const {
    Json j;
    j["schema"] = "ramify/1";
    j["suite"] = suite;
    j["total"] = cases.size();
    j["passed"] = passed();
    j["failed"] = failed();
    Json list = Json::array();
    const CaseResult* first_failure = nullptr;
    for (const auto& c : cases) {
        Json e;
        e["id"] = c.id;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        list.push_back(e);
        if (!c.pass && first_failure == nullptr) first_failure = &c;
    }
    j["cases"] = list;
    if (first_failure != nullptr) j["counterexample"] = {{"id", first_failure->id}, {"detail", first_failure->detail}};
    return j;
}

std::vector<CaseResult> run_cases(const std::vector<CaseFn>& cases, bool parallel) {
    const int n = static_cast<int>(cases.size());
    std::vector<CaseResult> out(n);
    auto run_one = [&](int i) {
        try {
            out[i] = cases[i]();
        } catch (const RamifyError& e) {
            out[i] = CaseResult{"", false, Json{{"error", std::string(error_name(e.kind()))}, {"message", e.what()}}};
        }
        if (out[i].id.empty()) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%04d", i);
            out[i].id = buf;
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) run_one(i);
    } else {
        for (int i = 0; i < n; ++i) run_one(i);
    }
    std::sort(out.begin(), out.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    return out;
}

std::string rational_json_string(const Rational& r) { return rational_to_string(r); }

Json rational_json(const Rational& r) {
    if (denominator(r) == 1) return Json(numerator(r).convert_to<long long>());
    return Json(rational_to_string(r));
}

Json hh0_json(const HH0Class& c) {
    Json j = Json::object();
    const auto& G = *c.group();
    for (std::size_t k = 0; k < G.classes().size(); ++k) {
        const auto& v = c.coeff(static_cast<int>(k));
        const std::string key = G.element_name(G.class_rep(static_cast<int>(k)));
        if (v.is_rational())
            j[key] = rational_json(v.to_rational());
        else
            j[key] = v.to_string();
    }
    j["reduced"] = c.reduced();
    return j;
}

namespace {

std::string case_id(int index, const std::string& label) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%03d:", index);
    return buf + label;
}

std::vector<CaseFn> dm_n0_cases() {
    std::vector<CaseFn> cases;
    int index = 0;
    for (const auto& m : galois_family()) {
        cases.push_back([m, i = index++] {
            const auto r = verify_deligne_milnor_n0(m.extension(m.mixed ? 20 : 12));
            return CaseResult{case_id(i, m.label()), r.equal,
                              Json{{"mu", r.mu},
                                   {"dimtot", rational_json(r.dimtot)},
                                   {"equal", r.equal},
                                   {"cutoffs", {{"M", r.degree_cutoff}, {"N", r.precision}}}}};
        });
    }
    return cases;
}

std::vector<CaseFn> dm_quadratic_cases() {
    std::vector<CaseFn> cases;
    int index = 0;
    for (std::uint32_t q : {3u, 5u, 7u}) {
        std::string f = "t";
        for (int n = 0; n <= 3; ++n) {
            f = "x" + std::to_string(n) + "^2+" + f;
            cases.push_back([f, q, n, i = index++] {
                const auto mu = milnor_number(Hypersurface::parse(f, DVRSpec::equal_char(q, 24)));
                // Monodromy on the rank one vanishing cycle: the quadratic character when n is even.
                const auto G = automorphism_group(
                    EisensteinExtension::extend(parse_polynomial("x^2-t", DVRSpec::equal_char(q, 8)).to_univariate()));
                const auto& F = field_for(G);
                GroupModule phi = n % 2 == 0 ? GroupModule::cyclic_character(G.group(), F, 1, 1)
                                             : GroupModule::trivial(G.group(), F);
                phi = phi.shifted(n);
                const Rational dt = dimtot(std::vector<GroupModule>{phi}, G);
                const Rational sw = swan_conductor(phi, G);
                const Rational signed_dt = n % 2 == 0 ? dt : Rational(-dt);
                const bool ok = mu.mu == 1 && signed_dt == 1 && sw == 0;
                return CaseResult{case_id(i, f + "/F" + std::to_string(q)), ok,
                                  Json{{"mu", mu.mu},
                                       {"dimtot", rational_json(dt)},
                                       {"sw", rational_json(sw)},
                                       {"equal", mu.mu == signed_dt},
                                       {"cutoffs", {{"M", mu.degree_cutoff}, {"N", mu.precision}}}}};
            });
        }
    }
    return cases;
}

std::vector<CaseFn> appendix_a_cases(const SuiteConfig& config) {
    static const char* groups[] = {"C2", "C3", "C4", "S3"};
    const int n = config.cases > 0 ? config.cases : 100;
    std::vector<CaseFn> cases;
    for (int i = 0; i < n; ++i) {
        cases.push_back([i, seed = config.seed] {
            std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(i));
            const auto G = FiniteGroup::named(groups[i % 4]);
            const auto& F = CyclotomicField::get(G->exponent());
            const auto M = random_module(G, F, rng, 6);
            const CycloMatrix T = random_equivariant(M, rng);
            const HH0Class dual = trace_via_duality(M, T);
            const HH0Class chars = trace_via_characters(M, T);
            const HH0Class reduced = reduced_trace(M);
            const CycloMatrix I = CycloMatrix::identity(F, M.dim());
            const HH0Class reduced_chars = trace_via_characters(M, I).reduction();
            HH0Class all(G, F);
            for (int h = 0; h < G->order(); ++h) all.add_to(h, CycloRational(F, Rational(1)));
            const bool ok = dual == chars && reduced == reduced_chars && all.reduction().is_zero();
            Json d{{"group", G->name()}, {"dim", M.dim()}, {"duality", hh0_json(dual)},
                   {"characters", hh0_json(chars)}, {"reduced", hh0_json(reduced)}};
            return CaseResult{case_id(i, G->name()), ok, d};
        });
    }
    return cases;
}

std::vector<CaseFn> integrate_ar_cases() {
    std::vector<CaseFn> cases;
    int index = 0;
    for (const auto& m : galois_family()) {
        const int order = m.extension().degree();
        for (int g = 0; g < order; ++g) {
            cases.push_back([m, g, i = index++] {
                const auto G = automorphism_group(m.extension());
                const auto which = g == 0 ? IntegrationClass::diagonal() : IntegrationClass::graph(g);
                const int value = integrate_class(G, which);
                const int ar = artin_character(G, g);
                const std::string name = g == 0 ? "diagonal" : "graph(" + G.group()->element_name(g) + ")";
                return CaseResult{case_id(i, m.label() + ":" + name), value == -ar,
                                  Json{{"integral", value}, {"ar", ar}}};
            });
        }
    }
    return cases;
}

Json periodic_json(const PeriodicCohomology& c) { return Json{{"even", c.even}, {"odd", c.odd}}; }

std::vector<CaseFn> morita_end_cases() {
    std::vector<CaseFn> cases;
    int index = 0;
    for (int e = 1; e <= 4; ++e) {
        cases.push_back([e, i = index++] {
            const auto k = stabilized_residue_field(7, e);
            const auto h = mf_hom_cohomology(k, k);
            const PeriodicCohomology expected = e == 1 ? PeriodicCohomology{0, 0} : PeriodicCohomology{1, 1};
            return CaseResult{case_id(i, "end k e=" + std::to_string(e)), h == expected, periodic_json(h)};
        });
    }
    for (const auto& [e, q] : std::vector<std::pair<int, std::uint32_t>>{{2, 3}, {3, 7}, {4, 5}}) {
        cases.push_back([e = e, q = q, i = index++] {
            const auto h = morita_object_class(e, q);
            return CaseResult{case_id(i, "end t*k e=" + std::to_string(e) + " q=" + std::to_string(q)),
                              h == PeriodicCohomology{2, 2}, periodic_json(h)};
        });
    }
    cases.push_back([i = index++] {
        const auto h = unit_object_end(7);
        return CaseResult{case_id(i, "end unit"), h == PeriodicCohomology{1, 0}, periodic_json(h)};
    });
    return cases;
}

std::vector<CaseFn> eq_1_2_cases(const SuiteConfig& config) {
    const int n = config.cases > 0 ? config.cases : 50;
    std::vector<CaseFn> cases;
    int index = 0;
    for (const auto& m : galois_family()) {
        cases.push_back([m, n, i = index, seed = config.seed] {
            const auto G = automorphism_group(m.extension());
            const auto& F = field_for(G);
            std::mt19937_64 rng(seed * 7919ULL + static_cast<std::uint64_t>(i));
            for (int k = 0; k < n; ++k) {
                const auto V = random_module(G.group(), F, rng);
                const auto r = verify_conductor_identity(V, G);
                if (!r.holds)
                    return CaseResult{case_id(i, m.label()), false,
                                      Json{{"sample", k},
                                           {"dim", V.dim()},
                                           {"dimtot", rational_json(r.dimtot)},
                                           {"ar", rational_json(r.artin)},
                                           {"fixed", r.fixed_dim}}};
            }
            return CaseResult{case_id(i, m.label()), true, Json{{"samples", n}}};
        });
        ++index;
    }
    return cases;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"dm-n0",        "dm-quadratic", "appendix-a",
                                                "integrate-ar", "morita-end",   "eq-1-2"};
    return names;
}

std::vector<CaseFn> suite_cases(const std::string& name, const SuiteConfig& config) {
    if (name == "dm-n0") return dm_n0_cases();
    if (name == "dm-quadratic") return dm_quadratic_cases();
    if (name == "appendix-a") return appendix_a_cases(config);
    if (name == "integrate-ar") return integrate_ar_cases();
    if (name == "morita-end") return morita_end_cases();
    if (name == "eq-1-2") return eq_1_2_cases(config);
    raise(ErrorKind::InvalidArgument, "unknown suite " + name);
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config, bool parallel) {
    return SuiteReport{name, run_cases(suite_cases(name, config), parallel)};
}

}  // namespace ramify
