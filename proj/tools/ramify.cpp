#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ramify/conductors.hpp"
#include "ramify/dg_models.hpp"
#include "ramify/errors.hpp"
#include "ramify/group_traces.hpp"
#include "ramify/milnor.hpp"
#include "ramify/multipoly.hpp"
#include "ramify/suites.hpp"

using namespace ramify;

namespace {

constexpr int kUsageError = 13;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotGalois: return 2;
        case ErrorKind::PrecisionLoss: return 3;
        case ErrorKind::NotFiniteLength: return 4;
        case ErrorKind::NotEisenstein: return 5;
        case ErrorKind::DegreeOne: return 6;
        case ErrorKind::NotIsolated: return 7;
        case ErrorKind::NotStabilized: return 8;
        case ErrorKind::NotEquivariant: return 9;
        case ErrorKind::NotFree: return 10;
        case ErrorKind::TriangularIdentityFailed: return 11;
        case ErrorKind::InvalidArgument: return 12;
    }
    return 12;
}

struct RunConfig {
    std::optional<std::uint32_t> equal_char;
    std::optional<std::uint32_t> mixed_char;
    std::optional<int> precision;
    std::optional<int> max_degree;
    std::string eisenstein;
    std::string poly;
    std::string format = "json";
    std::uint64_t seed = 7;
    int cases = 0;
    bool serial = false;
    std::string suite;
    std::string mf_action = "end";
    int e = 2;
    std::uint32_t field = 7;
    std::string group = "C2";
    std::string module = "regular";
    std::vector<std::string> reps{"augmentation", "regular"};
};

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), os);
    } else {
        os << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const Json& j, const std::string& format) {
    if (format == "tsv")
        flatten(j, "", std::cout);
    else
        std::cout << j.dump() << '\n';
}

Json error_json(const std::string& kind, const std::string& message) {
    return Json{{"schema", "ramify/1"}, {"error", kind}, {"message", message}};
}

int effective_precision(const RunConfig& c, int fallback) {
    int n = c.precision.value_or(fallback);
    if (const char* env = std::getenv("RAMIFY_MAX_PRECISION")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

DVRSpec base_spec(const RunConfig& c, int fallback_precision) {
    if (c.equal_char.has_value() == c.mixed_char.has_value())
        raise(ErrorKind::InvalidArgument, "exactly one of --equal-char and --mixed-char is required");
    const int N = effective_precision(c, fallback_precision);
    return c.equal_char ? DVRSpec::equal_char(*c.equal_char, N) : DVRSpec::mixed_char(*c.mixed_char, N);
}

std::string base_name(const RunConfig& c) {
    return c.equal_char ? "F" + std::to_string(*c.equal_char) + "[[t]]" : "Z" + std::to_string(*c.mixed_char);
}

EisensteinExtension parse_extension(const RunConfig& c, int fallback_precision) {
    if (c.eisenstein.empty()) raise(ErrorKind::InvalidArgument, "--eisenstein is required");
    return EisensteinExtension::extend(parse_polynomial(c.eisenstein, base_spec(c, fallback_precision)).to_univariate());
}

GroupModule named_module(const std::string& name, const std::shared_ptr<const FiniteGroup>& G,
                         const CyclotomicField& F) {
    if (name == "trivial") return GroupModule::trivial(G, F);
    if (name == "regular") return GroupModule::regular(G, F);
    if (name == "augmentation") return GroupModule::augmentation(G, F);
    if (name == "sign") return GroupModule::sign(G, F);
    if (name == "standard") return GroupModule::standard(G, F);
    if (name.rfind("character:", 0) == 0) {
        const int gen = cyclic_generator(*G);
        if (gen < 0) raise(ErrorKind::InvalidArgument, "characters require a cyclic group");
        return GroupModule::cyclic_character(G, F, gen, std::stoi(name.substr(10)));
    }
    raise(ErrorKind::InvalidArgument, "unknown module " + name);
}

Json cmd_conductor(const RunConfig& c) {
    const auto ext = parse_extension(c, c.mixed_char ? 10 : 8);
    const auto G = automorphism_group(ext);
    G.require_galois();
    const auto t = character_table(G);
    const auto& names = *G.group();
    Json ar = Json::object(), sw = Json::object();
    for (int g = 0; g < G.order(); ++g) {
        ar[names.element_name(g)] = t.ar[g];
        sw[names.element_name(g)] = t.sw[g];
    }
    const auto& F = field_for(G);
    Json reps = Json::object();
    for (const auto& r : c.reps) {
        const auto V = named_module(r, G.group(), F);
        reps[r] = Json{{"Sw", rational_json(swan_conductor(V, G))},
                       {"Ar", rational_json(artin_conductor(V, G))},
                       {"dimtot", rational_json(dimtot(V, G))}};
    }
    return Json{{"schema", "ramify/1"},
                {"base", base_name(c)},
                {"polynomial", c.eisenstein},
                {"order", G.order()},
                {"different", G.different()},
                {"ar", ar},
                {"sw", sw},
                {"representations", reps}};
}

Json cmd_milnor(const RunConfig& c) {
    MilnorCaps caps = MilnorCaps::from_environment();
    if (c.precision) caps.max_precision = std::min(caps.max_precision, *c.precision);
    if (c.max_degree) caps.max_degree = *c.max_degree;
    Json out{{"schema", "ramify/1"}};
    if (!c.eisenstein.empty()) {
        const auto ext = parse_extension(c, c.mixed_char ? 20 : 12);
        const auto r = verify_deligne_milnor_n0(ext, caps);
        out["mu"] = r.mu;
        out["dimtot"] = rational_json(r.dimtot);
        out["equal"] = r.equal;
        out["cutoffs"] = {{"M", r.degree_cutoff}, {"N", r.precision}};
        return out;
    }
    if (c.poly.empty()) raise(ErrorKind::InvalidArgument, "--poly or --eisenstein is required");
    const auto h = Hypersurface::parse(c.poly, base_spec(c, 8));
    const auto r = milnor_number(h, caps);
    out["mu"] = r.mu;
    out["dimtot"] = nullptr;
    out["equal"] = nullptr;
    out["cutoffs"] = {{"M", r.degree_cutoff}, {"N", r.precision}};
    return out;
}

Json cmd_mf(const RunConfig& c) {
    if (c.e < 1) raise(ErrorKind::InvalidArgument, "--e must be positive");
    PeriodicCohomology h;
    if (c.mf_action == "end") {
        const auto k = stabilized_residue_field(c.field, c.e);
        h = mf_hom_cohomology(k, k);
    } else if (c.mf_action == "morita") {
        h = morita_object_class(c.e, c.field);
    } else if (c.mf_action == "unit") {
        h = unit_object_end(c.field);
    } else {
        raise(ErrorKind::InvalidArgument, "unknown mf action " + c.mf_action);
    }
    return Json{{"schema", "ramify/1"}, {"even", h.even}, {"odd", h.odd}};
}

Json cmd_trace(const RunConfig& c) {
    const auto G = FiniteGroup::named(c.group);
    const auto& F = CyclotomicField::get(G->exponent());
    const auto M = named_module(c.module, G, F);
    const auto I = CycloMatrix::identity(F, M.dim());
    return Json{{"schema", "ramify/1"},
                {"group", G->name()},
                {"module", c.module},
                {"dim", M.dim()},
                {"trace", hh0_json(trace_via_duality(M, I))},
                {"reduced_trace", hh0_json(reduced_trace(M))}};
}

void add_base_options(CLI::App* cmd, RunConfig& c) {
    auto* eq = cmd->add_option("--equal-char", c.equal_char, "residue field size q of F_q[[t]]");
    auto* mx = cmd->add_option("--mixed-char", c.mixed_char, "prime p of Z_p");
    eq->excludes(mx);
    mx->excludes(eq);
    cmd->add_option("--precision", c.precision, "truncation precision N")->check(CLI::Range(1, 64));
}

void add_format(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig c;
    CLI::App app{"Ramification invariants, Milnor numbers and finite homological models"};
    app.require_subcommand(1);

    auto* conductor = app.add_subcommand("conductor", "Artin and Swan characters and conductors");
    add_base_options(conductor, c);
    add_format(conductor, c);
    conductor->add_option("--eisenstein", c.eisenstein, "Eisenstein polynomial in x and t")->required();
    conductor->add_option("--rep", c.reps, "representations: trivial, regular, augmentation, sign, character:j");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", c.seed, "seed for randomized suites");
    verify->add_option("--cases", c.cases, "number of random cases")->check(CLI::Range(1, 100000));
    verify->add_flag("--serial", c.serial, "run cases on one thread");
    add_format(verify, c);

    auto* milnor = app.add_subcommand("milnor", "Milnor number of a hypersurface");
    add_base_options(milnor, c);
    add_format(milnor, c);
    milnor->add_option("--max-degree", c.max_degree, "monomial degree cap M")->check(CLI::Range(1, 64));
    auto* poly = milnor->add_option("--poly", c.poly, "polynomial in x0..x9 and t");
    auto* eis = milnor->add_option("--eisenstein", c.eisenstein, "Eisenstein polynomial in x and t");
    poly->excludes(eis);
    eis->excludes(poly);

    auto* mf = app.add_subcommand("mf", "Matrix factorization Hom cohomology");
    mf->add_option("action", c.mf_action, "end, morita or unit")->check(CLI::IsMember({"end", "morita", "unit"}));
    mf->add_option("--e", c.e, "ramification index e")->check(CLI::Range(1, 32));
    mf->add_option("--field", c.field, "residue field size q");
    add_format(mf, c);

    auto* trace = app.add_subcommand("trace", "Hochschild trace of a group representation");
    trace->add_option("--group", c.group, "C1..C12 or S3");
    trace->add_option("--module", c.module, "trivial, regular, augmentation, sign, standard, character:j");
    add_format(trace, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(error_json("UsageError", e.what()), c.format);
        return kUsageError;
    }

    try {
        if (*verify) {
            const auto report = run_suite(c.suite, SuiteConfig{c.seed, c.cases}, !c.serial);
            emit(report.to_json(), c.format);
            return report.ok() ? 0 : 1;
        }
        Json out;
        if (*conductor) out = cmd_conductor(c);
        if (*milnor) out = cmd_milnor(c);
        if (*mf) out = cmd_mf(c);
        if (*trace) out = cmd_trace(c);
        emit(out, c.format);
        return 0;
    } catch (const RamifyError& e) {
        emit(error_json(std::string(error_name(e.kind())), e.what()), c.format);
        return exit_code(e.kind());
    }
}
