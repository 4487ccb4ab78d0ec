#include "ramify/milnor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace ramify {

namespace {

DVRSpec widest_spec(const DVRSpec& spec) {
    for (int N = DVRSpec::kMaxPrecision; N > 2; --N) {
        try {
            return spec.with_precision(N);
        } catch (const RamifyError&) {
        }
    }
    return spec;
}

bool origin_on_special_fiber(const MultiPoly& f) {
    const DVRElement c = f.coeff(Monomial(f.nvars(), 0));
    return !c.is_unit();
}

void monomials_below(int nvars, int degree, Monomial& cur, int var, std::vector<Monomial>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= degree; ++k) {
        cur[var] = k;
        monomials_below(nvars, degree - k, cur, var + 1, out);
    }
    cur[var] = 0;
}

int degree_of(const Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

}  // namespace

Hypersurface::Hypersurface(MultiPoly f) : f_(std::move(f)) {
    if (f_.nvars() < 1) raise(ErrorKind::InvalidArgument, "hypersurface needs at least one variable");
    if (!origin_on_special_fiber(f_))
        raise(ErrorKind::InvalidArgument, "the origin of the special fiber does not lie on V(f)");
}

Hypersurface Hypersurface::parse(const std::string& text, const DVRSpec& spec) {
    return Hypersurface(parse_polynomial(text, widest_spec(spec)));
}

MilnorCaps MilnorCaps::from_environment() {
    MilnorCaps caps;
    if (const char* env = std::getenv("RAMIFY_MAX_PRECISION")) {
        const int n = std::atoi(env);
        if (n >= 2) caps.max_precision = std::min(caps.max_precision, n);
    }
    return caps;
}

int truncated_jacobian_length(const Hypersurface& h, int degree_cutoff, int precision) {
    if (degree_cutoff < 1) raise(ErrorKind::InvalidArgument, "degree cutoff must be positive");
    if (precision > h.base().precision())
        raise(ErrorKind::PrecisionLoss, "requested precision exceeds the precision of f");
    const MultiPoly f = h.polynomial().with_precision(precision);
    const int nv = f.nvars();

    std::vector<Monomial> basis;
    Monomial cur(nv, 0);
    monomials_below(nv, degree_cutoff - 1, cur, 0, basis);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

    std::vector<MultiPoly> gens{f};
    for (int i = 0; i < nv; ++i) gens.push_back(f.derivative(i));

    std::vector<std::vector<std::pair<int, DVRElement>>> columns;
    for (const auto& g : gens) {
        for (const auto& m : basis) {
            std::vector<std::pair<int, DVRElement>> col;
            for (const auto& [gm, c] : g.terms()) {
                Monomial prod(nv);
                for (int i = 0; i < nv; ++i) prod[i] = gm[i] + m[i];
                if (degree_of(prod) >= degree_cutoff) continue;
                col.emplace_back(index.at(prod), c);
            }
            if (!col.empty()) columns.push_back(std::move(col));
        }
    }

    const int rows = static_cast<int>(basis.size());
    DVRMatrix R(f.spec(), rows, static_cast<int>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, c] : columns[j]) R(i, static_cast<int>(j)) = c;
    const SmithResult s = smith(std::move(R));
    return s.torsion_length() + precision * (rows - s.rank());
}

MilnorResult milnor_number(const Hypersurface& h, const MilnorCaps& caps) {
    const int cap_n = std::min(caps.max_precision, h.base().precision());
    int M = std::max(2, h.polynomial().total_degree() + 1);
    int N = std::min(std::max(M, 4), cap_n);
    if (M > caps.max_degree) raise(ErrorKind::NotIsolated, "degree cap below the degree of f");
    int prev = truncated_jacobian_length(h, M, N);
    while (M + 2 <= caps.max_degree) {
        const int M2 = M + 2, N2 = std::min(N + 2, cap_n);
        const int next = truncated_jacobian_length(h, M2, N2);
        if (next == prev) return {prev, M, N};
        M = M2;
        N = N2;
        prev = next;
    }
    raise(ErrorKind::NotIsolated, "Jacobian length did not stabilize up to degree " +
                                      std::to_string(caps.max_degree) + " and precision " + std::to_string(cap_n));
}

Hypersurface eisenstein_hypersurface(const EisensteinExtension& ext) {
    const DVRPoly& E = ext.polynomial();
    MultiPoly f(ext.base(), 1);
    for (int i = 0; i <= E.degree(); ++i) f.add_term(Monomial{i}, E.coeff(i));
    return Hypersurface(std::move(f));
}

DeligneMilnorReport verify_deligne_milnor_n0(const GaloisData& G, const MilnorCaps& caps) {
    G.require_galois();
    const MilnorResult m = milnor_number(eisenstein_hypersurface(G.extension()), caps);
    DeligneMilnorReport r;
    r.mu = m.mu;
    r.degree_cutoff = m.degree_cutoff;
    r.precision = m.precision;
    r.dimtot = dimtot(vanishing_cycle_rep_n0(G, field_for(G)), G);
    r.equal = Rational(r.mu) == r.dimtot;
    return r;
}

DeligneMilnorReport verify_deligne_milnor_n0(const EisensteinExtension& ext, const MilnorCaps& caps) {
    return verify_deligne_milnor_n0(automorphism_group(ext), caps);
}

}  // namespace ramify
