#include "ramify/eisenstein.hpp"

#include <algorithm>
#include <sstream>

namespace ramify {

EisensteinExtension::EisensteinExtension(const DVRPoly& E) : spec_(E.spec()), E_(E), e_(E.degree()) {}

EisensteinExtension EisensteinExtension::extend(const DVRPoly& E) {
    if (!is_eisenstein(E)) raise(ErrorKind::NotEisenstein, "polynomial is not Eisenstein");
    if (E.degree() < 2) raise(ErrorKind::DegreeOne, "Eisenstein polynomial of degree one gives a trivial extension");
    EisensteinExtension ext(E);
    const Valuation v = ext.valuation(ext.from_base(DVRElement::uniformizer_power(ext.spec_, 1)));
    if (v.at_least || v.value != ext.e_)
        raise(ErrorKind::PrecisionLoss, "v_L(pi_K) != e at this precision");
    return ext;
}

EisensteinExtension::Elem EisensteinExtension::zero() const { return Elem(e_, DVRElement::zero(spec_)); }

EisensteinExtension::Elem EisensteinExtension::one() const {
    Elem r = zero();
    r[0] = DVRElement::one(spec_);
    return r;
}

EisensteinExtension::Elem EisensteinExtension::uniformizer() const {
    Elem r = zero();
    r[1] = DVRElement::one(spec_);
    return r;
}

EisensteinExtension::Elem EisensteinExtension::from_base(const DVRElement& a) const {
    Elem r = zero();
    r[0] = a;
    return r;
}

EisensteinExtension::Elem EisensteinExtension::from_digits(const std::vector<std::uint32_t>& digits) const {
    Elem r = zero();
    Elem p = one();
    const Elem pi = uniformizer();
    for (std::size_t k = 0; k < digits.size(); ++k) {
        if (digits[k] != 0) r = add(r, scale(p, DVRElement::constant(spec_, digits[k])));
        p = mul(p, pi);
    }
    return r;
}

EisensteinExtension::Elem EisensteinExtension::add(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (int i = 0; i < e_; ++i) r[i] += b[i];
    return r;
}

EisensteinExtension::Elem EisensteinExtension::sub(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (int i = 0; i < e_; ++i) r[i] -= b[i];
    return r;
}

EisensteinExtension::Elem EisensteinExtension::neg(const Elem& a) const {
    Elem r(a);
    for (auto& x : r) x = -x;
    return r;
}

EisensteinExtension::Elem EisensteinExtension::mul(const Elem& a, const Elem& b) const {
    std::vector<DVRElement> prod(2 * e_ - 1, DVRElement::zero(spec_));
    for (int i = 0; i < e_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < e_; ++j)
            if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
    }
    // x^e = -sum_{i<e} E_i x^i, applied from the top down.
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        if (prod[k].is_zero()) continue;
        const DVRElement c = prod[k];
        for (int i = 0; i < e_; ++i) prod[k - e_ + i] -= c * E_.coeff(i);
        prod[k] = DVRElement::zero(spec_);
    }
    prod.resize(e_);
    return prod;
}

EisensteinExtension::Elem EisensteinExtension::scale(const Elem& a, const DVRElement& c) const {
    Elem r(a);
    for (auto& x : r) x = x * c;
    return r;
}

EisensteinExtension::Elem EisensteinExtension::pow(const Elem& a, int k) const {
    Elem r = one(), b = a;
    while (k > 0) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

bool EisensteinExtension::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const DVRElement& x) { return x.is_zero(); });
}

bool EisensteinExtension::equal(const Elem& a, const Elem& b) const { return a == b; }

Valuation EisensteinExtension::valuation(const Elem& a) const {
    int best = -1;
    for (int i = 0; i < e_; ++i) {
        const Valuation v = a[i].valuation();
        if (v.at_least) continue;
        const int w = e_ * v.value + i;
        if (best < 0 || w < best) best = w;
    }
    return best < 0 ? Valuation::lower_bound(precision_L()) : Valuation::exact(best);
}

EisensteinExtension::Elem EisensteinExtension::evaluate(const DVRPoly& f, const Elem& y) const {
    Elem acc = zero();
    for (int i = f.degree(); i >= 0; --i) {
        acc = mul(acc, y);
        acc[0] += f.coeff(i);
    }
    return acc;
}

EisensteinExtension::Elem EisensteinExtension::substitute(const Elem& a, const Elem& y) const {
    Elem acc = zero();
    for (int i = e_ - 1; i >= 0; --i) {
        acc = mul(acc, y);
        acc[0] += a[i];
    }
    return acc;
}

DVRMatrix EisensteinExtension::multiplication_matrix(const Elem& a) const {
    DVRMatrix m(spec_, e_, e_);
    Elem basis = one();
    const Elem pi = uniformizer();
    for (int j = 0; j < e_; ++j) {
        const Elem col = mul(a, basis);
        for (int i = 0; i < e_; ++i) m(i, j) = col[i];
        basis = mul(basis, pi);
    }
    return m;
}

EisensteinExtension EisensteinExtension::with_precision(int precision) const {
    return extend(E_.with_precision(precision));
}

std::string EisensteinExtension::to_string(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < e_; ++i) {
        if (a[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << a[i].to_string() << ")";
        if (i > 0) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

int different_valuation(const EisensteinExtension& ext) {
    const Valuation v = ext.valuation(ext.evaluate(ext.polynomial().derivative(), ext.uniformizer()));
    if (v.at_least)
        raise(ErrorKind::PrecisionLoss, "E'(pi_L) vanishes at precision " + std::to_string(ext.precision_L()));
    return v.value;
}

void GaloisData::require_galois() const {
    if (!is_galois())
        raise(ErrorKind::NotGalois, "extension has " + std::to_string(order()) +
                                        " automorphisms but degree " + std::to_string(ext_.degree()));
}

namespace {

struct Prefix {
    std::vector<std::uint32_t> digits;
    EisensteinExtension::Elem value;
};

constexpr std::size_t kMaxLivePrefixes = 20000;

}  // namespace

GaloisData automorphism_group(const EisensteinExtension& ext) {
    GaloisData G(ext);
    const int e = ext.degree();
    const int NL = ext.precision_L();
    const int d = different_valuation(ext);
    if (2 * d >= NL) raise(ErrorKind::PrecisionLoss, "precision too small to separate roots");
    G.different_ = d;

    std::vector<DVRPoly> hasse;
    for (int j = 0; j <= e; ++j) hasse.push_back(ext.polynomial().hasse_derivative(j));

    const std::uint32_t q = ext.base().residue_order();
    std::vector<EisensteinExtension::Elem> digit_values(q);
    for (std::uint32_t a = 0; a < q; ++a) digit_values[a] = ext.from_base(DVRElement::constant(ext.base(), a));

    struct Root {
        std::vector<std::uint32_t> digits;
        EisensteinExtension::Elem value;
    };
    std::vector<Root> roots;

    std::vector<Prefix> live{Prefix{{}, ext.zero()}};
    EisensteinExtension::Elem pik = ext.one();
    for (int k = 0; !live.empty(); ++k) {
        if (k >= NL - 1) raise(ErrorKind::PrecisionLoss, "root search reached the precision bound");
        std::vector<Prefix> next;
        for (const auto& pre : live) {
            for (std::uint32_t a = 0; a < q; ++a) {
                Prefix cand{pre.digits, a ? ext.add(pre.value, ext.mul(digit_values[a], pik)) : pre.value};
                cand.digits.push_back(a);
                const Valuation v0 = ext.valuation(ext.evaluate(hasse[0], cand.value));
                const Valuation v1 = ext.valuation(ext.evaluate(hasse[1], cand.value));
                if (!v0.at_least) {
                    // A root z = cand + delta with v(delta) >= k+1 forces
                    // v(E(cand)) >= min_j v(E^[j](cand)) + j(k+1).
                    bool possible = false;
                    for (int j = 1; j <= e && j * (k + 1) <= v0.value; ++j) {
                        const Valuation vj = j == 1 ? v1 : ext.valuation(ext.evaluate(hasse[j], cand.value));
                        if (!vj.at_least && vj.value + j * (k + 1) <= v0.value) {
                            possible = true;
                            break;
                        }
                    }
                    if (!possible) continue;
                }
                // Below level d distinct roots may still share this prefix.
                const bool certified = k >= d && !v1.at_least &&
                                       (v0.at_least ? NL > 2 * v1.value : v0.value > 2 * v1.value);
                if (certified) {
                    bool dup = false;
                    for (const auto& r : roots) {
                        const Valuation sep = ext.valuation(ext.sub(r.value, cand.value));
                        if (sep.at_least || sep.value > d) dup = true;
                    }
                    if (!dup) roots.push_back(Root{cand.digits, cand.value});
                } else {
                    next.push_back(std::move(cand));
                }
            }
        }
        if (next.size() > kMaxLivePrefixes) raise(ErrorKind::PrecisionLoss, "root search does not converge");
        live = std::move(next);
        pik = ext.mul(pik, ext.uniformizer());
    }

    // Identity first, then lexicographic by digits.
    const EisensteinExtension::Elem pi = ext.uniformizer();
    auto is_identity = [&](const Root& r) {
        const Valuation v = ext.valuation(ext.sub(r.value, pi));
        return v.at_least || v.value > d;
    };
    std::sort(roots.begin(), roots.end(), [&](const Root& a, const Root& b) {
        const bool ia = is_identity(a), ib = is_identity(b);
        if (ia != ib) return ia;
        return a.digits < b.digits;
    });
    if (roots.empty() || !is_identity(roots[0]))
        raise(ErrorKind::PrecisionLoss, "digit search lost the identity root");

    std::size_t known = roots[0].digits.size();
    for (const auto& r : roots) known = std::min(known, r.digits.size());
    G.known_digits_ = static_cast<int>(known);
    for (auto& r : roots) {
        G.images_.push_back(r.value);
        G.digits_.emplace_back(r.digits.begin(), r.digits.begin() + static_cast<long>(known));
    }

    const int n = static_cast<int>(roots.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            // (g h)(pi) = g(h(pi)) = h(pi) with pi replaced by g(pi).
            const auto comp = ext.substitute(G.images_[h], G.images_[g]);
            for (int r = 0; r < n; ++r) {
                const Valuation v = ext.valuation(ext.sub(comp, G.images_[r]));
                if (v.at_least || v.value > d) {
                    table[g][h] = r;
                    break;
                }
            }
            if (table[g][h] < 0) raise(ErrorKind::PrecisionLoss, "composition of automorphisms not resolved");
        }
    G.group_ = std::make_shared<FiniteGroup>(n == 1 ? "trivial" : "Gal", std::move(table));
    G.p_sylow_ = G.group_->p_power_elements(ext.base().residue_characteristic());
    return G;
}

int artin_character(const GaloisData& G, int g) {
    G.require_galois();
    if (g == 0) return G.different();
    const auto& ext = G.extension();
    const Valuation v = ext.valuation(ext.sub(G.image(g), ext.uniformizer()));
    if (v.at_least) raise(ErrorKind::PrecisionLoss, "g(pi_L) - pi_L vanishes at precision");
    return -v.value;
}

int swan_character(const GaloisData& G, int g) {
    G.require_galois();
    if (g == 0) return artin_character(G, 0) - G.order() + 1;
    return artin_character(G, g) + 1;
}

CharacterTable character_table(const GaloisData& G) {
    G.require_galois();
    CharacterTable t;
    for (int g = 0; g < G.order(); ++g) {
        t.ar.push_back(artin_character(G, g));
        t.sw.push_back(swan_character(G, g));
    }
    return t;
}

}  // namespace ramify
