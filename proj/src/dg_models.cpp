#include "ramify/dg_models.hpp"

#include <algorithm>
#include <set>

#include "ramify/finite_field.hpp"

namespace ramify {

namespace {

DVRElement pi_of(const DVRSpec& spec) { return DVRElement::uniformizer_power(spec, 1); }

DVRMatrix kron(const DVRMatrix& a, const DVRMatrix& b) {
    DVRMatrix r(a.spec(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

DVRMatrix sign_diagonal(const DVRSpec& spec, const std::vector<int>& degrees) {
    DVRMatrix s(spec, static_cast<int>(degrees.size()), static_cast<int>(degrees.size()));
    for (std::size_t i = 0; i < degrees.size(); ++i)
        s(static_cast<int>(i), static_cast<int>(i)) = DVRElement::from_int(spec, degrees[i] % 2 == 0 ? 1 : -1);
    return s;
}

DVRMatrix submatrix(const DVRMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    DVRMatrix r(m.spec(), static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            r(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
    return r;
}

DVRMatrix block_diagonal(const DVRMatrix& a, const DVRMatrix& b) {
    DVRMatrix r(a.spec(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

DVRMatrix evaluate_at_matrix(const DVRPoly& p, const DVRMatrix& X) {
    DVRMatrix r(X.spec(), X.rows(), X.cols());
    for (int i = p.degree(); i >= 0; --i)
        r = r * X + DVRMatrix::identity(X.spec(), X.rows()).scaled(p.coeff(i));
    return r;
}

bool respects_degree(const DVRMatrix& m, const std::vector<int>& deg_out, const std::vector<int>& deg_in, int shift) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && deg_out[i] != deg_in[j] + shift) return false;
    return true;
}

DVRMatrix random_unimodular(const DVRSpec& spec, int n, std::mt19937_64& rng) {
    DVRMatrix m = DVRMatrix::identity(spec, n);
    if (n < 2) return m;
    std::uniform_int_distribution<int> pick(0, n - 1), small(-2, 2);
    for (int k = 0; k < 3 * n; ++k) {
        const int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const DVRElement c = DVRElement::from_int(spec, small(rng));
        for (int col = 0; col < n; ++col) m(i, col) += c * m(j, col);
    }
    return m;
}

std::uint32_t residue_digit(const DVRElement& a) {
    const auto d = a.digits();
    return d.empty() ? 0 : static_cast<std::uint32_t>(d[0]);
}

int residue_rank(const DVRMatrix& m) {
    const FiniteField& F = m.spec().residue_field();
    std::vector<std::vector<FiniteField::Elem>> a(m.rows(), std::vector<FiniteField::Elem>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = residue_digit(m(i, j));
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        const auto inv = F.inv(a[rank][c]);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const auto factor = F.mul(a[i][c], inv);
            for (int j = c; j < m.cols(); ++j) a[i][j] = F.sub(a[i][j], F.mul(factor, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::pair<int, int> expected_operators(DGBase base) {
    switch (base) {
        case DGBase::Plain: return {0, 0};
        case DGBase::KA: return {1, 0};
        case DGBase::KA2: return {2, 0};
        case DGBase::KAprime: return {1, 1};
        case DGBase::Aprime: return {0, 1};
        case DGBase::Adouble: return {0, 2};
    }
    return {0, 0};
}

}  // namespace

const char* dg_base_name(DGBase base) noexcept {
    switch (base) {
        case DGBase::Plain: return "A";
        case DGBase::KA: return "K_A";
        case DGBase::KA2: return "K_A^2";
        case DGBase::KAprime: return "K_A'";
        case DGBase::Aprime: return "A'";
        case DGBase::Adouble: return "A''";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FreeDGModule

FreeDGModule::FreeDGModule(DGBase base, const DVRSpec& spec, std::vector<int> degrees, DVRMatrix d,
                           std::vector<DVRMatrix> odd, std::vector<DVRMatrix> even, std::optional<DVRPoly> E)
    : base_(base), spec_(spec), degrees_(std::move(degrees)), d_(std::move(d)), odd_(std::move(odd)),
      even_(std::move(even)), E_(std::move(E)) {}

std::string FreeDGModule::check() const {
    const int n = rank();
    const auto [n_odd, n_even] = expected_operators(base_);
    if (static_cast<int>(odd_.size()) != n_odd || static_cast<int>(even_.size()) != n_even)
        return std::string("wrong number of structure operators for ") + dg_base_name(base_);
    if (n_even > 0 && !E_) return "missing Eisenstein polynomial";
    auto square = [&](const DVRMatrix& m) { return m.rows() == n && m.cols() == n && m.spec() == spec_; };
    if (!square(d_)) return "differential has the wrong shape";
    for (const auto& h : odd_)
        if (!square(h)) return "odd operator has the wrong shape";
    for (const auto& x : even_)
        if (!square(x)) return "even operator has the wrong shape";

    if (!respects_degree(d_, degrees_, degrees_, 1)) return "d does not have degree +1";
    if (!(d_ * d_).is_zero()) return "d^2 != 0";

    const DVRMatrix I = DVRMatrix::identity(spec_, n);
    const DVRMatrix pi_id = I.scaled(pi_of(spec_));
    for (std::size_t i = 0; i < odd_.size(); ++i) {
        const DVRMatrix& h = odd_[i];
        if (!respects_degree(h, degrees_, degrees_, -1)) return "odd operator does not have degree -1";
        if (!(h * h).is_zero()) return "h^2 != 0";
        const DVRMatrix expected = base_ == DGBase::KAprime ? even_[0] : pi_id;
        if (!(d_ * h + h * d_ == expected)) return "[d, h] != pi";
        for (std::size_t j = i + 1; j < odd_.size(); ++j)
            if (!(h * odd_[j] + odd_[j] * h).is_zero()) return "[h1, h2] != 0";
        for (const auto& x : even_)
            if (!(h * x == x * h)) return "odd and even operators do not commute";
    }
    for (std::size_t i = 0; i < even_.size(); ++i) {
        const DVRMatrix& x = even_[i];
        if (!respects_degree(x, degrees_, degrees_, 0)) return "even operator does not have degree 0";
        if (!(x * d_ == d_ * x)) return "[d, x] != 0";
        if (!evaluate_at_matrix(*E_, x).is_zero()) return "E(x) != 0";
        for (std::size_t j = i + 1; j < even_.size(); ++j)
            if (!(x * even_[j] == even_[j] * x)) return "[x1, x2] != 0";
    }
    return {};
}

void FreeDGModule::validate() const {
    const std::string failure = check();
    if (!failure.empty()) raise(ErrorKind::InvalidArgument, std::string(dg_base_name(base_)) + "-module: " + failure);
}

FreeDGModule FreeDGModule::unit_ka(const DVRSpec& spec) {
    DVRMatrix d(spec, 2, 2), h(spec, 2, 2);
    d(0, 1) = pi_of(spec);
    h(1, 0) = DVRElement::one(spec);
    return FreeDGModule(DGBase::KA, spec, {0, -1}, d, {h});
}

FreeDGModule FreeDGModule::unit_ka_diagonal(const DVRSpec& spec) {
    const FreeDGModule u = unit_ka(spec);
    return FreeDGModule(DGBase::KA2, spec, u.degrees_, u.d_, {u.odd_[0], u.odd_[0]});
}

FreeDGModule FreeDGModule::regular_ka2(const DVRSpec& spec) {
    // Basis 1, eps1, eps2, eps1 eps2.
    const DVRElement one = DVRElement::one(spec), pi = pi_of(spec);
    DVRMatrix d(spec, 4, 4), h1(spec, 4, 4), h2(spec, 4, 4);
    d(0, 1) = pi;
    d(0, 2) = pi;
    d(2, 3) = pi;
    d(1, 3) = -pi;
    h1(1, 0) = one;
    h1(3, 2) = one;
    h2(2, 0) = one;
    h2(3, 1) = -one;
    return FreeDGModule(DGBase::KA2, spec, {0, -1, -1, -2}, d, {h1, h2});
}

FreeDGModule FreeDGModule::unit_aprime(const EisensteinExtension& ext) {
    const int e = ext.degree();
    const DVRSpec& spec = ext.base();
    return FreeDGModule(DGBase::Aprime, spec, std::vector<int>(e, 0), DVRMatrix(spec, e, e), {},
                        {ext.multiplication_matrix(ext.uniformizer())}, ext.polynomial());
}

FreeDGModule FreeDGModule::unit_aprime_diagonal(const EisensteinExtension& ext) {
    const FreeDGModule u = unit_aprime(ext);
    return FreeDGModule(DGBase::Adouble, u.spec_, u.degrees_, u.d_, {}, {u.even_[0], u.even_[0]}, u.E_);
}

FreeDGModule FreeDGModule::regular_adouble(const EisensteinExtension& ext) {
    const int e = ext.degree();
    const DVRSpec& spec = ext.base();
    const DVRMatrix X = ext.multiplication_matrix(ext.uniformizer());
    const DVRMatrix I = DVRMatrix::identity(spec, e);
    return FreeDGModule(DGBase::Adouble, spec, std::vector<int>(e * e, 0), DVRMatrix(spec, e * e, e * e), {},
                        {kron(X, I), kron(I, X)}, ext.polynomial());
}

FreeDGModule FreeDGModule::residue_model_kaprime(const EisensteinExtension& ext) {
    // Basis: A' * 1 in degree 0 followed by A' * eps in degree -1.
    const int e = ext.degree();
    const DVRSpec& spec = ext.base();
    const DVRMatrix X = ext.multiplication_matrix(ext.uniformizer());
    DVRMatrix d(spec, 2 * e, 2 * e), h(spec, 2 * e, 2 * e);
    d.set_block(0, e, X);
    h.set_block(e, 0, DVRMatrix::identity(spec, e));
    std::vector<int> degrees(e, 0);
    degrees.resize(2 * e, -1);
    return FreeDGModule(DGBase::KAprime, spec, degrees, d, {h}, {block_diagonal(X, X)}, ext.polynomial());
}

FreeDGModule FreeDGModule::tensor_complex(const FreeDGModule& X, const FreeDGModule& C) {
    if (C.base_ != DGBase::Plain) raise(ErrorKind::InvalidArgument, "tensor_complex expects a plain complex");
    const DVRSpec& spec = X.spec_;
    const DVRMatrix IX = DVRMatrix::identity(spec, X.rank()), IC = DVRMatrix::identity(spec, C.rank());
    std::vector<int> degrees;
    for (int a : X.degrees_)
        for (int b : C.degrees_) degrees.push_back(a + b);
    const DVRMatrix d = kron(X.d_, IC) + kron(sign_diagonal(spec, X.degrees_), C.d_);
    std::vector<DVRMatrix> odd, even;
    for (const auto& h : X.odd_) odd.push_back(kron(h, IC));
    for (const auto& x : X.even_) even.push_back(kron(x, IC));
    return FreeDGModule(X.base_, spec, degrees, d, odd, even, X.E_);
}

FreeDGModule FreeDGModule::dual() const {
    std::vector<int> degrees;
    for (int a : degrees_) degrees.push_back(-a);
    std::vector<DVRMatrix> odd, even;
    for (const auto& h : odd_) odd.push_back(h.transpose());
    for (const auto& x : even_) even.push_back(x.transpose());
    return FreeDGModule(base_, spec_, degrees, d_.transpose(), odd, even, E_);
}

FreeDGModule FreeDGModule::underlying_complex() const {
    return FreeDGModule(DGBase::Plain, spec_, degrees_, d_);
}

FreeDGModule random_complex(const DVRSpec& spec, std::mt19937_64& rng, int max_rank) {
    std::uniform_int_distribution<int> rank_dist(1, std::max(1, max_rank)), coin(0, 1), deg(0, 1);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    const int pieces = rank_dist(rng);
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> arrows;  // (target, source) with coefficients below
    std::vector<DVRElement> labels;
    int used = 0;
    for (int k = 0; k < pieces && used < max_rank; ++k) {
        const int lo = deg(rng);
        if (coin(rng) && used + 2 <= max_rank) {
            degrees.push_back(lo);
            degrees.push_back(lo + 1);
            const int v = std::uniform_int_distribution<int>(0, 2)(rng);
            arrows.emplace_back(used + 1, used);
            labels.push_back(DVRElement::from_int(spec, coeff(rng) | 1).shift_up(v));
            used += 2;
        } else {
            degrees.push_back(lo);
            used += 1;
        }
    }
    DVRMatrix d(spec, used, used);
    for (std::size_t i = 0; i < arrows.size(); ++i) d(arrows[i].first, arrows[i].second) = labels[i];

    // Change of basis within each degree.
    DVRMatrix P = DVRMatrix::identity(spec, used), P_inv = DVRMatrix::identity(spec, used);
    std::set<int> seen(degrees.begin(), degrees.end());
    for (int k : seen) {
        std::vector<int> idx;
        for (int i = 0; i < used; ++i)
            if (degrees[i] == k) idx.push_back(i);
        const int n = static_cast<int>(idx.size());
        const DVRMatrix U = random_unimodular(spec, n, rng);
        DVRMatrix Uinv = DVRMatrix::identity(spec, n);
        {
            // Gauss-Jordan over A; U is unimodular so a unit pivot always exists.
            DVRMatrix W = U;
            for (int c = 0; c < n; ++c) {
                int p = c;
                while (!W(p, c).is_unit()) ++p;
                for (int j = 0; j < n; ++j) {
                    std::swap(W(p, j), W(c, j));
                    std::swap(Uinv(p, j), Uinv(c, j));
                }
                const DVRElement inv = W(c, c).unit_inverse();
                for (int j = 0; j < n; ++j) {
                    W(c, j) *= inv;
                    Uinv(c, j) *= inv;
                }
                for (int i = 0; i < n; ++i) {
                    if (i == c || W(i, c).is_zero()) continue;
                    const DVRElement f = W(i, c);
                    for (int j = 0; j < n; ++j) {
                        W(i, j) -= f * W(c, j);
                        Uinv(i, j) -= f * Uinv(c, j);
                    }
                }
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                P(idx[i], idx[j]) = U(i, j);
                P_inv(idx[i], idx[j]) = Uinv(i, j);
            }
    }
    return FreeDGModule(DGBase::Plain, spec, degrees, P * d * P_inv);
}

std::map<int, DVRCohomology> dg_cohomology(const FreeDGModule& M) {
    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < M.rank(); ++i) by_degree[M.degrees()[i]].push_back(i);
    std::map<int, DVRCohomology> out;
    for (const auto& [k, idx] : by_degree) {
        static const std::vector<int> none;
        auto find = [&](int deg) -> const std::vector<int>& {
            auto it = by_degree.find(deg);
            return it == by_degree.end() ? none : it->second;
        };
        const DVRMatrix d_in = submatrix(M.d(), idx, find(k - 1));
        const DVRMatrix d_out = submatrix(M.d(), find(k + 1), idx);
        out[k] = cohomology_at(d_in, d_out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products over K_A and A'

namespace {

/// Quotient of M (x)_A N by the relations (sign) L m (x) n - m (x) R n, where
/// sign = (-1)^{|m|} for odd L, R. Operators are transported through the quotient.
TensorQuotient tensor_quotient(const FreeDGModule& M, const FreeDGModule& N, const DVRMatrix& L, const DVRMatrix& R,
                               bool odd_relation, DGBase result_base, const std::vector<DVRMatrix>& odd_ops,
                               const std::vector<DVRMatrix>& even_ops, const std::optional<DVRPoly>& E) {
    const DVRSpec& spec = M.spec();
    if (!(N.spec() == spec)) raise(ErrorKind::InvalidArgument, "tensor factors over different rings");
    const int nM = M.rank(), nN = N.rank(), nT = nM * nN;
    const DVRMatrix IM = DVRMatrix::identity(spec, nM), IN = DVRMatrix::identity(spec, nN);
    const DVRMatrix SM = sign_diagonal(spec, M.degrees());

    std::vector<int> degrees;
    for (int a : M.degrees())
        for (int b : N.degrees()) degrees.push_back(a + b);

    const DVRMatrix rel = odd_relation ? kron(L * SM, IN) - kron(IM, R) : kron(L, IN) - kron(IM, R);
    const int shift = odd_relation ? -1 : 0;

    std::map<int, std::vector<int>> by_degree;
    for (int i = 0; i < nT; ++i) by_degree[degrees[i]].push_back(i);

    struct Block {
        std::vector<int> idx;
        FreeQuotient fq;
    };
    std::vector<std::pair<int, Block>> blocks;
    int q = 0;
    for (const auto& [k, idx] : by_degree) {
        std::vector<int> cols;
        auto it = by_degree.find(k - shift);
        if (it != by_degree.end()) cols = it->second;
        Block b{idx, free_quotient(submatrix(rel, idx, cols))};
        q += b.fq.rank;
        blocks.emplace_back(k, std::move(b));
    }

    DVRMatrix P(spec, q, nT), S(spec, nT, q);
    std::vector<int> qdeg;
    int off = 0;
    for (const auto& [k, b] : blocks) {
        for (int r = 0; r < b.fq.rank; ++r) {
            for (std::size_t c = 0; c < b.idx.size(); ++c) {
                P(off + r, b.idx[c]) = b.fq.projection(r, static_cast<int>(c));
                S(b.idx[c], off + r) = b.fq.section(static_cast<int>(c), r);
            }
            qdeg.push_back(k);
        }
        off += b.fq.rank;
    }

    const DVRMatrix dT = kron(M.d(), IN) + kron(SM, N.d());
    std::vector<DVRMatrix> odd, even;
    for (const auto& h : odd_ops) odd.push_back(P * h * S);
    for (const auto& x : even_ops) even.push_back(P * x * S);
    FreeDGModule Q(result_base, spec, qdeg, P * dT * S, odd, even, E);
    const std::string failure = Q.check();
    if (!failure.empty()) raise(ErrorKind::InvalidArgument, "tensor quotient is not a dg-module: " + failure);
    return {std::move(Q), std::move(P), std::move(S)};
}

}  // namespace

TensorQuotient convolution_with_maps(const FreeDGModule& M, const FreeDGModule& N) {
    if (M.base() != DGBase::KA2) raise(ErrorKind::InvalidArgument, "left factor of a convolution must be a K_A^2-module");
    if (N.base() != DGBase::KA && N.base() != DGBase::KA2)
        raise(ErrorKind::InvalidArgument, "right factor of a convolution must be a K_A- or K_A^2-module");
    const DVRSpec& spec = M.spec();
    const DVRMatrix IN = DVRMatrix::identity(spec, N.rank());
    const DVRMatrix SM = sign_diagonal(spec, M.degrees());
    std::vector<DVRMatrix> odd{kron(M.odd()[0], IN)};
    if (N.base() == DGBase::KA2) odd.push_back(kron(SM, N.odd()[1]));
    return tensor_quotient(M, N, M.odd()[1], N.odd()[0], true, N.base(), odd, {}, std::nullopt);
}

FreeDGModule convolution(const FreeDGModule& M, const FreeDGModule& N) {
    return convolution_with_maps(M, N).module;
}

TensorQuotient circled_product_with_maps(const FreeDGModule& M, const FreeDGModule& N) {
    if (M.base() != DGBase::Adouble) raise(ErrorKind::InvalidArgument, "left factor must be an A''-module");
    if (N.base() != DGBase::Aprime && N.base() != DGBase::Adouble)
        raise(ErrorKind::InvalidArgument, "right factor must be an A'- or A''-module");
    const DVRSpec& spec = M.spec();
    const DVRMatrix IM = DVRMatrix::identity(spec, M.rank()), IN = DVRMatrix::identity(spec, N.rank());
    std::vector<DVRMatrix> even{kron(M.even()[0], IN)};
    if (N.base() == DGBase::Adouble) even.push_back(kron(IM, N.even()[1]));
    return tensor_quotient(M, N, M.even()[1], N.even()[0], false, N.base(), {}, even, M.eisenstein());
}

FreeDGModule circled_product(const FreeDGModule& M, const FreeDGModule& N) {
    return circled_product_with_maps(M, N).module;
}

TensorQuotient tensor_over_aprime(const FreeDGModule& M, const FreeDGModule& N) {
    auto single = [](const FreeDGModule& X) {
        return (X.base() == DGBase::Aprime || X.base() == DGBase::KAprime) && X.even().size() == 1;
    };
    if (!single(M) || !single(N)) raise(ErrorKind::InvalidArgument, "tensor over A' expects A'-modules");
    const DVRMatrix IN = DVRMatrix::identity(M.spec(), N.rank());
    return tensor_quotient(M, N, M.even()[0], N.even()[0], false, DGBase::Aprime, {}, {kron(M.even()[0], IN)},
                           M.eisenstein());
}

StructureCheck check_associativity(const FreeDGModule& M1, const FreeDGModule& M2, const FreeDGModule& M3,
                                   bool circled) {
    auto op = circled ? circled_product_with_maps : convolution_with_maps;
    const DVRSpec& spec = M1.spec();
    const DVRMatrix I1 = DVRMatrix::identity(spec, M1.rank()), I3 = DVRMatrix::identity(spec, M3.rank());
    const TensorQuotient L12 = op(M1, M2), L = op(L12.module, M3);
    const TensorQuotient R23 = op(M2, M3), R = op(M1, R23.module);
    const DVRMatrix piL = L.projection * kron(L12.projection, I3);
    const DVRMatrix sigmaL = kron(L12.section, I3) * L.section;
    const DVRMatrix piR = R.projection * kron(I1, R23.projection);
    const DVRMatrix sigmaR = kron(I1, R23.section) * R.section;

    const FreeDGModule& QL = L.module;
    const FreeDGModule& QR = R.module;
    if (QL.rank() != QR.rank()) return {false, "ranks differ"};
    const DVRMatrix phi = piR * sigmaL, psi = piL * sigmaR;
    const DVRMatrix I = DVRMatrix::identity(spec, QL.rank());
    if (!(phi * psi == I) || !(psi * phi == I)) return {false, "comparison map is not invertible"};
    if (!(phi * piL == piR)) return {false, "relation spans differ"};
    if (!respects_degree(phi, QR.degrees(), QL.degrees(), 0)) return {false, "comparison map is not homogeneous"};
    if (!(phi * QL.d() == QR.d() * phi)) return {false, "comparison map does not commute with d"};
    if (QL.odd().size() != QR.odd().size() || QL.even().size() != QR.even().size())
        return {false, "structures differ"};
    for (std::size_t i = 0; i < QL.odd().size(); ++i)
        if (!(phi * QL.odd()[i] == QR.odd()[i] * phi)) return {false, "odd actions differ"};
    for (std::size_t i = 0; i < QL.even().size(); ++i)
        if (!(phi * QL.even()[i] == QR.even()[i] * phi)) return {false, "even actions differ"};
    return {};
}

StructureCheck check_left_unit(const FreeDGModule& N, bool circled) {
    const DVRSpec& spec = N.spec();
    FreeDGModule U;
    std::vector<DVRMatrix> actions;  // action on N of each basis element of the unit
    const DVRMatrix IN = DVRMatrix::identity(spec, N.rank());
    if (circled) {
        if (!N.eisenstein()) return {false, "module has no Eisenstein polynomial"};
        U = FreeDGModule::unit_aprime_diagonal(EisensteinExtension::extend(*N.eisenstein()));
        DVRMatrix power = IN;
        for (int i = 0; i < U.rank(); ++i) {
            actions.push_back(power);
            power = power * N.even()[0];
        }
    } else {
        U = FreeDGModule::unit_ka_diagonal(spec);
        actions = {IN, N.odd()[0]};
    }
    const TensorQuotient Q = circled ? circled_product_with_maps(U, N) : convolution_with_maps(U, N);

    DVRMatrix e0(spec, U.rank(), 1);
    e0(0, 0) = DVRElement::one(spec);
    const DVRMatrix phi = Q.projection * kron(e0, IN);
    const DVRMatrix mu = DVRMatrix::hstack(actions);
    const DVRMatrix psi = mu * Q.section;

    const FreeDGModule& M = Q.module;
    if (M.rank() != N.rank()) return {false, "ranks differ"};
    const DVRMatrix I = DVRMatrix::identity(spec, N.rank());
    if (!(phi * psi == I) || !(psi * phi == I)) return {false, "unit map is not invertible"};
    if (!(phi * N.d() == M.d() * phi)) return {false, "unit map does not commute with d"};
    if (M.odd().size() != N.odd().size() || M.even().size() != N.even().size()) return {false, "structures differ"};
    for (std::size_t i = 0; i < N.odd().size(); ++i)
        if (!(phi * N.odd()[i] == M.odd()[i] * phi)) return {false, "odd actions differ"};
    for (std::size_t i = 0; i < N.even().size(); ++i)
        if (!(phi * N.even()[i] == M.even()[i] * phi)) return {false, "even actions differ"};
    return {};
}

// ---------------------------------------------------------------------------
// Generated algebras and Hopf algebroids

GeneratedAlgebra GeneratedAlgebra::exterior(const DVRSpec& spec, int ngens) {
    GeneratedAlgebra a;
    a.spec_ = spec;
    a.ngens_ = ngens;
    a.odd_ = true;
    for (int mask = 0; mask < (1 << ngens); ++mask) {
        Monomial m(ngens);
        for (int i = 0; i < ngens; ++i) m[i] = (mask >> i) & 1;
        a.index_.emplace(m, static_cast<int>(a.basis_.size()));
        a.basis_.push_back(m);
    }
    return a;
}

GeneratedAlgebra GeneratedAlgebra::eisenstein_power(const EisensteinExtension& ext, int ngens) {
    GeneratedAlgebra a;
    a.spec_ = ext.base();
    a.ngens_ = ngens;
    a.odd_ = false;
    a.e_ = ext.degree();
    a.E_ = ext.polynomial();
    int total = 1;
    for (int i = 0; i < ngens; ++i) total *= a.e_;
    for (int k = 0; k < total; ++k) {
        Monomial m(ngens);
        int r = k;
        for (int i = ngens - 1; i >= 0; --i) {
            m[i] = r % a.e_;
            r /= a.e_;
        }
        a.index_.emplace(m, k);
        a.basis_.push_back(m);
    }
    for (int k = 0; k <= 2 * a.e_ - 2; ++k) a.power_reduction_.push_back(ext.pow(ext.uniformizer(), k));
    return a;
}

int GeneratedAlgebra::degree(int basis_index) const {
    if (!odd_) return 0;
    int s = 0;
    for (int x : basis_[basis_index]) s += x;
    return -s;
}

int GeneratedAlgebra::index_of(const Monomial& m) const { return index_.at(m); }

GeneratedAlgebra::Elem GeneratedAlgebra::zero() const { return Elem(dim(), DVRElement::zero(spec_)); }

GeneratedAlgebra::Elem GeneratedAlgebra::one() const { return basis_element(0); }

GeneratedAlgebra::Elem GeneratedAlgebra::basis_element(int i) const {
    Elem r = zero();
    r[i] = DVRElement::one(spec_);
    return r;
}

GeneratedAlgebra::Elem GeneratedAlgebra::generator(int i) const {
    Monomial m(ngens_, 0);
    m.at(i) = 1;
    return basis_element(index_of(m));
}

GeneratedAlgebra::Elem GeneratedAlgebra::basis_product(int a, int b) const {
    const Monomial& ma = basis_[a];
    const Monomial& mb = basis_[b];
    Elem r = zero();
    if (odd_) {
        int inversions = 0;
        Monomial m(ngens_);
        for (int i = 0; i < ngens_; ++i) {
            if (ma[i] && mb[i]) return r;
            m[i] = ma[i] + mb[i];
            if (mb[i])
                for (int j = i + 1; j < ngens_; ++j) inversions += ma[j];
        }
        r[index_of(m)] = DVRElement::from_int(spec_, inversions % 2 ? -1 : 1);
        return r;
    }
    for (int c = 0; c < dim(); ++c) {
        DVRElement coeff = DVRElement::one(spec_);
        for (int i = 0; i < ngens_ && !coeff.is_zero(); ++i)
            coeff *= power_reduction_[ma[i] + mb[i]][basis_[c][i]];
        r[c] = coeff;
    }
    return r;
}

GeneratedAlgebra::Elem GeneratedAlgebra::add(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (int i = 0; i < dim(); ++i) r[i] += b[i];
    return r;
}

GeneratedAlgebra::Elem GeneratedAlgebra::mul(const Elem& a, const Elem& b) const {
    Elem r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            const DVRElement c = a[i] * b[j];
            const Elem p = basis_product(i, j);
            for (int k = 0; k < dim(); ++k)
                if (!p[k].is_zero()) r[k] += c * p[k];
        }
    }
    return r;
}

GeneratedAlgebra::Elem GeneratedAlgebra::differential(const Elem& a) const {
    Elem r = zero();
    if (!odd_) return r;
    const DVRElement pi = pi_of(spec_);
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        int position = 0;
        for (int g = 0; g < ngens_; ++g) {
            if (!basis_[i][g]) continue;
            Monomial m(basis_[i]);
            m[g] = 0;
            const DVRElement sign = DVRElement::from_int(spec_, position % 2 ? -1 : 1);
            r[index_of(m)] += sign * pi * a[i];
            ++position;
        }
    }
    return r;
}

std::optional<int> GeneratedAlgebra::homogeneous_degree(const Elem& a) const {
    std::optional<int> deg;
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        if (deg && *deg != degree(i)) return std::nullopt;
        deg = degree(i);
    }
    return deg;
}

GeneratedAlgebra::Elem AlgebraMap::apply(const GeneratedAlgebra::Elem& a) const {
    GeneratedAlgebra::Elem r = target->zero();
    for (int i = 0; i < source->dim(); ++i) {
        if (a[i].is_zero()) continue;
        GeneratedAlgebra::Elem img = target->one();
        const Monomial& m = source->basis()[i];
        for (int g = 0; g < source->ngens(); ++g)
            for (int k = 0; k < m[g]; ++k) img = target->mul(img, images[g]);
        for (int k = 0; k < target->dim(); ++k) r[k] += a[i] * img[k];
    }
    return r;
}

DVRMatrix AlgebraMap::matrix() const {
    DVRMatrix m(source->spec(), target->dim(), source->dim());
    for (int j = 0; j < source->dim(); ++j) {
        const auto col = apply(source->basis_element(j));
        for (int i = 0; i < target->dim(); ++i) m(i, j) = col[i];
    }
    return m;
}

std::string AlgebraMap::check_dg_ring_map() const {
    if (static_cast<int>(images.size()) != source->ngens()) return "wrong number of generator images";
    if (source->odd() != target->odd()) return "generator parity mismatch";
    const int gen_degree = source->odd() ? -1 : 0;
    for (const auto& img : images) {
        const auto deg = target->homogeneous_degree(img);
        if (!deg || *deg != gen_degree) return "generator image has the wrong degree";
    }
    for (int i = 0; i < source->ngens(); ++i) {
        if (source->odd()) {
            auto scalar_pi = target->one();
            for (auto& c : scalar_pi) c *= pi_of(target->spec());
            if (target->differential(images[i]) != scalar_pi) return "d(image) != image(d)";
            for (int j = i; j < source->ngens(); ++j) {
                const auto s = target->add(target->mul(images[i], images[j]), target->mul(images[j], images[i]));
                for (const auto& c : s)
                    if (!c.is_zero()) return i == j ? "image of a generator does not square to zero"
                                                    : "generator images do not anticommute";
            }
        }
    }
    if (!source->odd()) {
        const DVRPoly& E = *source->eisenstein();
        for (const auto& img : images) {
            GeneratedAlgebra::Elem value = target->zero(), power = target->one();
            for (int k = 0; k <= E.degree(); ++k) {
                for (int l = 0; l < target->dim(); ++l) value[l] += E.coeff(k) * power[l];
                power = target->mul(power, img);
            }
            for (const auto& c : value)
                if (!c.is_zero()) return "image of a generator is not a root of E";
        }
    }
    if (source->dim() <= 64) {
        for (int a = 0; a < source->dim(); ++a) {
            const auto fa = apply(source->basis_element(a));
            if (apply(source->differential(source->basis_element(a))) != target->differential(fa))
                return "map does not commute with d";
            for (int b = 0; b < source->dim(); ++b) {
                const auto lhs = apply(source->mul(source->basis_element(a), source->basis_element(b)));
                if (lhs != target->mul(fa, apply(source->basis_element(b)))) return "map is not multiplicative";
            }
        }
    }
    return {};
}

HopfAlgebroidModel HopfAlgebroidModel::ka2(const DVRSpec& spec) {
    HopfAlgebroidModel m;
    m.kind_ = HopfKind::KA2;
    for (int n = 1; n <= 4; ++n) m.powers_.push_back(GeneratedAlgebra::exterior(spec, n));
    return m;
}

HopfAlgebroidModel HopfAlgebroidModel::adouble(const EisensteinExtension& ext) {
    HopfAlgebroidModel m;
    m.kind_ = HopfKind::Adouble;
    for (int n = 1; n <= 4; ++n) m.powers_.push_back(GeneratedAlgebra::eisenstein_power(ext, n));
    return m;
}

HopfAlgebroidModel HopfAlgebroidModel::with_identity_antipode() const {
    HopfAlgebroidModel m(*this);
    m.antipode_images_ = {0, 1};
    return m;
}

AlgebraMap HopfAlgebroidModel::left_unit() const { return {&power(1), &power(2), {power(2).generator(0)}}; }
AlgebraMap HopfAlgebroidModel::right_unit() const { return {&power(1), &power(2), {power(2).generator(1)}}; }
AlgebraMap HopfAlgebroidModel::counit() const {
    return {&power(2), &power(1), {power(1).generator(0), power(1).generator(0)}};
}
AlgebraMap HopfAlgebroidModel::composition() const {
    return {&power(2), &power(3), {power(3).generator(0), power(3).generator(2)}};
}
AlgebraMap HopfAlgebroidModel::antipode() const {
    return {&power(2), &power(2), {power(2).generator(antipode_images_[0]), power(2).generator(antipode_images_[1])}};
}

namespace {

AlgebraMap compose(const AlgebraMap& second, const AlgebraMap& first) {
    AlgebraMap r{first.source, second.target, {}};
    for (const auto& img : first.images) r.images.push_back(second.apply(img));
    return r;
}

bool same_map(const AlgebraMap& a, const AlgebraMap& b) { return a.images == b.images; }

AlgebraMap identity_map(const GeneratedAlgebra& A) {
    AlgebraMap r{&A, &A, {}};
    for (int i = 0; i < A.ngens(); ++i) r.images.push_back(A.generator(i));
    return r;
}

/// Generator i of T_n goes to generator index[i] of T_m.
AlgebraMap renaming(const GeneratedAlgebra& source, const GeneratedAlgebra& target, const std::vector<int>& index) {
    AlgebraMap r{&source, &target, {}};
    for (int i : index) r.images.push_back(target.generator(i));
    return r;
}

}  // namespace

StructureCheck check_hopf_axioms(const HopfAlgebroidModel& model) {
    const AlgebraMap eta_l = model.left_unit(), eta_r = model.right_unit();
    const AlgebraMap eps = model.counit(), delta = model.composition(), S = model.antipode();
    const std::vector<std::pair<const char*, const AlgebraMap*>> maps{
        {"left unit", &eta_l}, {"right unit", &eta_r}, {"counit", &eps}, {"composition", &delta}, {"antipode", &S}};
    for (const auto& [name, f] : maps) {
        const std::string failure = f->check_dg_ring_map();
        if (!failure.empty()) return {false, std::string(name) + " is not a dg-algebra map: " + failure};
    }
    const AlgebraMap id1 = identity_map(model.power(1)), id2 = identity_map(model.power(2));
    if (!same_map(compose(eps, eta_l), id1) || !same_map(compose(eps, eta_r), id1))
        return {false, "counit does not retract the units"};
    if (!same_map(compose(S, S), id2)) return {false, "antipode is not an involution"};
    if (!same_map(compose(S, eta_l), eta_r) || !same_map(compose(S, eta_r), eta_l))
        return {false, "antipode does not exchange the units"};

    const GeneratedAlgebra &T2 = model.power(2), &T3 = model.power(3), &T4 = model.power(4);
    if (!same_map(compose(delta, eta_l), renaming(model.power(1), T3, {0})) ||
        !same_map(compose(delta, eta_r), renaming(model.power(1), T3, {2})))
        return {false, "composition does not preserve the units"};
    // (delta x id) and (id x delta) as maps T3 -> T4.
    AlgebraMap delta_id{&T3, &T4, {}}, id_delta{&T3, &T4, {}};
    const AlgebraMap first3 = renaming(T3, T4, {0, 1, 2}), last3 = renaming(T3, T4, {1, 2, 3});
    delta_id.images = {first3.apply(delta.images[0]), first3.apply(delta.images[1]), T4.generator(3)};
    id_delta.images = {T4.generator(0), last3.apply(delta.images[0]), last3.apply(delta.images[1])};
    if (!same_map(compose(delta_id, delta), compose(id_delta, delta)))
        return {false, "composition is not coassociative"};
    const AlgebraMap eps_id = renaming(T3, T2, {0, 0, 1}), id_eps = renaming(T3, T2, {0, 1, 1});
    if (!same_map(compose(eps_id, delta), id2) || !same_map(compose(id_eps, delta), id2))
        return {false, "composition is not counital"};
    return {};
}

// ---------------------------------------------------------------------------
// Matrix factorizations

MatrixFactorization::MatrixFactorization(const DVRSpec& ring, const DVRElement& potential, const DVRMatrix& phi,
                                         const DVRMatrix& psi, bool residue)
    : ring_(ring), f_(potential), phi_(phi), psi_(psi), residue_(residue) {
    validate();
}

void MatrixFactorization::validate() const {
    if (!ring_.is_equal_char()) raise(ErrorKind::InvalidArgument, "matrix factorizations live over k[[x]]");
    if (!(phi_.spec() == ring_) || !(psi_.spec() == ring_) || !(f_.spec() == ring_))
        raise(ErrorKind::InvalidArgument, "matrix factorization data over different rings");
    if (phi_.rows() != psi_.cols() || phi_.cols() != psi_.rows())
        raise(ErrorKind::InvalidArgument, "phi and psi have incompatible shapes");
    auto check = [&](const DVRMatrix& prod, int n) {
        const DVRMatrix target = DVRMatrix::identity(ring_, n).scaled(f_);
        const DVRMatrix diff = prod - target;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Valuation v = diff(i, j).valuation();
                if (residue_ ? (v.is_exact() && v.value == 0) : !diff(i, j).is_zero()) return false;
            }
        return true;
    };
    if (!check(psi_ * phi_, phi_.cols()) || !check(phi_ * psi_, phi_.rows()))
        raise(ErrorKind::InvalidArgument, "not a matrix factorization of the potential");
}

MatrixFactorization MatrixFactorization::with_precision(int precision) const {
    return MatrixFactorization(ring_.with_precision(precision), f_.with_precision(precision),
                               phi_.with_precision(precision), psi_.with_precision(precision), residue_);
}

MatrixFactorization MatrixFactorization::direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
    if (!(a.ring_ == b.ring_) || a.f_ != b.f_ || a.residue_ != b.residue_)
        raise(ErrorKind::InvalidArgument, "direct sum of factorizations of different potentials");
    return MatrixFactorization(a.ring_, a.f_, block_diagonal(a.phi_, b.phi_), block_diagonal(a.psi_, b.psi_),
                               a.residue_);
}

MatrixFactorization MatrixFactorization::contractible(const DVRSpec& ring, const DVRElement& potential) {
    return MatrixFactorization(ring, potential, DVRMatrix::diagonal({potential}),
                               DVRMatrix::identity(ring, 1));
}

DVRSpec MatrixFactorization::power_series_ring(std::uint32_t q) {
    return DVRSpec::equal_char(q, DVRSpec::kMaxPrecision);
}

MatrixFactorization stabilized_residue_field(std::uint32_t q, int e) {
    if (e < 1) raise(ErrorKind::InvalidArgument, "e must be at least 1");
    const DVRSpec R = MatrixFactorization::power_series_ring(q);
    return MatrixFactorization(R, DVRElement::uniformizer_power(R, e),
                               DVRMatrix::diagonal({DVRElement::uniformizer_power(R, 1)}),
                               DVRMatrix::diagonal({DVRElement::uniformizer_power(R, e - 1)}));
}

PeriodicComplex mf_hom_complex(const MatrixFactorization& M, const MatrixFactorization& N) {
    if (!(M.ring() == N.ring()) || M.potential() != N.potential())
        raise(ErrorKind::InvalidArgument, "Hom between factorizations of different potentials");
    const DVRSpec& R = M.ring();
    const int rE = M.rank_E(), rF = M.rank_F(), sE = N.rank_E(), sF = N.rank_F();
    auto I = [&](int n) { return DVRMatrix::identity(R, n); };
    const DVRMatrix &phi = M.phi(), &psi = M.psi(), &phi2 = N.phi(), &psi2 = N.psi();
    // Even: (a in Hom(E,E'), b in Hom(F,F')); odd: (u in Hom(E,F'), w in Hom(F,E')).
    const int even_a = sE * rE, even_b = sF * rF, odd_u = sF * rE, odd_w = sE * rF;
    PeriodicComplex c;
    c.D0 = DVRMatrix(R, odd_u + odd_w, even_a + even_b);
    c.D0.set_block(0, 0, kron(phi2, I(rE)));
    c.D0.set_block(0, even_a, kron(I(sF), phi.transpose()).scaled(DVRElement::from_int(R, -1)));
    c.D0.set_block(odd_u, 0, kron(I(sE), psi.transpose()).scaled(DVRElement::from_int(R, -1)));
    c.D0.set_block(odd_u, even_a, kron(psi2, I(rF)));
    c.D1 = DVRMatrix(R, even_a + even_b, odd_u + odd_w);
    c.D1.set_block(0, 0, kron(psi2, I(rE)));
    c.D1.set_block(0, odd_u, kron(I(sE), phi.transpose()));
    c.D1.set_block(even_a, 0, kron(I(sF), psi.transpose()));
    c.D1.set_block(even_a, odd_u, kron(phi2, I(rF)));
    return c;
}

PeriodicCohomology mf_hom_cohomology(const MatrixFactorization& M, const MatrixFactorization& N) {
    if (M.over_residue_field() != N.over_residue_field())
        raise(ErrorKind::InvalidArgument, "factorizations over different rings");
    if (M.over_residue_field()) {
        const PeriodicComplex c = mf_hom_complex(M, N);
        const int r0 = residue_rank(c.D0), r1 = residue_rank(c.D1);
        return {c.D0.cols() - r0 - r1, c.D0.rows() - r1 - r0};
    }
    const Valuation vf = M.potential().valuation();
    const int start = std::clamp(vf.at_least ? 8 : 2 * vf.value + 2, 4, M.ring().precision() / 2);
    const PeriodicDVRCohomology h = stable_periodic_cohomology(
        [&](int precision) { return mf_hom_complex(M.with_precision(precision), N.with_precision(precision)); },
        start);
    if (h.even.free_rank != 0 || h.odd.free_rank != 0)
        raise(ErrorKind::NotFiniteLength, "Hom cohomology has a free part");
    return {h.even.torsion_length, h.odd.torsion_length};
}

MoritaObject morita_object(int e, std::uint32_t q) {
    if (e < 2) raise(ErrorKind::InvalidArgument, "the Morita computation needs e >= 2");
    auto multiplicities = [&](int precision) {
        const DVRSpec A = DVRSpec::equal_char(q, precision);
        const auto ext = EisensteinExtension::extend(DVRPoly::monomial(A, e, DVRElement::one(A)) -
                                                     DVRPoly::monomial(A, 0, DVRElement::uniformizer_power(A, 1)));
        const FreeDGModule K = FreeDGModule::residue_model_kaprime(ext);
        const FreeDGModule T = tensor_over_aprime(K, K.dual()).module;
        std::pair<int, int> ab{0, 0};
        for (const auto& [deg, h] : dg_cohomology(T)) {
            if (h.free_rank != 0) raise(ErrorKind::NotFiniteLength, "k (x) k^v has a free part");
            (deg % 2 == 0 ? ab.first : ab.second) += h.torsion_length;
        }
        return ab;
    };
    const auto lo = multiplicities(4), hi = multiplicities(8);
    if (lo != hi) raise(ErrorKind::NotStabilized, "k (x) k^v changes with the precision");

    MoritaObject r;
    r.even_multiplicity = lo.first;
    r.odd_multiplicity = lo.second;
    const DVRSpec R = MatrixFactorization::power_series_ring(q);
    const MatrixFactorization X(R, DVRElement::zero(R), DVRMatrix(R, lo.second, lo.first),
                                DVRMatrix(R, lo.first, lo.second), true);
    r.end = mf_hom_cohomology(X, X);
    return r;
}

PeriodicCohomology morita_object_class(int e, std::uint32_t q) { return morita_object(e, q).end; }

PeriodicCohomology unit_object_end(std::uint32_t q) {
    const DVRSpec R = MatrixFactorization::power_series_ring(q);
    const MatrixFactorization unit(R, DVRElement::zero(R), DVRMatrix(R, 0, 1), DVRMatrix(R, 1, 0), true);
    return mf_hom_cohomology(unit, unit);
}

std::vector<DVRCohomology> hochschild_cohomology_profile(const EisensteinExtension& ext, int max_degree) {
    if (max_degree < 0) raise(ErrorKind::InvalidArgument, "negative degree");
    different_valuation(ext);
    const int e = ext.degree();
    const DVRSpec& A = ext.base();
    const DVRMatrix Dprime = ext.multiplication_matrix(ext.evaluate(ext.polynomial().derivative(), ext.uniformizer()));
    const DVRMatrix zero(A, e, e);
    auto map_from = [&](int k) { return k % 2 == 0 ? zero : Dprime; };
    std::vector<DVRCohomology> out;
    for (int k = 0; k <= max_degree; ++k) {
        const DVRMatrix d_in = k == 0 ? DVRMatrix(A, e, 0) : map_from(k - 1);
        out.push_back(cohomology_at(d_in, map_from(k)));
    }
    return out;
}

PeriodicComplex integration_complex(const GaloisData& G, IntegrationClass which, int precision) {
    G.require_galois();
    const EisensteinExtension ext = G.extension().with_precision(precision);
    const int e = ext.degree();
    PeriodicComplex c{DVRMatrix(ext.base(), e, e), DVRMatrix(ext.base(), e, e)};
    if (which.kind == IntegrationClass::Kind::Diagonal) {
        c.D1 = ext.multiplication_matrix(ext.evaluate(ext.polynomial().derivative(), ext.uniformizer()));
    } else {
        if (which.element <= 0 || which.element >= G.order())
            raise(ErrorKind::InvalidArgument, "graph class needs a non-identity group element");
        EisensteinExtension::Elem image = G.image(which.element);
        for (auto& c_i : image) c_i = c_i.with_precision(precision);
        c.D0 = ext.multiplication_matrix(ext.sub(image, ext.uniformizer()));
    }
    return c;
}

int integrate_class(const GaloisData& G, IntegrationClass which) {
    G.require_galois();
    const int N = G.extension().base().precision();
    if (N < 4) raise(ErrorKind::PrecisionLoss, "integration needs base precision at least 4");
    const PeriodicDVRCohomology h = stable_periodic_cohomology(
        [&](int precision) { return integration_complex(G, which, std::min(precision, N)); }, N / 2);
    if (h.even.free_rank != 0 || h.odd.free_rank != 0)
        raise(ErrorKind::PrecisionLoss, "periodic pair is not of finite length at this precision");
    return h.odd.torsion_length - h.even.torsion_length;
}

}  // namespace ramify
