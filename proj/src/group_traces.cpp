#include "ramify/group_traces.hpp"

#include <sstream>

#include "ramify/errors.hpp"

namespace ramify {

GroupAlgebraElement::GroupAlgebraElement(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field)
    : group_(std::move(group)), field_(&field), c_(group_->order(), CycloRational(field)) {}

GroupAlgebraElement GroupAlgebraElement::basis(std::shared_ptr<const FiniteGroup> group,
                                               const CyclotomicField& field, int h) {
    GroupAlgebraElement x(std::move(group), field);
    x.c_[h] = CycloRational(field, Rational(1));
    return x;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r = *this;
    for (std::size_t g = 0; g < c_.size(); ++g) r.c_[g] += o.c_[g];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    GroupAlgebraElement r(group_, *field_);
    for (int a = 0; a < group_->order(); ++a) {
        if (c_[a].is_zero()) continue;
        for (int b = 0; b < group_->order(); ++b) {
            if (o.c_[b].is_zero()) continue;
            r.c_[group_->mul(a, b)] += c_[a] * o.c_[b];
        }
    }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const CycloRational& s) const {
    GroupAlgebraElement r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

HH0Class::HH0Class(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field, bool reduced)
    : group_(std::move(group)), field_(&field), reduced_(reduced),
      c_(group_->classes().size(), CycloRational(field)) {}

HH0Class HH0Class::canonical(const GroupAlgebraElement& x) {
    const auto& G = *x.group();
    HH0Class r(x.group(), x.coeff(0).field());
    for (int h = 0; h < G.order(); ++h) r.add_to(h, x.coeff(h));
    return r;
}

void HH0Class::add_to(int h, const CycloRational& value) {
    c_[group_->class_of(h)] += value;
    if (reduced_) *this = HH0Class(*this).reduction();
}

HH0Class HH0Class::reduction() const {
    HH0Class r(group_, *field_, true);
    const int id = group_->class_of(group_->identity());
    for (std::size_t c = 0; c < c_.size(); ++c) {
        if (static_cast<int>(c) == id) continue;
        const Rational size(static_cast<long long>(group_->classes()[c].size()));
        r.c_[c] = c_[c] - c_[id] * size;
    }
    return r;
}

HH0Class HH0Class::operator+(const HH0Class& o) const {
    if (group_ != o.group_) raise(ErrorKind::InvalidArgument, "HH0 classes over different groups");
    HH0Class a = reduced_ || o.reduced_ ? reduction() : *this;
    const HH0Class b = reduced_ || o.reduced_ ? o.reduction() : o;
    for (std::size_t c = 0; c < c_.size(); ++c) a.c_[c] += b.c_[c];
    return a;
}

bool HH0Class::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::string HH0Class::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t c = 0; c < c_.size(); ++c) {
        if (c_[c].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[c].to_string() << ")<" << group_->element_name(group_->class_rep(static_cast<int>(c)))
           << ">";
    }
    return first ? "0" : os.str();
}

namespace {

CycloRational inverse_order(const FiniteGroup& G, const CyclotomicField& F) {
    return CycloRational(F, Rational(1, G.order()));
}

}  // namespace

DualityDatum::DualityDatum(const GroupModule& M) : M_(M) {
    const auto& G = *M.group();
    const auto& F = M.field();
    const int n = M.dim();
    const CycloRational s = inverse_order(G, F);
    for (int g = 0; g < G.order(); ++g) ev_table_.push_back(M.rho(G.inv(g)).scaled(s));
    // r(gamma): average of gamma over the relations (f.h) (x) m ~ f (x) h m.
    coev_ = CycloMatrix(F, n, n);
    const CycloMatrix gamma = CycloMatrix::identity(F, n);
    for (int h = 0; h < G.order(); ++h) coev_ = coev_ + M.rho(h) * gamma * M.rho(G.inv(h));
    coev_ = coev_.scaled(s);
    if (!ev_is_bilinear()) raise(ErrorKind::TriangularIdentityFailed, "ev is not F[H]-bilinear");
    if (!(left_triangle() == CycloMatrix::identity(F, n)))
        raise(ErrorKind::TriangularIdentityFailed, "(ev x id)(id x coev) != id");
    if (!(right_triangle() == CycloMatrix::identity(F, n)))
        raise(ErrorKind::TriangularIdentityFailed, "(id x ev)(coev x id) != id");
}

GroupAlgebraElement DualityDatum::ev(const CycloMatrix& m, const CycloMatrix& f) const {
    GroupAlgebraElement x(M_.group(), M_.field());
    for (int g = 0; g < M_.group()->order(); ++g) x.coeff(g) = (f * ev_table_[g] * m)(0, 0);
    return x;
}

// On basis vectors ev(e_j (x) f_i)_g = ev_table_[g](i, j); the composites below
// are the sums over i, j written as matrix products.

CycloMatrix DualityDatum::left_triangle() const {
    CycloMatrix out(M_.field(), M_.dim(), M_.dim());
    for (int g = 0; g < M_.group()->order(); ++g) out = out + M_.rho(g) * coev_ * ev_table_[g];
    return out;
}

CycloMatrix DualityDatum::right_triangle() const {
    CycloMatrix out(M_.field(), M_.dim(), M_.dim());
    for (int g = 0; g < M_.group()->order(); ++g) out = out + ev_table_[g] * coev_ * M_.rho(g);
    return out;
}

bool DualityDatum::ev_is_bilinear() const {
    // ev(h m (x) f) = e_h ev(m (x) f) and ev(m (x) f.h) = ev(m (x) f) e_h.
    const auto& G = *M_.group();
    for (int h = 0; h < G.order(); ++h)
        for (int g = 0; g < G.order(); ++g) {
            if (!(ev_table_[g] * M_.rho(h) == ev_table_[G.mul(G.inv(h), g)])) return false;
            if (!(M_.rho(h) * ev_table_[g] == ev_table_[G.mul(g, G.inv(h))])) return false;
        }
    return true;
}

GroupAlgebraElement DualityDatum::ev_hh(const CycloMatrix& T) const {
    GroupAlgebraElement x(M_.group(), M_.field());
    for (int g = 0; g < M_.group()->order(); ++g) x.coeff(g) = (ev_table_[g] * T * coev_).trace();
    return x;
}

DualityDatum build_duality(const GroupModule& M) { return DualityDatum(M); }

void require_equivariant(const GroupModule& M, const CycloMatrix& T) {
    if (T.rows() != M.dim() || T.cols() != M.dim())
        raise(ErrorKind::InvalidArgument, "endomorphism has the wrong size");
    for (int h = 0; h < M.group()->order(); ++h)
        if (!(T * M.rho(h) == M.rho(h) * T))
            raise(ErrorKind::NotEquivariant, "T does not commute with " + M.group()->element_name(h));
}

HH0Class trace_via_duality(const GroupModule& M, const CycloMatrix& T) {
    require_equivariant(M, T);
    if (M.dim() == 0) return HH0Class(M.group(), M.field());
    return HH0Class::canonical(DualityDatum(M).ev_hh(T));
}

HH0Class trace_via_characters(const GroupModule& M, const CycloMatrix& T) {
    require_equivariant(M, T);
    const auto& G = *M.group();
    const auto& F = M.field();
    HH0Class r(M.group(), F);
    const CycloRational s = inverse_order(G, F);
    for (int h = 0; h < G.order(); ++h) r.add_to(h, (T * M.rho(G.inv(h))).trace() * s);
    return r;
}

GroupModule coinvariant_complement(const GroupModule& M) {
    const auto& G = *M.group();
    const auto& F = M.field();
    const int n = M.dim();
    const CycloMatrix Q = CycloMatrix::identity(F, n) - M.averaging_projector();
    const CycloMatrix B = Q.select_columns(Q.independent_columns());
    std::vector<CycloMatrix> rho;
    for (int h = 0; h < G.order(); ++h) {
        if (B.cols() == 0) {
            rho.emplace_back(F, 0, 0);
            continue;
        }
        rho.push_back(CycloMatrix::solve(B, M.rho(h) * B));
    }
    return GroupModule(M.group(), F, std::move(rho), M.degree());
}

HH0Class reduced_trace(const GroupModule& M) {
    const GroupModule Q = coinvariant_complement(M);
    return trace_via_duality(Q, CycloMatrix::identity(Q.field(), Q.dim())).reduction();
}

CycloMatrix random_equivariant(const GroupModule& M, std::mt19937_64& rng) {
    const auto& G = *M.group();
    const auto& F = M.field();
    const int n = M.dim();
    std::uniform_int_distribution<int> d(-3, 3);
    CycloMatrix X(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) X(i, j) = CycloRational(F, Rational(d(rng)));
    CycloMatrix T(F, n, n);
    for (int h = 0; h < G.order(); ++h) T = T + M.rho(h) * X * M.rho(G.inv(h));
    return T.scaled(inverse_order(G, F));
}

}  // namespace ramify
