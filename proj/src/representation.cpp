#include "ramify/representation.hpp"

#include <algorithm>
#include <array>

namespace ramify {

GroupModule::GroupModule(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                         std::vector<CycloMatrix> rho, int degree)
    : group_(std::move(group)), field_(&field), rho_(std::move(rho)), degree_(degree) {
    if (static_cast<int>(rho_.size()) != group_->order())
        raise(ErrorKind::InvalidArgument, "one matrix per group element required");
    dim_ = rho_[0].rows();
    for (const auto& m : rho_)
        if (m.rows() != dim_ || m.cols() != dim_ || &m.field() != field_)
            raise(ErrorKind::InvalidArgument, "representation matrices have inconsistent shape or field");
}

GroupModule GroupModule::trivial(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field) {
    std::vector<CycloMatrix> rho(group->order(), CycloMatrix::identity(field, 1));
    return GroupModule(std::move(group), field, std::move(rho));
}

GroupModule GroupModule::permutation(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                                     const std::vector<std::vector<int>>& perm) {
    const int n = static_cast<int>(perm.at(0).size());
    std::vector<CycloMatrix> rho;
    for (int g = 0; g < group->order(); ++g) {
        CycloMatrix m(field, n, n);
        for (int i = 0; i < n; ++i) m(perm[g][i], i) = CycloRational(field, 1);
        rho.push_back(std::move(m));
    }
    return GroupModule(std::move(group), field, std::move(rho));
}

GroupModule GroupModule::regular(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field) {
    const int n = group->order();
    std::vector<std::vector<int>> perm(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < n; ++i) perm[g][i] = group->mul(g, i);
    return permutation(std::move(group), field, perm);
}

GroupModule GroupModule::cosets(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field, int h) {
    const int n = group->order();
    std::vector<int> sub{0};
    for (int x = h; x != 0; x = group->mul(x, h)) sub.push_back(x);
    // Coset label of each element: index of the coset g<h>.
    std::vector<int> label(n, -1);
    int count = 0;
    for (int g = 0; g < n; ++g) {
        if (label[g] >= 0) continue;
        for (int s : sub) label[group->mul(g, s)] = count;
        ++count;
    }
    std::vector<int> rep(count);
    for (int g = n - 1; g >= 0; --g) rep[label[g]] = g;
    std::vector<std::vector<int>> perm(n, std::vector<int>(count));
    for (int g = 0; g < n; ++g)
        for (int c = 0; c < count; ++c) perm[g][c] = label[group->mul(g, rep[c])];
    return permutation(std::move(group), field, perm);
}

GroupModule GroupModule::augmentation(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field) {
    const int n = group->order();
    if (n < 2) raise(ErrorKind::InvalidArgument, "augmentation of the trivial group is zero");
    std::vector<CycloMatrix> rho;
    for (int h = 0; h < n; ++h) {
        CycloMatrix m(field, n - 1, n - 1);
        for (int g = 1; g < n; ++g) {
            const int hg = group->mul(h, g);
            if (hg != 0) {
                m(hg - 1, g - 1) = CycloRational(field, 1);
            } else {
                for (int i = 0; i < n - 1; ++i) m(i, g - 1) = CycloRational(field, -1);
            }
        }
        rho.push_back(std::move(m));
    }
    return GroupModule(std::move(group), field, std::move(rho));
}

GroupModule GroupModule::cyclic_character(std::shared_ptr<const FiniteGroup> group,
                                          const CyclotomicField& field, int gen, int j) {
    const int n = group->order();
    if (group->element_order(gen) != n) raise(ErrorKind::InvalidArgument, "element does not generate the group");
    if (field.m() % n != 0) raise(ErrorKind::InvalidArgument, "field lacks the needed roots of unity");
    std::vector<CycloMatrix> rho(n);
    int x = 0;
    for (int k = 0; k < n; ++k) {
        CycloMatrix m(field, 1, 1);
        m(0, 0) = CycloRational::zeta(field, (field.m() / n) * ((j * k) % n));
        rho[x] = std::move(m);
        x = group->mul(x, gen);
    }
    return GroupModule(std::move(group), field, std::move(rho));
}

namespace {
// Permutation of three points realized by each element, recovered from the
// conjugation action on the three elements of order two.
std::vector<std::array<int, 3>> s3_points(const FiniteGroup& G) {
    std::vector<int> inv;
    for (int g = 0; g < G.order(); ++g)
        if (G.element_order(g) == 2) inv.push_back(g);
    if (G.order() != 6 || inv.size() != 3) raise(ErrorKind::InvalidArgument, "group is not S3");
    std::vector<std::array<int, 3>> out(G.order());
    for (int g = 0; g < G.order(); ++g)
        for (int i = 0; i < 3; ++i) {
            const int c = G.mul(G.mul(g, inv[i]), G.inv(g));
            out[g][i] = static_cast<int>(std::find(inv.begin(), inv.end(), c) - inv.begin());
        }
    return out;
}
}  // namespace

GroupModule GroupModule::sign(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field) {
    std::vector<CycloMatrix> rho;
    for (int g = 0; g < group->order(); ++g) {
        CycloMatrix m(field, 1, 1);
        m(0, 0) = CycloRational(field, group->element_order(g) == 2 ? -1 : 1);
        rho.push_back(std::move(m));
    }
    if (group->order() != 6) raise(ErrorKind::InvalidArgument, "sign is defined here for S3 only");
    return GroupModule(std::move(group), field, std::move(rho));
}

GroupModule GroupModule::standard(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field) {
    const auto pts = s3_points(*group);
    // Basis f0 = p0 - p2, f1 = p1 - p2 of the sum-zero subspace.
    auto coords = [&](int p) -> std::array<long long, 2> {
        if (p == 0) return {1, 0};
        if (p == 1) return {0, 1};
        return {0, 0};
    };
    std::vector<CycloMatrix> rho;
    for (int g = 0; g < group->order(); ++g) {
        CycloMatrix m(field, 2, 2);
        for (int j = 0; j < 2; ++j) {
            const auto a = coords(pts[g][j]);
            const auto b = coords(pts[g][2]);
            for (int i = 0; i < 2; ++i) m(i, j) = CycloRational(field, Rational(a[i] - b[i]));
        }
        rho.push_back(std::move(m));
    }
    return GroupModule(std::move(group), field, std::move(rho));
}

GroupModule GroupModule::shifted(int degree) const {
    GroupModule r(*this);
    r.degree_ = degree;
    return r;
}

GroupModule GroupModule::conjugated(const CycloMatrix& P) const {
    const CycloMatrix Pinv = P.inverse();
    std::vector<CycloMatrix> rho;
    for (const auto& m : rho_) rho.push_back(P * m * Pinv);
    return GroupModule(group_, *field_, std::move(rho), degree_);
}

GroupModule GroupModule::direct_sum(const GroupModule& a, const GroupModule& b) {
    if (a.group_ != b.group_) raise(ErrorKind::InvalidArgument, "direct sum over different groups");
    std::vector<CycloMatrix> rho;
    for (int g = 0; g < a.group_->order(); ++g) rho.push_back(CycloMatrix::direct_sum(a.rho_[g], b.rho_[g]));
    return GroupModule(a.group_, *a.field_, std::move(rho), a.degree_);
}

bool GroupModule::is_homomorphism() const {
    const int n = group_->order();
    if (!(rho_[0] == CycloMatrix::identity(*field_, dim_))) return false;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (!(rho_[g] * rho_[h] == rho_[group_->mul(g, h)])) return false;
    return true;
}

int GroupModule::fixed_dimension() const {
    if (dim_ == 0) return 0;
    const int n = group_->order();
    CycloMatrix stacked(*field_, dim_ * n, dim_);
    const CycloMatrix I = CycloMatrix::identity(*field_, dim_);
    for (int g = 0; g < n; ++g) {
        const CycloMatrix d = rho_[g] - I;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) stacked(g * dim_ + i, j) = d(i, j);
    }
    return dim_ - stacked.rank();
}

CycloMatrix GroupModule::averaging_projector() const {
    CycloMatrix s(*field_, dim_, dim_);
    for (const auto& m : rho_) s = s + m;
    return s.scaled(CycloRational(*field_, Rational(1, group_->order())));
}

int cyclic_generator(const FiniteGroup& G) {
    for (int g = 0; g < G.order(); ++g)
        if (G.element_order(g) == G.order()) return g;
    return -1;
}

CycloMatrix random_invertible(const CyclotomicField& field, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        CycloMatrix P(field, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) P(i, j) = CycloRational(field, Rational(entry(rng)));
        if (P.rank() == n) return P;
    }
}

GroupModule random_module(std::shared_ptr<const FiniteGroup> group, const CyclotomicField& field,
                          std::mt19937_64& rng, int max_dim) {
    const int n = group->order();
    const int gen = cyclic_generator(*group);
    auto block = [&](int kind) -> GroupModule {
        switch (kind) {
            case 0: return GroupModule::trivial(group, field);
            case 1: return GroupModule::regular(group, field);
            case 2: {
                const int h = std::uniform_int_distribution<int>(0, n - 1)(rng);
                return GroupModule::cosets(group, field, h);
            }
            case 3:
                if (n >= 2) return GroupModule::augmentation(group, field);
                return GroupModule::trivial(group, field);
            default:
                if (gen >= 0 && field.m() % n == 0)
                    return GroupModule::cyclic_character(group, field, gen, std::uniform_int_distribution<int>(0, n - 1)(rng));
                if (n == 6 && gen < 0)
                    return kind % 2 ? GroupModule::sign(group, field) : GroupModule::standard(group, field);
                return GroupModule::trivial(group, field);
        }
    };
    std::uniform_int_distribution<int> kinds(0, 5);
    GroupModule V = block(kinds(rng));
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < extra; ++k) {
        GroupModule B = block(kinds(rng));
        if (V.dim() + B.dim() > max_dim) break;
        V = GroupModule::direct_sum(V, B);
    }
    return V.conjugated(random_invertible(field, V.dim(), rng));
}

}  // namespace ramify
