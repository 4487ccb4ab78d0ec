#include "ramify/dvr_matrix.hpp"

#include <algorithm>
#include <utility>

namespace ramify {

DVRMatrix::DVRMatrix(const DVRSpec& spec, int rows, int cols)
    : spec_(spec), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, DVRElement::zero(spec)) {
    if (rows < 0 || cols < 0) raise(ErrorKind::InvalidArgument, "negative matrix dimension");
}

DVRMatrix DVRMatrix::identity(const DVRSpec& spec, int n) {
    DVRMatrix m(spec, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = DVRElement::one(spec);
    return m;
}

DVRMatrix DVRMatrix::from_ints(const DVRSpec& spec, const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    DVRMatrix m(spec, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            raise(ErrorKind::InvalidArgument, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = DVRElement::from_int(spec, rows[i][j]);
    }
    return m;
}

DVRMatrix DVRMatrix::diagonal(const std::vector<DVRElement>& entries) {
    if (entries.empty()) raise(ErrorKind::InvalidArgument, "empty diagonal");
    const int n = static_cast<int>(entries.size());
    DVRMatrix m(entries[0].spec(), n, n);
    for (int i = 0; i < n; ++i) m(i, i) = entries[i];
    return m;
}

DVRMatrix DVRMatrix::operator+(const DVRMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::InvalidArgument, "shape mismatch in +");
    DVRMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

DVRMatrix DVRMatrix::operator-(const DVRMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::InvalidArgument, "shape mismatch in -");
    DVRMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

DVRMatrix DVRMatrix::operator*(const DVRMatrix& o) const {
    if (cols_ != o.rows_) raise(ErrorKind::InvalidArgument, "shape mismatch in *");
    DVRMatrix r(spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const DVRElement& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const DVRElement& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

DVRMatrix DVRMatrix::scaled(const DVRElement& c) const {
    DVRMatrix r(*this);
    for (auto& x : r.data_) x = x * c;
    return r;
}

DVRMatrix DVRMatrix::transpose() const {
    DVRMatrix r(spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

DVRMatrix DVRMatrix::with_precision(int precision) const {
    DVRMatrix r(spec_.with_precision(precision), rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].with_precision(precision);
    return r;
}

bool DVRMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const DVRElement& x) { return x.is_zero(); });
}

void DVRMatrix::set_block(int r, int c, const DVRMatrix& b) {
    if (r + b.rows_ > rows_ || c + b.cols_ > cols_) raise(ErrorKind::InvalidArgument, "block out of range");
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) (*this)(r + i, c + j) = b(i, j);
}

DVRMatrix DVRMatrix::block(int r, int c, int nr, int nc) const {
    if (r + nr > rows_ || c + nc > cols_) raise(ErrorKind::InvalidArgument, "block out of range");
    DVRMatrix b(spec_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r + i, c + j);
    return b;
}

DVRMatrix DVRMatrix::hstack(const std::vector<DVRMatrix>& parts) {
    if (parts.empty()) raise(ErrorKind::InvalidArgument, "hstack of nothing");
    int cols = 0;
    for (const auto& p : parts) {
        if (p.rows_ != parts[0].rows_) raise(ErrorKind::InvalidArgument, "hstack row mismatch");
        cols += p.cols_;
    }
    DVRMatrix m(parts[0].spec_, parts[0].rows_, cols);
    int c = 0;
    for (const auto& p : parts) {
        m.set_block(0, c, p);
        c += p.cols_;
    }
    return m;
}

DVRMatrix DVRMatrix::vstack(const std::vector<DVRMatrix>& parts) {
    if (parts.empty()) raise(ErrorKind::InvalidArgument, "vstack of nothing");
    int rows = 0;
    for (const auto& p : parts) {
        if (p.cols_ != parts[0].cols_) raise(ErrorKind::InvalidArgument, "vstack column mismatch");
        rows += p.rows_;
    }
    DVRMatrix m(parts[0].spec_, rows, parts[0].cols_);
    int r = 0;
    for (const auto& p : parts) {
        m.set_block(r, 0, p);
        r += p.rows_;
    }
    return m;
}

// ---------------------------------------------------------------------------

int SmithResult::rank() const noexcept {
    return static_cast<int>(std::count_if(pivots.begin(), pivots.end(),
                                          [](const Valuation& v) { return !v.at_least; }));
}

int SmithResult::torsion_length() const noexcept {
    int s = 0;
    for (const auto& v : pivots)
        if (!v.at_least) s += v.value;
    return s;
}

namespace {

bool less_valuation(const Valuation& a, const Valuation& b) {
    if (a.at_least != b.at_least) return !a.at_least;
    return a.value < b.value;
}

void swap_rows(DVRMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(DVRMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

constexpr int kParallelRows = 32;

// Shared elimination core. Returns pivots in elimination order.
std::vector<Valuation> eliminate(DVRMatrix& m, DVRMatrix* P, DVRMatrix* P_inv) {
    const int rows = m.rows(), cols = m.cols();
    const int steps = std::min(rows, cols);
    const int N = m.spec().precision();
    std::vector<Valuation> pivots;
    pivots.reserve(steps);
    for (int k = 0; k < steps; ++k) {
        int pr = -1, pc = -1;
        int best = N;
        for (int i = k; i < rows && best > 0; ++i)
            for (int j = k; j < cols; ++j) {
                const Valuation v = m(i, j).valuation();
                if (!v.at_least && v.value < best) {
                    best = v.value;
                    pr = i;
                    pc = j;
                    if (best == 0) break;
                }
            }
        if (pr < 0) {
            for (int r = k; r < steps; ++r) pivots.push_back(Valuation::lower_bound(N));
            break;
        }
        swap_rows(m, k, pr);
        swap_cols(m, k, pc);
        if (P) swap_rows(*P, k, pr);
        if (P_inv) swap_cols(*P_inv, k, pr);
        pivots.push_back(Valuation::exact(best));

        const DVRElement pivot = m(k, k);
        std::vector<int> targets;
        for (int i = k + 1; i < rows; ++i)
            if (!m(i, k).is_zero()) targets.push_back(i);
        std::vector<int> support;
        for (int j = k + 1; j < cols; ++j)
            if (!m(k, j).is_zero()) support.push_back(j);
        std::vector<DVRElement> factors(targets.size());
        const int nt = static_cast<int>(targets.size());
#pragma omp parallel for schedule(dynamic) if (nt >= kParallelRows)
        for (int t = 0; t < nt; ++t) {
            const int i = targets[t];
            const DVRElement q = DVRElement::exact_div(m(i, k), pivot);
            factors[t] = q;
            m(i, k) = DVRElement::zero(m.spec());
            for (int j : support) m(i, j) -= q * m(k, j);
            if (P)
                for (int j = 0; j < P->cols(); ++j)
                    if (!(*P)(k, j).is_zero()) (*P)(i, j) -= q * (*P)(k, j);
        }
        if (P_inv) {
            // P <- E P with E = I - q e_i e_k^T, so P^{-1} <- P^{-1} (I + q e_i e_k^T).
            for (int t = 0; t < nt; ++t) {
                const int i = targets[t];
                for (int r = 0; r < P_inv->rows(); ++r)
                    if (!(*P_inv)(r, i).is_zero()) (*P_inv)(r, k) += (*P_inv)(r, i) * factors[t];
            }
        }
        // Column operations only touch row k once column k is cleared below.
        for (int j : support) m(k, j) = DVRElement::zero(m.spec());
    }
    return pivots;
}

SmithResult make_result(int rows, int cols, std::vector<Valuation> pivots) {
    std::sort(pivots.begin(), pivots.end(), less_valuation);
    return SmithResult{rows, cols, std::move(pivots)};
}

}  // namespace

SmithResult smith(DVRMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    return make_result(rows, cols, eliminate(m, nullptr, nullptr));
}

SmithResult smith_reference(DVRMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    const int steps = std::min(rows, cols);
    const int N = m.spec().precision();
    std::vector<Valuation> pivots;
    for (int k = 0; k < steps; ++k) {
        int pr = -1, pc = -1;
        Valuation best = Valuation::lower_bound(N);
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                const Valuation v = m(i, j).valuation();
                if (less_valuation(v, best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) {
            pivots.push_back(best);
            continue;
        }
        swap_rows(m, k, pr);
        swap_cols(m, k, pc);
        pivots.push_back(best);
        const DVRElement pivot = m(k, k);
        for (int i = k + 1; i < rows; ++i) {
            const DVRElement q = DVRElement::exact_div(m(i, k), pivot);
            for (int j = k; j < cols; ++j) m(i, j) -= q * m(k, j);
        }
        for (int j = k + 1; j < cols; ++j) {
            const DVRElement q = DVRElement::exact_div(m(k, j), pivot);
            for (int i = k; i < rows; ++i) m(i, j) -= q * m(i, k);
        }
    }
    return make_result(rows, cols, std::move(pivots));
}

SmithTransform smith_with_transform(const DVRMatrix& m) {
    DVRMatrix work(m);
    SmithTransform out;
    out.P = DVRMatrix::identity(m.spec(), m.rows());
    out.P_inv = DVRMatrix::identity(m.spec(), m.rows());
    out.ordered_pivots = eliminate(work, &out.P, &out.P_inv);
    out.result = make_result(m.rows(), m.cols(), out.ordered_pivots);
    return out;
}

int quotient_length(const DVRMatrix& m) {
    if (m.cols() < m.rows())
        raise(ErrorKind::NotFiniteLength, "fewer relations than generators: rank deficiency");
    const SmithResult r = smith(m);
    if (r.vanishing() > 0)
        raise(ErrorKind::PrecisionLoss, "a pivot vanishes at precision " +
                                            std::to_string(m.spec().precision()));
    return r.torsion_length();
}

FreeQuotient free_quotient(const DVRMatrix& relations) {
    const int n = relations.rows();
    const DVRSpec& spec = relations.spec();
    FreeQuotient fq;
    if (relations.cols() == 0) {
        fq.projection = DVRMatrix::identity(spec, n);
        fq.section = DVRMatrix::identity(spec, n);
        fq.rank = n;
        return fq;
    }
    const SmithTransform st = smith_with_transform(relations);
    int r = 0;
    for (const auto& v : st.ordered_pivots) {
        if (v.at_least) break;
        if (v.value != 0) raise(ErrorKind::NotFree, "quotient has torsion (pivot valuation " +
                                                        std::to_string(v.value) + ")");
        ++r;
    }
    fq.rank = n - r;
    fq.projection = st.P.block(r, 0, n - r, n);
    fq.section = st.P_inv.block(0, r, n, n - r);
    return fq;
}

DVRCohomology cohomology_at(const DVRMatrix& d_in, const DVRMatrix& d_out) {
    const int dim = d_in.rows();
    if (d_out.cols() != dim) raise(ErrorKind::InvalidArgument, "complex shapes do not compose");
    DVRCohomology h;
    int rank_in = 0, rank_out = 0;
    if (d_in.cols() > 0 && dim > 0) {
        const SmithResult r = smith(d_in);
        rank_in = r.rank();
        h.torsion_length = r.torsion_length();
    }
    if (d_out.rows() > 0 && dim > 0) rank_out = smith(d_out).rank();
    h.free_rank = dim - rank_in - rank_out;
    return h;
}

void PeriodicComplex::validate() const {
    if (D0.cols() != D1.rows() || D0.rows() != D1.cols())
        raise(ErrorKind::InvalidArgument, "periodic complex shapes do not match");
    if (!(D1 * D0).is_zero() || !(D0 * D1).is_zero())
        raise(ErrorKind::InvalidArgument, "periodic differential does not square to zero");
}

PeriodicDVRCohomology periodic_cohomology(const PeriodicComplex& c) {
    c.validate();
    PeriodicDVRCohomology h;
    h.even = cohomology_at(c.D1, c.D0);
    h.odd = cohomology_at(c.D0, c.D1);
    h.precision = c.D0.spec().precision();
    return h;
}

PeriodicDVRCohomology stable_periodic_cohomology(
    const std::function<PeriodicComplex(int precision)>& build, int precision) {
    const int hi = std::min(2 * precision, DVRSpec::kMaxPrecision);
    PeriodicDVRCohomology a = periodic_cohomology(build(precision));
    PeriodicDVRCohomology b;
    try {
        b = periodic_cohomology(build(hi));
    } catch (const RamifyError& e) {
        if (e.kind() != ErrorKind::InvalidArgument) throw;
        b = a;  // the ring cannot be enlarged (e.g. p^{2N} overflows)
    }
    if (!(a == b))
        raise(ErrorKind::NotStabilized, "periodic cohomology changes between N=" +
                                            std::to_string(precision) + " and N=" + std::to_string(hi));
    return a;
}

}  // namespace ramify
