#include "ramify/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ramify {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::vector<BigInt> cyclotomic_polynomial(int m) {
    if (m < 1) raise(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
    // x^m - 1 divided by Phi_d for every proper divisor d.
    std::vector<BigInt> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        const std::vector<BigInt> den = cyclotomic_polynomial(d);
        const int dd = static_cast<int>(den.size()) - 1;
        const int dn = static_cast<int>(num.size()) - 1;
        std::vector<BigInt> q(dn - dd + 1, 0);
        for (int i = dn - dd; i >= 0; --i) {
            q[i] = num[i + dd];  // den is monic
            for (int j = 0; j <= dd; ++j) num[i + j] -= q[i] * den[j];
        }
        num = q;
    }
    return num;
}

CyclotomicField::CyclotomicField(int m) : m_(m) {
    poly_ = ramify::cyclotomic_polynomial(m);
    phi_ = static_cast<int>(poly_.size()) - 1;
    powers_.assign(m, std::vector<Rational>(phi_, 0));
    std::vector<Rational> cur(phi_, 0);
    cur[0] = 1;
    for (int k = 0; k < m; ++k) {
        powers_[k] = cur;
        // multiply by z and reduce: z^phi = -sum poly_[i] z^i
        std::vector<Rational> next(phi_, 0);
        const Rational top = cur[phi_ - 1];
        for (int i = phi_ - 1; i > 0; --i) next[i] = cur[i - 1];
        for (int i = 0; i < phi_; ++i) next[i] -= top * Rational(poly_[i]);
        cur = std::move(next);
    }
}

const CyclotomicField& CyclotomicField::get(int m) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        if (m < 1 || m > 1000) raise(ErrorKind::InvalidArgument, "cyclotomic index out of range");
        it = cache.emplace(m, std::unique_ptr<CyclotomicField>(new CyclotomicField(m))).first;
    }
    return *it->second;
}

// ---------------------------------------------------------------------------

CycloRational::CycloRational(const CyclotomicField& field)
    : field_(&field), c_(field.degree(), 0) {}

CycloRational::CycloRational(const CyclotomicField& field, const Rational& r) : CycloRational(field) {
    c_[0] = r;
}

CycloRational CycloRational::zeta(const CyclotomicField& field, int k) {
    CycloRational z(field);
    z.c_ = field.zeta_power(k);
    return z;
}

namespace {
void same_field(const CycloRational& a, const CycloRational& b) {
    if (&a.field() != &b.field())
        raise(ErrorKind::InvalidArgument, "mixing Q(zeta_" + std::to_string(a.field().m()) +
                                              ") and Q(zeta_" + std::to_string(b.field().m()) + ")");
}
}  // namespace

CycloRational CycloRational::operator+(const CycloRational& o) const {
    same_field(*this, o);
    CycloRational r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloRational CycloRational::operator-(const CycloRational& o) const {
    same_field(*this, o);
    CycloRational r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycloRational CycloRational::operator-() const {
    CycloRational r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

CycloRational CycloRational::operator*(const CycloRational& o) const {
    same_field(*this, o);
    const int n = field_->degree();
    CycloRational r(*field_);
    if (n == 1) {
        r.c_[0] = c_[0] * o.c_[0];
        return r;
    }
    std::vector<Rational> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    for (int k = 0; k < 2 * n - 1; ++k) {
        if (prod[k] == 0) continue;
        if (k < n) {
            r.c_[k] += prod[k];
        } else {
            const auto& zk = field_->zeta_power(k);
            for (int i = 0; i < n; ++i) r.c_[i] += prod[k] * zk[i];
        }
    }
    return r;
}

CycloRational CycloRational::operator*(const Rational& s) const {
    CycloRational r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

CycloRational CycloRational::inverse() const {
    if (is_zero()) raise(ErrorKind::InvalidArgument, "inverse of zero in Q(zeta_m)");
    const int n = field_->degree();
    if (n == 1) return CycloRational(*field_, 1 / c_[0]);
    // Column j of the multiplication matrix is this * z^j.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, 0));
    for (int j = 0; j < n; ++j) {
        const CycloRational col = *this * zeta(*field_, j);
        for (int i = 0; i < n; ++i) a[i][j] = col.c_[i];
    }
    a[0][n] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        const Rational inv = 1 / a[col][col];
        for (int j = col; j <= n; ++j) a[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    CycloRational r(*field_);
    for (int i = 0; i < n; ++i) r.c_[i] = a[i][n];
    return r;
}

CycloRational CycloRational::conj() const {
    CycloRational r(*field_);
    const int m = field_->m();
    for (int i = 0; i < field_->degree(); ++i) {
        if (c_[i] == 0) continue;
        const auto& zi = field_->zeta_power(m - i);
        for (int k = 0; k < field_->degree(); ++k) r.c_[k] += c_[i] * zi[k];
    }
    return r;
}

bool CycloRational::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloRational::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycloRational::to_rational() const {
    if (!is_rational()) raise(ErrorKind::InvalidArgument, "value " + to_string() + " is not rational");
    return c_[0];
}

std::string CycloRational::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rational_to_string(c_[i]);
        if (i > 0) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    return os.str();
}

bool operator==(const CycloRational& a, const CycloRational& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
}

// ---------------------------------------------------------------------------

CycloMatrix::CycloMatrix(const CyclotomicField& field, int rows, int cols)
    : field_(&field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, CycloRational(field)) {}

CycloMatrix CycloMatrix::identity(const CyclotomicField& field, int n) {
    CycloMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = CycloRational(field, 1);
    return m;
}

CycloMatrix CycloMatrix::from_ints(const CyclotomicField& field,
                                   const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    CycloMatrix m(field, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = CycloRational(field, Rational(rows[i][j]));
    return m;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::InvalidArgument, "shape mismatch in +");
    CycloMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(ErrorKind::InvalidArgument, "shape mismatch in -");
    CycloMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
    if (cols_ != o.rows_) raise(ErrorKind::InvalidArgument, "shape mismatch in *");
    CycloMatrix r(*field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const CycloRational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const CycloRational& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

CycloMatrix CycloMatrix::scaled(const CycloRational& c) const {
    CycloMatrix r(*this);
    for (auto& x : r.data_) x = x * c;
    return r;
}

CycloMatrix CycloMatrix::transpose() const {
    CycloMatrix r(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

CycloRational CycloMatrix::trace() const {
    CycloRational s(*field_);
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

bool CycloMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<int> CycloMatrix::independent_columns() const {
    CycloMatrix a(*this);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int i = row; i < rows_; ++i)
            if (!a(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(a(piv, j), a(row, j));
        const CycloRational inv = a(row, col).inverse();
        for (int i = row + 1; i < rows_; ++i) {
            if (a(i, col).is_zero()) continue;
            const CycloRational f = a(i, col) * inv;
            for (int j = col; j < cols_; ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int CycloMatrix::rank() const { return static_cast<int>(independent_columns().size()); }

CycloMatrix CycloMatrix::select_columns(const std::vector<int>& cols) const {
    CycloMatrix r(*field_, rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, static_cast<int>(j)) = (*this)(i, cols[j]);
    return r;
}

CycloMatrix CycloMatrix::solve(const CycloMatrix& A, const CycloMatrix& B) {
    if (A.rows_ != B.rows_) raise(ErrorKind::InvalidArgument, "solve: row mismatch");
    const int n = A.cols_, k = B.cols_;
    CycloMatrix aug(*A.field_, A.rows_, n + k);
    aug.set_from(A, B);
    int row = 0;
    std::vector<int> pivcol;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = row; i < aug.rows_; ++i)
            if (!aug(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) raise(ErrorKind::InvalidArgument, "solve: matrix lacks full column rank");
        for (int j = 0; j < aug.cols_; ++j) std::swap(aug(piv, j), aug(row, j));
        const CycloRational inv = aug(row, col).inverse();
        for (int j = col; j < aug.cols_; ++j) aug(row, j) = aug(row, j) * inv;
        for (int i = 0; i < aug.rows_; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            const CycloRational f = aug(i, col);
            for (int j = col; j < aug.cols_; ++j) aug(i, j) -= f * aug(row, j);
        }
        ++row;
    }
    for (int i = n; i < aug.rows_; ++i)
        for (int j = n; j < n + k; ++j)
            if (!aug(i, j).is_zero()) raise(ErrorKind::InvalidArgument, "solve: inconsistent system");
    CycloMatrix x(*A.field_, n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) x(i, j) = aug(i, n + j);
    return x;
}

CycloMatrix CycloMatrix::inverse() const {
    if (rows_ != cols_) raise(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
    return solve(*this, identity(*field_, rows_));
}

CycloMatrix CycloMatrix::direct_sum(const CycloMatrix& a, const CycloMatrix& b) {
    CycloMatrix r(*a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
}

CycloMatrix CycloMatrix::kron(const CycloMatrix& a, const CycloMatrix& b) {
    CycloMatrix r(*a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l) r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        }
    return r;
}

void CycloMatrix::set_from(const CycloMatrix& A, const CycloMatrix& B) {
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < A.cols_; ++j) (*this)(i, j) = A(i, j);
        for (int j = 0; j < B.cols_; ++j) (*this)(i, A.cols_ + j) = B(i, j);
    }
}

}  // namespace ramify
