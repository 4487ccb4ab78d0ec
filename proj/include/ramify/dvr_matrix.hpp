#pragma once

#include <functional>
#include <vector>

#include "ramify/dvr.hpp"

namespace ramify {

/// Dense row-major matrix over a truncated DVR. Matrices act on column vectors.
class DVRMatrix {
public:
    DVRMatrix() = default;
    DVRMatrix(const DVRSpec& spec, int rows, int cols);

    static DVRMatrix identity(const DVRSpec& spec, int n);
    static DVRMatrix from_ints(const DVRSpec& spec, const std::vector<std::vector<long long>>& rows);
    static DVRMatrix diagonal(const std::vector<DVRElement>& entries);

    const DVRSpec& spec() const noexcept { return spec_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    DVRElement& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const DVRElement& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    DVRMatrix operator+(const DVRMatrix& o) const;
    DVRMatrix operator-(const DVRMatrix& o) const;
    DVRMatrix operator*(const DVRMatrix& o) const;
    DVRMatrix scaled(const DVRElement& c) const;
    DVRMatrix transpose() const;
    DVRMatrix with_precision(int precision) const;

    bool is_zero() const;
    /// Copy `block` into this matrix with its top-left corner at (r, c).
    void set_block(int r, int c, const DVRMatrix& block);
    DVRMatrix block(int r, int c, int rows, int cols) const;
    static DVRMatrix hstack(const std::vector<DVRMatrix>& parts);
    static DVRMatrix vstack(const std::vector<DVRMatrix>& parts);

    friend bool operator==(const DVRMatrix& a, const DVRMatrix& b) noexcept {
        return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    DVRSpec spec_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<DVRElement> data_;
};

/// Pivot valuations of a Smith-style diagonalization over A / pi^N, sorted
/// ascending. There are min(rows, cols) pivots; AtLeast(N) marks a pivot that
/// vanishes at the working precision.
struct SmithResult {
    int rows = 0;
    int cols = 0;
    std::vector<Valuation> pivots;

    /// Number of pivots with exact valuation.
    int rank() const noexcept;
    int vanishing() const noexcept { return static_cast<int>(pivots.size()) - rank(); }
    /// Sum of the exact pivot valuations.
    int torsion_length() const noexcept;
};

/// Elimination with valuation-minimal pivots; sparse-aware, with the row
/// update loop parallelized by OpenMP for large matrices.
SmithResult smith(DVRMatrix m);
/// Plain dense serial elimination, kept as the testing reference.
SmithResult smith_reference(DVRMatrix m);

/// Row transform P (with inverse) such that the column span of P * M equals the
/// span of pi^{v_k} e_k over the exact pivots k < rank.
struct SmithTransform {
    SmithResult result;
    std::vector<Valuation> ordered_pivots;  // in elimination order
    DVRMatrix P;
    DVRMatrix P_inv;
};
SmithTransform smith_with_transform(const DVRMatrix& m);

/// Length of coker(M : A^cols -> A^rows).
int quotient_length(const DVRMatrix& m);

/// A^n / colspan(R) when every exact pivot is a unit: a projection onto the
/// free quotient (q x n) and a section (n x q) with proj * section = id.
struct FreeQuotient {
    DVRMatrix projection;
    DVRMatrix section;
    int rank = 0;
};
FreeQuotient free_quotient(const DVRMatrix& relations);

/// Cohomology of C^{i-1} --d_in--> C^i --d_out--> C^{i+1} at C^i.
struct DVRCohomology {
    int free_rank = 0;
    int torsion_length = 0;
    friend bool operator==(const DVRCohomology& a, const DVRCohomology& b) noexcept {
        return a.free_rank == b.free_rank && a.torsion_length == b.torsion_length;
    }
};
/// d_in may have zero columns and d_out zero rows for boundary terms.
DVRCohomology cohomology_at(const DVRMatrix& d_in, const DVRMatrix& d_out);

/// Z/2-graded complex E --D0--> F --D1--> E.
struct PeriodicComplex {
    DVRMatrix D0;  // F x E
    DVRMatrix D1;  // E x F
    void validate() const;
};
struct PeriodicDVRCohomology {
    DVRCohomology even;
    DVRCohomology odd;
    int precision = 0;
    friend bool operator==(const PeriodicDVRCohomology& a, const PeriodicDVRCohomology& b) noexcept {
        return a.even == b.even && a.odd == b.odd;
    }
};
PeriodicDVRCohomology periodic_cohomology(const PeriodicComplex& c);

/// Builds the complex at precisions N and 2N (capped) and requires agreement.
PeriodicDVRCohomology stable_periodic_cohomology(
    const std::function<PeriodicComplex(int precision)>& build, int precision);

}  // namespace ramify
