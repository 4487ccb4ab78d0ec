#pragma once

#include <string>

#include "ramify/conductors.hpp"
#include "ramify/eisenstein.hpp"
#include "ramify/multipoly.hpp"

namespace ramify {

/// f in A[x_0..x_n] with the origin of the special fiber on V(f).
class Hypersurface {
public:
    /// Raises InvalidArgument when v(f(0)) = 0.
    explicit Hypersurface(MultiPoly f);
    static Hypersurface parse(const std::string& text, const DVRSpec& spec);

    const MultiPoly& polynomial() const noexcept { return f_; }
    const DVRSpec& base() const noexcept { return f_.spec(); }
    /// Relative dimension n; there are n + 1 variables.
    int relative_dimension() const noexcept { return f_.nvars() - 1; }

private:
    MultiPoly f_;
};

struct MilnorCaps {
    int max_degree = 24;
    int max_precision = 32;
    /// Default caps lowered by RAMIFY_MAX_PRECISION when set.
    static MilnorCaps from_environment();
};

struct MilnorResult {
    int mu = 0;
    int degree_cutoff = 0;
    int precision = 0;
};

/// Length of A[x]/(f, df/dx_i) + (x)^M + pi^N.
int truncated_jacobian_length(const Hypersurface& h, int degree_cutoff, int precision);

/// Raises NotIsolated when the truncated length does not stabilize within the caps.
MilnorResult milnor_number(const Hypersurface& h, const MilnorCaps& caps = MilnorCaps::from_environment());

struct DeligneMilnorReport {
    int mu = 0;
    Rational dimtot = 0;
    bool equal = false;
    int degree_cutoff = 0;
    int precision = 0;
};

/// mu(E) against dimtot of the augmentation representation.
DeligneMilnorReport verify_deligne_milnor_n0(const GaloisData& G,
                                             const MilnorCaps& caps = MilnorCaps::from_environment());
DeligneMilnorReport verify_deligne_milnor_n0(const EisensteinExtension& ext,
                                             const MilnorCaps& caps = MilnorCaps::from_environment());

/// The hypersurface E(x0) = 0 of an Eisenstein polynomial.
Hypersurface eisenstein_hypersurface(const EisensteinExtension& ext);

}  // namespace ramify
