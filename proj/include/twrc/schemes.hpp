/***************************************************************
 *  schemes.hpp
 *
 *  Closed-form rate-constraint evaluators for the Gaussian TWRC:
 *  direct transmission, decode-forward, partial decode-forward,
 *  compute-forward, the combined decode/compute-forward scheme,
 *  the strict-improvement predicate, and a cut-set outer bound.
 *
 *  Each evaluator returns one pentagon-shaped constraint set
 *  { R1 <= r1_max, R2 <= r2_max, R1+R2 <= sum_max } at fixed
 *  split parameters; unions over parameters live in sweep.hpp.
 ***************************************************************/

#ifndef TWRC_SCHEMES_HPP
#define TWRC_SCHEMES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "twrc/core.hpp"

namespace twrc {

/// One pentagon-shaped rate constraint set. sum_max == nullopt means the
/// sum constraint is absent (direct transmission, pure compute-forward) or
/// implied by the individual bounds.
struct RateConstraintSet {
    double r1_max = 0.0;
    double r2_max = 0.0;
    std::optional<double> sum_max;  // nullopt = unbounded

    bool sum_bounded() const { return sum_max.has_value(); }
};

/// The nine combined-scheme bounds. i1..i3 are the relay MAC constraints on
/// the Gaussian layers, i4/i5 the lattice computation constraints (already
/// clamped to >= 0), i6..i9 the downlink constraints at the users.
struct IValues {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double i4 = 0.0;
    double i5 = 0.0;
    double i6 = 0.0;
    double i7 = 0.0;
    double i8 = 0.0;
    double i9 = 0.0;
};

namespace detail {

// Clamps rounding noise on every bound.
inline RateConstraintSet make_set(double r1, double r2, std::optional<double> sum) {
    RateConstraintSet s;
    s.r1_max = std::max(r1, 0.0);
    s.r2_max = std::max(r2, 0.0);
    if (sum) s.sum_max = std::max(*sum, 0.0);
    return s;
}

// 0.5*log2 of a possibly sub-unit argument, clamped at zero. Used for the
// lattice bounds where the argument can drop below 1 (or to 0 when the
// lattice layer carries no power).
inline double half_log2_clamped(double x) {
    if (x <= 1.0) return 0.0;
    return 0.5 * std::log2(x);
}

}  // namespace detail

/// No relay: each user decodes the other over the direct link alone.
inline RateConstraintSet direct_transmission(const GaussianTwrc& ch) {
    require_valid(ch);
    return detail::make_set(capacity(ch.p1 / ch.n2), capacity(ch.p2 / ch.n1), std::nullopt);
}

/// Partial decode-forward at fixed splits. The relay decodes the
/// alpha/beta-weighted layers only; gamma is unused by this scheme.
inline RateConstraintSet partial_decode_forward(const GaussianTwrc& ch, const SplitParams& sp) {
    require_valid(ch);
    require_valid(sp);
    const double a = sp.alpha, b = sp.beta;
    const double ac = 1.0 - a, bc = 1.0 - b;      // complements
    const double relay_den = ac * ch.p1 + bc * ch.p2 + ch.nr;

    const double r1 = std::min(capacity(a * ch.p1 / relay_den) + capacity(ac * ch.p1 / ch.n2),
                               capacity((ch.p1 + ch.pr) / ch.n2));
    const double r2 = std::min(capacity(b * ch.p2 / relay_den) + capacity(bc * ch.p2 / ch.n1),
                               capacity((ch.p2 + ch.pr) / ch.n1));
    const double sum = capacity((a * ch.p1 + b * ch.p2) / relay_den) +
                       capacity(ac * ch.p1 / ch.n2) + capacity(bc * ch.p2 / ch.n1);
    return detail::make_set(r1, r2, sum);
}

/// Decode-forward: the relay decodes both messages in full
/// (partial decode-forward at alpha = beta = 1).
inline RateConstraintSet decode_forward(const GaussianTwrc& ch) {
    require_valid(ch);
    const double r1 = std::min(capacity(ch.p1 / ch.nr), capacity((ch.p1 + ch.pr) / ch.n2));
    const double r2 = std::min(capacity(ch.p2 / ch.nr), capacity((ch.p2 + ch.pr) / ch.n1));
    const double sum = capacity((ch.p1 + ch.p2) / ch.nr);
    return detail::make_set(r1, r2, sum);
}

/// The nine bounds of the combined decode/compute-forward scheme.
/// When both lattice layers carry zero power the power-ratio term inside
/// i4/i5 is defined as 0 (no lattice codeword exists).
inline IValues combined_i_values(const GaussianTwrc& ch, const SplitParams& sp) {
    require_valid(ch);
    require_valid(sp);
    const double a = sp.alpha, b = sp.beta, g = sp.gamma;
    const double ac = 1.0 - a, bc = 1.0 - b, gc = 1.0 - g;
    const double q1 = ac * ch.p1;   // user-1 lattice-layer power
    const double q2 = bc * ch.p2;   // user-2 lattice-layer power
    const double relay_den = q1 + q2 + ch.nr;

    IValues v;
    v.i1 = capacity(a * ch.p1 / relay_den);
    v.i2 = capacity(b * ch.p2 / relay_den);
    v.i3 = capacity((a * ch.p1 + b * ch.p2) / relay_den);
    const double ratio1 = (q1 + q2 > 0.0) ? q1 / (q1 + q2) : 0.0;
    const double ratio2 = (q1 + q2 > 0.0) ? q2 / (q1 + q2) : 0.0;
    v.i4 = detail::half_log2_clamped(ratio1 + q1 / ch.nr);
    v.i5 = detail::half_log2_clamped(ratio2 + q2 / ch.nr);
    v.i6 = capacity((a * ch.p1 + g * ch.pr) / (ac * ch.p1 + gc * ch.pr + ch.n2));
    v.i7 = capacity((b * ch.p2 + g * ch.pr) / (bc * ch.p2 + gc * ch.pr + ch.n1));
    v.i8 = capacity(gc * ch.pr / (ch.p1 + ch.n2)) + capacity(q1 / ch.n2);
    v.i9 = capacity(gc * ch.pr / (ch.p2 + ch.n1)) + capacity(q2 / ch.n1);
    return v;
}

/// Pentagon obtained by eliminating the per-layer rates from the nine
/// combined-scheme inequalities. When both Gaussian layers carry zero rate
/// the relay MAC constraint binds nothing and the sum bound is dropped.
inline RateConstraintSet combined_pentagon(const IValues& v) {
    const double g1 = std::min(v.i1, v.i6);
    const double g2 = std::min(v.i2, v.i7);
    const double l1 = std::min(v.i4, v.i8);
    const double l2 = std::min(v.i5, v.i9);
    std::optional<double> sum;
    if (g1 > 0.0 || g2 > 0.0) sum = v.i3 + l1 + l2;
    return detail::make_set(g1 + l1, g2 + l2, sum);
}

/// Combined decode-forward and compute-forward at fixed splits.
inline RateConstraintSet combined_df_cf(const GaussianTwrc& ch, const SplitParams& sp) {
    return combined_pentagon(combined_i_values(ch, sp));
}

/// Pure compute-forward baseline: the combined scheme with all power on
/// the lattice layers (alpha = beta = gamma = 0). The relay MAC constraint
/// is vacuous, so the sum bound is unbounded.
inline RateConstraintSet compute_forward(const GaussianTwrc& ch) {
    return combined_df_cf(ch, SplitParams{0.0, 0.0, 0.0});
}

/// Numeric witnesses for the strict-improvement condition of partial
/// decode-forward over decode-forward.
struct ImprovementWitness {
    double nr = 0.0;
    double min_n1_n2 = 0.0;
    bool noise_disjunct = false;    // nr > min(n1, n2)
    double direct_sum = 0.0;        // C(p1/n2) + C(p2/n1)
    double relay_mac_sum = 0.0;     // C((p1+p2)/nr)
    bool rate_disjunct = false;     // direct_sum > relay_mac_sum
    bool improved = false;
};

inline ImprovementWitness pdf_improvement_witness(const GaussianTwrc& ch) {
    require_valid(ch);
    ImprovementWitness w;
    w.nr = ch.nr;
    w.min_n1_n2 = std::min(ch.n1, ch.n2);
    w.noise_disjunct = w.nr > w.min_n1_n2;
    w.direct_sum = capacity(ch.p1 / ch.n2) + capacity(ch.p2 / ch.n1);
    w.relay_mac_sum = capacity((ch.p1 + ch.p2) / ch.nr);
    w.rate_disjunct = w.direct_sum > w.relay_mac_sum;
    w.improved = w.noise_disjunct || w.rate_disjunct;
    return w;
}

/// True iff partial decode-forward strictly improves on decode-forward:
/// nr > min(n1, n2), or the direct links already beat the relay MAC sum.
inline bool pdf_improvement_condition(const GaussianTwrc& ch) {
    return pdf_improvement_witness(ch).improved;
}

/// Cut-set outer bound over jointly Gaussian inputs with independent users
/// and a correlated relay input xr = a*x1 + b*x2 + w, var(w) >= 0. For each
/// feasible (a, b) on the grid the two cuts per direction are evaluated via
/// Gaussian conditional variances; the coordinate-wise maxima over the grid
/// give an outer rectangle (valid, possibly loose).
inline RateConstraintSet cutset_bound(const GaussianTwrc& ch, std::size_t corr_grid) {
    require_valid(ch);
    if (corr_grid < 2)
        throw std::invalid_argument("cutset_bound: need at least 2 grid points per correlation axis");

    const double a_max = ch.p1 > 0.0 ? std::sqrt(ch.pr / ch.p1) : 0.0;
    const double b_max = ch.p2 > 0.0 ? std::sqrt(ch.pr / ch.p2) : 0.0;

    double best_r1 = 0.0, best_r2 = 0.0;
    for (std::size_t i = 0; i < corr_grid; ++i) {
        const double a = a_max * static_cast<double>(i) / static_cast<double>(corr_grid - 1);
        for (std::size_t j = 0; j < corr_grid; ++j) {
            const double b = b_max * static_cast<double>(j) / static_cast<double>(corr_grid - 1);
            double pw = ch.pr - a * a * ch.p1 - b * b * ch.p2;  // innovation power
            if (pw < 0.0) {
                if (pw < -1e-9 * (1.0 + ch.pr)) continue;  // infeasible split
                pw = 0.0;                                  // boundary, rounded
            }
            // residual variance of x_i after observing (x_other, xr)
            const double s1 = a * a * ch.p1 + pw;
            const double var1 = s1 > 0.0 ? ch.p1 * pw / s1 : ch.p1;
            const double s2 = b * b * ch.p2 + pw;
            const double var2 = s2 > 0.0 ? ch.p2 * pw / s2 : ch.p2;

            // cut around user 1: two looks at the residual; cut around user 2: coherent downlink
            const double r1 = std::min(capacity(var1 / ch.n2 + var1 / ch.nr),
                                       capacity(((1.0 + a) * (1.0 + a) * ch.p1 + pw) / ch.n2));
            const double r2 = std::min(capacity(var2 / ch.n1 + var2 / ch.nr),
                                       capacity(((1.0 + b) * (1.0 + b) * ch.p2 + pw) / ch.n1));
            best_r1 = std::max(best_r1, r1);
            best_r2 = std::max(best_r2, r2);
        }
    }
    return detail::make_set(best_r1, best_r2, std::nullopt);
}

}  // namespace twrc

#endif  // TWRC_SCHEMES_HPP
