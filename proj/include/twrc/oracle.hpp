/***************************************************************
 *  oracle.hpp
 *
 *  Feasibility checkers for the raw (pre-elimination) inequality
 *  systems behind the pentagon regions. After substituting the
 *  split sums R1 = R10+R11 and R2 = R20+R22, each system reduces
 *  to interval bounds on (R10, R20) plus one coupling constraint,
 *  so feasibility is an exact analytic test with no LP solver.
 *
 *  These checkers are independent test oracles for the closed-form
 *  pentagons: a rate pair is feasible for the raw system iff it
 *  lies in the eliminated region.
 ***************************************************************/

#ifndef TWRC_ORACLE_HPP
#define TWRC_ORACLE_HPP

#include <algorithm>

#include "twrc/geometry.hpp"
#include "twrc/schemes.hpp"

namespace twrc {

/// The seven mutual-information bounds of the partial decode-forward
/// system: relay MAC bounds on the decoded layers, and per-user direct
/// plus total decoding bounds.
struct PartialDfBounds {
    double b_u1 = 0.0;        // R10 at the relay
    double b_u2 = 0.0;        // R20 at the relay
    double b_u12 = 0.0;       // R10 + R20 at the relay
    double b_x1_given = 0.0;  // R11 at user 2, layers known
    double b_x1_total = 0.0;  // R10 + R11 at user 2
    double b_x2_given = 0.0;  // R22 at user 1, layers known
    double b_x2_total = 0.0;  // R20 + R22 at user 1
};

/// The raw combined-scheme system is the nine bounds themselves.
struct CombinedBounds {
    IValues i;
};

/// Exact feasibility of the partial decode-forward system at (r1, r2):
/// do nonnegative layer rates R10+R11 = r1, R20+R22 = r2 exist satisfying
/// all seven bounds? Closed comparisons throughout.
inline bool partial_df_raw_feasible(const PartialDfBounds& b, const RatePoint& p) {
    if (p.r1 < 0.0 || p.r2 < 0.0) return false;
    if (p.r1 > b.b_x1_total || p.r2 > b.b_x2_total) return false;
    const double lo1 = std::max(0.0, p.r1 - b.b_x1_given);
    const double hi1 = std::min(b.b_u1, p.r1);
    const double lo2 = std::max(0.0, p.r2 - b.b_x2_given);
    const double hi2 = std::min(b.b_u2, p.r2);
    if (lo1 > hi1 || lo2 > hi2) return false;
    return lo1 + lo2 <= b.b_u12;
}

/// Exact feasibility of the combined-scheme system at (r1, r2): the
/// Gaussian-layer rates must fit the relay MAC and downlink bounds, the
/// lattice-layer rates the computation and downlink bounds.
inline bool combined_raw_feasible(const CombinedBounds& b, const RatePoint& p) {
    if (p.r1 < 0.0 || p.r2 < 0.0) return false;
    const double cap10 = std::min(b.i.i1, b.i.i6);
    const double cap20 = std::min(b.i.i2, b.i.i7);
    const double cap11 = std::min(b.i.i4, b.i.i8);
    const double cap22 = std::min(b.i.i5, b.i.i9);
    const double lo1 = std::max(0.0, p.r1 - cap11);
    const double hi1 = std::min(cap10, p.r1);
    const double lo2 = std::max(0.0, p.r2 - cap22);
    const double hi2 = std::min(cap20, p.r2);
    if (lo1 > hi1 || lo2 > hi2) return false;
    return lo1 + lo2 <= b.i.i3;
}

/// Pentagon stated for the partial decode-forward system after eliminating
/// the layer rates (the closed-form counterpart of partial_df_raw_feasible).
inline RateConstraintSet partial_df_pentagon(const PartialDfBounds& b) {
    return detail::make_set(std::min(b.b_u1 + b.b_x1_given, b.b_x1_total),
                            std::min(b.b_u2 + b.b_x2_given, b.b_x2_total),
                            b.b_u12 + b.b_x1_given + b.b_x2_given);
}

}  // namespace twrc

#endif  // TWRC_ORACLE_HPP
