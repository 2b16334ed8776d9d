/***************************************************************
 *  core.hpp
 *
 *  Channel model types and the Gaussian capacity function for
 *  the full-duplex two-way relay channel (TWRC).
 *
 *  Conventions:
 *      - powers and noise variances are linear (not dB)
 *      - rates are in bits per channel use (log base 2)
 ***************************************************************/

#ifndef TWRC_CORE_HPP
#define TWRC_CORE_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace twrc {

/// Thrown when a request would exceed a configured size cap (enumeration
/// counts, joint-table sizes). Distinct from argument errors so callers can
/// map it to a dedicated exit code.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// AWGN two-way relay channel: user powers p1, p2, relay power pr,
/// noise variances n1 (at user 1), n2 (at user 2), nr (at the relay).
struct GaussianTwrc {
    double p1 = 0.0;
    double p2 = 0.0;
    double pr = 0.0;
    double n1 = 1.0;
    double n2 = 1.0;
    double nr = 1.0;
};

/// Power-split fractions. alpha: share of user-1 power on the
/// relay-decoded layer; beta: same for user 2; gamma: share of relay
/// power on its Gaussian-part codeword. Complements are derived,
/// never stored.
struct SplitParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 0.0;
};

/// Gaussian capacity, bits per channel use: 0.5 * log2(1 + snr).
inline double capacity(double snr) {
    if (!(snr >= 0.0) || !std::isfinite(snr))
        throw std::domain_error("capacity: snr must be finite and nonnegative");
    return 0.5 * std::log2(1.0 + snr);
}

/// First violated invariant by name, or nullopt when the channel is valid.
inline std::optional<std::string> validate(const GaussianTwrc& ch) {
    for (double p : {ch.p1, ch.p2, ch.pr}) {
        if (!std::isfinite(p)) return "power must be finite";
        if (p < 0.0) return "power must be nonnegative";
    }
    for (double n : {ch.n1, ch.n2, ch.nr}) {
        if (!std::isfinite(n)) return "noise variance must be finite";
        if (n <= 0.0) return "noise variance must be positive";
    }
    return std::nullopt;
}

inline std::optional<std::string> validate(const SplitParams& sp) {
    for (double f : {sp.alpha, sp.beta, sp.gamma}) {
        if (!std::isfinite(f)) return "split fraction must be finite";
        if (f < 0.0 || f > 1.0) return "split fraction must be in [0,1]";
    }
    return std::nullopt;
}

inline void require_valid(const GaussianTwrc& ch) {
    if (auto err = validate(ch)) throw std::domain_error("channel: " + *err);
}

inline void require_valid(const SplitParams& sp) {
    if (auto err = validate(sp)) throw std::domain_error("split: " + *err);
}

/// dB to linear power/variance.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace twrc

#endif  // TWRC_CORE_HPP
