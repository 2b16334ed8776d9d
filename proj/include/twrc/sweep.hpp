/***************************************************************
 *  sweep.hpp
 *
 *  Parameter sweeps: the union of a scheme's constraint sets
 *  over a grid of split parameters, as a RateRegion.
 ***************************************************************/

#ifndef TWRC_SWEEP_HPP
#define TWRC_SWEEP_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "twrc/geometry.hpp"
#include "twrc/schemes.hpp"

namespace twrc {

enum class Scheme { direct, df, partial_df, cf, combined, cutset };

inline Scheme scheme_from_string(const std::string& id) {
    if (id == "direct") return Scheme::direct;
    if (id == "df") return Scheme::df;
    if (id == "partial-df") return Scheme::partial_df;
    if (id == "cf") return Scheme::cf;
    if (id == "combined") return Scheme::combined;
    if (id == "cutset") return Scheme::cutset;
    throw std::invalid_argument("unknown scheme '" + id + "'");
}

inline std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::direct: return "direct";
        case Scheme::df: return "df";
        case Scheme::partial_df: return "partial-df";
        case Scheme::cf: return "cf";
        case Scheme::combined: return "combined";
        case Scheme::cutset: return "cutset";
    }
    throw std::invalid_argument("unknown scheme id");
}

/// Number of free split parameters of a scheme.
inline std::size_t free_parameters(Scheme s) {
    switch (s) {
        case Scheme::partial_df: return 2;   // alpha, beta
        case Scheme::combined: return 3;     // alpha, beta, gamma
        default: return 0;
    }
}

/// Union of the scheme's constraint sets over a uniform grid with `grid`
/// points per free parameter (endpoints included). Parameterless schemes
/// return their single set; `grid` doubles as the correlation-grid
/// resolution for the cut-set bound. Deterministic for a fixed grid.
inline RateRegion region_sweep(const GaussianTwrc& ch, Scheme scheme, std::size_t grid) {
    require_valid(ch);
    if (free_parameters(scheme) > 0 && grid < 2)
        throw std::invalid_argument("region_sweep: need at least 2 grid points per parameter");

    RateRegion region;
    auto frac = [&](std::size_t i) {
        return static_cast<double>(i) / static_cast<double>(grid - 1);
    };

    switch (scheme) {
        case Scheme::direct:
            region.pentagons.push_back(direct_transmission(ch));
            break;
        case Scheme::df:
            region.pentagons.push_back(decode_forward(ch));
            break;
        case Scheme::cf:
            region.pentagons.push_back(compute_forward(ch));
            break;
        case Scheme::cutset:
            region.pentagons.push_back(cutset_bound(ch, grid < 2 ? 41 : grid));
            break;
        case Scheme::partial_df:
            region.pentagons.reserve(grid * grid);
            region.params.reserve(grid * grid);
            for (std::size_t i = 0; i < grid; ++i) {
                for (std::size_t j = 0; j < grid; ++j) {
                    SplitParams sp{frac(i), frac(j), 0.0};
                    region.pentagons.push_back(partial_decode_forward(ch, sp));
                    region.params.push_back(sp);
                }
            }
            break;
        case Scheme::combined:
            region.pentagons.reserve(grid * grid * grid);
            region.params.reserve(grid * grid * grid);
            for (std::size_t i = 0; i < grid; ++i) {
                for (std::size_t j = 0; j < grid; ++j) {
                    for (std::size_t k = 0; k < grid; ++k) {
                        SplitParams sp{frac(i), frac(j), frac(k)};
                        region.pentagons.push_back(combined_df_cf(ch, sp));
                        region.params.push_back(sp);
                    }
                }
            }
            break;
    }
    return region;
}

}  // namespace twrc

#endif  // TWRC_SWEEP_HPP
