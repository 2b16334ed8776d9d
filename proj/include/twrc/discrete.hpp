/***************************************************************
 *  discrete.hpp
 *
 *  Finite-alphabet machinery for discrete-memoryless TWRCs:
 *  dense joint pmfs, a conditional mutual-information evaluator,
 *  the three-node achievable region at a fixed factorized input
 *  distribution, and exhaustive search over a quantized simplex
 *  grid of input distributions.
 *
 *  Channel tables load from plain text: a header of six alphabet
 *  sizes |X1| |X2| |Xr| |Y1| |Y2| |Yr|, then one line per input
 *  triple (x1, x2, xr) in lexicographic order (xr fastest) holding
 *  the output pmf over (y1, y2, yr), yr fastest. '#' starts a
 *  comment.
 ***************************************************************/

#ifndef TWRC_DISCRETE_HPP
#define TWRC_DISCRETE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twrc/geometry.hpp"
#include "twrc/schemes.hpp"

namespace twrc {

constexpr double kPmfSumTol = 1e-9;

/// Dense joint pmf over a tuple of finite variables, row-major with the
/// last variable fastest.
struct Pmf {
    std::vector<std::size_t> dims;
    std::vector<double> p;

    std::size_t cells() const {
        std::size_t n = 1;
        for (std::size_t d : dims) n *= d;
        return n;
    }
};

namespace detail {

inline void check_pmf(const Pmf& joint) {
    if (joint.dims.empty() || joint.p.size() != joint.cells())
        throw std::domain_error("pmf: table size does not match alphabet sizes");
    double sum = 0.0;
    for (double v : joint.p) {
        if (!(v >= 0.0) || v > 1.0 + kPmfSumTol)
            throw std::domain_error("pmf: entries must lie in [0,1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kPmfSumTol)
        throw std::domain_error("pmf: probabilities must sum to 1");
}

// Marginal table over the given (sorted) variable subset.
struct Marginal {
    std::vector<std::size_t> vars;
    std::vector<std::size_t> dims;
    std::vector<double> p;
};

inline Marginal marginalize(const Pmf& joint, std::vector<std::size_t> vars) {
    Marginal m;
    m.vars = std::move(vars);
    std::size_t cells = 1;
    for (std::size_t v : m.vars) {
        m.dims.push_back(joint.dims[v]);
        cells *= joint.dims[v];
    }
    m.p.assign(std::max<std::size_t>(cells, 1), 0.0);

    std::vector<std::size_t> stride(m.vars.size(), 1);
    for (std::size_t k = m.vars.size(); k-- > 1;) stride[k - 1] = stride[k] * m.dims[k];

    std::vector<std::size_t> idx(joint.dims.size(), 0);
    for (std::size_t flat = 0; flat < joint.p.size(); ++flat) {
        std::size_t key = 0;
        for (std::size_t k = 0; k < m.vars.size(); ++k) key += idx[m.vars[k]] * stride[k];
        m.p[key] += joint.p[flat];
        for (std::size_t v = joint.dims.size(); v-- > 0;) {
            if (++idx[v] < joint.dims[v]) break;
            idx[v] = 0;
        }
    }
    return m;
}

inline std::vector<std::size_t> sorted_union(const std::vector<std::size_t>& a,
                                             const std::vector<std::size_t>& b) {
    std::vector<std::size_t> u = a;
    u.insert(u.end(), b.begin(), b.end());
    std::sort(u.begin(), u.end());
    return u;
}

}  // namespace detail

/// Conditional mutual information I(A; B | C) in bits from a dense joint
/// pmf, with 0 log 0 = 0. Tiny negative rounding noise clamps to 0.
inline double mutual_information(const Pmf& joint, const std::vector<std::size_t>& group_a,
                                 const std::vector<std::size_t>& group_b,
                                 const std::vector<std::size_t>& cond = {}) {
    detail::check_pmf(joint);
    if (group_a.empty() || group_b.empty())
        throw std::invalid_argument("mutual_information: variable groups must be nonempty");
    {
        std::vector<std::size_t> all = detail::sorted_union(detail::sorted_union(group_a, group_b), cond);
        for (std::size_t v : all)
            if (v >= joint.dims.size())
                throw std::invalid_argument("mutual_information: variable index out of range");
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("mutual_information: variable groups must be disjoint");
    }

    const auto vars_ac = detail::sorted_union(group_a, cond);
    const auto vars_bc = detail::sorted_union(group_b, cond);
    const auto vars_abc = detail::sorted_union(detail::sorted_union(group_a, group_b), cond);
    std::vector<std::size_t> vars_c = cond;
    std::sort(vars_c.begin(), vars_c.end());

    const auto m_abc = detail::marginalize(joint, vars_abc);
    const auto m_ac = detail::marginalize(joint, vars_ac);
    const auto m_bc = detail::marginalize(joint, vars_bc);
    const auto m_c = detail::marginalize(joint, vars_c);

    // key strides of each sub-marginal in terms of the abc digits
    auto substrides = [&](const detail::Marginal& sub) {
        std::vector<std::size_t> s(vars_abc.size(), 0);
        std::size_t stride = 1;
        for (std::size_t k = sub.vars.size(); k-- > 0;) {
            const auto pos = std::lower_bound(vars_abc.begin(), vars_abc.end(), sub.vars[k]) -
                             vars_abc.begin();
            s[static_cast<std::size_t>(pos)] = stride;
            stride *= sub.dims[k];
        }
        return s;
    };
    const auto s_ac = substrides(m_ac);
    const auto s_bc = substrides(m_bc);
    const auto s_c = substrides(m_c);

    double mi = 0.0;
    std::vector<std::size_t> digit(vars_abc.size(), 0);
    for (std::size_t flat = 0; flat < m_abc.p.size(); ++flat) {
        const double pabc = m_abc.p[flat];
        if (pabc > 0.0) {
            std::size_t kac = 0, kbc = 0, kc = 0;
            for (std::size_t k = 0; k < digit.size(); ++k) {
                kac += digit[k] * s_ac[k];
                kbc += digit[k] * s_bc[k];
                kc += digit[k] * s_c[k];
            }
            const double pc = vars_c.empty() ? 1.0 : m_c.p[kc];
            mi += pabc * std::log2(pabc * pc / (m_ac.p[kac] * m_bc.p[kbc]));
        }
        for (std::size_t k = digit.size(); k-- > 0;) {
            if (++digit[k] < m_abc.dims[k]) break;
            digit[k] = 0;
        }
    }
    return std::max(mi, 0.0);
}

/// Discrete-memoryless TWRC: alphabet sizes and the dense transition law
/// p(y1, y2, yr | x1, x2, xr), inputs outer, yr fastest.
struct DmTwrc {
    std::size_t nx1 = 0, nx2 = 0, nxr = 0;
    std::size_t ny1 = 0, ny2 = 0, nyr = 0;
    std::vector<double> law;

    std::size_t inputs() const { return nx1 * nx2 * nxr; }
    std::size_t outputs() const { return ny1 * ny2 * nyr; }
};

inline void require_valid(const DmTwrc& dm) {
    for (std::size_t n : {dm.nx1, dm.nx2, dm.nxr, dm.ny1, dm.ny2, dm.nyr})
        if (n < 1) throw std::domain_error("channel: alphabet sizes must be at least 1");
    if (dm.law.size() != dm.inputs() * dm.outputs())
        throw std::domain_error("channel: law size does not match alphabet sizes");
    for (std::size_t in = 0; in < dm.inputs(); ++in) {
        double sum = 0.0;
        for (std::size_t out = 0; out < dm.outputs(); ++out) {
            const double v = dm.law[in * dm.outputs() + out];
            if (!(v >= 0.0) || v > 1.0 + kPmfSumTol)
                throw std::domain_error("channel: entries must lie in [0,1]");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kPmfSumTol)
            throw std::domain_error("channel: output pmf of input row " + std::to_string(in) +
                                    " does not sum to 1");
    }
}

/// Factorized input law p(u1,x1) p(u2,x2) p(xr) with auxiliary alphabets
/// U1, U2. Tables are row-major with the x symbol fastest.
struct InputDistribution {
    std::size_t nu1 = 1, nu2 = 1;
    std::vector<double> p_u1x1;
    std::vector<double> p_u2x2;
    std::vector<double> p_xr;
};

inline void require_valid(const InputDistribution& dist, const DmTwrc& dm) {
    auto check = [](const std::vector<double>& t, std::size_t want, const char* name) {
        if (t.size() != want)
            throw std::domain_error(std::string("input distribution: ") + name + " has wrong size");
        double sum = 0.0;
        for (double v : t) {
            if (!(v >= 0.0)) throw std::domain_error(std::string("input distribution: ") + name +
                                                     " has a negative entry");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kPmfSumTol)
            throw std::domain_error(std::string("input distribution: ") + name +
                                    " does not sum to 1");
    };
    if (dist.nu1 < 1 || dist.nu2 < 1)
        throw std::domain_error("input distribution: auxiliary alphabets must be at least 1");
    check(dist.p_u1x1, dist.nu1 * dm.nx1, "p(u1,x1)");
    check(dist.p_u2x2, dist.nu2 * dm.nx2, "p(u2,x2)");
    check(dist.p_xr, dm.nxr, "p(xr)");
}

// Variable order of the full joint pmf built for region evaluation.
enum : std::size_t { kU1 = 0, kX1 = 1, kU2 = 2, kX2 = 3, kXr = 4, kY1 = 5, kY2 = 6, kYr = 7 };

constexpr std::size_t kMaxJointCells = 1u << 24;

/// Full joint pmf over (U1, X1, U2, X2, Xr, Y1, Y2, Yr).
inline Pmf build_joint(const DmTwrc& dm, const InputDistribution& dist) {
    require_valid(dm);
    require_valid(dist, dm);
    Pmf joint;
    joint.dims = {dist.nu1, dm.nx1, dist.nu2, dm.nx2, dm.nxr, dm.ny1, dm.ny2, dm.nyr};
    if (joint.cells() > kMaxJointCells)
        throw resource_error("joint pmf would need " + std::to_string(joint.cells()) +
                             " cells (cap " + std::to_string(kMaxJointCells) + ")");
    joint.p.resize(joint.cells());

    std::size_t flat = 0;
    for (std::size_t u1 = 0; u1 < dist.nu1; ++u1)
        for (std::size_t x1 = 0; x1 < dm.nx1; ++x1)
            for (std::size_t u2 = 0; u2 < dist.nu2; ++u2)
                for (std::size_t x2 = 0; x2 < dm.nx2; ++x2)
                    for (std::size_t xr = 0; xr < dm.nxr; ++xr) {
                        const double pin = dist.p_u1x1[u1 * dm.nx1 + x1] *
                                           dist.p_u2x2[u2 * dm.nx2 + x2] * dist.p_xr[xr];
                        const std::size_t row = ((x1 * dm.nx2 + x2) * dm.nxr + xr) * dm.outputs();
                        for (std::size_t out = 0; out < dm.outputs(); ++out)
                            joint.p[flat++] = pin * dm.law[row + out];
                    }
    return joint;
}

/// Achievable pentagon at a fixed factorized input distribution: the relay
/// decodes the auxiliary layers, each user the rest.
inline RateConstraintSet partial_df_region(const DmTwrc& dm, const InputDistribution& dist) {
    const Pmf joint = build_joint(dm, dist);

    const double relay_u1 = mutual_information(joint, {kU1}, {kYr}, {kU2, kXr});
    const double relay_u2 = mutual_information(joint, {kU2}, {kYr}, {kU1, kXr});
    const double relay_mac = mutual_information(joint, {kU1, kU2}, {kYr}, {kXr});
    const double direct_1 = mutual_information(joint, {kX1}, {kY2}, {kU1, kX2, kXr});
    const double direct_2 = mutual_information(joint, {kX2}, {kY1}, {kU2, kX1, kXr});
    const double total_1 = mutual_information(joint, {kX1, kXr}, {kY2}, {kX2});
    const double total_2 = mutual_information(joint, {kX2, kXr}, {kY1}, {kX1});

    return detail::make_set(std::min(relay_u1 + direct_1, total_1),
                            std::min(relay_u2 + direct_2, total_2),
                            relay_mac + direct_1 + direct_2);
}

namespace detail {

constexpr std::size_t kCountSaturated = std::size_t{1} << 62;

// Number of compositions of k into m nonnegative parts: C(k + m - 1, m - 1),
// saturating instead of overflowing.
inline std::size_t composition_count(std::size_t k, std::size_t m) {
    long double c = 1.0L;
    for (std::size_t i = 1; i < m; ++i) {
        c *= static_cast<long double>(k + i) / static_cast<long double>(i);
        if (c > static_cast<long double>(kCountSaturated)) return kCountSaturated;
    }
    return static_cast<std::size_t>(c + 0.5L);
}

inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kCountSaturated / b) return kCountSaturated;
    return a * b;
}

// Calls fn for every pmf with entries j/k over m cells.
template <typename Fn>
inline void for_each_quantized_pmf(std::size_t k, std::size_t m, Fn&& fn) {
    std::vector<std::size_t> parts(m, 0);
    parts[0] = k;
    std::vector<double> pmf(m);
    for (;;) {
        for (std::size_t i = 0; i < m; ++i)
            pmf[i] = static_cast<double>(parts[i]) / static_cast<double>(k);
        fn(pmf);
        // next composition in colex order: move one unit right of the
        // first nonzero prefix cell, resetting the prefix
        std::size_t i = 0;
        while (i + 1 < m && parts[i] == 0) ++i;
        if (i + 1 >= m) break;
        const std::size_t head = parts[i];
        parts[i] = 0;
        parts[0] = head - 1;
        ++parts[i + 1];
    }
}

}  // namespace detail

struct SearchOptions {
    std::size_t u1_size = 2;
    std::size_t u2_size = 2;
    std::size_t max_enumerations = 2'000'000;
};

/// Projected number of input distributions visited by exhaustive_search.
inline std::size_t search_size(const DmTwrc& dm, std::size_t quantization_k,
                               const SearchOptions& opt = {}) {
    const std::size_t c1 = detail::composition_count(quantization_k, opt.u1_size * dm.nx1);
    const std::size_t c2 = detail::composition_count(quantization_k, opt.u2_size * dm.nx2);
    const std::size_t cr = detail::composition_count(quantization_k, dm.nxr);
    return detail::saturating_mul(detail::saturating_mul(c1, c2), cr);
}

/// Union of partial_df_region pentagons over every factorized input
/// distribution on the step-1/k simplex grid. Exceeding the enumeration
/// cap raises a resource error carrying the size estimate.
inline RateRegion exhaustive_search(const DmTwrc& dm, std::size_t quantization_k,
                                    const SearchOptions& opt = {}) {
    require_valid(dm);
    if (quantization_k < 1)
        throw std::invalid_argument("exhaustive_search: quantization step must be 1/k with k >= 1");
    const std::size_t est = search_size(dm, quantization_k, opt);
    if (est > opt.max_enumerations)
        throw resource_error("exhaustive search would visit about " + std::to_string(est) +
                             " distributions (cap " + std::to_string(opt.max_enumerations) + ")");

    RateRegion region;
    region.pentagons.reserve(est);
    InputDistribution dist;
    dist.nu1 = opt.u1_size;
    dist.nu2 = opt.u2_size;
    detail::for_each_quantized_pmf(quantization_k, opt.u1_size * dm.nx1, [&](const std::vector<double>& p1) {
        dist.p_u1x1 = p1;
        detail::for_each_quantized_pmf(quantization_k, opt.u2_size * dm.nx2, [&](const std::vector<double>& p2) {
            dist.p_u2x2 = p2;
            detail::for_each_quantized_pmf(quantization_k, dm.nxr, [&](const std::vector<double>& pr) {
                dist.p_xr = pr;
                region.pentagons.push_back(partial_df_region(dm, dist));
            });
        });
    });
    return region;
}

/// Parses a channel table; throws std::invalid_argument with the offending
/// line number on malformed input.
inline DmTwrc load_dm_twrc(std::istream& in) {
    DmTwrc dm;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> row;
    bool have_header = false;
    std::size_t rows_read = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        row.clear();
        double v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) {
            std::string tok;
            ls.clear();
            ls >> tok;
            if (!tok.empty())
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": unexpected token '" + tok + "'");
        }
        if (row.empty()) continue;  // blank or comment-only line

        if (!have_header) {
            if (row.size() != 6)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": expected six alphabet sizes");
            std::size_t sizes[6];
            for (int i = 0; i < 6; ++i) {
                if (row[i] < 1.0 || row[i] != std::floor(row[i]))
                    throw std::invalid_argument("line " + std::to_string(line_no) +
                                                ": alphabet sizes must be positive integers");
                sizes[i] = static_cast<std::size_t>(row[i]);
            }
            dm.nx1 = sizes[0];
            dm.nx2 = sizes[1];
            dm.nxr = sizes[2];
            dm.ny1 = sizes[3];
            dm.ny2 = sizes[4];
            dm.nyr = sizes[5];
            dm.law.reserve(dm.inputs() * dm.outputs());
            have_header = true;
            continue;
        }
        if (row.size() != dm.outputs())
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(dm.outputs()) + " probabilities, got " +
                                        std::to_string(row.size()));
        if (rows_read >= dm.inputs())
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": more rows than input triples");
        dm.law.insert(dm.law.end(), row.begin(), row.end());
        ++rows_read;
    }
    if (!have_header) throw std::invalid_argument("line 1: missing header of six alphabet sizes");
    if (rows_read != dm.inputs())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(dm.inputs()) + " pmf rows, got " +
                                    std::to_string(rows_read));
    try {
        require_valid(dm);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
    return dm;
}

inline DmTwrc load_dm_twrc_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open channel file '" + path + "'");
    return load_dm_twrc(in);
}

}  // namespace twrc

#endif  // TWRC_DISCRETE_HPP
