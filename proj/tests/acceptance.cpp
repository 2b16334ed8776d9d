/***************************************************************
 *  acceptance.cpp
 *
 *  End-to-end acceptance suite. Each criterion prints one
 *  PASS/FAIL line; the process exits nonzero if any fails.
 ***************************************************************/

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "twrc/discrete.hpp"
#include "twrc/geometry.hpp"
#include "twrc/oracle.hpp"
#include "twrc/schemes.hpp"
#include "twrc/sweep.hpp"
#include "test_util.hpp"

using namespace twrc;
using twrc_test::random_channel;
using twrc_test::random_pmf;
using twrc_test::random_split;
using twrc_test::uniform;

namespace {

const GaussianTwrc kAsymPdf{20, 20, 20, 2, 30, 6};
const GaussianTwrc kSymPdf{20, 20, 20, 12, 12, 6};
const GaussianTwrc kSymCombined{20, 20, 20, 8, 8, 6};
const GaussianTwrc kAsymCombined{50, 40, 20, 20, 40, 15};

int g_failures = 0;

void report(int id, bool pass, const std::string& name, const std::string& detail) {
    std::printf("%s  %2d  %-34s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt_pair(double a, double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.3f, %.3f)", a, b);
    return buf;
}

// best (r1_max, r2_max) over the gamma grid at fixed alpha/beta, by sum rate
RateConstraintSet best_over_gamma(const GaussianTwrc& ch, double alpha, double beta,
                                  std::size_t grid) {
    RateConstraintSet best;
    double best_sum = -1.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double g = static_cast<double>(i) / static_cast<double>(grid - 1);
        const auto set = combined_df_cf(ch, {alpha, beta, g});
        if (set.r1_max + set.r2_max > best_sum) {
            best_sum = set.r1_max + set.r2_max;
            best = set;
        }
    }
    return best;
}

void criterion1() {
    const auto set = partial_decode_forward(kAsymPdf, {1.0, 0.5, 0.0});
    const double corner_r2 = std::min(set.r2_max, *set.sum_max - set.r1_max);
    const bool pass = std::abs(set.r1_max - 0.58) <= 0.01 && std::abs(corner_r2 - 1.47) <= 0.01;
    report(1, pass, "partial-DF quoted rate point",
           "corner " + fmt_pair(set.r1_max, corner_r2) + " vs (0.58, 1.47) tol 0.01");
}

void criterion2() {
    const auto set = partial_decode_forward(kAsymPdf, {1.0, 0.5, 0.0});
    const RatePoint quoted{set.r1_max, std::min(set.r2_max, *set.sum_max - set.r1_max)};

    auto pts = union_boundary({decode_forward(kAsymPdf)}, 257);
    const auto direct_pts = union_boundary({direct_transmission(kAsymPdf)}, 257);
    pts.insert(pts.end(), direct_pts.begin(), direct_pts.end());
    const auto hull = convex_hull(pts);
    const double margin = quoted.r2 - polyline_value_at(hull, quoted.r1);
    char buf[96];
    std::snprintf(buf, sizeof buf, "point above the DF/direct hull by %.3f bits (> 0.01)", margin);
    report(2, margin > 0.01, "outside the time-sharing hull", buf);
}

void criterion3() {
    const auto best = best_over_gamma(kAsymCombined, 0.5, 0.0, 101);
    const bool pass = std::abs(best.r1_max - 0.678) <= 0.01 && std::abs(best.r2_max - 0.859) <= 0.01;
    report(3, pass, "combined quoted point (asymmetric)",
           fmt_pair(best.r1_max, best.r2_max) + " vs (0.678, 0.859) tol 0.01");
}

void criterion4() {
    const auto best = best_over_gamma(kSymCombined, 0.48, 0.0, 101);
    const bool pass = std::abs(best.r1_max - 0.69) <= 0.02 && std::abs(best.r2_max - 1.01) <= 0.02;
    report(4, pass, "combined quoted point (symmetric)",
           fmt_pair(best.r1_max, best.r2_max) + " vs (0.69, 1.01) tol 0.02");
}

void criterion5() {
    const bool verdict_true = pdf_improvement_condition(kAsymPdf);
    const bool verdict_false = pdf_improvement_condition(kSymPdf);

    auto pdf = region_sweep(kAsymPdf, Scheme::partial_df, 101);
    auto df = region_sweep(kAsymPdf, Scheme::df, 101);
    compute_boundary(pdf, 257);
    compute_boundary(df, 257);
    const double gain = max_boundary_gain(pdf, df);

    char buf[112];
    std::snprintf(buf, sizeof buf,
                  "verdicts %s/%s, swept gain over DF %.3f bits (> 0.05)",
                  verdict_true ? "true" : "false", verdict_false ? "true" : "false", gain);
    report(5, verdict_true && !verdict_false && gain > 0.05, "improvement condition", buf);
}

void criterion6() {
    std::mt19937 rng(600001);
    long checked = 0, disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        CombinedBounds b;
        b.i.i1 = uniform(rng, 0.0, 2.0);
        b.i.i2 = uniform(rng, 0.0, 2.0);
        b.i.i3 = uniform(rng, std::max(b.i.i1, b.i.i2), b.i.i1 + b.i.i2);
        b.i.i4 = uniform(rng, 0.0, 2.0);
        b.i.i5 = uniform(rng, 0.0, 2.0);
        b.i.i6 = uniform(rng, 0.0, 2.0);
        b.i.i7 = uniform(rng, 0.0, 2.0);
        b.i.i8 = uniform(rng, 0.0, 2.0);
        b.i.i9 = uniform(rng, 0.0, 2.0);
        const auto pen = combined_pentagon(b.i);
        for (int k = 0; k < 100; ++k) {
            const RatePoint p{uniform(rng, 0.0, pen.r1_max * 1.25 + 0.01),
                              uniform(rng, 0.0, pen.r2_max * 1.25 + 0.01)};
            ++checked;
            if (combined_raw_feasible(b, p) != contains(pen, p)) ++disagreements;
        }

        PartialDfBounds b1;
        b1.b_u1 = uniform(rng, 0.0, 2.0);
        b1.b_u2 = uniform(rng, 0.0, 2.0);
        b1.b_u12 = uniform(rng, std::max(b1.b_u1, b1.b_u2), b1.b_u1 + b1.b_u2);
        b1.b_x1_given = uniform(rng, 0.0, 2.0);
        b1.b_x2_given = uniform(rng, 0.0, 2.0);
        b1.b_x1_total = uniform(rng, 0.0, 3.0);
        b1.b_x2_total = uniform(rng, 0.0, 3.0);
        const auto pen1 = partial_df_pentagon(b1);
        for (int k = 0; k < 100; ++k) {
            const RatePoint p{uniform(rng, 0.0, pen1.r1_max * 1.25 + 0.01),
                              uniform(rng, 0.0, pen1.r2_max * 1.25 + 0.01)};
            ++checked;
            if (partial_df_raw_feasible(b1, p) != contains(pen1, p)) ++disagreements;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld membership queries, %ld disagreements", checked,
                  disagreements);
    report(6, disagreements == 0 && checked == 200000, "raw systems match the pentagons", buf);
}

void criterion7() {
    std::mt19937 rng(700001);
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
        const auto ch = random_channel(rng);
        const auto pdf = partial_decode_forward(ch, {1.0, 1.0, 0.0});
        const auto df = decode_forward(ch);
        if (pdf.r1_max != df.r1_max || pdf.r2_max != df.r2_max ||
            pdf.sum_max.has_value() != df.sum_max.has_value() ||
            (pdf.sum_max && *pdf.sum_max != *df.sum_max))
            ++bad;
        const auto comb = combined_df_cf(ch, {0.0, 0.0, 0.0});
        const auto cf = compute_forward(ch);
        if (comb.r1_max != cf.r1_max || comb.r2_max != cf.r2_max ||
            comb.sum_max.has_value() != cf.sum_max.has_value())
            ++bad;
    }
    report(7, bad == 0, "special-case reductions",
           "100 random channels, " + std::to_string(bad) + " field mismatches");
}

void criterion8() {
    std::mt19937 rng(800001);
    long points = 0, outside = 0;
    for (int t = 0; t < 50; ++t) {
        const auto ch = random_channel(rng);
        const auto cut = cutset_bound(ch, 21);
        std::vector<RateRegion> regions;
        regions.push_back(region_sweep(ch, Scheme::direct, 2));
        regions.push_back(region_sweep(ch, Scheme::df, 2));
        regions.push_back(region_sweep(ch, Scheme::cf, 2));
        regions.push_back(region_sweep(ch, Scheme::partial_df, 9));
        regions.push_back(region_sweep(ch, Scheme::combined, 5));
        for (const auto& region : regions) {
            for (const auto& p : union_boundary(region.pentagons, 33)) {
                ++points;
                if (p.r1 > cut.r1_max + 1e-9 || p.r2 > cut.r2_max + 1e-9) ++outside;
            }
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld boundary points, %ld outside the cut-set rectangle",
                  points, outside);
    report(8, outside == 0, "outer-bound dominance", buf);
}

void criterion9() {
    DmTwrc dm;
    dm.nx1 = dm.nx2 = dm.nxr = 2;
    dm.ny1 = dm.ny2 = dm.nyr = 4;
    dm.law.assign(dm.inputs() * dm.outputs(), 0.0);
    for (std::size_t x1 = 0; x1 < 2; ++x1)
        for (std::size_t x2 = 0; x2 < 2; ++x2)
            for (std::size_t xr = 0; xr < 2; ++xr)
                dm.law[((x1 * 2 + x2) * 2 + xr) * 64 + (2 * x2 + xr) * 16 + (2 * x1 + xr) * 4 +
                       (2 * x1 + x2)] = 1.0;

    InputDistribution dist;
    dist.nu1 = dist.nu2 = 2;
    dist.p_u1x1 = {0.5, 0.0, 0.0, 0.5};
    dist.p_u2x2 = {0.5, 0.0, 0.0, 0.5};
    dist.p_xr = {0.5, 0.5};
    const auto set = partial_df_region(dm, dist);
    const bool exact = std::abs(set.r1_max - 1.0) <= 1e-9 && std::abs(set.r2_max - 1.0) <= 1e-9 &&
                       set.sum_max && std::abs(*set.sum_max - 2.0) <= 1e-9;

    const auto region = exhaustive_search(dm, 2);
    bool has_corner = false;
    for (const auto& s : region.pentagons) has_corner = has_corner || contains(s, {1.0, 1.0});

    char buf[112];
    std::snprintf(buf, sizeof buf, "region (%.3f, %.3f, sum %.3f); search at 1/2 %s (1,1)",
                  set.r1_max, set.r2_max, set.sum_max ? *set.sum_max : -1.0,
                  has_corner ? "contains" : "misses");
    report(9, exact && has_corner, "noiseless binary network", buf);
}

void criterion10() {
    std::mt19937 rng(1000001);
    long violations = 0;

    // schemes: monotone in noises everywhere, in powers where the formulas are
    for (int t = 0; t < 100; ++t) {
        const auto ch = random_channel(rng);
        const auto sp = random_split(rng);
        auto leq = [](const RateConstraintSet& a, const RateConstraintSet& b) {
            const double sa = a.sum_max ? *a.sum_max : std::numeric_limits<double>::infinity();
            const double sb = b.sum_max ? *b.sum_max : std::numeric_limits<double>::infinity();
            return a.r1_max <= b.r1_max + 1e-12 && a.r2_max <= b.r2_max + 1e-12 && sa <= sb + 1e-12;
        };
        auto noisier = ch;
        switch (t % 3) {
            case 0: noisier.n1 *= 1.0 + uniform(rng, 0.1, 4.0); break;
            case 1: noisier.n2 *= 1.0 + uniform(rng, 0.1, 4.0); break;
            default: noisier.nr *= 1.0 + uniform(rng, 0.1, 4.0); break;
        }
        if (!leq(direct_transmission(noisier), direct_transmission(ch))) ++violations;
        if (!leq(decode_forward(noisier), decode_forward(ch))) ++violations;
        if (!leq(partial_decode_forward(noisier, sp), partial_decode_forward(ch, sp))) ++violations;
        if (!leq(compute_forward(noisier), compute_forward(ch))) ++violations;
        if (!leq(combined_df_cf(noisier, sp), combined_df_cf(ch, sp))) ++violations;
        if (!leq(cutset_bound(noisier, 7), cutset_bound(ch, 7))) ++violations;

        auto stronger = ch;
        switch (t % 3) {
            case 0: stronger.p1 *= 1.0 + uniform(rng, 0.1, 4.0); break;
            case 1: stronger.p2 *= 1.0 + uniform(rng, 0.1, 4.0); break;
            default: stronger.pr *= 1.0 + uniform(rng, 0.1, 4.0); break;
        }
        if (!leq(direct_transmission(ch), direct_transmission(stronger))) ++violations;
        if (!leq(decode_forward(ch), decode_forward(stronger))) ++violations;

        auto p1_up = ch;
        p1_up.p1 *= 1.0 + uniform(rng, 0.1, 4.0);
        if (partial_decode_forward(ch, sp).r1_max >
            partial_decode_forward(p1_up, sp).r1_max + 1e-12)
            ++violations;
        if (compute_forward(ch).r1_max > compute_forward(p1_up).r1_max + 1e-12) ++violations;
        auto p2_up = ch;
        p2_up.p2 *= 1.0 + uniform(rng, 0.1, 4.0);
        if (partial_decode_forward(ch, sp).r2_max >
            partial_decode_forward(p2_up, sp).r2_max + 1e-12)
            ++violations;
        if (compute_forward(ch).r2_max > compute_forward(p2_up).r2_max + 1e-12) ++violations;
    }

    // geometry: refinement stability of union boundaries
    for (int t = 0; t < 100; ++t) {
        std::vector<RateConstraintSet> pens;
        for (int i = 0; i < 8; ++i) {
            RateConstraintSet s;
            s.r1_max = uniform(rng, 0.1, 3.0);
            s.r2_max = uniform(rng, 0.1, 3.0);
            s.sum_max = std::max(s.r1_max, s.r2_max) +
                        uniform(rng, 0.0, std::min(s.r1_max, s.r2_max));
            pens.push_back(s);
        }
        const std::size_t res = 33;
        const auto coarse = union_boundary(pens, res);
        const auto fine = union_boundary(pens, 2 * res - 1);
        for (std::size_t i = 0; i + 1 < res; ++i) {
            if (fine[2 * i].r2 != coarse[i].r2) ++violations;
            if (fine[2 * i + 1].r2 > coarse[i].r2 + 1e-12) ++violations;
            if (fine[2 * i + 1].r2 < coarse[i + 1].r2 - 1e-12) ++violations;
        }
    }

    // discrete: nonnegativity, symmetry, and the decoding chain identity
    for (int t = 0; t < 100; ++t) {
        Pmf j;
        j.dims = {2, 2, 2, 2};
        j.p = random_pmf(rng, 16);
        const double ab = mutual_information(j, {0}, {1}, {3});
        const double ba = mutual_information(j, {1}, {0}, {3});
        if (ab < 0.0 || std::abs(ab - ba) > 1e-10) ++violations;

        Pmf s;  // (u1, x1, x2, xr, y2) with u1 a deterministic relabel of x1
        s.dims = {2, 2, 2, 2, 2};
        s.p.assign(s.cells(), 0.0);
        const auto base = random_pmf(rng, 16);
        for (std::size_t x1 = 0; x1 < 2; ++x1)
            for (std::size_t x2 = 0; x2 < 2; ++x2)
                for (std::size_t xr = 0; xr < 2; ++xr)
                    for (std::size_t y2 = 0; y2 < 2; ++y2)
                        s.p[((((1 - x1) * 2 + x1) * 2 + x2) * 2 + xr) * 2 + y2] =
                            base[((x1 * 2 + x2) * 2 + xr) * 2 + y2];
        const double lhs =
            mutual_information(s, {3}, {4}, {2}) + mutual_information(s, {0, 1}, {4}, {2, 3});
        const double rhs = mutual_information(s, {1, 3}, {4}, {2});
        if (std::abs(lhs - rhs) > 1e-10) ++violations;
    }

    report(10, violations == 0, "property suites",
           "300 randomized property instances, " + std::to_string(violations) + " violations");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
