// SPDX-License-Identifier: Apache-2.0
//
// Scalar optimizers shared by all schemes: golden-section maximization,
// bisection root-finding, and grid search with local refinement. Stateless
// and re-entrant; a single objective is never evaluated concurrently.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coopcap {

struct SearchReport {
    std::vector<double> arg;  // argmax / root location(s)
    double value{};
    long evaluations{};
    bool converged{};
    double residual{};  // final bracket or cell width
    long excluded{};    // non-finite grid evaluations treated as -inf
};

class search_error : public std::runtime_error {
  public:
    search_error(const std::string& what, double at) : std::runtime_error(what), abscissa(at) {}
    double abscissa;
};

class bracket_error : public std::runtime_error {
  public:
    bracket_error(const std::string& what, double glo, double ghi)
        : std::runtime_error(what), g_lo(glo), g_hi(ghi) {}
    double g_lo, g_hi;
};

/// Golden-section maximization on [lo, hi]. For unimodal f the returned point
/// is within tol of the global maximizer; the bracket shrinks by the golden
/// ratio each iteration, so evaluations <= ceil(log((hi-lo)/tol)/log(1/rho)) + 2.
template <class F>
SearchReport golden_max(F&& f, double lo, double hi, double tol = 1e-6) {
    if (!(lo < hi) || !(tol > 0.0)) {
        throw std::invalid_argument("golden_max: need lo < hi and tol > 0");
    }
    constexpr double inv_phi = 0.6180339887498948482;   // (sqrt(5)-1)/2
    constexpr double inv_phi2 = 0.3819660112501051518;  // 1 - inv_phi

    const auto eval = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            throw search_error("golden_max: non-finite objective value", x);
        }
        return y;
    };

    SearchReport rep;
    double a = lo, b = hi;
    double h = b - a;
    double x1 = a + inv_phi2 * h;
    double x2 = a + inv_phi * h;
    double f1 = eval(x1);
    double f2 = eval(x2);
    rep.evaluations = 2;

    while (h > tol) {
        if (f1 > f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            h = b - a;
            x1 = a + inv_phi2 * h;
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            h = b - a;
            x2 = a + inv_phi * h;
            f2 = eval(x2);
        }
        ++rep.evaluations;
    }

    rep.arg = {f1 > f2 ? x1 : x2};
    rep.value = f1 > f2 ? f1 : f2;
    rep.residual = h;
    rep.converged = h <= tol;
    return rep;
}

/// Bisection on a bracketing interval; the bracket width halves each
/// iteration. Requires g(lo) and g(hi) of opposite sign (an exact zero at an
/// endpoint is accepted).
template <class G>
SearchReport bisect_root(G&& g, double lo, double hi, double tol = 1e-9) {
    if (!(lo < hi) || !(tol > 0.0)) {
        throw std::invalid_argument("bisect_root: need lo < hi and tol > 0");
    }
    const auto eval = [&](double x) {
        const double y = g(x);
        if (!std::isfinite(y)) {
            throw search_error("bisect_root: non-finite function value", x);
        }
        return y;
    };

    SearchReport rep;
    double glo = eval(lo);
    double ghi = eval(hi);
    rep.evaluations = 2;

    if (glo == 0.0) {
        rep.arg = {lo};
        rep.converged = true;
        return rep;
    }
    if (ghi == 0.0) {
        rep.arg = {hi};
        rep.converged = true;
        return rep;
    }
    if ((glo > 0.0) == (ghi > 0.0)) {
        std::ostringstream os;
        os << "bisect_root: no sign change on bracket, g(lo)=" << glo << " g(hi)=" << ghi;
        throw bracket_error(os.str(), glo, ghi);
    }

    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;  // interval at floating-point resolution
        }
        const double gm = eval(mid);
        ++rep.evaluations;
        if (gm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }

    rep.arg = {lo + 0.5 * (hi - lo)};
    rep.residual = hi - lo;
    rep.converged = rep.residual <= tol;
    rep.value = 0.0;
    return rep;
}

/// Grid maximization over a box of up to 4 dimensions with local refinement.
/// Each refinement level re-grids the +/-1-cell neighborhood of the incumbent
/// (clamped to the original box). Non-finite evaluations are excluded and
/// counted; ties keep the earliest (lowest-index) grid point.
template <class F>
SearchReport grid_max(F&& f, const std::vector<std::pair<double, double>>& box,
                      int points_per_dim = 64, int refine_levels = 3) {
    const std::size_t dims = box.size();
    if (dims == 0 || dims > 4) {
        throw std::invalid_argument("grid_max: need 1 to 4 dimensions");
    }
    if (points_per_dim < 3) {
        throw std::invalid_argument("grid_max: need points_per_dim >= 3");
    }
    for (const auto& [lo, hi] : box) {
        if (!(lo <= hi)) {
            throw std::invalid_argument("grid_max: malformed box");
        }
    }

    SearchReport rep;
    rep.value = -std::numeric_limits<double>::infinity();

    std::vector<std::pair<double, double>> cur = box;
    std::vector<double> x(dims), best_x(dims);
    bool have_best = false;
    double final_cell = 0.0;

    for (int level = 0; level <= refine_levels; ++level) {
        std::vector<double> step(dims);
        for (std::size_t d = 0; d < dims; ++d) {
            step[d] = (cur[d].second - cur[d].first) / (points_per_dim - 1);
        }

        std::vector<int> idx(dims, 0);
        bool done = false;
        double level_best = -std::numeric_limits<double>::infinity();
        std::vector<double> level_best_x(dims);
        bool level_have = false;
        while (!done) {
            for (std::size_t d = 0; d < dims; ++d) {
                x[d] = cur[d].first + idx[d] * step[d];
            }
            const double y = f(x);
            ++rep.evaluations;
            if (std::isfinite(y)) {
                if (!level_have || y > level_best) {
                    level_best = y;
                    level_best_x = x;
                    level_have = true;
                }
            } else {
                ++rep.excluded;
            }
            // advance multi-index, last dimension fastest
            done = true;
            for (std::size_t d = dims; d-- > 0;) {
                if (++idx[d] < points_per_dim) {
                    done = false;
                    break;
                }
                idx[d] = 0;
            }
        }

        if (level_have && (!have_best || level_best > rep.value)) {
            rep.value = level_best;
            best_x = level_best_x;
            have_best = true;
        }
        if (!have_best) {
            break;  // nothing finite anywhere; no point refining
        }

        final_cell = 0.0;
        for (std::size_t d = 0; d < dims; ++d) {
            final_cell = std::max(final_cell, step[d]);
        }
        if (level < refine_levels) {
            for (std::size_t d = 0; d < dims; ++d) {
                const double lo = std::max(box[d].first, best_x[d] - step[d]);
                const double hi = std::min(box[d].second, best_x[d] + step[d]);
                cur[d] = {lo, hi};
            }
        }
    }

    rep.arg = best_x;
    rep.converged = have_best;
    rep.residual = final_cell;
    return rep;
}

}  // namespace coopcap
