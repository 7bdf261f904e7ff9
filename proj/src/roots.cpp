#include "knead/roots.hpp"

#include "knead/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace knead {

namespace {

constexpr double kTrimEps = 1e-14;
constexpr int kMaxIterations = 400;

struct PolyValue {
    cplx value;
    cplx deriv;
    double error_bound; // running bound on the evaluation rounding error
};

PolyValue horner(std::span<const cplx> c, cplx z) {
    const double az = std::abs(z);
    cplx p{0.0, 0.0};
    cplx dp{0.0, 0.0};
    double err = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        err = err * az + std::abs(p);
    }
    constexpr double eps = 2.2e-16;
    return PolyValue{p, dp, 2.0 * eps * err * static_cast<double>(c.size())};
}

// Starting points on circles whose radii come from the upper convex
// hull of (j, log|c_j|). The angles carry irrational-looking offsets:
// symmetric configurations on symmetric polynomials can lock Aberth
// into swap cycles.
std::vector<cplx> starting_points(std::span<const cplx> c, double sigma) {
    const std::size_t d = c.size() - 1;
    std::vector<double> logs(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        const double a = std::abs(c[j]);
        logs[j] = a > 0.0 ? std::log(a) : -1e300;
    }
    // upper hull over j = 0..d
    std::vector<std::size_t> hull;
    for (std::size_t j = 0; j <= d; ++j) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            const double cross = (logs[b] - logs[a]) * static_cast<double>(j - a) -
                                 (logs[j] - logs[a]) * static_cast<double>(b - a);
            if (cross <= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(j);
    }
    std::vector<cplx> z;
    z.reserve(d);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const std::size_t k1 = hull[s];
        const std::size_t k2 = hull[s + 1];
        const std::size_t count = k2 - k1;
        double radius = std::exp((logs[k1] - logs[k2]) / static_cast<double>(count));
        if (!std::isfinite(radius) || radius <= 0.0)
            radius = 1.0;
        for (std::size_t t = 0; t < count; ++t) {
            const double angle = two_pi * (static_cast<double>(t) + 0.2628) / static_cast<double>(count) +
                                 sigma * static_cast<double>(s + 1) +
                                 two_pi * static_cast<double>(k1) / static_cast<double>(d + 1);
            z.push_back(radius * cplx{std::cos(angle), std::sin(angle)});
        }
    }
    while (z.size() < d)
        z.push_back(cplx{1.0, 0.5} * static_cast<double>(z.size() + 1));
    return z;
}

bool aberth(std::span<const cplx> c, std::vector<cplx>& z) {
    const std::size_t d = z.size();
    std::vector<bool> done(d, false);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i])
                continue;
            const PolyValue pv = horner(c, z[i]);
            if (std::abs(pv.value) <= pv.error_bound) {
                done[i] = true;
                continue;
            }
            cplx newton = pv.deriv != cplx{0.0, 0.0} ? pv.value / pv.deriv
                                                     : cplx{1e-3, 1e-3} * (1.0 + std::abs(z[i]));
            cplx repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) {
                if (j == i)
                    continue;
                const cplx diff = z[i] - z[j];
                if (diff != cplx{0.0, 0.0})
                    repulsion += cplx{1.0, 0.0} / diff;
                else
                    repulsion += cplx{1e8, 0.0};
            }
            const cplx denom = cplx{1.0, 0.0} - newton * repulsion;
            cplx step = denom != cplx{0.0, 0.0} ? newton / denom : newton;
            // overshooting past a neighbour can set up swap cycles
            const double cap = 0.5 * (1.0 + std::abs(z[i]));
            const double norm = std::abs(step);
            if (norm > cap)
                step *= cap / norm;
            z[i] -= step;
            if (std::abs(step) > 1e-13 * (1.0 + std::abs(z[i])))
                all_done = false;
            else
                done[i] = true;
        }
        if (all_done)
            return true;
    }
    // report success only if every iterate sits on a numerical zero
    for (std::size_t i = 0; i < d; ++i) {
        const PolyValue pv = horner(c, z[i]);
        if (std::abs(pv.value) > 64.0 * pv.error_bound)
            return false;
    }
    return true;
}

} // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs) {
    double scale = 0.0;
    for (const cplx& c : coeffs)
        scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        return {};
    std::size_t degree = coeffs.size() - 1;
    while (degree > 0 && std::abs(coeffs[degree]) <= kTrimEps * scale)
        --degree;
    std::vector<cplx> c(coeffs.begin(), coeffs.begin() + degree + 1);
    // roots at the origin: strip zero low-order coefficients
    std::size_t zeros_at_origin = 0;
    while (zeros_at_origin < degree && std::abs(c[zeros_at_origin]) == 0.0)
        ++zeros_at_origin;
    if (zeros_at_origin > 0)
        c.erase(c.begin(), c.begin() + zeros_at_origin);
    std::vector<cplx> roots(zeros_at_origin, cplx{0.0, 0.0});
    if (c.size() == 1)
        return roots;

    std::vector<cplx> best;
    for (double sigma : {0.7, 1.9, 3.3}) {
        std::vector<cplx> z = starting_points(c, sigma);
        if (aberth(c, z)) {
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
        if (best.empty())
            best = std::move(z);
    }
    roots.insert(roots.end(), best.begin(), best.end());
    return roots;
}

} // namespace knead
