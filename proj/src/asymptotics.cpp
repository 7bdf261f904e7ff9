#include "knead/asymptotics.hpp"

#include "knead/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace knead {

namespace {

constexpr double kClusterEps = 1e-6;
constexpr double kStabilityEps = 1e-8;
constexpr double kLowDerivEps = 1e-6;  // |delta^(j)(z)| below this (relative) counts as zero
constexpr double kHighDerivEps = 1e-3; // |delta^(m)(z)| must clear this (relative)

struct Cluster {
    cplx raw_center;
    cplx center; // after Newton refinement
    int multiplicity;
};

cplx cpow(cplx z, unsigned n) {
    cplx result{1.0, 0.0};
    cplx base = z;
    while (n) {
        if (n & 1u)
            result *= base;
        base *= base;
        n >>= 1u;
    }
    return result;
}

std::vector<Cluster> cluster_roots(std::vector<cplx> roots) {
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double tol = kClusterEps * (1.0 + 0.5 * (std::abs(roots[i]) + std::abs(roots[j])));
            if (std::abs(roots[i] - roots[j]) <= tol)
                parent[find(i)] = find(j);
        }
    std::vector<Cluster> clusters;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (seen[root])
            continue;
        seen[root] = true;
        cplx sum{0.0, 0.0};
        int count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (find(j) == root) {
                sum += roots[j];
                ++count;
            }
        clusters.push_back(Cluster{sum / static_cast<double>(count), cplx{0.0, 0.0}, count});
    }
    return clusters;
}

// delta, delta', delta'', ... as far as the validation needs them.
std::vector<TruncatedSeries> derivative_tower(const TruncatedSeries& delta, int levels) {
    std::vector<TruncatedSeries> tower{delta};
    for (int i = 0; i < levels; ++i)
        tower.push_back(derivative(tower.back()));
    return tower;
}

void newton_refine(Cluster& cluster, const std::vector<TruncatedSeries>& tower) {
    const TruncatedSeries& g = tower[static_cast<std::size_t>(cluster.multiplicity) - 1];
    const TruncatedSeries& gd = tower[static_cast<std::size_t>(cluster.multiplicity)];
    cplx z = cluster.raw_center;
    for (int i = 0; i < 64; ++i) {
        const cplx dv = eval(gd, z);
        if (dv == cplx{0.0, 0.0})
            break;
        const cplx step = eval(g, z) / dv;
        z -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z)))
            break;
    }
    cluster.center = z;
}

std::vector<Cluster> refine_and_filter(std::vector<Cluster> clusters,
                                       const std::vector<TruncatedSeries>& tower,
                                       double disk_radius) {
    std::vector<Cluster> kept;
    for (Cluster& c : clusters) {
        newton_refine(c, tower);
        if (std::abs(c.center) > disk_radius)
            continue;
        if (std::abs(c.center - c.raw_center) > 1e-3 * (1.0 + std::abs(c.raw_center)))
            throw TruncationUnstable("root refinement wandered away from its cluster");
        kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), [](const Cluster& a, const Cluster& b) {
        const double ra = std::abs(a.center);
        const double rb = std::abs(b.center);
        if (ra != rb)
            return ra < rb;
        return std::arg(a.center) < std::arg(b.center);
    });
    return kept;
}

void validate_multiplicities(const std::vector<Cluster>& clusters,
                             const std::vector<TruncatedSeries>& tower) {
    for (const Cluster& c : clusters) {
        for (int j = 0; j < c.multiplicity; ++j) {
            const double limit = kLowDerivEps * tower[static_cast<std::size_t>(j)].scale();
            if (std::abs(eval(tower[static_cast<std::size_t>(j)], c.center)) > limit)
                throw TruncationUnstable(
                        "cluster of " + std::to_string(c.multiplicity) +
                        " roots does not match the local vanishing order of the determinant");
        }
        const TruncatedSeries& high = tower[static_cast<std::size_t>(c.multiplicity)];
        if (std::abs(eval(high, c.center)) <= kHighDerivEps * high.scale())
            throw TruncationUnstable("determinant vanishes to higher order than the cluster size");
    }
}

} // namespace

std::vector<GeneralizedEigenvalue> dominant_eigenvalues(const KneadingSystem& sys,
                                                        const EigenvalueOptions& options) {
    if (!(sys.rec.rho() > 1.0))
        throw HypothesisViolated("asymptotics needs coefficient series holomorphic beyond the unit disk");
    const int n = sys.truncation;
    const KneadingSystem sys2 = build_kneading(sys.rec, 2 * n);

    std::vector<Cluster> coarse_n = cluster_roots(polynomial_roots(sys.delta.coeffs()));
    std::vector<Cluster> coarse_2n = cluster_roots(polynomial_roots(sys2.delta.coeffs()));
    // the tower needs one derivative past the largest multiplicity
    int levels = 1;
    for (const Cluster& c : coarse_n)
        levels = std::max(levels, c.multiplicity);
    for (const Cluster& c : coarse_2n)
        levels = std::max(levels, c.multiplicity);
    const std::vector<TruncatedSeries> tower = derivative_tower(sys2.delta, levels);

    const std::vector<Cluster> at_n = refine_and_filter(std::move(coarse_n), tower, options.disk_radius);
    const std::vector<Cluster> at_2n = refine_and_filter(std::move(coarse_2n), tower, options.disk_radius);

    if (at_n.size() != at_2n.size())
        throw TruncationUnstable("dominant root count changed between truncations N and 2N");
    std::vector<bool> used(at_2n.size(), false);
    for (const Cluster& a : at_n) {
        std::size_t best = at_2n.size();
        double best_dist = 1e300;
        for (std::size_t i = 0; i < at_2n.size(); ++i) {
            if (used[i])
                continue;
            const double dist = std::abs(a.center - at_2n[i].center);
            if (dist < best_dist) {
                best_dist = dist;
                best = i;
            }
        }
        if (best == at_2n.size() || best_dist > kStabilityEps)
            throw TruncationUnstable("a dominant root moved more than 1e-8 between truncations N and 2N");
        if (at_2n[best].multiplicity != a.multiplicity)
            throw TruncationUnstable("a dominant root changed multiplicity between truncations N and 2N");
        used[best] = true;
    }

    validate_multiplicities(at_n, tower);

    std::vector<GeneralizedEigenvalue> evs;
    evs.reserve(at_n.size());
    for (const Cluster& c : at_n) {
        GeneralizedEigenvalue ev;
        ev.z_root = c.center;
        ev.lambda = cplx{1.0, 0.0} / c.center;
        ev.multiplicity = c.multiplicity;
        ev.residual = std::abs(eval(sys2.delta, c.center));
        evs.push_back(ev);
    }
    std::sort(evs.begin(), evs.end(), [](const GeneralizedEigenvalue& a, const GeneralizedEigenvalue& b) {
        const double ma = std::abs(a.lambda);
        const double mb = std::abs(b.lambda);
        if (ma != mb)
            return ma > mb;
        return std::arg(a.lambda) < std::arg(b.lambda);
    });
    return evs;
}

std::vector<cplx> laurent_principal_part(const KneadingSystem& sys, int alpha, unsigned beta,
                                         const GeneralizedEigenvalue& ev) {
    const int m = ev.multiplicity;
    const int n = sys.truncation;
    if (m < 1 || n - m < m - 1)
        throw Error("multiplicity out of range for this truncation");
    // G_alpha(e_beta) = num / delta with num = (delta - delta_alpha(beta)) / z
    const TruncatedSeries num =
            shift_div_z(sub(sys.delta, extended_determinant(sys, alpha, beta)));
    const TruncatedSeries num_local = taylor_shift(num, ev.z_root);
    const TruncatedSeries den_local = taylor_shift(sys.delta, ev.z_root);
    const double den_scale = den_local.scale();
    for (int j = 0; j < m; ++j)
        if (std::abs(den_local.coeff(j)) > kLowDerivEps * den_scale)
            throw MultiplicityMismatch("local expansion of the determinant does not vanish to order " +
                                       std::to_string(m));
    // divide out w^m and expand the local quotient
    const int local_trunc = n - m;
    std::vector<cplx> den_tail(den_local.coeffs().begin() + m, den_local.coeffs().end());
    const TruncatedSeries den_shifted = TruncatedSeries(std::move(den_tail));
    const TruncatedSeries num_cut =
            TruncatedSeries(std::vector<cplx>(num_local.coeffs().begin(),
                                              num_local.coeffs().begin() + local_trunc + 1));
    const TruncatedSeries quotient = mul(num_cut, invert(den_shifted));
    std::vector<cplx> principal(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
        principal[static_cast<std::size_t>(j) - 1] = quotient.coeff(m - j); // L(-j)
    return principal;
}

BinetApproximation binet_coefficients(const KneadingSystem& sys, const InitialCondition& u,
                                      const std::vector<GeneralizedEigenvalue>& evs) {
    const int p = sys.rec.p();
    const std::map<unsigned, cplx> coords = basis_coordinates(u, p);
    BinetApproximation approx;
    approx.eigenvalues = evs;
    approx.p = p;
    approx.coeffs.resize(evs.size());
    for (std::size_t i = 0; i < evs.size(); ++i) {
        const GeneralizedEigenvalue& ev = evs[i];
        const int m = ev.multiplicity;
        approx.coeffs[i].assign(static_cast<std::size_t>(m),
                                std::vector<cplx>(static_cast<std::size_t>(p)));
        for (int alpha = 1; alpha <= p; ++alpha) {
            std::vector<cplx> combined(static_cast<std::size_t>(m));
            for (const auto& [beta, c] : coords) {
                const std::vector<cplx> part = laurent_principal_part(sys, alpha, beta, ev);
                for (int j = 0; j < m; ++j)
                    combined[static_cast<std::size_t>(j)] += c * part[static_cast<std::size_t>(j)];
            }
            for (int j = 1; j <= m; ++j)
                approx.coeffs[i][static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(alpha) - 1] =
                        combined[static_cast<std::size_t>(j) - 1] *
                        cpow(-ev.lambda, static_cast<unsigned>(j));
        }
    }
    return approx;
}

CVector binet_evaluate(const BinetApproximation& approx, unsigned n) {
    CVector out(static_cast<std::size_t>(approx.p));
    for (std::size_t i = 0; i < approx.eigenvalues.size(); ++i) {
        const GeneralizedEigenvalue& ev = approx.eigenvalues[i];
        const cplx lambda_n = cpow(ev.lambda, n);
        double weight = 1.0; // C(n+j-1, j-1), extended multiplicatively over j
        for (int j = 1; j <= ev.multiplicity; ++j) {
            if (j > 1)
                weight *= static_cast<double>(n + static_cast<unsigned>(j) - 1) /
                          static_cast<double>(j - 1);
            for (int alpha = 0; alpha < approx.p; ++alpha)
                out[static_cast<std::size_t>(alpha)] +=
                        approx.coeffs[i][static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(alpha)] *
                        weight * lambda_n;
        }
    }
    return out;
}

std::vector<std::vector<double>> asymptotic_error_profile(const Recurrence& rec,
                                                          const InitialCondition& u,
                                                          const BinetApproximation& approx,
                                                          int horizon) {
    if (horizon < 1)
        throw Error("error profile horizon must be at least 1");
    const SolutionPrefix oracle = iterate(rec, u, horizon);
    std::vector<std::vector<double>> profile(static_cast<std::size_t>(horizon) + 1);
    for (int n = 0; n <= horizon; ++n) {
        const CVector approx_v = binet_evaluate(approx, static_cast<unsigned>(n));
        std::vector<double> row(static_cast<std::size_t>(rec.p()));
        for (int alpha = 0; alpha < rec.p(); ++alpha)
            row[static_cast<std::size_t>(alpha)] =
                    std::abs(oracle.values[static_cast<std::size_t>(n)][static_cast<std::size_t>(alpha)] -
                             approx_v[static_cast<std::size_t>(alpha)]);
        profile[static_cast<std::size_t>(n)] = std::move(row);
    }
    return profile;
}

} // namespace knead
