#pragma once

#include "knead/kneading.hpp"

namespace knead {

/// lambda such that the kneading determinant has a zero of order
/// `multiplicity` at z_root = 1/lambda. Dominant means |lambda| >= 1,
/// i.e. |z_root| <= 1 (up to the boundary tolerance).
struct GeneralizedEigenvalue {
    cplx lambda;
    cplx z_root;
    int multiplicity;
    double residual; // |delta(z_root)| at truncation 2N, after refinement
};

struct EigenvalueOptions {
    /// Zeros of delta are reported when |z_root| <= disk_radius. The
    /// default captures the closed unit disk; widen it to pick up every
    /// root of a finite-order (polynomial) determinant.
    double disk_radius = 1.0 + 1e-8;
};

/// Dominant generalized eigenvalues of sys.rec. Zeros of the truncation
/// polynomial of delta are clustered (δ = 1e-6·(1+|z|)) into roots with
/// multiplicities, refined by Newton iteration on delta^(m-1) at
/// truncation 2N, and cross-checked against a fresh computation at
/// truncation 2N: any center moving more than 1e-8, or any multiplicity
/// change, raises TruncationUnstable. Requires rec.rho() > 1
/// (HypothesisViolated otherwise). Results are sorted by |lambda|
/// descending, then by arg(lambda).
std::vector<GeneralizedEigenvalue> dominant_eigenvalues(const KneadingSystem& sys,
                                                        const EigenvalueOptions& options = {});

/// Principal part of the Laurent expansion of G_alpha(e_beta) about
/// ev.z_root: returns L with L[j-1] = L(-j) for j = 1..m. Computed by
/// Taylor-shifting numerator and denominator to the root and dividing
/// the local series; the first m shifted coefficients of delta must
/// vanish (MultiplicityMismatch otherwise).
std::vector<cplx> laurent_principal_part(const KneadingSystem& sys, int alpha, unsigned beta,
                                         const GeneralizedEigenvalue& ev);

/// Asymptotic closed form
///   v_n^(alpha) ~ sum_i sum_j c[i][j-1][alpha-1] * C(n+j-1, j-1) * lambda_i^n.
struct BinetApproximation {
    std::vector<GeneralizedEigenvalue> eigenvalues;
    /// coeffs[i][j-1][alpha-1] = c_{i,j}^(alpha)
    std::vector<std::vector<std::vector<cplx>>> coeffs;
    int p = 0;
};

/// Combines principal parts linearly over the basis coordinates of u
/// and converts them into Binet coefficients c_{i,j} = L(i,-j)(-lambda_i)^j.
BinetApproximation binet_coefficients(const KneadingSystem& sys, const InitialCondition& u,
                                      const std::vector<GeneralizedEigenvalue>& evs);

/// Evaluates the closed form at n. Binomial weights are built
/// multiplicatively; no factorials are ever materialized.
CVector binet_evaluate(const BinetApproximation& approx, unsigned n);

/// Componentwise |v_n - v̂_n| for n = 0..H, oracle iteration vs Binet
/// evaluation. result[n][alpha-1].
std::vector<std::vector<double>> asymptotic_error_profile(const Recurrence& rec,
                                                          const InitialCondition& u,
                                                          const BinetApproximation& approx,
                                                          int horizon);

} // namespace knead
