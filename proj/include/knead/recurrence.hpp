#pragma once

#include "knead/errors.hpp"
#include "knead/linalg.hpp"

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace knead {

/// One summand of a closed-form coefficient entry:
///   c * r^n * n^a            when factorial is false
///   c * r^n * n^a / (n+b)!   when factorial is true
/// with the convention 0^0 = 1.
struct ClosedFormTerm {
    cplx c{0.0, 0.0};
    cplx r{1.0, 0.0};
    unsigned a = 0;
    unsigned b = 0;
    bool factorial = false;
};

/// Rule producing the coefficient matrix A_n for every n >= 0.
class CoefficientProvider {
public:
    enum class Kind { Explicit, Periodic, ClosedForm };

    /// Finite list A_0..A_{k-1}; trailing zero matrices are trimmed so
    /// the stored order is tight. All matrices must be p x p.
    static CoefficientProvider explicit_list(int p, std::vector<CMatrix> matrices);

    /// Preamble followed by an endlessly repeated non-empty cycle.
    static CoefficientProvider periodic(int p, std::vector<CMatrix> preamble,
                                        std::vector<CMatrix> cycle);

    /// terms[i][j] is the term list of entry (i, j), 0-based.
    static CoefficientProvider closed_form(int p,
                                           std::vector<std::vector<std::vector<ClosedFormTerm>>> terms);

    Kind kind() const;
    int dim() const { return p_; }

    /// A_n. Deterministic and total over all of N.
    CMatrix matrix_at(unsigned n) const;

    /// Number of stored matrices for explicit providers (the tight
    /// order k); nullopt otherwise.
    std::optional<int> explicit_order() const;

    /// Holomorphy radius of the entry series implied by the variant.
    double rho_estimate() const;

private:
    struct Explicit {
        std::vector<CMatrix> matrices;
    };
    struct Periodic {
        std::vector<CMatrix> preamble;
        std::vector<CMatrix> cycle;
    };
    struct ClosedForm {
        std::vector<std::vector<std::vector<ClosedFormTerm>>> terms;
    };

    CoefficientProvider(int p, std::variant<Explicit, Periodic, ClosedForm> impl);

    int p_;
    std::variant<Explicit, Periodic, ClosedForm> impl_;
};

/// A vector linear recurrence x_{n+1} = sum_i A_i x_{n-i} on C^p,
/// together with the metadata the analysis needs: its order and an
/// estimated holomorphy radius rho for the coefficient series.
class Recurrence {
public:
    explicit Recurrence(CoefficientProvider provider);

    int p() const { return provider_.dim(); }
    const CoefficientProvider& provider() const { return provider_; }

    /// k for explicit providers (A_n = 0 for n >= k), nullopt for the
    /// infinite-order kinds.
    std::optional<int> finite_order() const { return provider_.explicit_order(); }

    /// Estimated radius on which the coefficient series converge:
    /// +inf for explicit and all-factorial closed forms, 1/max|r| over
    /// non-factorial closed-form terms, 1 for (non-trivial) periodic
    /// providers.
    double rho() const { return rho_; }

private:
    CoefficientProvider provider_;
    double rho_;
};

/// Finitely supported initial condition: position n holds the vector
/// placed at time -n (position 0 is the value at time 0, larger
/// positions are pre-history). Absent positions are zero.
class InitialCondition {
public:
    InitialCondition() = default;

    void set(unsigned position, CVector value);
    const std::map<unsigned, CVector>& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    /// Largest supported position, 0 when empty.
    unsigned max_position() const;

    /// Value at position n (zero vector of size p when absent).
    CVector at(unsigned position, int p) const;

private:
    std::map<unsigned, CVector> support_;
};

/// The first H+1 solution vectors v_0..v_H.
struct SolutionPrefix {
    std::vector<CVector> values;
    int horizon() const { return static_cast<int>(values.size()) - 1; }
};

/// Direct iteration of the recurrence; the brute-force oracle. Each
/// step is an exact finite sum because the initial condition has finite
/// support.
SolutionPrefix iterate(const Recurrence& rec, const InitialCondition& u, int horizon);

/// Frobenius companion matrix (kp x kp); finite order only.
CMatrix companion_matrix(const Recurrence& rec);

/// Position/component pair addressed by a 1-based basis index beta.
struct BetaIndex {
    unsigned position; // n: beta addresses the vector slot at time -n
    int component;     // j in 1..p
};

/// Decodes beta >= 1 into (n, j) with beta = n*p + j.
BetaIndex beta_decode(unsigned beta, int p);

/// Coordinates of u with respect to the standard basis: beta -> c_beta,
/// only the nonzero ones.
std::map<unsigned, cplx> basis_coordinates(const InitialCondition& u, int p);

} // namespace knead
