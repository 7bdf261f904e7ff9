#include "knead/recurrence.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace knead {

namespace {

void check_shapes(int p, const std::vector<CMatrix>& matrices, const char* what) {
    for (const CMatrix& m : matrices)
        if (m.rows != p || m.cols != p)
            throw Error(std::string(what) + " matrices must be p x p");
}

// z^n by binary exponentiation; exact for integer-valued bases.
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

// 1/(m)! with graceful underflow to zero for large m.
long double inv_factorial(unsigned m) {
    long double inv = 1.0L;
    for (unsigned i = 2; i <= m; ++i)
        inv /= static_cast<long double>(i);
    return inv;
}

cplx term_value(const ClosedFormTerm& t, unsigned n) {
    cplx v = t.c * cpow(t.r, n);
    double npow = 1.0;
    for (unsigned i = 0; i < t.a; ++i)
        npow *= static_cast<double>(n); // 0^0 = 1 falls out of the empty product
    v *= npow;
    if (t.factorial)
        v *= static_cast<double>(inv_factorial(n + t.b));
    return v;
}

} // namespace

CoefficientProvider::CoefficientProvider(int p, std::variant<Explicit, Periodic, ClosedForm> impl)
        : p_(p), impl_(std::move(impl)) {
    if (p_ <= 0)
        throw Error("recurrence dimension p must be positive");
}

CoefficientProvider CoefficientProvider::explicit_list(int p, std::vector<CMatrix> matrices) {
    check_shapes(p, matrices, "explicit");
    while (!matrices.empty() && matrices.back().is_zero())
        matrices.pop_back(); // keep the order tight: A_{k-1} != 0
    return CoefficientProvider(p, Explicit{std::move(matrices)});
}

CoefficientProvider CoefficientProvider::periodic(int p, std::vector<CMatrix> preamble,
                                                  std::vector<CMatrix> cycle) {
    check_shapes(p, preamble, "periodic preamble");
    check_shapes(p, cycle, "periodic cycle");
    if (cycle.empty())
        throw Error("periodic providers need a non-empty cycle");
    return CoefficientProvider(p, Periodic{std::move(preamble), std::move(cycle)});
}

CoefficientProvider CoefficientProvider::closed_form(
        int p, std::vector<std::vector<std::vector<ClosedFormTerm>>> terms) {
    if (terms.size() != static_cast<std::size_t>(p))
        throw Error("closed-form term grid must have p rows");
    for (const auto& row : terms)
        if (row.size() != static_cast<std::size_t>(p))
            throw Error("closed-form term grid must have p columns");
    return CoefficientProvider(p, ClosedForm{std::move(terms)});
}

CoefficientProvider::Kind CoefficientProvider::kind() const {
    if (std::holds_alternative<Explicit>(impl_))
        return Kind::Explicit;
    if (std::holds_alternative<Periodic>(impl_))
        return Kind::Periodic;
    return Kind::ClosedForm;
}

std::optional<int> CoefficientProvider::explicit_order() const {
    if (const Explicit* e = std::get_if<Explicit>(&impl_))
        return static_cast<int>(e->matrices.size());
    return std::nullopt;
}

CMatrix CoefficientProvider::matrix_at(unsigned n) const {
    if (const Explicit* e = std::get_if<Explicit>(&impl_)) {
        if (n < e->matrices.size())
            return e->matrices[n];
        return CMatrix(p_, p_);
    }
    if (const Periodic* q = std::get_if<Periodic>(&impl_)) {
        if (n < q->preamble.size())
            return q->preamble[n];
        return q->cycle[(n - q->preamble.size()) % q->cycle.size()];
    }
    const ClosedForm& cf = std::get<ClosedForm>(impl_);
    CMatrix m(p_, p_);
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) {
            cplx acc{0.0, 0.0};
            for (const ClosedFormTerm& t : cf.terms[i][j])
                acc += term_value(t, n);
            m(i, j) = acc;
        }
    return m;
}

double CoefficientProvider::rho_estimate() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (std::holds_alternative<Explicit>(impl_))
        return inf;
    if (const Periodic* q = std::get_if<Periodic>(&impl_)) {
        // Entry series are rational with poles on the unit circle at
        // worst. A cycle of zero matrices degenerates to a polynomial.
        for (const CMatrix& m : q->cycle)
            if (!m.is_zero())
                return 1.0;
        return inf;
    }
    // Factorial terms are entire; a non-factorial term c r^n n^a has
    // radius 1/|r|.
    const ClosedForm& cf = std::get<ClosedForm>(impl_);
    double max_r = 0.0;
    for (const auto& row : cf.terms)
        for (const auto& entry : row)
            for (const ClosedFormTerm& t : entry)
                if (!t.factorial && t.c != cplx{0.0, 0.0})
                    max_r = std::max(max_r, std::abs(t.r));
    return max_r == 0.0 ? inf : 1.0 / max_r;
}

Recurrence::Recurrence(CoefficientProvider provider) : provider_(std::move(provider)), rho_(0.0) {
    rho_ = provider_.rho_estimate();
}

void InitialCondition::set(unsigned position, CVector value) {
    bool all_zero = true;
    for (const cplx& v : value)
        if (v != cplx{0.0, 0.0})
            all_zero = false;
    if (all_zero)
        support_.erase(position);
    else
        support_[position] = std::move(value);
}

unsigned InitialCondition::max_position() const {
    return support_.empty() ? 0u : support_.rbegin()->first;
}

CVector InitialCondition::at(unsigned position, int p) const {
    auto it = support_.find(position);
    if (it == support_.end())
        return CVector(static_cast<std::size_t>(p));
    CVector v = it->second;
    v.resize(static_cast<std::size_t>(p));
    return v;
}

SolutionPrefix iterate(const Recurrence& rec, const InitialCondition& u, int horizon) {
    if (horizon < 0)
        throw Error("iteration horizon must be non-negative");
    const int p = rec.p();
    const unsigned m = u.max_position();
    // values[t + m] holds v_t for t = -m .. horizon
    std::vector<CVector> values(static_cast<std::size_t>(horizon) + m + 1,
                                CVector(static_cast<std::size_t>(p)));
    for (const auto& [pos, vec] : u.support()) {
        CVector v = vec;
        v.resize(static_cast<std::size_t>(p));
        values[m - pos] = std::move(v);
    }
    const std::optional<int> k = rec.finite_order();
    for (int n = 0; n < horizon; ++n) {
        long imax = static_cast<long>(n) + m;
        if (k)
            imax = std::min(imax, static_cast<long>(*k) - 1);
        CVector acc(static_cast<std::size_t>(p));
        for (long i = 0; i <= imax; ++i) {
            const CVector& past = values[static_cast<std::size_t>(n - i + static_cast<long>(m))];
            bool zero = true;
            for (const cplx& v : past)
                if (v != cplx{0.0, 0.0}) {
                    zero = false;
                    break;
                }
            if (zero)
                continue;
            const CMatrix a = rec.provider().matrix_at(static_cast<unsigned>(i));
            for (int r = 0; r < p; ++r) {
                cplx s{0.0, 0.0};
                for (int c = 0; c < p; ++c)
                    s += a(r, c) * past[static_cast<std::size_t>(c)];
                acc[static_cast<std::size_t>(r)] += s;
            }
        }
        values[static_cast<std::size_t>(n) + 1 + m] = std::move(acc);
    }
    SolutionPrefix out;
    out.values.assign(values.begin() + m, values.end());
    return out;
}

CMatrix companion_matrix(const Recurrence& rec) {
    const std::optional<int> order = rec.finite_order();
    if (!order)
        throw InfiniteOrder("companion matrix requires a finite-order recurrence");
    const int k = *order;
    const int p = rec.p();
    CMatrix f(k * p, k * p);
    for (int block = 0; block < k; ++block) {
        const CMatrix a = rec.provider().matrix_at(static_cast<unsigned>(block));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                f(i, block * p + j) = a(i, j);
    }
    for (int block = 1; block < k; ++block)
        for (int i = 0; i < p; ++i)
            f(block * p + i, (block - 1) * p + i) = cplx{1.0, 0.0};
    return f;
}

BetaIndex beta_decode(unsigned beta, int p) {
    if (beta == 0)
        throw Error("basis indices are 1-based");
    const unsigned n = (beta - 1) / static_cast<unsigned>(p);
    return BetaIndex{n, static_cast<int>(beta - n * static_cast<unsigned>(p))};
}

std::map<unsigned, cplx> basis_coordinates(const InitialCondition& u, int p) {
    std::map<unsigned, cplx> coords;
    for (const auto& [pos, vec] : u.support())
        for (int j = 1; j <= p; ++j) {
            if (static_cast<std::size_t>(j) > vec.size())
                break;
            const cplx c = vec[static_cast<std::size_t>(j) - 1];
            if (c != cplx{0.0, 0.0})
                coords[pos * static_cast<unsigned>(p) + static_cast<unsigned>(j)] = c;
        }
    return coords;
}

} // namespace knead
