#include "knead/document.hpp"

#include <json.hpp>

#include <set>
#include <utility>

namespace knead {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw SchemaError(message);
}

// A complex number is either a plain number (real) or an [re, im] pair.
cplx parse_complex(const json& j, const char* where) {
    if (j.is_number())
        return cplx{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx{j[0].get<double>(), j[1].get<double>()};
    fail(std::string(where) + ": expected a number or an [re, im] pair");
}

CMatrix parse_matrix(const json& j, int p, const char* where) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(p))
        fail(std::string(where) + ": expected " + std::to_string(p) + " rows");
    CMatrix m(p, p);
    for (int i = 0; i < p; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(p))
            fail(std::string(where) + ": expected " + std::to_string(p) + " columns per row");
        for (int c = 0; c < p; ++c)
            m(i, c) = parse_complex(row[static_cast<std::size_t>(c)], where);
    }
    return m;
}

std::vector<CMatrix> parse_matrix_list(const json& j, int p, const char* where) {
    if (!j.is_array())
        fail(std::string(where) + ": expected an array of matrices");
    std::vector<CMatrix> out;
    out.reserve(j.size());
    for (const json& m : j)
        out.push_back(parse_matrix(m, p, where));
    return out;
}

unsigned parse_uint(const json& j, const char* where) {
    if (!j.is_number_unsigned())
        fail(std::string(where) + ": expected a non-negative integer");
    return j.get<unsigned>();
}

ClosedFormTerm parse_term(const json& j) {
    if (!j.is_object())
        fail("closed_form term: expected an object");
    static const std::set<std::string> known{"c", "r", "a", "b", "factorial"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key))
            fail("closed_form term: unknown field '" + key + "'");
    ClosedFormTerm t;
    if (!j.contains("c"))
        fail("closed_form term: missing 'c'");
    t.c = parse_complex(j.at("c"), "closed_form term c");
    if (j.contains("r"))
        t.r = parse_complex(j.at("r"), "closed_form term r");
    if (j.contains("a"))
        t.a = parse_uint(j.at("a"), "closed_form term a");
    if (j.contains("b"))
        t.b = parse_uint(j.at("b"), "closed_form term b");
    if (j.contains("factorial")) {
        if (!j.at("factorial").is_boolean())
            fail("closed_form term: 'factorial' must be a boolean");
        t.factorial = j.at("factorial").get<bool>();
    }
    return t;
}

CoefficientProvider parse_coefficients(const json& j, int p) {
    if (!j.is_object())
        fail("'coefficients' must be an object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        fail("'coefficients.kind' must be a string");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "explicit") {
        if (!j.contains("matrices"))
            fail("explicit coefficients need 'matrices'");
        return CoefficientProvider::explicit_list(p, parse_matrix_list(j.at("matrices"), p, "matrices"));
    }
    if (kind == "periodic") {
        std::vector<CMatrix> preamble;
        if (j.contains("preamble"))
            preamble = parse_matrix_list(j.at("preamble"), p, "preamble");
        if (!j.contains("cycle"))
            fail("periodic coefficients need 'cycle'");
        std::vector<CMatrix> cycle = parse_matrix_list(j.at("cycle"), p, "cycle");
        if (cycle.empty())
            fail("periodic 'cycle' must be non-empty");
        return CoefficientProvider::periodic(p, std::move(preamble), std::move(cycle));
    }
    if (kind == "closed_form") {
        if (!j.contains("terms"))
            fail("closed_form coefficients need 'terms'");
        const json& grid = j.at("terms");
        if (!grid.is_array() || grid.size() != static_cast<std::size_t>(p))
            fail("'terms' must be a p x p grid of term lists");
        std::vector<std::vector<std::vector<ClosedFormTerm>>> terms(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) {
            const json& row = grid[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != static_cast<std::size_t>(p))
                fail("'terms' must be a p x p grid of term lists");
            terms[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(p));
            for (int c = 0; c < p; ++c) {
                const json& cell = row[static_cast<std::size_t>(c)];
                if (!cell.is_array())
                    fail("each 'terms' cell must be a list of terms");
                for (const json& term : cell)
                    terms[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].push_back(
                            parse_term(term));
            }
        }
        return CoefficientProvider::closed_form(p, std::move(terms));
    }
    fail("'coefficients.kind' must be explicit, periodic or closed_form");
}

InitialCondition parse_initial(const json& j, int p) {
    InitialCondition u;
    if (!j.is_array())
        fail("'initial' must be an array of {index, vector} entries");
    std::set<unsigned> seen;
    for (const json& entry : j) {
        if (!entry.is_object() || !entry.contains("index") || !entry.contains("vector"))
            fail("'initial' entries need 'index' and 'vector'");
        const unsigned index = parse_uint(entry.at("index"), "initial index");
        if (!seen.insert(index).second)
            fail("'initial' indices must be distinct");
        const json& vec = entry.at("vector");
        if (!vec.is_array() || vec.size() != static_cast<std::size_t>(p))
            fail("'initial' vectors must have length p");
        CVector v(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i)
            v[static_cast<std::size_t>(i)] = parse_complex(vec[static_cast<std::size_t>(i)], "initial vector");
        u.set(index, std::move(v));
    }
    return u;
}

} // namespace

RecurrenceDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("document must be a JSON object");
    static const std::set<std::string> known{"p", "truncation", "coefficients", "initial"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key))
            fail("unknown document field '" + key + "'");
    if (!j.contains("p") || !j.at("p").is_number_unsigned() || j.at("p").get<unsigned>() == 0)
        fail("'p' must be a positive integer");
    const int p = j.at("p").get<int>();
    int truncation = 64;
    if (j.contains("truncation")) {
        if (!j.at("truncation").is_number_unsigned() || j.at("truncation").get<unsigned>() == 0)
            fail("'truncation' must be a positive integer");
        truncation = j.at("truncation").get<int>();
    }
    if (!j.contains("coefficients"))
        fail("document needs 'coefficients'");
    CoefficientProvider provider = parse_coefficients(j.at("coefficients"), p);
    InitialCondition initial;
    if (j.contains("initial"))
        initial = parse_initial(j.at("initial"), p);
    try {
        return RecurrenceDocument{Recurrence(std::move(provider)), std::move(initial), truncation};
    } catch (const Error& e) {
        fail(e.what()); // provider invariants are schema-level failures
    }
}

} // namespace knead
