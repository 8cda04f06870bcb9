#include "liepi/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepi {

namespace {

// value of c * 2^(m-3) + lin, exact also at m = 2 where 2^(m-3) = 1/2
Integer halfpow_form(long m, long quad, long lin) {
    Rational v = Rational(quad) * pow2(m - 3) + Rational(lin);
    return to_integer(v);
}

struct FormulaEntry {
    const char* name;
    long m1;  // value at m = 1
    Integer (*at)(long m);
};

Integer trivial3_at(long m) { return halfpow_form(m, m * m - 5 * m + 4, 2 * m - 2); }
Integer universal3_at(long m) { return halfpow_form(m, 2 * m * m - 2 * m, 3 * m); }
Integer almost_universal3_at(long m) {
    return halfpow_form(m, 2 * m * m - 2 * m, 3 * m - 1);
}
Integer canonical3_at(long m) { return halfpow_form(m, m * m - m, 2 * m); }
Integer almost_canonical3_at(long m) { return halfpow_form(m, m * m - m, 2 * m - 1); }
Integer remaining3_at(long m) { return halfpow_form(m, 2 * m * m - 6 * m, 3 * m - 1); }
Integer t2_at(long m) { return halfpow_form(m, 4 * m * m + 4 * m, m); }
Integer ut2_trivial_at(long m) { return Integer(m - 1); }
Integer ut2_graded_at(long m) { return Integer(m); }

const FormulaEntry table[] = {
    {"trivial3", 1, trivial3_at},
    {"universal3", 4, universal3_at},
    {"almost-universal3", 3, almost_universal3_at},
    {"canonical3", 3, canonical3_at},
    {"canonical-free3", 3, canonical3_at},
    {"almost-canonical3", 2, almost_canonical3_at},
    {"remaining3", 2, remaining3_at},
    {"canonical-t2", 5, t2_at},
    {"almost-canonical-t2", 4, t2_at},
    {"ut2-trivial", 1, ut2_trivial_at},
    {"ut2-graded", 2, ut2_graded_at},
};

const FormulaEntry* find_entry(const std::string& name) {
    for (const auto& e : table)
        if (name == e.name) return &e;
    return nullptr;
}

} // namespace

bool has_closed_form(const std::string& name) { return find_entry(name) != nullptr; }

const std::vector<std::string>& closed_form_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : table) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

Integer closed_form(const std::string& name, long m) {
    const FormulaEntry* e = find_entry(name);
    if (e == nullptr) throw std::invalid_argument("no closed form for " + name);
    if (m < 1) throw std::invalid_argument("codimension index must be positive");
    if (m == 1) return Integer(e->m1);
    return e->at(m);
}

std::vector<CompareRow> compare_with_formula(const std::string& name,
                                             const GradedAlgebra& alg, long max_m,
                                             const ComputeOptions& opt) {
    std::vector<CompareRow> rows;
    for (long m = 1; m <= max_m; ++m) {
        CompareRow r;
        r.m = m;
        r.formula = closed_form(name, m);
        r.computed = codimension(alg, m, opt).total;
        r.match = r.formula == r.computed;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<Integer> coarsening_delta(const GradedAlgebra& fine,
                                      const GradedAlgebra& coarse, long max_m,
                                      const ComputeOptions& opt) {
    std::vector<Integer> out;
    for (long m = 1; m <= max_m; ++m)
        out.push_back(codimension(fine, m, opt).total - codimension(coarse, m, opt).total);
    return out;
}

long distinct_count(const std::vector<GroupElement>& eta) {
    std::vector<GroupElement> v = eta;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return static_cast<long>(v.size());
}

std::vector<Rational> asymptotic_ratios(const std::vector<Integer>& cm, long q) {
    if (q < 1) throw std::invalid_argument("need a positive leading multiplicity");
    std::vector<Rational> out;
    for (std::size_t k = 0; k < cm.size(); ++k) {
        const long m = static_cast<long>(k) + 1;
        Rational denom = Rational(q) * Rational(m) * Rational(m) * pow2(m - 3);
        Rational r = Rational(cm[k]) / denom;
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

} // namespace liepi
