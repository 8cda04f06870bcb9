#include "liepi/tideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "liepi/evaluate.hpp"

namespace liepi {

bool GeneratorSet::degree_is_zero(const GroupElement& d) const {
    for (const auto& z : zero_degrees)
        if (z == d) return true;
    if (has_support_rule) {
        for (const auto& ok : allowed_support)
            if (ok == d) return false;
        return true;
    }
    return false;
}

namespace {

// fixed-first left-normed monomials over the given variables, all
// (k-1)! orders of the non-minimal ones
std::vector<LieMonomial> block_monomials(std::vector<GradedVariable> vars) {
    std::sort(vars.begin(), vars.end());
    std::vector<GradedVariable> rest(vars.begin() + 1, vars.end());
    std::vector<LieMonomial> out;
    do {
        std::vector<GradedVariable> order;
        order.push_back(vars[0]);
        for (const auto& v : rest) order.push_back(v);
        out.push_back(left_normed_vars(order));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

struct ConsequenceWalk {
    const DegreeTuple* a = nullptr;
    std::size_t m = 0;
    std::vector<GradedVariable> gvars;  // generator variables, sorted
    const MultilinearPolynomial* gen = nullptr;
    std::vector<int> phi;  // position -> block, 0 is leftover
    const std::function<bool(const MultilinearPolynomial&)>* fn = nullptr;
    bool stopped = false;

    void emit_blocks() {
        const std::size_t k = gvars.size();
        std::vector<std::vector<int>> blocks(k);
        std::vector<int> leftover;
        for (std::size_t p = 0; p < m; ++p) {
            if (phi[p] == 0)
                leftover.push_back(static_cast<int>(p) + 1);
            else
                blocks[static_cast<std::size_t>(phi[p]) - 1].push_back(static_cast<int>(p) + 1);
        }
        for (std::size_t i = 0; i < k; ++i) {
            GroupElement prod = GroupElement::identity((*a)[0].owner());
            for (int pos : blocks[i]) prod = prod.combine((*a)[static_cast<std::size_t>(pos) - 1]);
            if (!(prod == gvars[i].degree)) return;
        }

        std::vector<std::vector<LieMonomial>> choices(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<GradedVariable> bv;
            for (int pos : blocks[i]) bv.emplace_back(pos, (*a)[static_cast<std::size_t>(pos) - 1]);
            choices[i] = block_monomials(std::move(bv));
        }
        std::vector<std::size_t> pick(k, 0);
        for (;;) {
            std::map<int, LieMonomial> repl;
            for (std::size_t i = 0; i < k; ++i) repl[gvars[i].index] = choices[i][pick[i]];
            MultilinearPolynomial sub = substitute(*gen, repl);

            std::vector<int> tail = leftover;
            do {
                MultilinearPolynomial out = MultilinearPolynomial::zero();
                for (const auto& [mono, c] : sub.terms()) {
                    std::vector<LieMonomial> parts{mono};
                    for (int pos : tail)
                        parts.push_back(LieMonomial::var(
                            GradedVariable(pos, (*a)[static_cast<std::size_t>(pos) - 1])));
                    out.add(left_normed(parts), c);
                }
                if (!(*fn)(out)) {
                    stopped = true;
                    return;
                }
            } while (std::next_permutation(tail.begin(), tail.end()));

            std::size_t i = k;
            bool done = true;
            while (i > 0) {
                --i;
                if (++pick[i] < choices[i].size()) { done = false; break; }
                pick[i] = 0;
            }
            if (done) return;
        }
    }

    // assign positions to blocks in order, pruning branches that cannot
    // fill every block
    void walk(std::size_t p, std::size_t empty_blocks) {
        if (stopped) return;
        if (p == m) {
            if (empty_blocks == 0) emit_blocks();
            return;
        }
        if (m - p < empty_blocks) return;
        const std::size_t k = gvars.size();
        for (std::size_t b = 0; b <= k && !stopped; ++b) {
            phi[p] = static_cast<int>(b);
            bool first = b > 0;
            if (first)
                for (std::size_t q = 0; q < p; ++q)
                    if (phi[q] == static_cast<int>(b)) { first = false; break; }
            walk(p + 1, empty_blocks - (first ? 1 : 0));
        }
    }
};

std::vector<MultilinearPolynomial> effective_generators(const GeneratorSet& s,
                                                        const DegreeTuple& a) {
    std::vector<MultilinearPolynomial> gens = s.generators;
    const std::size_t m = a.size();
    if (m > 20) throw std::invalid_argument("degree tuple too long");
    std::vector<GroupElement> zeros;
    for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
        GroupElement prod = GroupElement::identity(a[0].owner());
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ul << i)) prod = prod.combine(a[i]);
        if (s.degree_is_zero(prod)) zeros.push_back(prod);
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
    for (const auto& d : zeros)
        gens.push_back(MultilinearPolynomial::monomial(LieMonomial::var(GradedVariable(1, d))));
    return gens;
}

// primitive, sign-normalized coordinate row; the dedup key of a consequence
IntRow canonical_row(const MultilinearPolynomial& f) {
    IntRow row = to_primitive(fixed_first_coordinates(f));
    if (!row.empty() && row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
    return row;
}

} // namespace

void for_each_consequence(const GeneratorSet& s, const DegreeTuple& a,
                          const std::function<bool(const MultilinearPolynomial&)>& fn) {
    if (a.empty()) throw std::invalid_argument("empty degree tuple");
    for (const auto& gen : effective_generators(s, a)) {
        ConsequenceWalk w;
        w.a = &a;
        w.m = a.size();
        w.gvars = gen.variables();
        if (w.gvars.size() > w.m) continue;
        w.gen = &gen;
        w.phi.assign(w.m, 0);
        w.fn = &fn;
        w.walk(0, w.gvars.size());
        if (w.stopped) return;
    }
}

std::vector<MultilinearPolynomial> multilinear_consequences(const GeneratorSet& s,
                                                            const DegreeTuple& a) {
    std::vector<MultilinearPolynomial> out;
    std::set<IntRow> seen;
    for_each_consequence(s, a, [&](const MultilinearPolynomial& f) {
        if (f.is_zero()) return true;
        if (seen.insert(canonical_row(f)).second) out.push_back(f);
        return true;
    });
    return out;
}

long consequence_dim(const GeneratorSet& s, const DegreeTuple& a) {
    long full = 1;
    for (std::size_t k = 2; k < a.size(); ++k) full *= static_cast<long>(k);
    Echelon ech;
    std::set<IntRow> seen;
    for_each_consequence(s, a, [&](const MultilinearPolynomial& f) {
        if (f.is_zero()) return true;
        IntRow row = canonical_row(f);
        if (seen.insert(row).second) ech.insert(std::move(row));
        return ech.rank() < full;
    });
    return ech.rank();
}

bool membership(const MultilinearPolynomial& f, const GeneratorSet& s) {
    if (f.is_zero()) return true;
    std::vector<GradedVariable> vars = f.variables();
    std::map<int, LieMonomial> relabel;
    DegreeTuple a;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        a.push_back(vars[i].degree);
        relabel[vars[i].index] =
            LieMonomial::var(GradedVariable(static_cast<int>(i) + 1, vars[i].degree));
    }
    MultilinearPolynomial target = substitute(f, relabel);

    Echelon ech;
    std::set<IntRow> seen;
    bool member = false;
    for_each_consequence(s, a, [&](const MultilinearPolynomial& g) {
        if (g.is_zero()) return true;
        IntRow row = canonical_row(g);
        if (seen.insert(row).second && ech.insert(std::move(row)))
            member = ech.reduce(fixed_first_coordinates(target)).empty();
        return !member;
    });
    if (!member) member = ech.reduce(fixed_first_coordinates(target)).empty();
    return member;
}

BasisReport verify_basis(const GeneratorSet& s, const GradedAlgebra& alg, long max_m,
                         const ComputeOptions& opt) {
    if (!(*s.group == *alg.group))
        throw std::invalid_argument("generator set and algebra use different groups");
    for (const auto& gen : s.generators) {
        if (gen.is_zero()) continue;
        if (!is_graded_identity(gen, alg))
            throw std::runtime_error("generator is not an identity of the algebra: " +
                                     polynomial_to_string(gen));
    }
    std::vector<GroupElement> support = alg.support();
    for (const auto& d : support)
        if (s.degree_is_zero(d))
            throw std::runtime_error("degree " + d.to_string() +
                                     " is declared zero but has a nonzero component");
    for (const auto& z : s.zero_degrees)
        if (!is_graded_identity(
                MultilinearPolynomial::monomial(LieMonomial::var(GradedVariable(1, z))), alg))
            throw std::runtime_error("degree " + z.to_string() +
                                     " is declared zero but has a nonzero component");

    std::vector<GroupElement> degrees = support;
    if (auto probe = first_element_outside(s.group, support)) degrees.push_back(*probe);

    BasisReport report;
    for (long m = 1; m <= max_m; ++m) {
        std::vector<DegreeTuple> multisets;
        {
            DegreeTuple cur;
            std::function<void(std::size_t, long)> rec = [&](std::size_t from, long left) {
                if (left == 0) {
                    multisets.push_back(cur);
                    return;
                }
                for (std::size_t i = from; i < degrees.size(); ++i) {
                    cur.push_back(degrees[i]);
                    rec(i, left - 1);
                    cur.pop_back();
                }
            };
            rec(0, m);
        }
        long full = 1;
        for (long k = 2; k < m; ++k) full *= k;
        for (const auto& tup : multisets) {
            BasisVerdict v;
            v.m = m;
            v.degrees = tup;
            v.free_dim = full;
            v.consequence_dim = liepi::consequence_dim(s, tup);
            v.algebra_dim = dim_Pma(alg, tup, opt.cap);
            v.ok = v.consequence_dim + v.algebra_dim == v.free_dim;
            if (!v.ok) report.ok = false;
            report.verdicts.push_back(std::move(v));
        }
    }
    return report;
}

} // namespace liepi
