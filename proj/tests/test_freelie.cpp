#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "liepi/freelie.hpp"
#include "liepi/presets.hpp"

using namespace liepi;

namespace {

GroupPtr Z() {
    static GroupPtr z = make_group({0}, {"g"});
    return z;
}

GradedVariable v0(int i) { return GradedVariable(i, GroupElement::identity(Z())); }

// random multilinear bracketing of the variables 1..m
LieMonomial random_tree(const std::vector<GradedVariable>& vars, std::mt19937& rng) {
    std::vector<LieMonomial> forest;
    for (const auto& v : vars) forest.push_back(LieMonomial::var(v));
    std::shuffle(forest.begin(), forest.end(), rng);
    while (forest.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, forest.size() - 2);
        std::size_t k = pick(rng);
        forest[k] = LieMonomial::pair(forest[k], forest[k + 1]);
        forest.erase(forest.begin() + static_cast<long>(k) + 1);
    }
    return forest[0];
}

AssocWordVector scaled(const AssocWordVector& v, const Rational& c) {
    AssocWordVector out = v;
    for (auto& [w, q] : out) q *= c;
    return out;
}

AssocWordVector sum(const AssocWordVector& a, const AssocWordVector& b) {
    AssocWordVector out = a;
    for (const auto& [w, q] : b) {
        out[w] += q;
        if (out[w] == 0) out.erase(w);
    }
    return out;
}

Integer factorial(long k) {
    Integer f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
}

// ascending degree multisets of size m over the given support
void multisets(const std::vector<GroupElement>& support, long m,
               const std::function<void(const DegreeTuple&)>& fn, DegreeTuple& cur,
               std::size_t from = 0) {
    if (static_cast<long>(cur.size()) == m) {
        fn(cur);
        return;
    }
    for (std::size_t i = from; i < support.size(); ++i) {
        cur.push_back(support[i]);
        multisets(support, m, fn, cur, i);
        cur.pop_back();
    }
}

Integer orderings(const DegreeTuple& a) {
    Integer total = factorial(static_cast<long>(a.size()));
    std::size_t i = 0;
    while (i < a.size()) {
        std::size_t j = i;
        while (j < a.size() && a[j] == a[i]) ++j;
        total /= factorial(static_cast<long>(j - i));
        i = j;
    }
    return total;
}

// sum of per-tuple family sizes weighted by multiset orderings
Integer family_total(const GradedAlgebra& alg, long m,
                     const std::function<std::vector<LieMonomial>(const DegreeTuple&)>& fam) {
    Integer total = 0;
    DegreeTuple cur;
    multisets(alg.support(), m,
              [&](const DegreeTuple& a) { total += Integer(fam(a).size()) * orderings(a); },
              cur);
    return total;
}

} // namespace

TEST_CASE("monomial structure, length and leaves") {
    LieMonomial x1 = LieMonomial::var(v0(1));
    LieMonomial x2 = LieMonomial::var(v0(2));
    LieMonomial p = LieMonomial::pair(x1, x2);
    CHECK(x1.is_leaf());
    CHECK(x1.length() == 1);
    CHECK_FALSE(p.is_leaf());
    CHECK(p.length() == 2);
    CHECK(p.left() == x1);
    CHECK(p.right() == x2);
    CHECK(p.degree().is_identity());
    CHECK(p.sorted_indices() == std::vector<int>{1, 2});
    CHECK(p.multilinear());
    CHECK_FALSE(LieMonomial::pair(x1, x1).multilinear());

    GradedVariable xg(3, GroupElement::generator(Z(), 0));
    LieMonomial q = LieMonomial::pair(p, LieMonomial::var(xg));
    CHECK(q.degree() == xg.degree);
    CHECK(q.leaves().size() == 3);
    CHECK(q.leaves()[2] == xg);
}

TEST_CASE("monomial ordering is total and stable") {
    LieMonomial x1 = LieMonomial::var(v0(1));
    LieMonomial x2 = LieMonomial::var(v0(2));
    CHECK(x1 < x2);
    CHECK(x1 < LieMonomial::pair(x1, x2));          // leaves precede pairs
    CHECK(LieMonomial::pair(x1, x2) < LieMonomial::pair(x2, x1));
    CHECK(x1.compare(x1) == 0);
}

TEST_CASE("left_normed brackets fold to the left") {
    LieMonomial x1 = LieMonomial::var(v0(1));
    LieMonomial x2 = LieMonomial::var(v0(2));
    LieMonomial x3 = LieMonomial::var(v0(3));
    LieMonomial m = left_normed({x1, x2, x3});
    CHECK(m == LieMonomial::pair(LieMonomial::pair(x1, x2), x3));
    CHECK(left_normed({x1}) == x1);
    CHECK(left_normed_vars({v0(1), v0(2), v0(3)}) == m);
}

TEST_CASE("substitution replaces leaves by monomials") {
    LieMonomial m = left_normed_vars({v0(1), v0(2)});
    LieMonomial inner = left_normed_vars({v0(3), v0(4)});
    LieMonomial out = substitute(m, {{2, inner}});
    CHECK(out == LieMonomial::pair(LieMonomial::var(v0(1)), inner));
    CHECK(out.length() == 3);
    CHECK(substitute(m, {}) == m);
}

TEST_CASE("polynomials cancel and validate their variables") {
    LieMonomial m = left_normed_vars({v0(1), v0(2)});
    MultilinearPolynomial f = MultilinearPolynomial::monomial(m, Rational(2));
    f.add(m, Rational(-2));
    CHECK(f.is_zero());

    MultilinearPolynomial g = MultilinearPolynomial::monomial(m);
    g += MultilinearPolynomial::monomial(left_normed_vars({v0(2), v0(1)}), Rational(1, 2));
    CHECK(g.terms().size() == 2);
    CHECK(g.variables().size() == 2);
    CHECK(g.is_multilinear());

    // monomials over different variable sets cannot share a polynomial
    MultilinearPolynomial bad = MultilinearPolynomial::monomial(m);
    bad += MultilinearPolynomial::monomial(left_normed_vars({v0(1), v0(3)}));
    CHECK_THROWS(bad.variables());
    CHECK_FALSE(bad.is_multilinear());

    // same index with conflicting degree labels
    GradedVariable conflicting(2, GroupElement::generator(Z(), 0));
    MultilinearPolynomial mixed = MultilinearPolynomial::monomial(m);
    mixed += MultilinearPolynomial::monomial(
        left_normed({LieMonomial::var(v0(1)), LieMonomial::var(conflicting)}));
    CHECK_THROWS(mixed.variables());
}

TEST_CASE("associative expansion of a bracket") {
    LieMonomial m = left_normed_vars({v0(1), v0(2)});
    AssocWordVector v = expand_to_associative(m);
    REQUIRE(v.size() == 2);
    CHECK(v[AssocWord{1, 2}] == 1);
    CHECK(v[AssocWord{2, 1}] == -1);

    // [[x1,x2],x3] expands to 4 words
    AssocWordVector w = expand_to_associative(left_normed_vars({v0(1), v0(2), v0(3)}));
    REQUIRE(w.size() == 4);
    CHECK(w[AssocWord{1, 2, 3}] == 1);
    CHECK(w[AssocWord{3, 2, 1}] == 1);
    CHECK(w[AssocWord{2, 1, 3}] == -1);
    CHECK(w[AssocWord{3, 1, 2}] == -1);
}

TEST_CASE("Jacobi and antisymmetry hold in the associative envelope") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GradedVariable> vars;
        int m = 2 + trial % 5;
        for (int i = 1; i <= m + 2; ++i)
            vars.emplace_back(i, GroupElement::generator(Z(), 0, deg(rng)));
        std::vector<GradedVariable> va(vars.begin(), vars.begin() + m / 2 + 1);
        std::vector<GradedVariable> vb(vars.begin() + m / 2 + 1, vars.begin() + m + 1);
        std::vector<GradedVariable> vc(vars.begin() + m + 1, vars.end());
        LieMonomial a = random_tree(va, rng);
        LieMonomial b = random_tree(vb, rng);
        LieMonomial c = random_tree(vc, rng);

        AssocWordVector ab = expand_to_associative(LieMonomial::pair(a, b));
        AssocWordVector ba = expand_to_associative(LieMonomial::pair(b, a));
        CHECK(sum(ab, ba).empty());

        AssocWordVector jac = sum(
            sum(expand_to_associative(LieMonomial::pair(LieMonomial::pair(a, b), c)),
                expand_to_associative(LieMonomial::pair(LieMonomial::pair(b, c), a))),
            expand_to_associative(LieMonomial::pair(LieMonomial::pair(c, a), b)));
        CHECK(jac.empty());
        CHECK(scaled(ab, Rational(-1)) == ba);
    }
}

TEST_CASE("fixed-first coordinates index the left-normed basis") {
    // [x1, x3, x2] is the second monomial in the sigma order
    MultilinearPolynomial f =
        MultilinearPolynomial::monomial(left_normed_vars({v0(1), v0(3), v0(2)}));
    SparseRow r = fixed_first_coordinates(f);
    REQUIRE(r.size() == 1);
    CHECK(r[0].first == 1);
    CHECK(r[0].second == 1);

    // [x2, x1, x3] = -[x1, x2, x3] + ... ; check against the expansion route
    MultilinearPolynomial g =
        MultilinearPolynomial::monomial(left_normed_vars({v0(2), v0(1), v0(3)}));
    SparseRow s = fixed_first_coordinates(g);
    SparseRow s2 = fixed_first_coordinates(expand_to_associative(g), {1, 2, 3});
    CHECK(s == s2);

    CHECK(lex_rank({1, 2, 3}, {1, 2, 3}) == 0);
    CHECK(lex_rank({1, 3, 2}, {1, 2, 3}) == 1);
    CHECK(lex_rank({3, 2, 1}, {1, 2, 3}) == 5);
}

TEST_CASE("permutation action relabels one alias class") {
    MultilinearPolynomial f =
        MultilinearPolynomial::monomial(left_normed_vars({v0(1), v0(2), v0(3)}));
    // swap the class members 2 and 3
    MultilinearPolynomial g = permutation_action({1, 0}, f, {2, 3});
    MultilinearPolynomial expected =
        MultilinearPolynomial::monomial(left_normed_vars({v0(1), v0(3), v0(2)}));
    CHECK((g - expected).is_zero());
    // identity permutation
    CHECK((permutation_action({0, 1}, f, {2, 3}) - f).is_zero());

    CHECK(permutation_sign({0, 1, 2}) == 1);
    CHECK(permutation_sign({1, 0, 2}) == -1);
    CHECK(permutation_sign({1, 2, 0}) == 1);
}

TEST_CASE("1-convenient family lists one monomial per non-minimal lead") {
    for (int m = 2; m <= 6; ++m) {
        std::vector<GradedVariable> vars;
        for (int i = 1; i <= m; ++i) vars.push_back(v0(i));
        auto fam = family_1_convenient(vars);
        CHECK(fam.size() == static_cast<std::size_t>(m - 1));
        for (const auto& mono : fam) {
            CHECK(mono.length() == m);
            CHECK(mono.multilinear());
            CHECK_FALSE(mono.leaves().front().index == 1); // lead is never minimal
        }
    }
}

TEST_CASE("kind1 and kind2 family sizes") {
    GroupPtr z2 = make_group({2}, {"1"});
    GroupElement one = GroupElement::generator(z2, 0);
    GroupElement e = GroupElement::identity(z2);
    std::vector<std::size_t> expect1 = {1, 5, 17, 49};
    std::vector<std::size_t> expect2 = {4, 12, 32, 80};
    for (int m = 4; m <= 7; ++m) {
        std::vector<GradedVariable> ys;
        for (int i = 2; i <= m; ++i) ys.emplace_back(i, e);
        CHECK(family_kind1(GradedVariable(1, one), ys).size() == expect1[m - 4]);
        CHECK(family_kind2(GradedVariable(1, one), ys).size() == expect2[m - 4]);
        // closed-form shapes behind the counts
        CHECK(expect1[m - 4] == static_cast<std::size_t>((m - 4) * (1 << (m - 3)) + 1));
        CHECK(expect2[m - 4] == static_cast<std::size_t>((m - 2) * (1 << (m - 3))));
    }
}

TEST_CASE("per-tuple families count up to the codimension sequences") {
    auto check_family =
        [&](const char* preset, const std::vector<long>& expect,
            const std::function<std::vector<LieMonomial>(const Preset&, const DegreeTuple&)>&
                fam) {
            Preset p = get_preset(preset);
            CAPTURE(preset);
            for (long m = 1; m <= static_cast<long>(expect.size()); ++m)
                CHECK(family_total(p.algebra, m,
                                   [&](const DegreeTuple& a) { return fam(p, a); }) ==
                      expect[m - 1]);
        };

    check_family("almost-universal3", {3, 7, 20, 59}, [](const Preset& p, const DegreeTuple& a) {
        return family_au_basis(a, GroupElement::generator(p.algebra.group, 0));
    });
    check_family("canonical3", {3, 5, 12, 32}, [](const Preset& p, const DegreeTuple& a) {
        return family_canonical_basis(a, GroupElement::generator(p.algebra.group, 0));
    });
    // over Z the support {0, g, 2g} carries the same counts as its image in Z_3,
    // and the family constructor wants a generator of order 3
    GroupPtr z3 = make_group({3}, {"1"});
    check_family("canonical-free3", {3, 5, 12, 32}, [&](const Preset&, const DegreeTuple& a) {
        DegreeTuple b;
        for (const auto& d : a) b.push_back(GroupElement(z3, {d.coords()[0] % 3}));
        return family_canonical_basis(b, GroupElement::generator(z3, 0));
    });
    check_family("almost-canonical3", {2, 4, 11, 31},
                 [](const Preset&, const DegreeTuple& a) { return family_ac_convenient(a); });
    check_family("remaining3", {2, 3, 8, 27}, [](const Preset& p, const DegreeTuple& a) {
        return family_remaining_basis(a, GroupElement::generator(p.algebra.group, 0));
    });
    check_family("canonical-t2", {5, 12, 39, 116}, [](const Preset& p, const DegreeTuple& a) {
        return family_t2_basis(a, p.t2->embed(GroupElement::generator(p.t2->base.group, 0)),
                               p.t2->t);
    });
    check_family("almost-canonical-t2", {4, 12, 39, 116},
                 [](const Preset& p, const DegreeTuple& a) {
                     return family_t2_basis(
                         a, p.t2->embed(GroupElement::generator(p.t2->base.group, 0)), p.t2->t);
                 });
}

TEST_CASE("printer emits canonical bracket notation") {
    GradedVariable xg(2, GroupElement::generator(Z(), 0));
    LieMonomial m =
        left_normed({LieMonomial::var(v0(1)), LieMonomial::var(xg), LieMonomial::var(v0(3))});
    CHECK(monomial_to_string(m) == "[x1^(0),x2^(g),x3^(0)]");

    MultilinearPolynomial f = MultilinearPolynomial::monomial(m, Rational(2));
    f.add(left_normed({LieMonomial::var(v0(1)), LieMonomial::var(v0(3)), LieMonomial::var(xg)}),
          Rational(-1, 2));
    std::string s = polynomial_to_string(f);
    CHECK(s == "2*[x1^(0),x2^(g),x3^(0)] - 1/2*[x1^(0),x3^(0),x2^(g)]");
}
