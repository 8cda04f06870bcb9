#include "doctest.h"

#include "liepi/evaluate.hpp"
#include "liepi/presets.hpp"
#include "liepi/spaces.hpp"

using namespace liepi;

namespace {

UpperTriMatrix eval_poly(const MultilinearPolynomial& f, const Assignment& a, int n) {
    UpperTriMatrix total(n);
    for (const auto& [m, c] : f.terms()) total += c * evaluate_monomial(m, a);
    return total;
}

} // namespace

TEST_CASE("monomial evaluation brackets the assigned matrices") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    GroupElement e = GroupElement::identity(z);

    Assignment a;
    a.set(1, UpperTriMatrix::unit(3, 1, 2), g);
    a.set(2, UpperTriMatrix::unit(3, 2, 3), e);

    LieMonomial m = left_normed_vars({GradedVariable(1, g), GradedVariable(2, e)});
    CHECK(evaluate_monomial(m, a) == UpperTriMatrix::unit(3, 1, 3));

    // wrong degree on the assignment
    Assignment bad;
    bad.set(1, UpperTriMatrix::unit(3, 1, 2), e);
    bad.set(2, UpperTriMatrix::unit(3, 2, 3), e);
    CHECK_THROWS(evaluate_monomial(m, bad));

    // unassigned variable
    Assignment missing;
    missing.set(1, UpperTriMatrix::unit(3, 1, 2), g);
    CHECK_THROWS(evaluate_monomial(m, missing));
}

TEST_CASE("known identities and non-identities") {
    Preset u2 = get_preset("ut2-graded");
    GroupElement g = GroupElement::generator(u2.algebra.group, 0);
    GroupElement e = GroupElement::identity(u2.algebra.group);

    MultilinearPolynomial sq = MultilinearPolynomial::monomial(
        left_normed_vars({GradedVariable(1, g), GradedVariable(2, g)}));
    CHECK(is_graded_identity(sq, u2.algebra));

    MultilinearPolynomial diag = MultilinearPolynomial::monomial(
        left_normed_vars({GradedVariable(1, e), GradedVariable(2, e)}));
    CHECK(is_graded_identity(diag, u2.algebra));

    MultilinearPolynomial mixed = MultilinearPolynomial::monomial(
        left_normed_vars({GradedVariable(1, e), GradedVariable(2, g)}));
    CHECK_FALSE(is_graded_identity(mixed, u2.algebra));

    // the derived algebra of ut(2) is the line through e12, so [[x1,x2],[x3,x4]]
    // vanishes there; in ut(3) it is the strictly upper triangle, where
    // [e12,e23] = e13 keeps the same monomial alive
    Preset t2 = get_preset("ut2-trivial");
    GroupElement e2 = GroupElement::identity(t2.algebra.group);
    auto metab_on = [](const GroupElement& id) {
        return MultilinearPolynomial::monomial(LieMonomial::pair(
            left_normed_vars({GradedVariable(1, id), GradedVariable(2, id)}),
            left_normed_vars({GradedVariable(3, id), GradedVariable(4, id)})));
    };
    CHECK(is_graded_identity(metab_on(e2), t2.algebra));

    Preset t3 = get_preset("trivial3");
    GroupElement e3 = GroupElement::identity(t3.algebra.group);
    CHECK_FALSE(is_graded_identity(metab_on(e3), t3.algebra));

    MultilinearPolynomial comm = MultilinearPolynomial::monomial(
        left_normed_vars({GradedVariable(1, e3), GradedVariable(2, e3)}));
    CHECK_FALSE(is_graded_identity(comm, t3.algebra));
}

TEST_CASE("check_identity returns a verifiable witness") {
    Preset t3 = get_preset("trivial3");
    GroupElement e3 = GroupElement::identity(t3.algebra.group);
    MultilinearPolynomial comm = MultilinearPolynomial::monomial(
        left_normed_vars({GradedVariable(1, e3), GradedVariable(2, e3)}));

    IdentityVerdict v = check_identity(comm, t3.algebra);
    REQUIRE_FALSE(v.identity);
    REQUIRE(v.witness.size() == 2);
    Assignment a;
    for (const auto& [var, pos] : v.witness) {
        REQUIRE(pos >= 0);
        REQUIRE(pos < t3.algebra.dim());
        a.set(var, t3.algebra.basis[pos].first, t3.algebra.basis[pos].second);
    }
    CHECK_FALSE(eval_poly(comm, a, t3.algebra.n).is_zero());

    IdentityVerdict ok = check_identity(MultilinearPolynomial::zero(), t3.algebra);
    CHECK(ok.identity);
    CHECK(ok.witness.empty());
}

TEST_CASE("degrees outside the support are vacuous identities") {
    Preset u2 = get_preset("ut2-graded");
    GroupElement g = GroupElement::generator(u2.algebra.group, 0);
    MultilinearPolynomial f = MultilinearPolynomial::monomial(
        left_normed_vars({GradedVariable(1, g.power(7)), GradedVariable(2, g)}));
    CHECK(is_graded_identity(f, u2.algebra));
}

TEST_CASE("evaluation matrix ranks match the component dimension") {
    Preset p = get_preset("universal3");
    GroupElement g = GroupElement::generator(p.algebra.group, 0);
    GroupElement e = GroupElement::identity(p.algebra.group);

    DegreeTuple a = {e, g, e};
    auto span = spanning_monomials(a);
    REQUIRE(span.size() == 2);
    RationalMatrix m = evaluation_matrix(span, a, p.algebra);
    CHECK(m.rows() == 2);
    CHECK(m.rank() == dim_Pma(p.algebra, a));
    CHECK(m.rank() == spanning_rank(p.algebra, a));

    // twice for the memoized path
    CHECK(spanning_rank(p.algebra, a) == spanning_rank(p.algebra, a));
}

TEST_CASE("spanning rank agrees with the matrix route on every small tuple") {
    for (const char* name : {"almost-universal3", "canonical-t2"}) {
        Preset p = get_preset(name);
        CAPTURE(name);
        auto support = p.algebra.support();
        for (const auto& d1 : support)
            for (const auto& d2 : support)
                for (const auto& d3 : support) {
                    DegreeTuple a = {d1, d2, d3};
                    long direct =
                        evaluation_matrix(spanning_monomials(a), a, p.algebra).rank();
                    CHECK(spanning_rank(p.algebra, a) == direct);
                }
    }
}

TEST_CASE("entry cap aborts oversized evaluations") {
    Preset p = get_preset("trivial3");
    GroupElement e = GroupElement::identity(p.algebra.group);
    DegreeTuple a(5, e);
    CHECK_THROWS_AS(spanning_rank(p.algebra, a, 3), CapExceeded);
    try {
        evaluation_matrix(spanning_monomials(a), a, p.algebra, 3);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& ex) {
        CHECK(ex.cap == 3);
    }
}

TEST_CASE("algebra content hash separates the presets") {
    std::uint64_t h1 = algebra_content_hash(get_preset("canonical3").algebra);
    std::uint64_t h2 = algebra_content_hash(get_preset("almost-canonical3").algebra);
    std::uint64_t h3 = algebra_content_hash(get_preset("canonical3").algebra);
    CHECK(h1 != h2);
    CHECK(h1 == h3);
}
