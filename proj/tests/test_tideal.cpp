#include "doctest.h"

#include <set>
#include <string>

#include "liepi/evaluate.hpp"
#include "liepi/presets.hpp"
#include "liepi/tideal.hpp"

using namespace liepi;

namespace {

MultilinearPolynomial mono(const std::vector<GradedVariable>& vars) {
    return MultilinearPolynomial::monomial(left_normed_vars(vars));
}

} // namespace

TEST_CASE("degree_is_zero honours explicit degrees and the co-finite rule") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    GroupElement e = GroupElement::identity(z);

    GeneratorSet s;
    s.group = z;
    s.zero_degrees = {g.power(2)};
    CHECK(s.degree_is_zero(g.power(2)));
    CHECK_FALSE(s.degree_is_zero(g));
    CHECK_FALSE(s.degree_is_zero(e));

    s.has_support_rule = true;
    s.allowed_support = {e, g};
    CHECK(s.degree_is_zero(g.power(2)));
    CHECK(s.degree_is_zero(g.inverse()));
    CHECK_FALSE(s.degree_is_zero(g));
    CHECK_FALSE(s.degree_is_zero(e));
}

TEST_CASE("consequences of a single square relation") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    GroupElement e = GroupElement::identity(z);

    GeneratorSet s;
    s.group = z;
    s.generators.push_back(mono({GradedVariable(1, g), GradedVariable(2, g)}));

    DegreeTuple gg = {g, g};
    auto cons = multilinear_consequences(s, gg);
    std::set<std::string> seen;
    for (const auto& f : cons) seen.insert(polynomial_to_string(f));
    // substitution positions are reported in ascending variable order, so the
    // single block assignment shows up once
    CHECK(seen.count("[x1^(g),x2^(g)]") == 1);
    CHECK(consequence_dim(s, gg) == 1);

    // no consequences when the degrees cannot match
    DegreeTuple ge = {g, e};
    CHECK(multilinear_consequences(s, ge).empty());
    CHECK(consequence_dim(s, ge) == 0);
    CHECK_FALSE(membership(mono({GradedVariable(1, g), GradedVariable(2, e)}), s));

    // the callback form stops on demand
    int calls = 0;
    for_each_consequence(s, gg, [&](const MultilinearPolynomial&) {
        ++calls;
        return false;
    });
    CHECK(calls == 1);
}

TEST_CASE("membership is closed under reordering and scaling") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    GeneratorSet s;
    s.group = z;
    s.generators.push_back(mono({GradedVariable(1, g), GradedVariable(2, g)}));

    MultilinearPolynomial f = mono({GradedVariable(2, g), GradedVariable(1, g)});
    f *= Rational(-7, 3);
    CHECK(membership(f, s));
    CHECK(membership(MultilinearPolynomial::zero(), s));
}

TEST_CASE("declared zero degrees kill every containing bracket") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    GroupElement e = GroupElement::identity(z);
    GeneratorSet s;
    s.group = z;
    s.zero_degrees = {g};
    DegreeTuple a = {e, g};
    CHECK(consequence_dim(s, a) == 1); // the whole 1-dimensional component
    CHECK(membership(mono({GradedVariable(1, e), GradedVariable(2, g)}), s));
}

TEST_CASE("consequences of identity sets remain identities") {
    Preset p = get_preset("ut2-graded");
    GeneratorSet s = builtin_generators("ut2-graded");
    GroupElement g = GroupElement::generator(p.algebra.group, 0);
    GroupElement e = GroupElement::identity(p.algebra.group);
    for (const DegreeTuple& a :
         {DegreeTuple{e, g}, DegreeTuple{e, e, g}, DegreeTuple{g, g, e}}) {
        for (const auto& f : multilinear_consequences(s, a)) {
            CAPTURE(polynomial_to_string(f));
            CHECK(is_graded_identity(f, p.algebra));
        }
    }
}

TEST_CASE("verify_basis accepts the published sets on small degrees") {
    for (const char* name : {"canonical3", "ut2-graded", "ut2-trivial"}) {
        CAPTURE(name);
        Preset p = get_preset(name);
        BasisReport rep = verify_basis(builtin_generators(name), p.algebra, 4);
        CHECK(rep.ok);
        for (const auto& v : rep.verdicts) {
            CHECK(v.ok);
            CHECK(v.consequence_dim + v.algebra_dim == v.free_dim);
        }
    }
}

TEST_CASE("verify_basis probes one degree outside a finite support rule") {
    Preset p = get_preset("ut2-graded");
    BasisReport rep = verify_basis(builtin_generators("ut2-graded"), p.algebra, 3);
    GroupElement gi = GroupElement::generator(p.algebra.group, 0).inverse();
    bool probe_seen = false;
    for (const auto& v : rep.verdicts)
        for (const auto& d : v.degrees)
            if (d == gi) probe_seen = true;
    CHECK(probe_seen);
}

TEST_CASE("verify_basis rejects generators that are not identities") {
    Preset p = get_preset("ut2-graded");
    GroupElement g = GroupElement::generator(p.algebra.group, 0);
    GroupElement e = GroupElement::identity(p.algebra.group);
    GeneratorSet s;
    s.group = p.algebra.group;
    s.generators.push_back(mono({GradedVariable(1, e), GradedVariable(2, g)}));
    CHECK_THROWS(verify_basis(s, p.algebra, 2));
}

TEST_CASE("the published almost-universal set misses two degree-3 components") {
    Preset p = get_preset("almost-universal3");
    GroupElement g = GroupElement::generator(p.algebra.group, 0);
    GroupElement gi = g.inverse();
    GeneratorSet s = builtin_generators("almost-universal3");

    BasisReport rep = verify_basis(s, p.algebra, 3);
    CHECK_FALSE(rep.ok);
    std::vector<DegreeTuple> failing;
    for (const auto& v : rep.verdicts)
        if (!v.ok) failing.push_back(v.degrees);
    REQUIRE(failing.size() == 2);
    CHECK(failing[0] == DegreeTuple{gi, gi, g});
    CHECK(failing[1] == DegreeTuple{gi, g, g});

    // concrete identity outside the generated ideal
    MultilinearPolynomial w =
        mono({GradedVariable(1, gi), GradedVariable(3, g), GradedVariable(2, gi)});
    CHECK(is_graded_identity(w, p.algebra));
    CHECK_FALSE(membership(w, s));
}

TEST_CASE("two extra mixed relations repair the almost-universal set") {
    Preset p = get_preset("almost-universal3");
    GroupElement g = GroupElement::generator(p.algebra.group, 0);
    GroupElement gi = g.inverse();
    GeneratorSet s = builtin_generators("almost-universal3");
    for (const auto& last : {g, gi}) {
        MultilinearPolynomial extra =
            mono({GradedVariable(1, g), GradedVariable(2, gi), GradedVariable(3, last)});
        CHECK(is_graded_identity(extra, p.algebra));
        s.generators.push_back(extra);
    }

    BasisReport rep = verify_basis(s, p.algebra, 4);
    CHECK(rep.ok);
    MultilinearPolynomial w =
        mono({GradedVariable(1, gi), GradedVariable(3, g), GradedVariable(2, gi)});
    CHECK(membership(w, s));
}
