#include "doctest.h"

#include <map>
#include <random>

#include "liepi/matrixalg.hpp"
#include "liepi/presets.hpp"

using namespace liepi;

namespace {

UpperTriMatrix random_upper(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-3, 3);
    UpperTriMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) m.set(i, j, Rational(num(rng)));
    return m;
}

std::map<std::string, long> component_dims(const GradedAlgebra& a) {
    std::map<std::string, long> out;
    for (const auto& [m, d] : a.basis) out[d.to_string()]++;
    return out;
}

} // namespace

TEST_CASE("matrix units multiply like e_ij e_jk = e_ik") {
    UpperTriMatrix e12 = UpperTriMatrix::unit(3, 1, 2);
    UpperTriMatrix e23 = UpperTriMatrix::unit(3, 2, 3);
    CHECK(mul(e12, e23) == UpperTriMatrix::unit(3, 1, 3));
    CHECK(mul(e23, e12).is_zero());
    CHECK(bracket(e12, e23) == UpperTriMatrix::unit(3, 1, 3));
    CHECK(bracket(e23, e12) == Rational(-1) * UpperTriMatrix::unit(3, 1, 3));

    UpperTriMatrix e11 = UpperTriMatrix::unit(3, 1, 1);
    CHECK(bracket(e11, e12) == e12);
    CHECK(bracket(e11, e11).is_zero());

    // reads below the diagonal see the stored zero; writes there are rejected
    CHECK(e12.at(2, 1) == Rational(0));
    CHECK_THROWS(e12.set(2, 1, Rational(1)));
    CHECK_THROWS(UpperTriMatrix::unit(3, 0, 1));
}

TEST_CASE("matrix arithmetic and printing") {
    UpperTriMatrix m(3);
    m.set(1, 1, Rational(1));
    m.set(3, 3, Rational(-2));
    CHECK(m.to_string() == "e11-2e33");
    m += UpperTriMatrix::unit(3, 1, 1);
    CHECK(m.at(1, 1) == 2);
    m *= Rational(1, 2);
    CHECK(m.to_string() == "e11-e33");
    CHECK(UpperTriMatrix(3).to_string() == "0");
    CHECK(UpperTriMatrix(3).is_zero());

    SparseRow flat = m.flatten();
    REQUIRE(flat.size() == 2);
    CHECK(flat[0].first == 0);             // entry (1,1) comes first
    CHECK(flat[1].second == Rational(-1)); // entry (3,3) comes last
    CHECK(UpperTriMatrix::upper_entry_count(3) == 6);
}

TEST_CASE("flip involution is an anti-automorphism") {
    CHECK(flip_involution(UpperTriMatrix::unit(3, 1, 2)) == UpperTriMatrix::unit(3, 2, 3));
    CHECK(flip_involution(UpperTriMatrix::unit(3, 1, 3)) == UpperTriMatrix::unit(3, 1, 3));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        UpperTriMatrix a = random_upper(4, rng);
        UpperTriMatrix b = random_upper(4, rng);
        CHECK(flip_involution(mul(a, b)) == mul(flip_involution(b), flip_involution(a)));
        CHECK(flip_involution(flip_involution(a)) == a);
    }
}

TEST_CASE("elementary grading degrees multiply along the superdiagonal") {
    GroupPtr zz = make_group({0, 0}, {"g", "h"});
    GroupElement g = GroupElement::generator(zz, 0);
    GroupElement h = GroupElement::generator(zz, 1);
    ElementaryGrading eg(3, zz, {g, h});
    CHECK(eg.unit_degree(1, 1).is_identity());
    CHECK(eg.unit_degree(1, 2) == g);
    CHECK(eg.unit_degree(2, 3) == h);
    CHECK(eg.unit_degree(1, 3) == g.combine(h));
    CHECK_THROWS(ElementaryGrading(3, zz, {g}));
}

TEST_CASE("elementary_isomorphic accepts the reversed degree sequence") {
    GroupPtr zz = make_group({0, 0}, {"g", "h"});
    GroupElement g = GroupElement::generator(zz, 0);
    GroupElement h = GroupElement::generator(zz, 1);
    ElementaryGrading gh(3, zz, {g, h});
    ElementaryGrading hg(3, zz, {h, g});
    CHECK(elementary_isomorphic(gh, gh));
    CHECK(elementary_isomorphic(gh, hg));
    ElementaryGrading gg(3, zz, {g, g});
    CHECK_FALSE(elementary_isomorphic(gh, gg));
}

TEST_CASE("component dimensions of the built-in gradings") {
    auto dims = [&](const char* name) { return component_dims(get_preset(name).algebra); };
    CHECK(dims("trivial3") == std::map<std::string, long>{{"0", 6}});
    CHECK(dims("universal3") ==
          std::map<std::string, long>{{"0", 3}, {"g", 1}, {"h", 1}, {"g+h", 1}});
    CHECK(dims("almost-universal3") ==
          std::map<std::string, long>{{"-g", 1}, {"0", 4}, {"g", 1}});
    CHECK(dims("canonical3") == std::map<std::string, long>{{"0", 3}, {"1", 2}, {"2", 1}});
    CHECK(dims("canonical-free3") ==
          std::map<std::string, long>{{"0", 3}, {"g", 2}, {"2g", 1}});
    CHECK(dims("almost-canonical3") == std::map<std::string, long>{{"0", 4}, {"1", 2}});
    CHECK(dims("remaining3") == std::map<std::string, long>{{"0", 4}, {"g", 2}});
    CHECK(dims("canonical-t2") ==
          std::map<std::string, long>{{"0", 1}, {"t", 2}, {"1", 1}, {"1+t", 1}, {"2+t", 1}});
    CHECK(dims("almost-canonical-t2") ==
          std::map<std::string, long>{{"0", 1}, {"t", 3}, {"1", 1}, {"1+t", 1}});
    CHECK(dims("trivial-t2") == std::map<std::string, long>{{"0", 2}, {"t", 4}});
    CHECK(dims("ut2-trivial") == std::map<std::string, long>{{"0", 3}});
    CHECK(dims("ut2-graded") == std::map<std::string, long>{{"0", 2}, {"g", 1}});
}

TEST_CASE("every built-in algebra is a consistent grading") {
    for (const auto& name : preset_names()) {
        Preset p = get_preset(name);
        CAPTURE(name);
        GradingCheck chk = verify_grading(p.algebra);
        CHECK(chk.ok);
        CHECK(chk.message.empty());
        CHECK(p.algebra.dim() == p.algebra.n * (p.algebra.n + 1) / 2);
    }
}

TEST_CASE("component lookup returns basis indices") {
    GradedAlgebra a = get_preset("ut2-graded").algebra;
    GroupElement g = GroupElement::generator(a.group, 0);
    CHECK(a.component(g).size() == 1);
    CHECK(a.component(GroupElement::identity(a.group)).size() == 2);
    CHECK(a.component(g.power(5)).empty());
    CHECK(a.support().size() == 2);
}

TEST_CASE("type 2 basis stays integral and respects the involution degree") {
    for (const char* name : {"canonical-t2", "almost-canonical-t2", "trivial-t2"}) {
        Preset p = get_preset(name);
        CAPTURE(name);
        REQUIRE(p.t2.has_value());
        const GroupElement& t = p.t2->t;
        for (const auto& [m, d] : p.algebra.basis) {
            for (int i = 1; i <= m.n(); ++i)
                for (int j = i; j <= m.n(); ++j)
                    CHECK(m.at(i, j).get_den() == 1);
            // t-component of the degree matches the symmetry under the flip
            bool symmetric = flip_involution(m) == m;
            bool skew = flip_involution(m) == Rational(-1) * m;
            CHECK((symmetric || skew));
            long tcoord = d.coords().back();
            CHECK(tcoord == (symmetric ? 1 : 0));
            (void)t;
        }
    }
}

TEST_CASE("type 2 embedding adds no involution letter") {
    Preset p = get_preset("canonical-t2");
    GroupElement one = GroupElement::generator(p.t2->base.group, 0);
    GroupElement embedded = p.t2->embed(one);
    CHECK(embedded.coords() == std::vector<long>{1, 0});
    CHECK(p.t2->t.coords() == std::vector<long>{0, 1});
}

TEST_CASE("strict_upper_units lists the off-diagonal units of a degree") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    ElementaryGrading eg(3, z, {g, g.inverse()});
    auto ug = strict_upper_units(eg, g);
    REQUIRE(ug.size() == 1);
    CHECK(ug[0] == std::pair<int, int>{1, 2});
    auto u0 = strict_upper_units(eg, GroupElement::identity(z));
    REQUIRE(u0.size() == 1);
    CHECK(u0[0] == std::pair<int, int>{1, 3});
    CHECK(strict_upper_units(eg, g.power(2)).empty());
}
