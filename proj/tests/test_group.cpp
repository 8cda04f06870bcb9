#include "doctest.h"

#include <set>

#include "liepi/group.hpp"

using namespace liepi;

TEST_CASE("group construction and printing") {
    CHECK(trivial_group()->to_string() == "1");
    CHECK(make_group({0}, {"g"})->to_string() == "Z{g}");
    CHECK(make_group({0, 0}, {"g", "h"})->to_string() == "ZxZ{g,h}");
    CHECK(make_group({3}, {"1"})->to_string() == "Z3{1}");
    CHECK(make_group({3, 2}, {"1", "t"})->to_string() == "Z3xZ2{1,t}");

    GroupPtr g = make_group({4, 0});
    CHECK(g->free_rank() == 1);
    CHECK(g->torsion() == std::vector<long>{4});
    CHECK_FALSE(g->is_finite());
    CHECK(make_group({2, 3})->size() == 6);
    CHECK(trivial_group()->is_trivial());
    CHECK(trivial_group()->size() == 1);

    CHECK(make_group({0}, {"g"})->factor_named("g") == std::size_t{0});
    CHECK_FALSE(make_group({0}, {"g"})->factor_named("h").has_value());

    CHECK_THROWS(make_group({1}));
    CHECK_THROWS(make_group({-2}));
    CHECK_THROWS(make_group({0, 0}, {"g"}));
    CHECK_THROWS(make_group({0, 0}, {"g", "g"}));
}

TEST_CASE("element arithmetic reduces modulo torsion") {
    GroupPtr z3 = make_group({3}, {"1"});
    GroupElement one = GroupElement::generator(z3, 0);
    GroupElement two = one.combine(one);
    CHECK(two.coords() == std::vector<long>{2});
    CHECK(one.combine(two).is_identity());
    CHECK(two.combine(two) == one);
    CHECK(one.inverse() == two);
    CHECK(one.power(5) == two);
    CHECK(one.power(0).is_identity());
    CHECK(one.power(-1) == two);
    CHECK(one.order() == 3);
    CHECK(GroupElement::identity(z3).order() == 1);

    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    CHECK_FALSE(g.order().has_value());
    CHECK(g.power(3) == GroupElement::generator(z, 0, 3));
    CHECK((g * g.inverse()).is_identity());
    CHECK(g.inverse().to_string() == "-g");
    CHECK(g.power(2).to_string() == "2g");

    GroupPtr zz = make_group({0, 0}, {"g", "h"});
    GroupElement gh =
        GroupElement::generator(zz, 0).combine(GroupElement::generator(zz, 1));
    CHECK(gh.to_string() == "g+h");
    CHECK(GroupElement::identity(zz).to_string() == "0");
}

TEST_CASE("elements of different groups do not mix") {
    GroupPtr a = make_group({0}, {"g"});
    GroupPtr b = make_group({2}, {"t"});
    GroupElement ga = GroupElement::generator(a, 0);
    GroupElement tb = GroupElement::generator(b, 0);
    CHECK_THROWS(ga.combine(tb));
    CHECK(ga != tb);
}

TEST_CASE("element order is lexicographic on coordinates") {
    GroupPtr zz = make_group({0, 0}, {"g", "h"});
    GroupElement g = GroupElement::generator(zz, 0);
    GroupElement h = GroupElement::generator(zz, 1);
    CHECK(h < g);          // (0,1) < (1,0)
    CHECK(g < g.combine(h));
    CHECK(g.inverse() < h);
    CHECK_FALSE(g < g);
}

TEST_CASE("reverse_sequence") {
    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    GroupElement e = GroupElement::identity(z);
    std::vector<GroupElement> seq = {g, e, g.inverse()};
    std::vector<GroupElement> rev = reverse_sequence(seq);
    REQUIRE(rev.size() == 3);
    CHECK(rev[0] == g.inverse());
    CHECK(rev[1] == e);
    CHECK(rev[2] == g);
}

TEST_CASE("element stream enumerates without repetition") {
    GroupPtr z3 = make_group({3}, {"1"});
    ElementStream s3(z3);
    CHECK(s3.next().to_string() == "0");
    CHECK(s3.next().to_string() == "1");
    CHECK(s3.next().to_string() == "2");

    GroupPtr z = make_group({0}, {"g"});
    ElementStream sz(z);
    CHECK(sz.next().to_string() == "0");
    CHECK(sz.next().to_string() == "-g");
    CHECK(sz.next().to_string() == "g");
    CHECK(sz.next().to_string() == "-2g");
    CHECK(sz.next().to_string() == "2g");

    GroupPtr zz = make_group({0, 2}, {"g", "t"});
    ElementStream s(zz);
    std::set<std::vector<long>> seen;
    for (int i = 0; i < 10; ++i) seen.insert(s.next().coords());
    CHECK(seen.size() == 10);
}

TEST_CASE("first_element_outside finds a probe degree") {
    GroupPtr z2 = make_group({2}, {"t"});
    GroupElement e = GroupElement::identity(z2);
    GroupElement t = GroupElement::generator(z2, 0);
    CHECK(first_element_outside(z2, {e}) == t);
    CHECK_FALSE(first_element_outside(z2, {e, t}).has_value());

    GroupPtr z = make_group({0}, {"g"});
    GroupElement g = GroupElement::generator(z, 0);
    auto probe = first_element_outside(z, {GroupElement::identity(z), g, g.inverse()});
    REQUIRE(probe.has_value());
    CHECK(probe->to_string() == "-2g");
}

TEST_CASE("hashing separates distinct elements") {
    GroupPtr zz = make_group({0, 0}, {"g", "h"});
    Fnv a, b;
    GroupElement::generator(zz, 0).hash_into(a);
    GroupElement::generator(zz, 1).hash_into(b);
    CHECK(a.h != b.h);
}
