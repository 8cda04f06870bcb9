#include "liepi/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepi {

namespace {

LieMonomial xv(int i, const GroupElement& d) {
    return LieMonomial::var(GradedVariable(i, d));
}

LieMonomial chain(const std::vector<LieMonomial>& parts) { return left_normed(parts); }

MultilinearPolynomial one_term(const LieMonomial& m) {
    return MultilinearPolynomial::monomial(m);
}

Preset make_elementary_preset(std::string name, ElementaryGrading g, long distinct) {
    Preset p;
    p.name = std::move(name);
    p.algebra = elementary_algebra(g);
    p.aliases.y_degree = GroupElement::identity(g.group);
    p.elementary = std::move(g);
    p.eta_distinct = distinct;
    return p;
}

Preset make_t2_preset(std::string name, ElementaryGrading base, long distinct) {
    Type2Spec spec(std::move(base));
    Preset p;
    p.name = std::move(name);
    p.algebra = type2_algebra(spec);
    p.aliases.y_degree = GroupElement::identity(spec.extended);
    p.t2 = std::move(spec);
    p.eta_distinct = distinct;
    return p;
}

Preset build_preset(const std::string& name) {
    if (name == "trivial3") {
        GroupPtr g = trivial_group();
        GroupElement e = GroupElement::identity(g);
        return make_elementary_preset(name, ElementaryGrading(3, g, {e, e}), 1);
    }
    if (name == "universal3") {
        GroupPtr grp = make_group({0, 0}, {"g", "h"});
        return make_elementary_preset(
            name,
            ElementaryGrading(3, grp,
                              {GroupElement::generator(grp, 0), GroupElement::generator(grp, 1)}),
            2);
    }
    if (name == "almost-universal3") {
        GroupPtr grp = make_group({0}, {"g"});
        GroupElement g = GroupElement::generator(grp, 0);
        return make_elementary_preset(name, ElementaryGrading(3, grp, {g, g.inverse()}), 2);
    }
    if (name == "canonical3") {
        GroupPtr grp = make_group({3}, {"1"});
        GroupElement one = GroupElement::generator(grp, 0);
        return make_elementary_preset(name, ElementaryGrading(3, grp, {one, one}), 1);
    }
    if (name == "canonical-free3") {
        GroupPtr grp = make_group({0}, {"g"});
        GroupElement g = GroupElement::generator(grp, 0);
        return make_elementary_preset(name, ElementaryGrading(3, grp, {g, g}), 1);
    }
    if (name == "almost-canonical3") {
        GroupPtr grp = make_group({2}, {"1"});
        GroupElement one = GroupElement::generator(grp, 0);
        Preset p = make_elementary_preset(name, ElementaryGrading(3, grp, {one, one}), 1);
        p.aliases.z_degree = one;
        return p;
    }
    if (name == "remaining3") {
        GroupPtr grp = make_group({0}, {"g"});
        GroupElement g = GroupElement::generator(grp, 0);
        Preset p = make_elementary_preset(
            name, ElementaryGrading(3, grp, {g, GroupElement::identity(grp)}), 2);
        p.aliases.z_degree = g;
        return p;
    }
    if (name == "canonical-t2") {
        GroupPtr grp = make_group({3}, {"1"});
        GroupElement one = GroupElement::generator(grp, 0);
        return make_t2_preset(name, ElementaryGrading(3, grp, {one, one}), 1);
    }
    if (name == "almost-canonical-t2") {
        GroupPtr grp = make_group({2}, {"1"});
        GroupElement one = GroupElement::generator(grp, 0);
        return make_t2_preset(name, ElementaryGrading(3, grp, {one, one}), 1);
    }
    if (name == "trivial-t2") {
        GroupPtr g = trivial_group();
        GroupElement e = GroupElement::identity(g);
        Preset p = make_t2_preset(name, ElementaryGrading(3, g, {e, e}), 1);
        p.aliases.z_degree = p.t2->t;
        return p;
    }
    if (name == "ut2-trivial") {
        GroupPtr g = trivial_group();
        return make_elementary_preset(name,
                                      ElementaryGrading(2, g, {GroupElement::identity(g)}), 1);
    }
    if (name == "ut2-graded") {
        GroupPtr grp = make_group({0}, {"g"});
        return make_elementary_preset(
            name, ElementaryGrading(2, grp, {GroupElement::generator(grp, 0)}), 1);
    }
    throw std::invalid_argument("unknown grading preset: " + name);
}

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "trivial3",     "universal3",   "almost-universal3", "canonical3",
        "canonical-free3", "almost-canonical3", "remaining3",  "canonical-t2",
        "almost-canonical-t2", "trivial-t2", "ut2-trivial",   "ut2-graded",
    };
    return names;
}

bool is_preset(const std::string& name) {
    const auto& ns = preset_names();
    return std::find(ns.begin(), ns.end(), name) != ns.end();
}

Preset get_preset(const std::string& name) { return build_preset(name); }

bool has_builtin_generators(const std::string& name) {
    static const std::vector<std::string> names = {
        "almost-universal3", "almost-canonical3", "remaining3",   "canonical3",
        "canonical-free3",   "canonical-t2",      "almost-canonical-t2",
        "trivial-t2",        "ut2-trivial",       "ut2-graded",
    };
    return std::find(names.begin(), names.end(), name) != names.end();
}

GeneratorSet builtin_generators(const std::string& name) {
    Preset p = get_preset(name);
    const GroupPtr& grp = p.algebra.group;
    GroupElement e = GroupElement::identity(grp);
    GeneratorSet s;
    s.group = grp;

    if (name == "almost-universal3") {
        GroupElement g = GroupElement::generator(grp, 0);
        GroupElement gi = g.inverse();
        s.has_support_rule = true;
        s.allowed_support = {e, g, gi};
        for (const auto& l : {g, gi}) {
            s.generators.push_back(one_term(chain({xv(1, l), xv(2, l)})));
            s.generators.push_back(one_term(chain({xv(1, e), xv(2, e), xv(3, l)})));
        }
        s.generators.push_back(one_term(LieMonomial::pair(
            LieMonomial::pair(xv(1, e), xv(2, e)), LieMonomial::pair(xv(3, e), xv(4, e)))));
        return s;
    }
    if (name == "almost-canonical3") {
        GroupElement one = GroupElement::generator(grp, 0);
        s.generators.push_back(one_term(chain({xv(1, e), xv(2, e), xv(3, one)})));
        s.generators.push_back(one_term(chain({xv(1, one), xv(2, one), xv(3, one)})));
        s.generators.push_back(one_term(LieMonomial::pair(
            LieMonomial::pair(xv(1, e), xv(2, e)), LieMonomial::pair(xv(3, e), xv(4, e)))));
        return s;
    }
    if (name == "remaining3") {
        GroupElement g = GroupElement::generator(grp, 0);
        s.has_support_rule = true;
        s.allowed_support = {e, g};
        s.generators.push_back(one_term(chain({xv(1, g), xv(2, g)})));
        s.generators.push_back(one_term(LieMonomial::pair(
            LieMonomial::pair(xv(1, e), xv(2, e)), LieMonomial::pair(xv(3, e), xv(4, e)))));
        s.generators.push_back(one_term(chain({xv(1, g), LieMonomial::pair(xv(2, e), xv(3, e)),
                                               LieMonomial::pair(xv(4, e), xv(5, e))})));
        return s;
    }
    if (name == "canonical3" || name == "canonical-free3") {
        GroupElement one = GroupElement::generator(grp, 0);
        GroupElement two = one.combine(one);
        if (name == "canonical-free3") {
            s.has_support_rule = true;
            s.allowed_support = {e, one, two};
        }
        s.generators.push_back(one_term(chain({xv(1, e), xv(2, e)})));
        s.generators.push_back(one_term(chain({xv(1, one), xv(2, two)})));
        s.generators.push_back(one_term(chain({xv(1, two), xv(2, two)})));
        return s;
    }
    if (name == "canonical-t2") {
        GroupElement one = GroupElement::generator(grp, 0);
        GroupElement t = GroupElement::generator(grp, 1);
        GroupElement two = one.combine(one);
        std::vector<GroupElement> all = {e, t, one, one.combine(t), two, two.combine(t)};
        for (const auto& l : all)
            s.generators.push_back(one_term(chain({xv(1, l), xv(2, l)})));
        s.generators.push_back(one_term(chain({xv(1, e), xv(2, t)})));
        for (const auto& l : {t, one, one.combine(t)})
            s.generators.push_back(one_term(chain({xv(1, l), xv(2, two.combine(t))})));
        MultilinearPolynomial f = MultilinearPolynomial::zero();
        f.add(chain({xv(1, one), xv(2, e), xv(3, one.combine(t))}), 2);
        f.add(chain({xv(1, one), xv(3, one.combine(t)), xv(2, e)}), -1);
        s.generators.push_back(std::move(f));
        s.has_support_rule = true;
        s.allowed_support = {e, t, one, one.combine(t), two.combine(t)};
        return s;
    }
    if (name == "almost-canonical-t2") {
        GroupElement one = GroupElement::generator(grp, 0);
        GroupElement t = GroupElement::generator(grp, 1);
        GroupElement ot = one.combine(t);
        for (const auto& l : {e, t, one, ot})
            s.generators.push_back(one_term(chain({xv(1, l), xv(2, l)})));
        MultilinearPolynomial f = MultilinearPolynomial::zero();
        f.add(chain({xv(1, one), xv(2, ot), xv(3, e)}), 1);
        f.add(chain({xv(1, one), xv(3, e), xv(2, ot)}), -2);
        s.generators.push_back(std::move(f));
        for (const auto& l : {one, t, ot})
            s.generators.push_back(one_term(chain({xv(1, e), xv(2, t), xv(3, l)})));
        for (const auto& l : {one, t, ot})
            s.generators.push_back(one_term(chain({xv(1, one), xv(2, ot), xv(3, l)})));
        return s;
    }
    if (name == "trivial-t2") {
        GroupElement t = GroupElement::generator(grp, 0);
        auto ublock = [&](int a, int b, bool tt) {
            GroupElement d = tt ? t : e;
            return LieMonomial::pair(xv(a, d), xv(b, d));
        };
        auto vblock = [&](int a, int b) { return LieMonomial::pair(xv(a, e), xv(b, t)); };
        for (bool t1 : {false, true})
            for (bool t2 : {false, true})
                s.generators.push_back(
                    one_term(LieMonomial::pair(ublock(1, 2, t1), ublock(3, 4, t2))));
        s.generators.push_back(one_term(LieMonomial::pair(vblock(1, 2), vblock(3, 4))));
        for (bool t1 : {false, true})
            s.generators.push_back(
                one_term(chain({ublock(1, 2, t1), vblock(3, 4), xv(5, t)})));
        for (bool t1 : {false, true}) {
            MultilinearPolynomial f = MultilinearPolynomial::zero();
            f.add(chain({ublock(1, 2, t1), xv(5, e), vblock(3, 4)}), 2);
            f.add(chain({ublock(1, 2, t1), vblock(3, 4), xv(5, e)}), -1);
            s.generators.push_back(std::move(f));
        }
        {
            // 2[y1,z1,z2,y2,z3] = [y1,z1,z2,z3,y2], antisymmetrized in z2, z3
            auto m = [&](int a, int b, int c, int d, int f5) {
                return chain({xv(a, e), xv(b, t), xv(c, t), xv(d, e), xv(f5, t)});
            };
            auto w = [&](int a, int b, int c, int d, int f5) {
                return chain({xv(a, e), xv(b, t), xv(c, t), xv(d, t), xv(f5, e)});
            };
            MultilinearPolynomial f = MultilinearPolynomial::zero();
            f.add(m(1, 3, 4, 2, 5), 2);
            f.add(m(1, 3, 5, 2, 4), -2);
            f.add(w(1, 3, 4, 5, 2), -1);
            f.add(w(1, 3, 5, 4, 2), 1);
            s.generators.push_back(std::move(f));
        }
        {
            // alternating sum over the orders of three t-degree variables
            MultilinearPolynomial f = MultilinearPolynomial::zero();
            int zs[3] = {2, 3, 4};
            int perm[3] = {0, 1, 2};
            std::sort(perm, perm + 3);
            do {
                std::vector<int> sigma(perm, perm + 3);
                f.add(chain({xv(1, e), xv(zs[sigma[0]], t), xv(zs[sigma[1]], t),
                             xv(zs[sigma[2]], t)}),
                      permutation_sign(sigma));
            } while (std::next_permutation(perm, perm + 3));
            s.generators.push_back(std::move(f));
        }
        return s;
    }
    if (name == "ut2-trivial") {
        s.generators.push_back(one_term(LieMonomial::pair(
            LieMonomial::pair(xv(1, e), xv(2, e)), LieMonomial::pair(xv(3, e), xv(4, e)))));
        return s;
    }
    if (name == "ut2-graded") {
        GroupElement g = GroupElement::generator(grp, 0);
        s.has_support_rule = true;
        s.allowed_support = {e, g};
        s.generators.push_back(one_term(chain({xv(1, g), xv(2, g)})));
        s.generators.push_back(one_term(chain({xv(1, e), xv(2, e)})));
        return s;
    }
    throw std::invalid_argument("no built-in generator set for " + name);
}

ResolvedGrading resolve_grading(const std::string& text) {
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.erase(trimmed.begin());
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
    ResolvedGrading out;
    if (is_preset(trimmed)) {
        Preset p = get_preset(trimmed);
        out.name = p.name;
        out.algebra = std::move(p.algebra);
        out.elementary = std::move(p.elementary);
        out.aliases = std::move(p.aliases);
        return out;
    }
    if (trimmed.rfind("ut", 0) == 0) {
        ElementaryGrading g = parse_elementary(trimmed);
        out.algebra = elementary_algebra(g);
        out.aliases.y_degree = GroupElement::identity(g.group);
        out.elementary = std::move(g);
        return out;
    }
    std::string known;
    for (const auto& n : preset_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw ParseError("unknown grading '" + trimmed + "'", {0, text.size()},
                     "use a preset (" + known + ") or ut(n; degrees) over GROUP");
}

} // namespace liepi
