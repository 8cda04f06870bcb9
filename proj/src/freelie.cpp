#include "liepi/freelie.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liepi {

GradedVariable::GradedVariable(int idx, GroupElement deg)
    : index(idx), degree(std::move(deg)) {
    if (index < 1)
        throw std::invalid_argument("variable index must be positive");
}

bool GradedVariable::operator==(const GradedVariable& o) const {
    return index == o.index && degree == o.degree;
}

bool GradedVariable::operator<(const GradedVariable& o) const {
    if (index != o.index)
        return index < o.index;
    return degree < o.degree;
}

struct LieMonomial::Node {
    GradedVariable v;
    std::shared_ptr<const Node> left, right;
    GroupElement degree;
    int length = 1;
};

LieMonomial::LieMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

LieMonomial LieMonomial::var(const GradedVariable& v) {
    auto n = std::make_shared<Node>();
    n->v = v;
    n->degree = v.degree;
    n->length = 1;
    return LieMonomial(std::move(n));
}

LieMonomial LieMonomial::pair(const LieMonomial& l, const LieMonomial& r) {
    if (l.empty() || r.empty())
        throw std::invalid_argument("bracket of an empty monomial");
    auto n = std::make_shared<Node>();
    n->left = l.node_;
    n->right = r.node_;
    n->degree = l.degree() * r.degree();
    n->length = l.length() + r.length();
    return LieMonomial(std::move(n));
}

bool LieMonomial::is_leaf() const {
    if (empty())
        throw std::logic_error("empty monomial");
    return node_->left == nullptr;
}

const GradedVariable& LieMonomial::leaf() const {
    if (!is_leaf())
        throw std::logic_error("not a leaf");
    return node_->v;
}

LieMonomial LieMonomial::left() const {
    if (is_leaf())
        throw std::logic_error("leaf has no factors");
    return LieMonomial(node_->left);
}

LieMonomial LieMonomial::right() const {
    if (is_leaf())
        throw std::logic_error("leaf has no factors");
    return LieMonomial(node_->right);
}

const GroupElement& LieMonomial::degree() const {
    if (empty())
        throw std::logic_error("empty monomial");
    return node_->degree;
}

int LieMonomial::length() const { return empty() ? 0 : node_->length; }

void LieMonomial::collect_leaves(std::vector<GradedVariable>& out) const {
    if (empty())
        return;
    if (is_leaf()) {
        out.push_back(node_->v);
        return;
    }
    left().collect_leaves(out);
    right().collect_leaves(out);
}

std::vector<GradedVariable> LieMonomial::leaves() const {
    std::vector<GradedVariable> out;
    out.reserve(length());
    collect_leaves(out);
    return out;
}

std::vector<int> LieMonomial::sorted_indices() const {
    std::vector<int> idx;
    for (const auto& v : leaves())
        idx.push_back(v.index);
    std::sort(idx.begin(), idx.end());
    return idx;
}

bool LieMonomial::multilinear() const {
    auto idx = sorted_indices();
    return std::adjacent_find(idx.begin(), idx.end()) == idx.end();
}

int LieMonomial::compare(const LieMonomial& o) const {
    if (empty() || o.empty())
        return (node_ != nullptr) - (o.node_ != nullptr);
    bool la = is_leaf(), lb = o.is_leaf();
    if (la != lb)
        return la ? -1 : 1;
    if (la) {
        if (node_->v.index != o.node_->v.index)
            return node_->v.index < o.node_->v.index ? -1 : 1;
        if (node_->v.degree == o.node_->v.degree)
            return 0;
        return node_->v.degree < o.node_->v.degree ? -1 : 1;
    }
    int c = left().compare(o.left());
    if (c != 0)
        return c;
    return right().compare(o.right());
}

LieMonomial left_normed(const std::vector<LieMonomial>& parts) {
    if (parts.empty())
        throw std::invalid_argument("left-normed bracket of nothing");
    LieMonomial acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = LieMonomial::pair(acc, parts[i]);
    return acc;
}

LieMonomial left_normed_vars(const std::vector<GradedVariable>& vars) {
    std::vector<LieMonomial> parts;
    parts.reserve(vars.size());
    for (const auto& v : vars)
        parts.push_back(LieMonomial::var(v));
    return left_normed(parts);
}

LieMonomial substitute(const LieMonomial& m, const std::map<int, LieMonomial>& repl) {
    if (m.is_leaf()) {
        auto it = repl.find(m.leaf().index);
        return it == repl.end() ? m : it->second;
    }
    return LieMonomial::pair(substitute(m.left(), repl), substitute(m.right(), repl));
}

MultilinearPolynomial MultilinearPolynomial::zero() { return {}; }

MultilinearPolynomial MultilinearPolynomial::monomial(const LieMonomial& m,
                                                      const Rational& c) {
    MultilinearPolynomial f;
    f.add(m, c);
    return f;
}

void MultilinearPolynomial::add(const LieMonomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& o) {
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& o) {
    for (const auto& [m, c] : o.terms_)
        add(m, -c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

std::vector<GradedVariable> MultilinearPolynomial::variables() const {
    if (terms_.empty())
        throw std::logic_error("zero polynomial has no variable list");
    std::vector<GradedVariable> ref;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto vs = m.leaves();
        std::sort(vs.begin(), vs.end());
        for (std::size_t i = 1; i < vs.size(); ++i)
            if (vs[i].index == vs[i - 1].index)
                throw std::invalid_argument("repeated variable index in a monomial");
        if (first) {
            ref = std::move(vs);
            first = false;
        } else if (vs != ref) {
            throw std::invalid_argument("monomials disagree on the variable set");
        }
    }
    return ref;
}

bool MultilinearPolynomial::is_multilinear() const {
    try {
        variables();
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) {
    return a += b;
}

MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) {
    return a -= b;
}

MultilinearPolynomial operator*(const Rational& c, MultilinearPolynomial a) {
    return a *= c;
}

MultilinearPolynomial bracket(const MultilinearPolynomial& a,
                              const MultilinearPolynomial& b) {
    MultilinearPolynomial out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add(LieMonomial::pair(ma, mb), ca * cb);
    return out;
}

MultilinearPolynomial substitute(const MultilinearPolynomial& f,
                                 const std::map<int, LieMonomial>& repl) {
    MultilinearPolynomial out;
    for (const auto& [m, c] : f.terms())
        out.add(substitute(m, repl), c);
    return out;
}

static AssocWordVector concat(const AssocWordVector& a, const AssocWordVector& b) {
    AssocWordVector out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            AssocWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Rational& slot = out[w];
            slot += ca * cb;
            if (slot == 0)
                out.erase(w);
        }
    return out;
}

AssocWordVector expand_to_associative(const LieMonomial& m) {
    if (!m.multilinear())
        throw std::invalid_argument("expansion needs distinct variable indices");
    if (m.is_leaf())
        return {{{m.leaf().index}, 1}};
    AssocWordVector l = expand_to_associative(m.left());
    AssocWordVector r = expand_to_associative(m.right());
    AssocWordVector out = concat(l, r);
    for (auto& [w, c] : concat(r, l)) {
        Rational& slot = out[w];
        slot -= c;
        if (slot == 0)
            out.erase(w);
    }
    return out;
}

AssocWordVector expand_to_associative(const MultilinearPolynomial& f) {
    AssocWordVector out;
    for (const auto& [m, c] : f.terms())
        for (const auto& [w, cw] : expand_to_associative(m)) {
            Rational& slot = out[w];
            slot += c * cw;
            if (slot == 0)
                out.erase(w);
        }
    return out;
}

long lex_rank(const std::vector<int>& word, const std::vector<int>& sorted_alphabet) {
    if (word.size() != sorted_alphabet.size())
        throw std::invalid_argument("word length mismatch");
    std::vector<int> rest = sorted_alphabet;
    long rank = 0;
    for (int x : word) {
        auto it = std::find(rest.begin(), rest.end(), x);
        if (it == rest.end())
            throw std::invalid_argument("word uses a letter outside the alphabet");
        long pos = it - rest.begin();
        long f = 1; // (|rest| - 1)!
        for (std::size_t k = 2; k < rest.size(); ++k)
            f *= static_cast<long>(k);
        rank += pos * f;
        rest.erase(it);
    }
    return rank;
}

SparseRow fixed_first_coordinates(const AssocWordVector& v,
                                  const std::vector<int>& sorted_vars) {
    if (sorted_vars.empty())
        throw std::invalid_argument("no variables");
    SparseRow out;
    int first = sorted_vars.front();
    std::vector<int> rest(sorted_vars.begin() + 1, sorted_vars.end());
    std::vector<std::pair<long, Rational>> entries;
    for (const auto& [w, c] : v) {
        if (w.empty() || w.front() != first)
            continue;
        std::vector<int> tail(w.begin() + 1, w.end());
        entries.emplace_back(rest.empty() ? 0 : lex_rank(tail, rest), c);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& e : entries)
        out.push_back(std::move(e));
    return out;
}

SparseRow fixed_first_coordinates(const MultilinearPolynomial& f) {
    auto vars = f.variables();
    std::vector<int> idx;
    for (const auto& v : vars)
        idx.push_back(v.index);
    return fixed_first_coordinates(expand_to_associative(f), idx);
}

int permutation_sign(const std::vector<int>& sigma) {
    int inv = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

static LieMonomial relabel(const LieMonomial& m, const std::map<int, int>& to) {
    if (m.is_leaf()) {
        auto it = to.find(m.leaf().index);
        if (it == to.end())
            return m;
        return LieMonomial::var(GradedVariable(it->second, m.leaf().degree));
    }
    return LieMonomial::pair(relabel(m.left(), to), relabel(m.right(), to));
}

MultilinearPolynomial permutation_action(const std::vector<int>& sigma,
                                         const MultilinearPolynomial& f,
                                         const std::vector<int>& class_indices) {
    std::size_t k = class_indices.size();
    if (sigma.size() != k)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(k, false);
    for (int s : sigma) {
        if (s < 0 || static_cast<std::size_t>(s) >= k || seen[s])
            throw std::invalid_argument("not a permutation");
        seen[s] = true;
    }
    auto vars = f.variables();
    GroupElement class_degree;
    bool have_degree = false;
    std::set<int> cls(class_indices.begin(), class_indices.end());
    if (cls.size() != k)
        throw std::invalid_argument("repeated class index");
    for (const auto& v : vars)
        if (cls.count(v.index)) {
            if (!have_degree) {
                class_degree = v.degree;
                have_degree = true;
            } else if (v.degree != class_degree) {
                throw std::invalid_argument("alias class mixes degrees");
            }
        }
    std::map<int, int> to;
    for (std::size_t i = 0; i < k; ++i)
        to[class_indices[i]] = class_indices[sigma[i]];
    MultilinearPolynomial out;
    for (const auto& [m, c] : f.terms())
        out.add(relabel(m, to), c);
    return out;
}

std::vector<LieMonomial> family_1_convenient(const std::vector<GradedVariable>& vars) {
    if (vars.size() < 2)
        throw std::invalid_argument("1-convenient monomials need at least 2 variables");
    std::vector<GradedVariable> v = vars;
    std::sort(v.begin(), v.end());
    std::vector<LieMonomial> out;
    for (std::size_t k = 1; k < v.size(); ++k) {
        std::vector<GradedVariable> order;
        order.push_back(v[k]);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (j != k)
                order.push_back(v[j]);
        out.push_back(left_normed_vars(order));
    }
    return out;
}

std::vector<LieMonomial> family_kind1(const GradedVariable& z,
                                      const std::vector<GradedVariable>& ys) {
    std::vector<GradedVariable> y = ys;
    std::sort(y.begin(), y.end());
    int n = static_cast<int>(y.size()); // y_1..y_n, monomial length n+1
    std::vector<LieMonomial> out;
    for (int i = 2; i <= n - 1; ++i) {
        for (int l = i + 1; l <= n; ++l) {
            std::vector<int> rest;
            for (int r = i + 1; r <= n; ++r)
                if (r != l)
                    rest.push_back(r);
            int nr = static_cast<int>(rest.size());
            for (long mask = 0; mask < (1L << nr); ++mask) {
                std::vector<LieMonomial> parts;
                parts.push_back(LieMonomial::var(z));
                for (int p = 1; p < i; ++p)
                    parts.push_back(LieMonomial::var(y[p - 1]));
                for (int b = 0; b < nr; ++b)
                    if (mask & (1L << b))
                        parts.push_back(LieMonomial::var(y[rest[b] - 1]));
                parts.push_back(LieMonomial::pair(LieMonomial::var(y[i - 1]),
                                                  LieMonomial::var(y[l - 1])));
                for (int b = 0; b < nr; ++b)
                    if (!(mask & (1L << b)))
                        parts.push_back(LieMonomial::var(y[rest[b] - 1]));
                out.push_back(left_normed(parts));
            }
        }
    }
    return out;
}

std::vector<LieMonomial> family_kind2(const GradedVariable& z,
                                      const std::vector<GradedVariable>& ys) {
    std::vector<GradedVariable> y = ys;
    std::sort(y.begin(), y.end());
    int n = static_cast<int>(y.size());
    std::vector<LieMonomial> out;
    if (n < 2)
        return out;
    int others = n - 1; // y_2..y_n
    for (long mask = 1; mask < (1L << others); ++mask) {
        std::vector<int> inside, outside;
        for (int b = 0; b < others; ++b)
            (mask & (1L << b) ? inside : outside).push_back(b + 2);
        for (int fpos : inside) {
            std::vector<GradedVariable> head;
            head.push_back(y[fpos - 1]);
            head.push_back(y[0]);
            for (int p : inside)
                if (p != fpos)
                    head.push_back(y[p - 1]);
            std::vector<LieMonomial> parts;
            parts.push_back(left_normed_vars(head));
            parts.push_back(LieMonomial::var(z));
            for (int p : outside)
                parts.push_back(LieMonomial::var(y[p - 1]));
            out.push_back(left_normed(parts));
        }
    }
    return out;
}

namespace {

struct TupleSplit {
    std::vector<GradedVariable> all;
    std::map<std::vector<long>, std::vector<GradedVariable>> by_degree;
};

TupleSplit split_tuple(const DegreeTuple& a) {
    TupleSplit s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        GradedVariable v(static_cast<int>(i) + 1, a[i]);
        s.all.push_back(v);
        s.by_degree[a[i].coords()].push_back(v);
    }
    return s;
}

std::vector<GradedVariable> bucket(const TupleSplit& s, const GroupElement& d) {
    auto it = s.by_degree.find(d.coords());
    return it == s.by_degree.end() ? std::vector<GradedVariable>{} : it->second;
}

// [lead, tail...] with the tail ascending
LieMonomial lead_then(const GradedVariable& lead, std::vector<GradedVariable> tail) {
    std::sort(tail.begin(), tail.end());
    std::vector<GradedVariable> order{lead};
    order.insert(order.end(), tail.begin(), tail.end());
    return left_normed_vars(order);
}

// splits of `pool` into (left asc, right asc) over all subsets; mask bit set
// means the variable goes left
void two_tail_splits(const std::vector<GradedVariable>& pool,
                     const std::function<void(const std::vector<GradedVariable>&,
                                              const std::vector<GradedVariable>&)>& fn) {
    int n = static_cast<int>(pool.size());
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<GradedVariable> l, r;
        for (int b = 0; b < n; ++b)
            (mask & (1L << b) ? l : r).push_back(pool[b]);
        fn(l, r);
    }
}

} // namespace

std::vector<LieMonomial> family_au_basis(const DegreeTuple& a, const GroupElement& g) {
    if (g.order().value_or(3) < 3)
        throw std::invalid_argument("the grading needs an element of order at least 3");
    GroupElement one = GroupElement::identity(g.owner());
    GroupElement ginv = g.inverse();
    TupleSplit s = split_tuple(a);
    auto ys = bucket(s, one);
    auto zs = bucket(s, g);
    auto ws = bucket(s, ginv);
    if (ys.size() + zs.size() + ws.size() != a.size())
        return {};
    std::size_t m = a.size();
    if (m == 1)
        return {LieMonomial::var(s.all[0])};
    std::vector<LieMonomial> out;
    if (zs.empty() && ws.empty())
        return family_1_convenient(ys);
    if (zs.size() + ws.size() == 1) {
        const GradedVariable& lead = zs.empty() ? ws[0] : zs[0];
        return {lead_then(lead, ys)};
    }
    if (zs.size() == 1 && ws.size() == 1) {
        two_tail_splits(ys, [&](const auto& l, const auto& r) {
            LieMonomial m1 = lead_then(zs[0], l);
            LieMonomial m2 = lead_then(ws[0], r);
            out.push_back(LieMonomial::pair(m1, m2));
        });
        return out;
    }
    return {};
}

std::vector<LieMonomial> family_canonical_basis(const DegreeTuple& a,
                                                const GroupElement& one) {
    if (one.order() != std::optional<long>(3))
        throw std::invalid_argument("the grading group element must have order 3");
    GroupElement zero = GroupElement::identity(one.owner());
    GroupElement two = one * one;
    TupleSplit s = split_tuple(a);
    auto ys = bucket(s, zero);
    auto ones = bucket(s, one);
    auto twos = bucket(s, two);
    if (ys.size() + ones.size() + twos.size() != a.size())
        return {};
    if (a.size() == 1)
        return {LieMonomial::var(s.all[0])};
    std::vector<LieMonomial> out;
    if (ones.size() + twos.size() == 1) {
        const GradedVariable& lead = ones.empty() ? twos[0] : ones[0];
        return {lead_then(lead, ys)};
    }
    if (ones.size() == 2 && twos.empty()) {
        two_tail_splits(ys, [&](const auto& l, const auto& r) {
            std::vector<GradedVariable> order{ones[0]};
            order.insert(order.end(), l.begin(), l.end());
            order.push_back(ones[1]);
            order.insert(order.end(), r.begin(), r.end());
            out.push_back(left_normed_vars(order));
        });
        return out;
    }
    return {};
}

std::vector<LieMonomial> family_ac_convenient(const DegreeTuple& a) {
    TupleSplit s = split_tuple(a);
    if (a.empty())
        return {};
    GroupElement zero = GroupElement::identity(a[0].owner());
    auto ys = bucket(s, zero);
    std::vector<GradedVariable> zs;
    for (const auto& v : s.all)
        if (!v.degree.is_identity())
            zs.push_back(v);
    if (a.size() == 1)
        return {LieMonomial::var(s.all[0])};
    std::vector<LieMonomial> out;
    if (zs.empty())
        return family_1_convenient(ys);
    if (zs.size() == 1)
        return {lead_then(zs[0], ys)};
    if (zs.size() == 2) {
        two_tail_splits(ys, [&](const auto& l, const auto& r) {
            out.push_back(LieMonomial::pair(lead_then(zs[0], l), lead_then(zs[1], r)));
        });
        return out;
    }
    return {};
}

std::vector<LieMonomial> family_remaining_basis(const DegreeTuple& a,
                                                const GroupElement& g) {
    if (g.is_identity())
        throw std::invalid_argument("the grading degree must be nontrivial");
    GroupElement zero = GroupElement::identity(g.owner());
    TupleSplit s = split_tuple(a);
    auto ys = bucket(s, zero);
    auto zs = bucket(s, g);
    if (ys.size() + zs.size() != a.size())
        return {};
    if (a.size() == 1)
        return {LieMonomial::var(s.all[0])};
    if (zs.empty())
        return family_1_convenient(ys);
    if (zs.size() != 1)
        return {};
    std::vector<LieMonomial> out;
    out.push_back(lead_then(zs[0], ys));
    for (auto& m : family_kind1(zs[0], ys))
        out.push_back(std::move(m));
    for (auto& m : family_kind2(zs[0], ys))
        out.push_back(std::move(m));
    return out;
}

std::vector<LieMonomial> family_t2_basis(const DegreeTuple& a, const GroupElement& one,
                                         const GroupElement& t) {
    long o = one.order().value_or(0);
    if (o != 2 && o != 3)
        throw std::invalid_argument("base element must have order 2 or 3");
    if (t.order() != std::optional<long>(2))
        throw std::invalid_argument("t must have order 2");
    GroupElement zero = GroupElement::identity(one.owner());
    GroupElement one_t = one * t;
    GroupElement two_t = one * one * t;
    TupleSplit s = split_tuple(a);
    auto zeros = bucket(s, zero);
    auto ts = bucket(s, t);
    auto ones = bucket(s, one);
    auto onets = bucket(s, one_t);
    auto twots = o == 3 ? bucket(s, two_t) : std::vector<GradedVariable>{};
    std::size_t classified =
        zeros.size() + ts.size() + ones.size() + onets.size() + twots.size();
    if (classified != a.size())
        return {}; // an entry outside the support, e.g. bare degree 2
    if (a.size() == 1)
        return {LieMonomial::var(s.all[0])};

    std::size_t c = ones.size() + onets.size();

    // mixed tail: zeros ascending, then degree-t variables ascending
    auto mid = [&](std::vector<GradedVariable> head_tail) {
        std::vector<GradedVariable> order = std::move(head_tail);
        order.insert(order.end(), zeros.begin(), zeros.end());
        order.insert(order.end(), ts.begin(), ts.end());
        return order;
    };

    if (o == 3) {
        // leading 2+t admits only trivial-degree followers
        if (!twots.empty()) {
            if (twots.size() == 1 && c == 0 && ts.empty())
                return {lead_then(twots[0], zeros)};
            return {};
        }
    } else {
        // with a base of order 2 the collapsed 2+t equals t itself
        if (c == 0) {
            if (ts.size() == 1)
                return {lead_then(ts[0], zeros)};
            return {};
        }
    }
    if (c == 0)
        return {};
    if (c == 1) {
        const GradedVariable& lead = ones.empty() ? onets[0] : ones[0];
        std::vector<GradedVariable> order = mid({lead});
        return {left_normed_vars(order)};
    }
    if (c == 2) {
        bool odd = ts.size() % 2 == 1;
        GradedVariable first(1, zero), last(1, zero);
        if (ones.size() == 1 && onets.size() == 1) {
            if (odd)
                return {};
            first = ones[0];
            last = onets[0];
        } else if (ones.size() == 2 || onets.size() == 2) {
            if (!odd)
                return {};
            const auto& pairv = ones.size() == 2 ? ones : onets;
            first = pairv[0];
            last = pairv[1];
        }
        std::vector<GradedVariable> order = mid({first});
        order.push_back(last);
        return {left_normed_vars(order)};
    }
    return {};
}

std::vector<LieMonomial> family_monom_special(const DegreeTuple& a,
                                              const GroupElement& t) {
    GroupElement zero = GroupElement::identity(t.owner());
    TupleSplit s = split_tuple(a);
    auto ys = bucket(s, zero);
    auto zs = bucket(s, t);
    if (ys.size() + zs.size() != a.size() || ys.empty() || a.size() < 2)
        return {};
    std::vector<LieMonomial> out;
    const GradedVariable& ymin = ys[0];
    for (const auto& partner : s.all) {
        if (partner.index == ymin.index)
            continue;
        LieMonomial w = LieMonomial::pair(LieMonomial::var(ymin),
                                          LieMonomial::var(partner));
        std::vector<LieMonomial> parts{w};
        for (const auto& z : zs)
            if (z.index != partner.index)
                parts.push_back(LieMonomial::var(z));
        for (const auto& y : ys)
            if (y.index != ymin.index && y.index != partner.index)
                parts.push_back(LieMonomial::var(y));
        out.push_back(left_normed(parts));
    }
    return out;
}

static void print_monomial(std::ostringstream& out, const LieMonomial& m) {
    if (m.is_leaf()) {
        out << "x" << m.leaf().index << "^(" << m.leaf().degree.to_string() << ")";
        return;
    }
    // flatten the left spine so left-normed chains print as one bracket
    std::vector<LieMonomial> spine;
    LieMonomial cur = m;
    while (!cur.is_leaf()) {
        spine.push_back(cur.right());
        cur = cur.left();
    }
    spine.push_back(cur);
    out << "[";
    for (std::size_t i = spine.size(); i-- > 0;) {
        print_monomial(out, spine[i]);
        if (i > 0)
            out << ",";
    }
    out << "]";
}

std::string monomial_to_string(const LieMonomial& m) {
    std::ostringstream out;
    print_monomial(out, m);
    return out.str();
}

std::string polynomial_to_string(const MultilinearPolynomial& f) {
    if (f.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational v = c;
        if (!first)
            out << (v > 0 ? " + " : " - ");
        else if (v < 0)
            out << "-";
        if (first)
            first = false;
        Rational av = abs(v);
        if (av != 1)
            out << av.get_str() << "*";
        print_monomial(out, m);
    }
    return out.str();
}

} // namespace liepi
