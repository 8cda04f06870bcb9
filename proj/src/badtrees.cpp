#include "liepi/badtrees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "liepi/evaluate.hpp"

namespace liepi {

struct DegreeTree::Node {
    GroupElement degree;  // leaves only
    std::shared_ptr<const Node> left, right;
    int length = 1;
};

DegreeTree::DegreeTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

DegreeTree DegreeTree::leaf(const GroupElement& d) {
    auto n = std::make_shared<Node>();
    n->degree = d;
    return DegreeTree(std::move(n));
}

DegreeTree DegreeTree::pair(const DegreeTree& l, const DegreeTree& r) {
    if (l.empty() || r.empty()) throw std::invalid_argument("empty subtree");
    auto n = std::make_shared<Node>();
    n->left = l.node_;
    n->right = r.node_;
    n->length = l.node_->length + r.node_->length;
    return DegreeTree(std::move(n));
}

bool DegreeTree::is_leaf() const {
    if (empty()) throw std::logic_error("empty tree");
    return node_->left == nullptr;
}

const GroupElement& DegreeTree::leaf_degree() const {
    if (!is_leaf()) throw std::logic_error("not a leaf");
    return node_->degree;
}

DegreeTree DegreeTree::left() const {
    if (is_leaf()) throw std::logic_error("leaf has no subtrees");
    return DegreeTree(node_->left);
}

DegreeTree DegreeTree::right() const {
    if (is_leaf()) throw std::logic_error("leaf has no subtrees");
    return DegreeTree(node_->right);
}

int DegreeTree::length() const {
    if (empty()) throw std::logic_error("empty tree");
    return node_->length;
}

std::vector<GroupElement> DegreeTree::leaves() const {
    std::vector<GroupElement> out;
    std::function<void(const Node*)> rec = [&](const Node* n) {
        if (n->left == nullptr) {
            out.push_back(n->degree);
            return;
        }
        rec(n->left.get());
        rec(n->right.get());
    };
    rec(node_.get());
    return out;
}

std::string DegreeTree::to_string() const {
    if (is_leaf()) return leaf_degree().to_string();
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

namespace {

LieMonomial surrogate(const DegreeTree& t, int& next) {
    if (t.is_leaf()) {
        const GroupElement& d = t.leaf_degree();
        if (d.is_identity()) {
            GradedVariable a(next++, d);
            GradedVariable b(next++, d);
            return LieMonomial::pair(LieMonomial::var(a), LieMonomial::var(b));
        }
        return LieMonomial::var(GradedVariable(next++, d));
    }
    LieMonomial l = surrogate(t.left(), next);
    LieMonomial r = surrogate(t.right(), next);
    return LieMonomial::pair(l, r);
}

UpperTriMatrix eval_tree(const DegreeTree& t, const ElementaryGrading& g,
                         const std::vector<std::pair<int, int>>& units, std::size_t& pos) {
    if (t.is_leaf()) {
        auto [i, j] = units[pos++];
        return UpperTriMatrix::unit(g.n, i, j);
    }
    UpperTriMatrix l = eval_tree(t.left(), g, units, pos);
    UpperTriMatrix r = eval_tree(t.right(), g, units, pos);
    return bracket(l, r);
}

} // namespace

MultilinearPolynomial f_mu(const DegreeTree& mu) {
    int next = 1;
    return MultilinearPolynomial::monomial(surrogate(mu, next));
}

namespace {

UpperTriMatrix eval_tree_mat(const DegreeTree& t,
                             const std::vector<UpperTriMatrix>& values,
                             std::size_t& pos) {
    if (t.is_leaf()) return values[pos++];
    UpperTriMatrix l = eval_tree_mat(t.left(), values, pos);
    UpperTriMatrix r = eval_tree_mat(t.right(), values, pos);
    return bracket(l, r);
}

/* Whether f_mu(t) is a graded identity, evaluated on the tree itself:
 * a nonzero-degree leaf runs over the component basis, a trivial-degree
 * leaf over the nonzero brackets of component basis pairs (the value
 * set of its [y, y'] surrogate, up to sign).  An empty value set makes
 * the monomial vanish identically.
 */
bool mu_is_identity(const DegreeTree& mu, const GradedAlgebra& alg) {
    std::vector<GroupElement> degs = mu.leaves();
    std::vector<std::vector<UpperTriMatrix>> choices(degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i) {
        std::vector<int> comp = alg.component(degs[i]);
        if (degs[i].is_identity()) {
            for (std::size_t a = 0; a < comp.size(); ++a)
                for (std::size_t b = a + 1; b < comp.size(); ++b) {
                    UpperTriMatrix w =
                        bracket(alg.basis[static_cast<std::size_t>(comp[a])].first,
                                alg.basis[static_cast<std::size_t>(comp[b])].first);
                    if (!w.is_zero()) choices[i].push_back(std::move(w));
                }
        } else {
            for (int b : comp)
                choices[i].push_back(alg.basis[static_cast<std::size_t>(b)].first);
        }
        if (choices[i].empty()) return true;
    }
    std::vector<std::size_t> pick(degs.size(), 0);
    for (;;) {
        std::vector<UpperTriMatrix> values;
        values.reserve(degs.size());
        for (std::size_t i = 0; i < degs.size(); ++i)
            values.push_back(choices[i][pick[i]]);
        std::size_t pos = 0;
        if (!eval_tree_mat(mu, values, pos).is_zero()) return false;
        std::size_t i = degs.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) { done = false; break; }
            pick[i] = 0;
        }
        if (done) return true;
    }
}

} // namespace

std::optional<std::vector<std::pair<int, int>>> tree_witness(const DegreeTree& mu,
                                                             const ElementaryGrading& g) {
    std::vector<GroupElement> degs = mu.leaves();
    std::vector<std::vector<std::pair<int, int>>> choices(degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i) {
        choices[i] = strict_upper_units(g, degs[i]);
        if (choices[i].empty()) return std::nullopt;
    }
    std::vector<std::size_t> pick(degs.size(), 0);
    for (;;) {
        std::vector<std::pair<int, int>> units(degs.size());
        for (std::size_t i = 0; i < degs.size(); ++i) units[i] = choices[i][pick[i]];
        std::size_t pos = 0;
        if (!eval_tree(mu, g, units, pos).is_zero()) return units;
        std::size_t i = degs.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) { done = false; break; }
            pick[i] = 0;
        }
        if (done) return std::nullopt;
    }
}

bool tree_is_good(const DegreeTree& mu, const ElementaryGrading& g) {
    return tree_witness(mu, g).has_value();
}

bool sequence_is_good(const std::vector<GroupElement>& seq, const ElementaryGrading& g) {
    if (seq.empty()) throw std::invalid_argument("empty degree sequence");
    DegreeTree t = DegreeTree::leaf(seq[0]);
    for (std::size_t i = 1; i < seq.size(); ++i)
        t = DegreeTree::pair(t, DegreeTree::leaf(seq[i]));
    return tree_is_good(t, g);
}

bool sequence_is_good_assoc(const std::vector<GroupElement>& seq,
                            const ElementaryGrading& g) {
    if (seq.empty()) throw std::invalid_argument("empty degree sequence");
    // reachable spans (i, j) of nonzero unit products of a prefix
    std::vector<std::pair<int, int>> reach = strict_upper_units(g, seq[0]);
    for (std::size_t k = 1; k < seq.size() && !reach.empty(); ++k) {
        std::vector<std::pair<int, int>> units = strict_upper_units(g, seq[k]);
        std::vector<std::pair<int, int>> next;
        for (const auto& [i, j] : reach)
            for (const auto& [a, b] : units)
                if (a == j) next.emplace_back(i, b);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reach = std::move(next);
    }
    return !reach.empty();
}

std::vector<DegreeTree> enumerate_trees(const std::vector<GroupElement>& alphabet,
                                        int maxlen) {
    if (maxlen < 1) throw std::invalid_argument("maxlen must be positive");
    std::vector<std::vector<DegreeTree>> by_len(static_cast<std::size_t>(maxlen) + 1);
    for (const auto& d : alphabet) by_len[1].push_back(DegreeTree::leaf(d));
    for (int l = 2; l <= maxlen; ++l)
        for (int s = 1; s < l; ++s)
            for (const auto& lt : by_len[static_cast<std::size_t>(s)])
                for (const auto& rt : by_len[static_cast<std::size_t>(l - s)])
                    by_len[static_cast<std::size_t>(l)].push_back(DegreeTree::pair(lt, rt));
    std::vector<DegreeTree> out;
    for (int l = 1; l <= maxlen; ++l)
        for (const auto& t : by_len[static_cast<std::size_t>(l)]) out.push_back(t);
    return out;
}

GeneratorSet bad_tree_generators(const ElementaryGrading& g) {
    GradedAlgebra alg = elementary_algebra(g);
    std::vector<GroupElement> support = alg.support();
    GeneratorSet s;
    s.group = g.group;
    bool covered = g.group->is_finite() &&
                   g.group->size() == static_cast<long>(support.size());
    if (!covered) {
        s.has_support_rule = true;
        s.allowed_support = support;
    }
    for (const auto& t : enumerate_trees(support, g.n))
        if (!tree_is_good(t, g)) s.generators.push_back(f_mu(t));
    return s;
}

BasisReport bad_tree_check(const ElementaryGrading& g, long max_m,
                           const ComputeOptions& opt) {
    return verify_basis(bad_tree_generators(g), elementary_algebra(g), max_m, opt);
}

bool tree_monomial_is_identity(const DegreeTree& mu, const GradedAlgebra& alg) {
    return mu_is_identity(mu, alg);
}

namespace {

GeneratorSet monomial_set_base(const GradedAlgebra& alg) {
    GeneratorSet s;
    s.group = alg.group;
    bool covered = alg.group->is_finite() &&
                   alg.group->size() == static_cast<long>(alg.support().size());
    if (!covered) {
        s.has_support_rule = true;
        s.allowed_support = alg.support();
    }
    return s;
}

} // namespace

GeneratorSet monomial_identity_generators(const GradedAlgebra& alg, int maxlen) {
    GeneratorSet s = monomial_set_base(alg);
    for (const auto& t : enumerate_trees(alg.support(), maxlen))
        if (mu_is_identity(t, alg)) s.generators.push_back(f_mu(t));
    return s;
}

BasisReport monomial_identity_check(const GradedAlgebra& alg, int maxlen, long max_m,
                                    const ComputeOptions& opt) {
    return verify_basis(monomial_identity_generators(alg, maxlen), alg, max_m, opt);
}

GeneratorSet sequence_monomial_identity_generators(const GradedAlgebra& alg, int maxlen) {
    if (maxlen < 1) throw std::invalid_argument("maxlen must be positive");
    GeneratorSet s = monomial_set_base(alg);
    std::vector<GroupElement> support = alg.support();
    std::vector<DegreeTree> combs;
    for (const auto& d : support) combs.push_back(DegreeTree::leaf(d));
    for (int l = 1; l <= maxlen; ++l) {
        for (const auto& t : combs)
            if (mu_is_identity(t, alg)) s.generators.push_back(f_mu(t));
        if (l == maxlen) break;
        std::vector<DegreeTree> next;
        for (const auto& t : combs)
            for (const auto& d : support)
                next.push_back(DegreeTree::pair(t, DegreeTree::leaf(d)));
        combs = std::move(next);
    }
    return s;
}

} // namespace liepi
