#include "liepi/matrixalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liepi {

UpperTriMatrix::UpperTriMatrix(int n) : n_(n), a_(n * n) {
    if (n < 1)
        throw std::invalid_argument("matrix size must be positive");
}

UpperTriMatrix UpperTriMatrix::unit(int n, int i, int j) {
    UpperTriMatrix m(n);
    m.set(i, j, 1);
    return m;
}

std::size_t UpperTriMatrix::idx(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

const Rational& UpperTriMatrix::at(int i, int j) const { return a_[idx(i, j)]; }

void UpperTriMatrix::set(int i, int j, Rational v) {
    if (i > j && v != 0)
        throw std::invalid_argument("entry below the diagonal");
    a_[idx(i, j)] = std::move(v);
}

bool UpperTriMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

UpperTriMatrix& UpperTriMatrix::operator+=(const UpperTriMatrix& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

UpperTriMatrix& UpperTriMatrix::operator-=(const UpperTriMatrix& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("matrix size mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

UpperTriMatrix& UpperTriMatrix::operator*=(const Rational& c) {
    for (auto& x : a_)
        x *= c;
    return *this;
}

bool UpperTriMatrix::operator==(const UpperTriMatrix& o) const {
    return n_ == o.n_ && a_ == o.a_;
}

SparseRow UpperTriMatrix::flatten() const {
    SparseRow r;
    long col = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j, ++col) {
            const Rational& v = at(i, j);
            if (v != 0)
                r.emplace_back(col, v);
        }
    return r;
}

std::string UpperTriMatrix::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j) {
            const Rational& v = at(i, j);
            if (v == 0)
                continue;
            if (v > 0 && !first)
                out << "+";
            if (v == -1)
                out << "-";
            else if (v != 1)
                out << v.get_str();
            out << "e" << i << j;
            first = false;
        }
    if (first)
        out << "0";
    return out.str();
}

UpperTriMatrix operator+(UpperTriMatrix a, const UpperTriMatrix& b) { return a += b; }
UpperTriMatrix operator-(UpperTriMatrix a, const UpperTriMatrix& b) { return a -= b; }
UpperTriMatrix operator*(const Rational& c, UpperTriMatrix a) { return a *= c; }

UpperTriMatrix mul(const UpperTriMatrix& a, const UpperTriMatrix& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("matrix size mismatch");
    int n = a.n();
    UpperTriMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational s = 0;
            for (int k = i; k <= j; ++k)
                s += a.at(i, k) * b.at(k, j);
            out.set(i, j, s);
        }
    return out;
}

UpperTriMatrix bracket(const UpperTriMatrix& a, const UpperTriMatrix& b) {
    return mul(a, b) - mul(b, a);
}

UpperTriMatrix flip_involution(const UpperTriMatrix& m) {
    int n = m.n();
    UpperTriMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            out.set(n + 1 - j, n + 1 - i, m.at(i, j));
    return out;
}

ElementaryGrading::ElementaryGrading(int n_in, GroupPtr group_in,
                                     std::vector<GroupElement> eta_in)
    : n(n_in), group(std::move(group_in)), eta(std::move(eta_in)) {
    if (n < 1)
        throw std::invalid_argument("matrix size must be positive");
    if (static_cast<int>(eta.size()) != n - 1)
        throw std::invalid_argument("elementary grading needs n-1 degrees");
    for (const auto& e : eta)
        if (e.owner() != group && !(*e.owner() == *group))
            throw std::invalid_argument("grading degree from a different group");
}

GroupElement ElementaryGrading::unit_degree(int i, int j) const {
    if (i < 1 || j < i || j > n)
        throw std::out_of_range("unit index out of range");
    GroupElement d = GroupElement::identity(group);
    for (int k = i; k < j; ++k)
        d = d * eta[k - 1];
    return d;
}

bool elementary_isomorphic(const ElementaryGrading& a, const ElementaryGrading& b) {
    if (a.n != b.n || !(*a.group == *b.group))
        return false;
    if (a.eta == b.eta)
        return true;
    std::vector<GroupElement> rev(b.eta.rbegin(), b.eta.rend());
    return a.eta == rev;
}

std::vector<GroupElement> GradedAlgebra::support() const {
    std::set<GroupElement> seen;
    for (const auto& [m, d] : basis)
        seen.insert(d);
    return {seen.begin(), seen.end()};
}

std::vector<int> GradedAlgebra::component(const GroupElement& d) const {
    std::vector<int> out;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        if (basis[k].second == d)
            out.push_back(k);
    return out;
}

GradedAlgebra elementary_algebra(const ElementaryGrading& g) {
    GradedAlgebra a;
    a.n = g.n;
    a.group = g.group;
    for (int i = 1; i <= g.n; ++i)
        for (int j = i; j <= g.n; ++j)
            a.basis.emplace_back(UpperTriMatrix::unit(g.n, i, j), g.unit_degree(i, j));
    return a;
}

GradingCheck verify_grading(const GradedAlgebra& a) {
    long nbasis = a.dim();
    RationalMatrix all(nbasis, UpperTriMatrix::upper_entry_count(a.n));
    for (long k = 0; k < nbasis; ++k)
        all.append_row(a.basis[k].first.flatten());
    if (all.rank() != nbasis)
        return {false, "basis is linearly dependent"};

    for (long p = 0; p < nbasis; ++p)
        for (long q = p + 1; q < nbasis; ++q) {
            UpperTriMatrix br = bracket(a.basis[p].first, a.basis[q].first);
            if (br.is_zero())
                continue;
            GroupElement d = a.basis[p].second * a.basis[q].second;
            auto comp = a.component(d);
            RationalMatrix span(0, UpperTriMatrix::upper_entry_count(a.n));
            for (int k : comp)
                span.append_row(a.basis[k].first.flatten());
            if (!in_span(br.flatten(), span)) {
                std::ostringstream msg;
                msg << "bracket of basis elements " << p << " and " << q
                    << " leaves the component of degree " << d.to_string();
                return {false, msg.str()};
            }
        }
    return {true, ""};
}

Type2Spec::Type2Spec(ElementaryGrading base_grading)
    : base(std::move(base_grading)), t(GroupElement::identity(trivial_group())) {
    std::vector<GroupElement> rev(base.eta.rbegin(), base.eta.rend());
    if (base.eta != rev)
        throw std::invalid_argument(
            "involution refinement needs a palindromic degree sequence");
    const GroupSpec& g = *base.group;
    for (const auto& name : g.names)
        if (name == "t")
            throw std::invalid_argument("base group already uses the generator name t");
    std::vector<long> moduli = g.moduli;
    std::vector<std::string> names = g.names;
    moduli.push_back(2);
    names.emplace_back("t");
    extended = make_group(moduli, names);
    std::vector<long> tc(moduli.size(), 0);
    tc.back() = 1;
    t = GroupElement(extended, tc);
}

GroupElement Type2Spec::embed(const GroupElement& base_degree) const {
    std::vector<long> c = base_degree.coords();
    c.push_back(0);
    return GroupElement(extended, c);
}

GradedAlgebra type2_algebra(const Type2Spec& spec) {
    int n = spec.base.n;
    GradedAlgebra a;
    a.n = n;
    a.group = spec.extended;
    for (int m = 0; m <= n - 1; ++m)
        for (int i = 1; i + m <= n; ++i) {
            // e_{i,i+m} pairs with its flip e_{n+1-m-i, n+1-i}
            int ip = n + 1 - m - i;
            if (i > ip)
                continue;
            UpperTriMatrix e = UpperTriMatrix::unit(n, i, i + m);
            UpperTriMatrix f = UpperTriMatrix::unit(n, ip, n + 1 - i);
            GroupElement d = spec.embed(spec.base.unit_degree(i, i + m));
            if (i < ip) {
                a.basis.emplace_back(e - f, d);
                a.basis.emplace_back(e + f, d * spec.t);
            } else {
                // self paired unit: the difference vanishes and the sum is
                // rescaled back to the unit itself
                a.basis.emplace_back(e, d * spec.t);
            }
        }
    return a;
}

std::vector<std::pair<int, int>> strict_upper_units(const ElementaryGrading& g,
                                                    const GroupElement& d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            if (g.unit_degree(i, j) == d)
                out.emplace_back(i, j);
    return out;
}

} // namespace liepi
