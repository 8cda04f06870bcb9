#include "liepi/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace liepi {

GroupSpec::GroupSpec(std::vector<long> mods, std::vector<std::string> nms)
    : moduli(std::move(mods)), names(std::move(nms)) {
    if (moduli.size() != names.size())
        throw std::invalid_argument("group: one name per factor required");
    for (long m : moduli)
        if (m != 0 && m < 2) throw std::invalid_argument("group: torsion modulus must be >= 2");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("group: empty generator name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("group: duplicate generator name " + n);
    }
}

int GroupSpec::free_rank() const {
    return static_cast<int>(std::count(moduli.begin(), moduli.end(), 0L));
}

std::vector<long> GroupSpec::torsion() const {
    std::vector<long> t;
    for (long m : moduli)
        if (m != 0) t.push_back(m);
    return t;
}

bool GroupSpec::is_finite() const { return free_rank() == 0; }

long GroupSpec::size() const {
    if (!is_finite()) throw std::logic_error("group: size of infinite group");
    long s = 1;
    for (long m : moduli) s *= m;
    return s;
}

std::optional<std::size_t> GroupSpec::factor_named(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

std::string GroupSpec::to_string() const {
    if (moduli.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) s += "x";
        s += moduli[i] == 0 ? "Z" : "Z" + std::to_string(moduli[i]);
    }
    s += "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += ",";
        s += names[i];
    }
    s += "}";
    return s;
}

GroupPtr make_group(std::vector<long> moduli, std::vector<std::string> names) {
    return std::make_shared<const GroupSpec>(std::move(moduli), std::move(names));
}

GroupPtr make_group(std::vector<long> moduli) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        names.push_back("g" + std::to_string(i + 1));
    return make_group(std::move(moduli), std::move(names));
}

GroupPtr trivial_group() { return make_group({}, {}); }

static long mod_reduce(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

GroupElement::GroupElement(GroupPtr owner, std::vector<long> coords)
    : owner_(std::move(owner)), coords_(std::move(coords)) {
    if (!owner_) throw std::invalid_argument("group element without a group");
    if (coords_.size() != owner_->arity())
        throw std::invalid_argument("group element: coordinate count mismatch");
    reduce();
}

void GroupElement::reduce() {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (owner_->moduli[i] != 0) coords_[i] = mod_reduce(coords_[i], owner_->moduli[i]);
}

GroupElement GroupElement::identity(const GroupPtr& g) {
    return GroupElement(g, std::vector<long>(g->arity(), 0));
}

GroupElement GroupElement::generator(const GroupPtr& g, std::size_t i, long k) {
    if (i >= g->arity()) throw std::out_of_range("group generator index");
    std::vector<long> c(g->arity(), 0);
    c[i] = k;
    return GroupElement(g, std::move(c));
}

bool GroupElement::is_identity() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long v) { return v == 0; });
}

static void check_same_group(const GroupElement& a, const GroupElement& b) {
    if (a.owner() != b.owner() && !(*a.owner() == *b.owner()))
        throw std::invalid_argument("group elements from different groups");
}

GroupElement GroupElement::combine(const GroupElement& o) const {
    check_same_group(*this, o);
    std::vector<long> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return GroupElement(owner_, std::move(c));
}

GroupElement GroupElement::inverse() const {
    std::vector<long> c(coords_);
    for (long& v : c) v = -v;
    return GroupElement(owner_, std::move(c));
}

GroupElement GroupElement::power(long k) const {
    std::vector<long> c(coords_);
    for (long& v : c) v *= k;
    return GroupElement(owner_, std::move(c));
}

std::optional<long> GroupElement::order() const {
    long ord = 1;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        long m = owner_->moduli[i];
        if (m == 0) return std::nullopt;
        long k = m / std::gcd(coords_[i], m);
        ord = std::lcm(ord, k);
    }
    return ord;
}

bool GroupElement::operator==(const GroupElement& o) const {
    if (!owner_ || !o.owner_) return owner_ == o.owner_;
    return (owner_ == o.owner_ || *owner_ == *o.owner_) && coords_ == o.coords_;
}

bool GroupElement::operator<(const GroupElement& o) const {
    check_same_group(*this, o);
    return coords_ < o.coords_;
}

std::string GroupElement::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        long c = coords_[i];
        if (c == 0) continue;
        const std::string& n = owner_->names[i];
        std::string term;
        if (n == "1") {
            term = std::to_string(c);
        } else if (c == 1) {
            term = n;
        } else if (c == -1) {
            term = "-" + n;
        } else {
            term = std::to_string(c) + n;
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

void GroupElement::hash_into(Fnv& f) const {
    for (long c : coords_) f.feed(c);
    f.feed(coords_.size());
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) { return a.combine(b); }

std::vector<GroupElement> reverse_sequence(const std::vector<GroupElement>& seq) {
    return {seq.rbegin(), seq.rend()};
}

ElementStream::ElementStream(GroupPtr g) : group_(std::move(g)) {}

bool ElementStream::on_shell_boundary() const {
    if (group_->free_rank() == 0) return true;
    long mx = 0;
    for (std::size_t i = 0; i < cur_.size(); ++i)
        if (group_->moduli[i] == 0) mx = std::max(mx, std::labs(cur_[i]));
    return mx == shell_;
}

/* Odometer step: free coordinates run -shell..shell, torsion ones run
 * 0..m-1.  Returns false when the shell is exhausted.
 */
bool ElementStream::advance_in_shell() {
    for (std::size_t i = cur_.size(); i-- > 0;) {
        long m = group_->moduli[i];
        long hi = m == 0 ? shell_ : m - 1;
        if (cur_[i] < hi) {
            ++cur_[i];
            for (std::size_t j = i + 1; j < cur_.size(); ++j)
                cur_[j] = group_->moduli[j] == 0 ? -shell_ : 0;
            return true;
        }
    }
    return false;
}

GroupElement ElementStream::next() {
    if (exhausted_) throw std::logic_error("element stream exhausted");
    if (done_shell_) {
        // first call: open shell 0 at the all-zero point
        cur_.assign(group_->arity(), 0);
        done_shell_ = false;
        return GroupElement(group_, cur_);
    }
    while (true) {
        if (!advance_in_shell()) {
            if (group_->free_rank() == 0) {
                exhausted_ = true;
                throw std::logic_error("element stream exhausted");
            }
            ++shell_;
            cur_.assign(group_->arity(), 0);
            for (std::size_t i = 0; i < cur_.size(); ++i)
                if (group_->moduli[i] == 0) cur_[i] = -shell_;
            break; // lowest point of a shell >= 1 has max magnitude == shell
        }
        if (on_shell_boundary()) break;
    }
    return GroupElement(group_, cur_);
}

std::optional<GroupElement> first_element_outside(const GroupPtr& g,
                                                  const std::vector<GroupElement>& avoid) {
    long budget = g->is_finite() ? g->size() : std::numeric_limits<long>::max();
    ElementStream st(g);
    for (long i = 0; i < budget; ++i) {
        GroupElement e = st.next();
        if (std::find(avoid.begin(), avoid.end(), e) == avoid.end()) return e;
    }
    return std::nullopt;
}

} // namespace liepi
