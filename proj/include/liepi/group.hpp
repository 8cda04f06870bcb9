#ifndef LIEPI_GROUP_HPP
#define LIEPI_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liepi/rational.hpp"

namespace liepi {

/* Finitely generated abelian group, presented as a product of cyclic
 * factors in declaration order.  modulus 0 means an infinite cyclic
 * factor, otherwise the factor is Z_k with k >= 2.  Each factor has a
 * generator name; the name "1" marks a numeral factor whose multiples
 * are written 0, 1, 2, ... in degree expressions.
 */
struct GroupSpec {
    std::vector<long> moduli;
    std::vector<std::string> names;

    GroupSpec(std::vector<long> mods, std::vector<std::string> nms);

    std::size_t arity() const { return moduli.size(); }
    int free_rank() const;
    std::vector<long> torsion() const;
    bool is_trivial() const { return moduli.empty(); }
    bool is_finite() const;
    // number of elements; only valid for finite groups
    long size() const;
    std::optional<std::size_t> factor_named(const std::string& name) const;

    bool operator==(const GroupSpec& o) const {
        return moduli == o.moduli && names == o.names;
    }
    std::string to_string() const;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

GroupPtr make_group(std::vector<long> moduli, std::vector<std::string> names);
// default generator names g1, g2, ...
GroupPtr make_group(std::vector<long> moduli);
GroupPtr trivial_group();

class GroupElement {
  public:
    GroupElement() = default;
    GroupElement(GroupPtr owner, std::vector<long> coords);

    static GroupElement identity(const GroupPtr& g);
    // k times the i-th generator (0-based factor index)
    static GroupElement generator(const GroupPtr& g, std::size_t i, long k = 1);

    const GroupPtr& owner() const { return owner_; }
    const std::vector<long>& coords() const { return coords_; }
    bool is_identity() const;

    GroupElement combine(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement power(long k) const;
    // least k >= 1 with k*a = 0; empty for infinite order
    std::optional<long> order() const;

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    // lexicographic on coordinates; elements must share a group
    bool operator<(const GroupElement& o) const;

    std::string to_string() const;
    void hash_into(Fnv& f) const;

  private:
    GroupPtr owner_;
    std::vector<long> coords_;
    void reduce();
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

std::vector<GroupElement> reverse_sequence(const std::vector<GroupElement>& seq);

/* Deterministic enumeration of group elements: for finite groups an
 * odometer over the factors; with free factors present, shells of
 * increasing max coordinate magnitude, lexicographic inside a shell.
 */
class ElementStream {
  public:
    explicit ElementStream(GroupPtr g);
    GroupElement next();

  private:
    GroupPtr group_;
    long shell_ = 0;
    std::vector<long> cur_;
    bool done_shell_ = true;
    bool exhausted_ = false;
    bool advance_in_shell();
    bool on_shell_boundary() const;
};

// first element (in ElementStream order) not contained in `avoid`;
// empty when the group is finite and fully covered
std::optional<GroupElement> first_element_outside(const GroupPtr& g,
                                                  const std::vector<GroupElement>& avoid);

} // namespace liepi

#endif
