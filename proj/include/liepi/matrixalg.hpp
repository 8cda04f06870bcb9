#ifndef LIEPI_MATRIXALG_HPP
#define LIEPI_MATRIXALG_HPP

#include <map>
#include <string>
#include <vector>

#include "liepi/exactla.hpp"
#include "liepi/group.hpp"
#include "liepi/rational.hpp"

namespace liepi {

// n x n upper triangular matrix with exact rational entries, 1-based indexing
class UpperTriMatrix {
  public:
    explicit UpperTriMatrix(int n);
    static UpperTriMatrix unit(int n, int i, int j);

    int n() const { return n_; }
    const Rational& at(int i, int j) const;
    void set(int i, int j, Rational v);
    bool is_zero() const;

    UpperTriMatrix& operator+=(const UpperTriMatrix& o);
    UpperTriMatrix& operator-=(const UpperTriMatrix& o);
    UpperTriMatrix& operator*=(const Rational& c);
    bool operator==(const UpperTriMatrix& o) const;

    // entries (i,j), i <= j, flattened in row-major order
    SparseRow flatten() const;
    static long upper_entry_count(int n) { return n * (n + 1) / 2; }

    std::string to_string() const; // signed sum of units, e.g. "e11-2e33"

  private:
    int n_;
    std::vector<Rational> a_;
    std::size_t idx(int i, int j) const;
};

UpperTriMatrix operator+(UpperTriMatrix a, const UpperTriMatrix& b);
UpperTriMatrix operator-(UpperTriMatrix a, const UpperTriMatrix& b);
UpperTriMatrix operator*(const Rational& c, UpperTriMatrix a);
UpperTriMatrix mul(const UpperTriMatrix& a, const UpperTriMatrix& b);
UpperTriMatrix bracket(const UpperTriMatrix& a, const UpperTriMatrix& b);
// e_ij -> e_{n+1-j, n+1-i}, an anti-automorphism of the matrix product
UpperTriMatrix flip_involution(const UpperTriMatrix& m);

/* Elementary grading of the n x n upper triangular matrices, given by the
 * degrees eta_1..eta_{n-1} of the first superdiagonal.  Diagonal units are
 * neutral; deg e_ij is the product of the eta between i and j.
 */
struct ElementaryGrading {
    int n = 0;
    GroupPtr group;
    std::vector<GroupElement> eta;

    ElementaryGrading() = default;
    ElementaryGrading(int n, GroupPtr group, std::vector<GroupElement> eta);
    GroupElement unit_degree(int i, int j) const;
};

bool elementary_isomorphic(const ElementaryGrading& a, const ElementaryGrading& b);

struct GradedAlgebra {
    int n = 0;
    GroupPtr group;
    std::vector<std::pair<UpperTriMatrix, GroupElement>> basis;

    // degrees with a nonzero component, sorted by coordinates
    std::vector<GroupElement> support() const;
    // indices into basis; empty for degrees outside the support
    std::vector<int> component(const GroupElement& d) const;
    long dim() const { return static_cast<long>(basis.size()); }
};

GradedAlgebra elementary_algebra(const ElementaryGrading& g);

struct GradingCheck {
    bool ok = true;
    std::string message;
};

// every bracket of basis elements must land in the component of the
// combined degree
GradingCheck verify_grading(const GradedAlgebra& a);

/* Palindromic elementary grading refined by the flip involution.  The
 * extended group is the base group times Z2 with generator t; symmetric
 * combinations pick up the extra t.
 */
struct Type2Spec {
    ElementaryGrading base;
    GroupPtr extended;
    GroupElement t;

    explicit Type2Spec(ElementaryGrading base_grading);
    GroupElement embed(const GroupElement& base_degree) const;
};

GradedAlgebra type2_algebra(const Type2Spec& spec);

// strictly upper triangular basis units of a given degree, as (i, j) pairs
std::vector<std::pair<int, int>> strict_upper_units(const ElementaryGrading& g,
                                                    const GroupElement& d);

} // namespace liepi

#endif
