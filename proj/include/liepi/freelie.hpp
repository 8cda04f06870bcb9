#ifndef LIEPI_FREELIE_HPP
#define LIEPI_FREELIE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liepi/exactla.hpp"
#include "liepi/group.hpp"
#include "liepi/rational.hpp"

namespace liepi {

using DegreeTuple = std::vector<GroupElement>;

struct GradedVariable {
    int index = 0;
    GroupElement degree;

    GradedVariable() = default;
    GradedVariable(int idx, GroupElement deg);

    bool operator==(const GradedVariable& o) const;
    bool operator<(const GradedVariable& o) const;
};

// immutable binary bracketing over degree-labelled variables
class LieMonomial {
  public:
    LieMonomial() = default;
    static LieMonomial var(const GradedVariable& v);
    static LieMonomial pair(const LieMonomial& l, const LieMonomial& r);

    bool empty() const { return node_ == nullptr; }
    bool is_leaf() const;
    const GradedVariable& leaf() const;
    LieMonomial left() const;
    LieMonomial right() const;
    const GroupElement& degree() const;
    int length() const;

    void collect_leaves(std::vector<GradedVariable>& out) const;
    std::vector<GradedVariable> leaves() const;
    std::vector<int> sorted_indices() const;
    bool multilinear() const;

    // total order: leaves before pairs, leaves by index then degree,
    // pairs lexicographically
    int compare(const LieMonomial& o) const;
    bool operator==(const LieMonomial& o) const { return compare(o) == 0; }
    bool operator!=(const LieMonomial& o) const { return compare(o) != 0; }
    bool operator<(const LieMonomial& o) const { return compare(o) < 0; }

  private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit LieMonomial(std::shared_ptr<const Node> n);
};

// [a_1,...,a_k] = [[a_1,...,a_{k-1}],a_k]
LieMonomial left_normed(const std::vector<LieMonomial>& parts);
LieMonomial left_normed_vars(const std::vector<GradedVariable>& vars);
// replace leaves by monomials; indices absent from the map stay put
LieMonomial substitute(const LieMonomial& m, const std::map<int, LieMonomial>& repl);

class MultilinearPolynomial {
  public:
    static MultilinearPolynomial zero();
    static MultilinearPolynomial monomial(const LieMonomial& m, const Rational& c = 1);

    void add(const LieMonomial& m, const Rational& c);
    const std::map<LieMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& o);
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& o);
    MultilinearPolynomial& operator*=(const Rational& c);

    /* The shared variable list, sorted by index.  Throws unless every
     * monomial is multilinear on the same index set with consistent
     * degree labels.
     */
    std::vector<GradedVariable> variables() const;
    bool is_multilinear() const;

  private:
    std::map<LieMonomial, Rational> terms_;
};

MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b);
MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b);
MultilinearPolynomial operator*(const Rational& c, MultilinearPolynomial a);
MultilinearPolynomial bracket(const MultilinearPolynomial& a, const MultilinearPolynomial& b);
MultilinearPolynomial substitute(const MultilinearPolynomial& f,
                                 const std::map<int, LieMonomial>& repl);

// coordinates in the multilinear associative envelope, indexed by words
// of variable indices
using AssocWord = std::vector<int>;
using AssocWordVector = std::map<AssocWord, Rational>;

AssocWordVector expand_to_associative(const LieMonomial& m);
AssocWordVector expand_to_associative(const MultilinearPolynomial& f);

/* Coordinates of a multilinear Lie polynomial in the basis of left-normed
 * monomials leading with the lowest variable index; entry sigma holds the
 * coefficient of [x_min, x_sigma(rest)], columns ordered by the
 * lexicographic rank of sigma.
 *
 * The expansion of [x_min, x_sigma(rest)] contains exactly one word
 * starting with x_min, its own, with coefficient +1 (induction on the
 * left-normed length), so those word coefficients are the coordinates.
 */
SparseRow fixed_first_coordinates(const MultilinearPolynomial& f);
SparseRow fixed_first_coordinates(const AssocWordVector& v,
                                  const std::vector<int>& sorted_vars);
long lex_rank(const std::vector<int>& word, const std::vector<int>& sorted_alphabet);

// relabel f along sigma inside one alias class: the variable at
// class_indices[k] becomes class_indices[sigma[k]]; all class members
// must carry the same degree
MultilinearPolynomial permutation_action(const std::vector<int>& sigma,
                                         const MultilinearPolynomial& f,
                                         const std::vector<int>& class_indices);
int permutation_sign(const std::vector<int>& sigma);

/* Named monomial families.  All families are emitted in a deterministic
 * order, lexicographic on their defining index data.
 */

// [v_k, v_1, ..., v_k omitted, ...] for each non-minimal leading choice;
// m-1 monomials over m >= 2 trivial-degree variables
std::vector<LieMonomial> family_1_convenient(const std::vector<GradedVariable>& vars);

/* Monomials [z, y_1..y_{i-1}, J asc, [y_i, y_l], R asc] where
 * 2 <= i <= m-2, l > i, and J, R partition the remaining variables; the
 * y's are the given variables in ascending index order, m = |ys| + 1.
 */
std::vector<LieMonomial> family_kind1(const GradedVariable& z,
                                      const std::vector<GradedVariable>& ys);

// [u, z, tail asc] with u a 1-convenient monomial of length >= 2 on the
// lowest y and a nonempty subset of the others
std::vector<LieMonomial> family_kind2(const GradedVariable& z,
                                      const std::vector<GradedVariable>& ys);

/* Per-tuple basis families for the named gradings.  Variables are
 * numbered 1..m with the degrees of the tuple; the empty list means the
 * component vanishes for that tuple.
 */
std::vector<LieMonomial> family_au_basis(const DegreeTuple& a, const GroupElement& g);
std::vector<LieMonomial> family_canonical_basis(const DegreeTuple& a,
                                                const GroupElement& one);
std::vector<LieMonomial> family_ac_convenient(const DegreeTuple& a);
std::vector<LieMonomial> family_remaining_basis(const DegreeTuple& a,
                                                const GroupElement& g);
std::vector<LieMonomial> family_t2_basis(const DegreeTuple& a, const GroupElement& one,
                                         const GroupElement& t);
// [[y_min, v], z's asc, y's asc] over degree-0 y's and degree-t z's, one
// monomial per choice of the partner v
std::vector<LieMonomial> family_monom_special(const DegreeTuple& a,
                                              const GroupElement& t);

std::string monomial_to_string(const LieMonomial& m);
std::string polynomial_to_string(const MultilinearPolynomial& f);

} // namespace liepi

#endif
