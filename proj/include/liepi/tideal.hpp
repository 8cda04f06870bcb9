#ifndef LIEPI_TIDEAL_HPP
#define LIEPI_TIDEAL_HPP

#include <functional>
#include <vector>

#include "liepi/freelie.hpp"
#include "liepi/matrixalg.hpp"
#include "liepi/spaces.hpp"

namespace liepi {

/* Multilinear generating set of a graded T-ideal.  Besides the listed
 * polynomials a set may declare whole degrees identically zero, either
 * one by one or through a co-finite rule keeping only an allowed
 * support; the rule is how infinite grading groups stay finitely
 * describable.
 */
struct GeneratorSet {
    GroupPtr group;
    std::vector<MultilinearPolynomial> generators;
    std::vector<GroupElement> zero_degrees;
    bool has_support_rule = false;
    std::vector<GroupElement> allowed_support;

    bool degree_is_zero(const GroupElement& d) const;
};

/* Multilinear consequences of the set in degrees a: generator variables
 * are replaced by left-normed monomials over disjoint nonempty blocks
 * of 1..m with matching degree products, and the leftover variables are
 * adjoined on the right in every order.  Degrees declared zero enter
 * through single-leaf generators for every subset product of the tuple
 * they cover.  The callback form stops when fn returns false.
 */
void for_each_consequence(const GeneratorSet& s, const DegreeTuple& a,
                          const std::function<bool(const MultilinearPolynomial&)>& fn);
std::vector<MultilinearPolynomial> multilinear_consequences(const GeneratorSet& s,
                                                            const DegreeTuple& a);

// rank of the consequence space inside the free multilinear component
long consequence_dim(const GeneratorSet& s, const DegreeTuple& a);

// is f a linear combination of multilinear consequences of s
bool membership(const MultilinearPolynomial& f, const GeneratorSet& s);

struct BasisVerdict {
    long m = 0;
    DegreeTuple degrees;
    long free_dim = 0;
    long consequence_dim = 0;
    long algebra_dim = 0;
    bool ok = false;
};

struct BasisReport {
    bool ok = true;
    std::vector<BasisVerdict> verdicts;
};

/* Checks that the set generates all graded identities of the algebra up
 * to multilinear degree max_m.  Every generator must itself evaluate to
 * zero (hard error otherwise); then in each degree multiset over the
 * support, plus one probe degree outside it when the group is larger,
 * the consequence rank must complement the algebra dimension to the
 * full (m-1)!.
 */
BasisReport verify_basis(const GeneratorSet& s, const GradedAlgebra& alg, long max_m,
                         const ComputeOptions& opt = {});

} // namespace liepi

#endif
