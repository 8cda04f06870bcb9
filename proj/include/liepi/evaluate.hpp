#ifndef LIEPI_EVALUATE_HPP
#define LIEPI_EVALUATE_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "liepi/freelie.hpp"
#include "liepi/matrixalg.hpp"

namespace liepi {

inline constexpr long default_entry_cap = 2'000'000;

// raised when an evaluation would store more nonzero entries than allowed
struct CapExceeded : std::runtime_error {
    long cap;
    explicit CapExceeded(long c);
};

struct Assignment {
    std::map<int, std::pair<UpperTriMatrix, GroupElement>> values;
    void set(int var, UpperTriMatrix m, GroupElement degree);
};

// recursive bracket of the assigned matrices; every leaf must be assigned
// an element of its own degree
UpperTriMatrix evaluate_monomial(const LieMonomial& m, const Assignment& a);

/* True iff f vanishes under every substitution of homogeneous basis
 * elements of matching degrees; components are enumerated in basis order.
 * A variable over an empty component makes f vacuously an identity.
 */
bool is_graded_identity(const MultilinearPolynomial& f, const GradedAlgebra& alg);

// like is_graded_identity, but reports a vanishing witness: the basis
// assignment (variable index -> basis position) of the first nonzero value
struct IdentityVerdict {
    bool identity = true;
    std::map<int, int> witness;
};
IdentityVerdict check_identity(const MultilinearPolynomial& f, const GradedAlgebra& alg);

/* Rows are the monomials, columns run over (assignment, matrix entry) in
 * row-major assignment order with all-zero columns pruned.  All monomials
 * must be multilinear on variables 1..m with the degrees of the tuple.
 */
RationalMatrix evaluation_matrix(const std::vector<LieMonomial>& monomials,
                                 const DegreeTuple& a, const GradedAlgebra& alg,
                                 long cap = default_entry_cap);

/* Rank of the evaluation matrix of the (m-1)! fixed-first left-normed
 * monomials, streamed column by column: bracket prefixes shared over a
 * DFS with zero pruning, duplicate columns dropped, and exact echelon
 * with early exit at full rank.  Memoized on (algebra, tuple) content.
 */
long spanning_rank(const GradedAlgebra& alg, const DegreeTuple& a,
                   long cap = default_entry_cap);

std::uint64_t algebra_content_hash(const GradedAlgebra& alg);

} // namespace liepi

#endif
