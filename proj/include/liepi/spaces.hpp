#ifndef LIEPI_SPACES_HPP
#define LIEPI_SPACES_HPP

#include <vector>

#include "liepi/evaluate.hpp"
#include "liepi/freelie.hpp"
#include "liepi/matrixalg.hpp"

namespace liepi {

/* The (m-1)! left-normed monomials [x_1, x_sigma(2), ..., x_sigma(m)]
 * over permutations sigma of 2..m in lexicographic order, each variable
 * carrying its tuple degree.  They span the multilinear component in
 * degrees a modulo the identities of any algebra.
 */
std::vector<LieMonomial> spanning_monomials(const DegreeTuple& a);

// dimension of the evaluated multilinear component in degrees a
long dim_Pma(const GradedAlgebra& alg, const DegreeTuple& a,
             long cap = default_entry_cap);

struct MultisetDim {
    DegreeTuple degrees;  // ascending representative
    long dim = 0;
    Integer orderings;    // distinct reorderings of the multiset
};

struct CodimReport {
    long m = 0;
    Integer total = 0;
    std::vector<MultisetDim> by_multiset;  // ascending lexicographic order
};

struct ComputeOptions {
    int workers = 1;
    long cap = default_entry_cap;
};

/* Graded codimension: the dimension in each degree multiset times the
 * number of its reorderings, summed over multisets of the support.
 * Multiset jobs may run on parallel workers; the report order and all
 * values are independent of the worker count.
 */
CodimReport codimension(const GradedAlgebra& alg, long m,
                        const ComputeOptions& opt = {});

// dim in degrees a equals dim in the permuted degrees; sigma permutes
// positions 0..m-1
bool permutation_invariant_dim(const GradedAlgebra& alg, const DegreeTuple& a,
                               const std::vector<int>& sigma,
                               long cap = default_entry_cap);

} // namespace liepi

#endif
