#ifndef LIEPI_FORMULAS_HPP
#define LIEPI_FORMULAS_HPP

#include <string>
#include <vector>

#include "liepi/matrixalg.hpp"
#include "liepi/spaces.hpp"

namespace liepi {

/* Closed forms for the graded codimension sequences of the named
 * gradings, exact at every m >= 1.
 */
bool has_closed_form(const std::string& name);
const std::vector<std::string>& closed_form_names();
Integer closed_form(const std::string& name, long m);

struct CompareRow {
    long m = 0;
    Integer formula, computed;
    bool match = false;
};

// closed form against the computed codimension, m = 1..max_m
std::vector<CompareRow> compare_with_formula(const std::string& name,
                                             const GradedAlgebra& alg, long max_m,
                                             const ComputeOptions& opt = {});

// computed codimension differences c_m(fine) - c_m(coarse), m = 1..max_m
std::vector<Integer> coarsening_delta(const GradedAlgebra& fine,
                                      const GradedAlgebra& coarse, long max_m,
                                      const ComputeOptions& opt = {});

long distinct_count(const std::vector<GroupElement>& eta);

// cm[k] holds c_{k+1}; returns the exact ratios c_m / (q m^2 2^{m-3})
std::vector<Rational> asymptotic_ratios(const std::vector<Integer>& cm, long q);

} // namespace liepi

#endif
