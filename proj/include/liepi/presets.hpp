#ifndef LIEPI_PRESETS_HPP
#define LIEPI_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "liepi/dsl.hpp"
#include "liepi/matrixalg.hpp"
#include "liepi/tideal.hpp"

namespace liepi {

/* Built-in gradings of the upper triangular matrix Lie algebras, keyed
 * by name.  Each carries its algebra, the grading data, the y/z letter
 * bindings for the polynomial syntax, and the leading multiplicity used
 * in asymptotic ratios.
 */
struct Preset {
    std::string name;
    GradedAlgebra algebra;
    std::optional<ElementaryGrading> elementary;
    std::optional<Type2Spec> t2;
    AliasTable aliases;
    long eta_distinct = 1;
};

const std::vector<std::string>& preset_names();
bool is_preset(const std::string& name);
Preset get_preset(const std::string& name);

// published finite generating set of the graded identities, for the
// presets that have one
bool has_builtin_generators(const std::string& name);
GeneratorSet builtin_generators(const std::string& name);

// a preset name, or an explicit "ut(n; degrees) over GROUP" description
struct ResolvedGrading {
    std::string name;  // empty for ad hoc descriptions
    GradedAlgebra algebra;
    std::optional<ElementaryGrading> elementary;
    AliasTable aliases;
};
ResolvedGrading resolve_grading(const std::string& text);

} // namespace liepi

#endif
