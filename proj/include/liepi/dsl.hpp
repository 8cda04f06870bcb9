#ifndef LIEPI_DSL_HPP
#define LIEPI_DSL_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "liepi/freelie.hpp"
#include "liepi/group.hpp"
#include "liepi/matrixalg.hpp"
#include "liepi/tideal.hpp"

namespace liepi {

struct SourceSpan {
    std::size_t begin = 0, end = 0;
};

struct ParseError : std::runtime_error {
    SourceSpan span;
    std::string hint;
    ParseError(const std::string& msg, SourceSpan s, std::string h = "");
};

/* Group syntax: cyclic factors joined by 'x', each 'Z' (infinite),
 * 'Z<k>' with k >= 2, or 'Z^r' for r infinite factors, then optional
 * generator names in braces, e.g. "Z^2{g,h}", "Z3xZ2{1,t}", "Z{g}".
 * The name "1" makes the factor numeral: its multiples are written
 * 0, 1, 2, ... in degree expressions.
 */
GroupPtr parse_group(const std::string& text);

/* Degree expressions are signed sums of atoms: a generator name, an
 * integer times a generator name, or a bare integer which requires a
 * numeral factor unless it is 0.
 */
GroupElement parse_degree(const std::string& text, const GroupPtr& group);

// "ut(n; d_1, ..., d_{n-1}) over GROUP"
ElementaryGrading parse_elementary(const std::string& text);

// degrees carried by the y/z shorthand of a grading; y is always the
// identity, z is bound per grading
struct AliasTable {
    GroupElement y_degree;
    std::optional<GroupElement> z_degree;
};

/* Polynomial syntax:
 *   poly: ['-'] term (('+'|'-') term)*
 *   term: [rational '*'] mono
 *   mono: var | '[' mono (',' mono)+ ']'       brackets are left-normed
 *   var:  'x' INT '^' '(' degree ')' | 'y' INT | 'z' INT
 * y_i stands for variable 2i-1 of the identity degree and z_i for
 * variable 2i of the bound z degree; x and y/z notation cannot mix.
 * The canonical printer output parses back to the same polynomial.
 */
MultilinearPolynomial parse_polynomial(const std::string& text, const GroupPtr& group,
                                       const AliasTable& aliases);

/* Generator files: one entry per line, '#' starts a comment.  A line is
 * a polynomial (implicitly = 0), an "A = B" pair meaning A - B, a
 * "x^(d) = 0" degree declaration, or the co-finite rule
 * "x^(l) = 0 for l not in {d_1, ..., d_k}".
 */
GeneratorSet parse_generator_file(const std::string& text, const GroupPtr& group,
                                  const AliasTable& aliases);

} // namespace liepi

#endif
