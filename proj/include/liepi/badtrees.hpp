#ifndef LIEPI_BADTREES_HPP
#define LIEPI_BADTREES_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liepi/freelie.hpp"
#include "liepi/matrixalg.hpp"
#include "liepi/tideal.hpp"

namespace liepi {

// binary bracketing whose leaves are group degrees
class DegreeTree {
  public:
    DegreeTree() = default;
    static DegreeTree leaf(const GroupElement& d);
    static DegreeTree pair(const DegreeTree& l, const DegreeTree& r);

    bool empty() const { return node_ == nullptr; }
    bool is_leaf() const;
    const GroupElement& leaf_degree() const;
    DegreeTree left() const;
    DegreeTree right() const;
    int length() const;

    std::vector<GroupElement> leaves() const;
    std::string to_string() const;  // "[[g,h],0]"

  private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit DegreeTree(std::shared_ptr<const Node> n);
};

/* Surrogate polynomial of a tree: a leaf of nontrivial degree becomes a
 * variable of that degree, a trivial leaf a commutator of two fresh
 * trivial variables, inner nodes brackets.  Variables are numbered left
 * to right starting at 1.
 */
MultilinearPolynomial f_mu(const DegreeTree& mu);

/* A tree is good when some substitution of strictly upper triangular
 * homogeneous elements into its leaves has a nonzero bracket; by
 * multilinearity it is enough to try the matrix units.
 */
bool tree_is_good(const DegreeTree& mu, const ElementaryGrading& g);

// first witness in odometer order: one strictly upper unit (i, j) per
// leaf, left to right; empty when the tree is bad
std::optional<std::vector<std::pair<int, int>>> tree_witness(const DegreeTree& mu,
                                                             const ElementaryGrading& g);

// the left-normed bracketing of a plain degree sequence
bool sequence_is_good(const std::vector<GroupElement>& seq, const ElementaryGrading& g);

// associative goodness: some product of strictly upper units with the
// given degrees, in the given order, is nonzero
bool sequence_is_good_assoc(const std::vector<GroupElement>& seq,
                            const ElementaryGrading& g);

/* Whether f_mu(mu) is a graded identity, decided on the tree itself: a
 * nonzero-degree leaf runs over the component basis, a trivial-degree
 * leaf over the nonzero brackets of component basis pairs (the value
 * set of its [y, y'] surrogate up to sign).
 */
bool tree_monomial_is_identity(const DegreeTree& mu, const GradedAlgebra& alg);

// all trees with leaves in the alphabet and length 1..maxlen, ordered by
// length, then shape, then leaf labels
std::vector<DegreeTree> enumerate_trees(const std::vector<GroupElement>& alphabet,
                                        int maxlen);

/* Surrogates of the bad trees of length at most n over the support,
 * with the co-finite rule killing the degrees outside it.  Candidate
 * generating set for the whole ideal of graded identities.
 */
GeneratorSet bad_tree_generators(const ElementaryGrading& g);

// verify_basis of the bad tree surrogates against the graded algebra
BasisReport bad_tree_check(const ElementaryGrading& g, long max_m,
                           const ComputeOptions& opt = {});

/* Monomial identities built from blocks, a block being one variable of
 * nontrivial degree or a commutator of two trivial ones: every
 * bracketing of at most maxlen blocks that evaluates to zero, plus the
 * co-finite support rule.
 */
GeneratorSet monomial_identity_generators(const GradedAlgebra& alg, int maxlen);

BasisReport monomial_identity_check(const GradedAlgebra& alg, int maxlen, long max_m,
                                    const ComputeOptions& opt = {});

// like monomial_identity_generators but restricted to left-normed
// bracketings of the blocks
GeneratorSet sequence_monomial_identity_generators(const GradedAlgebra& alg, int maxlen);

} // namespace liepi

#endif
