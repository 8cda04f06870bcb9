#ifndef LIEPI_EXACTLA_HPP
#define LIEPI_EXACTLA_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "liepi/rational.hpp"

namespace liepi {

// sparse vector: strictly increasing column indices, no stored zeros
using SparseRow = std::vector<std::pair<long, Rational>>;
using IntRow = std::vector<std::pair<long, Integer>>;

SparseRow make_sparse(const std::vector<Rational>& dense);
// clear denominators and divide by the gcd of the numerators
IntRow to_primitive(const SparseRow& row);
void normalize_content(IntRow& row);

class RankCache {
  public:
    std::optional<long> get(std::uint64_t key);
    void put(std::uint64_t key, long rank);
    static RankCache& global();

  private:
    std::mutex mu_;
    std::unordered_map<std::uint64_t, long> map_;
};

class RationalMatrix {
  public:
    RationalMatrix(long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const;

    void set(long r, long c, const Rational& v);
    void add_to(long r, long c, const Rational& v);
    Rational at(long r, long c) const;
    void append_row(SparseRow row);
    const SparseRow& row(long r) const { return data_[r]; }

    std::uint64_t content_hash() const;

    /* Fraction-free Bareiss-style elimination on primitive integer rows.
     * Pivot column is the sparsest live column, pivot row the sparsest
     * row holding it, ties by lowest index.  Results are memoized in the
     * process-wide rank cache.
     */
    long rank() const;
    long rank_uncached() const;

  private:
    long rows_, cols_;
    std::vector<SparseRow> data_;
};

/* Streaming row echelon over exact integers.  Rows are reduced on their
 * leading column only, which is enough for rank and span membership.
 */
class Echelon {
  public:
    // reduce v against the current pivots; empty result means v is in the span
    IntRow reduce(IntRow v) const;
    IntRow reduce(const SparseRow& v) const;
    // returns true when v contributed a new pivot
    bool insert(IntRow v);
    bool insert(const SparseRow& v);
    long rank() const { return static_cast<long>(pivots_.size()); }

  private:
    std::map<long, IntRow> pivots_; // leading column -> row
};

bool in_span(const SparseRow& v, const RationalMatrix& m);

struct SubspaceDims {
    long dim_a = 0, dim_b = 0, dim_sum = 0;
    long dim_intersection() const { return dim_a + dim_b - dim_sum; }
};

SubspaceDims dimension_of_intersection_complement(const RationalMatrix& a,
                                                  const RationalMatrix& b);

} // namespace liepi

#endif
