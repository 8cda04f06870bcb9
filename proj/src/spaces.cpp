#include "liepi/spaces.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace liepi {

std::vector<LieMonomial> spanning_monomials(const DegreeTuple& a) {
    const std::size_t m = a.size();
    if (m == 0) throw std::invalid_argument("empty degree tuple");
    std::vector<LieMonomial> out;
    std::vector<int> rest;
    for (std::size_t i = 2; i <= m; ++i) rest.push_back(static_cast<int>(i));
    do {
        std::vector<GradedVariable> vars;
        vars.emplace_back(1, a[0]);
        for (int i : rest) vars.emplace_back(i, a[static_cast<std::size_t>(i) - 1]);
        out.push_back(left_normed_vars(vars));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

long dim_Pma(const GradedAlgebra& alg, const DegreeTuple& a, long cap) {
    return spanning_rank(alg, a, cap);
}

namespace {

// multisets of size m over the support, ascending lexicographic
void enumerate_multisets(const std::vector<GroupElement>& support, long m,
                         std::size_t from, DegreeTuple& cur,
                         std::vector<DegreeTuple>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < support.size(); ++i) {
        cur.push_back(support[i]);
        enumerate_multisets(support, m - 1, i, cur, out);
        cur.pop_back();
    }
}

Integer multiset_orderings(const DegreeTuple& degrees) {
    Integer total;
    mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(degrees.size()));
    std::size_t i = 0;
    while (i < degrees.size()) {
        std::size_t j = i;
        while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
        Integer block;
        mpz_fac_ui(block.get_mpz_t(), static_cast<unsigned long>(j - i));
        total /= block;
        i = j;
    }
    return total;
}

} // namespace

CodimReport codimension(const GradedAlgebra& alg, long m, const ComputeOptions& opt) {
    if (m < 1) throw std::invalid_argument("codimension needs m >= 1");
    CodimReport report;
    report.m = m;

    std::vector<GroupElement> support = alg.support();
    std::vector<DegreeTuple> multisets;
    DegreeTuple cur;
    enumerate_multisets(support, m, 0, cur, multisets);

    report.by_multiset.resize(multisets.size());
    for (std::size_t k = 0; k < multisets.size(); ++k) {
        report.by_multiset[k].degrees = multisets[k];
        report.by_multiset[k].orderings = multiset_orderings(multisets[k]);
    }

    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto work = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= multisets.size()) return;
            try {
                report.by_multiset[k].dim = dim_Pma(alg, multisets[k], opt.cap);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    const int workers = std::max(1, opt.workers);
    if (workers == 1 || multisets.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const auto& rec : report.by_multiset)
        report.total += rec.orderings * Integer(rec.dim);
    return report;
}

bool permutation_invariant_dim(const GradedAlgebra& alg, const DegreeTuple& a,
                               const std::vector<int>& sigma, long cap) {
    if (sigma.size() != a.size())
        throw std::invalid_argument("permutation length does not match the tuple");
    std::vector<char> hit(a.size(), 0);
    DegreeTuple b(a.size(), GroupElement());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 0 || static_cast<std::size_t>(sigma[i]) >= a.size() || hit[sigma[i]])
            throw std::invalid_argument("not a permutation of the positions");
        hit[sigma[i]] = 1;
        b[i] = a[static_cast<std::size_t>(sigma[i])];
    }
    return dim_Pma(alg, a, cap) == dim_Pma(alg, b, cap);
}

} // namespace liepi
