#include "liepi/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace liepi {

SparseRow make_sparse(const std::vector<Rational>& dense) {
    SparseRow out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) out.emplace_back(static_cast<long>(i), dense[i]);
    return out;
}

IntRow to_primitive(const SparseRow& row) {
    if (row.empty()) return {};
    Integer den_lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) out.emplace_back(c, Integer(v.get_num() * (den_lcm / v.get_den())));
    normalize_content(out);
    return out;
}

void normalize_content(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    bool flip = row.front().second < 0;
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& [c, v] : row) v /= g;
}

std::optional<long> RankCache::get(std::uint64_t key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void RankCache::put(std::uint64_t key, long rank) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, rank);
}

RankCache& RankCache::global() {
    static RankCache cache;
    return cache;
}

RationalMatrix::RationalMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
}

long RationalMatrix::nnz() const {
    long n = 0;
    for (const auto& r : data_) n += static_cast<long>(r.size());
    return n;
}

static void check_col(long c, long cols) {
    if (c < 0 || c >= cols) throw std::out_of_range("matrix: column index");
}

void RationalMatrix::set(long r, long c, const Rational& v) {
    check_col(c, cols_);
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, long col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0) row.erase(it);
        else it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

void RationalMatrix::add_to(long r, long c, const Rational& v) {
    if (v == 0) return;
    check_col(c, cols_);
    auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, long col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

Rational RationalMatrix::at(long r, long c) const {
    check_col(c, cols_);
    const auto& row = data_.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, long col) { return p.first < col; });
    return it != row.end() && it->first == c ? it->second : Rational(0);
}

void RationalMatrix::append_row(SparseRow row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        check_col(row[i].first, cols_);
        if (i && row[i - 1].first >= row[i].first)
            throw std::invalid_argument("matrix: row columns must increase");
    }
    row.erase(std::remove_if(row.begin(), row.end(), [](const auto& p) { return p.second == 0; }),
              row.end());
    data_.push_back(std::move(row));
    ++rows_;
}

std::uint64_t RationalMatrix::content_hash() const {
    Fnv f;
    f.feed(rows_);
    f.feed(cols_);
    for (const auto& row : data_) {
        f.feed(row.size());
        for (const auto& [c, v] : row) {
            f.feed(c);
            f.feed(v);
        }
    }
    return f.h;
}

// r <- (pc * r - rc * p) on sorted sparse rows, then content-normalized
static IntRow eliminate(const IntRow& r, const Integer& rc, const IntRow& p, const Integer& pc) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, Integer(pc * r[i].second));
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, Integer(-rc * p[j].second));
            ++j;
        } else {
            Integer v = pc * r[i].second - rc * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    normalize_content(out);
    return out;
}

long RationalMatrix::rank_uncached() const {
    std::vector<IntRow> live;
    live.reserve(data_.size());
    for (const auto& r : data_)
        if (!r.empty()) live.push_back(to_primitive(r));

    long rank = 0;
    while (!live.empty()) {
        // column occupancy among live rows
        std::map<long, long> occupancy;
        for (const auto& r : live)
            for (const auto& [c, v] : r) ++occupancy[c];
        long pivot_col = -1, best = -1;
        for (const auto& [c, n] : occupancy)
            if (best < 0 || n < best) { best = n; pivot_col = c; }

        std::size_t pivot_row = live.size();
        for (std::size_t i = 0; i < live.size(); ++i) {
            const auto& r = live[i];
            bool has = std::any_of(r.begin(), r.end(),
                                   [&](const auto& p) { return p.first == pivot_col; });
            if (has && (pivot_row == live.size() || r.size() < live[pivot_row].size()))
                pivot_row = i;
        }

        IntRow pivot = std::move(live[pivot_row]);
        live.erase(live.begin() + static_cast<long>(pivot_row));
        Integer pc;
        for (const auto& [c, v] : pivot)
            if (c == pivot_col) pc = v;

        std::vector<IntRow> next;
        next.reserve(live.size());
        for (auto& r : live) {
            Integer rc = 0;
            for (const auto& [c, v] : r)
                if (c == pivot_col) rc = v;
            IntRow updated = rc == 0 ? std::move(r) : eliminate(r, rc, pivot, pc);
            if (!updated.empty()) next.push_back(std::move(updated));
        }
        live = std::move(next);
        ++rank;
    }
    return rank;
}

long RationalMatrix::rank() const {
    std::uint64_t key = content_hash();
    if (auto hit = RankCache::global().get(key)) return *hit;
    long r = rank_uncached();
    RankCache::global().put(key, r);
    return r;
}

IntRow Echelon::reduce(IntRow v) const {
    normalize_content(v);
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        const IntRow& p = it->second;
        v = eliminate(v, v.front().second, p, p.front().second);
    }
    return v;
}

IntRow Echelon::reduce(const SparseRow& v) const { return reduce(to_primitive(v)); }

bool Echelon::insert(IntRow v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    long lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
}

bool Echelon::insert(const SparseRow& v) { return insert(to_primitive(v)); }

bool in_span(const SparseRow& v, const RationalMatrix& m) {
    Echelon e;
    for (long r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return e.reduce(v).empty();
}

SubspaceDims dimension_of_intersection_complement(const RationalMatrix& a,
                                                  const RationalMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("subspace dims: ambient dimensions differ");
    SubspaceDims out;
    out.dim_a = a.rank();
    out.dim_b = b.rank();
    RationalMatrix sum(0, a.cols());
    for (long r = 0; r < a.rows(); ++r) sum.append_row(a.row(r));
    for (long r = 0; r < b.rows(); ++r) sum.append_row(b.row(r));
    out.dim_sum = sum.rank();
    return out;
}

} // namespace liepi
