#include "liepi/evaluate.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>

namespace liepi {

CapExceeded::CapExceeded(long c)
    : std::runtime_error("entry cap of " + std::to_string(c) + " stored nonzeros exceeded"),
      cap(c) {}

void Assignment::set(int var, UpperTriMatrix m, GroupElement degree) {
    values.insert_or_assign(var, std::make_pair(std::move(m), std::move(degree)));
}

UpperTriMatrix evaluate_monomial(const LieMonomial& m, const Assignment& a) {
    if (m.empty()) throw std::invalid_argument("cannot evaluate an empty monomial");
    if (m.is_leaf()) {
        const GradedVariable& v = m.leaf();
        auto it = a.values.find(v.index);
        if (it == a.values.end())
            throw std::invalid_argument("variable x" + std::to_string(v.index) +
                                        " has no assigned value");
        if (it->second.second != v.degree)
            throw std::invalid_argument("assigned degree of x" + std::to_string(v.index) +
                                        " does not match the monomial");
        return it->second.first;
    }
    return bracket(evaluate_monomial(m.left(), a), evaluate_monomial(m.right(), a));
}

IdentityVerdict check_identity(const MultilinearPolynomial& f, const GradedAlgebra& alg) {
    IdentityVerdict out;
    if (f.is_zero()) return out;
    const std::vector<GradedVariable> vars = f.variables();
    const std::size_t m = vars.size();
    std::vector<std::vector<int>> comp(m);
    for (std::size_t i = 0; i < m; ++i) {
        comp[i] = alg.component(vars[i].degree);
        if (comp[i].empty()) return out;
    }
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
        Assignment a;
        for (std::size_t i = 0; i < m; ++i)
            a.set(vars[i].index, alg.basis[comp[i][pick[i]]].first, vars[i].degree);
        UpperTriMatrix total(alg.n);
        for (const auto& [mono, c] : f.terms()) {
            UpperTriMatrix v = evaluate_monomial(mono, a);
            v *= c;
            total += v;
        }
        if (!total.is_zero()) {
            out.identity = false;
            for (std::size_t i = 0; i < m; ++i)
                out.witness[vars[i].index] = comp[i][pick[i]];
            return out;
        }
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++pick[i] < comp[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

bool is_graded_identity(const MultilinearPolynomial& f, const GradedAlgebra& alg) {
    return check_identity(f, alg).identity;
}

RationalMatrix evaluation_matrix(const std::vector<LieMonomial>& monomials,
                                 const DegreeTuple& a, const GradedAlgebra& alg, long cap) {
    const std::size_t m = a.size();
    if (m == 0) throw std::invalid_argument("empty degree tuple");
    for (const auto& mono : monomials) {
        std::vector<GradedVariable> lv = mono.leaves();
        std::sort(lv.begin(), lv.end());
        if (lv.size() != m)
            throw std::invalid_argument("monomial length does not match the degree tuple");
        for (std::size_t i = 0; i < m; ++i)
            if (lv[i].index != static_cast<int>(i) + 1 || !(lv[i].degree == a[i]))
                throw std::invalid_argument("monomial variables do not match the degree tuple");
    }
    const long rows = static_cast<long>(monomials.size());
    std::vector<std::vector<int>> comp(m);
    for (std::size_t i = 0; i < m; ++i) {
        comp[i] = alg.component(a[i]);
        if (comp[i].empty()) return RationalMatrix(rows, 0);
    }

    const long entries = UpperTriMatrix::upper_entry_count(alg.n);
    std::vector<SparseRow> data(monomials.size());
    std::vector<std::size_t> pick(m, 0);
    long nnz = 0;
    long a_idx = 0;
    for (;;) {
        Assignment asg;
        for (std::size_t i = 0; i < m; ++i)
            asg.set(static_cast<int>(i) + 1, alg.basis[comp[i][pick[i]]].first, a[i]);
        for (std::size_t r = 0; r < monomials.size(); ++r) {
            SparseRow part = evaluate_monomial(monomials[r], asg).flatten();
            for (auto& [c, v] : part) {
                data[r].emplace_back(a_idx * entries + c, std::move(v));
                if (++nnz > cap) throw CapExceeded(cap);
            }
        }
        std::size_t i = m;
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < comp[i].size()) { done = false; break; }
            pick[i] = 0;
        }
        if (done) break;
        ++a_idx;
    }

    // drop columns with no nonzero entry and renumber the survivors
    std::vector<long> live;
    for (const auto& row : data)
        for (const auto& [c, v] : row) live.push_back(c);
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    RationalMatrix out(0, static_cast<long>(live.size()));
    for (std::size_t r = 0; r < data.size(); ++r) {
        SparseRow row = std::move(data[r]);
        for (auto& [c, v] : row)
            c = static_cast<long>(std::lower_bound(live.begin(), live.end(), c) - live.begin());
        out.append_row(std::move(row));
    }
    return out;
}

std::uint64_t algebra_content_hash(const GradedAlgebra& alg) {
    Fnv f;
    f.feed(alg.n);
    f.feed(static_cast<long>(alg.group->arity()));
    for (long mod : alg.group->moduli) f.feed(mod);
    for (const auto& nm : alg.group->names) f.feed(nm);
    for (const auto& [mat, deg] : alg.basis) {
        deg.hash_into(f);
        for (const auto& [c, v] : mat.flatten()) {
            f.feed(c);
            f.feed(v);
        }
    }
    return f.h;
}

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// single signed matrix unit; sgn 0 encodes the zero value
struct SignedUnit {
    int i = 0, j = 0, sgn = 0;
};

// [e_ij, e_kl] = d_jk e_il - d_li e_kj; for upper triangular units at
// most one term survives, and the double match cancels outright
inline SignedUnit unit_bracket(const SignedUnit& a, const SignedUnit& b) {
    if (a.j == b.i) {
        if (b.j == a.i) return {};
        return {a.i, b.j, a.sgn * b.sgn};
    }
    if (b.j == a.i) return {b.i, a.j, -a.sgn * b.sgn};
    return {};
}

struct ColKey {
    std::uint64_t h1 = 0, h2 = 0;
    bool operator==(const ColKey& o) const { return h1 == o.h1 && h2 == o.h2; }
};

struct ColKeyHash {
    std::size_t operator()(const ColKey& k) const {
        return static_cast<std::size_t>(k.h1 ^ (k.h2 * 0x9e3779b97f4a7c15ull));
    }
};

struct StreamState {
    int n = 0;
    std::size_t m = 0;
    long full = 0, cap = 0, stored = 0;
    const GradedAlgebra* alg = nullptr;
    const std::vector<std::vector<int>>* comp = nullptr;
    bool units = false;
    std::vector<SignedUnit> su;           // basis index -> unit, unit path
    std::vector<std::vector<long>> mats;  // basis index -> dense n*n, matrix path
    std::vector<int> assigned;            // position -> basis index
    std::vector<long> fact;
    std::vector<char> used;
    std::vector<std::vector<long>> valbuf;                   // matrix per depth
    std::vector<std::vector<std::pair<long, long>>> cols;    // entry -> (rank, value)
    std::vector<int> touched;
    std::unordered_set<ColKey, ColKeyHash> seen;
    Echelon ech;
};

// C = AB - BA on the upper triangle of dense n x n buffers
inline bool mat_bracket(const std::vector<long>& A, const std::vector<long>& B,
                        std::vector<long>& C, int n) {
    bool nz = false;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long s = 0;
            for (int k = i; k <= j; ++k)
                s += A[i * n + k] * B[k * n + j] - B[i * n + k] * A[k * n + j];
            C[i * n + j] = s;
            nz = nz || s != 0;
        }
    return nz;
}

void record_leaf(StreamState& st, int entry, long rank, long value) {
    auto& v = st.cols[entry];
    if (v.empty()) st.touched.push_back(entry);
    v.emplace_back(rank, value);
}

void dfs_units(StreamState& st, const SignedUnit& val, std::size_t depth, long rank) {
    if (depth + 1 == st.m) {
        record_leaf(st, (val.i - 1) * st.n + (val.j - 1), rank, val.sgn);
        return;
    }
    long idx = 0;
    const long f = st.fact[st.m - 2 - depth];
    for (std::size_t p = 1; p < st.m; ++p) {
        if (st.used[p]) continue;
        SignedUnit nv = unit_bracket(val, st.su[st.assigned[p]]);
        if (nv.sgn != 0) {
            st.used[p] = 1;
            dfs_units(st, nv, depth + 1, rank + idx * f);
            st.used[p] = 0;
        }
        ++idx;
    }
}

void dfs_mats(StreamState& st, std::size_t depth, long rank) {
    if (depth + 1 == st.m) {
        const auto& val = st.valbuf[depth];
        for (int i = 0; i < st.n; ++i)
            for (int j = i; j < st.n; ++j)
                if (val[i * st.n + j] != 0)
                    record_leaf(st, i * st.n + j, rank, val[i * st.n + j]);
        return;
    }
    long idx = 0;
    const long f = st.fact[st.m - 2 - depth];
    for (std::size_t p = 1; p < st.m; ++p) {
        if (st.used[p]) continue;
        if (mat_bracket(st.valbuf[depth], st.mats[st.assigned[p]], st.valbuf[depth + 1],
                        st.n)) {
            st.used[p] = 1;
            dfs_mats(st, depth + 1, rank + idx * f);
            st.used[p] = 0;
        }
        ++idx;
    }
}

// returns true once the echelon reached full rank
bool flush_assignment(StreamState& st) {
    std::sort(st.touched.begin(), st.touched.end());
    for (int e : st.touched) {
        auto& v = st.cols[e];
        if (v.front().second < 0)
            for (auto& [r, x] : v) x = -x;
        ColKey key;
        Fnv f1;
        for (const auto& [r, x] : v) {
            f1.feed(r);
            f1.feed(x);
            key.h2 = mix64(key.h2 ^ static_cast<std::uint64_t>(r));
            key.h2 = mix64(key.h2 ^ static_cast<std::uint64_t>(x));
        }
        key.h1 = f1.h;
        if (st.seen.insert(key).second) {
            st.stored += static_cast<long>(v.size());
            if (st.stored > st.cap) throw CapExceeded(st.cap);
            IntRow row;
            row.reserve(v.size());
            for (const auto& [r, x] : v) row.emplace_back(r, Integer(x));
            st.ech.insert(std::move(row));
        }
        v.clear();
    }
    st.touched.clear();
    if (st.seen.size() > 3'000'000) st.seen.clear();  // memory guard only
    return st.ech.rank() == st.full;
}

long stream_rank(const GradedAlgebra& alg, const std::vector<std::vector<int>>& comp,
                 long full, long cap) {
    StreamState st;
    st.n = alg.n;
    st.m = comp.size();
    st.full = full;
    st.cap = cap;
    st.alg = &alg;
    st.comp = &comp;
    st.fact.assign(st.m, 1);
    for (std::size_t k = 2; k < st.m; ++k) st.fact[k] = st.fact[k - 1] * static_cast<long>(k);
    st.assigned.assign(st.m, 0);
    st.used.assign(st.m, 0);
    st.cols.assign(static_cast<std::size_t>(st.n) * st.n, {});

    st.units = true;
    for (const auto& [mat, deg] : alg.basis) {
        SparseRow fl = mat.flatten();
        if (fl.size() != 1 || (fl[0].second != 1 && fl[0].second != -1)) {
            st.units = false;
            break;
        }
    }
    if (st.units) {
        st.su.resize(alg.basis.size());
        for (std::size_t b = 0; b < alg.basis.size(); ++b) {
            const auto& mat = alg.basis[b].first;
            for (int i = 1; i <= st.n; ++i)
                for (int j = i; j <= st.n; ++j)
                    if (mat.at(i, j) != 0)
                        st.su[b] = {i, j, mat.at(i, j) > 0 ? 1 : -1};
        }
    } else {
        st.mats.assign(alg.basis.size(), std::vector<long>(st.n * st.n, 0));
        for (std::size_t b = 0; b < alg.basis.size(); ++b) {
            const auto& mat = alg.basis[b].first;
            Integer den = 1;
            for (int i = 1; i <= st.n; ++i)
                for (int j = i; j <= st.n; ++j)
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                            mat.at(i, j).get_den().get_mpz_t());
            // scaling a basis element rescales whole assignment columns,
            // which leaves the rank alone
            for (int i = 1; i <= st.n; ++i)
                for (int j = i; j <= st.n; ++j) {
                    Rational v = mat.at(i, j) * Rational(den);
                    Integer z = to_integer(v);
                    if (!z.fits_slong_p())
                        throw std::overflow_error("basis entry does not fit a machine word");
                    st.mats[b][(i - 1) * st.n + (j - 1)] = z.get_si();
                }
        }
        st.valbuf.assign(st.m, std::vector<long>(st.n * st.n, 0));
    }

    std::vector<std::size_t> pick(st.m, 0);
    for (;;) {
        for (std::size_t i = 0; i < st.m; ++i) st.assigned[i] = comp[i][pick[i]];
        if (st.units) {
            dfs_units(st, st.su[st.assigned[0]], 0, 0);
        } else {
            st.valbuf[0] = st.mats[st.assigned[0]];
            dfs_mats(st, 0, 0);
        }
        if (flush_assignment(st)) return st.full;
        std::size_t i = st.m;
        bool done = true;
        while (i > 0) {
            --i;
            if (++pick[i] < comp[i].size()) { done = false; break; }
            pick[i] = 0;
        }
        if (done) break;
    }
    return st.ech.rank();
}

} // namespace

long spanning_rank(const GradedAlgebra& alg, const DegreeTuple& a, long cap) {
    const std::size_t m = a.size();
    if (m == 0) throw std::invalid_argument("empty degree tuple");
    std::vector<std::vector<int>> comp(m);
    for (std::size_t i = 0; i < m; ++i) {
        comp[i] = alg.component(a[i]);
        if (comp[i].empty()) return 0;
    }
    if (m == 1) return 1;

    Fnv key;
    key.feed(algebra_content_hash(alg));
    key.feed(static_cast<long>(m));
    for (const auto& d : a) d.hash_into(key);
    if (auto hit = RankCache::global().get(key.h)) return *hit;

    long rank = 0;
    if (m == 2) {
        for (int p : comp[0]) {
            for (int q : comp[1])
                if (!bracket(alg.basis[p].first, alg.basis[q].first).is_zero()) {
                    rank = 1;
                    break;
                }
            if (rank == 1) break;
        }
    } else {
        long full = 1;
        for (std::size_t k = 2; k < m; ++k) full *= static_cast<long>(k);
        rank = stream_rank(alg, comp, full, cap);
    }
    RankCache::global().put(key.h, rank);
    return rank;
}

} // namespace liepi
