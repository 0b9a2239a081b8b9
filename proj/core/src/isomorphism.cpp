#include "leibcheck/isomorphism.hpp"

#include "leibcheck/error.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <thread>
#include <tuple>

namespace leibcheck {

const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Exhausted: return "exhausted";
        case SearchStatus::CapReached: return "cap-reached";
        case SearchStatus::SignatureMismatch: return "signature-mismatch";
    }
    return "?";
}

const char* iso_verdict_name(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Certified: return "CERTIFIED";
        case IsoVerdict::FiniteFieldEvidence: return "FINITE-FIELD-EVIDENCE";
        case IsoVerdict::Inconclusive: return "INCONCLUSIVE";
        case IsoVerdict::NonIsomorphic: return "NON-ISOMORPHIC";
    }
    return "?";
}

unsigned configured_threads() {
    if (const char* env = std::getenv("LEIBCHECK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::uint64_t next_prime_1mod4(std::uint64_t p) {
    for (std::uint64_t q = p + 1;; ++q)
        if (q % 4 == 1 && is_prime(q)) return q;
}

PAlgebra reduce_algebra(const LeibnizAlgebra<Gaussian>& a, std::uint64_t p) {
    try {
        return map_algebra(a, PrimeFieldElem(0, p), [p](const Gaussian& g) { return reduce_mod_p(g, p); });
    } catch (const Error& e) {
        if (e.code() == Errc::DenominatorDividesP) throw Error(Errc::BadPrime, e.what());
        throw;
    }
}

namespace {

struct Adapted {
    PMatrix basis;             // columns in original coordinates
    std::vector<int> level;    // flag level of each column
    std::vector<std::size_t> chain_dims;
};

// Basis refining A = A^1 > (A^2 + Leib cap A^1) > A^2 > (A^3 + Leib cap A^2) > ... > 0.
Adapted adapt(const PAlgebra& a, bool use_flags) {
    const std::size_t n = a.dim();
    const PrimeFieldElem& z = a.zero();
    Adapted out;
    if (!use_flags) {
        out.basis = PMatrix::identity(n, z);
        out.level.assign(n, 0);
        out.chain_dims = {n, 0};
        return out;
    }
    auto lcs = series(a, SeriesKind::LowerCentral).subspaces;
    auto leib = leib_ideal(a);
    std::vector<Subspace<PrimeFieldElem>> chain;
    auto push = [&](const Subspace<PrimeFieldElem>& s) {
        if (chain.empty() || chain.back().dim() != s.dim()) chain.push_back(s);
    };
    for (std::size_t i = 0; i < lcs.size(); ++i) {
        push(lcs[i]);
        auto cap = intersection(lcs[i], leib);
        if (i + 1 < lcs.size()) push(sum(lcs[i + 1], cap));
        else push(cap);
    }
    push(Subspace<PrimeFieldElem>(n, z));
    std::vector<Vec<PrimeFieldElem>> cols;
    for (std::size_t m = 0; m + 1 < chain.size(); ++m) {
        auto current = chain[m + 1];
        for (const auto& row : chain[m].vectors()) {
            if (current.contains(row)) continue;
            cols.push_back(row);
            out.level.push_back(static_cast<int>(m));
            current = sum(current, Subspace<PrimeFieldElem>::span(n, {row}, z));
        }
    }
    for (const auto& s : chain) out.chain_dims.push_back(s.dim());
    out.basis = PMatrix::from_columns(cols, n, z);
    return out;
}

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Eq {
    std::vector<std::pair<int, u32>> lin;
    std::vector<std::tuple<int, int, u32>> quad;
};

struct Found {
    std::vector<int> values;
    u64 at = 0;  // local candidate count at discovery
};

struct PartitionResult {
    std::vector<Found> found;
    u64 candidates = 0;
    bool capped = false;
};

// Unknowns P'_{rs} with level(r) >= level(s); equations
// sum_s a_{ij}^s P_{rs} - sum_{u,v} b_{uv}^r P_{ui} P_{vj} = 0.
class Solver {
public:
    Solver(const PAlgebra& a, const PAlgebra& b, const std::vector<int>& level, u32 p)
        : n_(a.dim()), p_(p), level_(level) {
        var_of_.assign(n_ * n_, -1);
        for (std::size_t s = 0; s < n_; ++s)
            for (std::size_t r = 0; r < n_; ++r)
                if (level_[r] >= level_[s]) {
                    var_of_[r * n_ + s] = static_cast<int>(vars_.size());
                    vars_.push_back({r, s});
                }
        inv_.assign(p_, 0);
        for (u32 x = 1; x < p_; ++x) inv_[x] = static_cast<u32>(PrimeFieldElem(x, p_).inv().value());

        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t r = 0; r < n_; ++r) {
                    std::map<int, u32> lin;
                    std::map<std::pair<int, int>, u32> quad;
                    for (std::size_t s = 0; s < n_; ++s) {
                        u32 c = static_cast<u32>(a.product(i, j)[s].value());
                        int v = var_of_[r * n_ + s];
                        if (c && v >= 0) lin[v] = (lin[v] + c) % p_;
                    }
                    for (const auto& pr : b.products()) {
                        u32 c = static_cast<u32>(pr.value[r].value());
                        if (!c) continue;
                        int v1 = var_of_[pr.left * n_ + i], v2 = var_of_[pr.right * n_ + j];
                        if (v1 < 0 || v2 < 0) continue;
                        auto key = std::minmax(v1, v2);
                        quad[key] = (quad[key] + (p_ - c)) % p_;
                    }
                    Eq e;
                    for (auto [v, c] : lin)
                        if (c) e.lin.push_back({v, c});
                    for (auto [k, c] : quad)
                        if (c) e.quad.push_back({k.first, k.second, c});
                    if (!e.lin.empty() || !e.quad.empty()) eqs_.push_back(std::move(e));
                }

        // Branching order: diagonal blocks column-major by level, then the rest
        // by level gap.
        std::vector<bool> used(vars_.size(), false);
        for (const auto& e : eqs_) {
            for (auto [v, c] : e.lin) used[v] = true;
            for (auto [v1, v2, c] : e.quad) used[v1] = used[v2] = true;
        }
        std::vector<int> idx(vars_.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
        std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
            auto gap = [&](int v) { return level_[vars_[v].first] - level_[vars_[v].second]; };
            return gap(x) < gap(y);
        });
        init_.assign(vars_.size(), -1);
        for (int v : idx) {
            bool diag = level_[vars_[v].first] == level_[vars_[v].second];
            if (!used[v] && !diag) init_[v] = 0;  // free off-diagonal entry: any value works
            else order_.push_back(v);
        }
        int max_level = *std::max_element(level_.begin(), level_.end());
        blocks_.resize(max_level + 1);
        for (std::size_t s = 0; s < n_; ++s) blocks_[level_[s]].push_back(s);

        values_.push_back(0);
        for (u32 k = 1; k <= p_ / 2; ++k) {
            values_.push_back(k);
            values_.push_back(p_ - k);
        }
    }

    std::size_t var_count() const { return vars_.size(); }
    const std::vector<int>& initial() const { return init_; }
    const std::vector<u32>& value_order() const { return values_; }

    // Returns false on conflict; fills forced assignments in place.
    bool propagate(std::vector<int>& val) const {
        const std::size_t V = vars_.size();
        std::vector<u32> rows;
        for (;;) {
            rows.clear();
            std::size_t nrows = 0;
            for (const auto& e : eqs_) {
                std::size_t base = rows.size();
                rows.resize(base + V + 1, 0);
                u32* row = rows.data() + base;
                bool affine = true;
                for (auto [v, c] : e.lin) {
                    if (val[v] >= 0) row[V] = static_cast<u32>((row[V] + static_cast<u64>(c) * static_cast<u64>(val[v])) % p_);
                    else row[v] = (row[v] + c) % p_;
                }
                for (auto [v1, v2, c] : e.quad) {
                    bool a1 = val[v1] >= 0, a2 = val[v2] >= 0;
                    if (a1 && a2) {
                        row[V] = static_cast<u32>((row[V] + static_cast<u64>(c) * val[v1] % p_ * val[v2]) % p_);
                    } else if (a1) {
                        row[v2] = static_cast<u32>((row[v2] + static_cast<u64>(c) * val[v1]) % p_);
                    } else if (a2) {
                        row[v1] = static_cast<u32>((row[v1] + static_cast<u64>(c) * val[v2]) % p_);
                    } else {
                        affine = false;
                        break;
                    }
                }
                if (!affine) rows.resize(base);
                else ++nrows;
            }
            // Gauss-Jordan mod p over the affine equations
            std::vector<int> pivot_col;
            std::size_t rank = 0;
            for (std::size_t c = 0; c < V && rank < nrows; ++c) {
                if (val[c] >= 0) continue;
                std::size_t pr = rank;
                while (pr < nrows && rows[pr * (V + 1) + c] == 0) ++pr;
                if (pr == nrows) continue;
                if (pr != rank)
                    std::swap_ranges(rows.begin() + pr * (V + 1), rows.begin() + (pr + 1) * (V + 1),
                                     rows.begin() + rank * (V + 1));
                u32* prow = rows.data() + rank * (V + 1);
                u32 inv = inv_[prow[c]];
                for (std::size_t k = 0; k <= V; ++k) prow[k] = static_cast<u32>(static_cast<u64>(prow[k]) * inv % p_);
                for (std::size_t r = 0; r < nrows; ++r) {
                    if (r == rank) continue;
                    u32* row = rows.data() + r * (V + 1);
                    u32 f = row[c];
                    if (!f) continue;
                    for (std::size_t k = 0; k <= V; ++k)
                        if (prow[k]) row[k] = static_cast<u32>((row[k] + static_cast<u64>(p_ - f) * prow[k]) % p_);
                }
                pivot_col.push_back(static_cast<int>(c));
                ++rank;
            }
            for (std::size_t r = rank; r < nrows; ++r)
                if (rows[r * (V + 1) + V] != 0) return false;
            bool progress = false;
            for (std::size_t r = 0; r < rank; ++r) {
                const u32* row = rows.data() + r * (V + 1);
                bool unit = true;
                for (std::size_t k = 0; k < V && unit; ++k)
                    if (static_cast<int>(k) != pivot_col[r] && row[k]) unit = false;
                if (!unit) continue;
                val[pivot_col[r]] = static_cast<int>((p_ - row[V]) % p_);
                progress = true;
            }
            if (!progress) break;
        }
        return blocks_ok(val);
    }

    int next_var(const std::vector<int>& val) const {
        for (int v : order_)
            if (val[v] < 0) return v;
        return -1;
    }

    // Depth-first search from an already-branched state. `before(own)` reports
    // lower bounds on the candidates spent and witnesses found by earlier
    // partitions; both only grow, so stopping on them never cuts off a witness
    // the sequential order would reach.
    template <class Before>
    void dfs(std::vector<int> val, PartitionResult& out, u64 cap, std::size_t want, Before&& before) const {
        if (!propagate(val)) return;
        int v = next_var(val);
        if (v < 0) {
            out.found.push_back({val, out.candidates});
            return;
        }
        for (u32 x : values_) {
            if (out.capped) return;
            auto [spent, found] = before(out.candidates, out.found.size());
            if (out.found.size() + found >= want) return;
            if (out.candidates + spent >= cap) {
                out.capped = true;
                return;
            }
            ++out.candidates;
            auto next = val;
            next[v] = static_cast<int>(x);
            dfs(std::move(next), out, cap, want, before);
        }
    }

    PMatrix to_matrix(const std::vector<int>& val, std::uint64_t p) const {
        PMatrix m(n_, n_, PrimeFieldElem(0, p));
        for (std::size_t k = 0; k < vars_.size(); ++k)
            m(vars_[k].first, vars_[k].second) = PrimeFieldElem(val[k] < 0 ? 0 : val[k], p);
        return m;
    }

private:
    // Every fully assigned column of a diagonal block must be independent.
    bool blocks_ok(const std::vector<int>& val) const {
        for (const auto& cols : blocks_) {
            std::vector<std::vector<u32>> mat;
            for (std::size_t s : cols) {
                std::vector<u32> col;
                bool full = true;
                for (std::size_t r : cols) {
                    int v = var_of_[r * n_ + s];
                    if (val[v] < 0) {
                        full = false;
                        break;
                    }
                    col.push_back(static_cast<u32>(val[v]));
                }
                if (full) mat.push_back(std::move(col));
            }
            if (!independent(mat)) return false;
        }
        return true;
    }

    bool independent(std::vector<std::vector<u32>> m) const {
        std::size_t rank = 0;
        const std::size_t cols = m.empty() ? 0 : m[0].size();
        for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
            std::size_t pr = rank;
            while (pr < m.size() && m[pr][c] == 0) ++pr;
            if (pr == m.size()) continue;
            std::swap(m[pr], m[rank]);
            u32 inv = inv_[m[rank][c]];
            for (auto& x : m[rank]) x = static_cast<u32>(static_cast<u64>(x) * inv % p_);
            for (std::size_t r = 0; r < m.size(); ++r) {
                if (r == rank || !m[r][c]) continue;
                u32 f = m[r][c];
                for (std::size_t k = 0; k < cols; ++k)
                    m[r][k] = static_cast<u32>((m[r][k] + static_cast<u64>(p_ - f) * m[rank][k]) % p_);
            }
            ++rank;
        }
        return rank == m.size();
    }

    std::size_t n_;
    u32 p_;
    std::vector<int> level_;
    std::vector<std::pair<std::size_t, std::size_t>> vars_;
    std::vector<int> var_of_;
    std::vector<Eq> eqs_;
    std::vector<int> order_;
    std::vector<int> init_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<u32> inv_;
    std::vector<u32> values_;
};

}  // namespace

SearchResult adapted_search(const LeibnizAlgebra<Gaussian>& a, const LeibnizAlgebra<Gaussian>& b,
                            const SearchConfig& cfg) {
    SearchResult res;
    if (cfg.candidate_cap == 0) throw Error(Errc::HypothesisViolation, "candidate cap must be positive");
    if (a.dim() != b.dim()) {
        res.status = SearchStatus::SignatureMismatch;
        res.reason = "dimensions differ";
        return res;
    }
    auto sa = signature(a), sb = signature(b);
    if (!(sa == sb)) {
        res.status = SearchStatus::SignatureMismatch;
        res.reason = "signatures differ in " + sa.first_difference(sb);
        return res;
    }
    const u64 p = cfg.prime;
    sqrt_minus_one(p);  // validates the prime
    PAlgebra ap = reduce_algebra(a, p), bp = reduce_algebra(b, p);
    // Der(A) may grow mod p without harming the search; the flag dimensions may not.
    auto survives = [](InvariantSignature reduced, const InvariantSignature& exact) {
        reduced.dim_der = exact.dim_der;
        return reduced == exact;
    };
    if (!survives(signature(ap), sa) || !survives(signature(bp), sb))
        throw Error(Errc::BadPrime, "reduction mod " + std::to_string(p) + " changes the invariants");

    Adapted ad_a = adapt(ap, cfg.adapted), ad_b = adapt(bp, cfg.adapted);
    if (ad_a.chain_dims != ad_b.chain_dims) {
        res.status = SearchStatus::SignatureMismatch;
        res.reason = "adapted flag dimensions differ";
        return res;
    }
    PAlgebra a2 = base_change(ap, ad_a.basis), b2 = base_change(bp, ad_b.basis);
    Solver solver(a2, b2, ad_a.level, static_cast<u32>(p));

    std::vector<int> root = solver.initial();
    if (!solver.propagate(root)) {
        res.status = SearchStatus::Exhausted;
        return res;
    }
    const std::size_t want = std::max<std::size_t>(1, cfg.max_witnesses);
    std::vector<PartitionResult> parts;
    int root_var = solver.next_var(root);
    if (root_var < 0) {
        PartitionResult pr;
        pr.found.push_back({root, 0});
        parts.push_back(pr);
    } else {
        const auto& values = solver.value_order();
        parts.resize(values.size());
        std::vector<std::atomic<u64>> progress(values.size());
        std::vector<std::atomic<std::size_t>> found(values.size());
        for (auto& x : progress) x.store(0, std::memory_order_relaxed);
        for (auto& x : found) x.store(0, std::memory_order_relaxed);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= values.size()) return;
                PartitionResult& pr = parts[k];
                pr.candidates = 1;
                auto st = root;
                st[root_var] = static_cast<int>(values[k]);
                progress[k].store(1, std::memory_order_relaxed);
                solver.dfs(st, pr, cfg.candidate_cap, want, [&](u64 own, std::size_t own_found) {
                    progress[k].store(own, std::memory_order_relaxed);
                    found[k].store(own_found, std::memory_order_relaxed);
                    u64 spent = 0;
                    std::size_t got = 0;
                    for (std::size_t j = 0; j < k; ++j) {
                        spent += progress[j].load(std::memory_order_relaxed);
                        got += found[j].load(std::memory_order_relaxed);
                    }
                    return std::pair<u64, std::size_t>{spent, got};
                });
                progress[k].store(pr.candidates, std::memory_order_relaxed);
                found[k].store(pr.found.size(), std::memory_order_relaxed);
            }
        };
        unsigned threads = cfg.threads ? cfg.threads : configured_threads();
        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(values.size())));
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    // Replay the partitions in order to reproduce the sequential result.
    PMatrix sa_basis = ad_a.basis, sb_basis = ad_b.basis;
    PMatrix sa_inv = invert(sa_basis);
    u64 cum = 0;
    bool capped = false;
    for (const auto& pr : parts) {
        for (const auto& f : pr.found) {
            if (res.witnesses.size() >= want) break;
            if (cum + f.at > cfg.candidate_cap) {
                capped = true;
                break;
            }
            res.witnesses.push_back(sb_basis * solver.to_matrix(f.values, p) * sa_inv);
            if (res.witnesses.size() == want) res.candidates = cum + f.at;
        }
        if (res.witnesses.size() >= want || capped) break;
        cum += pr.candidates;
        if (pr.capped || cum > cfg.candidate_cap) {
            capped = true;
            break;
        }
    }
    if (res.witnesses.size() < want) res.candidates = std::min<u64>(cum, cfg.candidate_cap);
    for (const auto& w : res.witnesses)
        if (!verify_witness(ap, bp, w).ok) throw Error(Errc::HypothesisViolation, "internal: search produced a non-witness");
    if (!res.witnesses.empty()) res.status = SearchStatus::Found;
    else res.status = capped ? SearchStatus::CapReached : SearchStatus::Exhausted;
    return res;
}

namespace {

// Small Gaussian rationals reducing to each residue, best first.
std::vector<std::vector<Gaussian>> lift_table(u64 p, const SearchConfig& cfg, std::size_t per_residue) {
    const u64 r = sqrt_minus_one(p);
    struct Cand {
        Gaussian g;
        std::tuple<long, long, long, long, long> key;
    };
    std::vector<std::vector<Cand>> table(p);
    const long h = static_cast<long>(cfg.lift_height);
    for (long q = 1; q <= static_cast<long>(cfg.lift_denominator); ++q) {
        if (q % static_cast<long>(p) == 0) continue;
        for (long a = -h; a <= h; ++a)
            for (long b = -h; b <= h; ++b) {
                Gaussian g(Rational(a, q), Rational(b, q));
                u64 res = reduce_mod_p(g, p).value();
                // reduced form decides the height
                long na = std::labs(g.re().numerator().get_si()), nb = std::labs(g.im().numerator().get_si());
                long den = std::max(g.re().denominator().get_si(), g.im().denominator().get_si());
                auto key = std::make_tuple(std::max({na, nb, den}), den, na + nb, g.re().sign() < 0 ? 1L : 0L,
                                           g.im().sign() < 0 ? 1L : 0L);
                table[res].push_back({g, key});
            }
    }
    std::vector<std::vector<Gaussian>> out(p);
    // Zero residues lift to zero: witnesses worth certifying are sparse, and
    // allowing 3+2i for a zero mod 13 multiplies the lifting tree for nothing.
    out[0].push_back(Gaussian());
    for (u64 v = 1; v < p; ++v) {
        auto& c = table[v];
        std::stable_sort(c.begin(), c.end(), [](const Cand& x, const Cand& y) { return x.key < y.key; });
        for (const auto& x : c) {
            bool dup = false;
            for (const auto& y : out[v]) dup = dup || y == x.g;
            if (!dup && out[v].size() < per_residue) out[v].push_back(x.g);
        }
    }
    return out;
}

}  // namespace

std::optional<Matrix<Gaussian>> lift_witness(const PMatrix& w, const LeibnizAlgebra<Gaussian>& a,
                                             const LeibnizAlgebra<Gaussian>& b, const SearchConfig& cfg) {
    const std::size_t n = a.dim();
    const u64 p = w(0, 0).prime();
    auto table = lift_table(p, cfg, 6);
    Matrix<Gaussian> m(n, n, Gaussian());
    std::size_t budget = cfg.lift_budget;

    // Pairs (i,k) whose check only needs columns up to c.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ready(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t need = std::max(i, k);
            for (std::size_t s = 0; s < n; ++s)
                if (!a.product(i, k)[s].is_zero()) need = std::max(need, s);
            ready[need].emplace_back(i, k);
        }
    auto column_ok = [&](std::size_t c) {
        for (auto [i, k] : ready[c]) {
            Vec<Gaussian> lhs(n, Gaussian());
            for (std::size_t s = 0; s < n; ++s) {
                const Gaussian& x = a.product(i, k)[s];
                if (x.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r) lhs[r] += m(r, s) * x;
            }
            Vec<Gaussian> rhs = b.bracket(m.column(i), m.column(k));
            for (std::size_t r = 0; r < n; ++r)
                if (!(lhs[r] == rhs[r])) return false;
        }
        return true;
    };
    // Every candidate value tried costs one unit of budget, so a failing lift
    // is bounded by the number of exact column checks, not just tree depth.
    std::function<bool(std::size_t)> rec = [&](std::size_t cell) -> bool {
        if (cell == n * n) return is_invertible(m) && verify_witness(a, b, m).ok;
        std::size_t c = cell / n, r = cell % n;
        for (const auto& g : table[w(r, c).value()]) {
            if (budget == 0) return false;
            --budget;
            m(r, c) = g;
            if (r + 1 == n && !column_ok(c)) continue;
            if (rec(cell + 1)) return true;
        }
        m(r, c) = Gaussian();
        return false;
    };
    if (rec(0)) return m;
    return std::nullopt;
}

IsoOutcome search_and_certify(const LeibnizAlgebra<Gaussian>& a, const LeibnizAlgebra<Gaussian>& b, SearchConfig cfg,
                              std::size_t lift_attempts) {
    IsoOutcome out;
    cfg.max_witnesses = std::max<std::size_t>(1, lift_attempts);
    auto res = adapted_search(a, b, cfg);
    out.candidates = res.candidates;
    if (res.status == SearchStatus::SignatureMismatch) {
        out.verdict = IsoVerdict::NonIsomorphic;
        out.note = "signature certificate: " + res.reason;
        return out;
    }
    if (res.witnesses.empty()) {
        out.verdict = IsoVerdict::Inconclusive;
        out.note = std::string("no witness mod ") + std::to_string(cfg.prime) + " (" + search_status_name(res.status) + ")";
        return out;
    }
    for (const auto& w : res.witnesses) {
        if (auto exact = lift_witness(w, a, b, cfg)) {
            out.verdict = IsoVerdict::Certified;
            out.exact = exact;
            out.evidence.emplace_back(cfg.prime, w);
            out.note = "exact witness over Q(i)";
            return out;
        }
    }
    out.evidence.emplace_back(cfg.prime, res.witnesses.front());
    SearchConfig second = cfg;
    second.prime = next_prime_1mod4(cfg.prime);
    second.max_witnesses = 1;
    auto res2 = adapted_search(a, b, second);
    out.candidates += res2.candidates;
    if (res2.witnesses.empty()) {
        out.verdict = IsoVerdict::Inconclusive;
        out.note = "witness mod " + std::to_string(cfg.prime) + " did not lift; none found mod " +
                   std::to_string(second.prime);
        return out;
    }
    out.evidence.emplace_back(second.prime, res2.witnesses.front());
    out.verdict = IsoVerdict::FiniteFieldEvidence;
    out.note = "witnesses mod " + std::to_string(cfg.prime) + " and " + std::to_string(second.prime) + "; no exact lift";
    return out;
}

}  // namespace leibcheck
