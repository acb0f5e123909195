#include "ng/subgraphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "ng/errors.hpp"
#include "ng/neighborhoods.hpp"
#include "ng/resultants.hpp"

namespace ng {

namespace {

void validate_pattern(const PatternGraph& H) {
    if (H.v == 0) throw invalid_input("pattern needs at least one vertex");
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (auto [i, j] : H.edges) {
        if (i >= H.v || j >= H.v) throw invalid_input("pattern edge endpoint out of range");
        if (i == j) throw invalid_input("pattern loops are not allowed");
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second) throw invalid_input("duplicate pattern edge");
    }
}

std::vector<std::vector<uint32_t>> adjacency_lists(const PatternGraph& H) {
    std::vector<std::vector<uint32_t>> adj(H.v);
    for (auto [i, j] : H.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    return adj;
}

uint64_t falling(uint64_t n, uint64_t k) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        if (i > n) return 0;
        r *= n - i;
    }
    return r;
}

uint64_t factorial(uint64_t n) { return falling(n, n); }

struct BudgetCounter {
    uint64_t left;
    void charge(uint64_t units) {
        if (left < units) throw budget_exceeded("subgraph counting budget exhausted");
        left -= units;
    }
};

uint64_t popcount_words(const uint64_t* w, uint32_t n) {
    uint64_t c = 0;
    for (uint32_t j = 0; j < n; ++j) c += static_cast<uint64_t>(std::popcount(w[j]));
    return c;
}

uint64_t popcount_and(const uint64_t* a, const uint64_t* b, uint32_t n) {
    uint64_t c = 0;
    for (uint32_t j = 0; j < n; ++j) c += static_cast<uint64_t>(std::popcount(a[j] & b[j]));
    return c;
}

void and_into(const uint64_t* a, const uint64_t* b, uint64_t* out, uint32_t n) {
    for (uint32_t j = 0; j < n; ++j) out[j] = a[j] & b[j];
}

// Column-wise counts of |{i in ids : adj(i, column)}| held in four bit
// planes; out gets a mask of the columns whose count reaches thresh.
// Requires ids.size() <= 15 and 1 <= thresh <= 15 so the planes never
// overflow and the threshold reduces to the carry of adding 16 - thresh.
void batch_threshold(const GraphTable& gt, const std::vector<uint32_t>& ids,
                     uint32_t thresh, std::vector<uint64_t>& out) {
    const uint32_t w = gt.words();
    std::vector<uint64_t> s0(w, 0), s1(w, 0), s2(w, 0), s3(w, 0);
    for (uint32_t id : ids) {
        const uint64_t* r = gt.row(id);
        for (uint32_t j = 0; j < w; ++j) {
            uint64_t c = r[j], t;
            t = s0[j] & c; s0[j] ^= c; c = t;
            t = s1[j] & c; s1[j] ^= c; c = t;
            t = s2[j] & c; s2[j] ^= c; c = t;
            s3[j] ^= c;
        }
    }
    const uint64_t k = 16 - thresh;
    out.assign(w, 0);
    for (uint32_t j = 0; j < w; ++j) {
        uint64_t carry = 0;
        const uint64_t planes[4] = {s0[j], s1[j], s2[j], s3[j]};
        for (int b = 0; b < 4; ++b) {
            uint64_t kb = ((k >> b) & 1) ? ~0ull : 0ull;
            carry = (planes[b] & kb) | (planes[b] & carry) | (kb & carry);
        }
        out[j] = carry;
    }
}

// Detect complete bipartite structure; on success fills the two part sizes.
bool detect_complete_bipartite(const PatternGraph& H, uint32_t* a, uint32_t* b) {
    if (H.edges.empty()) return false;
    auto adj = adjacency_lists(H);
    std::vector<int> color(H.v, -1);
    std::queue<uint32_t> bfs;
    color[0] = 0;
    bfs.push(0);
    uint32_t reached = 1;
    while (!bfs.empty()) {
        uint32_t u = bfs.front();
        bfs.pop();
        for (uint32_t w : adj[u]) {
            if (color[w] == -1) {
                color[w] = 1 - color[u];
                bfs.push(w);
                ++reached;
            } else if (color[w] == color[u]) {
                return false;   // odd cycle
            }
        }
    }
    if (reached != H.v) return false;   // disconnected
    uint32_t n0 = 0;
    for (uint32_t i = 0; i < H.v; ++i) n0 += color[i] == 0;
    uint32_t n1 = H.v - n0;
    if (H.edges.size() != static_cast<size_t>(n0) * n1) return false;
    *a = n0;
    *b = n1;
    return true;
}

// Labeled K_{a,b} copies: enumerate unordered images S of the smaller part
// in increasing index order with a progressively intersected candidate row,
// then close with m! * falling(|common(S) ^ N(v)|, M) over the last member v.
// Common neighbors of S never meet S itself (a row's own bit is clear), so
// injectivity across the parts is automatic.
uint64_t count_complete_bipartite(const GraphTable& gt, uint32_t s1, uint32_t s2,
                                  BudgetCounter& bud) {
    const uint32_t m = std::min(s1, s2), M = std::max(s1, s2);
    const uint32_t n = gt.n(), w = gt.words();
    const uint64_t mfact = factorial(m);
    if (m == 0 || n < m) return 0;

    std::vector<std::vector<uint64_t>> R(m, std::vector<uint64_t>(w, 0));
    for (uint32_t i = 0; i < n; ++i) R[0][i >> 6] |= 1ull << (i & 63);

    uint64_t total = 0;
    std::vector<uint32_t> ids;
    std::vector<uint64_t> mask;
    auto rec = [&](auto&& self, uint32_t depth, uint32_t start) -> void {
        const uint64_t* Rp = R[depth].data();
        if (depth + 1 == m) {
            uint64_t pc = popcount_words(Rp, w);
            if (pc <= 15 && M <= 15 && pc >= M) {
                bud.charge(pc + 1);
                ids.clear();
                for (uint32_t j = 0; j < w; ++j)
                    for (uint64_t word = Rp[j]; word; word &= word - 1)
                        ids.push_back((j << 6) + std::countr_zero(word));
                batch_threshold(gt, ids, M, mask);
                for (uint32_t j = start >> 6; j < w; ++j) {
                    uint64_t word = mask[j];
                    if (j == (start >> 6) && (start & 63)) word &= ~0ull << (start & 63);
                    for (; word; word &= word - 1) {
                        uint32_t vv = (j << 6) + std::countr_zero(word);
                        uint64_t cnt = popcount_and(Rp, gt.row(vv), w);
                        total += mfact * falling(cnt, M);
                    }
                }
            } else {
                for (uint32_t vv = start; vv < n; ++vv) {
                    bud.charge(1);
                    uint64_t cnt = popcount_and(Rp, gt.row(vv), w);
                    if (cnt >= M) total += mfact * falling(cnt, M);
                }
            }
            return;
        }
        for (uint32_t vv = start; vv < n; ++vv) {
            bud.charge(1);
            and_into(Rp, gt.row(vv), R[depth + 1].data(), w);
            if (popcount_words(R[depth + 1].data(), w) < M) continue;
            self(self, depth + 1, vv + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

// Generic embedder: place pattern vertices in degeneracy order, candidates
// being the intersection of the rows of already-placed neighbors.  A maximal
// trailing block of pairwise non-adjacent vertices with identical placed
// neighborhoods collapses into one falling factorial.
uint64_t count_generic(const GraphTable& gt, const PatternGraph& H, BudgetCounter& bud) {
    const uint32_t n = gt.n(), w = gt.words();
    auto dord = degeneracy_order(H);
    const uint32_t v = H.v;
    auto adj = adjacency_lists(H);
    std::vector<uint32_t> pos(v);
    for (uint32_t i = 0; i < v; ++i) pos[dord.order[i]] = i;
    std::vector<std::vector<uint32_t>> backs(v);   // positions of placed nbrs
    for (uint32_t i = 0; i < v; ++i) {
        for (uint32_t nb : adj[dord.order[i]])
            if (pos[nb] < i) backs[i].push_back(pos[nb]);
        std::sort(backs[i].begin(), backs[i].end());
    }

    uint32_t group = 1;   // trailing collapsed block size
    while (group < v) {
        uint32_t cand = v - group - 1;   // try extending by position cand
        bool ok = backs[cand] == backs[v - 1];
        for (uint32_t i = cand; ok && i < v; ++i)
            ok = backs[i].empty() || backs[i].back() < cand;
        if (!ok) break;
        ++group;
    }
    const uint32_t prefix = v - group;
    const auto& gback = backs[v - 1];

    std::vector<uint32_t> mapping(prefix);
    std::vector<uint64_t> used(w, 0);
    std::vector<std::vector<uint64_t>> R(prefix + 1, std::vector<uint64_t>(w));
    uint64_t total = 0;

    auto eval_group = [&]() {
        bud.charge(1);
        uint64_t cnt;
        if (gback.empty()) {
            cnt = n - prefix;
        } else {
            auto& Rg = R[prefix];
            and_into(gt.row(mapping[gback[0]]), gt.row(mapping[gback[0]]), Rg.data(), w);
            for (size_t i = 1; i < gback.size(); ++i)
                and_into(Rg.data(), gt.row(mapping[gback[i]]), Rg.data(), w);
            cnt = 0;
            for (uint32_t j = 0; j < w; ++j)
                cnt += static_cast<uint64_t>(std::popcount(Rg[j] & ~used[j]));
        }
        total += falling(cnt, group);
    };

    auto place = [&](auto&& self, uint32_t depth) -> void {
        if (depth == prefix) {
            eval_group();
            return;
        }
        auto try_vertex = [&](uint32_t m) {
            mapping[depth] = m;
            used[m >> 6] |= 1ull << (m & 63);
            self(self, depth + 1);
            used[m >> 6] &= ~(1ull << (m & 63));
        };
        if (backs[depth].empty()) {
            for (uint32_t m = 0; m < n; ++m) {
                bud.charge(1);
                if ((used[m >> 6] >> (m & 63)) & 1) continue;
                try_vertex(m);
            }
        } else {
            auto& Rd = R[depth];
            and_into(gt.row(mapping[backs[depth][0]]), gt.row(mapping[backs[depth][0]]),
                     Rd.data(), w);
            for (size_t i = 1; i < backs[depth].size(); ++i)
                and_into(Rd.data(), gt.row(mapping[backs[depth][i]]), Rd.data(), w);
            for (uint32_t j = 0; j < w; ++j) {
                for (uint64_t word = Rd[j] & ~used[j]; word; word &= word - 1) {
                    bud.charge(1);
                    try_vertex((j << 6) + std::countr_zero(word));
                }
            }
        }
    };
    place(place, 0);
    return total;
}

uint64_t geo_sum_u(uint64_t q, uint32_t terms) {
    uint64_t s = 0, pw = 1;
    for (uint32_t i = 0; i < terms; ++i, pw *= q) s += pw;
    return s;
}

} // namespace

PatternGraph parse_pattern(const std::string& text) {
    std::istringstream in(text);
    PatternGraph H;
    size_t e = 0;
    if (!(in >> H.v >> e)) throw invalid_input("pattern header must be \"v e\"");
    for (size_t i = 0; i < e; ++i) {
        uint32_t a = 0, b = 0;
        if (!(in >> a >> b)) throw invalid_input("truncated pattern edge list");
        H.edges.emplace_back(a, b);
    }
    std::string rest;
    if (in >> rest) throw invalid_input("trailing tokens after pattern edge list");
    validate_pattern(H);
    return H;
}

PatternGraph pattern_complete(uint32_t n) {
    PatternGraph H{n, {}};
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) H.edges.emplace_back(i, j);
    validate_pattern(H);
    return H;
}

PatternGraph pattern_complete_bipartite(uint32_t a, uint32_t b) {
    PatternGraph H{a + b, {}};
    for (uint32_t i = 0; i < a; ++i)
        for (uint32_t j = 0; j < b; ++j) H.edges.emplace_back(i, a + j);
    validate_pattern(H);
    return H;
}

PatternGraph pattern_path(uint32_t n) {
    PatternGraph H{n, {}};
    for (uint32_t i = 0; i + 1 < n; ++i) H.edges.emplace_back(i, i + 1);
    validate_pattern(H);
    return H;
}

PatternGraph pattern_cycle(uint32_t n) {
    if (n < 3) throw invalid_input("cycle needs at least three vertices");
    PatternGraph H = pattern_path(n);
    H.edges.emplace_back(n - 1, 0);
    return H;
}

DegeneracyOrder degeneracy_order(const PatternGraph& H) {
    validate_pattern(H);
    auto adj = adjacency_lists(H);
    const uint32_t v = H.v;
    std::vector<uint32_t> deg(v);
    std::vector<bool> removed(v, false);
    for (uint32_t i = 0; i < v; ++i) deg[i] = static_cast<uint32_t>(adj[i].size());

    DegeneracyOrder out;
    out.order.resize(v);
    for (uint32_t step = 0; step < v; ++step) {
        uint32_t best = v;
        for (uint32_t i = 0; i < v; ++i)
            if (!removed[i] && (best == v || deg[i] < deg[best])) best = i;
        removed[best] = true;
        out.order[v - 1 - step] = best;
        for (uint32_t nb : adj[best])
            if (!removed[nb]) --deg[nb];
    }
    out.back_deg.resize(v);
    std::vector<uint32_t> pos(v);
    for (uint32_t i = 0; i < v; ++i) pos[out.order[i]] = i;
    for (uint32_t i = 0; i < v; ++i) {
        uint32_t d = 0;
        for (uint32_t nb : adj[out.order[i]]) d += pos[nb] < i;
        out.back_deg[i] = d;
        out.degeneracy = std::max(out.degeneracy, d);
    }
    return out;
}

uint64_t default_budget() {
    if (const char* env = std::getenv("NGLAB_BUDGET")) {
        char* end = nullptr;
        uint64_t val = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && val > 0) return val;
    }
    return 1000000000ull;
}

uint64_t count_labeled(const GraphTable& gt, const PatternGraph& H, uint64_t budget) {
    validate_pattern(H);
    BudgetCounter bud{budget == 0 ? default_budget() : budget};
    if (H.v > gt.n()) return 0;
    uint32_t a = 0, b = 0;
    if (detect_complete_bipartite(H, &a, &b))
        return count_complete_bipartite(gt, a, b, bud);
    return count_generic(gt, H, bud);
}

QuasiReport quasirandom_ratio(const GraphTable& gt, const PatternGraph& H,
                              uint64_t budget) {
    const GraphCtx& gc = gt.gc();
    QuasiReport rep{};
    rep.count = count_labeled(gt, H, budget);
    const double q = static_cast<double>(gc.q());
    const double exponent = static_cast<double>(gc.t()) * H.v -
                            static_cast<double>(H.edges.size());
    rep.expected = std::pow(q, exponent);
    rep.ratio = static_cast<double>(rep.count) / rep.expected;

    auto dord = degeneracy_order(H);
    rep.degeneracy = dord.degeneracy;
    uint32_t c = 0;
    for (uint32_t d : dord.back_deg) c += d == 3;

    const uint32_t t = gc.t();
    rep.deviation_band = (dord.degeneracy <= 2 && t >= 3) ||
                         (dord.degeneracy <= 3 && t >= 5);
    rep.dev_constant = rep.deviation_band ? std::fabs(rep.ratio - 1.0) * std::sqrt(q) : 0.0;
    if (!rep.deviation_band && dord.degeneracy == 3 && t == 4) {
        rep.window_low = 1.0;
        rep.window_high = std::ldexp(1.0, static_cast<int>(c));
    }
    return rep;
}

namespace {

// loop-inclusive common degree of d table vertices: popcount of the row
// intersection plus members that carry a loop and meet all the others
uint64_t table_common_degree(const GraphTable& gt, const std::vector<uint32_t>& S) {
    const uint32_t w = gt.words();
    std::vector<uint64_t> R(gt.row(S[0]), gt.row(S[0]) + w);
    for (size_t i = 1; i < S.size(); ++i) and_into(R.data(), gt.row(S[i]), R.data(), w);
    uint64_t cnt = popcount_words(R.data(), w);
    for (uint32_t v : S) {
        if (!gt.loop(v)) continue;
        bool all = true;
        for (uint32_t u : S)
            if (u != v && !gt.adj(v, u)) { all = false; break; }
        cnt += all;
    }
    return cnt;
}

bool generic_indices(const GraphTable& gt, const std::vector<uint32_t>& S) {
    for (size_t i = 0; i < S.size(); ++i)
        for (size_t j = i + 1; j < S.size(); ++j)
            if (gt.gc().big().eq(gt.verts()[S[i]].A, gt.verts()[S[j]].A)) return false;
    return true;
}

// exhaustive extrema over generic d-subsets of a materialized graph
void table_extrema(const GraphTable& gt, uint32_t d, DegreeExtrema& out) {
    std::vector<uint32_t> S(d);
    bool any = false;
    auto rec = [&](auto&& self, uint32_t depth, uint32_t start) -> void {
        if (depth == d) {
            if (!generic_indices(gt, S)) return;
            uint64_t deg = table_common_degree(gt, S);
            if (!any || deg > out.dmax) out.dmax = deg;
            if (!any || deg < out.dmin) out.dmin = deg;
            any = true;
            return;
        }
        for (uint32_t v = start; v < gt.n(); ++v) {
            S[depth] = v;
            self(self, depth + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    out.exact = true;
}

uint64_t binom(uint64_t n, uint32_t k) {
    if (k > n) return 0;
    uint64_t r = 1;
    for (uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

DegreeExtrema degree_extrema(const GraphCtx& gc, uint32_t d, uint64_t max_exhaustive,
                             uint64_t samples, uint64_t seed) {
    if (d == 0 || d > 4) throw invalid_input("degree extrema support d in 1..4");
    const uint64_t q = gc.q(), Q = gc.big().size();
    const uint32_t t = gc.t();
    DegreeExtrema out;

    if (d == 1) {
        out.dmax = out.dmin = Q - 1;   // neighbor stream length, every vertex
        out.upper_bound = Q - 1;
        out.exact = true;
        return out;
    }
    const uint64_t full = (Q - 1) / (q - 1);
    if (d == 2) {
        // aligned pairs lose exactly one candidate; both kinds exist for q > 2
        out.dmax = full;
        out.dmin = q > 2 ? full - 1 : full;
        out.upper_bound = full;
        out.exact = true;
        return out;
    }
    if (d == 3 && q % 2 == 1) {
        // sweep the (c1, c2) invariant classes; every class is realized by a
        // non-aligned triple, and by an aligned one exactly when S_t is
        // nonempty (aligned invariants are (N(u), N(u+1)) pairs)
        const auto& sub = gc.subfield_elements();
        bool any = false;
        uint64_t min_s = 0;
        bool has_empty = false;
        for (uint64_t i = 1; i < q; ++i) {
            for (uint64_t j = 1; j < q; ++j) {
                uint64_t s = st_size(gc, t, sub[i], sub[j]);
                if (!any || s > out.dmax) {
                    if (s > out.dmax || !any) out.argmax_classes.clear();
                    out.dmax = s;
                }
                if (s == out.dmax)
                    out.argmax_classes.emplace_back(gc.base().to_int(gc.to_base(sub[i])),
                                                    gc.base().to_int(gc.to_base(sub[j])));
                if (!any || s < min_s) min_s = s;
                if (s == 0) has_empty = true;
                any = true;
            }
        }
        out.dmin = has_empty ? 0 : min_s - 1;
        out.upper_bound = out.dmax;
        out.exact = true;
        return out;
    }

    // generic fallback: exhaustive when the d-subset space is small enough,
    // sampled bounds otherwise
    const uint64_t n = gc.n_vertices();
    if (n <= 4000 && binom(n, d) <= max_exhaustive) {
        GraphTable gt = GraphTable::build(gc);
        table_extrema(gt, d, out);
        out.upper_bound = d == 4 && t >= 4 ? std::min<uint64_t>(6 * geo_sum_u(q, t - 3), full)
                                           : full;
        return out;
    }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const auto& sub = gc.subfield_elements();
    bool any = false;
    for (uint64_t it = 0; it < samples; ++it) {
        std::set<uint64_t> Aenc;
        while (Aenc.size() < d) Aenc.insert(rng() % Q);
        std::vector<Vertex> T;
        for (uint64_t enc : Aenc)
            T.push_back(gc.vertex(gc.big().from_int(enc), sub[1 + rng() % (q - 1)]));
        uint64_t deg;
        if (d == 4 && t >= 4)
            deg = quadruple_degree(gc, T).exact;
        else
            deg = common_neighborhood_bruteforce(gc, T).size();
        if (!any || deg > out.dmax) out.dmax = deg;
        if (!any || deg < out.dmin) out.dmin = deg;
        any = true;
    }
    out.exact = false;
    out.upper_bound = d == 4 && t >= 4 ? std::min<uint64_t>(6 * geo_sum_u(q, t - 3), full)
                                       : full;
    return out;
}

} // namespace ng
