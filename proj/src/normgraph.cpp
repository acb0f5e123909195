#include "ng/normgraph.hpp"

#include <algorithm>

namespace ng {

namespace {
constexpr uint64_t kTableCap = 1u << 21;   // materialize norm table below this
}

GraphCtx GraphCtx::make(uint64_t p, uint32_t k, uint32_t t) {
    if (t < 2) throw bad_parameters("t must be at least 2");
    if (k == 0) throw bad_parameters("k must be positive");
    GraphCtx gc;
    gc.p_ = p;
    gc.k_ = k;
    gc.t_ = t;
    gc.q_ = ipow(p, k);
    gc.big_ = FieldCtx::make(p, k * (t - 1));
    gc.base_ = FieldCtx::make(p, k);
    gc.emb_ = SubfieldEmbedding::make(gc.base_, gc.big_);
    // norm exponent 1 + q + ... + q^{t-2}
    uint64_t e = 0, qp = 1;
    for (uint32_t i = 0; i + 1 < t; ++i) {
        e += qp;
        if (i + 2 < t) qp *= gc.q_;
    }
    gc.norm_exponent_ = e;
    gc.subfield_.reserve(gc.q_);
    for (uint64_t v = 0; v < gc.q_; ++v)
        gc.subfield_.push_back(gc.emb_.embed(gc.base_, gc.big_, gc.base_.from_int(v)));
    std::sort(gc.subfield_.begin(), gc.subfield_.end(),
              [&](const Fe& a, const Fe& b) { return gc.big_.to_int(a) < gc.big_.to_int(b); });
    if (gc.big_.size() <= kTableCap) {
        gc.norm_table_.resize(gc.big_.size());
        for (uint64_t v = 0; v < gc.big_.size(); ++v)
            gc.norm_table_[v] = static_cast<uint32_t>(
                gc.big_.to_int(gc.big_.pow(gc.big_.from_int(v), e)));
    }
    return gc;
}

Fe GraphCtx::norm(const Fe& X) const {
    if (!norm_table_.empty())
        return big_.from_int(norm_table_[big_.to_int(X)]);
    return big_.pow(X, norm_exponent_);
}

bool GraphCtx::in_subfield(const Fe& x) const {
    // x in F_q  <=>  x^q == x
    return big_.eq(big_.frobenius(x, k_), x);
}

const std::vector<Fe>& GraphCtx::subfield_elements() const { return subfield_; }

Fe GraphCtx::to_base(const Fe& embedded) const {
    return emb_.pullback(base_, big_, embedded);
}

Fe GraphCtx::to_big(const Fe& base_elt) const {
    return emb_.embed(base_, big_, base_elt);
}

int GraphCtx::base_quad_char(const Fe& embedded) const {
    if (p_ == 2) throw even_characteristic("quadratic character needs odd q");
    if (big_.is_zero(embedded)) return 0;
    Fe r = big_.pow(embedded, (q_ - 1) / 2);
    return big_.eq(r, big_.one()) ? 1 : -1;
}

Vertex GraphCtx::vertex(const Fe& A, const Fe& a) const {
    if (big_.is_zero(a) || !in_subfield(a))
        throw invalid_input("second coordinate must lie in F_q^*");
    Vertex v{A, a};
    return v;
}

Vertex GraphCtx::vertex_from_ints(uint64_t A_enc, uint64_t a_enc) const {
    return vertex(big_.from_int(A_enc), big_.from_int(a_enc));
}

bool GraphCtx::is_adjacent(const Vertex& u, const Vertex& v) const {
    Fe lhs = norm(big_.add(u.A, v.A));
    Fe rhs = big_.mul(u.a, v.a);
    return big_.eq(lhs, rhs);
}

bool GraphCtx::is_loop(const Vertex& v) const {
    return is_adjacent(v, v);
}

std::vector<Vertex> GraphCtx::neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    out.reserve(big_.size() - 1);
    Fe a_inv = big_.inv(v.a);
    Fe negA = big_.neg(v.A);
    for (uint64_t enc = 0; enc < big_.size(); ++enc) {
        Fe X = big_.from_int(enc);
        if (big_.eq(X, negA)) continue;   // norm 0: no partner
        Fe x = big_.mul(a_inv, norm(big_.add(v.A, X)));
        out.push_back(Vertex{X, x});
    }
    return out;
}

std::vector<Vertex> GraphCtx::all_vertices() const {
    std::vector<Vertex> out;
    out.reserve(n_vertices());
    for (uint64_t enc = 0; enc < big_.size(); ++enc) {
        Fe A = big_.from_int(enc);
        for (const Fe& a : subfield_) {
            if (big_.is_zero(a)) continue;
            out.push_back(Vertex{A, a});
        }
    }
    return out;
}

uint64_t GraphCtx::vertex_index(const Vertex& v) const {
    uint64_t a_enc = big_.to_int(v.a);
    auto it = std::lower_bound(subfield_.begin(), subfield_.end(), a_enc,
                               [&](const Fe& s, uint64_t key) { return big_.to_int(s) < key; });
    if (it == subfield_.end() || big_.to_int(*it) != a_enc)
        throw invalid_input("vertex second coordinate outside F_q");
    // subfield_[0] is 0, skipped in all_vertices()
    uint64_t a_idx = static_cast<uint64_t>(it - subfield_.begin()) - 1;
    return big_.to_int(v.A) * (q_ - 1) + a_idx;
}

Census census(const GraphCtx& gc, uint64_t verify_cap) {
    uint64_t q = gc.q();
    uint64_t Q = gc.big().size();   // q^{t-1}
    Census c{};
    c.n = Q * (q - 1);
    if (q % 2 == 0) {
        c.loops = 0;
        c.e_simple = (Q - 1) * Q * (q - 1) / 2;
    } else {
        c.loops = Q - 1;
        c.e_simple = (Q - 1) * (Q * (q - 1) - 1) / 2;
    }
    c.complete = (q == 2);
    if (c.n <= verify_cap) {
        uint64_t loops = 0, simple_incidences = 0;
        auto vs = gc.all_vertices();
        for (const auto& v : vs) {
            if (gc.is_loop(v)) ++loops;
            for (const auto& w : gc.neighbors(v)) {
                if (!gc.is_adjacent(v, w))
                    throw error("neighbor stream emitted a non-neighbor");
                if (!(w == v)) ++simple_incidences;
            }
        }
        if (loops != c.loops || simple_incidences != 2 * c.e_simple)
            throw error("census closed form disagrees with exhaustive count");
    }
    return c;
}

SetClass classify_set(const GraphCtx& gc, const std::vector<Vertex>& vs) {
    const auto& F = gc.big();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (F.eq(vs[i].A, vs[j].A)) return SetClass::non_generic;
    bool aligned = true;
    for (size_t i = 1; i < vs.size(); ++i)
        if (!F.eq(vs[i].a, vs[0].a)) aligned = false;
    return aligned ? SetClass::aligned_generic : SetClass::generic;
}

bool is_generic(const GraphCtx& gc, const std::vector<Vertex>& vs) {
    return classify_set(gc, vs) != SetClass::non_generic;
}

GraphTable GraphTable::build(const GraphCtx& gc, uint64_t cap) {
    uint64_t n64 = gc.n_vertices();
    if (n64 > cap) throw too_large("graph too large to materialize");
    GraphTable T;
    T.gc_ = &gc;
    T.n_ = static_cast<uint32_t>(n64);
    T.words_ = (T.n_ + 63) / 64;
    T.verts_ = gc.all_vertices();
    T.bits_.assign(static_cast<size_t>(T.n_) * T.words_, 0);
    T.loops_.assign(T.n_, 0);
    for (uint32_t i = 0; i < T.n_; ++i) {
        const Vertex& v = T.verts_[i];
        if (gc.is_loop(v)) T.loops_[i] = 1;
        for (const Vertex& w : gc.neighbors(v)) {
            uint32_t j = static_cast<uint32_t>(gc.vertex_index(w));
            if (j == i) continue;   // loop kept in loops_, not in bitset
            T.bits_[static_cast<size_t>(i) * T.words_ + (j >> 6)] |= 1ull << (j & 63);
        }
    }
    return T;
}

uint32_t GraphTable::index_of(const Vertex& v) const {
    return static_cast<uint32_t>(gc_->vertex_index(v));
}

uint32_t GraphTable::degree(uint32_t i) const {
    uint32_t d = 0;
    const uint64_t* r = row(i);
    for (uint32_t w = 0; w < words_; ++w) d += static_cast<uint32_t>(__builtin_popcountll(r[w]));
    return d;
}

} // namespace ng
