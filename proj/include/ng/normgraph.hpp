#pragma once

// The projective norm graph NG(q,t): vertex set F_{q^{t-1}} x F_q^*, with
// (A,a) ~ (B,b) iff N(A+B) = ab, where N is the field norm from F_{q^{t-1}}
// down to F_q.  The graph is kept implicit; adjacency is an oracle.  Loops
// (N(2A) = a^2) are first-class and flagged, never silently dropped.

#include <cstdint>
#include <vector>

#include "ng/ff.hpp"

namespace ng {

struct Vertex {
    Fe A;   // element of F_{q^{t-1}}
    Fe a;   // nonzero element of the embedded copy of F_q
    bool operator==(const Vertex&) const = default;
};

class GraphCtx {
public:
    static GraphCtx make(uint64_t p, uint32_t k, uint32_t t);

    uint64_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint32_t t() const { return t_; }
    uint64_t q() const { return q_; }
    uint64_t n_vertices() const { return big_.size() * (q_ - 1); }
    const FieldCtx& big() const { return big_; }     // F_{q^{t-1}}
    const FieldCtx& base() const { return base_; }   // standalone F_q
    const SubfieldEmbedding& emb() const { return emb_; }

    Fe norm(const Fe& X) const;                 // value lands in embedded F_q
    bool in_subfield(const Fe& x) const;        // x in embedded F_q
    const std::vector<Fe>& subfield_elements() const;   // ascending encoding
    Fe to_base(const Fe& embedded) const;
    Fe to_big(const Fe& base_elt) const;
    int base_quad_char(const Fe& embedded) const;   // eta_{F_q}, odd q only

    Vertex vertex(const Fe& A, const Fe& a) const;  // validates a in F_q^*
    Vertex vertex_from_ints(uint64_t A_enc, uint64_t a_enc) const;

    bool is_adjacent(const Vertex& u, const Vertex& v) const;
    bool is_loop(const Vertex& v) const;

    // neighbor stream of v in deterministic order (ascending encoding of the
    // first coordinate); length is always q^{t-1}-1; includes v itself when
    // v carries a loop
    std::vector<Vertex> neighbors(const Vertex& v) const;

    // all vertices, ordered by (A encoding, a encoding)
    std::vector<Vertex> all_vertices() const;
    uint64_t vertex_index(const Vertex& v) const;

private:
    uint64_t p_ = 0, q_ = 0;
    uint32_t k_ = 0, t_ = 0;
    FieldCtx big_, base_;
    SubfieldEmbedding emb_;
    uint64_t norm_exponent_ = 0;
    std::vector<Fe> subfield_;              // embedded F_q, ascending encoding
    std::vector<uint64_t> sub_index_;       // encoding -> index into subfield_ (small fields)
    std::vector<uint32_t> norm_table_;      // encoding -> encoding of norm (small fields)
};

struct Census {
    uint64_t n;             // vertices
    uint64_t e_simple;      // non-loop edges
    uint64_t loops;
    bool complete;          // NG(2,t) is complete
};

// Closed-form census; verified exhaustively inside when n <= verify_cap.
Census census(const GraphCtx& gc, uint64_t verify_cap = 10000);

enum class SetClass { generic, aligned_generic, non_generic };

// generic: first coordinates pairwise distinct; aligned additionally has all
// second coordinates equal.  aligned_generic implies generic in queries that
// only ask for genericity.
SetClass classify_set(const GraphCtx& gc, const std::vector<Vertex>& vs);
bool is_generic(const GraphCtx& gc, const std::vector<Vertex>& vs);

// ---------------------------------------------------------------------------
// Materialized adjacency for small instances (oracles, subgraph counting,
// automorphism brute force).  Bitsets exclude loops; loop flags are separate.

class GraphTable {
public:
    static GraphTable build(const GraphCtx& gc, uint64_t cap = 100000);

    const GraphCtx& gc() const { return *gc_; }
    uint32_t n() const { return n_; }
    uint32_t words() const { return words_; }
    const std::vector<Vertex>& verts() const { return verts_; }
    uint32_t index_of(const Vertex& v) const;
    bool loop(uint32_t i) const { return loops_[i] != 0; }
    bool adj(uint32_t i, uint32_t j) const {   // simple adjacency (i != j)
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
    }
    const uint64_t* row(uint32_t i) const { return &bits_[static_cast<size_t>(i) * words_]; }
    uint32_t degree(uint32_t i) const;   // simple degree (loop excluded)

private:
    const GraphCtx* gc_ = nullptr;
    uint32_t n_ = 0, words_ = 0;
    std::vector<Vertex> verts_;
    std::vector<uint64_t> bits_;
    std::vector<uint8_t> loops_;
};

} // namespace ng
