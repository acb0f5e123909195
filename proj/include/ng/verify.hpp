#pragma once

// Verification drivers: each sweeps one theorem/lemma and reports how many
// instances were checked and how many disagreed.  Shared by the CLI and the
// acceptance harness so both speak from the same evidence.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ng/normgraph.hpp"

namespace ng {

struct VerifyReport {
    std::string name;
    uint64_t checked = 0;
    uint64_t mismatches = 0;
    // ordered extras for the JSON record (pins, constants, sub-results)
    std::vector<std::pair<std::string, std::string>> extra;
    bool pass() const { return checked > 0 && mismatches == 0; }
};

// pair degrees: closed form vs materialized intersection, all generic pairs
VerifyReport verify_1a(const GraphCtx& gc);

// triple degrees at t = 3: closed form vs intersection, all generic triples
VerifyReport verify_1b_t3(const GraphCtx& gc);

// t = 4: |S_4| by character-sum identity vs recursion vs enumeration for all
// (c1,c2) classes, with the 2q+1-eta(-3) pin at (1,-1)
VerifyReport verify_1b_t4(const GraphCtx& gc);

// Lemma 3(iii) counting identity over all (c1,c2) classes
VerifyReport verify_lemma3(const GraphCtx& gc);

// quadruples at t in {4,5}: elimination bound and exactness vs the oracle on
// random generic quadruples (the symbolic coefficient-vanishing assertions
// run inside the elimination itself)
VerifyReport verify_1c(const GraphCtx& gc, uint64_t samples, uint64_t seed);

// Theorem 2 certificates, both construction modes
VerifyReport verify_2(uint64_t p, uint32_t k);

// the structural lemmas behind Theorem 2 (special-set census, Moebius
// bijection onto G \ G^3, third-root exclusion, character transfer)
VerifyReport verify_k46_lemmas(uint64_t p, uint32_t k);

// Lemma 7: constructive solver vs exhaustive solutions for all (A, B=1)
VerifyReport verify_lemma7(uint64_t p, uint32_t k);

// Theorem 3 property form: quasirandom ratios for P3, C4, K3 at t = 3 with
// the fitted deviation constant, plus the K_{3,3} freeness zero
VerifyReport verify_3(const GraphCtx& gc, uint64_t budget = 0);

// Theorem 5: enumeration vs order, adjacency preservation, brute force at
// tiny sizes, conjugation closures, poor sets
VerifyReport verify_5(const GraphCtx& gc, uint64_t seed);

// Claim 9: the perfect-square locus of L is exactly {(1,-1)}
VerifyReport verify_claim9(const FieldCtx& Fq);

// Appendix: Weil bound across every (c1,c2) class, plus random quadratic
// root counts 1 + eta(discriminant)
VerifyReport verify_weil(const FieldCtx& Fq, uint64_t quadratics, uint64_t seed);

} // namespace ng
