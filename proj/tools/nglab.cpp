// nglab: command-line front door to the norm-graph laboratory.
// JSON-lines on stdout by default (--csv for key,value tables); exit codes:
// 0 success, 2 identity-check failure, 3 invalid input, 4 budget exceeded.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ng/aut.hpp"
#include "ng/charsum.hpp"
#include "ng/errors.hpp"
#include "ng/k46.hpp"
#include "ng/neighborhoods.hpp"
#include "ng/resultants.hpp"
#include "ng/subgraphs.hpp"
#include "ng/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ng;

namespace {

struct Options {
    std::string q = "3";
    uint32_t t = 3;
    uint64_t seed = 0;
    uint64_t samples = 100;
    uint64_t budget = 0;   // 0 = module default (NGLAB_BUDGET or 10^9)
    uint32_t jobs = 1;
    bool csv = false;
};

std::pair<uint64_t, uint32_t> parse_prime_power(const std::string& s) {
    uint64_t p = 0;
    uint32_t k = 1;
    auto caret = s.find('^');
    try {
        if (caret != std::string::npos) {
            p = std::stoull(s.substr(0, caret));
            k = static_cast<uint32_t>(std::stoul(s.substr(caret + 1)));
        } else {
            uint64_t q = std::stoull(s);
            if (q < 2) throw invalid_input("prime power must be at least 2");
            uint64_t d = 2;
            while (d * d <= q && q % d != 0) ++d;
            p = d * d > q ? q : d;
            uint64_t rest = q;
            k = 0;
            while (rest % p == 0) { rest /= p; ++k; }
            if (rest != 1) throw invalid_input("not a prime power: " + s);
        }
    } catch (const std::logic_error&) {
        throw invalid_input("cannot parse prime power: " + s);
    }
    if (p < 2 || k == 0) throw invalid_input("not a prime power: " + s);
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw invalid_input("base is not prime: " + s);
    return {p, k};
}

void emit(const json& j, bool csv) {
    if (!csv) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!header.empty()) { header += ','; row += ','; }
        header += it.key();
        row += it.value().is_string() ? it.value().get<std::string>()
                                      : it.value().dump();
    }
    std::cout << header << "\n" << row << "\n";
}

std::vector<Vertex> parse_set(const GraphCtx& gc, const std::string& s) {
    std::vector<Vertex> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw invalid_input("vertex must be Aenc:aenc, got: " + item);
        try {
            uint64_t A = std::stoull(item.substr(0, colon));
            uint64_t a = std::stoull(item.substr(colon + 1));
            out.push_back(gc.vertex_from_ints(A, a));
        } catch (const std::logic_error&) {
            throw invalid_input("cannot parse vertex: " + item);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw invalid_input("empty vertex set");
    return out;
}

PatternGraph parse_pattern_arg(const std::string& s) {
    if (!s.empty() && (s[0] == 'K' || s[0] == 'C' || s[0] == 'P')) {
        try {
            std::string body = s.substr(1);
            auto comma = body.find(',');
            if (s[0] == 'K' && comma != std::string::npos)
                return pattern_complete_bipartite(
                    static_cast<uint32_t>(std::stoul(body.substr(0, comma))),
                    static_cast<uint32_t>(std::stoul(body.substr(comma + 1))));
            uint32_t n = static_cast<uint32_t>(std::stoul(body));
            if (s[0] == 'K') return pattern_complete(n);
            if (s[0] == 'C') return pattern_cycle(n);
            return pattern_path(n);
        } catch (const std::logic_error&) {
            // fall through to the explicit format
        }
    }
    return parse_pattern(s);
}

json report_json(const VerifyReport& rep) {
    json j;
    j["theorem"] = rep.name;
    j["checked"] = rep.checked;
    j["mismatches"] = rep.mismatches;
    j["pass"] = rep.pass();
    for (const auto& [key, val] : rep.extra) j[key] = val;
    return j;
}

json vertex_json(const GraphCtx& gc, const Vertex& v) {
    return json::array({gc.big().to_int(v.A), gc.big().to_int(v.a)});
}

int run(int argc, char** argv) {
    CLI::App app{"norm-graph laboratory"};
    app.set_config("--config");
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for sampled sweeps");
    app.add_option("--jobs", o.jobs, "worker count (partition order is fixed)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--csv", o.csv, "CSV output instead of JSON lines");
    app.require_subcommand(1);

    // field-info ------------------------------------------------------------
    auto* sc_field = app.add_subcommand("field-info", "prime-power field parameters");
    sc_field->add_option("--q", o.q, "field size, p^k or integer")->required();

    // census ----------------------------------------------------------------
    auto* sc_census = app.add_subcommand("census", "vertex/edge/loop census");
    sc_census->add_option("--q", o.q)->required();
    sc_census->add_option("--t", o.t)->required();

    // deg -------------------------------------------------------------------
    std::string set_arg;
    auto* sc_deg = app.add_subcommand("deg", "common degree of a vertex set");
    sc_deg->add_option("--q", o.q)->required();
    sc_deg->add_option("--t", o.t)->required();
    sc_deg->add_option("--set", set_arg, "vertices Aenc:aenc,...")->required();

    // triple-class ----------------------------------------------------------
    auto* sc_tc = app.add_subcommand("triple-class", "invariants (c1,c2,xi)");
    sc_tc->add_option("--q", o.q)->required();
    sc_tc->add_option("--t", o.t)->required();
    sc_tc->add_option("--set", set_arg)->required();

    // st-size ---------------------------------------------------------------
    uint64_t c1_arg = 1, c2_arg = 1;
    auto* sc_st = app.add_subcommand("st-size", "|S_t(c1,c2)| without enumeration");
    sc_st->add_option("--q", o.q)->required();
    sc_st->add_option("--t", o.t)->required();
    sc_st->add_option("--c1", c1_arg, "base-field encoding")->required();
    sc_st->add_option("--c2", c2_arg, "base-field encoding")->required();

    // verify ----------------------------------------------------------------
    std::string theorem;
    auto* sc_verify = app.add_subcommand("verify", "sweep one theorem or lemma");
    sc_verify->add_option("--theorem", theorem)
        ->required()
        ->check(CLI::IsMember({"1a", "1b", "1c", "2", "3", "5", "lemma3", "lemma5",
                               "lemma7", "lemma8", "claim9", "weil"}));
    sc_verify->add_option("--q", o.q)->required();
    sc_verify->add_option("--t", o.t);
    sc_verify->add_option("--samples", o.samples);
    sc_verify->add_option("--budget", o.budget);

    // find-k46 --------------------------------------------------------------
    bool certified = false;
    auto* sc_k46 = app.add_subcommand("find-k46", "construct a K_{4,6} certificate");
    sc_k46->add_option("--q", o.q)->required();
    sc_k46->add_flag("--certified", certified, "use the character-sum certified pick");

    // count-subgraphs -------------------------------------------------------
    std::string pattern_arg;
    auto* sc_count = app.add_subcommand("count-subgraphs", "labeled copy counting");
    sc_count->add_option("--q", o.q)->required();
    sc_count->add_option("--t", o.t)->required();
    sc_count->add_option("--pattern", pattern_arg,
                         "K4, K3,3, C5, P4, or \"v e i j ...\"")
        ->required();
    sc_count->add_option("--budget", o.budget);

    // aut -------------------------------------------------------------------
    bool brute = false, respect_loops = true;
    auto* sc_aut = app.add_subcommand("aut", "automorphism group");
    sc_aut->add_option("--q", o.q)->required();
    sc_aut->add_option("--t", o.t)->required();
    sc_aut->add_flag("--brute-force", brute, "cross-check by exhaustive search");
    sc_aut->add_flag("--respect-loops,!--no-respect-loops", respect_loops,
                     "preserve v~v in the brute force");

    // weil-check ------------------------------------------------------------
    bool have_c = false;
    auto* sc_weil = app.add_subcommand("weil-check", "Weil bound for L_{c1,c2}");
    sc_weil->add_option("--q", o.q)->required();
    auto* c1opt = sc_weil->add_option("--c1", c1_arg);
    sc_weil->add_option("--c2", c2_arg)->needs(c1opt);

    CLI11_PARSE(app, argc, argv);

    auto [p, k] = parse_prime_power(o.q);
    int exit_code = 0;

    if (sc_field->parsed()) {
        FieldCtx F = FieldCtx::make(p, k);
        json j;
        j["p"] = F.p();
        j["k"] = F.m();
        j["q"] = F.size();
        j["modulus"] = F.modulus();
        j["generator"] = F.to_int(F.generator());
        emit(j, o.csv);
    } else if (sc_census->parsed()) {
        auto gc = GraphCtx::make(p, k, o.t);
        Census c = census(gc);
        json j;
        j["q"] = gc.q();
        j["t"] = o.t;
        j["n"] = c.n;
        j["edges"] = c.e_simple;
        j["loops"] = c.loops;
        j["complete"] = c.complete;
        emit(j, o.csv);
    } else if (sc_deg->parsed()) {
        auto gc = GraphCtx::make(p, k, o.t);
        auto vs = parse_set(gc, set_arg);
        SetClass cls = classify_set(gc, vs);
        json j;
        j["size"] = vs.size();
        j["class"] = cls == SetClass::generic          ? "generic"
                     : cls == SetClass::aligned_generic ? "aligned_generic"
                                                        : "non_generic";
        uint64_t deg;
        std::string method;
        if (cls == SetClass::non_generic || vs.size() == 1) {
            deg = common_neighborhood_bruteforce(gc, vs).size();
            method = "oracle";
        } else if (vs.size() == 2) {
            deg = pair_degree(gc, vs);
            method = "closed_form";
        } else if (vs.size() == 3 && gc.q() % 2 == 1) {
            deg = triple_degree(gc, vs).value;
            method = "closed_form";
        } else if (vs.size() == 4 && (o.t == 4 || o.t == 5)) {
            deg = quadruple_degree(gc, vs).exact;
            method = "elimination";
        } else {
            deg = common_neighborhood_bruteforce(gc, vs).size();
            method = "oracle";
        }
        j["degree"] = deg;
        j["method"] = method;
        emit(j, o.csv);
    } else if (sc_tc->parsed()) {
        auto gc = GraphCtx::make(p, k, o.t);
        auto vs = parse_set(gc, set_arg);
        TripleInvariants ti = triple_invariants(gc, vs);
        json j;
        j["c1"] = gc.base().to_int(gc.to_base(ti.c1));
        j["c2"] = gc.base().to_int(gc.to_base(ti.c2));
        j["xi"] = ti.xi;
        emit(j, o.csv);
    } else if (sc_st->parsed()) {
        auto gc = GraphCtx::make(p, k, o.t);
        Fe c1 = gc.to_big(gc.base().from_int(c1_arg));
        Fe c2 = gc.to_big(gc.base().from_int(c2_arg));
        json j;
        j["t"] = o.t;
        j["c1"] = c1_arg;
        j["c2"] = c2_arg;
        j["size"] = st_size(gc, o.t, c1, c2);
        emit(j, o.csv);
    } else if (sc_verify->parsed()) {
        VerifyReport rep;
        if (theorem == "1a") {
            rep = verify_1a(GraphCtx::make(p, k, o.t));
        } else if (theorem == "1b") {
            auto gc = GraphCtx::make(p, k, o.t);
            rep = o.t == 3 ? verify_1b_t3(gc) : verify_1b_t4(gc);
        } else if (theorem == "1c") {
            rep = verify_1c(GraphCtx::make(p, k, o.t == 3 ? 4 : o.t), o.samples, o.seed);
        } else if (theorem == "2") {
            rep = verify_2(p, k);
        } else if (theorem == "3") {
            rep = verify_3(GraphCtx::make(p, k, 3), o.budget);
        } else if (theorem == "5") {
            rep = verify_5(GraphCtx::make(p, k, o.t), o.seed);
        } else if (theorem == "lemma3") {
            rep = verify_lemma3(GraphCtx::make(p, k, o.t == 3 ? 4 : o.t));
        } else if (theorem == "lemma5" || theorem == "lemma8") {
            rep = verify_k46_lemmas(p, k);
        } else if (theorem == "lemma7") {
            rep = verify_lemma7(p, k);
        } else if (theorem == "claim9") {
            rep = verify_claim9(FieldCtx::make(p, k));
        } else {   // weil
            rep = verify_weil(FieldCtx::make(p, k), 200, o.seed);
        }
        emit(report_json(rep), o.csv);
        if (!rep.pass()) exit_code = 2;
    } else if (sc_k46->parsed()) {
        CubicEnv env = make_env(p, k);
        K46Certificate cert =
            build_k46(env, certified ? K46Mode::certified : K46Mode::fast);
        std::string why;
        bool ok = verify_certificate(env.gc, cert, &why);
        json j;
        j["q"] = env.gc.q();
        j["mode"] = certified ? "certified" : "fast";
        json left = json::array(), right = json::array();
        for (const Vertex& v : cert.left) left.push_back(vertex_json(env.gc, v));
        for (const Vertex& v : cert.right) right.push_back(vertex_json(env.gc, v));
        j["left"] = left;
        j["right"] = right;
        j["alpha"] = env.gc.big().to_int(cert.alpha);
        j["beta"] = env.gc.big().to_int(cert.beta);
        j["c"] = env.gc.big().to_int(cert.c);
        j["verified"] = ok;
        if (!ok) j["why"] = why;
        emit(j, o.csv);
        if (!ok) exit_code = 2;
    } else if (sc_count->parsed()) {
        auto gc = GraphCtx::make(p, k, o.t);
        GraphTable gt = GraphTable::build(gc);
        PatternGraph H = parse_pattern_arg(pattern_arg);
        QuasiReport r = quasirandom_ratio(gt, H, o.budget);
        json j;
        j["pattern"] = pattern_arg;
        j["vertices"] = H.v;
        j["edges"] = H.edges.size();
        j["count"] = r.count;
        j["expected"] = r.expected;
        j["ratio"] = r.ratio;
        j["degeneracy"] = r.degeneracy;
        j["deviation_band"] = r.deviation_band;
        if (r.deviation_band) j["dev_constant"] = r.dev_constant;
        if (r.window_high > 1.0) {
            j["window_low"] = r.window_low;
            j["window_high"] = r.window_high;
        }
        emit(j, o.csv);
    } else if (sc_aut->parsed()) {
        auto gc = GraphCtx::make(p, k, o.t);
        json j;
        j["q"] = gc.q();
        j["t"] = o.t;
        j["order_formula"] = aut_order(gc);
        j["structure"] = aut_structure(gc);
        if (brute) {
            uint64_t bf = brute_force_aut(gc, respect_loops);
            j["order_bruteforce"] = bf;
            if (bf != aut_order(gc)) exit_code = 2;
        }
        emit(j, o.csv);
    } else if (sc_weil->parsed()) {
        FieldCtx F = FieldCtx::make(p, k);
        auto one_class = [&](uint64_t i, uint64_t j_enc) {
            Fe c1 = F.from_int(i), c2 = F.from_int(j_enc);
            WeilReport wr = weil_check(F, L_poly(F, c1, c2));
            json j;
            j["c1"] = i;
            j["c2"] = j_enc;
            j["sum"] = wr.sum;
            j["bound"] = wr.bound;
            j["square_branch"] = wr.square_branch;
            if (wr.square_branch) j["exact"] = wr.exact;
            j["ok"] = wr.ok;
            emit(j, o.csv);
            return wr.ok;
        };
        bool all_ok = true;
        if (*c1opt) {
            all_ok = one_class(c1_arg, c2_arg);
        } else {
            for (uint64_t i = 1; i < F.size(); ++i)
                for (uint64_t j2 = 1; j2 < F.size(); ++j2)
                    all_ok = one_class(i, j2) && all_ok;
        }
        if (!all_ok) exit_code = 2;
    }
    (void)have_c;
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const invalid_input& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const bad_parameters& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const bad_characteristic& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const too_large& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const degenerate_graph& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const non_generic_set& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const unsupported_arity& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const ng::error& e) {
        std::cerr << "identity check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
