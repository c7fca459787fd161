#pragma once

// Verification suites: every check compares a computed value against the
// closed form or an independent oracle and reports expected vs computed.
// The acceptance runner and the CLI `verify` subcommand both drive these.

#include "casson/charvar.hpp"
#include "casson/seifert.hpp"
#include "casson/twist.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace casson {

struct CheckResult {
    int criterion = 0;
    std::string suite, name;
    bool pass = true;
    long checks = 0;
    std::string failure;            // first failing comparison
    std::vector<std::string> lines; // sample per-check lines for verbose output
    std::string note;
    double ms = 0.0;
};

namespace verify_detail {

using steady = std::chrono::steady_clock;

inline double ms_since(steady::time_point t0) {
    return std::chrono::duration<double, std::milli>(steady::now() - t0).count();
}

class Crit {
public:
    Crit(int n, std::string suite, std::string name) : t0_(steady::now()) {
        r_.criterion = n;
        r_.suite = std::move(suite);
        r_.name = std::move(name);
    }

    template <class A, class B>
    void eq(const std::string& what, const A& expected, const B& computed) {
        ++r_.checks;
        bool ok = expected == computed;
        std::ostringstream os;
        os << what << ": expected " << expected << ", computed " << computed;
        keep(os.str(), ok);
    }

    void require(const std::string& what, bool ok) {
        ++r_.checks;
        keep(what + (ok ? ": ok" : ": FAILED"), ok);
    }

    void note(const std::string& text) { r_.note = text; }

    CheckResult finish() {
        r_.ms = ms_since(t0_);
        return std::move(r_);
    }

private:
    void keep(const std::string& line, bool ok) {
        if (!ok) {
            if (r_.pass) {
                r_.pass = false;
                r_.failure = line;
            }
            if (r_.lines.size() < 16) r_.lines.push_back("FAIL " + line);
        } else if (r_.lines.size() < 8) {
            r_.lines.push_back(line);
        }
    }

    CheckResult r_;
    steady::time_point t0_;
};

// sorted pairwise-coprime tuples of given length with product <= cap
inline void coprime_tuples(size_t n, long cap, std::vector<std::vector<long>>& out) {
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long start, long prod) {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (long v = start; prod * v <= cap; ++v) {
            bool ok = true;
            for (long u : cur)
                if (std::gcd(u, v) != 1) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            rec(v, prod * v);
            cur.pop_back();
        }
    };
    rec(1, 1);
}

inline std::string tuple_str(const std::vector<long>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

// ---- the thirteen criteria -----------------------------------------------------

inline CheckResult c01_brieskorn_values() {
    Crit c(1, "seifert", "Brieskorn sphere values");
    (void)lambda_seifert(SeifertTuple({2, 3, 5})); // warm up allocators
    const std::pair<std::vector<long>, long> cases[] = {
        {{2, 3, 5}, 2}, {{2, 3, 7}, 3}, {{2, 3, 11}, 5}, {{3, 4, 5}, 6}};
    for (const auto& [t, expect] : cases) {
        auto t0 = steady::now();
        BigRat v = lambda_seifert(SeifertTuple(t));
        double dt = ms_since(t0);
        c.eq("lambda" + tuple_str(t), BigRat(expect), v);
        c.require("lambda" + tuple_str(t) + " under 1 ms (" + std::to_string(dt) + " ms)",
                  dt < 1.0);
    }
    return c.finish();
}

inline CheckResult c02_weight_oracle_grid() {
    Crit c(2, "seifert", "weight-lattice oracle equals the closed formula (n <= 5, product <= 5000)");
    auto t0 = steady::now();
    long tuples = 0, mismatches = 0;
    std::string first_bad;
    for (size_t n = 3; n <= 5; ++n) {
        std::vector<std::vector<long>> ts;
        coprime_tuples(n, 5000, ts);
        for (const auto& t : ts) {
            SeifertTuple st(t);
            ++tuples;
            if (BigRat(count_isolated_weights(st)) != lambda_seifert(st)) {
                ++mismatches;
                if (first_bad.empty()) first_bad = tuple_str(t);
            }
        }
    }
    c.eq("tuples with count_isolated_weights != lambda (of " + std::to_string(tuples) + ")",
         0L, mismatches);
    if (!first_bad.empty()) c.note("first mismatch at " + first_bad);
    c.require("grid completed in under 30 s", ms_since(t0) < 30000.0);
    return c.finish();
}

inline CheckResult c03_milnor_relation() {
    Crit c(3, "seifert", "4 lambda = mu for n = 3, and fails for (2,3,5,7)");
    std::vector<std::vector<long>> ts;
    coprime_tuples(3, 5000, ts);
    long bad = 0;
    for (const auto& t : ts) {
        SeifertTuple st(t);
        if (lambda_seifert(st) * 4 != BigRat(milnor_number(st))) ++bad;
    }
    c.eq("n=3 tuples violating 4*lambda = mu (of " + std::to_string(ts.size()) + ")", 0L, bad);
    SeifertTuple q({2, 3, 5, 7});
    c.eq("4*lambda(2,3,5,7)", BigRat(92), lambda_seifert(q) * 4);
    c.eq("mu(2,3,5,7)", BigInt(48), milnor_number(q));
    c.require("4*lambda != mu for (2,3,5,7)", lambda_seifert(q) * 4 != BigRat(milnor_number(q)));
    return c.finish();
}

inline CheckResult c04_surgery_cross_identities() {
    Crit c(4, "twist", "surgery/Seifert cross-identities for k = 1..10");
    for (long k = 1; k <= 10; ++k) {
        c.eq("lambda(K_" + std::to_string(2 * k - 1) + "(1/1)) vs Sigma(2,3," +
                 std::to_string(6 * k - 1) + ")",
             lambda_seifert(SeifertTuple({2, 3, 6 * k - 1})),
             lambda_twist_surgery(TwistKnot(2 * k - 1), Slope(1, 1)));
        c.eq("lambda(K_" + std::to_string(2 * k) + "(-1/1)) vs Sigma(2,3," +
                 std::to_string(6 * k + 1) + ")",
             lambda_seifert(SeifertTuple({2, 3, 6 * k + 1})),
             lambda_twist_surgery(TwistKnot(2 * k), Slope(-1, 1)));
    }
    return c.finish();
}

inline CheckResult c05_norm_closed_forms() {
    Crit c(5, "twist", "Culler-Shalen norm anchor values for xi <= 12");
    for (long xi = 1; xi <= 12; ++xi) {
        TwistKnot k(xi);
        if (xi % 2 == 0) {
            c.eq("xi=" + std::to_string(xi) + " ||mu||", 2 * xi, cs_norm(k, Slope(1, 0)));
            c.eq("xi=" + std::to_string(xi) + " ||-mu+lambda||", 8 * xi,
                 cs_norm(k, Slope(-1, 1)));
            c.eq("xi=" + std::to_string(xi) + " ||-2mu+lambda||", 8 * xi,
                 cs_norm(k, Slope(-2, 1)));
        } else {
            c.eq("xi=" + std::to_string(xi) + " ||-mu||", 2 * xi, cs_norm(k, Slope(-1, 0)));
            c.eq("xi=" + std::to_string(xi) + " ||mu+lambda||", 8 * xi + 2,
                 cs_norm(k, Slope(1, 1)));
            c.eq("xi=" + std::to_string(xi) + " ||2mu+lambda||", 8 * xi,
                 cs_norm(k, Slope(2, 1)));
        }
    }
    return c.finish();
}

inline CheckResult c06_norm_oracle_grid(unsigned long seed) {
    Crit c(6, "norm", "resultant degree oracle equals the closed-form norm");
    auto t0 = steady::now();
    long cases = 0, mismatches = 0;
    std::string first_bad;
    for (long xi = 1; xi <= 3; ++xi) {
        TwistKnot k(xi);
        for (long q = 0; q <= 3; ++q) {
            for (long p = -8; p <= 8; ++p) {
                if (std::gcd(std::abs(p), q) != 1) continue;
                if (q == 0 && p != 1) continue; // 1/0 and -1/0 are the same slope
                Slope s(p, q);
                ++cases;
                long long want = cs_norm(k, s);
                long long got = norm_degree_oracle(k, s, 3, seed);
                if (want != got) {
                    ++mismatches;
                    if (first_bad.empty())
                        first_bad = "xi=" + std::to_string(xi) + " slope " + s.str() +
                                    ": expected " + std::to_string(want) + ", computed " +
                                    std::to_string(got);
                }
            }
        }
    }
    c.eq("grid mismatches (of " + std::to_string(cases) + " slopes, 3 trials each)", 0L,
         mismatches);
    if (!first_bad.empty()) c.note(first_bad);
    c.require("grid completed in under 5 min", ms_since(t0) < 300000.0);
    return c.finish();
}

inline CheckResult c07_correction_terms() {
    Crit c(7, "twist", "correction terms: E0 = 0 and ||mu||/4 = E1 (lambda(S^3) = 0)");
    for (long xi = 1; xi <= 12; ++xi) {
        TwistKnot k(xi);
        auto [e0, e1] = correction_terms(k);
        c.eq("xi=" + std::to_string(xi) + " E0", BigRat(0), e0);
        c.eq("xi=" + std::to_string(xi) + " ||mu||_CS/4 - E1", BigRat(0),
             BigRat(cs_norm(k, Slope(1, 0))) / 4 - e1);
    }
    return c.finish();
}

inline CheckResult c08_trefoil_values() {
    Crit c(8, "twist", "trefoil surgeries");
    TwistKnot k1(1);
    c.eq("lambda(K_1(6/1))", BigRat(0), lambda_twist_surgery(k1, Slope(6, 1)));
    c.eq("lambda(K_1(12/1))", BigRat(1), lambda_twist_surgery(k1, Slope(12, 1)));
    c.eq("lambda(K_1(1/1))", BigRat(2), lambda_twist_surgery(k1, Slope(1, 1)));
    c.eq("lambda(K_1(1/1)) vs Sigma(2,3,5)", lambda_seifert(SeifertTuple({2, 3, 5})),
         lambda_twist_surgery(k1, Slope(1, 1)));
    return c.finish();
}

inline CheckResult c09_lambda_prime() {
    Crit c(9, "twist", "lambda' for torus and twist knots (stabilized at n = 10, 11)");
    const std::pair<std::pair<long, long>, long> torus_cases[] = {
        {{2, 3}, 3}, {{2, 5}, 10}, {{3, 4}, 18}, {{3, 5}, 30}};
    for (const auto& [pq, expect] : torus_cases)
        c.eq("lambda'(T_{" + std::to_string(pq.first) + "," + std::to_string(pq.second) + "})",
             BigRat(expect), lambda_prime_torus(pq.first, pq.second));
    for (long xi = 1; xi <= 8; ++xi)
        c.eq("lambda'(K_" + std::to_string(xi) + ")",
             BigRat(xi % 2 == 0 ? 2 * xi : 2 * xi + 1), lambda_prime_twist(TwistKnot(xi)));
    c.note("stabilization of the defining difference is asserted inside lambda_prime");
    return c.finish();
}

inline CheckResult c10_cohomology_suite() {
    Crit c(10, "cohomology", "triangle representations and Fox cocycle dimensions");
    auto t0 = steady::now();
    const std::vector<long> tuples[] = {{2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {3, 4, 5}};
    for (const auto& t : tuples) {
        SeifertTuple st(t);
        std::vector<long> a = doubled_first_order(st);
        long p = a[0], q = a[1], r = a[2];
        auto abc = normalize_abc_parity(p, q, r, solve_abc(p, q, r));
        TrianglePresentation pres;
        pres.orders = {2 * p, q, r};
        long built = 0, residual_bad = 0, dim_bad = 0;
        double worst_residual = 0.0;
        for (const auto& [t1, t2, t3] : character_angles(p, q, r)) {
            NumericRep rep = build_triangle_rep(
                pres, {2 * std::cos(t1), 2 * std::cos(t2), 2 * std::cos(t3)});
            ++built;
            worst_residual = std::max(worst_residual, rep.residual);
            if (rep.residual >= 1e-9) ++residual_bad;
            auto rpt = fox_cocycle_dims(rep, {p, q, r}, abc);
            if (rpt.dim_z1 != 3 || rpt.dim_b1 != 3 || rpt.dim_h1 != 0) ++dim_bad;
        }
        long expect = (p - 1) * (q - 1) * (r - 1) / 4;
        char worst[32];
        std::snprintf(worst, sizeof(worst), "%.2e", worst_residual);
        c.eq("characters of Sigma" + tuple_str(t), expect, built);
        c.eq("Sigma" + tuple_str(t) + " reps with residual >= 1e-9 (worst " + worst + ")", 0L,
             residual_bad);
        c.eq("Sigma" + tuple_str(t) + " reps with (Z1,B1,H1) != (3,3,0)", 0L, dim_bad);
    }
    c.require("suite completed in under 1 min", ms_since(t0) < 60000.0);
    return c.finish();
}

inline CheckResult c11_admissibility_grid() {
    Crit c(11, "twist", "admissibility matches the boundary-slope/Alexander rule");
    long cases = 0, mismatches = 0;
    std::string first_bad;
    for (long xi = 1; xi <= 10; ++xi) {
        TwistKnot k(xi);
        for (long p = -48; p <= 48; ++p)
            for (long q = 0; q <= 5; ++q) {
                if (std::gcd(std::abs(p), q) != 1) continue;
                if (q == 0 && p != 1) continue;
                Slope s(p, q);
                ++cases;
                bool expect = !is_strict_boundary_slope(k, s) &&
                              !(xi == 1 && s.p != 0 && s.p % 12 == 0);
                if (is_admissible(k, s).admissible != expect) {
                    ++mismatches;
                    if (first_bad.empty())
                        first_bad = "xi=" + std::to_string(xi) + " slope " + s.str();
                }
            }
    }
    c.eq("grid mismatches (of " + std::to_string(cases) + " slopes)", 0L, mismatches);
    if (!first_bad.empty()) c.note(first_bad);
    return c.finish();
}

inline CheckResult c12_entry_properties() {
    Crit c(12, "twist", "entry properties of rho(w) at mu = +-1");
    for (long xi = 1; xi <= 12; ++xi) {
        std::string tag = "xi=" + std::to_string(xi);
        for (int mu : {1, -1}) {
            auto r = entry_properties_check(TwistKnot(xi), mu);
            std::string sign = mu == 1 ? "+1" : "-1";
            c.require(tag + " mu=" + sign + " (i) integer entries", r.pass[0]);
            c.require(tag + " mu=" + sign + " (ii) delta monic", r.pass[1]);
            c.require(tag + " mu=" + sign + " (iii) gamma = t*beta", r.pass[2]);
            int parity = r.applicable[3] ? 3 : 4;
            std::string pname = parity == 3 ? "(iv)" : "(v)";
            if (mu == 1) {
                c.require(tag + " mu=+1 " + pname, r.pass[parity]);
            } else {
                // the literal identity flips sign at mu = -1; assert the
                // sign-corrected form and record the literal failure
                c.require(tag + " mu=-1 " + pname + " with factor mu", r.pass_mu_adjusted[parity]);
                c.require(tag + " mu=-1 " + pname + " literal form fails as expected",
                          !r.pass[parity]);
            }
        }
    }
    c.note("at mu = -1 both parity identities hold only with an extra factor mu on the "
           "right-hand side; the literal forms fail (reported, sign-corrected forms asserted)");
    return c.finish();
}

inline CheckResult c13_connected_sum() {
    Crit c(13, "seifert", "connected sums");
    SumPiece poincare{lambda_seifert(SeifertTuple({2, 3, 5})), 1};
    SumPiece s237{lambda_seifert(SeifertTuple({2, 3, 7})), 1};
    c.eq("lambda(Sigma(2,3,5) # Sigma(2,3,7))", BigRat(5),
         lambda_connected_sum({poincare, s237}));
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> lam(0, 25), h(1, 4);
    long bad = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<SumPiece> pieces;
        for (int j = 0; j < 3; ++j) pieces.push_back({BigRat(lam(rng)), BigInt(h(rng))});
        BigRat base = lambda_connected_sum(pieces);
        std::vector<size_t> order = {0, 1, 2};
        do {
            std::vector<SumPiece> perm;
            for (size_t idx : order) perm.push_back(pieces[idx]);
            if (lambda_connected_sum(perm) != base) ++bad;
        } while (std::next_permutation(order.begin(), order.end()));
    }
    c.eq("fold-order violations over 100 random triples", 0L, bad);
    return c.finish();
}

} // namespace verify_detail

// Suites: seifert {1,2,3,13}, twist {4,5,7,8,9,11,12}, norm {6}, cohomology {10}.
inline std::vector<CheckResult> run_verify_suite(const std::string& suite, unsigned long seed,
                                                 bool fail_fast = false) {
    using namespace verify_detail;
    struct Entry {
        int criterion;
        const char* suite;
        std::function<CheckResult()> run;
    };
    const std::vector<Entry> table = {
        {1, "seifert", c01_brieskorn_values},
        {2, "seifert", c02_weight_oracle_grid},
        {3, "seifert", c03_milnor_relation},
        {4, "twist", c04_surgery_cross_identities},
        {5, "twist", c05_norm_closed_forms},
        {6, "norm", [seed] { return c06_norm_oracle_grid(seed); }},
        {7, "twist", c07_correction_terms},
        {8, "twist", c08_trefoil_values},
        {9, "twist", c09_lambda_prime},
        {10, "cohomology", c10_cohomology_suite},
        {11, "twist", c11_admissibility_grid},
        {12, "twist", c12_entry_properties},
        {13, "seifert", c13_connected_sum},
    };
    std::vector<CheckResult> out;
    std::map<std::string, bool> suite_failed; // fail fast per suite, report all suites
    for (const auto& e : table) {
        if (suite != "all" && suite != e.suite) continue;
        if (fail_fast && suite_failed[e.suite]) continue;
        CheckResult r = e.run();
        if (!r.pass) suite_failed[e.suite] = true;
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> run_all_criteria(unsigned long seed) {
    return run_verify_suite("all", seed);
}

} // namespace casson
