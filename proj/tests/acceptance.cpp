/* Acceptance suite: runs every documented exactness criterion and prints one
 * pass/fail line per criterion.  Exit status 0 iff all pass. */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>

#include "checks.hpp"

using namespace qalg;

namespace {

struct Runner {
    CheckContext ctx;
    int failures = 0;
    std::chrono::steady_clock::time_point t0;

    void begin() { t0 = std::chrono::steady_clock::now(); }

    double elapsed() {
        auto d = std::chrono::steady_clock::now() - t0;
        return std::chrono::duration<double>(d).count();
    }

    void criterion(int num, const std::string& name, bool ok, const std::string& detail = "") {
        double secs = elapsed();
        std::printf("criterion=%d name=%s elapsed=%.1fs status=%s\n", num, name.c_str(), secs,
                    ok ? "pass" : "FAIL");
        if (!ok) {
            ++failures;
            if (!detail.empty()) std::printf("  detail: %s\n", detail.c_str());
        }
        std::fflush(stdout);
    }
};

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<Param> tijs(int n) {
    std::vector<Param> ps;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ps.push_back(Param::tij(i, j));
    return ps;
}

bool dims_match(const std::vector<mpz_class>& got, const std::vector<mpz_class>& want,
                std::string& detail) {
    for (size_t k = 0; k < got.size(); ++k) {
        mpz_class w = k < want.size() ? want[k] : mpz_class(0);
        if (got[k] != w) {
            detail += " degree " + std::to_string(k) + ": got " + got[k].get_str() +
                      " want " + w.get_str() + ";";
            return false;
        }
    }
    return true;
}

/* printed dimension formulas for the zero-square quotient, as coefficient
 * lists (binomial lower index, coefficient) */
const std::vector<std::vector<std::pair<int, long>>>& e0_dim_table() {
    static const std::vector<std::vector<std::pair<int, long>>> table = {
        {},                                                        // k = 0 (dim 1)
        {{2, 1}},                                                  // k = 1
        {{4, 3}, {3, 4}},                                          // k = 2
        {{6, 15}, {5, 40}, {4, 30}, {3, 3}},                       // k = 3
        {{8, 105}, {7, 420}, {6, 610}, {5, 366}, {4, 67}, {3, 1}}, // k = 4
        {{10, 945}, {9, 5040}, {8, 10780}, {7, 11571}, {6, 6285}, {5, 1480}, {4, 96}},  // k = 5
        {{12, 10395}, {11, 69300}, {10, 195300}, {9, 299908}, {8, 268674}, {7, 138545},
         {6, 37456}, {5, 4231}, {4, 106}},  // k = 6
    };
    return table;
}

long e0_dim_formula(int n, int k) {
    if (k == 0) return 1;
    long r = 0;
    for (auto [low, c] : e0_dim_table()[k]) r += c * binom(n, low);
    return r;
}

}  // namespace

int main() {
    Runner run;
    run.ctx.threads = 4;

    /* 1. Hilbert series of the exchange and braid algebras */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 5; ++n) {
            auto want = inv_prod_series(n, 6);
            for (Preset preset : {Preset::Gn, Preset::Bn}) {
                RewriteBasis rb = run.ctx.basis(preset, n, 6, FieldDesc::rationals());
                auto dims = rb.graded_dims(6).dims;
                std::string d;
                if (!dims_match(dims, want, d)) {
                    ok = false;
                    detail += preset_name(preset) + "(" + std::to_string(n) + "):" + d;
                }
            }
        }
        bool fast = run.elapsed() < 60.0;
        if (!fast) detail += " exceeded 60s target;";
        run.criterion(1, "hilbert-series-exchange-and-braid", ok && fast, detail);
    }

    /* 2. printed dimension formulas of the zero-square quotient */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        auto check_dims = [&](int n, int kmax) {
            RewriteBasis rb = run.ctx.basis(Preset::En0, n, std::max(kmax, n <= 4 ? 12 : 6),
                                            FieldDesc::rationals());
            auto dims = rb.graded_dims(kmax).dims;
            for (int k = 0; k <= kmax; ++k) {
                if (dims[k] != e0_dim_formula(n, k)) {
                    ok = false;
                    detail += " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": got " +
                              dims[k].get_str() + " want " + std::to_string(e0_dim_formula(n, k)) +
                              ";";
                }
            }
        };
        for (int n = 2; n <= 6; ++n) check_dims(n, 4);
        for (int n = 2; n <= 5; ++n) check_dims(n, 5);
        check_dims(4, 6);
        bool fast = run.elapsed() < 600.0;
        if (!fast) detail += " exceeded 600s target;";
        run.criterion(2, "zero-square-dimension-formulas", ok && fast, detail);
    }

    /* 3. full Hilbert polynomial at rank 4 */
    run.begin();
    {
        RewriteBasis rb = run.ctx.basis(Preset::En0, 4, 12, FieldDesc::rationals());
        auto dims = rb.graded_dims(12).dims;
        auto want = parse_expect_poly("(1+t)^4*(1+t^2)^2*(1+t+t^2)^2");
        std::string detail;
        bool ok = dims_match(dims, want, detail);
        mpz_class total = 0;
        for (const auto& d : dims) total += d;
        if (total != 576) {
            ok = false;
            detail += " total " + total.get_str() + " != 576;";
        }
        run.criterion(3, "rank-4-hilbert-polynomial", ok, detail);
    }

    /* 4. zero-square braid quotient versus the zero-square exchange quotient
     * at ranks 3 and 4 */
    run.begin();
    {
        std::string detail;
        bool ok = true;
        RewriteBasis b3 = run.ctx.basis(Preset::Bn0, 3, 6, FieldDesc::rationals());
        auto b3d = b3.graded_dims(6).dims;
        ok = dims_match(b3d, parse_expect_poly("1+3t+4t^2+3t^3+t^4"), detail) && ok;
        RewriteBasis e3 = run.ctx.basis(Preset::En0, 3, 6, FieldDesc::rationals());
        ok = dims_match(b3d, e3.graded_dims(6).dims, detail) && ok;
        /* rank 4: the quotient vanishes above degree 10 (degree-11 slice is
         * empty and standard words are closed under subwords) */
        RewriteBasis b4 = run.ctx.basis(Preset::Bn0, 4, 11, FieldDesc::rationals());
        RewriteBasis e4 = run.ctx.basis(Preset::En0, 4, 12, FieldDesc::rationals());
        auto b4d = b4.graded_dims(11).dims;
        auto e4d = e4.graded_dims(12).dims;
        std::string d4;
        b4d.push_back(0);
        b4d.push_back(0);  // degrees 12, 13: zero since degree 11 is zero
        if (!dims_match(b4d, e4d, d4)) {
            ok = false;
            detail += " rank-4 mismatch:" + d4;
            detail += " computed braid-quotient dims " + dims_str(b4d) + " vs " +
                      dims_str(e4d) + ";";
            /* forensic cross-check at the first divergent degree with the
             * rewriting-free placement-rank oracle */
            mpz_class oracle =
                oracle_graded_dim(build(Preset::Bn0, 4), 4, FieldDesc::rationals());
            detail += " degree-4 placement-rank oracle over Q confirms " +
                      oracle.get_str() + ";";
        }
        run.criterion(4, "braid-quotient-hilbert-match", ok, detail);
    }

    /* 5. rank-3 Jucys-Murphy subalgebra */
    run.begin();
    {
        Report rep = run_check(run.ctx, "k30-relations", {});
        run.criterion(5, "jm-subalgebra-rank-3", rep.pass);
    }

    /* 6. identity suite */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        auto note = [&](const std::string& what, const Report& rep) {
            if (!rep.pass) {
                ok = false;
                detail += " " + what + ";";
            }
        };
        for (int n = 2; n <= 6; ++n) {
            CheckParams prm;
            prm.n = n;
            note("fn-zero n=" + std::to_string(n), run_check(run.ctx, "fn-zero", prm));
        }
        for (int n = 3; n <= 5; ++n) {
            CheckParams prm;
            prm.n = n;
            note("fn-t n=" + std::to_string(n), run_check(run.ctx, "fn-t", prm));
        }
        {
            CheckParams prm;
            prm.n = 5;
            note("lemma-8-4", run_check(run.ctx, "lemma-8-4", prm));
        }
        note("bn0-relations", run_check(run.ctx, "bn0-relations", {}));
        note("fourteen-term", run_check(run.ctx, "fourteen-term", {}));
        note("example-5-4", run_check(run.ctx, "example-5-4", {}));
        for (int n = 2; n <= 4; ++n) {
            CheckParams prm;
            prm.n = n;
            prm.deg = 3;
            note("pieri n=" + std::to_string(n), run_check(run.ctx, "pieri", prm));
        }
        for (int n = 2; n <= 4; ++n) {
            CheckParams prm;
            prm.n = n;
            note("em-vanish n=" + std::to_string(n), run_check(run.ctx, "em-vanish", prm));
        }
        run.criterion(6, "identity-suite", ok, detail);
    }

    /* 7. commutation suites */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        auto note = [&](const std::string& what, const Report& rep) {
            if (!rep.pass) {
                ok = false;
                detail += " " + what + ";";
            }
        };
        for (int n = 2; n <= 5; ++n) {
            CheckParams prm;
            prm.n = n;
            prm.preset = "Gn";
            note("dunkl n=" + std::to_string(n), run_check(run.ctx, "dunkl-commute", prm));
            note("jm n=" + std::to_string(n), run_check(run.ctx, "jm-commute", prm));
            note("dk-garside n=" + std::to_string(n),
                 run_check(run.ctx, "dk-commute-garside", prm));
        }
        for (int n = 2; n <= 4; ++n) {
            CheckParams prm;
            prm.n = n;
            note("tilde n=" + std::to_string(n), run_check(run.ctx, "tilde-dunkl-commute", prm));
            prm.deg = 4;
            note("yk n=" + std::to_string(n), run_check(run.ctx, "yk-commute-ops", prm));
            note("classical n=" + std::to_string(n),
                 run_check(run.ctx, "classical-dunkl-commute", prm));
        }
        run.criterion(7, "commutation-suites", ok, detail);
    }

    /* 8. Hecke quasi-classical limit */
    run.begin();
    {
        CheckParams prm;
        prm.n = 5;
        Report rep = run_check(run.ctx, "hecke-limit", prm);
        bool fast = run.elapsed() < 10.0;
        run.criterion(8, "hecke-quasiclassical-limit", rep.pass && fast,
                      fast ? "" : "exceeded 10s target");
    }

    /* 9. braid and pure-braid checks */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        CheckParams p4;
        p4.n = 4;
        Report pb = run_check(run.ctx, "pure-braid", p4);
        if (!pb.pass) {
            ok = false;
            detail += " pure-braid;";
        }
        for (int n = 2; n <= 5; ++n) {
            CheckParams prm;
            prm.n = n;
            Report rep = run_check(run.ctx, "pi-ykstar", prm);
            if (!rep.pass) {
                ok = false;
                detail += " pi-ykstar n=" + std::to_string(n) + ";";
            }
        }
        Report eps = run_check(run.ctx, "pure-braid-epsilon", p4);
        if (!eps.pass) {
            ok = false;
            detail += " epsilon2;";
        }
        run.criterion(9, "pure-braid-and-projection", ok, detail);
    }

    /* 10. operator relations */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        auto note = [&](const std::string& what, const Report& rep) {
            if (!rep.pass) {
                ok = false;
                detail += " " + what + ";";
            }
        };
        {
            CheckParams prm;
            prm.n = 3;
            prm.deg = 3;
            note("affine-ops n=3", run_check(run.ctx, "affine-hecke-ops", prm));
        }
        {
            CheckParams prm;
            prm.n = 4;
            prm.deg = 2;
            note("affine-ops n=4", run_check(run.ctx, "affine-hecke-ops", prm));
        }
        {
            CheckParams prm;
            prm.n = 4;
            note("coxeter-tij", run_check(run.ctx, "coxeter-tij", prm));
        }
        for (int n = 2; n <= 3; ++n) {
            CheckParams prm;
            prm.n = n;
            prm.deg = 3;
            note("yk-classical n=" + std::to_string(n),
                 run_check(run.ctx, "yk-classical-limit", prm));
        }
        run.criterion(10, "operator-relations", ok, detail);
    }

    /* 11. commutative quotients and deformations */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        for (int n = 2; n <= 6; ++n) {
            RewriteBasis rb = run.ctx.basis(Preset::An0, n, std::max(n, 2),
                                            FieldDesc::rationals());
            auto dims = rb.graded_dims(std::max(n, 2)).dims;
            std::string d;
            if (!dims_match(dims, prod_one_plus_jt(n), d)) {
                ok = false;
                detail += " An0(" + std::to_string(n) + "):" + d;
            }
        }
        for (int n = 2; n <= 5; ++n) {
            RewriteBasis rb = run.ctx.basis(Preset::Pnbeta, n, std::max(n, 2),
                                            FieldDesc::fractions({Param::beta()}));
            auto dims = rb.filtered_dims(std::max(n, 2)).dims;
            std::string d;
            if (!dims_match(dims, prod_one_plus_jt(n), d)) {
                ok = false;
                detail += " Pnbeta(" + std::to_string(n) + "):" + d;
            }
        }
        for (int n = 2; n <= 4; ++n) {
            RewriteBasis rb =
                run.ctx.basis(Preset::Lnbeta, n, 5, FieldDesc::fractions({Param::beta()}));
            auto dims = rb.filtered_dims(5).dims;
            std::string d;
            if (!dims_match(dims, inv_prod_series(n, 5), d)) {
                ok = false;
                detail += " Lnbeta(" + std::to_string(n) + "):" + d;
            }
        }
        /* distinct-column basis pattern, validated on the zero-square
         * commutative quotient (over a generic fraction field the deformed
         * commutative presentation collapses; see the k30/torsion notes) */
        for (int n = 2; n <= 5; ++n) {
            RewriteBasis rb = run.ctx.basis(Preset::An0, n, std::max(n, 2),
                                            FieldDesc::rationals());
            auto want = prod_one_plus_jt(n);
            for (int l = 0; l <= n - 1; ++l) {
                auto words = rb.standard_words(l);
                if ((long)words.size() != want[l].get_si()) {
                    ok = false;
                    detail += " An0(" + std::to_string(n) + ") degree " + std::to_string(l) +
                              " count;";
                }
                for (const auto& w : words) {
                    /* every standard word uses pairwise distinct column
                     * (second) indices */
                    std::vector<int> seconds;
                    for (Letter ltr : w) seconds.push_back(sym_of(ltr, n).j);
                    std::sort(seconds.begin(), seconds.end());
                    if (std::adjacent_find(seconds.begin(), seconds.end()) != seconds.end()) {
                        ok = false;
                        detail += " An0(" + std::to_string(n) + ") pattern;";
                    }
                }
            }
        }
        run.criterion(11, "commutative-quotients-and-deformations", ok, detail);
    }

    /* 12. subalgebra series */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        {
            RewriteBasis rb = run.ctx.basis(Preset::Ent, 3, 4, FieldDesc::fractions(tijs(3)));
            std::vector<NCPoly> th;
            for (int j = 1; j <= 3; ++j) th.push_back(dunkl_theta(rb.field().ring(), 3, j));
            auto dims = rb.subalgebra_dims(th, 4).dims;
            std::string d;
            if (!dims_match(dims, t_factorial(3), d)) {
                ok = false;
                detail += " theta-E3t:" + d;
            }
        }
        {
            RewriteBasis rb = run.ctx.basis(Preset::Ent, 4, 7, FieldDesc::fractions(tijs(4)));
            std::vector<NCPoly> th;
            for (int j = 1; j <= 4; ++j) th.push_back(dunkl_theta(rb.field().ring(), 4, j));
            auto dims = rb.subalgebra_dims(th, 7).dims;
            std::string d;
            if (!dims_match(dims, t_factorial(4), d)) {
                ok = false;
                detail += " theta-E4t:" + d;
            }
        }
        {
            RewriteBasis rb = run.ctx.basis(Preset::En0, 4, 12, FieldDesc::rationals());
            std::vector<NCPoly> col;
            for (int i = 1; i <= 3; ++i)
                col.push_back(NCPoly::gen(ring_int(), 4, GenSym::bracket(i, 4)));
            auto dims = rb.subalgebra_dims(col, 8).dims;
            std::vector<mpz_class> want{1, 3, 6, 9, 10, 9, 6, 3, 1};
            std::string d;
            if (!dims_match(dims, want, d)) {
                ok = false;
                detail += " Z4k:" + d;
            }
        }
        for (int n = 3; n <= 6; ++n) {
            RewriteBasis rb = run.ctx.basis(Preset::En0, n, n <= 4 ? 12 : 6,
                                            FieldDesc::rationals());
            std::vector<NCPoly> col;
            for (int i = 1; i < n; ++i)
                col.push_back(NCPoly::gen(ring_int(), n, GenSym::bracket(i, n)));
            auto dims = rb.subalgebra_dims(col, 4).dims;
            long z3 = (long)(n - 1) * (n - 2) * (2 * n - 5) / 2;
            long z4 = (long)(n - 1) * (n - 2) * (n - 3) * (3 * n - 7) / 3;
            if (dims[3] != z3 || dims[4] != z4) {
                ok = false;
                detail += " Z" + std::to_string(n) + "-closed-form;";
            }
        }
        run.criterion(12, "subalgebra-series", ok, detail);
    }

    /* 13. property-based checks */
    run.begin();
    {
        bool ok = true;
        std::string detail;
        {
            CheckParams prm;
            prm.n = 3;
            prm.deg = 5;
            Report rep = run_check(run.ctx, "torsion-bn0", prm);
            bool p2_seen = false;
            for (const auto& rec : rep.records)
                for (const auto& [k, v] : rec.kv)
                    if (k == "p2_discrepancy" && v == "true") p2_seen = true;
            if (!rep.pass) {
                ok = false;
                detail += " large-prime-discrepancy;";
            }
            if (!p2_seen) detail += " note: no 2-torsion reported;";
        }
        /* automaton versus placement-rank oracle */
        {
            struct Inst {
                Preset preset;
                int n, kmax;
            };
            std::vector<Inst> insts = {
                {Preset::Gn, 3, 5},    {Preset::Gn, 4, 4},  {Preset::Gn, 5, 4},
                {Preset::Bn, 4, 4},    {Preset::En0, 4, 4}, {Preset::En0, 5, 4},
                {Preset::En0, 6, 3},   {Preset::Bn0, 3, 5}, {Preset::Bn0, 4, 4},
                {Preset::An0, 4, 4},   {Preset::GnComm, 3, 4},
            };
            for (const auto& inst : insts) {
                Presentation p = build(inst.preset, inst.n);
                RewriteBasis rb = run.ctx.basis(inst.preset, inst.n,
                                                std::max(inst.kmax, 4), FieldDesc::rationals());
                for (int k = 2; k <= inst.kmax; ++k) {
                    double words = std::pow((double)p.gens.size(), k);
                    if (words > 1e5) break;
                    mpz_class a = rb.graded_dim(k);
                    mpz_class o = oracle_graded_dim(p, k, FieldDesc::rationals());
                    if (a != o) {
                        ok = false;
                        detail += " oracle " + preset_name(inst.preset) + "(" +
                                  std::to_string(inst.n) + ")@" + std::to_string(k) + ";";
                    }
                }
            }
        }
        /* normal-form idempotence and log replay on seeded random elements */
        {
            std::mt19937 rng(20260810);
            for (Preset preset :
                 {Preset::Gn, Preset::Bn, Preset::Ent, Preset::En0, Preset::Bnt, Preset::Bn0,
                  Preset::Ant, Preset::An0, Preset::Lnbeta, Preset::Pnbeta, Preset::GnComm,
                  Preset::TildeGn0}) {
                int n = 3;
                Presentation p = build(preset, n);
                RewriteBasis rb = run.ctx.basis(preset, n, 4, default_field(p));
                auto letters = p.letters();
                RingPtr er = rb.field().ring();
                for (int it = 0; it < 1000; ++it) {
                    NCPoly e = NCPoly::zero(er, n);
                    int terms = 1 + (int)(rng() % 4);
                    for (int k = 0; k < terms; ++k) {
                        Word w;
                        int len = (int)(rng() % 4);
                        for (int l = 0; l < len; ++l)
                            w.push_back(letters[rng() % letters.size()]);
                        long c = (long)(rng() % 5) - 2;
                        e = e + NCPoly::monomial(er, n, w, Scalar::constant(er, c));
                    }
                    ReductionLog log;
                    NCPoly nf = rb.normal_form(e, &log);
                    if (!(rb.normal_form(nf) == nf)) {
                        ok = false;
                        detail += " idempotence " + preset_name(preset) + ";";
                        break;
                    }
                    if (!(rb.replay(e, log) == nf)) {
                        ok = false;
                        detail += " replay " + preset_name(preset) + ";";
                        break;
                    }
                }
            }
        }
        run.criterion(13, "property-based-checks", ok, detail);
    }

    if (run.failures) {
        std::printf("acceptance: %d criterion(s) FAILED\n", run.failures);
        return 1;
    }
    std::printf("acceptance: all 13 criteria passed\n");
    return 0;
}
