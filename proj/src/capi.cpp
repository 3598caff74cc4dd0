#include "qalg/qalg.h"

#include <cstring>
#include <set>
#include <sstream>

#include "checks.hpp"

#define QALG_API __attribute__((visibility("default")))

using namespace qalg;

struct qalg_presentation {
    Presentation p;
};
struct qalg_basis {
    RewriteBasis rb;
    FieldDesc field;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = (char*)malloc(s.size() + 1);
    memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const guard_error& e) {
        g_last_error = e.what();
        return QALG_GUARD;
    } catch (const usage_error& e) {
        g_last_error = e.what();
        return QALG_USAGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QALG_MISMATCH;
    }
}

FieldDesc parse_field(const std::string& name, const Presentation& p) {
    if (name.empty() || name == "default") return default_field(p);
    if (name == "Q") return FieldDesc::rationals();
    if (name.rfind("Fp:", 0) == 0) return FieldDesc::prime(std::stoull(name.substr(3)));
    if (name == "frac") return FieldDesc::fractions(p.ring->params);
    throw usage_error("unknown field '" + name + "' (use Q, Fp:<prime>, frac)");
}

size_t env_guard(size_t requested) {
    if (requested) return requested;
    if (const char* env = getenv("QALG_GUARD_TERMS")) {
        size_t v = strtoull(env, nullptr, 10);
        if (v) return v;
    }
    return 2000000;
}

}  // namespace

extern "C" {

QALG_API const char* qalg_version(void) { return "qalg 1.0.0"; }

QALG_API const char* qalg_last_error(void) { return g_last_error.c_str(); }

QALG_API void qalg_string_free(char* s) { free(s); }

QALG_API int qalg_preset_build(const char* preset, int n, qalg_presentation** out) {
    return guarded([&] {
        auto pr = preset_from_name(preset ? preset : "");
        if (!pr) throw usage_error("unknown preset '" + std::string(preset ? preset : "") + "'");
        *out = new qalg_presentation{build(*pr, n)};
        return QALG_OK;
    });
}

QALG_API int qalg_presentation_parse(const char* text, qalg_presentation** out) {
    return guarded([&] {
        *out = new qalg_presentation{parse_presentation(text ? text : "")};
        return QALG_OK;
    });
}

QALG_API int qalg_presentation_render(const qalg_presentation* p, char** out) {
    return guarded([&] {
        *out = dup_string(p->p.render());
        return QALG_OK;
    });
}

QALG_API void qalg_presentation_free(qalg_presentation* p) { delete p; }

QALG_API int qalg_complete(const qalg_presentation* p, int degree, const char* field,
                           size_t term_guard, qalg_basis** out) {
    return guarded([&] {
        FieldDesc fd = parse_field(field ? field : "", p->p);
        CompleteOptions opts;
        opts.term_guard = env_guard(term_guard);
        *out = new qalg_basis{RewriteBasis::complete(p->p, degree, fd, opts), fd};
        return QALG_OK;
    });
}

QALG_API void qalg_basis_free(qalg_basis* b) { delete b; }

QALG_API int qalg_basis_rule_count(const qalg_basis* b, size_t* out) {
    return guarded([&] {
        *out = b->rb.rule_count();
        return QALG_OK;
    });
}

QALG_API int qalg_basis_complete_to(const qalg_basis* b, int* out) {
    return guarded([&] {
        *out = b->rb.complete_to();
        return QALG_OK;
    });
}

QALG_API int qalg_graded_dims(const qalg_basis* b, int max_degree, char** out_csv) {
    return guarded([&] {
        *out_csv = dup_string(dims_str(b->rb.graded_dims(max_degree).dims));
        return QALG_OK;
    });
}

QALG_API int qalg_filtered_dims(const qalg_basis* b, int max_degree, char** out_csv) {
    return guarded([&] {
        *out_csv = dup_string(dims_str(b->rb.filtered_dims(max_degree).dims));
        return QALG_OK;
    });
}

QALG_API int qalg_subalgebra_dims(const qalg_basis* b, const char* gens, int max_degree,
                                  char** out_csv) {
    return guarded([&] {
        std::vector<NCPoly> gs;
        std::string all = gens ? gens : "";
        size_t start = 0;
        while (start <= all.size()) {
            size_t semi = all.find(';', start);
            std::string part =
                semi == std::string::npos ? all.substr(start) : all.substr(start, semi - start);
            if (!part.empty())
                gs.push_back(parse_element(part, b->field.ring(), b->rb.presentation().n));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        *out_csv = dup_string(dims_str(b->rb.subalgebra_dims(gs, max_degree).dims));
        return QALG_OK;
    });
}

QALG_API int qalg_reduce(const qalg_basis* b, const char* expr, int emit_log, char** out_nf,
                         char** out_log) {
    return guarded([&] {
        NCPoly e = parse_element(expr ? expr : "", b->field.ring(), b->rb.presentation().n);
        ReductionLog log;
        NCPoly nf = b->rb.normal_form(e, emit_log ? &log : nullptr);
        *out_nf = dup_string(nf.str());
        if (emit_log && out_log) {
            NCPoly again = b->rb.replay(e, log);
            if (!(again == nf)) throw std::runtime_error("reduction log failed to replay");
            std::ostringstream os;
            std::set<uint32_t> used;
            for (const auto& st : log.steps) used.insert(st.rule);
            for (uint32_t ridx : used)
                os << "rule=" << ridx << " poly=" << b->rb.rule_poly(ridx).str() << "\n";
            size_t k = 0;
            for (const auto& st : log.steps)
                os << "step=" << k++ << " rule=" << st.rule << " pos=" << st.pos << "\n";
            os << "steps=" << log.steps.size() << " result=" << nf.str() << "\n";
            *out_log = dup_string(os.str());
        } else if (out_log) {
            *out_log = nullptr;
        }
        return QALG_OK;
    });
}

QALG_API int qalg_check_list(char** out_text) {
    return guarded([&] {
        std::ostringstream os;
        for (const auto& c : check_catalog()) os << c.name << ": " << c.description << "\n";
        *out_text = dup_string(os.str());
        return QALG_OK;
    });
}

QALG_API int qalg_verify(const char* check, int n, int deg, const char* preset, int threads,
                         size_t term_guard, int json, char** out_report) {
    return guarded([&] {
        CheckContext ctx;
        ctx.term_guard = env_guard(term_guard);
        ctx.threads = threads > 0 ? threads : 1;
        CheckParams prm;
        prm.n = n;
        prm.deg = deg;
        if (preset) prm.preset = preset;
        Report rep = run_check(ctx, check ? check : "", prm);
        *out_report = dup_string(json ? rep.render_json() : rep.render_text());
        return rep.pass ? QALG_OK : QALG_MISMATCH;
    });
}

QALG_API int qalg_dim_command(const char* preset_or_text, int is_file_text, int n, int deg,
                              const char* field, int filtered, const char* expect, int json,
                              char** out_report) {
    return guarded([&] {
        Presentation p;
        if (is_file_text) {
            p = parse_presentation(preset_or_text ? preset_or_text : "");
        } else {
            auto pr = preset_from_name(preset_or_text ? preset_or_text : "");
            if (!pr) throw usage_error("unknown preset");
            p = build(*pr, n);
            if (deg < 0) deg = default_degree(*pr, n);
        }
        if (deg < 0) throw usage_error("degree bound required");
        CheckContext ctx;
        ctx.term_guard = env_guard(0);
        FieldDesc fd = parse_field(field ? field : "", p);
        Report rep = cmd_dim(ctx, p, deg, fd, filtered != 0, expect ? expect : "");
        *out_report = dup_string(json ? rep.render_json() : rep.render_text());
        return rep.pass ? QALG_OK : QALG_MISMATCH;
    });
}

QALG_API int qalg_op_check(const char* lhs, const char* rhs, int n, int deg, int json,
                           char** out_report) {
    return guarded([&] {
        Report rep = cmd_opcheck(lhs ? lhs : "", rhs ? rhs : "", n, deg);
        *out_report = dup_string(json ? rep.render_json() : rep.render_text());
        return rep.pass ? QALG_OK : QALG_MISMATCH;
    });
}

QALG_API int qalg_torsion_probe(const char* preset, int n, int max_degree, const char* primes,
                                int json, char** out_report) {
    return guarded([&] {
        auto pr = preset_from_name(preset ? preset : "");
        if (!pr) throw usage_error("unknown preset");
        std::vector<uint64_t> ps;
        std::string s = primes ? primes : "";
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) ps.push_back(std::stoull(tok));
        if (ps.empty()) ps = default_primes();
        TorsionReport tr = torsion_probe(build(*pr, n), max_degree, ps);
        Report rep;
        rep.check = "torsion-probe";
        rep.line().add("dims_q", dims_str(tr.dims_q));
        for (size_t k = 0; k < ps.size(); ++k)
            rep.line().add("prime", (long)ps[k]).add("dims", dims_str(tr.dims_fp[k]));
        for (auto [p2, d] : tr.flags)
            rep.line().add("prime", (long)p2).add("degree", (long)d).add("note",
                                                                         "dimension-differs");
        rep.pass = true; /* informational */
        *out_report = dup_string(json ? rep.render_json() : rep.render_text());
        return QALG_OK;
    });
}

}  // extern "C"
