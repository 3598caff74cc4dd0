#pragma once

#include <functional>
#include <map>
#include <mutex>

#include "braid.hpp"
#include "elements.hpp"
#include "engine.hpp"
#include "hecke.hpp"
#include "qops.hpp"
#include "report.hpp"

namespace qalg {

/* Shared run state: options plus a cache of completed bases. */
class CheckContext {
  public:
    size_t term_guard = 2000000;
    int threads = 1;

    RewriteBasis basis(Preset preset, int n, int degree, const FieldDesc& field);
    RewriteBasis basis(const Presentation& p, int degree, const FieldDesc& field);

  private:
    std::mutex mu_;
    std::map<std::string, RewriteBasis> cache_;
};

/* natural coefficient field for a presentation's ring */
FieldDesc default_field(const Presentation& p);
/* degree bound used by the CLI when none is given */
int default_degree(Preset preset, int n);

struct CheckParams {
    int n = -1;
    int deg = -1;
    std::string preset;
};

struct CheckInfo {
    std::string name;
    std::string description;
    int default_n;
    int default_deg;  // -1 when unused
};

const std::vector<CheckInfo>& check_catalog();
bool check_exists(const std::string& name);
Report run_check(CheckContext& ctx, const std::string& name, CheckParams params);

/* CLI-facing commands */
Report cmd_dim(CheckContext& ctx, const Presentation& p, int deg, const FieldDesc& field,
               bool filtered, const std::string& expect);
struct ReduceResult {
    std::string normal_form;
    std::string log_text;
    bool zero = false;
};
ReduceResult cmd_reduce(CheckContext& ctx, const Presentation& p, int deg, const FieldDesc& field,
                        const std::string& expr, bool emit_log);
Report cmd_opcheck(const std::string& lhs, const std::string& rhs, int n, int deg);

/* parallel map with deterministic gather */
void for_each_indexed(int threads, size_t count, const std::function<void(size_t)>& fn);

}  // namespace qalg
