#include "coalg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "coalg/equivalences.hpp"
#include "coalg/format.hpp"
#include "coalg/properties.hpp"
#include "coalg/transforms.hpp"

using namespace coalg;

struct coalg_system {
    System sys;
};
struct coalg_relation {
    Relation rel;
};
struct coalg_partition {
    Partition part;
};
struct coalg_order {
    OrderSpec ord;
};

namespace {

thread_local std::string g_last_error;

coalg_status fail(coalg_status st, const std::string& msg) {
    g_last_error = msg;
    return st;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Run a callable, mapping the library's exception taxonomy onto status codes.
template <typename F>
coalg_status guard(F&& f) {
    try {
        return f();
    } catch (const parse_error& e) {
        return fail(COALG_ERR_PARSE, e.what());
    } catch (const validation_error& e) {
        return fail(COALG_ERR_INVALID, e.what());
    } catch (const mismatch_error& e) {
        return fail(COALG_ERR_MISMATCH, e.what());
    } catch (const limit_error& e) {
        return fail(COALG_ERR_LIMIT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(COALG_ERR_BADARG, e.what());
    } catch (const std::exception& e) {
        return fail(COALG_ERR_BADARG, e.what());
    }
}

coalg_status put_verdict(const Verdict& v, int* holds, char** counterexample) {
    if (holds) *holds = v.holds ? 1 : 0;
    if (counterexample) {
        *counterexample = nullptr;
        if (!v.holds) {
            std::string msg = v.detail;
            if (v.counterexample)
                msg = "(" + v.counterexample->first + "," + v.counterexample->second + "): " + msg;
            *counterexample = dup_string(msg);
        }
    }
    return COALG_OK;
}

}  // namespace

extern "C" {

const char* coalg_version(void) { return "0.1.0"; }

const char* coalg_last_error(void) { return g_last_error.c_str(); }

void coalg_string_free(char* s) { std::free(s); }

coalg_status coalg_system_parse(const char* text, coalg_system** out) {
    if (!text || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_system{parse_system(text)};
        return COALG_OK;
    });
}

coalg_status coalg_system_render(const coalg_system* sys, char** out) {
    if (!sys || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = dup_string(render_system(sys->sys));
        return COALG_OK;
    });
}

void coalg_system_free(coalg_system* sys) { delete sys; }

const char* coalg_system_name(const coalg_system* sys) { return sys ? sys->sys.name.c_str() : ""; }

const char* coalg_system_kind(const coalg_system* sys) {
    return sys ? kind_name(sys->sys.kind) : "";
}

size_t coalg_system_state_count(const coalg_system* sys) {
    return sys ? sys->sys.states.size() : 0;
}

coalg_status coalg_system_validate(const coalg_system* sys, char** diagnostics) {
    if (!sys || !diagnostics) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        std::string all;
        for (const auto& d : validate_system(sys->sys)) {
            if (!all.empty()) all += "\n";
            all += d;
        }
        *diagnostics = dup_string(all);
        return COALG_OK;
    });
}

coalg_status coalg_disjoint_union(const coalg_system* s1, const coalg_system* s2,
                                  coalg_system** out) {
    if (!s1 || !s2 || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_system{disjoint_union(s1->sys, s2->sys)};
        return COALG_OK;
    });
}

coalg_status coalg_relation_parse(const char* text, const coalg_system* s1,
                                  const coalg_system* s2, coalg_relation** out) {
    if (!text || !s1 || !s2 || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_relation{parse_relation(text, s1->sys, s2->sys)};
        return COALG_OK;
    });
}

coalg_status coalg_relation_render(const coalg_relation* rel, char** out) {
    if (!rel || !out) return fail(COALG_ERR_BADARG, "null argument");
    *out = dup_string(render_relation(rel->rel));
    return COALG_OK;
}

size_t coalg_relation_pair_count(const coalg_relation* rel) {
    return rel ? rel->rel.pairs.size() : 0;
}

void coalg_relation_free(coalg_relation* rel) { delete rel; }

coalg_status coalg_partition_parse(const char* text, const coalg_system* sys,
                                   coalg_partition** out) {
    if (!text || !sys || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_partition{parse_partition(text, sys->sys.state_set())};
        return COALG_OK;
    });
}

coalg_status coalg_partition_render(const coalg_partition* p, char** out) {
    if (!p || !out) return fail(COALG_ERR_BADARG, "null argument");
    *out = dup_string(render_partition(p->part));
    return COALG_OK;
}

size_t coalg_partition_class_count(const coalg_partition* p) {
    return p ? p->part.classes.size() : 0;
}

void coalg_partition_free(coalg_partition* p) { delete p; }

coalg_status coalg_order_parse(const char* spec, const coalg_system* s1, const coalg_system* s2,
                               coalg_order** out) {
    if (!spec || !s1 || !s2 || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        const std::string s(spec);
        OrderSpec ord;
        if (s == "eq") ord = OrderSpec::equality();
        else if (s == "incl") ord = OrderSpec::powerset_inclusion();
        else if (s == "kernel-support") ord = OrderSpec::kernel_of(AlphaKind::Support);
        else if (s == "kernel-dm") ord = OrderSpec::kernel_of(AlphaKind::Dm);
        else if (s == "kernel-dma") ord = OrderSpec::kernel_of(AlphaKind::Dma);
        else if (s.rfind("file:", 0) == 0)
            ord = parse_order_file(s.substr(5), s1->sys, s2->sys);
        else
            return fail(COALG_ERR_BADARG, "unknown order spec: " + s);
        *out = new coalg_order{std::move(ord)};
        return COALG_OK;
    });
}

void coalg_order_free(coalg_order* ord) { delete ord; }

coalg_status coalg_check_bisimulation(const coalg_system* s1, const coalg_system* s2,
                                      const coalg_relation* rel, int* holds,
                                      char** counterexample) {
    if (!s1 || !s2 || !rel) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        return put_verdict(is_bisimulation(s1->sys, s2->sys, rel->rel), holds, counterexample);
    });
}

coalg_status coalg_check_simulation(const coalg_system* s1, const coalg_system* s2,
                                    const coalg_relation* rel, const coalg_order* ord, int* holds,
                                    char** counterexample) {
    if (!s1 || !s2 || !rel || !ord) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        return put_verdict(is_simulation(s1->sys, s2->sys, rel->rel, ord->ord), holds,
                           counterexample);
    });
}

coalg_status coalg_check_prob_bisimulation(const coalg_system* sys, const coalg_partition* p,
                                           int* holds, char** counterexample) {
    if (!sys || !p) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        return put_verdict(is_prob_bisimulation(sys->sys, p->part), holds, counterexample);
    });
}

coalg_status coalg_largest_simulation(const coalg_system* s1, const coalg_system* s2,
                                      const coalg_order* ord, coalg_relation** out) {
    if (!s1 || !s2 || !ord || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_relation{largest_simulation(s1->sys, s2->sys, ord->ord)};
        return COALG_OK;
    });
}

coalg_status coalg_prob_bisimilarity(const coalg_system* sys, coalg_partition** out) {
    if (!sys || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_partition{prob_bisimilarity(sys->sys)};
        return COALG_OK;
    });
}

coalg_status coalg_alpha_image(const coalg_system* sys, const char* alpha, coalg_system** out) {
    if (!sys || !alpha || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        const auto a = alpha_from_name(alpha);
        if (!a) return fail(COALG_ERR_BADARG, std::string("unknown transformation: ") + alpha);
        *out = new coalg_system{alpha_image(*a, sys->sys)};
        return COALG_OK;
    });
}

coalg_status coalg_canonical_representation(const coalg_system* sys, coalg_system** out) {
    if (!sys || !out) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        *out = new coalg_system{canonical_representation(sys->sys)};
        return COALG_OK;
    });
}

coalg_status coalg_enumerate_representations(const coalg_system* sys, int bound, size_t cap,
                                             coalg_system*** out, size_t* count) {
    if (!sys || !out || !count) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        const auto reps = enumerate_representations(
            sys->sys, bound, cap == 0 ? 10000 : static_cast<std::int64_t>(cap));
        coalg_system** list =
            static_cast<coalg_system**>(std::malloc(sizeof(coalg_system*) * reps.size()));
        for (std::size_t i = 0; i < reps.size(); ++i) list[i] = new coalg_system{reps[i]};
        *out = list;
        *count = reps.size();
        return COALG_OK;
    });
}

void coalg_system_list_free(coalg_system** list, size_t count) {
    if (!list) return;
    for (size_t i = 0; i < count; ++i) delete list[i];
    std::free(list);
}

coalg_status coalg_run_check(const char* property_id, uint64_t seed, int instances, int jobs,
                             int* passed, char** report) {
    if (!property_id) return fail(COALG_ERR_BADARG, "null argument");
    return guard([&] {
        CheckReport rep;
        if (std::string(property_id) == "fixtures") {
            rep = run_fixture_suite();
        } else {
            GenParams params;
            params.seed = seed;
            rep = run_check(property_id, params, instances, jobs <= 0 ? 1 : jobs);
        }
        if (passed) *passed = rep.passed() ? 1 : 0;
        if (report) *report = dup_string(render_report(rep));
        return COALG_OK;
    });
}

}  // extern "C"
