// coalg: command-line front end for the shared library (coalg.h).
//
// Exit codes: 0 = property holds / computation done / suite passed,
//             1 = property refuted or suite failed (counterexample printed),
//             2 = usage error, 3 = invalid input file.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coalg.h"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

int status_exit_code(coalg_status st) {
    switch (st) {
        case COALG_OK: return kExitHolds;
        case COALG_ERR_PARSE:
        case COALG_ERR_INVALID:
        case COALG_ERR_MISMATCH: return kExitBadInput;
        case COALG_ERR_LIMIT:
        case COALG_ERR_BADARG: return kExitUsage;
    }
    return kExitUsage;
}

// Unwinds the command on the first library error.
struct cli_error {
    int code;
};

void check(coalg_status st, const std::string& context) {
    if (st == COALG_OK) return;
    std::cerr << "error: " << context << ": " << coalg_last_error() << "\n";
    throw cli_error{status_exit_code(st)};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        throw cli_error{kExitBadInput};
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

using SystemPtr = std::unique_ptr<coalg_system, decltype(&coalg_system_free)>;
using RelationPtr = std::unique_ptr<coalg_relation, decltype(&coalg_relation_free)>;
using PartitionPtr = std::unique_ptr<coalg_partition, decltype(&coalg_partition_free)>;
using OrderPtr = std::unique_ptr<coalg_order, decltype(&coalg_order_free)>;

SystemPtr load_system(const std::string& path) {
    coalg_system* sys = nullptr;
    check(coalg_system_parse(slurp(path).c_str(), &sys), path);
    return {sys, coalg_system_free};
}

RelationPtr load_relation(const std::string& path, const coalg_system* s1,
                          const coalg_system* s2) {
    coalg_relation* rel = nullptr;
    check(coalg_relation_parse(slurp(path).c_str(), s1, s2, &rel), path);
    return {rel, coalg_relation_free};
}

OrderPtr load_order(const std::string& spec, const coalg_system* s1, const coalg_system* s2) {
    std::string resolved = spec;
    if (spec.rfind("file:", 0) == 0) resolved = "file:" + slurp(spec.substr(5));
    coalg_order* ord = nullptr;
    check(coalg_order_parse(resolved.c_str(), s1, s2, &ord), "order '" + spec + "'");
    return {ord, coalg_order_free};
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    coalg_string_free(s);
    return out;
}

int report_verdict(int holds, char* counterexample) {
    const std::string cex = take_string(counterexample);
    if (holds) {
        std::cout << "holds\n";
        return kExitHolds;
    }
    std::cout << "refuted";
    if (!cex.empty()) std::cout << ": " << cex;
    std::cout << "\n";
    return kExitRefuted;
}

// One-or-two-system input: with --sys2, work on the tagged disjoint union.
SystemPtr combined_input(const std::string& sys1, const std::string& sys2) {
    SystemPtr a = load_system(sys1);
    if (sys2.empty()) return a;
    SystemPtr b = load_system(sys2);
    coalg_system* u = nullptr;
    check(coalg_disjoint_union(a.get(), b.get(), &u), "disjoint union");
    return {u, coalg_system_free};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bisimulation and simulation checking for finite transition systems"};
    app.require_subcommand(1);

    std::string sys1_path, sys2_path, rel_path, part_path, order_spec = "eq", alpha = "support";
    std::string suite = "all";
    std::uint64_t seed = 20240811;
    int seeds = 200, jobs = 1, bound = 0;
    bool canonical = false;

    // check <bisim|sim|prob-bisim>
    CLI::App* cmd_check = app.add_subcommand("check", "check a given relation or partition");
    cmd_check->require_subcommand(1);
    CLI::App* c_bisim = cmd_check->add_subcommand("bisim", "is the relation a bisimulation?");
    c_bisim->add_option("--sys1", sys1_path)->required();
    c_bisim->add_option("--sys2", sys2_path)->required();
    c_bisim->add_option("--rel", rel_path)->required();
    CLI::App* c_sim = cmd_check->add_subcommand("sim", "is the relation an ordered simulation?");
    c_sim->add_option("--sys1", sys1_path)->required();
    c_sim->add_option("--sys2", sys2_path)->required();
    c_sim->add_option("--rel", rel_path)->required();
    c_sim->add_option("--order", order_spec,
                      "eq|incl|kernel-support|kernel-dm|kernel-dma|file:PATH");
    CLI::App* c_prob =
        cmd_check->add_subcommand("prob-bisim", "is the partition a probabilistic bisimulation?");
    c_prob->add_option("--sys1", sys1_path)->required();
    c_prob->add_option("--sys2", sys2_path, "optional second system (checked on the union)");
    c_prob->add_option("--partition", part_path)->required();

    // compute <bisimilarity|similarity|prob-partition>
    CLI::App* cmd_compute = app.add_subcommand("compute", "compute largest relations/partitions");
    cmd_compute->require_subcommand(1);
    CLI::App* k_bisim = cmd_compute->add_subcommand("bisimilarity", "largest bisimulation");
    k_bisim->add_option("--sys1", sys1_path)->required();
    k_bisim->add_option("--sys2", sys2_path, "defaults to sys1");
    CLI::App* k_sim = cmd_compute->add_subcommand("similarity", "largest ordered simulation");
    k_sim->add_option("--sys1", sys1_path)->required();
    k_sim->add_option("--sys2", sys2_path, "defaults to sys1");
    k_sim->add_option("--order", order_spec,
                      "eq|incl|kernel-support|kernel-dm|kernel-dma|file:PATH");
    CLI::App* k_prob =
        cmd_compute->add_subcommand("prob-partition", "probabilistic bisimilarity classes");
    k_prob->add_option("--sys1", sys1_path)->required();
    k_prob->add_option("--sys2", sys2_path, "optional second system (union)");

    // image / represent
    CLI::App* cmd_image = app.add_subcommand("image", "apply a natural transformation");
    cmd_image->add_option("--sys", sys1_path)->required();
    cmd_image->add_option("--alpha", alpha, "support|dm|dma")->required();
    CLI::App* cmd_repr = app.add_subcommand("represent", "compute representations");
    cmd_repr->add_option("--sys", sys1_path)->required();
    cmd_repr->add_flag("--canonical", canonical, "canonical representation only");
    cmd_repr->add_option("--bound", bound, "enumerate representations up to this multiplicity");

    // verify
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the verification suites");
    cmd_verify->add_option("--suite", suite, "all|P1..P10|fixtures");
    cmd_verify->add_option("--seeds", seeds, "instances per property (default 200)");
    cmd_verify->add_option("--seed", seed, "master RNG seed");
    cmd_verify->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints usage/message
        return e.get_exit_code() == 0 ? kExitHolds : kExitUsage;
    }

    try {
        if (c_bisim->parsed() || c_sim->parsed()) {
            SystemPtr a = load_system(sys1_path), b = load_system(sys2_path);
            RelationPtr rel = load_relation(rel_path, a.get(), b.get());
            int holds = 0;
            char* cex = nullptr;
            if (c_bisim->parsed()) {
                check(coalg_check_bisimulation(a.get(), b.get(), rel.get(), &holds, &cex),
                      "check bisim");
            } else {
                OrderPtr ord = load_order(order_spec, a.get(), b.get());
                check(coalg_check_simulation(a.get(), b.get(), rel.get(), ord.get(), &holds, &cex),
                      "check sim");
            }
            return report_verdict(holds, cex);
        }
        if (c_prob->parsed()) {
            SystemPtr sys = combined_input(sys1_path, sys2_path);
            coalg_partition* p = nullptr;
            check(coalg_partition_parse(slurp(part_path).c_str(), sys.get(), &p), part_path);
            PartitionPtr part(p, coalg_partition_free);
            int holds = 0;
            char* cex = nullptr;
            check(coalg_check_prob_bisimulation(sys.get(), part.get(), &holds, &cex),
                  "check prob-bisim");
            return report_verdict(holds, cex);
        }
        if (k_bisim->parsed() || k_sim->parsed()) {
            SystemPtr a = load_system(sys1_path);
            SystemPtr b = sys2_path.empty() ? load_system(sys1_path) : load_system(sys2_path);
            OrderPtr ord = load_order(k_sim->parsed() ? order_spec : "eq", a.get(), b.get());
            coalg_relation* rel = nullptr;
            check(coalg_largest_simulation(a.get(), b.get(), ord.get(), &rel), "compute");
            RelationPtr owner(rel, coalg_relation_free);
            char* text = nullptr;
            check(coalg_relation_render(rel, &text), "render");
            std::cout << take_string(text);
            return kExitHolds;
        }
        if (k_prob->parsed()) {
            SystemPtr sys = combined_input(sys1_path, sys2_path);
            coalg_partition* p = nullptr;
            check(coalg_prob_bisimilarity(sys.get(), &p), "compute prob-partition");
            PartitionPtr owner(p, coalg_partition_free);
            char* text = nullptr;
            check(coalg_partition_render(p, &text), "render");
            std::cout << take_string(text);
            return kExitHolds;
        }
        if (cmd_image->parsed()) {
            SystemPtr sys = load_system(sys1_path);
            coalg_system* img = nullptr;
            check(coalg_alpha_image(sys.get(), alpha.c_str(), &img), "image");
            SystemPtr owner(img, coalg_system_free);
            char* text = nullptr;
            check(coalg_system_render(img, &text), "render");
            std::cout << take_string(text);
            return kExitHolds;
        }
        if (cmd_repr->parsed()) {
            if (canonical == (bound > 0)) {
                std::cerr << "error: pass exactly one of --canonical or --bound K\n";
                return kExitUsage;
            }
            SystemPtr sys = load_system(sys1_path);
            if (canonical) {
                coalg_system* rep = nullptr;
                check(coalg_canonical_representation(sys.get(), &rep), "represent");
                SystemPtr owner(rep, coalg_system_free);
                char* text = nullptr;
                check(coalg_system_render(rep, &text), "render");
                std::cout << take_string(text);
                return kExitHolds;
            }
            std::size_t cap = 10000;
            if (const char* env = std::getenv("COALG_MAX_ENUM")) cap = std::stoul(env);
            coalg_system** list = nullptr;
            std::size_t count = 0;
            check(coalg_enumerate_representations(sys.get(), bound, cap, &list, &count),
                  "represent");
            for (std::size_t i = 0; i < count; ++i) {
                char* text = nullptr;
                if (coalg_system_render(list[i], &text) == COALG_OK) {
                    if (i) std::cout << "\n";
                    std::cout << take_string(text);
                }
            }
            coalg_system_list_free(list, count);
            return kExitHolds;
        }
        if (cmd_verify->parsed()) {
            std::vector<std::string> ids;
            if (suite == "all") {
                ids = {"fixtures", "P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10"};
            } else {
                ids = {suite};
            }
            bool all_passed = true;
            for (const auto& id : ids) {
                int passed = 0;
                char* report = nullptr;
                check(coalg_run_check(id.c_str(), seed, seeds, jobs, &passed, &report),
                      "verify " + id);
                std::cout << take_string(report);
                all_passed = all_passed && passed;
            }
            std::cout << (all_passed ? "ALL SUITES PASSED" : "SOME SUITES FAILED") << "\n";
            return all_passed ? kExitHolds : kExitRefuted;
        }
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const cli_error& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
