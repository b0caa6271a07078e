#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "subint/error.hpp"
#include "subint/io.hpp"

using namespace subint;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

SystemId require_system(const std::string& name) {
    if (auto s = system_from_name(name)) return *s;
    if (auto h = hilbert_system_from_name(name)) return alias(*h);
    throw Error("unknown system \"" + name + "\"");
}

HilbertSystemId require_hilbert(const std::string& name) {
    if (auto h = hilbert_system_from_name(name)) return *h;
    if (auto s = system_from_name(name)) return alias(*s);
    throw Error("unknown system \"" + name + "\"");
}

Formulas split_pool(const std::string& text) {
    Formulas out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse(item));
    }
    return out;
}

// Accepts a bare derivation or the {"proof": ...} object printed by other subcommands.
io::Json load_proof(const std::string& path) {
    io::Json j = io::read_json_file(path);
    if (j.is_object() && j.contains("proof") && !j.contains("conclusion")) return j.at("proof");
    return j;
}

void emit_derivation(const Derivation& d, bool json) {
    if (json) {
        std::cout << io::to_json(d).dump(2) << "\n";
    } else {
        std::cout << render_tree(d);
    }
}

void emit_hilbert(const HilbertDerivation& d, bool json) {
    if (json) {
        std::cout << io::to_json(d).dump(2) << "\n";
        return;
    }
    std::function<void(const HilbertDerivation&, std::size_t)> walk = [&](const HilbertDerivation& n,
                                                                            std::size_t depth) {
        std::string label = n.by() == Justification::Assumption ? "assumption"
                            : n.by() == Justification::Axiom    ? "axiom " + n.name()
                                                                : "rule " + n.name();
        std::cout << std::string(2 * depth, ' ') << label << "  " << print(n.conclusion()) << "\n";
        for (const auto& p : n.premises()) walk(p, depth + 1);
    };
    walk(d, 0);
}

void check_thread_env() {
    if (const char* env = std::getenv("SUBINT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw Error("SUBINT_THREADS must be a positive integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proof engine for weak subintuitionistic logics"};
    app.require_subcommand(1);
    std::string emit = "tree";

    auto* prove_cmd = app.add_subcommand("prove", "Backward proof search in a cut-free system");
    std::string system_name;
    std::string goal_text;
    std::size_t max_depth = 3;
    std::string pool_text;
    std::size_t pair_budget = 0;
    prove_cmd->add_option("--system", system_name, "Sequent system")->required();
    prove_cmd->add_option("--goal", goal_text, "Goal sequent \"G => D\" or formula")->required();
    prove_cmd->add_option("--max-depth", max_depth, "Bound on nested ImpI applications");
    prove_cmd->add_option("--pool", pool_text, "Interpolant pool, ';'-separated formulas");
    prove_cmd->add_option("--pair-budget", pair_budget, "Implication pairs tried per node (0 = unbounded)");
    prove_cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"tree", "json"}));

    auto* check_cmd = app.add_subcommand("check", "Check a sequent or Hilbert derivation");
    std::string proof_path;
    std::string mode = "theorem";
    check_cmd->add_option("--system", system_name, "Sequent or Hilbert system")->required();
    check_cmd->add_option("--proof", proof_path, "Derivation JSON file")->required();
    check_cmd->add_option("--mode", mode, "Hilbert checking mode")->check(CLI::IsMember({"theorem", "assumptions"}));
    check_cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"tree", "json"}));

    auto* cut_cmd = app.add_subcommand("eliminate-cut", "Remove every cut from a derivation");
    cut_cmd->add_option("--system", system_name, "Sequent system")->required();
    cut_cmd->add_option("--proof", proof_path, "Derivation JSON file")->required();
    cut_cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"tree", "json"}));

    auto* translate_cmd = app.add_subcommand("translate", "Translate between sequent and Hilbert derivations");
    std::string direction;
    translate_cmd->add_option("--to", direction, "Target calculus")
        ->required()
        ->check(CLI::IsMember({"hilbert", "sequent"}));
    translate_cmd->add_option("--system", system_name, "Sequent or Hilbert system")->required();
    translate_cmd->add_option("--proof", proof_path, "Derivation JSON file")->required();
    translate_cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"tree", "json"}));

    auto* cm_cmd = app.add_subcommand("countermodel", "Search for a refuting NB-neighbourhood model");
    std::string class_name;
    std::string formula_text;
    CountermodelConfig cm_cfg;
    cm_cmd->add_option("--class", class_name, "Logic whose frame class is searched")->required();
    cm_cmd->add_option("--formula", formula_text, "Formula or sequent to refute")->required();
    cm_cmd->add_option("--max-worlds", cm_cfg.max_worlds, "World budget")->check(CLI::Range(1, 3));
    cm_cmd->add_option("--max-atoms", cm_cfg.max_atoms, "Atom budget");
    cm_cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"tree", "json"}));

    auto* enum_cmd = app.add_subcommand("enum-frames", "Enumerate small NB frames");
    std::size_t size = 1;
    std::vector<std::string> property_names;
    bool list_frames = false;
    enum_cmd->add_option("--size", size, "Number of worlds")->required()->check(CLI::Range(1, 2));
    enum_cmd->add_option("--property", property_names, "Required frame property (repeatable)");
    enum_cmd->add_flag("--list", list_frames, "Print every frame");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        check_thread_env();
        const bool json = emit == "json";

        if (*prove_cmd) {
            const SystemId sys = require_system(system_name);
            SearchConfig cfg;
            cfg.max_depth = max_depth;
            if (!pool_text.empty()) cfg.interpolant_pool = split_pool(pool_text);
            if (pair_budget > 0) cfg.pair_budget = pair_budget;
            const ProveResult r = prove(sys, parse_sequent(goal_text), cfg);
            if (json) {
                io::Json out{{"proved", r.proved()}, {"stats", io::to_json(r.stats)}};
                if (r.proved()) {
                    out["proof"] = io::to_json(*r.proof);
                } else {
                    out["reason"] = std::string(failure_name(r.reason));
                    out["pool_limited"] = r.pool_limited;
                    out["budget_limited"] = r.budget_limited;
                }
                std::cout << out.dump(2) << "\n";
            } else if (r.proved()) {
                std::cout << render_tree(*r.proof);
            } else {
                std::cout << "not proved: " << failure_name(r.reason);
                if (r.pool_limited) std::cout << " (interpolant pool limited)";
                if (r.budget_limited) std::cout << " (pair budget limited)";
                std::cout << "\n";
            }
            return r.proved() ? kOk : kNegative;
        }

        if (*check_cmd) {
            const io::Json j = load_proof(proof_path);
            CheckReport report;
            if (j.contains("by")) {
                const HilbertSystemId h = require_hilbert(system_name);
                report = check_hilbert(h, io::hilbert_from_json(j),
                                       mode == "theorem" ? HilbertMode::Theorem : HilbertMode::FromAssumptions);
            } else {
                report = check(require_system(system_name), io::derivation_from_json(j));
            }
            if (json) {
                std::cout << io::to_json(report).dump(2) << "\n";
            } else {
                std::cout << (report.accepted ? "accepted" : "rejected: " + report.describe()) << "\n";
            }
            return report.accepted ? kOk : kNegative;
        }

        if (*cut_cmd) {
            const SystemId sys = require_system(system_name);
            const Derivation d = io::derivation_from_json(load_proof(proof_path));
            const CheckReport report = check(sys, d);
            if (!report) {
                std::cerr << "input rejected: " << report.describe() << "\n";
                return kNegative;
            }
            CutStats stats;
            const Derivation out = eliminate_all_cuts(sys, d, &stats);
            if (json) {
                std::cout << io::Json{{"proof", io::to_json(out)}, {"stats", io::to_json(stats)}}.dump(2) << "\n";
            } else {
                std::cout << render_tree(out);
                std::cerr << "cuts removed: " << stats.initial_cuts << ", rewrite steps: " << stats.rewrite_steps
                          << "\n";
            }
            return kOk;
        }

        if (*translate_cmd) {
            const io::Json j = load_proof(proof_path);
            if (direction == "hilbert") {
                const SystemId sys = require_system(system_name);
                emit_hilbert(seq_to_hilbert(sys, io::derivation_from_json(j)), json);
            } else {
                const HilbertSystemId h = require_hilbert(system_name);
                emit_derivation(hilbert_to_seq(h, io::hilbert_from_json(j)), json);
            }
            return kOk;
        }

        if (*cm_cmd) {
            auto props = property_class(class_name);
            if (!props) throw Error("unknown class \"" + class_name + "\"");
            Formula f = formula_text.find("=>") != std::string::npos ? interpretation(parse_sequent(formula_text))
                                                                     : parse(formula_text);
            auto found = countermodel(*props, f, cm_cfg);
            if (json) {
                io::Json out{{"found", found.has_value()}};
                if (found) out["model"] = io::to_json(*found);
                std::cout << out.dump(2) << "\n";
            } else if (found) {
                std::cout << render_model(*found);
            } else {
                std::cout << "no countermodel with at most " << cm_cfg.max_worlds << " worlds\n";
            }
            return found ? kNegative : kOk;
        }

        if (*enum_cmd) {
            std::vector<FrameProperty> props;
            for (const auto& n : property_names) {
                auto p = property_from_name(n);
                if (!p) throw Error("unknown property \"" + n + "\"");
                props.push_back(*p);
            }
            std::size_t count = 0;
            for_each_frame(size, props, [&](const NBFrame& fr) {
                ++count;
                if (list_frames) {
                    Countermodel shown{NBModel{fr, {}}, 0};
                    io::Json j = io::to_json(shown);
                    std::cout << io::Json{{"worlds", j["worlds"]}, {"nb", j["nb"]}}.dump() << "\n";
                }
                return true;
            });
            std::cout << count << "\n";
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
