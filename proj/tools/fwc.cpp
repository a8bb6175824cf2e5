// fwc: construct the two code families, compute weight distributions by
// independent methods, verify the designs they support, profile locality
// bounds, and replay the bundled reference suites.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fwcodes/designs.hpp"
#include "fwcodes/linearized.hpp"
#include "fwcodes/lrc.hpp"
#include "fwcodes/pless.hpp"
#include "fwcodes/report.hpp"

using namespace fwcodes;
using json = nlohmann::ordered_json;

namespace {

// exit codes: 0 ok, 2 usage, 3 claim mismatch, 4 resource bound
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kMismatch = 3;
constexpr int kBound = 4;

struct Common {
    std::string format = "text";
    uint64_t seed = 0;
    unsigned workers = 1;
    bool exhaustive = false;
    bool timing = false;
};

struct CodeArgs {
    std::string family = "ext";
    uint32_t p = 0;
    uint32_t m = 0;
    int64_t h = -1;
    int64_t s = -1;
    std::string modulus;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
    cmd->add_option("--workers", c.workers, "enumeration worker count (default 1, or FWC_WORKERS)");
    cmd->add_flag("--exhaustive", c.exhaustive, "lift the enumeration cap for long runs");
    cmd->add_flag("--timing", c.timing, "include timings in the report");
}

void add_code_args(CLI::App* cmd, CodeArgs& a, bool with_family = true) {
    cmd->set_help_flag("--help", "print help"); // frees -h for the family parameter
    if (with_family)
        cmd->add_option("--family", a.family, "code family")
            ->check(CLI::IsMember({"ext", "punctured", "circle"}))
            ->capture_default_str();
    cmd->add_option("-p", a.p, "field characteristic (prime)")->required();
    cmd->add_option("-m", a.m, "extension degree")->required();
    cmd->add_option("--h", a.h, "extended-family parameter h (1 <= h < m)");
    cmd->add_option("--s", a.s, "circle-family parameter s (1 <= s <= m-1)");
    cmd->add_option("--modulus", a.modulus, "comma-separated modulus c0,...,cm (default: Conway)");
}

unsigned resolve_workers(const Common& c, bool flag_given) {
    if (flag_given) return std::max(1u, c.workers);
    if (const char* env = std::getenv("FWC_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return unsigned(v);
    }
    return 1;
}

BruteOptions brute_options(const Common& c, bool workers_given) {
    BruteOptions opts;
    opts.workers = resolve_workers(c, workers_given);
    if (c.exhaustive) opts.max_messages = uint64_t(1) << 38;
    return opts;
}

std::vector<uint32_t> parse_modulus(const std::string& s) {
    std::vector<uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParamError("empty modulus coefficient");
        out.push_back(uint32_t(std::stoul(tok)));
    }
    if (out.empty()) throw ParamError("empty modulus");
    return out;
}

FieldPtr make_base_field(const CodeArgs& a) {
    if (a.modulus.empty()) return FieldCtx::make(a.p, a.m);
    return FieldCtx::make(a.p, a.m, parse_modulus(a.modulus));
}

LinearCode build_code(const CodeArgs& a) {
    if (a.family == "circle") {
        if (a.s < 1) throw ParamError("circle family requires --s");
        return build_circle_code(TowerCtx::make(make_base_field(a)), uint32_t(a.s));
    }
    if (a.h < 1) throw ParamError("extended family requires --h");
    if (a.family == "punctured") return build_punctured_cyclic(make_base_field(a), uint32_t(a.h));
    return build_extended_code(make_base_field(a), uint32_t(a.h));
}

json report_skeleton(const std::string& command, const Common& c) {
    json j;
    j["command"] = command;
    j["options"] = json{{"format", c.format}, {"seed", c.seed}, {"exhaustive", c.exhaustive}};
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const json& j, const Common& c, const std::string& text, const std::string& csv = "") {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (c.format == "csv")
        std::cout << (csv.empty() ? text : csv);
    else
        std::cout << text;
}

std::string opt_verdict(const LrcProfile& pr) {
    std::ostringstream os;
    os << "d-optimal: " << (pr.d_optimal ? "yes" : "no")
       << (pr.d_almost ? " (almost d-optimal)" : "") << ", k-optimal: "
       << (pr.k_optimal ? "yes" : "no");
    return os.str();
}

std::string table1_row_summary(const SuiteResult& s) {
    // rows pass when both of their claims do
    std::map<std::string, bool> rows;
    for (const auto& c : s.claims) {
        auto pos = c.id.find(']');
        if (pos == std::string::npos) continue;
        std::string key = c.id.substr(0, pos + 1);
        auto it = rows.find(key);
        rows[key] = (it == rows.end() ? true : it->second) && c.match;
    }
    size_t pass = 0;
    for (const auto& [k, v] : rows) pass += v;
    std::ostringstream os;
    os << pass << "/" << rows.size() << " rows match";
    return os.str();
}

int run_suite(const std::string& name, const Common& common, bool workers_given) {
    BruteOptions opts = brute_options(common, workers_given);
    Timer timer;
    std::vector<SuiteResult> results;
    auto run_one = [&](const std::string& n) {
        if (n == "table1") results.push_back(suite_table1(opts));
        else if (n == "examples") results.push_back(suite_examples(opts, 0));
        else if (n == "designs") results.push_back(suite_designs(opts));
        else if (n == "lrc") results.push_back(suite_lrc(opts));
        else if (n == "conjecture") results.push_back(suite_conjecture(opts));
        else throw ParamError("unknown suite: " + n);
    };
    if (name == "all")
        for (const char* n : {"table1", "examples", "designs", "lrc", "conjecture"}) run_one(n);
    else
        run_one(name);

    json j = report_skeleton("reproduce", common);
    j["suites"] = json::array();
    std::ostringstream text, csvs;
    bool all_ok = true;
    for (const auto& s : results) {
        json js{{"suite", s.name}, {"ok", s.ok()}, {"claims", claims_to_json(s.claims)}};
        j["suites"].push_back(js);
        text << claims_to_text(s.claims);
        size_t pass = 0;
        for (const auto& c : s.claims) pass += c.match || !c.fatal;
        text << "suite " << s.name << ": " << (s.ok() ? "OK" : "FAILED") << " (" << pass << "/"
             << s.claims.size() << " checks";
        if (s.name == "table1") text << "; " << table1_row_summary(s);
        text << ")\n";
        csvs << claims_to_csv(s.claims);
        all_ok = all_ok && s.ok();
    }
    if (common.timing) j["timing_ms"] = timer.ms();
    emit(j, common, text.str(), csvs.str());
    return all_ok ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"few-weight code constructions, their designs, and LRC optimality checks"};
    app.require_subcommand(1);

    Common common;
    CodeArgs args;

    auto* cmd_construct = app.add_subcommand("construct", "build a code and print its parameters");
    add_code_args(cmd_construct, args);
    add_common(cmd_construct, common);
    bool with_matrix = false;
    cmd_construct->add_flag("--matrix", with_matrix, "include the generator matrix (text format)");

    auto* cmd_weights = app.add_subcommand("weights", "weight distribution by one or all methods");
    add_code_args(cmd_weights, args);
    add_common(cmd_weights, common);
    std::string method = "brute";
    cmd_weights->add_option("--method", method, "computation method")
        ->check(CLI::IsMember({"brute", "closed", "moments", "all"}))
        ->capture_default_str();

    auto* cmd_designs = app.add_subcommand("designs", "extract and verify support designs");
    add_code_args(cmd_designs, args);
    add_common(cmd_designs, common);
    int64_t weight_opt = -1;
    bool dual_opt = false;
    int64_t t_opt = -1;
    bool emit_blocks = false;
    cmd_designs->add_option("--weight", weight_opt, "primal support weight to extract");
    cmd_designs->add_flag("--dual", dual_opt, "use the minimum-weight dual supports");
    cmd_designs->add_option("--t", t_opt, "design strength to verify (default: 3 dual, 2 primal)");
    cmd_designs->add_flag("--blocks", emit_blocks, "include the block list in the output");

    auto* cmd_lrc = app.add_subcommand("lrc", "locality and optimality profile");
    add_code_args(cmd_lrc, args);
    add_common(cmd_lrc, common);

    auto* cmd_repro = app.add_subcommand("reproduce", "run a bundled reference suite");
    std::string suite = "all";
    cmd_repro->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"table1", "examples", "designs", "lrc", "conjecture", "all"}))
        ->capture_default_str();
    add_common(cmd_repro, common);

    auto* cmd_probe = app.add_subcommand("probe-conjecture",
                                         "do minimum-weight supports form a 3-design? (evidence only)");
    add_code_args(cmd_probe, args, /*with_family=*/false);
    add_common(cmd_probe, common);

    auto* cmd_root = app.add_subcommand("rootcount", "replay the bundled root-count cases");
    std::string case_id = "all";
    std::string root_modulus;
    cmd_root->add_option("--case", case_id, "case id (g1..g5) or all")->capture_default_str();
    cmd_root->add_option("--modulus", root_modulus,
                         "custom modulus for the case's field (membership-only assertion)");
    add_common(cmd_root, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (cmd_construct->parsed()) {
            Timer timer;
            LinearCode code = build_code(args);
            json j = report_skeleton("construct", common);
            j["field"] = field_to_json(code.field->spec());
            j["code"] = code_to_json(code, true);
            std::ostringstream text;
            std::string dstr = "?";
            try {
                auto cert =
                    certify_min_distance(code, brute_options(common, cmd_construct->count("--workers") > 0));
                j["code"]["d"] = cert.d;
                j["code"]["d_method"] = cert.by_enumeration ? "enumeration" : "witness";
                dstr = std::to_string(cert.d);
            } catch (const BoundError&) {
                try {
                    auto cf = closed_form_for(code);
                    uint64_t d = weight_distribution_closed(
                                     cf, code.p, code.m,
                                     code.family == Family::UnitCircle ? code.s : code.h)
                                     .min_distance();
                    j["code"]["d"] = d;
                    j["code"]["d_method"] = "closed form";
                    dstr = std::to_string(d);
                } catch (const ParamError&) {
                    j["code"]["d"] = nullptr;
                    j["code"]["d_method"] = "not computed (enumeration bound)";
                }
            }
            text << family_name(code.family) << " code over GF(" << code.field->q() << "): ["
                 << code.n << ", " << code.k << ", " << dstr << "]\n"
                 << "field: p=" << code.p << " m=" << code.field->m() << " modulus=";
            for (size_t i = 0; i < code.field->spec().modulus.size(); ++i)
                text << (i ? "," : "") << code.field->spec().modulus[i];
            text << (code.field->conway_default() ? " (Conway)" : " (custom)") << "\n";
            if (with_matrix) {
                for (uint32_t r = 0; r < code.k; ++r) {
                    for (uint32_t c = 0; c < code.n; ++c) text << (c ? " " : "") << code.gen_at(r, c);
                    text << "\n";
                }
            }
            if (common.timing) j["timing_ms"] = timer.ms();
            std::ostringstream csv;
            csv << "n,k\n" << code.n << "," << code.k << "\n";
            emit(j, common, text.str(), csv.str());
            return kOk;
        }

        if (cmd_weights->parsed()) {
            Timer timer;
            LinearCode code = build_code(args);
            BruteOptions opts = brute_options(common, cmd_weights->count("--workers") > 0);
            std::vector<WeightDistribution> dists;
            if (method == "brute" || method == "all") dists.push_back(weight_distribution_brute(code, opts));
            if (method == "closed" || method == "all") {
                try {
                    auto cf = closed_form_for(code);
                    dists.push_back(weight_distribution_closed(
                        cf, code.p, code.m, code.family == Family::UnitCircle ? code.s : code.h));
                } catch (const ParamError&) {
                    if (method == "closed") throw;
                }
            }
            if (method == "moments" || method == "all") {
                try {
                    dists.push_back(weight_distribution_moments(code));
                } catch (const ParamError&) {
                    if (method == "moments") throw;
                }
            }
            if (dists.empty()) throw ParamError("no applicable method");
            bool agree = true;
            for (size_t i = 1; i < dists.size(); ++i) agree = agree && dists[0].same_counts(dists[i]);
            json j = report_skeleton("weights", common);
            j["field"] = field_to_json(code.field->spec());
            j["code"] = code_to_json(code, false);
            j["weight_distributions"] = json::array();
            for (const auto& wd : dists) j["weight_distributions"].push_back(distribution_to_json(wd));
            j["methods_agree"] = agree;
            std::ostringstream text;
            for (const auto& wd : dists) {
                text << (wd.source == WeightDistribution::Source::BruteForce    ? "brute-force"
                         : wd.source == WeightDistribution::Source::ClosedForm ? "closed-form"
                                                                               : "moment-solve")
                     << ":";
                for (const auto& [w, cnt] : wd.counts)
                    if (cnt != 0) text << " A_" << w << "=" << big_to_string(cnt);
                text << "\n";
            }
            text << "d = " << dists[0].min_distance() << "\n";
            if (method == "all") text << (agree ? "methods agree\n" : "METHOD MISMATCH\n");
            if (common.timing) j["timing_ms"] = timer.ms();
            emit(j, common, text.str(), distribution_to_csv(dists[0]));
            return agree ? kOk : kMismatch;
        }

        if (cmd_designs->parsed()) {
            Timer timer;
            LinearCode code = build_code(args);
            BruteOptions opts = brute_options(common, cmd_designs->count("--workers") > 0);
            Design design;
            std::string source;
            if (dual_opt) {
                auto rep = dual_low_weight_search(code, 4);
                if (rep.d_perp == 0) throw BoundError("no dual word of weight <= 4");
                design.n_points = code.n;
                design.kappa = rep.d_perp;
                design.blocks = rep.supports.at(rep.d_perp);
                source = "minimum-weight dual supports (weight " + std::to_string(rep.d_perp) + ")";
            } else {
                if (weight_opt < 1) throw ParamError("designs needs --weight W or --dual");
                auto sups = supports_of_weight(code, uint64_t(weight_opt), opts);
                if (sups.empty()) throw ParamError("no codewords of that weight");
                design.n_points = code.n;
                design.kappa = uint32_t(weight_opt);
                design.blocks = std::move(sups);
                source = "weight-" + std::to_string(weight_opt) + " supports";
            }
            uint32_t t = t_opt >= 1 ? uint32_t(t_opt) : (dual_opt ? 3 : 2);
            design.t = t;
            auto chk = verify_t_design(design.blocks, design.n_points, t);
            design.verified = chk.ok;
            design.lambda = chk.lambda;
            json j = report_skeleton("designs", common);
            j["field"] = field_to_json(code.field->spec());
            j["code"] = code_to_json(code, false);
            j["design"] = design_to_json(design, emit_blocks ? &code.column_labels : nullptr);
            if (!emit_blocks) j["design"].erase("blocks");
            j["design"]["source"] = source;
            std::ostringstream text;
            if (chk.ok) {
                text << t << "-(" << design.n_points << "," << design.kappa << "," << design.lambda
                     << ") verified from " << design.block_count() << " blocks (" << source << ")\n";
            } else {
                text << "NOT a " << t << "-design (deviating " << t << "-subset:";
                for (uint32_t x : chk.witness) text << " " << x;
                text << ")\n";
            }
            if (emit_blocks) text << design_to_text(design);
            if (common.timing) j["timing_ms"] = timer.ms();
            emit(j, common, text.str());
            return chk.ok ? kOk : kMismatch;
        }

        if (cmd_lrc->parsed()) {
            Timer timer;
            LinearCode code = build_code(args);
            BruteOptions opts = brute_options(common, cmd_lrc->count("--workers") > 0);
            LrcPair pair = lrc_profile(code, opts);
            json j = report_skeleton("lrc", common);
            j["field"] = field_to_json(code.field->spec());
            j["code"] = code_to_json(code, false);
            j["lrc"] = lrc_pair_to_json(pair);
            std::ostringstream text;
            text << "code (" << pair.primal.n << "," << pair.primal.k << "," << pair.primal.d
                 << "; r=" << pair.primal.r << "): " << opt_verdict(pair.primal) << "\n"
                 << "dual (" << pair.dual.n << "," << pair.dual.k << "," << pair.dual.d
                 << "; r=" << pair.dual.r << "): " << opt_verdict(pair.dual) << "\n";
            bool ok = pair.primal.one_design_ok && pair.dual.one_design_ok;
            for (const auto& c : pair.claims) {
                text << (c.match ? "[PASS] " : (c.fatal ? "[FAIL] " : "[NOTE] ")) << c.id << ": "
                     << c.claim << " -> " << c.computed << "\n";
                ok = ok && (c.match || !c.fatal);
            }
            if (common.timing) j["timing_ms"] = timer.ms();
            emit(j, common, text.str());
            return ok ? kOk : kMismatch;
        }

        if (cmd_repro->parsed()) return run_suite(suite, common, cmd_repro->count("--workers") > 0);

        if (cmd_probe->parsed()) {
            Timer timer;
            if (args.p != 2) throw ParamError("the probe targets the binary extended family");
            if (args.h < 1) throw ParamError("probe needs --h");
            BruteOptions opts = brute_options(common, cmd_probe->count("--workers") > 0);
            auto probe = conjecture13_probe(args.m, uint32_t(args.h), opts);
            json j = report_skeleton("probe-conjecture", common);
            j["probe"] = json{{"q", probe.q},
                              {"m", probe.m},
                              {"h", probe.h},
                              {"min_weight", probe.min_weight},
                              {"support_count", probe.support_count},
                              {"holds_3design", probe.holds_3design},
                              {"lambda", probe.lambda},
                              {"witness", probe.witness}};
            std::ostringstream text;
            text << "minimum weight " << probe.min_weight << ", " << probe.support_count
                 << " supports: ";
            if (probe.holds_3design)
                text << "3-design with lambda = " << probe.lambda << " (evidence, not asserted)\n";
            else {
                text << "NOT a 3-design; deviating triple:";
                for (uint32_t x : probe.witness) text << " " << x;
                text << "\n";
            }
            if (common.timing) j["timing_ms"] = timer.ms();
            emit(j, common, text.str());
            return kOk;
        }

        if (cmd_root->parsed()) {
            json j = report_skeleton("rootcount", common);
            SuiteResult s;
            if (case_id == "all") {
                if (!root_modulus.empty()) throw ParamError("--modulus needs a single --case");
                s = suite_rootcount();
            } else {
                const RootCountCase* found = nullptr;
                for (const auto& c : rootcount_cases())
                    if (c.id == case_id) found = &c;
                if (!found) throw ParamError("unknown case (g1..g5)");
                FieldPtr F = root_modulus.empty()
                                 ? FieldCtx::make(found->p, found->m)
                                 : FieldCtx::make(found->p, found->m, parse_modulus(root_modulus));
                std::vector<uint32_t> coeffs;
                for (uint64_t e : found->exponents) coeffs.push_back(F->exp(e));
                AffinePoly g(F, found->h, 0, coeffs);
                uint64_t n = affine_root_count(g);
                bool member = false;
                uint64_t pw = 1;
                for (uint32_t i = 0; i <= found->h; ++i, pw *= found->p)
                    if (n == pw) member = true;
                s.name = "rootcount";
                if (F->conway_default() && n == found->expected) {
                    s.claims.push_back(Claim{"rootcount[" + found->id + "]",
                                             "N = " + std::to_string(found->expected),
                                             "N = " + std::to_string(n), true, true});
                } else {
                    s.claims.push_back(Claim{"rootcount[" + found->id + "]",
                                             "membership only (custom or non-reproducing representation)",
                                             "N = " + std::to_string(n), member, true});
                }
            }
            j["claims"] = claims_to_json(s.claims);
            emit(j, common, claims_to_text(s.claims), claims_to_csv(s.claims));
            return s.ok() ? kOk : kMismatch;
        }
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BoundError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kBound;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsage;
}
