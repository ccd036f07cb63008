// critnum: exact critical numbers of Rankin-Selberg archimedean L-factors.
//
// Subcommands: crit, trace, fuzz, convert, branch. Input documents come from
// a file path argument or standard input; the single output document goes to
// standard output. Exit codes: 0 success/agreement, 1 invalid input,
// 2 engine mismatch, 64 usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "critnum/branching.hpp"
#include "critnum/crosscheck.hpp"
#include "critnum/embedding.hpp"
#include "critnum/inequality.hpp"
#include "critnum/json_io.hpp"
#include "critnum/weil.hpp"

namespace {

using critnum::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void emit(const Json& doc) {
    std::cout << doc.dump(2) << "\n";
}

int emit_error(const std::string& message, const std::vector<critnum::Violation>& violations) {
    Json err;
    if (violations.empty()) {
        err["error"] = Json{{"rule", "InvalidInput"}, {"field", ""}, {"index", -1},
                            {"message", message}};
    } else {
        err["error"] = critnum::violation_to_json(violations.front());
        err["error"]["message"] = message;
        Json all = Json::array();
        for (const auto& v : violations) all.push_back(critnum::violation_to_json(v));
        err["violations"] = all;
    }
    emit(err);
    return kExitInvalid;
}

Json parse_json_text(const std::string& text) {
    return Json::parse(text);  // nlohmann exceptions handled by the caller
}

int run_crit(const std::string& input, const std::string& engine) {
    const auto [pi, sigma] = critnum::parse_pair_document(parse_json_text(read_input(input)));
    Json out;
    int code = kExitOk;
    if (engine == "all") {
        const auto gamma = critnum::crit_gamma(pi, sigma);
        const auto inequality = critnum::crit_inequality(pi, sigma);
        const auto embedding = critnum::crit_embedding(pi, sigma);
        const bool agreement = gamma == inequality && inequality == embedding;
        out["crit"] = to_json(gamma);
        out["engines"] = Json{{"gamma", to_json(gamma)},
                              {"inequality", to_json(inequality)},
                              {"embedding", to_json(embedding)}};
        out["agreement"] = agreement;
        out["t0_witness"] = to_json(critnum::t0_witness(pi, sigma));
        code = agreement ? kExitOk : kExitMismatch;
    } else {
        critnum::CritSet s;
        if (engine == "gamma")
            s = critnum::crit_gamma(pi, sigma);
        else if (engine == "inequality")
            s = critnum::crit_inequality(pi, sigma);
        else
            s = critnum::crit_embedding(pi, sigma);
        out["crit"] = to_json(s);
        out["engine"] = engine;
        if (engine == "inequality") out["t0_witness"] = to_json(critnum::t0_witness(pi, sigma));
    }
    emit(out);
    return code;
}

int run_trace(const std::string& input) {
    const auto [pi, sigma] = critnum::parse_pair_document(parse_json_text(read_input(input)));
    const auto [crit, trace] = critnum::crit_embedding_traced(pi, sigma);
    (void)crit;
    Json out = to_json(trace);
    out["t0_witness"] = to_json(critnum::t0_witness(pi, sigma));
    emit(out);
    return kExitOk;
}

int run_fuzz(const critnum::GenConfig& cfg) {
    const auto summary = critnum::fuzz_campaign(cfg);
    emit(to_json(summary));
    return summary.mismatches == 0 && summary.property_violations == 0 ? kExitOk : kExitMismatch;
}

int run_convert(const std::vector<critnum::Entry>& mu, bool have_w, critnum::Entry w,
                const std::vector<critnum::Entry>& l, int delta) {
    if (!mu.empty()) {
        auto vs = critnum::PureWeight::violations(mu, "mu");
        if (delta != 0 && delta != 1)
            vs.push_back({critnum::Rule::BadDelta, "delta", -1});
        if (!vs.empty()) throw critnum::ValidationError(std::move(vs));
        const critnum::PureWeight weight{mu};
        const auto [ww, ll] = critnum::weight_to_langlands(weight);
        emit(Json{{"n", weight.rank()}, {"w", ww}, {"l", ll}, {"delta", delta}});
        return kExitOk;
    }
    if (!have_w || l.empty())
        throw critnum::ValidationError({{critnum::Rule::BadRank, "convert", -1}});
    auto vs = critnum::langlands_violations(static_cast<int>(l.size()), w, l, delta);
    if (!vs.empty()) throw critnum::ValidationError(std::move(vs));
    const auto weight = critnum::langlands_to_weight(w, l);
    emit(Json{{"mu", weight.entries()}, {"wt", weight.wt()}, {"delta", delta}});
    return kExitOk;
}

int run_branch(const std::vector<critnum::Entry>& alpha, const std::vector<critnum::Entry>& beta,
               bool with_tate, std::uint64_t cap) {
    if (alpha.empty()) throw critnum::ValidationError({{critnum::Rule::BadRank, "alpha", -1}});
    Json out;
    if (!beta.empty()) {
        if (alpha.size() != beta.size() + 1)
            throw critnum::ValidationError({{critnum::Rule::RankMismatch, "beta", -1}});
        const auto iv = critnum::emb_interval(beta, alpha);
        out["emb"] = to_json(iv);
        if (with_tate) {
            const auto dec =
                critnum::tate_decomposition(beta, critnum::dual_entries(alpha), std::nullopt, cap);
            Json support = Json::array();
            for (const auto& [s, m] : dec.multiplicities) {
                (void)m;
                support.push_back(s);
            }
            out["tate_support"] = support;
        }
    } else {
        const auto branches = critnum::branch_enumerate(alpha, cap);
        out["alpha"] = alpha;
        out["count"] = branches.size();
        Json arr = Json::array();
        for (const auto& b : branches) arr.push_back(b);
        out["branches"] = arr;
    }
    emit(out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact critical numbers of Rankin-Selberg archimedean L-factors"};
    app.require_subcommand(1);

    std::string input;
    std::string engine = "all";
    auto* crit_cmd = app.add_subcommand("crit", "critical numbers of a pair");
    crit_cmd->add_option("input", input, "JSON document path, or - for stdin");
    crit_cmd->add_option("--engine", engine, "gamma | inequality | embedding | all")
        ->check(CLI::IsMember({"gamma", "inequality", "embedding", "all"}));

    auto* trace_cmd = app.add_subcommand("trace", "full pipeline trace of a pair");
    trace_cmd->add_option("input", input, "JSON document path, or - for stdin");

    critnum::GenConfig cfg;
    if (const char* env_seed = std::getenv("CRITNUM_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(env_seed, &end, 10);
        if (end && *end == '\0') cfg.seed = v;
    }
    int n_max = 4, m_max = 4;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "three-engine differential campaign");
    fuzz_cmd->add_option("--trials", cfg.trials, "number of generated pairs");
    fuzz_cmd->add_option("--seed", cfg.seed, "campaign seed (default from CRITNUM_SEED if set)");
    fuzz_cmd->add_option("--n-max", n_max, "largest rank for pi");
    fuzz_cmd->add_option("--m-max", m_max, "largest rank for sigma");
    fuzz_cmd->add_option("--l-bound", cfg.l_bound, "bound on |l_1|");

    std::vector<critnum::Entry> mu, l_opt;
    critnum::Entry w_opt = 0;
    int delta = 0;
    auto* convert_cmd = app.add_subcommand("convert", "weight <-> parameter");
    convert_cmd->add_option("--mu", mu, "pure weight entries")->delimiter(',');
    auto* w_flag = convert_cmd->add_option("--w", w_opt, "parameter w");
    convert_cmd->add_option("--l", l_opt, "parameter l entries")->delimiter(',');
    convert_cmd->add_option("--delta", delta, "sign twist bit");

    std::vector<critnum::Entry> alpha, beta;
    bool with_tate = false;
    std::uint64_t cap = critnum::kDefaultBranchCap;
    auto* branch_cmd = app.add_subcommand("branch", "interlacing / embedding toolkit");
    branch_cmd->add_option("--alpha", alpha, "upper weight entries")->delimiter(',')->required();
    branch_cmd->add_option("--beta", beta, "lower weight entries (for the Emb interval)")
        ->delimiter(',');
    branch_cmd->add_flag("--tate", with_tate, "include the det-power support");
    branch_cmd->add_option("--cap", cap, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (crit_cmd->parsed()) return run_crit(input, engine);
        if (trace_cmd->parsed()) return run_trace(input);
        if (fuzz_cmd->parsed()) {
            cfg.n_range = {1, n_max};
            cfg.m_range = {1, m_max};
            return run_fuzz(cfg);
        }
        if (convert_cmd->parsed())
            return run_convert(mu, w_flag->count() > 0, w_opt, l_opt, delta);
        if (branch_cmd->parsed()) return run_branch(alpha, beta, with_tate, cap);
    } catch (const critnum::ValidationError& e) {
        return emit_error(e.what(), e.violations());
    } catch (const critnum::RankPairExcluded& e) {
        Json err;
        err["error"] = Json{{"rule", "RankPairExcluded"}, {"field", "pair"}, {"index", -1},
                            {"message", e.what()}};
        emit(err);
        return kExitInvalid;
    } catch (const Json::exception& e) {
        return emit_error(std::string("invalid JSON: ") + e.what(), {});
    } catch (const std::exception& e) {
        return emit_error(e.what(), {});
    }
    return kExitUsage;
}
