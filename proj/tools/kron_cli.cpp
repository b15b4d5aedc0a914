#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kron/coeffs.hpp"
#include "kron/stable.hpp"
#include "kron/symchar.hpp"
#include "kron/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliConfig {
    fs::path cache_dir;
    std::string format = "text";
    int max_table_m = 30;
    int brute_force_max = 9;
    int workers = 1;
};

fs::path default_cache_dir() {
    if (const char* env = std::getenv("KRON_CACHE_DIR"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "kron";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "kron";
    return fs::path(".kron-cache");
}

kron::Partition parse_partition_arg(const std::string& text, const std::string& name) {
    try {
        return kron::Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(name, e.what());
    }
}

void print_value(const CliConfig& config, const std::string& op, const json& args, const kron::Int& value) {
    if (config.format == "json") {
        json j{{"op", op}, {"args", args}, {"result", value.get_str()}};
        std::cout << j.dump() << '\n';
    } else if (config.format == "csv") {
        std::cout << op << "," << value.get_str() << '\n';
    } else {
        std::cout << value.get_str() << '\n';
    }
}

void apply_config(const CliConfig& config) {
    kron::set_table_cache_dir(config.cache_dir);
    kron::set_table_ceiling(config.max_table_m);
    kron::set_brute_force_ceiling(config.brute_force_max);
}

int run_table(const CliConfig& config, int max_m, bool reference_diff) {
    auto rows = kron::stable_table(max_m);
    if (config.format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            json values = json::object();
            for (const auto& [rho, value] : row.values) values[rho.to_string()] = value.get_str();
            json jrow{{"m", row.m},
                      {"values", std::move(values)},
                      {"derangements", row.derangement_total.get_str()},
                      {"consistency_ok", row.consistency_ok}};
            if (reference_diff) {
                json diff = json::object();
                for (const auto& [rho, value] : row.values) {
                    if (auto printed = kron::reference_stable_value(rho); printed && *printed != value) {
                        diff[rho.to_string()] = printed->get_str();
                    }
                }
                jrow["reference_disagreements"] = std::move(diff);
            }
            out.push_back(std::move(jrow));
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (config.format == "csv") {
        std::cout << (reference_diff ? "m,rho,value,reference,flag\n" : "m,rho,value\n");
        for (const auto& row : rows) {
            for (const auto& [rho, value] : row.values) {
                std::cout << row.m << ",\"" << rho.to_string() << "\"," << value.get_str();
                if (reference_diff) {
                    auto printed = kron::reference_stable_value(rho);
                    std::cout << "," << (printed ? printed->get_str() : "");
                    std::cout << "," << ((printed && *printed != value) ? "DISAGREES" : "");
                }
                std::cout << '\n';
            }
        }
        return 0;
    }
    for (const auto& row : rows) {
        std::cout << "m=" << row.m << "  D_" << row.m << "=" << row.derangement_total.get_str()
                  << "  (dimension accounting " << (row.consistency_ok ? "ok" : "BROKEN") << ")\n";
        for (const auto& [rho, value] : row.values) {
            std::cout << "  k_" << std::left << std::setw(14) << rho.display() << " = " << value.get_str();
            if (reference_diff) {
                if (auto printed = kron::reference_stable_value(rho)) {
                    if (*printed != value) {
                        std::cout << "   [printed table says " << printed->get_str() << " -- disagrees]";
                    } else {
                        std::cout << "   [matches printed table]";
                    }
                }
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int run_verify(const CliConfig& config, const std::string& suite, const std::string& theta_text,
               int d, int n, int max_m, int max_dn, unsigned seed) {
    std::vector<kron::VerificationReport> reports;
    if (suite.empty()) {
        reports = kron::run_suite(max_m, max_dn, seed);
    } else {
        kron::Partition theta = parse_partition_arg(theta_text, "--theta");
        if (suite == "e3") {
            reports.push_back(kron::check_e3(theta, d, n));
        } else if (suite == "e4") {
            reports.push_back(kron::check_e4(theta, d, n));
        } else if (suite == "e5") {
            reports.push_back(kron::check_e5(theta, d, n));
        } else if (suite == "stabilization") {
            reports.push_back(kron::check_stabilization(theta, n, d));
        } else {
            throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
        }
    }
    std::size_t failures = 0;
    for (const auto& report : reports) {
        if (!report.passed) ++failures;
        if (config.format == "json") {
            std::cout << report.to_json().dump() << '\n';
        } else {
            std::cout << report.summary_line() << '\n';
        }
    }
    if (config.format != "json") {
        std::cout << reports.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_cache(const CliConfig& config, const std::string& action) {
    fs::path dir = config.cache_dir;
    if (action == "status") {
        if (!fs::exists(dir)) {
            std::cout << "cache directory " << dir.string() << " does not exist\n";
            return 0;
        }
        std::size_t files = 0;
        std::uintmax_t bytes = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.path().filename().string().starts_with("chartab_m")) {
                std::cout << entry.path().filename().string() << "  " << entry.file_size() << " bytes\n";
                ++files;
                bytes += entry.file_size();
            }
        }
        std::cout << files << " cached tables, " << bytes << " bytes, dir " << dir.string() << '\n';
        return 0;
    }
    if (action == "clear") {
        std::size_t removed = 0;
        if (fs::exists(dir)) {
            for (const auto& entry : fs::directory_iterator(dir)) {
                if (entry.path().filename().string().starts_with("chartab_m")) {
                    fs::remove(entry.path());
                    ++removed;
                }
            }
        }
        std::cout << "removed " << removed << " cached tables\n";
        return 0;
    }
    throw CLI::ValidationError("cache", "unknown action '" + action + "' (expected status or clear)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kronecker / Littlewood-Richardson coefficients and stable rectangular limits"};
    app.require_subcommand(1);

    CliConfig config;
    config.cache_dir = default_cache_dir();
    app.add_option("--cache-dir", config.cache_dir, "Character table cache directory (env KRON_CACHE_DIR)");
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-table-m", config.max_table_m, "Character table ceiling")->check(CLI::PositiveNumber);
    app.add_option("--brute-force-max", config.brute_force_max, "Brute-force ceiling for fpf computations")->check(CLI::PositiveNumber);
    app.add_option("--workers", config.workers, "Worker count for internal parallelism")->check(CLI::PositiveNumber);

    std::string lambda_text, mu_text, nu_text, alpha_text, beta_text, rho_text, theta_text, suite;
    int d = 1, n = 1, max_m = 5, max_dn = 12, table_max_m = 6, derangement_m = 0;
    int stable_n = -1;
    unsigned seed = 42;
    bool reference_diff = false;
    std::string cache_action;

    auto* kron_cmd = app.add_subcommand("kron", "Kronecker coefficient k_{lambda,mu,nu}");
    kron_cmd->add_option("--lambda", lambda_text, "first partition, e.g. 2,1")->required();
    kron_cmd->add_option("--mu", mu_text, "second partition")->required();
    kron_cmd->add_option("--nu", nu_text, "third partition")->required();

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c_lambda^{alpha,beta}");
    lr_cmd->add_option("--lambda", lambda_text)->required();
    lr_cmd->add_option("--alpha", alpha_text)->required();
    lr_cmd->add_option("--beta", beta_text)->required();

    auto* rect_cmd = app.add_subcommand("rect", "Rectangular Kronecker coefficient k_rho(d,n)");
    rect_cmd->add_option("--rho", rho_text)->required();
    rect_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    rect_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* stable_cmd = app.add_subcommand("stable", "Stable limit of k_rho(d,n)");
    stable_cmd->add_option("--rho", rho_text)->required();
    auto* stable_n_opt = stable_cmd->add_option("--n", stable_n, "Fix n instead of taking the two-sided limit")->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("table", "Stable limit table for all rho with |rho| <= max-m");
    table_cmd->add_option("--max-m", table_max_m)->check(CLI::NonNegativeNumber);
    table_cmd->add_flag("--reference-diff", reference_diff, "Show the printed table values and flag disagreements");

    auto* verify_cmd = app.add_subcommand("verify", "Run the identity verification suite");
    verify_cmd->add_option("--max-m", max_m)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-dn", max_dn)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--suite", suite, "Run a single check: e3, e4, e5, stabilization");
    verify_cmd->add_option("--theta", theta_text, "Partition argument for a single check");
    verify_cmd->add_option("--d", d);
    verify_cmd->add_option("--n", n);

    auto* derangements_cmd = app.add_subcommand("derangements", "Derangement count D_m");
    derangements_cmd->add_option("--m", derangement_m)->required()->check(CLI::NonNegativeNumber);

    auto* cache_cmd = app.add_subcommand("cache", "Cache administration");
    cache_cmd->add_option("action", cache_action, "status or clear")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config(config);
        if (kron_cmd->parsed()) {
            kron::Partition lambda = parse_partition_arg(lambda_text, "--lambda");
            kron::Partition mu = parse_partition_arg(mu_text, "--mu");
            kron::Partition nu = parse_partition_arg(nu_text, "--nu");
            if (lambda.size() != mu.size() || lambda.size() != nu.size()) {
                std::cerr << "error: size mismatch: |lambda|=" << lambda.size() << ", |mu|=" << mu.size() << ", |nu|=" << nu.size() << '\n';
                return 2;
            }
            print_value(config, "kron", {{"lambda", lambda_text}, {"mu", mu_text}, {"nu", nu_text}}, kron::kronecker(lambda, mu, nu));
            return 0;
        }
        if (lr_cmd->parsed()) {
            kron::Partition lambda = parse_partition_arg(lambda_text, "--lambda");
            kron::Partition alpha = parse_partition_arg(alpha_text, "--alpha");
            kron::Partition beta = parse_partition_arg(beta_text, "--beta");
            print_value(config, "lr", {{"lambda", lambda_text}, {"alpha", alpha_text}, {"beta", beta_text}}, kron::lr(lambda, alpha, beta));
            return 0;
        }
        if (rect_cmd->parsed()) {
            kron::Partition rho = parse_partition_arg(rho_text, "--rho");
            print_value(config, "rect", {{"rho", rho_text}, {"d", d}, {"n", n}}, kron::rectangular_kron(rho, d, n));
            return 0;
        }
        if (stable_cmd->parsed()) {
            kron::Partition rho = parse_partition_arg(rho_text, "--rho");
            kron::Int value = stable_n_opt->count() ? kron::sl_invariant_dim(rho, stable_n) : kron::limit_in_dn(rho);
            print_value(config, "stable", {{"rho", rho_text}, {"n", stable_n_opt->count() ? json(stable_n) : json(nullptr)}}, value);
            return 0;
        }
        if (table_cmd->parsed()) return run_table(config, table_max_m, reference_diff);
        if (verify_cmd->parsed()) return run_verify(config, suite, theta_text, d, n, max_m, max_dn, seed);
        if (derangements_cmd->parsed()) {
            print_value(config, "derangements", {{"m", derangement_m}}, kron::derangement_count(derangement_m));
            return 0;
        }
        if (cache_cmd->parsed()) return run_cache(config, cache_action);
    } catch (const kron::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    return 0;
}
