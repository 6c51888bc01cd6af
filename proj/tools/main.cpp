// Command-line front end: exact Frobenius/splitting data, fiber-count
// verification and abstract property runs for covers of F_q(x).
//
// Exit codes: 0 all checks pass; 1 a mathematical assertion failed;
// 2 configuration or input error (reason printed as JSON on stderr).

#include <CLI11.hpp>
#include <fstream>

#include "ffc/run.hpp"

namespace {

std::string load_cover_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream f(arg.substr(1));
        if (!f) throw ffc::error(ffc::errc::bad_descriptor, "cannot read " + arg.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;
}

void add_field_flags(CLI::App* cmd, ffc::RunConfig& cfg) {
    cmd->add_option("--q", cfg.q, "base field cardinality (prime power)");
    cmd->add_option("--p", cfg.p, "base field characteristic");
    cmd->add_option("--k", cfg.k, "base field degree over F_p");
    cmd->add_option("--seed", cfg.seed, "seed for modulus search and factorization");
    cmd->add_option("--format", cfg.format, "output format: json|csv|pretty");
    cmd->add_option("--out", cfg.out, "write output to a file instead of stdout");
    cmd->add_option("--workers", cfg.workers, "worker threads over places");
    cmd->add_option("--max-enum", cfg.max_enum, "enumeration resource limit");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chebotarev-style verification for covers of F_q(x)"};
    app.require_subcommand(1);
    ffc::RunConfig cfg;

    auto* places = app.add_subcommand("places", "list places with Frobenius data");
    add_field_flags(places, cfg);
    places->add_option("--cover", cfg.cover, "cover descriptor (inline grammar, JSON, or @file)")
        ->required();
    places->add_option("--deg", cfg.deg, "max place degree");

    auto* verify = app.add_subcommand("verify", "verify fiber counts and the Hasse-Weil bound");
    add_field_flags(verify, cfg);
    verify->add_option("--cover", cfg.cover, "cover descriptor")->required();
    verify->add_option("--gamma", cfg.gamma, "exponent vector (comma separated) or 'all'");
    verify->add_option("--deg", cfg.deg, "tail degree for the measure report");
    verify->add_flag("--oracle", cfg.oracle, "recount fibers with the brute-force oracle");

    auto* abstract = app.add_subcommand("abstract", "random abstract models of a finite group");
    add_field_flags(abstract, cfg);
    abstract->add_option("--group", cfg.group, "Z<n>, Z2xZ2, S3, D4, Q8, A4 or S4")->required();
    abstract->add_option("--trials", cfg.trials, "number of random models");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.cover = load_cover_arg(cfg.cover);
        if (places->parsed()) return ffc::cmd_places(cfg);
        if (verify->parsed()) return ffc::cmd_verify(cfg);
        return ffc::cmd_abstract(cfg);
    } catch (const ffc::error& e) {
        nlohmann::json err{{"error",
                            {{"code", ffc::errc_name(e.code())}, {"what", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return ffc::exit_code_for(e.code());
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", {{"code", "Unhandled"}, {"what", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
}
