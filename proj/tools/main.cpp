#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace atcert;
    cli::RunConfig cfg;
    std::string mode, kind = "planar";
    std::uint64_t seed = 0;
    std::vector<int> anchor;

    CLI::App app{"Alon-Tarsi certificates for K5-minor-free graphs"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Print degeneracy, structure and the exact AT number");
    analyze->add_option("graph", cfg.input_path, "Graph file")->required();

    auto* certify = app.add_subcommand("certify", "Construct and verify a certificate");
    certify->add_option("graph", cfg.input_path, "Graph file")->required();
    certify->add_option("--mode", mode, "at5 | at4-matching | at3-forest")->check(
        CLI::IsMember({"at5", "at4-matching", "at3-forest"}));
    certify->add_flag("--signed", cfg.is_signed, "Use a random signature when the file carries none");
    certify->add_option("--seed", seed, "Seed for the random signature");
    certify->add_option("--anchor", anchor, "Ordered anchor edge or triangle")->expected(2, 3);

    auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
    verify->add_option("graph", cfg.input_path, "Graph file")->required();
    verify->add_option("certificate", cfg.certificate_path, "Certificate JSON")->required();

    auto* decompose = app.add_subcommand("decompose", "Write the clique-sum decomposition");
    decompose->add_option("graph", cfg.input_path, "Graph file")->required();

    auto* gen = app.add_subcommand("gen", "Write a reproducible corpus graph");
    gen->add_option("--kind", kind, "planar | cliquesum | wagner | k5")->check(
        CLI::IsMember({"planar", "cliquesum", "wagner", "k5"}));
    gen->add_option("--n", cfg.n, "Vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_flag("--signed", cfg.is_signed, "Attach random edge signs");

    for (auto* sub : {analyze, certify, verify, decompose, gen})
        sub->add_option("-o,--output", cfg.output_path, "Output path, - for standard output");
    for (auto* sub : {certify, verify})
        sub->add_option("--exact-limit", cfg.exact_limit, "Largest edge count for exact parity counting")
            ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_parse;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!mode.empty()) cfg.mode = parse_mode(mode);
    cfg.kind = parse_kind(kind);
    if (certify->count("--seed") || gen->count("--seed")) cfg.seed = seed;
    if (!anchor.empty()) cfg.anchor = anchor;
    return cli::run(cfg, std::cout, std::cerr);
}
