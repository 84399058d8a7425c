// charvar: command-line front end.

#include "charvar/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    using namespace charvar;
    RunConfig cfg;
    CLI::App app{"Characteristic varieties of complex hyperplane arrangements"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    std::string format = "text";
    std::size_t budget = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized oracles");
    app.add_option("--threads", cfg.threads, "worker threads (default CHARVAR_THREADS or hardware)");
    app.add_option("--budget", budget, "node / candidate / character budget");
    app.add_option("--prime", cfg.prime, "prime for the finite-field oracle (p = 1 mod N)");
    app.add_option("--trials", cfg.trials, "oracle evaluation trials");
    app.add_option("--direction", cfg.direction, "projection direction a,b for wiring diagrams");
    app.add_option("--decone", cfg.decone_at, "hyperplane (1-based) sent to infinity; default the last");

    auto sub = [&](const std::string& name, const std::string& help, const std::string& what) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("inputs", cfg.inputs, what)->required();
        s->fallthrough();
        return s;
    };
    sub("poset", "intersection lattice in rank 2", "arrangement file");
    auto* wiring = sub("wiring", "wiring diagram of the (deconed) arrangement", "arrangement file");
    wiring->add_flag("--fibered", cfg.fibered, "fiber lines parallel to the direction");
    auto* present = sub("present", "fundamental group presentation", "arrangement file");
    present->add_flag("--fibered", cfg.fibered, "semidirect product presentation");
    auto* alexmat = sub("alexmat", "Alexander matrix", "arrangement file");
    alexmat->add_flag("--block", cfg.block, "block form of a fibered presentation");
    auto* resonance = sub("resonance", "resonance variety components", "arrangement file");
    resonance->add_option("--d", cfg.d, "depth");
    resonance->add_option("--blocks", cfg.blocks, "blocks per neighborly partition");
    auto* depth = sub("depth", "depth of characters", "arrangement file");
    depth->add_option("--char", cfg.characters, "character as rotations, e.g. 0,1/2,1/2")->required();
    auto* certify = sub("certify", "certify cosets in V_d", "arrangement file, then coset files");
    certify->add_option("--coset", cfg.cosets, "coset file");
    certify->add_option("--d", cfg.d, "depth");
    sub("intersect", "intersection of cosets", "coset files");
    auto* search = sub("search-translated", "translated components by pattern pull-back", "arrangement file");
    search->add_option("--max-order", cfg.max_order, "largest retranslation order");
    search->add_option("--d", cfg.d, "depth");
    auto* scan = sub("scan", "torsion points of V_d in a finite search set", "arrangement file, then coset files");
    scan->add_option("--orders", cfg.orders, "torsion order taken on each coset");
    scan->add_option("--on", cfg.cosets, "coset file");
    scan->add_option("--char", cfg.characters, "extra generating character");
    scan->add_option("--d", cfg.d, "depth");
    auto* report = sub("report", "characteristic intersection poset", "arrangement file, then coset files");
    report->add_option("--char", cfg.characters, "isolated point to include");
    report->add_option("--d", cfg.d, "depth");
    report->add_option("--max-order", cfg.max_order, "largest retranslation order");
    auto* repro = sub("reproduce", "run a worked example (a3, nonfano, b3, deleted-b3, grunbaum, falk, ziegler, all)",
                      "example ids");
    repro->add_option("--fixtures", cfg.fixtures, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return UsageError;
    }
    cfg.command = app.get_subcommands().at(0)->get_name();
    cfg.format = format;
    if (budget) cfg.budget = budget;
    return run(cfg);
}
