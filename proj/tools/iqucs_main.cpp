#include "CLI11.hpp"

#include "iqucs/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Qubit-frugal iterative Grover search over (index, value) pairs"};
    iqucs::RunConfig config;

    app.add_option("--size", config.dataset_size, "Data set size (top-ranked words)")
        ->capture_default_str();
    auto* targets_opt =
        app.add_option("--targets", config.target_values, "Comma-separated target values")
            ->delimiter(',');
    auto* count_opt =
        app.add_option("--num-targets", config.num_targets, "Number of targets to draw at random");
    app.add_option("--target-seed", config.target_seed, "Seed for random target selection")
        ->capture_default_str();
    app.add_option("--mode", config.mode, "Method(s) to run: iqucs, gsearch, or both")
        ->check(CLI::IsMember({"iqucs", "gsearch", "both"}))
        ->capture_default_str();
    app.add_option("--shots", config.shots, "Measurement shots per readout, 0 = exact")
        ->capture_default_str();
    app.add_option("--threshold", config.threshold_ts, "Filter threshold T_s in (0, 1]")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Measurement sampling seed")->capture_default_str();
    app.add_option("--wordlist", config.wordlist_path,
                   "Word list file, one word per line (default: built-in corpus)");
    app.add_option("--out", config.output_dir, "Output directory for report.json and histograms")
        ->capture_default_str();
    app.add_option("--max-iterations", config.max_iterations,
                   "Iteration cap for the iterative search")
        ->capture_default_str();
    targets_opt->excludes(count_opt);
    count_opt->excludes(targets_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return iqucs::kExitInvalidConfig;
    }
    return iqucs::run_experiment(config);
}
