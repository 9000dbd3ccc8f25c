#include "coco/commands.hpp"

#include <filesystem>
#include <ostream>

#include "coco/config.hpp"
#include "coco/engine.hpp"
#include "coco/io.hpp"
#include "coco/verify.hpp"

namespace coco {

namespace {

ScenarioConfig load_scenario(const std::string& config_path,
                             const std::vector<std::string>& overrides) {
    ConfigMap map = load_config_file(config_path);
    apply_overrides(map, overrides);
    return scenario_from_map(map);
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::vector<std::string>& overrides, std::ostream& out, std::ostream& err) {
    try {
        const ScenarioConfig config = load_scenario(config_path, overrides);
        std::filesystem::create_directories(out_dir);
        const SimTrace trace = run(config);

        const auto dir = std::filesystem::path(out_dir);
        write_metrics_csv((dir / "metrics.csv").string(), trace);
        write_trajectories_json((dir / "trajectories.json").string(), trace);
        write_manifest_json((dir / "manifest.json").string(), config);

        int connected_steps = 0;
        for (const StepRecord& s : trace.steps) connected_steps += s.connected ? 1 : 0;
        out << "ran " << trace.steps.size() << " steps, connected " << connected_steps << "/"
            << trace.steps.size() << ", final mean UE RSS "
            << (trace.steps.empty() ? 0.0 : trace.steps.back().mean_ue_rss()) << " dBm\n";
        out << "wrote " << (dir / "metrics.csv").string() << ", "
            << (dir / "trajectories.json").string() << ", " << (dir / "manifest.json").string()
            << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(std::uint64_t seed, int instance_count, bool inject_pair_sign_flip,
               std::ostream& out, std::ostream& err) {
    try {
        VerifyOptions options;
        options.seed = seed;
        options.instance_count = instance_count;
        options.inject_pair_sign_flip = inject_pair_sign_flip;
        const auto results = run_verification(options, out);
        for (const InstanceResult& r : results) {
            if (!r.ok()) {
                err << "first failing instance seed: " << r.instance_seed << "\n";
                return 1;
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_sweep(const std::string& config_path, const std::string& axis_spec, int trials,
              const std::string& out_dir, const std::vector<std::string>& overrides,
              std::ostream& out, std::ostream& err) {
    try {
        const ScenarioConfig config = load_scenario(config_path, overrides);
        const SweepAxis axis = SweepAxis::parse(axis_spec);
        std::filesystem::create_directories(out_dir);
        const SweepResult result = sweep(config, axis, trials);

        const auto path = (std::filesystem::path(out_dir) / "sweep.csv").string();
        write_sweep_csv(path, result);
        for (const SweepGroup& g : result.groups)
            out << g.label << ": final mean UE RSS " << g.mean_ue_rss.back() << " dBm, final mean payoff "
                << g.mean_payoff.back() << "\n";
        out << "wrote " << path << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace coco
