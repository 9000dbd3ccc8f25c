#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coco/commands.hpp"
#include "coco/io.hpp"

namespace {

/// Remaining arguments of the form [--]key=value become config overrides.
std::vector<std::string> collect_overrides(const std::vector<std::string>& extras) {
    std::vector<std::string> overrides;
    for (const std::string& extra : extras) {
        if (extra.find('=') == std::string::npos)
            throw CLI::ValidationError("unrecognized argument (overrides are --key=value): " +
                                       extra);
        overrides.push_back(extra);
    }
    return overrides;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coco: communication-aware coverage control simulator"};
    app.set_version_flag("--version", std::string("coco ") + coco::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    int instances = 100;
    int trials = 20;
    std::string axis_spec;
    bool inject_sign_flip = false;

    CLI::App* run_cmd = app.add_subcommand("run", "run one scenario and write its outputs");
    run_cmd->add_option("--config", config_path, "scenario file (key = value, or a manifest)")
        ->required();
    run_cmd->add_option("--out-dir", out_dir, "output directory");
    run_cmd->allow_extras();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "randomized equilibrium and MRF property suite");
    verify_cmd->add_option("--seed", seed, "suite seed");
    verify_cmd->add_option("--instances", instances, "number of random instances");
    verify_cmd
        ->add_flag("--inject-psi-r-sign-flip", inject_sign_flip,
                   "corrupt the density oracle to demonstrate suite sensitivity")
        ->group("");  // test hook, hidden from help

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a swept experiment axis");
    sweep_cmd->add_option("--config", config_path, "base scenario file")->required();
    sweep_cmd->add_option("--axis", axis_spec, "axis spec: k=1,2,3 | uav_count=3,5,8 | controller=coco,disk")
        ->required();
    sweep_cmd->add_option("--trials", trials, "trials per axis value");
    sweep_cmd->add_option("--out-dir", out_dir, "output directory");
    sweep_cmd->allow_extras();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return coco::cmd_run(config_path, out_dir, collect_overrides(run_cmd->remaining()),
                                 std::cout, std::cerr);
        if (verify_cmd->parsed())
            return coco::cmd_verify(seed, instances, inject_sign_flip, std::cout, std::cerr);
        if (sweep_cmd->parsed())
            return coco::cmd_sweep(config_path, axis_spec, trials, out_dir,
                                   collect_overrides(sweep_cmd->remaining()), std::cout,
                                   std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
