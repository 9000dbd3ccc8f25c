#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coco {

/// Loads a scenario (with overrides applied), runs it, and writes
/// metrics.csv, trajectories.json and manifest.json into out_dir.
/// Returns 0 on success; config problems report the offending field.
int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::vector<std::string>& overrides, std::ostream& out, std::ostream& err);

/// Runs the randomized equilibrium/property suite; 0 iff every instance
/// passes. The sign-flip hook deliberately corrupts the density oracle so
/// the suite's sensitivity can be demonstrated.
int cmd_verify(std::uint64_t seed, int instance_count, bool inject_pair_sign_flip,
               std::ostream& out, std::ostream& err);

/// Runs a swept experiment (axis_spec like "k=1,2,3" or
/// "controller=coco,disk") and writes sweep.csv into out_dir.
int cmd_sweep(const std::string& config_path, const std::string& axis_spec, int trials,
              const std::string& out_dir, const std::vector<std::string>& overrides,
              std::ostream& out, std::ostream& err);

}  // namespace coco
