#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "redsolve/solver.hpp"
#include "redsolve/task.hpp"

namespace redsolve {

enum class SolverKind { fp, apg, wpm };

struct RunConfig {
  TaskSpec task;
  SolverKind solver = SolverKind::fp;
  double alpha = 0.0;        // required; the library ships no default
  double sigma_model = 0.0;  // <= 0 means: use task.noise_sigma
  std::string denoiser_spec = "gaussian:5:1.0";
  SolverConfig solver_config;
  std::string input_path;    // informational; the CLI loads it
  std::string output_image_path; // written when non-empty
  std::string trace_path;        // written when non-empty
};

struct ExperimentResult {
  Image recovered;
  SolverTrace trace;
  Degradation degradation;
};

// "gaussian:SIZE:STD", "box:SIZE", "scale:FACTOR", "identity",
// or "process:COMMAND" for the external-process adapter.
DenoiserPtr make_denoiser(const std::string& spec);

// degrade -> solve -> trace; PSNR column populated when psnr_reference is
// non-null (full images); artifacts written to the configured paths.
ExperimentResult run_experiment(const RunConfig& cfg, const Image& clean,
                                const Image* psnr_reference);

// Smallest cumulative denoiser-evaluation count at which the trace reaches
// target_psnr - slack; nullopt when never reached. Requires the PSNR column.
std::optional<std::int64_t> evals_to_match(const SolverTrace& trace,
                                           double target_psnr, double slack);

// CSV schema: iter,denoiser_evals,elapsed_s,objective,psnr
// (>= 10 significant digits; empty psnr field when absent).
void write_trace_csv(std::ostream& out, const SolverTrace& trace);
void emit_csv(const SolverTrace& trace, const std::string& path);
SolverTrace parse_trace_csv(std::istream& in);
SolverTrace load_trace_csv(const std::string& path);

const char* solver_name(SolverKind kind);
SolverKind parse_solver(const std::string& name);
TaskKind parse_task(const std::string& name);

} // namespace redsolve
