#include "redsolve/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "redsolve/pgm.hpp"
#include "redsolve/process_denoiser.hpp"

namespace redsolve {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

std::string format_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

} // namespace

DenoiserPtr make_denoiser(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  try {
    if (kind == "identity") return std::make_shared<ScalingDenoiser>(1.0);
    if (kind == "scale" && parts.size() == 2)
      return std::make_shared<ScalingDenoiser>(std::stod(parts[1]));
    if (kind == "box" && parts.size() == 2)
      return std::make_shared<BoxFilterDenoiser>(std::stoi(parts[1]));
    if (kind == "gaussian" && parts.size() == 3)
      return std::make_shared<GaussianFilterDenoiser>(std::stoi(parts[1]),
                                                      std::stod(parts[2]));
    if (kind == "process" && parts.size() >= 2)
      return std::make_shared<ProcessDenoiser>(spec.substr(spec.find(':') + 1));
  } catch (const std::logic_error&) { // stoi/stod parse and range failures
    throw std::invalid_argument("make_denoiser: bad parameter in '" + spec + "'");
  }
  throw std::invalid_argument("make_denoiser: unrecognized spec '" + spec + "'");
}

ExperimentResult run_experiment(const RunConfig& cfg, const Image& clean,
                                const Image* psnr_reference) {
  if (!(cfg.alpha > 0.0))
    throw std::invalid_argument("run_experiment: alpha must be positive");
  const double sigma_model =
      cfg.sigma_model > 0.0 ? cfg.sigma_model : cfg.task.noise_sigma;
  if (!(sigma_model > 0.0))
    throw std::invalid_argument("run_experiment: sigma_model must be positive");

  Degradation deg = degrade(cfg.task, clean);
  const Image x0 = initial_iterate(cfg.task, deg.measurement);
  RedProblem problem(deg.H, deg.measurement, sigma_model, cfg.alpha,
                     make_denoiser(cfg.denoiser_spec));

  SolveResult result;
  switch (cfg.solver) {
    case SolverKind::fp:
      result = run_fp(problem, x0, cfg.solver_config, psnr_reference);
      break;
    case SolverKind::apg:
      result = run_apg(problem, x0, cfg.solver_config, psnr_reference);
      break;
    case SolverKind::wpm:
      result = run_wpm(problem, x0, cfg.solver_config, psnr_reference);
      break;
  }

  if (!cfg.output_image_path.empty()) save_pgm(cfg.output_image_path, result.x);
  if (!cfg.trace_path.empty()) emit_csv(result.trace, cfg.trace_path);
  return {std::move(result.x), std::move(result.trace), std::move(deg)};
}

std::optional<std::int64_t> evals_to_match(const SolverTrace& trace,
                                           double target_psnr, double slack) {
  for (const TraceRecord& r : trace.records) {
    if (!r.psnr)
      throw std::invalid_argument("evals_to_match: trace has no PSNR column");
    if (*r.psnr >= target_psnr - slack) return r.denoiser_evals;
  }
  return std::nullopt;
}

void write_trace_csv(std::ostream& out, const SolverTrace& trace) {
  out << "iter,denoiser_evals,elapsed_s,objective,psnr\n";
  for (const TraceRecord& r : trace.records) {
    out << r.iteration << ',' << r.denoiser_evals << ',' << format_g(r.elapsed_seconds)
        << ',' << format_g(r.objective) << ',';
    if (r.psnr) out << format_g(*r.psnr);
    out << '\n';
  }
}

void emit_csv(const SolverTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
  write_trace_csv(out, trace);
  if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

SolverTrace parse_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "iter,denoiser_evals,elapsed_s,objective,psnr")
    throw std::runtime_error("trace csv: bad header");
  SolverTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw std::runtime_error("trace csv: bad row");
    TraceRecord r;
    r.iteration = std::stoi(fields[0]);
    r.denoiser_evals = std::stoll(fields[1]);
    r.elapsed_seconds = std::stod(fields[2]);
    r.objective = std::stod(fields[3]);
    if (!fields[4].empty()) r.psnr = std::stod(fields[4]);
    trace.records.push_back(std::move(r));
  }
  return trace;
}

SolverTrace load_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("trace csv: cannot open " + path);
  return parse_trace_csv(in);
}

const char* solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::fp: return "fp";
    case SolverKind::apg: return "apg";
    case SolverKind::wpm: return "wpm";
  }
  return "?";
}

SolverKind parse_solver(const std::string& name) {
  if (name == "fp") return SolverKind::fp;
  if (name == "apg") return SolverKind::apg;
  if (name == "wpm") return SolverKind::wpm;
  throw std::invalid_argument("unknown solver '" + name + "' (fp|apg|wpm)");
}

TaskKind parse_task(const std::string& name) {
  if (name == "deblur-uniform") return TaskKind::deblur_uniform;
  if (name == "deblur-gaussian") return TaskKind::deblur_gaussian;
  if (name == "super-resolution") return TaskKind::super_resolution;
  throw std::invalid_argument(
      "unknown task '" + name + "' (deblur-uniform|deblur-gaussian|super-resolution)");
}

} // namespace redsolve
