#include "run.hpp"

#include <chrono>
#include <sstream>

#include "CLI11.hpp"
#include "mbpns/mbpns.hpp"

namespace mbpns::cli {

namespace {

SamplingConfig load_config(const RunManifest& m) {
  if (m.config.empty()) throw FormatError("--config is required");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(io::read_file(m.config));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(m.config.string() + ": " + e.what());
  }
  return validate_config(io::config_from_json(j));
}

std::uint64_t resolve_seed(const RunManifest& m, const SamplingConfig& cfg) {
  if (m.seed) return *m.seed;
  if (cfg.seed) return *cfg.seed;
  throw FormatError("a seed is required (--seed or \"seed\" in the config)");
}

void emit(const RunManifest& m, const std::string& content, std::ostream& out) {
  if (m.out.empty()) {
    out << content;
  } else {
    io::write_file_atomic(m.out, content);
  }
}

void require_distinct(const RunManifest& m) {
  const std::filesystem::path* paths[] = {&m.config, &m.input, &m.out, &m.report, &m.reference};
  for (std::size_t a = 0; a < std::size(paths); ++a)
    for (std::size_t b = a + 1; b < std::size(paths); ++b)
      if (!paths[a]->empty() && *paths[a] == *paths[b])
        throw FormatError("path " + paths[a]->string() + " used twice");
}

int cmd_validate(const RunManifest& m, std::ostream& out) {
  const auto cfg = load_config(m);
  const Rational limit = 1 / ((2 * cfg.M + 1) * cfg.N);
  out << "d=" << cfg.d << " M=" << cfg.M << " N=" << to_string(cfg.N)
      << " Delta=" << to_string(cfg.Delta) << " delta=" << to_string(cfg.delta);
  if (cfg.T) out << " T=" << to_string(*cfg.T);
  out << "\n";
  out << "check 1/N <= Delta <= 1: ok\n";
  out << "check 0 < delta <= " << to_string(limit) << ": ok\n";
  if (cfg.T) {
    const auto per_axis = samples_per_axis(cfg);
    std::int64_t per_period = 1;
    for (int i = 0; i < cfg.d; ++i) per_period *= per_axis * (2 * cfg.M + 1);
    out << "check T/Delta integer: ok (" << per_axis << ")\n";
    out << "samples_per_period=" << per_period << "\n";
  }
  out << "tight=" << (cfg.tight() ? "true" : "false") << "\n";
  return kOk;
}

int cmd_synth(const RunManifest& m, std::ostream& out) {
  const auto cfg = load_config(m);
  const auto sig = random_signal(cfg, resolve_seed(m, cfg));
  emit(m, io::signal_to_json(sig).dump(1) + "\n", out);
  return kOk;
}

MultibandSignal load_signal(const std::filesystem::path& path, const SamplingConfig& cfg) {
  try {
    return io::signal_from_json(nlohmann::json::parse(io::read_file(path)), cfg);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

int cmd_sample(const RunManifest& m, std::ostream& out) {
  const auto cfg = load_config(m);
  if (m.input.empty()) throw FormatError("--input <signal.json> is required");
  emit(m, io::samples_to_csv(take_samples(load_signal(m.input, cfg))), out);
  return kOk;
}

int cmd_reconstruct(const RunManifest& m, std::ostream& out, std::ostream& err) {
  const auto cfg = load_config(m);
  if (m.input.empty()) throw FormatError("--input <samples.csv> is required");
  const auto grid = io::samples_from_csv(io::read_file(m.input), cfg);
  std::optional<MultibandSignal> reference;
  if (!m.reference.empty()) reference = load_signal(m.reference, cfg);

  const auto start = std::chrono::steady_clock::now();
  const auto spectra = analyze_all(grid);
  ReconstructOptions options;
  if (reference) options.reference = &*reference;
  const auto report = m.oracle ? reconstruct_oracle(spectra, options) : reconstruct_iterative(spectra, options);
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  emit(m, io::signal_to_json(report.recovered).dump(1) + "\n", out);
  const std::string report_text = io::report_to_json(report, wall_ms).dump(1) + "\n";
  if (!m.report.empty()) {
    io::write_file_atomic(m.report, report_text);
  } else if (!m.out.empty()) {
    auto path = m.out;
    path += ".report.json";
    io::write_file_atomic(path, report_text);
  } else {
    err << report_text;
  }
  if (!(report.relative_l2_error <= m.tolerance)) {
    err << "error: AssertionFailed: relative_l2_error " << io::format_double(report.relative_l2_error)
        << " > " << io::format_double(m.tolerance) << "\n";
    return kAssertionFailed;
  }
  return kOk;
}

int cmd_verify(const RunManifest& m, std::ostream& out, std::ostream& err) {
  const auto cfg = load_config(m);
  if (!cfg.T) throw PeriodMisaligned("verify needs a period T in the config");
  const auto report = verify(cfg, m.trials, resolve_seed(m, cfg));
  emit(m, io::stability_to_json(report).dump(1) + "\n", out);
  const auto bad = violations(report);
  for (const auto& v : bad) err << "error: AssertionFailed: " << v << "\n";
  return bad.empty() ? kOk : kAssertionFailed;
}

int cmd_sweep(const RunManifest& m, std::ostream& out) {
  const auto base = load_config(m);
  if (!base.T) throw PeriodMisaligned("sweep needs a period T in the config");
  const auto rows = sweep(base, m.max_M > 0 ? m.max_M : 2, m.max_N > 0 ? m.max_N : 2,
                          m.steps > 0 ? m.steps : 4, m.trials, resolve_seed(m, base));
  emit(m, io::sweep_to_csv(rows), out);
  return kOk;
}

int cmd_bounds(const RunManifest& m, std::ostream& out) {
  const auto rows =
      bounds_sweep(m.max_M > 0 ? m.max_M : 5, m.max_N > 0 ? m.max_N : 2, m.steps > 0 ? m.steps : 10);
  emit(m, io::bounds_to_csv(rows), out);
  return kOk;
}

}  // namespace

int run(const RunManifest& m, std::ostream& out, std::ostream& err) {
  try {
    require_distinct(m);
    switch (m.command) {
      case Command::validate: return cmd_validate(m, out);
      case Command::synth: return cmd_synth(m, out);
      case Command::sample: return cmd_sample(m, out);
      case Command::reconstruct: return cmd_reconstruct(m, out, err);
      case Command::verify: return cmd_verify(m, out, err);
      case Command::sweep: return cmd_sweep(m, out);
      case Command::bounds: return cmd_bounds(m, out);
    }
  } catch (const Error& e) {
    const std::string what = e.what();
    err << "error: " << (what.starts_with(e.kind()) ? what : e.kind() + ": " + what) << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: IOError: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic nonuniform sampling of multiband signals"};
  app.require_subcommand(1);
  RunManifest m;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", m.config, "Sampling configuration JSON");
    sub->add_option("--out", m.out, "Output path (default: stdout)");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed (overrides the config)");
  };

  auto* validate = app.add_subcommand("validate", "Check the sampling hypotheses");
  validate->add_option("--config", m.config, "Sampling configuration JSON")->required();

  auto* synth = app.add_subcommand("synth", "Write a random multiband signal as JSON");
  add_common(synth);
  add_seed(synth);

  auto* sample = app.add_subcommand("sample", "Sample a signal JSON onto the lattice (CSV)");
  add_common(sample);
  sample->add_option("--input", m.input, "Signal JSON")->required();

  auto* recon = app.add_subcommand("reconstruct", "Recover the signal from a sample CSV");
  add_common(recon);
  recon->add_option("--input", m.input, "Sample CSV")->required();
  recon->add_option("--report", m.report, "Report JSON (default: <out>.report.json)");
  recon->add_option("--reference", m.reference, "Original signal JSON for the error");
  recon->add_option("--tolerance", m.tolerance, "Relative error treated as failure");
  recon->add_flag("--oracle", m.oracle, "Use the full least-squares solver");

  auto* ver = app.add_subcommand("verify", "Empirical and exact frame bounds (JSON)");
  add_common(ver);
  add_seed(ver);
  ver->add_option("--trials", m.trials, "Random signals")->check(CLI::PositiveNumber);

  auto* sw = app.add_subcommand("sweep", "Frame bounds over an (M, N, delta) grid (CSV)");
  add_common(sw);
  add_seed(sw);
  sw->add_option("--trials", m.trials, "Random signals per row")->check(CLI::PositiveNumber);
  sw->add_option("--max-m", m.max_M, "Largest M (default 2)");
  sw->add_option("--max-n", m.max_N, "Largest N (default 2)");
  sw->add_option("--steps", m.steps, "delta values per (M, N) (default 4)");

  auto* bnd = app.add_subcommand("bounds", "Inverse Vandermonde norms and bounds (CSV)");
  bnd->add_option("--out", m.out, "Output path (default: stdout)");
  bnd->add_option("--max-m", m.max_M, "Largest M (default 5)");
  bnd->add_option("--max-n", m.max_N, "Largest N (default 2)");
  bnd->add_option("--steps", m.steps, "delta values per (M, N) (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (auto* sub : {synth, ver, sw})
    if (sub->parsed() && sub->count("--seed") > 0) m.seed = seed;
  if (validate->parsed()) m.command = Command::validate;
  if (synth->parsed()) m.command = Command::synth;
  if (sample->parsed()) m.command = Command::sample;
  if (recon->parsed()) m.command = Command::reconstruct;
  if (ver->parsed()) m.command = Command::verify;
  if (sw->parsed()) m.command = Command::sweep;
  if (bnd->parsed()) m.command = Command::bounds;
  return run(m, out, err);
}

}  // namespace mbpns::cli
