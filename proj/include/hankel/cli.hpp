#pragma once

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "hankel/report.hpp"

namespace hankel {

enum class Command { VerifyStar, VerifyQStar, Sweep, Sample, Extremal, FaceTable };
enum class OutputFormat { Json, Csv };

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfigInvalid = 2,
  kExitBoundViolation = 3,
  kExitSharpnessGap = 4,
  kExitIoFailure = 5,
};

struct RunConfig {
  Command command = Command::VerifyStar;
  std::vector<double> q_values;
  int resolution = 64;
  int rounds = 30;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  OutputFormat output_format = OutputFormat::Json;
  std::string output_path = "-";
  bool include_timing = false;  // adds wall_time_ms; off by default so equal
                                // configs yield byte-identical reports
};

namespace detail {

inline bool needs_q(Command c) { return c == Command::VerifyQStar || c == Command::Sweep; }

inline std::vector<double> effective_q_values(const RunConfig& config) {
  if (!config.q_values.empty()) return config.q_values;
  if (config.command == Command::Sweep)
    return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return {};
}

inline void validate(const RunConfig& config) {
  if (config.resolution < 2) throw ConfigInvalid("--resolution must be at least 2");
  if (config.rounds < 0) throw ConfigInvalid("--rounds must be nonnegative");
  if (config.samples < 1) throw ConfigInvalid("--samples must be at least 1");
  for (double q : config.q_values)
    if (!(q > 0.0) || !(q < 1.0))
      throw ConfigInvalid("--q must lie strictly inside (0,1); got " + std::to_string(q));
  if (needs_q(config.command) && effective_q_values(config).empty())
    throw ConfigInvalid("this command requires at least one --q value in (0,1)");
}

/// Class tags addressed by a config: the starlike class when no q was given,
/// otherwise the lemniscate class per q value.
inline std::vector<ClassTag> tags_for(const RunConfig& config) {
  const std::vector<double> qs = effective_q_values(config);
  if (qs.empty()) return {ClassTag::star()};
  std::vector<ClassTag> tags;
  tags.reserve(qs.size());
  for (double q : qs) tags.push_back(ClassTag::qstar_lemniscate(QParameter(q)));
  return tags;
}

}  // namespace detail

/// Executes the configured pipeline and renders its report document. The
/// second member of the result is the exit status the caller should use
/// (sampling campaigns report violations through it).
struct RunOutput {
  Json document;
  int status = kExitOk;
};

inline RunOutput build_output(const RunConfig& config) {
  RunOutput out;
  Json records = Json::array();
  int status = kExitOk;

  for (const ClassTag& tag : detail::tags_for(config)) {
    const auto t0 = std::chrono::steady_clock::now();
    Json record;
    switch (config.command) {
      case Command::VerifyStar:
      case Command::VerifyQStar:
      case Command::Sweep: {
        const OptimizationReport report =
            verify_sharp_bound(tag, config.resolution, config.rounds);
        record = verification_report_json(tag, report);
        break;
      }
      case Command::Sample: {
        const DominationSweep sweep = run_domination_sweep(tag, config.samples, config.seed);
        record = sample_report_json(tag, sweep);
        if (sweep.violations > 0 || sweep.bound_exceedances > 0) status = kExitBoundViolation;
        break;
      }
      case Command::Extremal: {
        const TruncatedSeries f = tag.kind() == ClassKind::Star
                                      ? extremal_star(kDefaultOrder)
                                      : extremal_qstar(tag.q(), kDefaultOrder);
        record = extremal_report_json(tag, f);
        break;
      }
      case Command::FaceTable: {
        const ScalarField field = field_for(tag);
        record = face_table_report_json(tag, face_scan(field, config.resolution, config.rounds),
                                        edge_scan(field, config.resolution, config.rounds));
        break;
      }
    }
    if (config.include_timing) {
      const auto dt = std::chrono::steady_clock::now() - t0;
      record["wall_time_ms"] =
          std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(dt).count();
    }
    records.push_back(std::move(record));
  }

  out.document = records.size() == 1 && config.command != Command::Sweep
                     ? std::move(records.front())
                     : std::move(records);
  out.status = status;
  return out;
}

/// Runs a full configuration: validate, execute, render, emit. Maps every
/// library error to the documented exit status; never lets an exception
/// escape as a silent success.
inline int run(const RunConfig& config) {
  try {
    detail::validate(config);
    RunOutput out = build_output(config);
    const std::string text = config.output_format == OutputFormat::Json
                                 ? dump_json(out.document)
                                 : to_csv_tables(out.document);
    emit_document(text, config.output_path);
    return out.status;
  } catch (const ConfigInvalid& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigInvalid;
  } catch (const BoundViolation& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return kExitBoundViolation;
  } catch (const SharpnessGap& e) {
    std::cerr << "sharpness gap: " << e.what() << "\n";
    return kExitSharpnessGap;
  } catch (const IoFailure& e) {
    std::cerr << "i/o failure: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace hankel
