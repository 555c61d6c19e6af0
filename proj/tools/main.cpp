#include <string>

#include "CLI11.hpp"

#include "hankel/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "hankel-verify: numerical verification of the sharp |H3(1)| bounds for\n"
      "starlike functions (4/9) and q-starlike functions associated with the\n"
      "lemniscate of Bernoulli ((1+q)^2 / (16 q^2 (1+q+q^2)^2))."};
  app.require_subcommand(1);
  app.footer("Environment: HANKEL_VERIFY_THREADS caps the worker count "
             "(default: available parallelism).");

  hankel::RunConfig config;
  std::string format = "json";

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", config.output_path, "output path; '-' writes to stdout")
        ->capture_default_str();
    cmd->add_flag("--timing", config.include_timing,
                  "include wall_time_ms in the report (makes reports non-reproducible)");
  };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--resolution", config.resolution, "initial lattice resolution (>= 2)")
        ->capture_default_str();
    cmd->add_option("--rounds", config.rounds, "shrinking-box refinement rounds")
        ->capture_default_str();
  };
  auto add_q = [&](CLI::App* cmd, const char* help) {
    cmd->add_option("--q", config.q_values, help);
  };

  CLI::App* verify_star = app.add_subcommand(
      "verify-star", "verify the sharp bound 4/9 for the starlike class");
  add_grid(verify_star);
  add_output(verify_star);
  verify_star->callback([&] { config.command = hankel::Command::VerifyStar; });

  CLI::App* verify_qstar = app.add_subcommand(
      "verify-qstar", "verify the sharp q-dependent bound for the lemniscate class");
  add_q(verify_qstar, "q value in (0,1); repeat for several");
  add_grid(verify_qstar);
  add_output(verify_qstar);
  verify_qstar->callback([&] { config.command = hankel::Command::VerifyQStar; });

  CLI::App* sweep = app.add_subcommand(
      "sweep", "verify the lemniscate bound over a list of q values");
  add_q(sweep, "q values in (0,1); defaults to 0.1..0.9 in steps of 0.1");
  add_grid(sweep);
  add_output(sweep);
  sweep->callback([&] { config.command = hankel::Command::Sweep; });

  CLI::App* sample = app.add_subcommand(
      "sample", "Monte-Carlo domination campaign over random Caratheodory parameters");
  add_q(sample, "verify the lemniscate class at these q values (default: starlike class)");
  sample->add_option("--samples", config.samples, "number of random parameter tuples")
      ->capture_default_str();
  sample->add_option("--seed", config.seed, "base PRNG seed (echoed into the report)")
      ->capture_default_str();
  add_output(sample);
  sample->callback([&] { config.command = hankel::Command::Sample; });

  CLI::App* extremal = app.add_subcommand(
      "extremal", "coefficients and |H3| of the class's extremal function");
  add_q(extremal, "lemniscate class at these q values (default: starlike class)");
  add_output(extremal);
  extremal->callback([&] { config.command = hankel::Command::Extremal; });

  CLI::App* face_table = app.add_subcommand(
      "face-table", "face and edge maxima of the surrogate objective");
  add_q(face_table, "lemniscate class at these q values (default: starlike class)");
  add_grid(face_table);
  add_output(face_table);
  face_table->callback([&] { config.command = hankel::Command::FaceTable; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hankel::kExitOk : hankel::kExitConfigInvalid;
  }

  config.output_format =
      format == "csv" ? hankel::OutputFormat::Csv : hankel::OutputFormat::Json;
  return hankel::run(config);
}
