#include "balines/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "balines/certificate.hpp"
#include "balines/error.hpp"
#include "balines/fuzz.hpp"
#include "balines/generators.hpp"
#include "balines/io.hpp"
#include "balines/render.hpp"

namespace balines {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InsufficientBorder:
    case ErrorCode::ProofGap:
    case ErrorCode::FailsToSeparate:
    case ErrorCode::GenerationExhausted:
      return kCheckFailed;
    default:
      return kBadInput;
  }
}

AllowableSequence load_sequence(const std::string& points_file, const std::string& seq_file) {
  if (!seq_file.empty()) return sequence_from_text(read_file(seq_file));
  if (points_file.empty()) throw Error(ErrorCode::InvalidInput, "give an instance FILE or --seq FILE");
  return build_from_points(instance_from_json(read_file(points_file)));
}

void emit(std::ostream& out, const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced lines of bichromatic point sets"};
  app.require_subcommand(1);

  std::string file;
  std::string seq_file;
  std::string out_path;
  std::string json_path;
  int blue = 0;
  int red = 0;
  int n = 0;
  std::uint64_t seed = 1;
  std::int64_t bound = 1000;
  bool separated = false;
  FuzzConfig fuzz;
  std::string mode = "points";

  auto* gen = app.add_subcommand("gen", "Generate a random clean instance (JSON)");
  gen->add_option("--blue", blue, "Blue points")->required();
  gen->add_option("--red", red, "Red points")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--bound", bound, "Coordinate bound");
  gen->add_flag("--separated", separated, "Line-separated colors on a circle (needs blue == red)");
  gen->add_option("--out", out_path, "Write to file");

  auto* gen_seq = app.add_subcommand("gen-seq", "Generate a random abstract allowable sequence");
  gen_seq->add_option("--n", n, "Number of elements")->required();
  gen_seq->add_option("--blue", blue, "Blue elements")->required();
  gen_seq->add_option("--seed", seed, "Random seed");
  gen_seq->add_option("--out", out_path, "Write to file");

  auto* validate_cmd = app.add_subcommand("validate", "General-position report (exit 1 if degenerate)");
  validate_cmd->add_option("FILE", file, "Instance JSON")->required();

  auto* seq_cmd = app.add_subcommand("seq", "Print the allowable sequence of an instance");
  seq_cmd->add_option("FILE", file, "Instance JSON")->required();
  seq_cmd->add_option("--out", out_path, "Write to file");

  auto* lines = app.add_subcommand("lines", "Balanced lines by brute force");
  lines->add_option("FILE", file, "Instance JSON")->required();

  auto* scan = app.add_subcommand("scan", "Balanced transpositions of the allowable sequence");
  scan->add_option("FILE", file, "Instance JSON");
  scan->add_option("--seq", seq_file, "Sequence text file");

  auto* certify_cmd = app.add_subcommand("certify", "Build and verify a witness certificate");
  certify_cmd->add_option("FILE", file, "Instance JSON");
  certify_cmd->add_option("--seq", seq_file, "Sequence text file");
  certify_cmd->add_option("--json", json_path, "Write the certificate JSON here ('-' for stdout)");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized checking");
  fuzz_cmd->add_option("--trials", fuzz.trials, "Number of trials");
  fuzz_cmd->add_option("--mode", mode, "points, sequences or separated");
  fuzz_cmd->add_option("--nmin", fuzz.n_min, "Smallest n");
  fuzz_cmd->add_option("--nmax", fuzz.n_max, "Largest n");
  fuzz_cmd->add_option("--seed", fuzz.seed, "Random seed");
  fuzz_cmd->add_option("--threads", fuzz.threads, "Worker threads");

  auto* render = app.add_subcommand("render", "Draw the instance and its balanced lines as SVG");
  render->add_option("FILE", file, "Instance JSON")->required();
  render->add_option("--out", out_path, "SVG file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (gen->parsed()) {
      if (separated && blue != red) throw Error(ErrorCode::BadParams, "--separated needs --blue == --red");
      const Instance inst = separated ? separated_instance(blue, seed) : random_instance(blue, red, bound, seed);
      emit(out, out_path, instance_to_json(inst));
      return kOk;
    }
    if (gen_seq->parsed()) {
      emit(out, out_path, sequence_to_text(random_sequence(n, blue, seed)));
      return kOk;
    }
    if (validate_cmd->parsed()) {
      const auto report = validate_general_position(instance_from_json(read_file(file)));
      out << report_to_json(report);
      return report.clean() ? kOk : kCheckFailed;
    }
    if (seq_cmd->parsed()) {
      emit(out, out_path, sequence_to_text(build_from_points(instance_from_json(read_file(file)))));
      return kOk;
    }
    if (lines->parsed()) {
      const Instance inst = instance_from_json(read_file(file));
      out << witnesses_to_json(enumerate_balanced_lines(inst), inst.delta());
      return kOk;
    }
    if (scan->parsed()) {
      const AllowableSequence seq = load_sequence(file, seq_file);
      out << witnesses_to_json(scan_balanced_transpositions(seq), seq.delta());
      return kOk;
    }
    if (certify_cmd->parsed()) {
      const AllowableSequence seq = load_sequence(file, seq_file);
      const Certificate cert = certify(seq);
      const VerificationReport report = verify_certificate(seq, cert);
      if (json_path == "-") {
        out << certificate_to_json(seq, cert);
      } else {
        if (!json_path.empty()) write_file(json_path, certificate_to_json(seq, cert));
        out << "case " << (cert.kind == CertificateCase::Case1 ? 1 : 2) << ": " << cert.witnesses.size()
            << " witnesses, target " << cert.target << ", r = " << seq.red_count() << ", "
            << (report.ok ? "verified" : "REJECTED") << '\n';
      }
      for (const auto& d : report.diagnostics) err << d << '\n';
      return report.ok ? kOk : kCheckFailed;
    }
    if (fuzz_cmd->parsed()) {
      fuzz.mode = fuzz_mode_from_string(mode);
      const FuzzReport report = run_fuzz(fuzz);
      out << "trials " << report.trials_run << ", case1 " << report.case1 << ", case2 " << report.case2
          << ", failures " << report.failures.size() << '\n';
      for (const auto& f : report.failures) {
        out << "trial " << f.trial << ' ' << f.check << ": " << f.message << '\n' << f.repro;
        if (!f.repro.empty() && f.repro.back() != '\n') out << '\n';
      }
      return report.ok() ? kOk : kCheckFailed;
    }
    if (render->parsed()) {
      const Instance inst = instance_from_json(read_file(file));
      write_file(out_path, render_svg(inst, enumerate_balanced_lines(inst)));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kBadInput;
}

}  // namespace balines
