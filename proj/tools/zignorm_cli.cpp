// Command-line surface for the zigzag normalisation kernel.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zignorm/error.hpp"
#include "zignorm/json_io.hpp"
#include "zignorm/normalisation.hpp"
#include "zignorm/oracle.hpp"
#include "zignorm/typecheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitReject = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

int exit_code_for(const zignorm::KernelError& e) {
  switch (e.kind()) {
    case zignorm::ErrorKind::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitFailure;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) zignorm::raise(zignorm::ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) zignorm::raise(zignorm::ErrorKind::ParseError, "cannot open " + out_path + " for writing");
  out << text;
}

zignorm::Sink load_sink(const std::string& diagram_path, const std::vector<std::string>& leg_paths) {
  zignorm::Sink sink;
  sink.target = zignorm::io::read_diagram_text(slurp(diagram_path));
  for (const auto& path : leg_paths) {
    zignorm::DiagramMap leg = zignorm::io::read_map_text(slurp(path));
    if (!(leg.target() == sink.target))
      zignorm::raise(zignorm::ErrorKind::ArgumentError,
                     "sink leg " + path + " does not target the main diagram");
    sink.legs.push_back(std::move(leg));
  }
  return sink;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zigzag diagram kernel: validation, normalisation, type checking"};
  app.require_subcommand(1);

  bool strict = false;
  std::uint64_t seed = 0;
  app.add_flag("--strict-validate", strict, "re-validate every kernel product eagerly");
  app.add_option("--seed", seed, "seed for corpus generation in test utilities");

  std::string in_path, out_path, sig_path, address_arg;
  std::vector<std::string> leg_paths;

  CLI::App* validate = app.add_subcommand("validate", "check a diagram file");
  validate->add_option("diagram", in_path)->required();

  CLI::App* normalise = app.add_subcommand("normalise", "relative or absolute normalisation");
  normalise->add_option("diagram", in_path)->required();
  normalise->add_option("--sink", leg_paths, "sink leg files");
  normalise->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* oracle = app.add_subcommand("oracle-normalise", "brute-force reference normalisation");
  oracle->add_option("diagram", in_path)->required();
  oracle->add_option("--sink", leg_paths, "sink leg files");
  oracle->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* typecheck_cmd = app.add_subcommand("typecheck", "check a diagram against a signature");
  typecheck_cmd->add_option("diagram", in_path)->required();
  typecheck_cmd->add_option("--signature", sig_path)->required();

  CLI::App* content = app.add_subcommand("content", "list singular content addresses");
  content->add_option("diagram", in_path)->required();

  CLI::App* piece = app.add_subcommand("piece", "extract the piece at a content address");
  piece->add_option("diagram", in_path)->required();
  piece->add_option("--address", address_arg, "comma-separated singular heights")->required();
  piece->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  zignorm::set_strict_validation(strict);

  try {
    if (validate->parsed()) {
      zignorm::Diagram d;
      try {
        d = zignorm::io::read_diagram_text(slurp(in_path));
      } catch (const zignorm::KernelError& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
      }
      return kExitOk;
    }
    if (normalise->parsed()) {
      zignorm::Sink sink = load_sink(in_path, leg_paths);
      zignorm::NormalisationResult result = zignorm::normalise_relative(sink);
      emit(zignorm::io::write_normalisation_text(result), out_path);
      return kExitOk;
    }
    if (oracle->parsed()) {
      zignorm::Sink sink = load_sink(in_path, leg_paths);
      zignorm::OracleResult result = zignorm::oracle_normalise(sink);
      zignorm::NormalisationResult shaped;
      shaped.normal_form = result.normal_form;
      shaped.normaliser = result.normaliser;
      shaped.factorisations = result.factorisations;
      emit(zignorm::io::write_normalisation_text(shaped), out_path);
      return kExitOk;
    }
    if (typecheck_cmd->parsed()) {
      zignorm::Diagram d = zignorm::io::read_diagram_text(slurp(in_path));
      std::vector<std::string> warnings;
      zignorm::Signature sig = zignorm::io::read_signature_text(slurp(sig_path), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      zignorm::TypecheckVerdict verdict = zignorm::typecheck(d, sig);
      std::cout << zignorm::io::write_verdict_text(verdict);
      return verdict.accepted ? kExitOk : kExitReject;
    }
    if (content->parsed()) {
      zignorm::Diagram d = zignorm::io::read_diagram_text(slurp(in_path));
      for (const auto& [address, g] : zignorm::singular_content(d)) {
        std::string line;
        for (std::size_t i = 0; i < address.size(); ++i)
          line += (i ? "," : "") + std::to_string(address[i]);
        std::cout << line << " " << g.name << "\n";
      }
      return kExitOk;
    }
    if (piece->parsed()) {
      zignorm::Diagram d = zignorm::io::read_diagram_text(slurp(in_path));
      zignorm::ContentAddress address;
      std::stringstream ss(address_arg);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          address.push_back(std::stoul(part));
        } catch (const std::exception&) {
          std::cerr << "invalid address component: " << part << "\n";
          return kExitUsage;
        }
      }
      emit(zignorm::io::write_diagram_text(zignorm::extract_piece(d, address)), out_path);
      return kExitOk;
    }
  } catch (const zignorm::KernelError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}
