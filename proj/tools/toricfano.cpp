#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "toricfano/check.hpp"
#include "toricfano/corpus.hpp"
#include "toricfano/polytope_io.hpp"

namespace fs = std::filesystem;
using namespace toricfano;

namespace {

int emit(const RunReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << to_text(report);
  }
  return report.exit_status();
}

void write_fano(const fs::path& out, const FanoPolytope& p, const std::string& comment) {
  write_polytope_file(out, PolytopeData{p.dim(), p.vertices()}, comment);
}

std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and Betti/Chern identities of smooth toric Fano varieties"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };

  fs::path check_file_path;
  bool dual = false;
  auto* check = app.add_subcommand("check", "Verify a polytope file (N-lattice rays) or a diamond file");
  check->add_option("FILE", check_file_path)->required();
  check->add_flag("--dual", dual, "Input holds the anticanonical polytope in M");
  add_format(check);

  fs::path diamond_path;
  auto* diamond = app.add_subcommand("diamond", "Verify a Hodge diamond file");
  diamond->add_option("FILE", diamond_path)->required();
  add_format(diamond);

  std::vector<fs::path> batch_paths;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* batch = app.add_subcommand("batch", "Verify many files or directories");
  batch->add_option("PATH", batch_paths)->required();
  batch->add_option("--jobs,-j", jobs, "Worker threads (1 = sequential)")->check(CLI::PositiveNumber);
  add_format(batch);

  auto* gen = app.add_subcommand("gen", "Generate polytope files");
  gen->require_subcommand(1);
  int pn_dim = 0;
  fs::path gen_out;
  auto* gen_pn_cmd = gen->add_subcommand("pn", "Fan polytope of projective space P^N");
  gen_pn_cmd->add_option("N", pn_dim)->required();
  gen_pn_cmd->add_option("-o,--output", gen_out)->required();
  std::vector<fs::path> sum_inputs;
  auto* gen_sum_cmd = gen->add_subcommand("sum", "Free sum of two polytopes (product variety)");
  gen_sum_cmd->add_option("FILES", sum_inputs)->required()->expected(2);
  gen_sum_cmd->add_option("-o,--output", gen_out)->required();

  auto* corpus = app.add_subcommand("corpus", "Write built-in corpora");
  corpus->require_subcommand(1);
  fs::path corpus_dir;
  auto* corpus_dim2 = corpus->add_subcommand("dim2", "The five smooth toric del Pezzo surfaces");
  corpus_dim2->add_option("-o,--output", corpus_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return emit(run_check(check_file_path, CheckOptions{dual, false}), format);
    if (*diamond) return emit(run_check(diamond_path, CheckOptions{false, true}), format);
    if (*batch) return emit(run_batch(batch_paths, jobs), format);
    if (*gen_pn_cmd) {
      write_fano(gen_out, gen_pn(pn_dim), "P^" + std::to_string(pn_dim));
      return 0;
    }
    if (*gen_sum_cmd) {
      const auto read = [](const fs::path& p) {
        const auto data = read_polytope_file(p);
        return FanoPolytope(data.dim, data.vertices);
      };
      write_fano(gen_out, gen_direct_sum(read(sum_inputs[0]), read(sum_inputs[1])),
                 "free sum of " + sum_inputs[0].filename().string() + " and " +
                     sum_inputs[1].filename().string());
      return 0;
    }
    if (*corpus_dim2) {
      fs::create_directories(corpus_dir);
      for (const auto& entry : dim2_corpus()) {
        write_fano(corpus_dir / (file_stem(entry.name) + ".txt"), entry.polytope, entry.name);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
