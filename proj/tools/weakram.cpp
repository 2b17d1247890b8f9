#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <weakram/pipeline.hpp>

namespace fs = std::filesystem;
using namespace weakram;

namespace {

struct Overrides {
  std::string command;
  long precision = 0;
  bool have_precision = false;
  std::uint64_t seed = 0;
  bool have_seed = false;
};

JobSpec prepare(const std::string& path, const Overrides& ov, bool command_from_file) {
  JobSpec js = load_jobspec(path);
  if (command_from_file) {
    if (js.command.empty()) js.command = ov.command;
  } else {
    if (!js.command.empty() && js.command != ov.command)
      throw parse_error("job file requests command \"" + js.command +
                        "\" but the command line says \"" + ov.command + "\"");
    js.command = ov.command;
  }
  if (ov.have_precision) js.precision = ov.precision;
  if (ov.have_seed) js.seed = ov.seed;
  return js;
}

int run_single(const std::string& spec_path, const std::string& out_path, const Overrides& ov) {
  RunOutput out;
  try {
    out = run_job(prepare(spec_path, ov, false));
  } catch (const error& e) {
    std::cerr << "weakram: " << e.what() << "\n";
    return classify_exit(e);
  }
  std::string text = out.cert.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "weakram: cannot write " << out_path << "\n";
      return 1;
    }
    f << text;
    std::cout << ov.command << ": verdict "
              << (out.cert.value("verdict", false) ? "true" : "false") << ", certificate "
              << out_path << "\n";
  }
  if (out.cert.contains("error"))
    std::cerr << "weakram: " << out.cert["error"].get<std::string>() << "\n";
  return out.exit_code;
}

int run_batch(const std::string& dir, const Overrides& ov) {
  std::vector<fs::path> jobs;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".job")
      jobs.push_back(entry.path());
  if (ec) {
    std::cerr << "weakram: cannot read directory " << dir << "\n";
    return 3;
  }
  if (jobs.empty()) {
    std::cerr << "weakram: no .job files in " << dir << "\n";
    return 3;
  }
  std::sort(jobs.begin(), jobs.end());

  std::vector<int> codes(jobs.size(), 1);
  std::vector<std::string> lines(jobs.size());
  std::vector<std::thread> pool;
  pool.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    pool.emplace_back([&, i] {
      int code;
      try {
        RunOutput out = run_job(prepare(jobs[i].string(), ov, true));
        fs::path cert = jobs[i];
        cert.replace_extension(".cert.json");
        std::ofstream f(cert);
        f << out.cert.dump(2) << "\n";
        code = f ? out.exit_code : 1;
      } catch (const error& e) {
        code = classify_exit(e);
      } catch (const std::exception&) {
        code = 1;
      }
      codes[i] = code;
      lines[i] = jobs[i].filename().string() + ": exit " + std::to_string(code);
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& l : lines) std::cout << l << "\n";
  return *std::max_element(codes.begin(), codes.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified free generators of ideal powers in weakly ramified Galois "
               "extensions of local fields"};
  Overrides ov;
  std::string spec_file, out_file, batch_dir;
  app.add_option("command", ov.command, "analyze | construct | verify | assoc-order")
      ->required()
      ->check(CLI::IsMember({"analyze", "construct", "verify", "assoc-order"}));
  auto* spec_opt = app.add_option("--spec", spec_file, "job description file");
  app.add_option("--out", out_file, "certificate output path (default: stdout)");
  auto* prec_opt = app.add_option("--precision", ov.precision, "working precision override");
  auto* seed_opt = app.add_option("--seed", ov.seed, "construction seed override");
  auto* batch_opt = app.add_option("--batch", batch_dir, "directory of .job files to run");
  batch_opt->excludes(spec_opt);
  CLI11_PARSE(app, argc, argv);

  ov.have_precision = prec_opt->count() > 0;
  ov.have_seed = seed_opt->count() > 0;
  if (spec_file.empty() && batch_dir.empty()) {
    std::cerr << "weakram: either --spec or --batch is required\n";
    return 3;
  }
  return batch_dir.empty() ? run_single(spec_file, out_file, ov) : run_batch(batch_dir, ov);
}
