// ramcc command line: drives the shared-library C API only.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "ramcc/ramcc.h"

namespace {

struct FileJob {
  std::string path;
  std::string json;
  std::string text;
  int exit_code = 2;
  std::string error;
};

std::string read_file(const std::string& path, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot open " + path;
    return "";
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(ramcc_version()) +
               " — Swan conductors with differential values, Abbes-Saito "
               "characteristic cycles and the Deligne-Kato formula"};
  std::string command;
  std::vector<std::string> files;
  bool json_out = false;
  int precision = 0;
  std::string seed = "24037";
  int psi = 1;
  int jobs = 1;
  app.add_option("command", command, "validate | invariants | swan | cc | compare | nearby")
      ->required();
  app.add_option("files", files, "input documents")->required()->expected(-1);
  app.add_flag("--json", json_out, "emit the JSON report instead of text");
  app.add_option("--precision", precision, "working t-adic precision (0 = default bound)");
  app.add_option("--seed", seed, "seed for randomized factorization");
  app.add_option("--psi", psi, "exponent k fixing psi0(1) = zeta^k")->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "parallel file jobs")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  if (precision == 0) {
    if (const char* env = std::getenv("RAMCC_PRECISION")) precision = std::atoi(env);
  }

  std::vector<FileJob> work(files.size());
  for (size_t i = 0; i < files.size(); ++i) work[i].path = files[i];

  std::mutex mu;
  size_t next = 0;
  auto worker = [&]() {
    for (;;) {
      size_t idx;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (next >= work.size()) return;
        idx = next++;
      }
      FileJob& job = work[idx];
      std::string err;
      std::string text = read_file(job.path, err);
      if (!err.empty()) {
        job.error = err;
        job.exit_code = 2;
        continue;
      }
      ramcc_session* s = ramcc_session_new();
      ramcc_set_option(s, "command", command.c_str());
      ramcc_set_option(s, "precision", std::to_string(precision).c_str());
      ramcc_set_option(s, "seed", seed.c_str());
      ramcc_set_option(s, "psi", std::to_string(psi).c_str());
      if (ramcc_run_text(s, text.c_str(), text.size()) != RAMCC_OK)
        job.error = ramcc_last_error(s);
      job.json = ramcc_report_json(s);
      job.text = ramcc_report_text(s);
      job.exit_code = ramcc_exit_code(s);
      ramcc_session_free(s);
    }
  };
  int nthreads = std::min<size_t>(jobs, work.size());
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int exit_code = 0;
  for (auto& job : work) {
    if (work.size() > 1 && !json_out) std::cout << "== " << job.path << "\n";
    if (!job.error.empty()) std::cerr << "ramcc: " << job.path << ": " << job.error << "\n";
    std::cout << (json_out ? job.json : job.text);
    exit_code = std::max(exit_code, job.exit_code);
  }
  return exit_code;
}
