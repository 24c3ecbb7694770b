#ifndef RAMCC_ENGINE_HPP
#define RAMCC_ENGINE_HPP

#include <cstdint>
#include <string>

namespace ramcc {

struct RunOptions {
  std::string command;    // validate | invariants | swan | cc | compare | nearby
  int precision = 0;      // 0: document value or the default bound
  uint64_t seed = 0x5eed;
  int psi_exp = 1;        // psi0 = 1 -> zeta^psi_exp
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 mathematical mismatch, 2 input error
  std::string json;
  std::string text;
};

RunResult run_document(const std::string& text, const RunOptions& opt);

const char* engine_version();

}  // namespace ramcc

#endif
