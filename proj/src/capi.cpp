#include "ramcc/ramcc.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "engine.hpp"

struct ramcc_session {
  ramcc::RunOptions opt;
  ramcc::RunResult result;
  std::string error;
};

extern "C" {

ramcc_session* ramcc_session_new(void) {
  auto* s = new (std::nothrow) ramcc_session;
  if (s) s->opt.command = "validate";
  return s;
}

void ramcc_session_free(ramcc_session* s) { delete s; }

ramcc_status ramcc_set_option(ramcc_session* s, const char* key, const char* value) {
  if (!s || !key || !value) return RAMCC_E_ARGUMENT;
  std::string k = key, v = value;
  try {
    if (k == "command") {
      s->opt.command = v;
    } else if (k == "precision") {
      s->opt.precision = std::stoi(v);
    } else if (k == "seed") {
      s->opt.seed = std::stoull(v);
    } else if (k == "psi") {
      s->opt.psi_exp = std::stoi(v);
      if (s->opt.psi_exp < 1) throw std::invalid_argument("psi");
    } else {
      s->error = "unknown option '" + k + "'";
      return RAMCC_E_ARGUMENT;
    }
  } catch (const std::exception&) {
    s->error = "bad value for option '" + k + "'";
    return RAMCC_E_ARGUMENT;
  }
  s->error.clear();
  return RAMCC_OK;
}

ramcc_status ramcc_run_text(ramcc_session* s, const char* text, size_t len) {
  if (!s || !text) return RAMCC_E_ARGUMENT;
  try {
    s->result = ramcc::run_document(std::string(text, len), s->opt);
    s->error.clear();
    return RAMCC_OK;
  } catch (const std::exception& e) {
    s->error = e.what();
    s->result = {};
    s->result.exit_code = 2;
    return RAMCC_E_INTERNAL;
  }
}

const char* ramcc_report_json(const ramcc_session* s) { return s ? s->result.json.c_str() : ""; }

const char* ramcc_report_text(const ramcc_session* s) { return s ? s->result.text.c_str() : ""; }

int ramcc_exit_code(const ramcc_session* s) { return s ? s->result.exit_code : 2; }

const char* ramcc_last_error(const ramcc_session* s) { return s ? s->error.c_str() : ""; }

const char* ramcc_version(void) { return ramcc::engine_version(); }

}  // extern "C"
