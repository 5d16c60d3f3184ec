#include "dap/core/parallel.hpp"

#include <cstdlib>
#include <cstring>

namespace dap::core {

namespace {

ExecMode initial_mode() {
  const char* env = std::getenv("DAP_SERIAL");
  if (env != nullptr && std::strcmp(env, "0") != 0) return ExecMode::Serial;
  return ExecMode::Parallel;
}

ExecMode g_mode = initial_mode();

}  // namespace

ExecMode exec_mode() { return g_mode; }

void set_exec_mode(ExecMode mode) { g_mode = mode; }

}  // namespace dap::core
