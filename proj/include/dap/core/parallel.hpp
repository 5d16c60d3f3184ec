#pragma once

namespace dap::core {

// Kernel execution mode. Parallel kernels only split work across independent
// output elements, so both modes produce bit-identical results; Serial keeps
// the plain reference loops around for testing and benchmarking.
enum class ExecMode { Serial, Parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode mode);

// Scoped override, used by the serial-vs-parallel equivalence tests.
struct ExecModeGuard {
  explicit ExecModeGuard(ExecMode mode) : saved_(exec_mode()) { set_exec_mode(mode); }
  ~ExecModeGuard() { set_exec_mode(saved_); }
  ExecModeGuard(const ExecModeGuard&) = delete;
  ExecModeGuard& operator=(const ExecModeGuard&) = delete;

 private:
  ExecMode saved_;
};

}  // namespace dap::core
