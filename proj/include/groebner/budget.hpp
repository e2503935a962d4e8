#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>

namespace groebner {

struct budget_exhausted : std::runtime_error {
  budget_exhausted()
      : std::runtime_error("computation budget exhausted in Groebner engine") {}
};

struct task_cancelled : std::runtime_error {
  task_cancelled() : std::runtime_error("task cancelled") {}
};

/// Bounds placed on one unit of Groebner work. `cancel`, when set, is a
/// cooperative cancellation flag polled at every reduction checkpoint.
struct Budget {
  std::uint64_t max_reductions = 0;  // 0 means unlimited
  std::atomic<bool>* cancel = nullptr;
};

/// Installs a budget for the current thread for the scope's lifetime.
/// Nested scopes stack; reduction counting restarts per scope.
class BudgetScope {
 public:
  explicit BudgetScope(Budget budget);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

 private:
  void* prev_;
};

/// Called from reduction loops. Throws budget_exhausted or task_cancelled
/// when the installed budget says so; no-op without an installed budget.
void checkpoint();

}  // namespace groebner
