#include "groebner/budget.hpp"

namespace groebner {

namespace {

struct ActiveBudget {
  Budget budget;
  std::uint64_t used = 0;
  ActiveBudget* prev = nullptr;
};

thread_local ActiveBudget* tl_active = nullptr;

}  // namespace

BudgetScope::BudgetScope(Budget budget) {
  auto* a = new ActiveBudget{budget, 0, tl_active};
  prev_ = tl_active;
  tl_active = a;
}

BudgetScope::~BudgetScope() {
  auto* a = tl_active;
  tl_active = static_cast<ActiveBudget*>(prev_);
  delete a;
}

void checkpoint() {
  ActiveBudget* a = tl_active;
  if (!a) return;
  if (a->budget.cancel &&
      a->budget.cancel->load(std::memory_order_relaxed))
    throw task_cancelled();
  if (a->budget.max_reductions != 0 &&
      ++a->used > a->budget.max_reductions)
    throw budget_exhausted();
}

}  // namespace groebner
