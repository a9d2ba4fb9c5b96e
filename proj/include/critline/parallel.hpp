#pragma once

#include <functional>

namespace critline {

// Worker count: CRITLINE_THREADS if set (>=1), otherwise hardware concurrency.
int worker_count();

// Runs f(i) for i in [0, n) across workers in contiguous chunks and joins.
// Callers keep determinism by writing into per-index slots and reducing in
// index order afterwards.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace critline
