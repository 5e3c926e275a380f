#include "gzlab/parallel.hpp"

namespace gzlab::parallel {

namespace {
std::atomic<int> g_threads{1};
}

void set_threads(int n) { g_threads.store(std::max(1, n), std::memory_order_relaxed); }

int threads() { return g_threads.load(std::memory_order_relaxed); }

}  // namespace gzlab::parallel
