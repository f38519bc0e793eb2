#include "cforge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cforge {

int worker_count() {
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("COALITION_FORGE_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) workers = static_cast<unsigned>(requested);
    } catch (const std::exception&) {
      // Unparseable values fall back to auto.
    }
  }
  return workers > 0 ? static_cast<int>(workers) : 1;
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn) {
  if (count <= 0) return;
  const int workers = worker_count();
  if (workers <= 1 || count == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto body = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  const int spawned = static_cast<int>(
      std::min<std::int64_t>(workers, count) - 1);
  std::vector<std::thread> pool;
  pool.reserve(spawned);
  for (int i = 0; i < spawned; ++i) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace cforge
