#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bnls::diag {

// Process-wide warning collector. Operations stay pure in their return
// values; advisory conditions (aliasing, resolution, truncation radii)
// land here so the CLI and tests can inspect them.
void warn(const std::string& code, const std::string& message);
std::vector<std::string> drain_warnings();
void clear_warnings();
bool has_warning(const std::string& code);

// Thread count: BNLS_THREADS env var, else hardware concurrency.
std::size_t thread_count();

// Static partition of [0, n) over thread_count() workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bnls::diag
