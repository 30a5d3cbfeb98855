#include "bnls/diag.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace bnls::diag {

namespace {
std::mutex g_mutex;
std::vector<std::string> g_warnings;
}  // namespace

void warn(const std::string& code, const std::string& message) {
    std::lock_guard lock(g_mutex);
    g_warnings.push_back(code + ": " + message);
}

std::vector<std::string> drain_warnings() {
    std::lock_guard lock(g_mutex);
    auto out = std::move(g_warnings);
    g_warnings.clear();
    return out;
}

void clear_warnings() {
    std::lock_guard lock(g_mutex);
    g_warnings.clear();
}

bool has_warning(const std::string& code) {
    std::lock_guard lock(g_mutex);
    for (const auto& w : g_warnings)
        if (w.rfind(code, 0) == 0) return true;
    return false;
}

std::size_t thread_count() {
    if (const char* env = std::getenv("BNLS_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<std::size_t>(n);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t nw = std::min(thread_count(), n);
    if (nw <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += nw) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace bnls::diag
