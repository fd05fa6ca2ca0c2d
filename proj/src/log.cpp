#include "enscast/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace enscast {

namespace {
std::mutex g_log_mutex;
std::atomic<bool> g_warnings_enabled{true};
}  // namespace

void log_warning(const std::string& message) {
    if (!g_warnings_enabled.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(g_log_mutex);
    std::cerr << "enscast: warning: " << message << "\n";
}

void set_warnings_enabled(bool enabled) {
    g_warnings_enabled.store(enabled, std::memory_order_relaxed);
}

}  // namespace enscast
