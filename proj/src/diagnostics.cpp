#include "padecheb/diagnostics.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace padecheb {
namespace {

std::mutex handler_mutex;

WarningHandler &current_handler() {
    static WarningHandler handler = [](const std::string &message) {
        std::clog << "padecheb: warning: " << message << '\n';
    };
    return handler;
}

} // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(handler_mutex);
    return std::exchange(current_handler(), std::move(handler));
}

void warn(const std::string &message) {
    std::lock_guard lock(handler_mutex);
    if (const auto &handler = current_handler())
        handler(message);
}

} // namespace padecheb
