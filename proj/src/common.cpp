#include "cqgen/common.hpp"

#include <iostream>
#include <utility>

namespace cqgen {

namespace {
WarnHandler g_warn_handler;
}

void set_warn_handler(WarnHandler handler) { g_warn_handler = std::move(handler); }

void warn(const std::string& message) {
    if (g_warn_handler) {
        g_warn_handler(message);
    } else {
        std::cerr << "[cqgen] warning: " << message << "\n";
    }
}

}  // namespace cqgen
