#include "pararadon/diagnostics.hpp"

#include <iostream>
#include <mutex>

namespace pararadon {

namespace {

std::mutex handler_mutex;

WarningHandler& handler_slot() {
  static WarningHandler h = [](std::string_view msg) {
    std::cerr << "pararadon: warning: " << msg << '\n';
  };
  return h;
}

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(handler_mutex);
  WarningHandler old = std::move(handler_slot());
  handler_slot() = std::move(handler);
  return old;
}

void emit_warning(std::string_view message) {
  std::lock_guard lock(handler_mutex);
  if (handler_slot()) handler_slot()(message);
}

}  // namespace pararadon
