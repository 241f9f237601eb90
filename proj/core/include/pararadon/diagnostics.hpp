#pragma once

#include <functional>
#include <string_view>

namespace pararadon {

using WarningHandler = std::function<void(std::string_view)>;

/// Installs the sink for library warnings and returns the previous one.
/// The default writes "pararadon: warning: ..." lines to stderr.
WarningHandler set_warning_handler(WarningHandler handler);

void emit_warning(std::string_view message);

}  // namespace pararadon
