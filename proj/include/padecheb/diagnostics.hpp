#pragma once

#include <functional>
#include <string>

namespace padecheb {

using WarningHandler = std::function<void(const std::string &)>;

/// Installs the sink for warning-level diagnostics and returns the previous one.
/// The default handler writes to std::clog. Passing an empty handler silences warnings.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(const std::string &message);

} // namespace padecheb
