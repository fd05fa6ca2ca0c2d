#pragma once

#include <string>

namespace enscast {

/// Serialized warning line on stderr ("enscast: warning: ...").
void log_warning(const std::string& message);

/// Suppresses warning output (tests exercising fallback paths).
void set_warnings_enabled(bool enabled);

}  // namespace enscast
