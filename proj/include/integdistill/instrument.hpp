#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "integdistill/error.hpp"
#include "integdistill/invocations.hpp"

namespace integdistill {

/// Trailing comment carried by every injected line; strip() keys on it.
inline constexpr std::string_view kProbeMarker = "// @idprobe";

/// Lines placed around a wrapped statement. `{id}` expands to the probe
/// number (per file, source order, from 1) and `{line}` to the original line
/// of the invocation point. Other braces, such as `{0}`, are left alone.
struct ProbeTemplate {
  std::vector<std::string> before;
  std::vector<std::string> after;

  /// Timestamp before the call, elapsed milliseconds logged after it.
  static ProbeTemplate timing();
};

struct Probe {
  int id = 0;
  int line = 0;
  std::string invocation;
};

struct InstrumentationResult {
  std::string text;
  std::vector<Probe> probes;
};

/// Wraps the statement containing each point with the template lines.
/// `points` must come from analysing exactly `source`; points whose file
/// differs from `path` are ignored when `path` is non-empty. Throws
/// InstrumentError when a point cannot be located or its statement shares a
/// line with other code.
InstrumentationResult instrument(std::string_view source, std::span<const InvocationPoint> points,
                                 const ProbeTemplate& probe = ProbeTemplate::timing(),
                                 std::string_view path = {});

/// Removes every line carrying the probe marker.
std::string strip(std::string_view source);

/// Expands `{id}` and `{line}` in one template line.
std::string render_probe_line(std::string_view line, int id, int source_line);

}  // namespace integdistill
