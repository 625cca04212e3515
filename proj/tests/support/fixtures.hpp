#pragma once

#include <string>
#include <utility>
#include <vector>

#include "integdistill/report.hpp"
#include "support/oracles.hpp"

namespace testsupport {

inline std::filesystem::path samples_dir() { return INTEGDISTILL_SAMPLES_DIR; }
inline std::filesystem::path golden_dir() { return INTEGDISTILL_GOLDEN_DIR; }

inline const std::string& demo_source() {
  static const std::string text = read_text(samples_dir() / "demo.moo");
  return text;
}

inline integdistill::AnalysisReport analyze_text(const std::string& text,
                                                 const std::string& path = "demo.moo") {
  std::vector<std::pair<std::string, std::string>> sources{{path, text}};
  return integdistill::analyze(sources);
}

inline const integdistill::AnalysisReport& demo_report() {
  static const integdistill::AnalysisReport report = analyze_text(demo_source());
  return report;
}

}  // namespace testsupport
