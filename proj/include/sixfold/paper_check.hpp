#pragma once

// Fixtures transcribed from the published worked examples (m = 50 on both
// sides). Expected values are evaluated from the printed floors themselves,
// never from the engine.

#include "sixfold/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sixfold {

struct AnchorResult {
  std::string anchor;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// A misprint in the reference text and the reading the code implements.
struct ErrataEntry {
  std::string location;
  std::string printed_form;
  std::string normative_form;
  std::string evidence;
  /// Re-derives the normative form with the engine or oracle; true if it holds.
  std::function<bool()> confirm;
};

struct PaperCheckReport {
  std::vector<AnchorResult> anchors;
  std::vector<ErrataEntry> errata;
  std::vector<bool> errata_confirmed;

  bool ok() const;
};

const std::vector<ErrataEntry>& errata_entries();

PaperCheckReport run_paper_check();

std::string render_paper_check(const PaperCheckReport& report, Format format);

/// Contents of ERRATA.md.
std::string render_errata_markdown();

}  // namespace sixfold
