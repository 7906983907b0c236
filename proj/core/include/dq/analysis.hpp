#pragma once

#include <string>

#include "dq/brauer.hpp"

namespace dq {

struct AnalysisOptions {
  long height_bound = 10000;
  int precision_cap = 40;
};

// Everything the analyze command reports for one surface.
struct AnalysisDocument {
  std::array<Int, 4> input;
  Surface surface;
  std::size_t h_order = 0;
  bool h_meets_235 = false;
  TheoremReport theorem;
  Verdict verdict;  // carries locals, algebra and profiles
};

AnalysisDocument analyze(const std::array<Int, 4>& input,
                         const AnalysisOptions& opt = {});

// stable key-ordered JSON document
std::string to_json(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);

}  // namespace dq
