#pragma once

#include <string>
#include <vector>

#include "nakajima/grassmannian.hpp"
#include "nakajima/monad.hpp"
#include "nakajima/quiver.hpp"

namespace nakajima {

struct PipelineOptions {
  int max_k = 3;     // bidegrees (k, l) with k <= max_k
  int max_l = 3;     // and l <= max_l
  int bound_y = -1;  // y-truncation of the fat frame; -1 means max_l
  int jobs = 1;
};

struct PipelineResult {
  AdelicPoint point;
  FatModuleModel fat;
  std::vector<std::string> log;  // one line per stage
  bool raw_span_closed = false;  // specialized images already form a submodule
  PrimaryReport primary;
  bool diff_matches = false;  // Diff(U) equals the fat model
  SymbolReport symb;
  bool dim_ok = false;  // dim U = deg p * dim W
  bool ok() const { return primary.ok() && diff_matches && symb.is_base_point && dim_ok; }
};

// Quiver data -> monad -> trivialization -> fat module -> adelic point.
// Throws std::invalid_argument for inadmissible, unstable or non-generic input,
// and std::runtime_error when an identity fails along the way.
PipelineResult quiver_to_adelic(const QuiverData& d, const PipelineOptions& opt = {});

}  // namespace nakajima
