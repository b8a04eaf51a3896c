#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planecubic/cli.hpp"
#include "planecubic/io.hpp"

namespace planecubic::cli {

struct Check {
  std::string name;
  bool pass = false;
  io::Json detail;
  std::string claim;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;

  bool all_pass() const;
  io::Json result_json() const;
  io::Json citations() const;
};

Suite repro_exe(const RunConfig& config);
Suite repro_p369(const RunConfig& config);
Suite repro_mainteo(const RunConfig& config);

/// U with Uᵀ·G_from·U = G_to, det U = ±1 and entries in [−box, box].
std::optional<IntMatrix> rank2_isometry(const Lattice& from, const Lattice& to, int box);

}  // namespace planecubic::cli
