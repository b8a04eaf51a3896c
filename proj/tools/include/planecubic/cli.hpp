#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "planecubic/detrep.hpp"
#include "planecubic/discgroup.hpp"
#include "planecubic/fourfold.hpp"

namespace planecubic::cli {

enum class OutputMode { kHuman, kJson };

struct RunConfig {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t scan_prime_cap = kDefaultScanPrimeCap;
  OutputMode output = OutputMode::kHuman;
  LongRootScope long_root_variant = LongRootScope::kCoset;
};

/// Grammar printed on usage errors.
std::string grammar();

/// Runs one invocation; args excludes the program name. Returns 0 on success,
/// 2 on usage or precondition errors, 1 on internal invariant violations and
/// failed reproduction checks.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planecubic::cli
