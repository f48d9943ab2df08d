#pragma once

#include <string>
#include <vector>

namespace quotbn {

/// One recorded deviation between the engine's normalized conventions and
/// expansions of the same classes as commonly printed. Informational output:
/// the engine never silently rewrites a printed formula, it reports both
/// sides.
struct LedgerEntry {
  std::string id;
  std::string printed;
  std::string engine;
  std::string note;
};

const std::vector<LedgerEntry>& reference_ledger();

}  // namespace quotbn
