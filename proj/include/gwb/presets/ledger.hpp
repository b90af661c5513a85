#pragma once

#include <string>
#include <vector>

namespace gwb {

/// total = base + relative, e.g. the shift of a composite of Gorenstein maps.
struct ShiftEntry {
  std::string name;
  long total = 0;
  long base = 0;
  long relative = 0;
  std::string note;
};

using ShiftLedger = std::vector<ShiftEntry>;

inline ShiftLedger default_shift_ledger() {
  return {
      {"ko", -6, -4, -2, "ko -> F_p Gorenstein of shift -6; ku -> F_p shift -4; ko -> ku relatively Gorenstein of shift -2"},
      {"tmf@3", -22, -14, -8, "tmf -> F_3 of shift -22 from shift -14 and relative shift -8"},
      {"tmf@2", -22, -10, -12, "tmf -> F_2 of shift -22 from shift -10 and relative shift -12"},
      {"identity", 0, 0, 0, "identity map"},
  };
}

/// Entries whose addition fails.
inline std::vector<std::string> shift_ledger_check(const ShiftLedger& ledger) {
  std::vector<std::string> out;
  for (const auto& e : ledger)
    if (e.total != e.base + e.relative)
      out.push_back(e.name + ": " + std::to_string(e.total) + " != " + std::to_string(e.base) + " + " + std::to_string(e.relative));
  return out;
}

}  // namespace gwb
