#include "lamplight/oracle.hpp"

namespace lamplight {

std::string to_string(const VerifyReport& report) {
  std::string out = "checked=" + std::to_string(report.checked) +
                    " mismatches=" + std::to_string(report.mismatches);
  if (report.mismatches > 0) out += " first=" + report.first_mismatch;
  return out;
}

std::string to_string(const DepthResult& depth) {
  if (depth.exact) return std::to_string(depth.value);
  return ">=" + std::to_string(depth.value);
}

}  // namespace lamplight
