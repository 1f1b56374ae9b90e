#include "effcat/evlogic.hpp"

#include <algorithm>

namespace effcat {

bool evlogic_supported(const std::string& tag) {
  return tag == "error" || tag == "partiality" || tag == "state" || tag == "list" ||
         tag == "powerset";
}

bool results_in(const EffectInstance& inst, const SemFun& c, std::uint64_t a) {
  const std::string& tag = inst.tag();
  if (!evlogic_supported(tag))
    throw config_error("results-in is not defined for instance '" + tag + "'");
  for (const SemVal& v : c.vals) {
    if (tag == "error" || tag == "partiality") {
      if (v.s0 == 0 && v.s1 == a) return true;
    } else if (tag == "state") {
      if (v.s1 == a) return true;
    } else if (tag == "powerset") {
      if (a < 64 && (v.s0 >> a) & 1) return true;
    } else {  // list
      if (std::find(v.seq.begin(), v.seq.end(), static_cast<std::uint32_t>(a)) != v.seq.end())
        return true;
    }
  }
  return false;
}

}  // namespace effcat
