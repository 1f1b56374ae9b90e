#pragma once

// Evaluation-logic view: the "results in" predicate on closed computations
// (morphisms out of the terminal object) and its comparison with the
// consistency relation.  Supported for error/partiality, state, list and
// powerset; the multiset instance has no standard reading and is rejected.

#include "effcat/instance.hpp"

namespace effcat {

/// c results in a: the computation can terminate with value a.
///   error/partiality: c is the value a
///   state: some start state yields value a
///   list/powerset: a occurs among the produced values
bool results_in(const EffectInstance& inst, const SemFun& c, std::uint64_t a);

bool evlogic_supported(const std::string& tag);

}  // namespace effcat
