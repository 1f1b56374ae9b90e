#pragma once

#include "effcat/arrows.hpp"
#include "effcat/lawsuite.hpp"

namespace effcat::suites {

void consistency_axioms(SuiteCtx& ctx);
void extended_consistency(SuiteCtx& ctx);
void monad_laws(SuiteCtx& ctx);
void semipure_universal(SuiteCtx& ctx);
void product_props(SuiteCtx& ctx);
void centrality(SuiteCtx& ctx);
void functoriality(SuiteCtx& ctx);
void naturality(SuiteCtx& ctx);
void sequential_property(SuiteCtx& ctx);
void strength_theorem(SuiteCtx& ctx);
void arrow_laws(SuiteCtx& ctx);
/// Runs the Arrow laws against explicit combinators (used to exercise the
/// deliberately broken variants in tests).
void arrow_laws_impl(SuiteCtx& ctx, const ArrowOps& ops);
void evlogic_compare(SuiteCtx& ctx);

}  // namespace effcat::suites
