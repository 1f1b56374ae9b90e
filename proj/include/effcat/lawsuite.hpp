#pragma once

// Law-suite engine: runs a named suite of exhaustive checks against one
// instance over a configured world of base objects and produces a
// deterministic report.  Reports with identical configuration are
// byte-identical regardless of worker count.

#include <deque>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "effcat/instance.hpp"

namespace effcat {

enum class Verdict { pass, fail, skipped_overflow, incomplete_budget, inconclusive };
std::string verdict_name(Verdict v);

// law: universal statement, a failure is a bug or a refuted claim
// existence: a witness is searched for; finding one is a pass
// report: the verdict is recorded for its own sake and does not affect the
//         process exit status (used for genuinely open or negative results)
enum class LawKind { law, existence, report };
std::string law_kind_name(LawKind k);

struct LawResult {
  std::string id;
  std::string anchor;
  LawKind kind = LawKind::law;
  Verdict verdict = Verdict::pass;
  std::uint64_t cases_total = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t cases_skipped = 0;
  double coverage = 1.0;
  json witness;  // null unless a witness was recorded
  std::string note;

  json to_json() const;
};

struct SuiteSpec {
  std::string suite;
  InstanceConfig instance;
  std::map<std::string, std::uint64_t> sizes = {{"A", 2}, {"B", 2}};
  HomBudget budget;
  unsigned workers = 1;
};

struct LawReport {
  std::string suite;
  json config_echo;
  std::vector<LawResult> laws;

  /// 0 all pass, 1 a law/existence failure, 3 incomplete or inconclusive.
  int exit_severity() const;
  json to_json() const;
  std::string to_text() const;
};

/// Accumulates one law's tallies; thread-compatible via merge of locals.
class Law {
 public:
  Law(std::string id, std::string anchor, LawKind kind)
      : id_(std::move(id)), anchor_(std::move(anchor)), kind_(kind) {}

  bool ok() const { return fail_index_ == kNoFail; }
  void pass(std::uint64_t n = 1) { checked_ += n; }
  void skip(std::uint64_t n = 1) { skipped_ += n; }
  void fail(std::uint64_t case_index, const std::function<json()>& witness) {
    if (case_index < fail_index_) {
      fail_index_ = case_index;
      witness_ = witness();
    }
    ++checked_;
  }
  void check(std::uint64_t case_index, bool cond, const std::function<json()>& witness) {
    cond ? pass() : fail(case_index, witness);
  }
  bool found_any() const { return found_; }
  void found(json witness) {
    found_ = true;
    if (witness_.is_null()) witness_ = std::move(witness);
    ++checked_;
  }
  void incomplete(std::uint64_t required) {
    incomplete_ = true;
    required_ = required;
  }
  void note(std::string n) { note_ = std::move(n); }

  LawResult finalize() const;

 private:
  static constexpr std::uint64_t kNoFail = ~std::uint64_t{0};
  std::string id_, anchor_, note_;
  LawKind kind_;
  std::uint64_t checked_ = 0, skipped_ = 0;
  std::uint64_t fail_index_ = kNoFail;
  json witness_;
  bool found_ = false;
  bool incomplete_ = false;
  std::uint64_t required_ = 0;
};

/// Per-worker tally for deterministic parallel scans.
struct ParTally {
  std::uint64_t checked = 0, skipped = 0;
  std::uint64_t fail_index = ~std::uint64_t{0};
  json witness;

  void pass(std::uint64_t n = 1) { checked += n; }
  void skip(std::uint64_t n = 1) { skipped += n; }
  void fail(std::uint64_t i, const std::function<json()>& w) {
    if (i < fail_index) {
      fail_index = i;
      witness = w();
    }
    ++checked;
  }
  void check(std::uint64_t i, bool cond, const std::function<json()>& w) {
    cond ? pass() : fail(i, w);
  }
  void merge(const ParTally& o) {
    checked += o.checked;
    skipped += o.skipped;
    if (o.fail_index < fail_index) {
      fail_index = o.fail_index;
      witness = o.witness;
    }
  }
};

/// Splits [0,n) into contiguous chunks; the merged result is independent of
/// the worker count because failures are ranked by case index.
template <class Body>
ParTally parallel_scan(std::uint64_t n, unsigned workers, Body&& body) {
  if (workers <= 1 || n < 1024) {
    ParTally t;
    for (std::uint64_t i = 0; i < n; ++i) body(i, t);
    return t;
  }
  std::vector<ParTally> locals(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
      for (std::uint64_t i = lo; i < hi; ++i) body(i, locals[w]);
    });
  }
  for (auto& t : threads) t.join();
  ParTally out;
  for (const auto& l : locals) out.merge(l);
  return out;
}

/// Context handed to suite implementations.
class SuiteCtx {
 public:
  SuiteCtx(const EffectInstance& inst, std::vector<Obj> objects, HomBudget budget,
           unsigned workers)
      : inst_(inst),
        objects_(std::move(objects)),
        budget_(budget),
        workers_(workers),
        remaining_(budget.max_enumerations) {}

  const EffectInstance& inst() const { return inst_; }
  const std::vector<Obj>& objects() const { return objects_; }
  const HomBudget& budget() const { return budget_; }
  unsigned workers() const { return workers_; }

  Law& law(const std::string& id, const std::string& anchor, LawKind kind = LawKind::law) {
    laws_.emplace_back(id, anchor, kind);
    return laws_.back();
  }
  /// Deterministic budget gate: reserves `planned` enumerations up front.
  bool charge(Law& law, std::uint64_t planned) {
    if (planned > remaining_) {
      law.incomplete(planned);
      return false;
    }
    remaining_ -= planned;
    return true;
  }
  static void absorb(Law& law, const ParTally& t) {
    law.skip(t.skipped);
    if (t.fail_index != ~std::uint64_t{0}) {
      json w = t.witness;
      law.fail(t.fail_index, [&] { return w; });
      if (t.checked > 0) law.pass(t.checked - 1);
    } else {
      law.pass(t.checked);
    }
  }

  std::vector<LawResult> finalize() const;

 private:
  const EffectInstance& inst_;
  std::vector<Obj> objects_;
  HomBudget budget_;
  unsigned workers_;
  std::uint64_t remaining_;
  std::deque<Law> laws_;
};

std::vector<std::string> suite_ids();
bool suite_valid_for(const std::string& suite, const std::string& tag);
LawReport run_suite(const SuiteSpec& spec);

/// Re-evaluates a recorded failure witness against a freshly built instance.
/// Returns true when the failure is reproduced.  Throws structural_error when
/// the witness does not fit the configuration echoed in the report.
bool recheck_witness(const json& report, const json& law_entry);

}  // namespace effcat
