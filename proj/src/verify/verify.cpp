#include "euclid/verify/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "euclid/error.hpp"

namespace euclid::verify {

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& sig : elements::signatures()) {
    std::mt19937_64 rng(0);
    try {
      generate(sig.id, rng);
      out.push_back(sig.id);
    } catch (const UnknownProposition&) {
    }
  }
  return out;
}

namespace {

enum class Status { Passed, Failed, Skipped };

struct Outcome {
  Status status = Status::Skipped;
  std::string message;
  elements::Counts counts;
};

std::string joined_id(const std::string& base, const std::string& strategy) {
  return strategy.empty() ? base : base + "." + strategy;
}

Outcome run_one(const std::string& id, const Instance& inst) {
  Outcome o;
  try {
    auto r = elements::invoke(id, inst.args, inst.side);
    o.counts = r.trace.total();
    o.status = Status::Passed;
    for (const auto& c : r.verification) {
      if (!c.pass) {
        o.status = Status::Failed;
        o.message = "claim failed: " + c.text + " (residual " + c.residual + ")";
        break;
      }
    }
  } catch (const StrategyInapplicable& e) {
    o.status = Status::Skipped;
    o.message = e.what();
  } catch (const Error& e) {
    o.status = Status::Failed;
    o.message = e.kind() + std::string(": ") + e.what();
  } catch (const std::exception& e) {
    o.status = Status::Failed;
    o.message = e.what();
  }
  return o;
}

}  // namespace

SuiteReport run_suite(const std::string& id, int n, std::uint64_t seed, std::vector<std::string> strategies,
                      unsigned threads) {
  std::string suffix;
  const elements::Signature* sig = elements::find_signature(id, &suffix);
  if (!sig) throw UnknownProposition("unknown proposition " + id);
  if (!suffix.empty()) strategies = {suffix};
  if (strategies.empty()) strategies = sig->strategies;
  if (strategies.empty()) strategies = {""};
  for (const auto& s : strategies) {
    if (!s.empty() && std::find(sig->strategies.begin(), sig->strategies.end(), s) == sig->strategies.end()) {
      throw StrategyInapplicable(sig->id + " has no strategy '" + s + "'");
    }
  }

  // Generate first so that a missing generator is reported before any work.
  std::vector<Instance> instances;
  instances.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto rng = instance_rng(seed, static_cast<std::uint64_t>(i), sig->id);
    instances.push_back(generate(sig->id, rng));
  }

  const std::size_t jobs = static_cast<std::size_t>(n) * strategies.size();
  std::vector<Outcome> outcomes(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next++) < jobs;) {
      std::size_t s = j / n;
      std::size_t i = j % n;
      outcomes[j] = run_one(joined_id(sig->id, strategies[s]), instances[i]);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport rep;
  rep.id = id;
  rep.instances = n;
  rep.seed = seed;
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    StrategyStats st;
    st.strategy = strategies[s];
    for (int i = 0; i < n; ++i) {
      const Outcome& o = outcomes[s * n + i];
      if (o.status == Status::Skipped) {
        ++st.skipped;
        continue;
      }
      if (o.status == Status::Passed) ++st.passed;
      else {
        ++st.failed;
        st.failures.push_back("instance " + std::to_string(i) + ": " + o.message);
      }
      st.joins += o.counts.joins;
      st.extends += o.counts.extends;
      st.circles += o.counts.circles;
      st.superpositions += o.counts.superpositions;
      st.objects += o.counts.objects;
      st.max_radical_depth = std::max(st.max_radical_depth, o.counts.max_radical_depth);
      int sp = o.counts.superpositions;
      st.min_superpositions = st.min_superpositions < 0 ? sp : std::min(st.min_superpositions, sp);
      st.max_superpositions = std::max(st.max_superpositions, sp);
    }
    rep.strategies.push_back(std::move(st));
  }
  return rep;
}

bool SuiteReport::ok() const {
  return std::all_of(strategies.begin(), strategies.end(), [](const StrategyStats& s) { return s.failed == 0; });
}

namespace {

std::string label(const std::string& id, const std::string& strategy) {
  std::string base = id;
  if (!strategy.empty()) {
    std::string suffix;
    const auto* sig = elements::find_signature(id, &suffix);
    base = joined_id(sig ? sig->id : id, strategy);
  }
  return base;
}

}  // namespace

std::string SuiteReport::text() const {
  std::ostringstream out;
  for (const auto& s : strategies) {
    out << label(id, s.strategy) << ": " << s.passed << "/" << instances << " passed";
    if (s.failed) out << ", " << s.failed << " failed";
    if (s.skipped) out << ", " << s.skipped << " skipped";
    out << " (seed " << seed << ")\n";
    for (const auto& f : s.failures) out << "  " << f << "\n";
    int ran = s.passed + s.failed;
    if (ran > 0) {
      out << "  postulate 1: " << s.joins << "  postulate 2: " << s.extends << "  postulate 3: " << s.circles
          << "\n";
      out << "  superpositions: " << s.superpositions << " (per instance " << s.min_superpositions << ".."
          << s.max_superpositions << ")\n";
      out << "  max radical depth: " << s.max_radical_depth << "  objects: " << s.objects << "\n";
    }
  }
  return out.str();
}

std::string SuiteReport::records() const {
  std::ostringstream out;
  for (const auto& s : strategies) {
    out << "id=" << label(id, s.strategy) << " instances=" << instances << " seed=" << seed << " passed=" << s.passed
        << " failed=" << s.failed << " skipped=" << s.skipped << " joins=" << s.joins << " extends=" << s.extends
        << " circles=" << s.circles << " superpositions=" << s.superpositions
        << " min_superpositions=" << s.min_superpositions << " max_superpositions=" << s.max_superpositions
        << " max_radical_depth=" << s.max_radical_depth << " objects=" << s.objects << "\n";
  }
  return out.str();
}

ComparisonReport compare(const std::string& id, const std::vector<std::string>& strategies, const Instance& inst) {
  std::string suffix;
  const elements::Signature* sig = elements::find_signature(id, &suffix);
  if (!sig) throw UnknownProposition("unknown proposition " + id);
  std::vector<std::string> names = strategies.empty() ? sig->strategies : strategies;
  if (names.empty()) names = {""};
  ComparisonReport rep;
  rep.id = sig->id;
  for (const auto& s : names) {
    StrategyRun run;
    run.strategy = s;
    try {
      run.result = elements::invoke(joined_id(sig->id, s), inst.args, inst.side);
      run.ran = true;
    } catch (const Error& e) {
      run.error_kind = e.kind();
      run.error = e.what();
    }
    rep.runs.push_back(std::move(run));
  }
  return rep;
}

bool ComparisonReport::ok() const {
  for (const auto& r : runs) {
    if (!r.ran) continue;
    for (const auto& c : r.result.verification) {
      if (!c.pass) return false;
    }
  }
  return true;
}

std::string ComparisonReport::text() const {
  std::ostringstream out;
  for (const auto& r : runs) {
    out << joined_id(id, r.strategy) << ": ";
    if (!r.ran) {
      out << "not applicable (" << r.error_kind << ": " << r.error << ")\n";
      continue;
    }
    auto c = r.result.trace.total();
    bool pass = std::all_of(r.result.verification.begin(), r.result.verification.end(),
                            [](const elements::Claim& k) { return k.pass; });
    out << (pass ? "PASS" : "FAIL") << "  postulate 1: " << c.joins << "  postulate 2: " << c.extends
        << "  postulate 3: " << c.circles << "  superpositions: " << c.superpositions
        << "  max radical depth: " << c.max_radical_depth << "\n";
    for (const auto& [name, obj] : r.result.objects) {
      out << "  " << name << " = " << elements::describe(obj) << "\n";
    }
  }
  return out.str();
}

std::string ComparisonReport::records() const {
  std::ostringstream out;
  for (const auto& r : runs) {
    out << "id=" << joined_id(id, r.strategy) << " ran=" << (r.ran ? 1 : 0);
    if (!r.ran) {
      out << " error=" << r.error_kind << "\n";
      continue;
    }
    auto c = r.result.trace.total();
    int failed = 0;
    for (const auto& k : r.result.verification) failed += k.pass ? 0 : 1;
    out << " claims=" << r.result.verification.size() << " failed=" << failed << " joins=" << c.joins
        << " extends=" << c.extends << " circles=" << c.circles << " superpositions=" << c.superpositions
        << " max_radical_depth=" << c.max_radical_depth << " objects=" << c.objects << "\n";
  }
  return out.str();
}

}  // namespace euclid::verify
