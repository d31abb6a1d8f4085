#include "monocurve/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "monocurve/criteria.hpp"
#include "monocurve/json_io.hpp"
#include "monocurve/parallel.hpp"

namespace monocurve {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail(errc::invalid_argument, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (bound - 1);
  for (;;) {
    std::uint64_t x = rng();
    std::uint64_t r = x % bound;
    if (x - r <= limit) return r;
  }
}

std::vector<Sequence> enumerate_sequences(std::size_t n, std::int64_t an_max) {
  if (n < 2) fail(errc::invalid_argument, "n must be at least 2");
  if (an_max < static_cast<std::int64_t>(n)) return {};
  std::vector<Sequence> out;
  std::vector<std::int64_t> prefix;
  for (std::int64_t an = static_cast<std::int64_t>(n); an <= an_max; ++an) {
    prefix.clear();
    auto rec = [&](auto&& self, std::size_t depth) -> void {
      if (depth == n - 1) {
        std::int64_t g = an;
        for (auto x : prefix) g = std::gcd(g, x);
        if (g != 1) return;
        std::vector<std::int64_t> e = prefix;
        e.push_back(an);
        out.push_back(Sequence::validate(std::move(e)));
        return;
      }
      for (std::int64_t v = 1; v < an; ++v) {
        if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
        prefix.push_back(v);
        self(self, depth + 1);
        prefix.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<Sequence> random_sequences(std::size_t n, std::int64_t an_max, std::size_t count,
                                       std::uint64_t seed) {
  if (n < 2) fail(errc::invalid_argument, "n must be at least 2");
  if (an_max < static_cast<std::int64_t>(n))
    fail(errc::invalid_argument, "an_max too small for the requested length");
  std::mt19937_64 rng(seed);
  std::vector<Sequence> out;
  out.reserve(count);
  while (out.size() < count) {
    std::int64_t an = static_cast<std::int64_t>(n) +
                      static_cast<std::int64_t>(uniform_below(
                          rng, static_cast<std::uint64_t>(an_max - n + 1)));
    std::set<std::int64_t> used;
    std::vector<std::int64_t> e;
    while (e.size() < n - 1) {
      std::int64_t v =
          1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(an - 1)));
      if (used.insert(v).second) e.push_back(v);
    }
    e.push_back(an);
    std::int64_t g = 0;
    for (auto x : e) g = std::gcd(g, x);
    if (g != 1) continue;
    out.push_back(Sequence::validate(std::move(e)));
  }
  return out;
}

SweepOutput run_sweep(const SweepOptions& opt) {
  std::vector<Sequence> inputs =
      opt.exhaustive ? enumerate_sequences(opt.n, opt.an_max)
                     : random_sequences(opt.n, opt.an_max, opt.count, opt.seed);
  std::vector<std::string> lines(inputs.size());
  std::vector<char> verdicts(inputs.size(), 0);
  parallel_for(inputs.size(), opt.jobs, [&](std::size_t i) {
    AcmReport rep = is_acm(inputs[i]);
    verdicts[i] = rep.verdict ? 1 : 0;
    lines[i] = report_to_json(rep).dump();
  });
  SweepOutput out;
  out.total = inputs.size();
  std::ostringstream os;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    os << lines[i] << "\n";
    if (verdicts[i]) ++out.acm;
  }
  json summary;
  summary["sequences"] = out.total;
  summary["acm"] = out.acm;
  summary["ratio"] = out.total == 0 ? 0.0
                                    : static_cast<double>(out.acm) / static_cast<double>(out.total);
  os << summary.dump() << "\n";
  out.jsonl = os.str();
  return out;
}

}  // namespace monocurve
