// Copyright 2026 The distnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distnum/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include "distnum/errors.hpp"

namespace distnum {

namespace {

using Clock = std::chrono::steady_clock;

struct Control {
  std::optional<Clock::time_point> deadline;
  std::function<bool()> should_stop;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

// Depth-first search over canonical labelings, point by point. Every
// non-identity element is tested once, at the largest point it moves:
// from then on its fate is decided, so a preserving element prunes the
// whole subtree.
class LabelingSearch {
 public:
  explicit LabelingSearch(const PermGroup& g) : m_(g.degree()), checks_at_(g.degree()) {
    for (std::size_t i = 1; i < g.order(); ++i) {
      const Permutation& e = g.element(i);
      const auto id = static_cast<std::uint32_t>(support_begin_.size());
      support_begin_.push_back(static_cast<std::uint32_t>(pairs_.size()));
      Point last = 0;
      for (std::size_t x = 0; x < m_; ++x) {
        if (e[x] != x) {
          pairs_.push_back({static_cast<Point>(x), e[x]});
          last = static_cast<Point>(x);
        }
      }
      checks_at_[last].push_back(id);
    }
    support_begin_.push_back(static_cast<std::uint32_t>(pairs_.size()));
  }

  std::size_t degree() const noexcept { return m_; }

  bool checks_pass(std::size_t i, const std::vector<Label>& labels) const {
    for (std::uint32_t id : checks_at_[i]) {
      if (preserves(id, labels)) return false;
    }
    return true;
  }

  bool all_pass(const std::vector<Label>& labels) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!checks_pass(i, labels)) return false;
    }
    return true;
  }

  // Extends labels[0..i) (using `used` distinct labels) with at most d labels.
  bool search(std::size_t d, std::vector<Label>& labels, std::size_t i, std::size_t used,
              Control& ctl) const {
    if ((++ctl.nodes & 0x3fff) == 0) {
      if (ctl.deadline && Clock::now() > *ctl.deadline) {
        throw BudgetExceeded("distinguishing-number search exceeded its time budget");
      }
      if (ctl.should_stop && ctl.should_stop()) ctl.aborted = true;
    }
    if (ctl.aborted) return false;
    if (i == m_) return true;
    const std::size_t top = std::min(used + 1, d);
    for (std::size_t v = 0; v < top; ++v) {
      labels[i] = static_cast<Label>(v);
      if (checks_pass(i, labels) && search(d, labels, i + 1, std::max(used, v + 1), ctl)) {
        return true;
      }
      if (ctl.aborted) return false;
    }
    return false;
  }

  struct Prefix {
    std::vector<Label> labels;
    std::size_t used;
  };

  void collect_prefixes(std::size_t d, std::size_t depth, std::vector<Label>& labels,
                        std::size_t i, std::size_t used, std::vector<Prefix>& out) const {
    if (i == depth) {
      out.push_back({labels, used});
      return;
    }
    const std::size_t top = std::min(used + 1, d);
    for (std::size_t v = 0; v < top; ++v) {
      labels[i] = static_cast<Label>(v);
      if (checks_pass(i, labels)) {
        collect_prefixes(d, depth, labels, i + 1, std::max(used, v + 1), out);
      }
    }
  }

 private:
  struct Pair {
    Point from;
    Point to;
  };

  bool preserves(std::uint32_t id, const std::vector<Label>& labels) const {
    for (std::uint32_t p = support_begin_[id]; p < support_begin_[id + 1]; ++p) {
      if (labels[pairs_[p].from] != labels[pairs_[p].to]) return false;
    }
    return true;
  }

  std::size_t m_;
  std::vector<std::vector<std::uint32_t>> checks_at_;
  std::vector<std::uint32_t> support_begin_;
  std::vector<Pair> pairs_;
};

Labeling to_labeling(const std::vector<Label>& zero_based, std::size_t d) {
  std::vector<Label> labels(zero_based.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = zero_based[i] + 1;
  return Labeling(std::move(labels), d);
}

std::optional<Clock::time_point> deadline_for(const std::optional<std::chrono::milliseconds>& b) {
  if (!b) return std::nullopt;
  return Clock::now() + *b;
}

std::optional<std::vector<Label>> run_sequential(const LabelingSearch& search, std::size_t d,
                                                 Control& ctl) {
  std::vector<Label> labels(search.degree(), 0);
  if (search.search(d, labels, 0, 0, ctl)) return labels;
  return std::nullopt;
}

std::optional<std::vector<Label>> run_parallel(const LabelingSearch& search, std::size_t d,
                                               unsigned threads, bool strict, Control& ctl) {
  using Prefix = LabelingSearch::Prefix;
  std::vector<Prefix> tasks;
  std::size_t depth = 0;
  {
    std::vector<Label> scratch(search.degree(), 0);
    while (depth < search.degree()) {
      ++depth;
      tasks.clear();
      search.collect_prefixes(d, depth, scratch, 0, 0, tasks);
      if (tasks.size() >= 8u * threads) break;
    }
  }
  if (tasks.empty()) return std::nullopt;

  constexpr std::size_t kNone = SIZE_MAX;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::vector<Label> witness;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size()) break;
        const std::size_t b = best.load();
        if (b != kNone && (!strict || idx > b)) {
          if (!strict) break;
          continue;
        }
        Control local;
        local.deadline = ctl.deadline;
        local.should_stop = [&, idx] {
          const std::size_t cur = best.load();
          return cur != kNone && (!strict || cur < idx);
        };
        std::vector<Label> labels = tasks[idx].labels;
        const bool ok = search.search(d, labels, depth, tasks[idx].used, local);
        nodes += local.nodes;
        if (ok) {
          std::lock_guard lock(mu);
          if (idx < best.load()) {
            best = idx;
            witness = labels;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      best = 0;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  ctl.nodes += nodes.load();
  if (failure) std::rethrow_exception(failure);
  if (best.load() == kNone) return std::nullopt;
  return witness;
}

std::optional<std::vector<Label>> run(const LabelingSearch& search, std::size_t d,
                                      const SolverOptions& options, Control& ctl) {
  if (ctl.deadline && Clock::now() >= *ctl.deadline) {
    throw BudgetExceeded("distinguishing-number search exceeded its time budget");
  }
  if (options.threads > 1 && search.degree() > 1) {
    return run_parallel(search, d, options.threads, options.strict_witness, ctl);
  }
  return run_sequential(search, d, ctl);
}

void check_degree(const PermGroup& g, std::size_t cap) {
  if (g.degree() > cap) {
    throw CapExceeded("degree " + std::to_string(g.degree()) + " exceeds the solver cap of " +
                      std::to_string(cap));
  }
}

}  // namespace

DistinguishingResult distinguishing_number(const PermGroup& g, const SolverOptions& options) {
  check_degree(g, options.max_degree);
  const LabelingSearch search(g);
  Control ctl;
  ctl.deadline = deadline_for(options.budget);
  const std::size_t max_d = std::max<std::size_t>(1, g.degree());
  for (std::size_t d = 1; d <= max_d; ++d) {
    if (auto labels = run(search, d, options, ctl)) {
      DistinguishingResult result;
      result.d = d;
      result.witness = to_labeling(*labels, d);
      result.exhausted = true;
      result.nodes = ctl.nodes;
      return result;
    }
  }
  // All-distinct labels always distinguish a faithful group.
  throw ValidationError("no distinguishing labeling found; the group is not faithful");
}

std::optional<Labeling> find_distinguishing_labeling(const PermGroup& g, std::size_t d,
                                                     const SolverOptions& options) {
  check_degree(g, options.max_degree);
  if (d == 0) return std::nullopt;
  const LabelingSearch search(g);
  Control ctl;
  ctl.deadline = deadline_for(options.budget);
  if (auto labels = run(search, d, options, ctl)) return to_labeling(*labels, d);
  return std::nullopt;
}

std::optional<PointSet> regular_set(const PermGroup& g, const RegularSetOptions& options) {
  check_degree(g, options.max_degree);
  const LabelingSearch search(g);
  const std::size_t m = g.degree();
  auto as_set = [](const std::vector<Label>& labels) {
    PointSet s;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      if (labels[x] == 1) s.push_back(static_cast<Point>(x));
    }
    return s;
  };

  std::mt19937_64 rng(options.seed);
  std::vector<Label> labels(m, 0);
  for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
    for (auto& l : labels) l = static_cast<Label>(rng() & 1u);
    if (search.all_pass(labels)) return as_set(labels);
  }

  Control ctl;
  ctl.deadline = deadline_for(options.budget);
  if (auto found = run_sequential(search, 2, ctl)) return as_set(*found);
  return std::nullopt;
}

}  // namespace distnum
