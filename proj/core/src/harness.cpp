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

#include "distnum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "distnum/constructions.hpp"
#include "distnum/errors.hpp"
#include "distnum/formula.hpp"
#include "distnum/group_io.hpp"
#include "json.hpp"

namespace distnum {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

// Runs tasks on `jobs` workers; results keep the task order.
std::vector<VerificationRecord> run_cases(
    const std::vector<std::function<VerificationRecord()>>& tasks, unsigned jobs) {
  std::vector<VerificationRecord> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void fill_common(VerificationRecord& rec, const PermGroup& g) {
  rec.degree = g.degree();
  rec.order = g.order();
  rec.orbit_sizes = orbit_sizes(g);
}

void solve_into(VerificationRecord& rec, const PermGroup& g, const SolverOptions& solver) {
  const auto start = Clock::now();
  const DistinguishingResult result = distinguishing_number(g, solver);
  rec.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  rec.solver_d = result.d;
  rec.witness = result.witness.to_string();
  rec.nodes = result.nodes;
}

std::vector<std::size_t> parse_numbers(std::string_view args, std::string_view spec) {
  std::vector<std::size_t> out;
  while (!args.empty()) {
    const auto comma = args.find(',');
    const std::string_view piece = args.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw InputError("bad number '" + std::string(piece) + "' in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string flag(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "yes" : "NO";
}

std::string number(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

json profile_json(const std::optional<OrbitProfile>& p) {
  if (!p) return nullptr;
  return json{{"n", p->n}, {"k", p->k}, {"r", p->r}, {"s", p->s}, {"t", p->t}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return json(*v);
}

}  // namespace

bool VerificationReport::all_match() const {
  return std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) {
    return r.match && r.constructive_ok.value_or(true) && r.tight_ok.value_or(true);
  });
}

bool no_labeling_with(const PermGroup& g, std::size_t labels) {
  if (labels == 0) return g.degree() > 0 || !g.is_trivial();
  bool none = true;
  for_each_canonical_labeling(g.degree(), labels, [&](std::span<const Label> l) {
    if (is_distinguishing(g, Labeling({l.begin(), l.end()}, labels))) none = false;
    return none;
  });
  return none;
}

VerificationReport run_table1(std::size_t t_max, std::size_t s_max,
                              const HarnessOptions& options) {
  if (t_max > 2 || s_max > 2) throw InputError("table1 supports t_max, s_max <= 2");
  HarnessOptions opts = options;
  // The largest rows reach degree 12 + 2 * 2 + 2 = 18.
  opts.solver.max_degree = std::max<std::size_t>(opts.solver.max_degree, 18);
  std::vector<std::function<VerificationRecord()>> tasks;
  for (const auto& entry : table1_entries()) {
    std::vector<std::size_t> s_values{0};
    if (entry.takes_s) {
      s_values.clear();
      for (std::size_t s = entry.s_min; s <= s_max; ++s) s_values.push_back(s);
    }
    for (std::size_t s : s_values) {
      for (std::size_t t = 0; t <= t_max; ++t) {
        tasks.push_back([&entry, s, t, opts] {
          VerificationRecord rec;
          rec.case_id = std::string(entry.id);
          if (entry.takes_s) rec.case_id += " s=" + std::to_string(s);
          rec.case_id += " t=" + std::to_string(t);
          rec.group = std::string(entry.name);
          const PermGroup g = table1_group(entry.row, s, t);
          fill_common(rec, g);
          try {
            rec.profile = orbit_profile(g, entry.n);
            rec.predicted = predicted_d(*rec.profile);
          } catch (const LargeOrbit&) {
          }
          rec.expected = entry.d;
          solve_into(rec, g, opts.solver);
          rec.match = rec.solver_d == entry.d;
          if (g.degree() <= 14) rec.tight_ok = no_labeling_with(g, rec.solver_d - 1);
          return rec;
        });
      }
    }
  }
  return {"table1", run_cases(tasks, opts.jobs)};
}

std::vector<OrbitProfile> grid_profiles(const GridSpec& spec) {
  std::vector<OrbitProfile> out;
  for (std::size_t n = std::max<std::size_t>(spec.n_min, 3); n <= spec.n_max; ++n) {
    for (std::size_t k = spec.k_min; k <= spec.k_max; ++k) {
      for (std::size_t r = 0; r <= spec.r_max; ++r) {
        for (std::size_t s = 0; s <= spec.s_max; ++s) {
          for (std::size_t t = 0; t <= spec.t_max; ++t) {
            const OrbitProfile p{n, k, r, s, t};
            if (p.is_faithful() && p.degree() <= spec.max_degree) out.push_back(p);
          }
        }
      }
    }
  }
  return out;
}

VerificationReport run_formula_grid(const GridSpec& spec, const HarnessOptions& options) {
  if (spec.n_max > 8) throw InputError("grid supports n <= 8");
  HarnessOptions opts = options;
  opts.solver.max_degree = std::max(opts.solver.max_degree, spec.max_degree);
  std::vector<std::function<VerificationRecord()>> tasks;
  for (const OrbitProfile& p : grid_profiles(spec)) {
    tasks.push_back([p, opts] {
      VerificationRecord rec;
      rec.case_id = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
                    " r=" + std::to_string(p.r) + " s=" + std::to_string(p.s) +
                    " t=" + std::to_string(p.t);
      rec.group = "formula" + p.to_string();
      const FormulaGroup fg = formula_group(p);
      fill_common(rec, fg.group);
      rec.profile = p;
      rec.predicted = predicted_d(p);
      rec.expected = rec.predicted;
      solve_into(rec, fg.group, opts.solver);
      rec.match = rec.solver_d == *rec.predicted;
      const std::size_t d = *rec.predicted;
      try {
        const Labeling l = p.r + p.s == 0 ? product_labeling(p.n, p.k, p.t, d)
                                          : alternating_labeling(p, d);
        rec.constructive_ok = is_distinguishing(fg.group, l);
      } catch (const Infeasible&) {
        rec.constructive_ok = false;
      }
      rec.tight_ok = no_labeling_with(fg.group, d - 1);
      return rec;
    });
  }
  return {"grid", run_cases(tasks, opts.jobs)};
}

VerificationRecord compute_record(std::string case_id, std::string description,
                                  const PermGroup& g, std::optional<std::size_t> expected,
                                  const HarnessOptions& options) {
  VerificationRecord rec;
  rec.case_id = std::move(case_id);
  rec.group = std::move(description);
  fill_common(rec, g);
  if (symmetric_degree(g).value_or(0) <= 7 && symmetric_degree(g)) {
    ClassifyOptions copts;
    copts.solver = options.solver;
    copts.cross_check = false;
    const Classification c = classify(g, copts);
    rec.profile = c.profile;
    if (c.profile && c.profile->is_faithful()) rec.predicted = predicted_d(*c.profile);
    if (!expected) expected = c.d;
  }
  rec.expected = expected;
  solve_into(rec, g, options.solver);
  rec.match = !expected || *expected == rec.solver_d;
  return rec;
}

BuiltGroup build_group(std::string_view spec, std::size_t fixed) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::vector<std::size_t> args =
      colon == std::string_view::npos ? std::vector<std::size_t>{}
                                      : parse_numbers(spec.substr(colon + 1), spec);
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw InputError("builder '" + std::string(name) + "' takes " + std::to_string(lo) +
                       (lo == hi ? "" : "-" + std::to_string(hi)) + " numeric argument(s)");
    }
  };
  BuiltGroup out{PermGroup(), std::string(spec), std::nullopt};
  if (name == "sym") {
    need(1, 1);
    out.group = symmetric_natural(args[0]);
  } else if (name == "alt") {
    need(1, 1);
    out.group = alternating_natural(args[0]);
  } else if (name == "cyclic") {
    need(1, 1);
    out.group = cyclic_natural(args[0]);
  } else if (name == "s4-6c") {
    need(0, 0);
    out.group = s4_6c();
    out.expected = 3;
  } else if (name == "s4-6d") {
    need(0, 0);
    out.group = s4_6d();
    out.expected = 3;
  } else if (name == "s4-k4-s3") {
    need(0, 0);
    out.group = s4_k4_s3();
    out.expected = 3;
  } else if (name == "s4-k4-s3-on-10") {
    need(0, 0);
    out.group = s4_k4_s3_on_10();
  } else if (name == "pgl25") {
    need(0, 0);
    out.group = pgl25();
    out.expected = 4;
  } else if (name == "psl25") {
    need(0, 0);
    out.group = psl25();
  } else if (name == "pgl25-psl-s2") {
    need(1, 1);
    out.group = table1_group(Table1Row::PGL25_PSL_S2, args[0], 0);
    out.expected = 3;
  } else if (name == "s6-on-10") {
    need(0, 0);
    out.group = s6_on_10();
    out.expected = 3;
  } else if (name == "s6-10-s2") {
    need(1, 1);
    out.group = table1_group(Table1Row::S6_10, args[0], 0);
    out.expected = 3;
  } else if (name == "s6-psi-s6") {
    need(0, 1);
    out.group = table1_group(Table1Row::S6_psi_S6, args.empty() ? 0 : args[0], 0);
    out.expected = 3;
  } else if (name == "sn-on-2n") {
    need(1, 1);
    out.group = sn_on_2n(args[0]);
  } else if (name == "petersen-aut") {
    need(0, 0);
    out.group = petersen_aut();
    out.expected = 3;
  } else if (name == "parallel") {
    need(2, 2);
    out.group = parallel_power(symmetric_natural(args[0]), args[1]);
  } else if (name == "formula") {
    need(5, 5);
    out.group = formula_group({args[0], args[1], args[2], args[3], args[4]}).group;
  } else {
    std::ifstream in{std::string(spec)};
    if (!in) {
      throw InputError("'" + std::string(spec) + "' is neither a builder nor a readable file");
    }
    try {
      out.group = read_group(in);
    } catch (const InputError& e) {
      throw InputError(std::string(spec) + ": " + e.what());
    }
  }
  if (fixed > 0) {
    out.group = with_fixed_points(out.group, fixed);
    out.description += " + I_" + std::to_string(fixed);
  }
  return out;
}

std::string format_text(const VerificationReport& report, bool include_timing) {
  std::vector<std::string> header{"case",   "degree", "order", "profile", "pred",
                                  "expect", "D",      "ok",    "constr",  "tight",
                                  "witness"};
  if (include_timing) header.push_back("ms");
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& r : report.records) {
    std::vector<std::string> row{r.case_id,
                                 std::to_string(r.degree),
                                 std::to_string(r.order),
                                 r.profile ? r.profile->to_string() : "-",
                                 number(r.predicted),
                                 number(r.expected),
                                 std::to_string(r.solver_d),
                                 r.match ? "yes" : "NO",
                                 flag(r.constructive_ok),
                                 flag(r.tight_ok),
                                 r.witness};
    if (include_timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << r.wall_ms;
      row.push_back(ms.str());
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  const auto failures = std::count_if(report.records.begin(), report.records.end(),
                                      [](const VerificationRecord& r) {
                                        return !(r.match && r.constructive_ok.value_or(true) &&
                                                 r.tight_ok.value_or(true));
                                      });
  out += report.title + ": " + std::to_string(report.records.size()) + " cases, " +
         std::to_string(failures) + " failed\n";
  return out;
}

std::string format_jsonl(const VerificationReport& report, bool include_timing) {
  std::string out;
  for (const auto& r : report.records) {
    json j{{"report", report.title},
           {"case", r.case_id},
           {"group", r.group},
           {"degree", r.degree},
           {"order", r.order},
           {"orbit_sizes", r.orbit_sizes},
           {"profile", profile_json(r.profile)},
           {"predicted", optional_json(r.predicted)},
           {"expected", optional_json(r.expected)},
           {"solver_d", r.solver_d},
           {"match", r.match},
           {"constructive_ok", optional_json(r.constructive_ok)},
           {"tight_ok", optional_json(r.tight_ok)},
           {"witness", r.witness}};
    if (include_timing) {
      j["nodes"] = r.nodes;
      j["wall_ms"] = r.wall_ms;
    }
    out += j.dump() + "\n";
  }
  return out;
}

std::string format_text(const Classification& c) {
  std::string out;
  out += "n:           " + std::to_string(c.n) + "\n";
  out += "orbit sizes: " + join(c.orbit_sizes) + "\n";
  out += "kind:        " + std::string(to_string(c.kind)) + "\n";
  if (c.profile) out += "profile:     " + c.profile->to_string() + "\n";
  if (c.row) {
    const auto& e = table1_entry(*c.row);
    out += "table row:   " + std::string(e.name) + " (s=" + std::to_string(c.row_s) +
           ", t=" + std::to_string(c.row_t) + ")\n";
  }
  if (c.regular_set) {
    std::vector<std::size_t> pts;
    for (Point p : *c.regular_set) pts.push_back(static_cast<std::size_t>(p) + 1);
    out += "regular set: {" + join(pts) + "}\n";
  }
  out += "D:           " + number(c.d) + "\n";
  out += "solver D:    " + number(c.solver_d) + "\n";
  if (!c.note.empty()) out += "note:        " + c.note + "\n";
  return out;
}

std::string format_json(const Classification& c) {
  json j{{"n", c.n},
         {"orbit_sizes", c.orbit_sizes},
         {"kind", std::string(to_string(c.kind))},
         {"profile", profile_json(c.profile)},
         {"row", c.row ? json(std::string(table1_entry(*c.row).id)) : json(nullptr)},
         {"d", optional_json(c.d)},
         {"solver_d", optional_json(c.solver_d)},
         {"consistent", c.consistent()}};
  if (c.row) {
    j["row_s"] = c.row_s;
    j["row_t"] = c.row_t;
  }
  if (c.regular_set) {
    std::vector<std::size_t> pts;
    for (Point p : *c.regular_set) pts.push_back(static_cast<std::size_t>(p) + 1);
    j["regular_set"] = pts;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j.dump();
}

}  // namespace distnum
