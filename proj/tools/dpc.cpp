// dpc: command-line front end for the partial isometry monoids of cycle graphs.
//
// Exit status: 0 all checks pass, 1 a verification failed, 2 usage error,
// 3 an enumeration ran out of its slot budget.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dpc/builders.hpp"
#include "dpc/congruence.hpp"
#include "dpc/green.hpp"
#include "dpc/io.hpp"
#include "dpc/lemmas.hpp"
#include "dpc/presentation.hpp"
#include "dpc/rank.hpp"

namespace {

  using json = nlohmann::ordered_json;

  enum Exit : int { ok = 0, failed = 1, usage = 2, inconclusive = 3 };

  struct RunConfig {
    std::size_t n = 0;
    std::string n_range;
    std::string method   = "restrictions";
    std::string relation = "J";
    std::string which    = "R";
    std::string out;
    std::string cache_dir;
    std::size_t max_slots = 0;  // 0: 64 x |DPC_n|
    std::size_t jobs      = 1;
    bool        check_formula    = false;
    bool        verify_oracle    = false;
    bool        exhaustive_pairs = false;
  };

  struct Range {
    std::size_t lo, hi;
  };

  // "A..B" or "A".
  Range parse_range(std::string const& s) {
    auto const dots = s.find("..");
    try {
      std::size_t pos = 0;
      if (dots == std::string::npos) {
        std::size_t const v = std::stoul(s, &pos);
        if (pos != s.size()) {
          throw std::invalid_argument(s);
        }
        return {v, v};
      }
      std::string const a = s.substr(0, dots), b = s.substr(dots + 2);
      std::size_t const lo = std::stoul(a, &pos);
      if (pos != a.size()) {
        throw std::invalid_argument(s);
      }
      std::size_t const hi = std::stoul(b, &pos);
      if (pos != b.size()) {
        throw std::invalid_argument(s);
      }
      return {lo, hi};
    } catch (std::logic_error const&) {
      throw dpc::usage_error("--n expects N or A..B, got '" + s + "'");
    }
  }

  void require_n(std::size_t n) {
    if (n < 3) {
      throw dpc::usage_error("--n must be at least 3 (got " + std::to_string(n)
                             + ")");
    }
  }

  std::filesystem::path cache_dir_of(RunConfig const& cfg) {
    return cfg.cache_dir.empty() ? dpc::default_cache_dir()
                                 : std::filesystem::path(cfg.cache_dir);
  }

  dpc::BuildMethod method_of(RunConfig const& cfg) {
    auto m = dpc::parse_build_method(cfg.method);
    if (!m) {
      throw dpc::usage_error("--method must be restrictions, closure or "
                             "bruteforce, got '" + cfg.method + "'");
    }
    return *m;
  }

  dpc::FiniteMonoid obtain(RunConfig const& cfg, std::size_t n,
                           dpc::BuildMethod method) {
    auto const dir = cache_dir_of(cfg);
    if (dir.empty()) {
      return dpc::build(n, method);
    }
    return dpc::EnumerationCache(dir).get_or_build(n, method);
  }

  std::size_t budget_of(RunConfig const& cfg, std::size_t n) {
    return cfg.max_slots == 0 ? dpc::default_slot_budget(n) : cfg.max_slots;
  }

  bool which_is_R(RunConfig const& cfg) {
    if (cfg.which != "R" && cfg.which != "Q") {
      throw dpc::usage_error("--which must be R or Q, got '" + cfg.which + "'");
    }
    return cfg.which == "R";
  }

  int run_enumerate(RunConfig const& cfg) {
    require_n(cfg.n);
    auto const m = obtain(cfg, cfg.n, method_of(cfg));
    if (cfg.out.empty() || cfg.out == "-") {
      dpc::write_jsonl(std::cout, m);
    } else {
      std::ofstream out(cfg.out);
      if (!out) {
        throw dpc::usage_error("cannot open " + cfg.out + " for writing");
      }
      dpc::write_jsonl(out, m);
    }
    return ok;
  }

  int run_count(RunConfig const& cfg) {
    auto const r = parse_range(cfg.n_range);
    require_n(r.lo);
    if (r.hi < r.lo) {
      throw dpc::usage_error("empty range " + cfg.n_range);
    }
    auto const method = method_of(cfg);
    bool       all    = true;
    std::cout << "n,enumerated,formula,match\n";
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      auto const        m       = obtain(cfg, n, method);
      std::uint64_t const formula = dpc::cardinality_formula(n);
      bool const        match   = m.size() == formula;
      all &= match;
      std::cout << n << ',' << m.size() << ',' << formula << ','
                << (match ? "true" : "false") << '\n';
    }
    return (cfg.check_formula && !all) ? failed : ok;
  }

  int run_green(RunConfig const& cfg) {
    require_n(cfg.n);
    auto const tag = dpc::parse_green_relation(cfg.relation);
    if (!tag || *tag == dpc::GreenRelation::D) {
      throw dpc::usage_error("--relation must be L, R, H or J");
    }
    auto const m       = obtain(cfg, cfg.n, dpc::BuildMethod::restrictions);
    auto const classes = dpc::green_classes(m, *tag);
    json       hist    = json::object();
    for (auto [size, count] : classes.size_histogram()) {
      hist[std::to_string(size)] = count;
    }
    json report;
    report["n"]                     = cfg.n;
    report["relation"]              = cfg.relation;
    report["class_count"]           = classes.count();
    report["class_sizes_histogram"] = hist;
    bool verified                   = true;
    if (cfg.verify_oracle) {
      verified           = classes.same_partition(dpc::green_oracle(m, *tag));
      report["verified"] = verified;
    } else {
      report["verified"] = nullptr;
    }
    std::cout << report.dump(2) << '\n';
    return verified ? ok : failed;
  }

  int run_rank(RunConfig const& cfg) {
    require_n(cfg.n);
    auto const m = obtain(cfg, cfg.n, dpc::BuildMethod::restrictions);
    auto const r = dpc::rank_search(m, cfg.exhaustive_pairs, cfg.jobs);
    json       report;
    report["n"]                     = cfg.n;
    report["size"]                  = r.monoid_size;
    report["standard_generators"]   = {"g", "h", "e_n"};
    report["standard_generates"]    = r.standard_generates;
    report["units_generated_size"]  = r.units_generated_size;
    report["exhaustive_pairs"]      = r.exhaustive;
    report["budget_exceeded"]       = r.budget_exceeded;
    report["singles_checked"]       = r.singles_checked;
    report["pairs_checked"]         = r.pairs_checked;
    if (r.small_generating_set) {
      json w = json::array();
      for (auto i : *r.small_generating_set) {
        w.push_back(dpc::to_json(m.at(i)));
      }
      report["small_generating_set"] = w;
    } else {
      report["small_generating_set"] = nullptr;
    }
    std::string summary;
    if (r.exhaustive && !r.small_generating_set) {
      summary = "no generating set of size <= 2; ";
    } else if (r.small_generating_set) {
      summary = "a generating set of size <= 2 exists; ";
    } else if (r.budget_exceeded) {
      summary = "pair search skipped (monoid too large); ";
    }
    summary += r.standard_generates ? "{g,h,e_n} generates"
                                    : "{g,h,e_n} does not generate";
    report["summary"] = summary;
    std::cout << report.dump(2) << '\n';
    if (!r.standard_generates || r.small_generating_set) {
      return failed;
    }
    return r.budget_exceeded ? inconclusive : ok;
  }

  int run_present_show(RunConfig const& cfg) {
    require_n(cfg.n);
    auto const p = which_is_R(cfg) ? dpc::build_R(cfg.n) : dpc::build_Q(cfg.n);
    std::cout << dpc::to_json(p).dump(2) << '\n';
    return ok;
  }

  int run_present_verify(RunConfig const& cfg) {
    require_n(cfg.n);
    bool const r_side = which_is_R(cfg);
    auto const p = r_side ? dpc::build_R(cfg.n) : dpc::build_Q(cfg.n);
    auto const a = r_side ? dpc::canonical_assignment_R(cfg.n)
                          : dpc::canonical_assignment_Q(cfg.n);
    auto const m = obtain(cfg, cfg.n, dpc::BuildMethod::restrictions);
    auto const v = dpc::verify_defines(p, m, a, budget_of(cfg, cfg.n));
    json       report;
    report["n"]             = cfg.n;
    report["which"]         = cfg.which;
    report["quotient_size"] = v.quotient_size;
    report["target_size"]   = v.target_size;
    report["verdict"]       = std::string(dpc::to_string(v.verdict));
    report["satisfied"]     = v.satisfied;
    report["isomorphic"]    = v.isomorphic;
    report["slots_used"]    = v.stats.slots_used;
    report["merges"]        = v.stats.merges;
    report["wall_ms"]       = static_cast<long long>(v.wall_ms + 0.5);
    std::cout << report.dump(2) << '\n';
    switch (v.verdict) {
      case dpc::Verdict::defines:
        return ok;
      case dpc::Verdict::does_not_define:
        return failed;
      case dpc::Verdict::inconclusive:
        return inconclusive;
    }
    return failed;
  }

  json report_json(dpc::ConsequenceReport const& r, dpc::Presentation const& p) {
    json items = json::array();
    for (auto const& c : r.results) {
      items.push_back({{"label", c.instance.label},
                       {"lhs", p.render(c.instance.lhs)},
                       {"rhs", p.render(c.instance.rhs)},
                       {"pass", c.pass}});
    }
    return {{"name", r.name}, {"all_pass", r.all_pass()}, {"instances", items}};
  }

  int run_lemmas(RunConfig const& cfg) {
    require_n(cfg.n);
    auto const r = dpc::build_R(cfg.n);
    auto const t = dpc::enumerate_quotient(r, budget_of(cfg, cfg.n));
    if (!t.closed()) {
      throw dpc::budget_exhausted_error("R enumeration did not close");
    }
    json out;
    out["n"]      = cfg.n;
    json lemmas   = json::array();
    bool all_pass = true;
    for (auto const& rep : dpc::check_lemmas(t, cfg.n)) {
      all_pass &= rep.all_pass();
      lemmas.push_back(report_json(rep, r));
    }
    out["lemmas"]   = lemmas;
    out["all_pass"] = all_pass;
    std::cout << out.dump(2) << '\n';
    return all_pass ? ok : failed;
  }

  int run_tietze(RunConfig const& cfg) {
    require_n(cfg.n);
    auto const r  = dpc::build_R(cfg.n);
    auto const q  = dpc::build_Q(cfg.n);
    auto const rt = dpc::enumerate_quotient(r, budget_of(cfg, cfg.n));
    auto const qt = dpc::enumerate_quotient(q, budget_of(cfg, cfg.n));
    if (!rt.closed() || !qt.closed()) {
      throw dpc::budget_exhausted_error("enumeration did not close");
    }
    auto const rep = dpc::check_tietze_bridge(cfg.n, r, rt, q, qt);
    json       out;
    out["n"]           = cfg.n;
    out["definitions"] = report_json(rep.definitions, r);
    out["R_in_Q"]      = report_json(rep.r_in_q, q);
    out["Q_in_R"]      = report_json(rep.q_in_r, r);
    out["all_pass"]    = rep.all_pass();
    std::cout << out.dump(2) << '\n';
    return rep.all_pass() ? ok : failed;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial isometries of cycle graphs: enumeration, Green's "
               "relations, rank and presentation checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_n = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "cycle length (>= 3)")->required();
  };
  auto add_cache = [&cfg](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir,
                    "enumeration cache directory (default: $DPC_CACHE_DIR)");
  };
  auto add_slots = [&cfg](CLI::App* sub) {
    sub->add_option("--max-slots", cfg.max_slots,
                    "slot budget for enumeration (default 64 x |DPC_n|)")
        ->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "dump DPC_n as JSONL");
  add_n(enumerate);
  enumerate->add_option("--method", cfg.method,
                        "restrictions | closure | bruteforce");
  enumerate->add_option("--out", cfg.out, "output file (default stdout)");
  add_cache(enumerate);

  auto* count = app.add_subcommand("count", "CSV of |DPC_n| against the formula");
  count->add_option("--n", cfg.n_range, "N or A..B")->required();
  count->add_option("--method", cfg.method,
                    "restrictions | closure | bruteforce");
  count->add_flag("--check-formula", cfg.check_formula,
                  "exit 1 on any mismatch");
  add_cache(count);

  auto* green = app.add_subcommand("green", "Green's classes summary");
  add_n(green);
  green->add_option("--relation", cfg.relation, "L | R | H | J");
  green->add_flag("--verify-oracle", cfg.verify_oracle,
                  "compare against the ideal-based computation");
  add_cache(green);

  auto* rank = app.add_subcommand("rank", "generating-set checks");
  add_n(rank);
  rank->add_flag("--exhaustive-pairs", cfg.exhaustive_pairs,
                 "scan all 1- and 2-element subsets");
  rank->add_option("--jobs", cfg.jobs, "threads for the pair scan")
      ->check(CLI::PositiveNumber);
  add_cache(rank);

  auto* present = app.add_subcommand("present", "presentations R and Q");
  present->require_subcommand(1);
  auto* show = present->add_subcommand("show", "print a presentation as JSON");
  add_n(show);
  show->add_option("--which", cfg.which, "R | Q");
  auto* verify = present->add_subcommand(
      "verify", "enumerate the quotient and compare with DPC_n");
  add_n(verify);
  verify->add_option("--which", cfg.which, "R | Q");
  add_slots(verify);
  add_cache(verify);

  auto* lemmas = app.add_subcommand("lemmas", "derived relations in the R quotient");
  add_n(lemmas);
  add_slots(lemmas);

  auto* tietze = app.add_subcommand("tietze", "R <-> Q substitution checks");
  add_n(tietze);
  add_slots(tietze);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*enumerate) return run_enumerate(cfg);
    if (*count) return run_count(cfg);
    if (*green) return run_green(cfg);
    if (*rank) return run_rank(cfg);
    if (*show) return run_present_show(cfg);
    if (*verify) return run_present_verify(cfg);
    if (*lemmas) return run_lemmas(cfg);
    if (*tietze) return run_tietze(cfg);
  } catch (dpc::usage_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (dpc::budget_exhausted_error const& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return inconclusive;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failed;
  }
  return usage;
}
