// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "invsemi/eggbox.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/extnat.hpp"
#include "invsemi/ideals.hpp"
#include "invsemi/verify.hpp"

#ifndef INVSEMI_CLI_PATH
#error "INVSEMI_CLI_PATH must name the invsemi binary"
#endif

using namespace invsemi;
using Clock = std::chrono::steady_clock;

namespace {

  int failures = 0;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  void report(int id, std::string const& what, bool ok, double secs, double limit, std::string const& detail = {}) {
    bool const in_time = limit <= 0 || secs < limit;
    ok                 = ok && in_time;
    failures += !ok;
    std::printf("%s %d %s time=%.2fs", ok ? "PASS" : "FAIL", id, what.c_str(), secs);
    if (limit > 0) {
      std::printf(" limit=%.0fs", limit);
    }
    if (!in_time) {
      std::printf(" (over time)");
    }
    if (!detail.empty()) {
      std::printf(" %s", detail.c_str());
    }
    std::printf("\n");
  }

  bool labels_pass(VerifyReport const& r, std::vector<std::string> const& names, std::string& detail) {
    bool ok = true;
    for (auto const& name : names) {
      LabelResult const* l = r.find(name);
      if (!l || !l->passed || l->checks == 0) {
        ok = false;
        detail += name + (l ? (l->passed ? "(no checks) " : "(failed) ") : "(missing) ");
      }
    }
    return ok;
  }

  std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

  std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) {
      r *= b;
    }
    return r;
  }

  std::string slurp(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

}  // namespace

int main() {
  // 1: counting, against the formula and an independent filter of all n^n maps.
  {
    auto const start = Clock::now();
    bool       ok    = true;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Context const     ctx(n, PointSet::from_bits(mask));
        std::size_t const k       = ctx.y_size();
        std::size_t const formula = factorial(k) * power(n, n - k);
        std::size_t const got     = Enumeration(ctx, Family::omegabar).size();
        ok = ok && got == formula && brute::omegabar(ctx).size() == formula;
      }
    }
    ok = ok && Enumeration(Context(4, {0, 1}), Family::omegabar).size() == 32;
    report(1, "counting |Ω̄| = |Y|!·n^(n-|Y|), n<=4", ok, seconds_since(start), 5);
  }

  // 2-8 and 10 come from one harness run with four workers; each criterion
  // is charged the full run time.
  VerifyConfig config;
  config.max_n    = 4;
  config.seed     = 7;
  config.jobs     = 4;
  config.n5_pairs = 100;  // 15 configurations at n = 5, |Y| <= 2
  auto const         start   = Clock::now();
  VerifyReport const verify  = run_verify(config);
  double const       elapsed = seconds_since(start);
  std::string const  run_note = verify.error ? "error=" + *verify.error : std::string{};

  auto criterion = [&](int id, std::string const& what, std::vector<std::string> const& labels, double limit) {
    std::string detail = run_note;
    bool const  ok     = verify.exit_code() != 3 && labels_pass(verify, labels, detail);
    report(id, what, ok, elapsed, limit, detail);
  };

  criterion(2, "reg(Ω̄) = S̄, n<=4", {"thm.reg_eq_sbar"}, 30);
  criterion(3, "every element unit-regular and the transversal criterion agrees, n<=4",
            {"thm.ureg_all", "thm.ureg_char"}, 60);
  {
    std::size_t const pairs = 15 * config.n5_pairs;
    std::string       detail;
    bool ok = verify.exit_code() != 3 && pairs >= 1000
              && labels_pass(verify, {"thm.L_char", "thm.R_char", "thm.H_char", "thm.D_char", "thm.J_char"}, detail);
    report(4, "Green characterizations = oracle, n<=4 exhaustive + " + std::to_string(pairs) + " pairs at n=5", ok,
           elapsed, 600, detail);
  }
  criterion(5, "D = J, n<=4", {"thm.D_eq_J"}, 0);
  criterion(6, "witness soundness, n<=4 exhaustive", {"lem.L_witness", "lem.R_witness", "lem.J_witness"}, 0);
  criterion(7, "J(F) is an ideal, F = J(F) for ideals, n-|Y|+1 ideals",
            {"lem.JF_ideal", "lem.JF_eq_F", "thm.ideal_count"}, 0);
  {
    // The harness checks the kernel against {f : Xf = Y}; the bottom egg-box
    // class is checked here directly.
    auto const s  = Clock::now();
    bool       ok = true;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Context const ctx(n, PointSet::from_bits(mask));
        IdealSet const k   = kernel(ctx);
        EggBox const   box = eggbox(ctx);
        std::vector<Transformation> bottom;
        for (auto const& row : box.d_classes.back().cells) {
          for (auto const& cell : row) {
            bottom.insert(bottom.end(), cell.members.begin(), cell.members.end());
          }
        }
        std::sort(bottom.begin(), bottom.end());
        ok = ok && bottom == k.members;
      }
    }
    std::string detail;
    ok = labels_pass(verify, {"thm.kernel"}, detail) && ok;
    report(8, "kernel = {f : Xf = Y} = bottom D-class, n<=4", ok, elapsed + seconds_since(s), 0, detail);
  }
  {
    auto const         s = Clock::now();
    FiberProfile const p = parse_profile("[w 1 1]");
    FiberProfile const q = parse_profile("[w w 1]");
    FiberProfile const a = parse_profile("[w w]+rest1");
    FiberProfile const b = parse_profile("[w]+rest1");
    bool const         ok = !d_condition(p, q) && j_condition(p, q) && j_condition(q, p) && !d_condition(a, b)
                    && j_condition(a, b) && j_condition(b, a);
    report(9, "profile example: J yes, D no", ok, seconds_since(s), 0);
  }
  criterion(10, "Pre(f) ⊆ S̄ and Pre(f) ⊆ Fix, searched in T̄, n<=4", {"lem.pre_sbar", "lem.pre_fix"}, 0);

  // 11: two CLI runs of verify --seed 7, compared byte for byte.
  {
    auto const        s    = Clock::now();
    std::string const base = "acceptance_verify_";
    bool              ok   = true;
    for (int i = 0; i < 2; ++i) {
      std::string const cmd = std::string("'") + INVSEMI_CLI_PATH + "' verify --seed 7 --jobs 4 > " + base
                              + std::to_string(i) + ".json";
      ok = ok && std::system(cmd.c_str()) == 0;
    }
    std::string const first  = slurp(base + "0.json");
    std::string const second = slurp(base + "1.json");
    ok = ok && !first.empty() && first == second;
    report(11, "verify --seed 7 twice is byte-identical", ok, seconds_since(s), 0,
           "bytes=" + std::to_string(first.size()));
  }

  std::printf("%s %d/11\n", failures == 0 ? "ALL PASS" : "FAILURES", 11 - failures);
  return failures == 0 ? 0 : 1;
}
