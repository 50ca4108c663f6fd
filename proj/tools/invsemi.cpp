// invsemi: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "invsemi/context.hpp"
#include "invsemi/eggbox.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/extnat.hpp"
#include "invsemi/green.hpp"
#include "invsemi/ideals.hpp"
#include "invsemi/kernels.hpp"
#include "invsemi/oracle.hpp"
#include "invsemi/regularity.hpp"
#include "invsemi/verify.hpp"

using namespace invsemi;
using nlohmann::json;

namespace {

  struct Options {
    std::size_t n      = 0;
    std::string y;
    std::string family = "omegabar";
    std::string rel    = "L";
    std::string f;
    std::string g;
    std::string format;
    bool        witness = false;

    std::size_t   max_n     = 4;
    bool          no_sample = false;
    std::uint64_t seed      = 0;
    std::size_t   jobs      = 1;
    std::string   out;
    std::string   mutant;

    std::optional<std::string> s_value;
    std::optional<std::string> t_value;

    bool                     d_only = false;
    bool                     j_only = false;
    std::string              p;
    std::string              q;
  };

  Context context(Options const& o) { return Context::parse(o.n, o.y); }

  std::string boolean(bool b) { return b ? "true" : "false"; }

  json witness_json(std::optional<Transformation> const& w) {
    return w ? json(w->to_string()) : json(nullptr);
  }

  int cmd_enum(Options const& o) {
    Context const     ctx = context(o);
    Enumeration const e(ctx, parse_family(o.family));
    if (o.format == "json") {
      std::cout << json{{"count", e.size()}, {"elements", to_strings(e.elements())}}.dump(2) << '\n';
      return 0;
    }
    std::cout << "count=" << e.size() << '\n';
    for (Transformation const& f : e.elements()) {
      std::cout << f.to_string() << '\n';
    }
    return 0;
  }

  int cmd_classify(Options const& o) {
    Context const         ctx   = context(o);
    Transformation const  f     = parse_transformation(o.f);
    MembershipFlags const flags = classify(ctx, f);
    json out{{"n", ctx.degree()},
             {"y", ctx.y().to_vector()},
             {"f", f.to_string()},
             {"in_tbar", flags.in_tbar},
             {"in_omegabar", flags.in_omegabar},
             {"in_sbar", flags.in_sbar},
             {"in_fix", flags.in_fix},
             {"is_unit", flags.is_unit_of_omegabar}};
    if (!flags.in_omegabar) {
      std::string const reason = "f is not in Ω̄(X,Y): Yf ≠ Y";
      for (char const* key : {"profile", "outside_y_rank", "regularity", "green_class_sizes"}) {
        out[key] = nullptr;
      }
      out["reason"] = reason;
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    out["profile"]        = profile_of(ctx, f).to_string();
    out["outside_y_rank"] = outside_y_rank(ctx, f);
    RegularityReport const r = is_unit_regular(ctx, f);
    json                   reg{{"regular", r.is_regular},
                               {"unit_regular", r.is_unit_regular},
                               {"witness_pre_inverse", witness_json(r.witness_pre_inverse)},
                               {"witness_unit", witness_json(r.witness_unit)}};
    reg["certifying_transversal"] =
        r.certifying_transversal ? json(r.certifying_transversal->to_vector()) : json(nullptr);
    reg["oracle_regular"]      = r.oracle_regular ? json(*r.oracle_regular) : json(nullptr);
    reg["oracle_unit_regular"] = r.oracle_unit_regular ? json(*r.oracle_unit_regular) : json(nullptr);
    reg["oracle_pre_inverse"]  = witness_json(r.oracle_pre_inverse);
    reg["oracle_unit"]         = witness_json(r.oracle_unit);
    out["regularity"]          = reg;
    if (ctx.degree() <= enumeration_budget()) {
      Enumeration const e(ctx, Family::omegabar);
      json              sizes = json::object();
      for (Relation rel : kAllRelations) {
        std::size_t count = 0;
        for (Transformation const& g : e.elements()) {
          count += related(ctx, rel, f, g) ? 1 : 0;
        }
        sizes[std::string(to_string(rel))] = count;
      }
      out["green_class_sizes"] = sizes;
    } else {
      out["green_class_sizes"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  int cmd_green(Options const& o) {
    Context const        ctx = context(o);
    Relation const       rel = parse_relation(o.rel);
    Transformation const f   = parse_transformation(o.f);
    Transformation const g   = parse_transformation(o.g);
    bool const           verdict = related(ctx, rel, f, g);
    std::cout << "related=" << boolean(verdict) << '\n';
    std::cout << "characterization=" << boolean(verdict) << '\n';
    if (ctx.degree() <= kOracleMaxDegree) {
      GreenOracle const oracle(ctx);
      std::cout << "oracle=" << boolean(oracle.related(rel, f, g)) << '\n';
    } else {
      std::cout << "oracle=skipped\n";
    }
    if (!o.witness) {
      return 0;
    }
    auto print = [](char const* name, std::optional<Transformation> const& w) {
      std::cout << name << '=' << (w ? w->to_string() : std::string("none")) << '\n';
    };
    auto print_pair = [](char const* name, auto const& w) {
      std::cout << name << '=' << (w ? w->first.to_string() + " " + w->second.to_string() : std::string("none"))
                << '\n';
    };
    if (rel == Relation::L || rel == Relation::H || rel == Relation::D) {
      print("l_witness_fg", l_below_witness(ctx, f, g));
      print("l_witness_gf", l_below_witness(ctx, g, f));
    }
    if (rel == Relation::R || rel == Relation::H || rel == Relation::D) {
      print("r_witness_fg", r_below_witness(ctx, f, g));
      print("r_witness_gf", r_below_witness(ctx, g, f));
    }
    if (rel == Relation::J || rel == Relation::D) {
      print_pair("j_witness_fg", j_below_witness(ctx, f, g));
      print_pair("j_witness_gf", j_below_witness(ctx, g, f));
    }
    return 0;
  }

  int cmd_verify(Options const& o) {
    VerifyConfig config;
    config.max_n       = o.max_n;
    config.sample_n5   = !o.no_sample;
    config.seed        = o.seed;
    config.jobs        = o.jobs;
    config.report_path = o.out;
    if (!o.mutant.empty()) {
      if (o.mutant != "flip-compose") {
        throw ArgumentError("unknown mutant '" + o.mutant + "'");
      }
      config.oracle_table = &kernels::testing::flipped_composition();
    }
    VerifyReport const report = run_verify(config);
    if (o.out.empty()) {
      std::cout << report.to_json(config).dump(2) << '\n';
    } else {
      for (LabelResult const& r : report.labels) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.label << " checks=" << r.checks << '\n';
      }
    }
    for (LabelResult const& r : report.labels) {
      if (!r.passed && r.counterexample) {
        std::cerr << "counterexample " << r.label << ": " << r.counterexample->dump() << '\n';
      }
    }
    if (report.error) {
      std::cerr << "resource: " << *report.error << '\n';
    }
    return report.exit_code();
  }

  int cmd_eggbox(Options const& o) {
    EggBox const box = eggbox(context(o));
    if (o.format == "dot") {
      std::cout << render_dot(box);
    } else if (o.format == "json") {
      std::cout << render_json(box).dump(2) << '\n';
    } else {
      std::cout << render_text(box);
    }
    return 0;
  }

  int cmd_ideals(Options const& o) {
    Context const ctx = context(o);
    if (o.s_value || o.t_value) {
      ExtNat const    s = parse_extnat(o.s_value.value_or("w"));
      ExtNat const    t = parse_extnat(o.t_value.value_or(std::to_string(ctx.degree() - ctx.y_size())));
      JstResult const r = j_st(ctx, s, t);
      json            out{{"s", s.to_string()}, {"t", t.to_string()}, {"is_ideal", r.is_ideal}};
      out["set"]     = to_json(r.set);
      out["warning"] = r.warning ? json(*r.warning) : json(nullptr);
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    std::vector<IdealSet> const all = ideals_all(ctx);
    if (o.format == "text") {
      std::cout << "count=" << all.size() << '\n';
      for (IdealSet const& i : all) {
        std::cout << "t=" << (i.threshold ? std::to_string(*i.threshold) : "-") << " size=" << i.members.size()
                  << '\n';
      }
      return 0;
    }
    json list = json::array();
    for (IdealSet const& i : all) {
      list.push_back(to_json(i));
    }
    std::cout << json{{"n", ctx.degree()}, {"y", ctx.y().to_vector()}, {"count", all.size()}, {"ideals", list}}.dump(2)
              << '\n';
    return 0;
  }

  int cmd_kernel(Options const& o) {
    Context const  ctx = context(o);
    IdealSet const k   = kernel(ctx);
    if (o.format == "text") {
      std::cout << "count=" << k.members.size() << '\n';
      for (Transformation const& f : k.members) {
        std::cout << f.to_string() << '\n';
      }
      return 0;
    }
    json out = to_json(k);
    out["n"] = ctx.degree();
    out["y"] = ctx.y().to_vector();
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  int cmd_profile(Options const& o) {
    FiberProfile const p    = parse_profile(o.p);
    FiberProfile const q    = parse_profile(o.q);
    bool const         both = !o.d_only && !o.j_only;
    if (o.d_only || o.j_only || both) {
      std::string d;
      try {
        d = boolean(d_condition(p, q).has_value());
      } catch (DimensionError const&) {
        d = "false";  // index sets of different cardinality admit no bijection
      }
      std::cout << "d=" << d << '\n';
    }
    if (o.j_only || both) {
      bool const pq = j_condition(p, q).has_value();
      bool const qp = j_condition(q, p).has_value();
      std::cout << "j_pq=" << boolean(pq) << "\nj_qp=" << boolean(qp) << "\nj=" << boolean(pq && qp) << '\n';
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transformation semigroups with an invariant set"};
  app.require_subcommand(1);
  Options o;

  auto add_ctx = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "size of X = {0..n-1}")->required();
    sub->add_option("--y", o.y, "invariant set Y as a comma list, e.g. 0,1")->required();
  };

  auto* enum_cmd = app.add_subcommand("enum", "list a family");
  add_ctx(enum_cmd);
  enum_cmd->add_option("--family", o.family, "tbar|omegabar|sbar|fix");
  enum_cmd->add_option("--format", o.format, "text|json");

  auto* classify_cmd = app.add_subcommand("classify", "membership, regularity and fiber profile of f");
  add_ctx(classify_cmd);
  classify_cmd->add_option("--f,f", o.f, "transformation such as \"[0 1 0]\"")->required();

  auto* green_cmd = app.add_subcommand("green", "Green's relation between f and g");
  add_ctx(green_cmd);
  green_cmd->add_option("--rel", o.rel, "L|R|H|D|J");
  green_cmd->add_option("--f", o.f)->required();
  green_cmd->add_option("--g", o.g)->required();
  green_cmd->add_flag("--witness", o.witness, "print divisibility witnesses");

  auto* verify_cmd = app.add_subcommand("verify", "run every property suite");
  verify_cmd->add_option("--max-n", o.max_n, "largest n checked exhaustively");
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--jobs", o.jobs);
  verify_cmd->add_option("--out", o.out, "report path");
  verify_cmd->add_flag("--no-sample-n5", o.no_sample, "skip the sampled n = 5 pairs");
  verify_cmd->add_option("--inject-mutant", o.mutant)->group("");

  auto* eggbox_cmd = app.add_subcommand("eggbox", "egg-box picture of Ω̄(X,Y)");
  add_ctx(eggbox_cmd);
  eggbox_cmd->add_option("--format", o.format, "text|dot|json");

  auto* ideals_cmd = app.add_subcommand("ideals", "all ideals, or J(s,t) with --s/--t");
  add_ctx(ideals_cmd);
  ideals_cmd->add_option("--format", o.format, "json|text");
  ideals_cmd->add_option("--s", o.s_value);
  ideals_cmd->add_option("--t", o.t_value);

  auto* kernel_cmd = app.add_subcommand("kernel", "the minimal ideal");
  add_ctx(kernel_cmd);
  kernel_cmd->add_option("--format", o.format, "json|text");

  auto* profile_cmd = app.add_subcommand("profile", "d/j conditions on two fiber profiles");
  profile_cmd->add_flag("--d", o.d_only);
  profile_cmd->add_flag("--j", o.j_only);
  profile_cmd->add_option("p", o.p, "profile such as \"[w 1 1]\"")->required();
  profile_cmd->add_option("q", o.q, "second profile")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enum_cmd) return cmd_enum(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*green_cmd) return cmd_green(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*eggbox_cmd) return cmd_eggbox(o);
    if (*ideals_cmd) return cmd_ideals(o);
    if (*kernel_cmd) return cmd_kernel(o);
    if (*profile_cmd) return cmd_profile(o);
  } catch (ResourceError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
