#include "invsemi/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "invsemi/context.hpp"
#include "invsemi/eggbox.hpp"
#include "invsemi/enumeration.hpp"
#include "invsemi/errors.hpp"
#include "invsemi/extnat.hpp"
#include "invsemi/green.hpp"
#include "invsemi/ideals.hpp"
#include "invsemi/oracle.hpp"
#include "invsemi/regularity.hpp"

namespace invsemi {

  namespace {

    // Keep in sync with kLabelNames.
    enum Label : std::size_t {
      thm_count,
      core_chain,
      core_closure,
      core_lemma_injective,
      thm_sbar_eq_omegabar,
      thm_reg_eq_sbar,
      thm_ureg_all,
      thm_ureg_char,
      thm_ureg_eq,
      lem_pre_sbar,
      lem_pre_fix,
      prop_fix_regular,
      prop_fix_ureg,
      thm_L_char,
      thm_R_char,
      thm_H_char,
      thm_D_char,
      thm_J_char,
      thm_D_eq_J,
      green_equivalence,
      lem_L_witness,
      lem_R_witness,
      lem_J_witness,
      lem_restriction,
      eggbox_cells,
      eggbox_groups,
      lem_JF_ideal,
      lem_JF_eq_F,
      ideals_principal_union,
      thm_ideal_count,
      thm_kernel,
      lem_n_product,
      ex_J_not_D,
      thm_D_neq_J_profiles,
      thm_kernel_profile,
      harness_exceptions,
      kLabelCount
    };

    constexpr std::array<std::string_view, kLabelCount> kLabelNames = {
        "thm.count",
        "core.chain",
        "core.closure",
        "core.lemma_injective",
        "thm.sbar_eq_omegabar",
        "thm.reg_eq_sbar",
        "thm.ureg_all",
        "thm.ureg_char",
        "thm.ureg_eq",
        "lem.pre_sbar",
        "lem.pre_fix",
        "prop.fix_regular",
        "prop.fix_ureg",
        "thm.L_char",
        "thm.R_char",
        "thm.H_char",
        "thm.D_char",
        "thm.J_char",
        "thm.D_eq_J",
        "green.equivalence",
        "lem.L_witness",
        "lem.R_witness",
        "lem.J_witness",
        "lem.restriction",
        "eggbox.cells",
        "eggbox.groups",
        "lem.JF_ideal",
        "lem.JF_eq_F",
        "ideals.principal_union",
        "thm.ideal_count",
        "thm.kernel",
        "lem.n_product",
        "ex.J_not_D",
        "thm.D_neq_J_profiles",
        "thm.kernel_profile",
        "harness.exceptions",
    };

    constexpr Label kRelationLabel[] = {thm_L_char, thm_R_char, thm_H_char, thm_D_char, thm_J_char};

    class Recorder {
     public:
      explicit Recorder(std::optional<Context> ctx = std::nullopt) : ctx_(std::move(ctx)) {
        for (std::string_view name : kLabelNames) {
          results_.push_back(LabelResult{std::string(name), true, 0, std::nullopt});
        }
      }

      void check(Label label, bool ok, std::initializer_list<Transformation> elements = {},
                 std::string_view detail = {}) {
        LabelResult& r = results_[label];
        ++r.checks;
        if (ok) {
          return;
        }
        r.passed = false;
        if (!r.counterexample) {
          nlohmann::json cx{{"elements", to_strings(std::vector<Transformation>(elements))},
                            {"detail", detail}};
          if (ctx_) {
            cx["n"] = ctx_->degree();
            cx["y"] = ctx_->y().to_vector();
          }
          r.counterexample = std::move(cx);
        }
      }

      std::vector<LabelResult>& results() noexcept { return results_; }

     private:
      std::optional<Context>   ctx_;
      std::vector<LabelResult> results_;
    };

    // Definitions evaluated point by point, independent of classify().
    bool maps_y_into_y(Context const& ctx, std::vector<std::size_t> const& f) {
      return std::all_of(ctx.y().begin(), ctx.y().end(),
                         [&](std::size_t y) { return ctx.y().contains(f[y]); });
    }

    bool in_family_by_definition(Context const& ctx, Family family, std::vector<std::size_t> const& f) {
      if (!maps_y_into_y(ctx, f)) {
        return false;
      }
      PointSet image_of_y;
      for (std::size_t y : ctx.y()) {
        image_of_y.insert(f[y]);
      }
      switch (family) {
        case Family::tbar:
          return true;
        case Family::omegabar:
          return image_of_y == ctx.y();
        case Family::sbar:
          return image_of_y.size() == ctx.y_size();
        case Family::fix:
          return std::all_of(ctx.y().begin(), ctx.y().end(), [&](std::size_t y) { return f[y] == y; });
      }
      return false;
    }

    template <typename Visit>
    void for_each_map(std::size_t n, Visit&& visit) {
      std::vector<std::size_t> f(n, 0);
      while (true) {
        visit(f);
        std::size_t i = n;
        while (i > 0 && f[i - 1] + 1 == n) {
          f[--i] = 0;
        }
        if (i == 0) {
          return;
        }
        ++f[i - 1];
      }
    }

    // Composition written out directly, x(fg) = (xf)g, bypassing the kernels.
    Transformation raw_compose(Transformation const& f, Transformation const& g) {
      std::vector<std::size_t> out(f.degree());
      for (std::size_t x = 0; x < f.degree(); ++x) {
        out[x] = g[f[x]];
      }
      return Transformation(out);
    }

    std::size_t factorial(std::size_t k) {
      return k <= 1 ? 1 : k * factorial(k - 1);
    }

    std::size_t power(std::size_t base, std::size_t exp) {
      std::size_t out = 1;
      while (exp-- > 0) {
        out *= base;
      }
      return out;
    }

    using Members = std::vector<Transformation>;

    bool subset(Members const& a, Members const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    Members sorted_unique(Members v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    struct Families {
      Enumeration tbar;
      Enumeration omegabar;
      Enumeration sbar;
      Enumeration fix;

      explicit Families(Context const& ctx)
          : tbar(ctx, Family::tbar),
            omegabar(ctx, Family::omegabar),
            sbar(ctx, Family::sbar),
            fix(ctx, Family::fix) {}

      Enumeration const& get(Family family) const {
        switch (family) {
          case Family::tbar:
            return tbar;
          case Family::omegabar:
            return omegabar;
          case Family::sbar:
            return sbar;
          case Family::fix:
            return fix;
        }
        return tbar;
      }
    };

    constexpr Family kFamilies[] = {Family::fix, Family::sbar, Family::omegabar, Family::tbar};

    void check_families(Context const& ctx, Families const& fam, Recorder& rec) {
      std::size_t const n = ctx.degree();
      std::size_t const k = ctx.y_size();
      rec.check(thm_count, fam.omegabar.size() == factorial(k) * power(n, n - k), {},
                "|Ω̄| differs from |Y|!·n^(n-|Y|)");
      for (Family family : kFamilies) {
        Members brute;
        for_each_map(n, [&](std::vector<std::size_t> const& f) {
          if (in_family_by_definition(ctx, family, f)) {
            brute.emplace_back(f);
          }
        });
        auto const elems = fam.get(family).elements();
        rec.check(thm_count, Members(elems.begin(), elems.end()) == brute, {},
                  std::string("enumeration of ") + std::string(to_string(family))
                      + " differs from the brute-force filter");
      }

      Members const fix(fam.fix.elements().begin(), fam.fix.elements().end());
      Members const sbar(fam.sbar.elements().begin(), fam.sbar.elements().end());
      Members const omegabar(fam.omegabar.elements().begin(), fam.omegabar.elements().end());
      Members const tbar(fam.tbar.elements().begin(), fam.tbar.elements().end());
      rec.check(core_chain, subset(fix, sbar) && subset(sbar, omegabar) && subset(omegabar, tbar), {},
                "Fix ⊆ S̄ ⊆ Ω̄ ⊆ T̄ fails");
      rec.check(thm_sbar_eq_omegabar, sbar == omegabar, {}, "S̄ differs from Ω̄ at finite Y");

      // Closure, through the batch kernels and a rank lookup.
      auto const& table = kernels::active();
      for (Family family : kFamilies) {
        Enumeration const&          e = fam.get(family);
        std::vector<kernels::Block> products(e.size());
        std::vector<std::uint32_t>  ranks(e.size());
        for (std::size_t g = 0; g < e.size(); ++g) {
          table.right_multiply(e.blocks(), e.blocks()[g], products.data());
          table.rank(products, static_cast<unsigned>(n), ranks.data());
          for (std::size_t f = 0; f < e.size(); ++f) {
            bool const ok = e.index_of_rank(ranks[f]) >= 0;
            rec.check(core_closure, ok, {e[f], e[g]}, "product leaves the family");
          }
        }
      }

      for (Transformation const& f : tbar) {
        PointSet image;
        for (std::size_t y : ctx.y()) {
          image.insert(f[y]);
        }
        // f|Y maps the finite set Y into itself: injective iff surjective.
        bool const injective  = image.size() == k;
        bool const surjective = image == ctx.y();
        rec.check(core_lemma_injective, injective == surjective, {f}, "f|Y injective but not surjective");
      }
    }

    void check_regularity(Context const& ctx, Families const& fam, Recorder& rec) {
      Members ureg_omegabar;
      for (Transformation const& f : fam.omegabar.elements()) {
        bool const oracle_regular = !pre_inverses(ctx, f, Family::omegabar).empty();
        bool const in_sbar        = classify(ctx, f).in_sbar;
        rec.check(thm_reg_eq_sbar, oracle_regular == in_sbar && is_regular(ctx, f) == in_sbar, {f},
                  "regularity oracle, characterization and S̄ membership disagree");

        RegularityReport const report = is_unit_regular(ctx, f);
        rec.check(thm_ureg_all, report.oracle_unit_regular.value_or(false), {f},
                  "no unit u with fuf = f");
        bool sound = report.oracle_unit_regular == report.is_unit_regular
                     && (!report.is_unit_regular || report.is_regular);
        for (auto const& w : {report.witness_pre_inverse, report.witness_unit, report.oracle_unit,
                              report.oracle_pre_inverse}) {
          sound = sound && (!w || raw_compose(raw_compose(f, *w), f) == f);
        }
        rec.check(thm_ureg_char, sound, {f}, "transversal criterion and unit oracle disagree");
        if (report.oracle_unit_regular.value_or(false)) {
          ureg_omegabar.push_back(f);
        }
      }

      // Unit-regular elements computed inside S̄ with the units of S̄.
      Members sbar_units;
      for (Transformation const& u : fam.sbar.elements()) {
        if (u.is_injective()) {
          sbar_units.push_back(u);
        }
      }
      Members ureg_sbar;
      for (Transformation const& f : fam.sbar.elements()) {
        bool const found = std::any_of(sbar_units.begin(), sbar_units.end(), [&](auto const& u) {
          return raw_compose(raw_compose(f, u), f) == f;
        });
        if (found) {
          ureg_sbar.push_back(f);
        }
      }
      rec.check(thm_ureg_eq, ureg_sbar == ureg_omegabar, {}, "ureg(Ω̄) differs from ureg(S̄)");

      for (Transformation const& f : fam.sbar.elements()) {
        for (Transformation const& g : pre_inverses(ctx, f, Family::tbar)) {
          rec.check(lem_pre_sbar, fam.sbar.contains(g), {f, g}, "pre-inverse of f ∈ S̄ outside S̄");
        }
      }
      Members fix_units;
      for (Transformation const& u : fam.fix.elements()) {
        if (u.is_injective()) {
          fix_units.push_back(u);
        }
      }
      for (Transformation const& f : fam.fix.elements()) {
        for (Transformation const& g : pre_inverses(ctx, f, Family::tbar)) {
          rec.check(lem_pre_fix, fam.fix.contains(g), {f, g}, "pre-inverse of f ∈ Fix outside Fix");
        }
        rec.check(prop_fix_regular, !pre_inverses(ctx, f, Family::fix).empty(), {f},
                  "no pre-inverse inside Fix");
        bool const ureg = std::any_of(fix_units.begin(), fix_units.end(), [&](auto const& u) {
          return raw_compose(raw_compose(f, u), f) == f;
        });
        rec.check(prop_fix_ureg, ureg, {f}, "no unit of Fix with fuf = f");
      }
    }

    // Green's checks on one ordered pair; shared by the exhaustive and the
    // sampled sweeps.
    void check_green_pair(Context const& ctx, GreenOracle const& oracle, std::size_t i, std::size_t j,
                          Recorder& rec) {
      Transformation const& f = oracle.semigroup()[i];
      Transformation const& g = oracle.semigroup()[j];
      for (Relation rel : kAllRelations) {
        bool const structural = related(ctx, rel, f, g);
        bool const definition = oracle.related(rel, i, j);
        rec.check(kRelationLabel[static_cast<int>(rel)], structural == definition, {f, g},
                  "characterization " + std::string(structural ? "true" : "false") + ", oracle "
                      + (definition ? "true" : "false"));
      }
      rec.check(thm_D_eq_J,
                d_related(ctx, f, g) == j_related(ctx, f, g)
                    && oracle.related(Relation::D, i, j) == oracle.related(Relation::J, i, j),
                {f, g}, "D and J differ");

      auto const l = l_below_witness(ctx, f, g);
      rec.check(lem_L_witness,
                l ? (raw_compose(*l, g) == f && classify(ctx, *l).in_omegabar && oracle.left_divides(i, j))
                  : !oracle.left_divides(i, j),
                {f, g}, l ? "witness h fails f = hg" : "no witness but f ∈ S g");
      auto const r = r_below_witness(ctx, f, g);
      rec.check(lem_R_witness,
                r ? (raw_compose(g, *r) == f && classify(ctx, *r).in_omegabar && oracle.right_divides(i, j))
                  : !oracle.right_divides(i, j),
                {f, g}, r ? "witness h fails f = gh" : "no witness but f ∈ g S");
      auto const jw = j_below_witness(ctx, f, g);
      rec.check(lem_J_witness,
                jw ? (raw_compose(raw_compose(jw->first, g), jw->second) == f
                      && classify(ctx, jw->first).in_omegabar && classify(ctx, jw->second).in_omegabar
                      && oracle.two_sided_divides(i, j))
                   : !oracle.two_sided_divides(i, j),
                {f, g}, jw ? "witness pair fails f = hgh'" : "no witness but f ∈ S g S");

      // In Ω(Y) = S(Y) at finite Y: f|Y = (f|Y (g|Y)^-1) g|Y and f|Y = g|Y ((g|Y)^-1 f|Y).
      Transformation const fy = restrict_to_y(ctx, f);
      Transformation const gy = restrict_to_y(ctx, g);
      if (l_related(ctx, f, g) || r_related(ctx, f, g) || d_related(ctx, f, g)) {
        bool ok = fy.is_surjective() && gy.is_surjective();
        if (ok) {
          Transformation const left  = raw_compose(fy, gy.inverse());
          Transformation const right = raw_compose(gy.inverse(), fy);
          ok = raw_compose(left, gy) == fy && raw_compose(gy, right) == fy && left.is_surjective()
               && right.is_surjective();
        }
        rec.check(lem_restriction, ok, {f, g}, "restrictions not related in Ω(Y)");
      }

      ExtNat const ambient(ctx.y_size());
      ExtNat const nf  = n_value(profile_of(ctx, f), ambient);
      ExtNat const ng  = n_value(profile_of(ctx, g), ambient);
      ExtNat const nfg = n_value(profile_of(ctx, raw_compose(f, g)), ambient);
      rec.check(lem_n_product, nfg <= std::min(nf, ng), {f, g}, "n(αβ) > min(n(α), n(β))");
    }

    void check_equivalences(Context const& ctx, GreenOracle const& oracle, Recorder& rec) {
      std::size_t const size = oracle.size();
      auto const&       s    = oracle.semigroup();
      std::vector<std::vector<Bitset>> m(5, std::vector<Bitset>(size, Bitset(size)));
      for (Relation rel : kAllRelations) {
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = 0; j < size; ++j) {
            if (related(ctx, rel, s[i], s[j])) {
              m[static_cast<int>(rel)][i].set(j);
            }
          }
        }
      }
      auto const& L = m[0];
      auto const& R = m[1];
      auto const& H = m[2];
      auto const& D = m[3];
      auto const& J = m[4];
      for (Relation rel : kAllRelations) {
        auto const& a = m[static_cast<int>(rel)];
        for (std::size_t i = 0; i < size; ++i) {
          rec.check(green_equivalence, a[i].test(i), {s[i]},
                    std::string(to_string(rel)) + " not reflexive");
          for (std::size_t j = 0; j < size; ++j) {
            if (a[i].test(j)) {
              rec.check(green_equivalence, a[j].test(i), {s[i], s[j]},
                        std::string(to_string(rel)) + " not symmetric");
              // i ~ j implies j's row equals i's row under transitivity + symmetry.
              rec.check(green_equivalence, a[i] == a[j], {s[i], s[j]},
                        std::string(to_string(rel)) + " not transitive");
            }
          }
        }
      }
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          rec.check(green_equivalence, H[i].test(j) == (L[i].test(j) && R[i].test(j)), {s[i], s[j]},
                    "H differs from L ∧ R");
          rec.check(green_equivalence, !D[i].test(j) || J[i].test(j), {s[i], s[j]}, "D ⊄ J");
        }
      }
    }

    void check_eggbox(GreenOracle const& oracle, Recorder& rec, EggBox const& box) {
      auto const& s     = oracle.semigroup();
      auto const& h_ids = oracle.class_ids(Relation::H);
      auto const& d_ids = oracle.class_ids(Relation::D);
      Members     all;
      for (DClassGrid const& grid : box.d_classes) {
        std::optional<std::size_t> d_id;
        for (std::size_t r = 0; r < grid.rows(); ++r) {
          for (std::size_t c = 0; c < grid.columns(); ++c) {
            EggCell const& cell = grid.cells[r][c];
            rec.check(eggbox_cells, !cell.members.empty(), {}, "empty cell inside a D-class");
            if (cell.members.empty()) {
              continue;
            }
            std::size_t const first = oracle.index(cell.members.front());
            d_id                    = d_id.value_or(d_ids[first]);
            for (Transformation const& f : cell.members) {
              std::size_t const i = oracle.index(f);
              all.push_back(f);
              rec.check(eggbox_cells, h_ids[i] == h_ids[first] && d_ids[i] == *d_id, {f, s[first]},
                        "cell is not one H-class inside one D-class");
            }
            Transformation const& row_rep = grid.cells[r][0].members.front();
            Transformation const& col_rep = grid.cells[0][c].members.front();
            rec.check(eggbox_cells,
                      oracle.related(Relation::R, cell.members.front(), row_rep)
                          && oracle.related(Relation::L, cell.members.front(), col_rep),
                      {cell.members.front(), row_rep, col_rep}, "row or column relation broken");
            if (cell.has_idempotent) {
              for (Transformation const& f : cell.members) {
                for (Transformation const& g : cell.members) {
                  Transformation const fg = raw_compose(f, g);
                  rec.check(eggbox_groups,
                            std::binary_search(cell.members.begin(), cell.members.end(), fg), {f, g},
                            "idempotent H-class not closed");
                }
              }
            }
          }
        }
      }
      std::sort(all.begin(), all.end());
      rec.check(eggbox_cells, all == Members(s.elements().begin(), s.elements().end()), {},
                "cells do not partition Ω̄");
      std::size_t const d_count = *std::max_element(d_ids.begin(), d_ids.end()) + 1;
      rec.check(eggbox_cells, d_count == box.d_classes.size(), {}, "D-class count differs from the oracle");
    }

    // {hfh' : h, h' ∈ Ω̄} by raw triple products.
    Members principal_ideal(Enumeration const& s, Transformation const& f) {
      std::set<Transformation> out;
      for (Transformation const& h : s.elements()) {
        Transformation const hf = raw_compose(h, f);
        for (Transformation const& k : s.elements()) {
          out.insert(raw_compose(hf, k));
        }
      }
      return Members(out.begin(), out.end());
    }

    void check_ideals(Context const& ctx, GreenOracle const& oracle, Recorder& rec, EggBox const& box,
                      std::mt19937_64& rng) {
      Enumeration const& s    = oracle.semigroup();
      std::size_t const  size = s.size();

      std::vector<Members> principal;
      principal.reserve(size);
      for (Transformation const& f : s.elements()) {
        principal.push_back(principal_ideal(s, f));
      }
      auto check_generators = [&](Members const& gens) {
        IdealSet const jf = j_of_f(ctx, gens);
        rec.check(lem_JF_ideal, is_ideal(ctx, jf.members) && subset(gens, jf.members), {gens.front()},
                  "J(F) is not an ideal containing F");
        Members unions;
        for (Transformation const& g : gens) {
          Members const& p = principal[*s.index_of(g)];
          unions.insert(unions.end(), p.begin(), p.end());
        }
        rec.check(ideals_principal_union, sorted_unique(unions) == jf.members, {gens.front()},
                  "J(F) differs from the union of principal ideals");
      };
      if (ctx.degree() <= 3 && size <= 16) {
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); ++mask) {
          Members gens;
          for (std::size_t i = 0; i < size; ++i) {
            if ((mask >> i) & 1u) {
              gens.push_back(s[i]);
            }
          }
          check_generators(gens);
        }
      } else {
        for (int trial = 0; trial < 40; ++trial) {
          std::size_t const count = 1 + rng() % 3;
          Members           gens;
          for (std::size_t i = 0; i < count; ++i) {
            gens.push_back(s[rng() % size]);
          }
          check_generators(sorted_unique(gens));
        }
      }

      std::vector<IdealSet> const all = ideals_all(ctx);
      for (IdealSet const& ideal : all) {
        rec.check(lem_JF_eq_F, is_ideal(ctx, ideal.members) && j_of_f(ctx, ideal.members).members == ideal.members,
                  {ideal.members.front()}, "ideal F with J(F) ≠ F");
      }
      std::size_t const outside = ctx.degree() - ctx.y_size();
      bool              chain   = all.size() == outside + 1;
      for (std::size_t t = 0; chain && t <= outside; ++t) {
        Members expected;
        for (Transformation const& f : s.elements()) {
          if (outside_y_rank(ctx, f) <= t) {
            expected.push_back(f);
          }
        }
        chain = all[t].members == expected;
      }
      rec.check(thm_ideal_count, chain, {}, "ideals are not the chain {f : |Xf \\ Y| <= t}");

      IdealSet const k = kernel(ctx);
      Members        image_is_y;
      for (Transformation const& f : s.elements()) {
        if (f.image() == ctx.y()) {
          image_is_y.push_back(f);
        }
      }
      Members bottom;
      for (auto const& row : box.d_classes.back().cells) {
        for (EggCell const& cell : row) {
          bottom.insert(bottom.end(), cell.members.begin(), cell.members.end());
        }
      }
      bottom        = sorted_unique(bottom);
      bool in_every = std::all_of(all.begin(), all.end(), [&](IdealSet const& i) { return subset(k.members, i.members); });
      auto const& j_ids    = oracle.class_ids(Relation::J);
      bool        one_j    = true;
      for (Transformation const& f : k.members) {
        one_j = one_j && j_ids[oracle.index(f)] == j_ids[oracle.index(k.members.front())];
      }
      rec.check(thm_kernel, k.members == image_is_y && k.members == bottom && in_every && one_j, {},
                "kernel differs from {f : Xf = Y} or from the bottom D-class");
    }

    void check_profiles(Recorder& rec) {
      FiberProfile const p = parse_profile("[w 1 1]");
      FiberProfile const q = parse_profile("[w w 1]");
      rec.check(ex_J_not_D,
                !d_condition(p, q) && j_condition(p, q) && j_condition(q, p)
                    && cover_is_valid(p, q, *j_condition(p, q)) && cover_is_valid(q, p, *j_condition(q, p)),
                {}, "[w 1 1] vs [w w 1]: expected J but not D");

      FiberProfile const a = parse_profile("[w w]+rest1");
      FiberProfile const b = parse_profile("[w]+rest1");
      rec.check(thm_D_neq_J_profiles,
                !d_condition(a, b) && j_condition(a, b) && j_condition(b, a)
                    && cover_is_valid(a, b, *j_condition(a, b)) && cover_is_valid(b, a, *j_condition(b, a)),
                {}, "[w w]+rest1 vs [w]+rest1: expected J but not D");

      // A profile with n = 0 (every fiber of full size) dominates every
      // profile on the same index set.
      FiberProfile const top = parse_profile("[w w w]");
      rec.check(thm_kernel_profile, n_value(top, ExtNat::omega()) == ExtNat(0), {}, "n([w w w]) ≠ 0");
      for (char const* text : {"[1 1 1]", "[w 1 1]", "[w w 1]", "[w w w]", "[2 3 1]", "[w 5 w]",
                               "[1 1 1]+rest1", "[w 2 1]+rest1"}) {
        FiberProfile const other = parse_profile(text);
        auto const         cover = j_condition(top, other);
        rec.check(thm_kernel_profile, cover && cover_is_valid(top, other, *cover), {},
                  std::string("[w w w] does not dominate ") + text);
      }
    }

    struct ConfigSpec {
      std::size_t   n;
      std::uint32_t y_mask;
      bool          sampled;
    };

    struct ConfigOutcome {
      std::vector<LabelResult>   results;
      std::optional<std::string> resource_error;
    };

    ConfigOutcome run_config(ConfigSpec const& spec, std::size_t index, VerifyConfig const& config) {
      Context const ctx(spec.n, PointSet::from_bits(spec.y_mask));
      Recorder      rec(ctx);
      ConfigOutcome outcome;
      std::seed_seq   seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                        static_cast<std::uint32_t>(index)};
      std::mt19937_64 rng(seq);
      kernels::KernelTable const& table = config.oracle_table ? *config.oracle_table : kernels::active();
      try {
        GreenOracle const oracle(ctx, table);
        std::size_t const size = oracle.size();
        if (spec.sampled) {
          for (std::size_t p = 0; p < config.n5_pairs; ++p) {
            std::size_t const i = rng() % size;
            std::size_t const j = rng() % size;
            check_green_pair(ctx, oracle, i, j, rec);
          }
        } else {
          Families const fam(ctx);
          check_families(ctx, fam, rec);
          check_regularity(ctx, fam, rec);
          for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j) {
              check_green_pair(ctx, oracle, i, j, rec);
            }
          }
          check_equivalences(ctx, oracle, rec);
          EggBox const box = eggbox(ctx);
          check_eggbox(oracle, rec, box);
          check_ideals(ctx, oracle, rec, box, rng);
        }
        rec.check(harness_exceptions, true);
      } catch (ResourceError const& e) {
        outcome.resource_error = e.what();
      } catch (std::exception const& e) {
        rec.check(harness_exceptions, false, {}, e.what());
      }
      outcome.results = std::move(rec.results());
      return outcome;
    }

    std::vector<ConfigSpec> plan(VerifyConfig const& config) {
      std::vector<ConfigSpec> specs;
      for (std::size_t n = 1; n <= config.max_n; ++n) {
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
          specs.push_back({n, mask, false});
        }
      }
      if (config.sample_n5 && config.max_n < 5) {
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << 5); ++mask) {
          if (std::popcount(mask) <= 2) {
            specs.push_back({5, mask, true});
          }
        }
      }
      return specs;
    }

  }  // namespace

  std::vector<std::string_view> const& verify_labels() {
    static std::vector<std::string_view> const labels(kLabelNames.begin(), kLabelNames.end());
    return labels;
  }

  bool VerifyReport::all_passed() const noexcept {
    return std::all_of(labels.begin(), labels.end(), [](LabelResult const& r) { return r.passed; });
  }

  int VerifyReport::exit_code() const noexcept {
    if (resource_exhausted) {
      return 3;
    }
    return all_passed() ? 0 : 1;
  }

  LabelResult const* VerifyReport::find(std::string_view label) const noexcept {
    for (LabelResult const& r : labels) {
      if (r.label == label) {
        return &r;
      }
    }
    return nullptr;
  }

  nlohmann::json VerifyReport::to_json(VerifyConfig const& config) const {
    nlohmann::json suites = nlohmann::json::array();
    for (LabelResult const& r : labels) {
      nlohmann::json entry{{"label", r.label}, {"pass", r.passed}, {"checks", r.checks}};
      entry["counterexample"] = r.counterexample ? *r.counterexample : nlohmann::json(nullptr);
      suites.push_back(std::move(entry));
    }
    nlohmann::json out{{"schema", 1},
                       {"config", {{"max_n", config.max_n}, {"sample_n5", config.sample_n5}, {"seed", config.seed}}},
                       {"configurations", configurations},
                       {"passed", all_passed() && !resource_exhausted},
                       {"resource_exhausted", resource_exhausted},
                       {"labels", std::move(suites)}};
    if (error) {
      out["error"] = *error;
    }
    return out;
  }

  VerifyReport run_verify(VerifyConfig const& config) {
    if (config.max_n < 1) {
      throw ArgumentError("verify: max_n must be at least 1");
    }
    // Refuse up front rather than after hours of smaller configurations.
    bool const                    over_budget = config.max_n > kOracleMaxDegree;
    std::vector<ConfigSpec> const specs       = over_budget ? std::vector<ConfigSpec>{} : plan(config);
    std::vector<ConfigOutcome>    outcomes(specs.size());
    std::atomic<std::size_t>      next{0};
    auto                          worker = [&] {
      for (std::size_t i = next++; i < specs.size(); i = next++) {
        outcomes[i] = run_config(specs[i], i, config);
      }
    };
    std::size_t const        jobs = std::max<std::size_t>(1, std::min(config.jobs, specs.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    VerifyReport report;
    report.configurations = specs.size();
    Recorder global;
    check_profiles(global);
    report.labels = std::move(global.results());
    if (over_budget) {
      report.resource_exhausted = true;
      report.error = "verify: n = " + std::to_string(config.max_n) + " exceeds the oracle budget "
                     + std::to_string(kOracleMaxDegree) + "; no configuration was run";
    }
    for (ConfigOutcome const& outcome : outcomes) {
      if (outcome.resource_error) {
        report.resource_exhausted = true;
        if (!report.error) {
          report.error = *outcome.resource_error;
        }
      }
      for (std::size_t l = 0; l < outcome.results.size(); ++l) {
        LabelResult&       into = report.labels[l];
        LabelResult const& from = outcome.results[l];
        into.checks += from.checks;
        if (!from.passed) {
          into.passed = false;
          if (!into.counterexample) {
            into.counterexample = from.counterexample;
          }
        }
      }
    }
    if (!config.report_path.empty()) {
      std::ofstream out(config.report_path);
      if (!out) {
        throw ArgumentError("verify: cannot write " + config.report_path);
      }
      out << report.to_json(config).dump(2) << '\n';
    }
    return report;
  }

}  // namespace invsemi
