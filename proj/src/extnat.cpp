#include "invsemi/extnat.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "invsemi/errors.hpp"

namespace invsemi {

  std::uint64_t ExtNat::value() const {
    if (infinite_) {
      throw DomainError("ω has no finite value");
    }
    return value_;
  }

  std::string ExtNat::to_string() const {
    return infinite_ ? std::string("w") : std::to_string(value_);
  }

  ExtNat parse_extnat(std::string_view text) {
    if (text == "w" || text == "ω") {
      return ExtNat::omega();
    }
    std::uint64_t value = 0;
    auto [ptr, ec]      = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
      throw ParseError("bad extended natural '" + std::string(text) + "'");
    }
    return ExtNat(value);
  }

  FiberProfile::FiberProfile(std::vector<ExtNat> sizes_, bool rest_ones_)
      : sizes(std::move(sizes_)), rest_ones(rest_ones_) {
    for (ExtNat s : sizes) {
      if (s == ExtNat(0)) {
        throw ArgumentError("fiber sizes must be at least 1");
      }
    }
  }

  bool FiberProfile::all_finite() const noexcept {
    return std::all_of(sizes.begin(), sizes.end(), [](ExtNat s) { return s.is_finite(); });
  }

  std::string FiberProfile::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += sizes[i].to_string();
    }
    out += ']';
    if (rest_ones) {
      out += "+rest1";
    }
    return out;
  }

  FiberProfile parse_profile(std::string_view text) {
    std::string_view s         = text;
    bool             rest_ones = false;
    constexpr std::string_view kRest = "+rest1";
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    if (s.size() >= kRest.size() && s.substr(s.size() - kRest.size()) == kRest) {
      rest_ones = true;
      s.remove_suffix(kRest.size());
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw ParseError("expected a profile such as [w 1 1] or [w w]+rest1, got '"
                       + std::string(text) + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<ExtNat> sizes;
    std::size_t         i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
        ++j;
      }
      sizes.push_back(parse_extnat(s.substr(i, j - i)));
      i = j;
    }
    if (sizes.empty() && !rest_ones) {
      throw ParseError("empty profile '" + std::string(text) + "'");
    }
    try {
      return FiberProfile(std::move(sizes), rest_ones);
    } catch (ArgumentError const& e) {
      throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
  }

  std::optional<ProfileBijection> d_condition(FiberProfile const& p, FiberProfile const& q) {
    if (p.rest_ones != q.rest_ones) {
      throw DimensionError("profiles " + p.to_string() + " and " + q.to_string()
                           + " have index sets of different cardinality");
    }
    if (!p.rest_ones && p.sizes.size() != q.sizes.size()) {
      throw DimensionError("profiles " + p.to_string() + " and " + q.to_string()
                           + " have index sets of different size");
    }
    ProfileBijection  result;
    std::vector<bool> used(q.sizes.size(), false);
    for (ExtNat size : p.sizes) {
      std::optional<std::size_t> match;
      for (std::size_t j = 0; j < q.sizes.size(); ++j) {
        if (!used[j] && q.sizes[j] == size) {
          match = j;
          break;
        }
      }
      if (match) {
        used[*match] = true;
      } else if (!(p.rest_ones && size == ExtNat(1))) {
        return std::nullopt;
      }
      result.targets.push_back(match);
    }
    // Leftover explicit entries of q can only be matched from p's rest part.
    for (std::size_t j = 0; j < q.sizes.size(); ++j) {
      if (!used[j] && !(p.rest_ones && q.sizes[j] == ExtNat(1))) {
        return std::nullopt;
      }
    }
    return result;
  }

  namespace {

    ExtNat subtract(ExtNat capacity, ExtNat amount) {
      if (!capacity.is_finite()) {
        return capacity;
      }
      return ExtNat(capacity.value() - amount.value());
    }

    struct CoverSearch {
      FiberProfile const&        p;
      FiberProfile const&        q;
      std::vector<ExtNat>        remaining;
      // assignment[w] is a source index, or p.sizes.size() for the rest part.
      std::vector<std::size_t>   assignment;

      bool run(std::size_t w) {
        if (w == q.sizes.size()) {
          return true;
        }
        ExtNat const need = q.sizes[w];
        for (std::size_t y = 0; y < p.sizes.size(); ++y) {
          if (need <= remaining[y]) {
            ExtNat const before = remaining[y];
            remaining[y]        = subtract(before, need);
            assignment[w]       = y;
            if (run(w + 1)) {
              return true;
            }
            remaining[y] = before;
          }
        }
        if (p.rest_ones && need == ExtNat(1)) {
          assignment[w] = p.sizes.size();
          return run(w + 1);
        }
        return false;
      }
    };

    IndexedCover cover_from_assignment(FiberProfile const&             p,
                                       FiberProfile const&             q,
                                       std::vector<std::size_t> const& assignment) {
      IndexedCover cover;
      cover.blocks.resize(p.sizes.size());
      for (std::size_t w = 0; w < assignment.size(); ++w) {
        if (assignment[w] == p.sizes.size()) {
          cover.into_rest.push_back(w);
        } else {
          cover.blocks[assignment[w]].push_back(w);
        }
      }
      if (q.rest_ones && !p.rest_ones) {
        for (std::size_t y = 0; y < p.sizes.size(); ++y) {
          if (!p.sizes[y].is_finite()) {
            cover.rest_sink = y;
            break;
          }
        }
      }
      return cover;
    }

  }  // namespace

  std::optional<IndexedCover> j_condition(FiberProfile const& p, FiberProfile const& q) {
    bool const p_has_omega = !p.all_finite();
    if (q.rest_ones && !p.rest_ones && !p_has_omega) {
      // Infinitely many target fibers cannot fit into finitely many finite ones.
      return std::nullopt;
    }
    if (!p.rest_ones && !q.rest_ones && p.all_finite() && q.all_finite()) {
      std::uint64_t total_p = 0;
      std::uint64_t total_q = 0;
      for (ExtNat s : p.sizes) {
        total_p += s.value();
      }
      for (ExtNat s : q.sizes) {
        total_q += s.value();
      }
      if (total_p < total_q) {
        return std::nullopt;
      }
      bool const unit_targets = std::all_of(
          q.sizes.begin(), q.sizes.end(), [](ExtNat s) { return s == ExtNat(1); });
      if (unit_targets) {
        // Filling the bins in order is the lexicographically least assignment.
        std::vector<std::size_t> assignment;
        for (std::size_t y = 0; y < p.sizes.size() && assignment.size() < q.sizes.size(); ++y) {
          for (std::uint64_t k = 0;
               k < p.sizes[y].value() && assignment.size() < q.sizes.size();
               ++k) {
            assignment.push_back(y);
          }
        }
        return cover_from_assignment(p, q, assignment);
      }
    }
    if (p.sizes.size() > kCoverSearchCap || q.sizes.size() > kCoverSearchCap) {
      throw ResourceError("cover search is capped at " + std::to_string(kCoverSearchCap)
                          + " explicit indices per profile");
    }
    CoverSearch search{p, q, p.sizes, std::vector<std::size_t>(q.sizes.size(), 0)};
    if (!search.run(0)) {
      return std::nullopt;
    }
    return cover_from_assignment(p, q, search.assignment);
  }

  bool cover_is_valid(FiberProfile const& p, FiberProfile const& q, IndexedCover const& cover) {
    if (cover.blocks.size() != p.sizes.size()) {
      return false;
    }
    std::vector<int> hits(q.sizes.size(), 0);
    for (std::size_t y = 0; y < cover.blocks.size(); ++y) {
      ExtNat total = 0;
      for (std::size_t w : cover.blocks[y]) {
        if (w >= q.sizes.size()) {
          return false;
        }
        ++hits[w];
        total += q.sizes[w];
      }
      if (cover.rest_sink == y) {
        total += ExtNat::omega();
      }
      if (!(total <= p.sizes[y])) {
        return false;
      }
    }
    for (std::size_t w : cover.into_rest) {
      if (!p.rest_ones || w >= q.sizes.size() || q.sizes[w] != ExtNat(1)) {
        return false;
      }
      ++hits[w];
    }
    if (!std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) {
      return false;
    }
    if (q.rest_ones) {
      if (cover.rest_sink) {
        return *cover.rest_sink < p.sizes.size();
      }
      return p.rest_ones;
    }
    return !cover.rest_sink.has_value();
  }

  IndexedCover compose_covers(IndexedCover const& first, IndexedCover const& second) {
    if (!first.into_rest.empty() || !second.into_rest.empty() || first.rest_sink
        || second.rest_sink) {
      throw ArgumentError("compose_covers supports covers without rest parts only");
    }
    IndexedCover out;
    out.blocks.resize(first.blocks.size());
    for (std::size_t y = 0; y < first.blocks.size(); ++y) {
      for (std::size_t w : first.blocks[y]) {
        if (w >= second.blocks.size()) {
          throw DimensionError("covers do not compose: index out of range");
        }
        out.blocks[y].insert(out.blocks[y].end(), second.blocks[w].begin(), second.blocks[w].end());
      }
      std::sort(out.blocks[y].begin(), out.blocks[y].end());
    }
    return out;
  }

  ExtNat n_value(FiberProfile const& p, ExtNat ambient) {
    std::uint64_t count = 0;
    for (ExtNat s : p.sizes) {
      if (s < ambient) {
        ++count;
      }
    }
    if (p.rest_ones && ExtNat(1) < ambient) {
      return ExtNat::omega();
    }
    return ExtNat(count);
  }

  FiberProfile profile_of(Context const& ctx, Transformation const& f) {
    require_omegabar(ctx, f, "profile_of");
    Transformation const           r = restrict_to_y(ctx, f);
    std::array<std::uint8_t, 16>   counts{};
    kernels::active().fiber_counts(r.block(), static_cast<unsigned>(r.degree()), counts.data());
    std::vector<ExtNat> sizes;
    sizes.reserve(r.degree());
    for (std::size_t i = 0; i < r.degree(); ++i) {
      sizes.emplace_back(counts[i]);
    }
    return FiberProfile(std::move(sizes));
  }

}  // namespace invsemi
