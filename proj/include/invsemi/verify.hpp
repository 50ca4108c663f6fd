#pragma once

// Exhaustive property checks over every (n, Y) with n <= max_n, plus sampled
// pairs at n = 5.  The report is deterministic for a given configuration.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invsemi/kernels.hpp"

namespace invsemi {

  struct VerifyConfig {
    std::size_t   max_n     = 4;
    bool          sample_n5 = true;
    std::uint64_t seed      = 0;
    std::size_t   jobs      = 1;
    std::string   report_path;
    // Sampled pairs per n = 5 configuration (15 configurations with |Y| <= 2).
    std::size_t n5_pairs = 100;
    // Kernel table behind the definitional Green oracle; a test hook.
    kernels::KernelTable const* oracle_table = nullptr;
  };

  struct LabelResult {
    std::string                   label;
    bool                          passed = true;
    std::uint64_t                 checks = 0;
    std::optional<nlohmann::json> counterexample;
  };

  struct VerifyReport {
    std::vector<LabelResult>   labels;
    std::size_t                configurations = 0;
    bool                       resource_exhausted = false;
    std::optional<std::string> error;

    bool           all_passed() const noexcept;
    // 0 all pass, 1 some label failed, 3 resource exhaustion.
    int            exit_code() const noexcept;
    nlohmann::json to_json(VerifyConfig const& config) const;
    LabelResult const* find(std::string_view label) const noexcept;
  };

  std::vector<std::string_view> const& verify_labels();

  VerifyReport run_verify(VerifyConfig const& config);

}  // namespace invsemi
