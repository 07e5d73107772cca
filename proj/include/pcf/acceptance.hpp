#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcf {

/// fast subsamples the grids; full runs them as stated.
enum class Profile { fast, full };

std::optional<Profile> parse_profile(std::string_view name) noexcept;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 11;

/// Runs the acceptance criteria in order. An empty selection runs all of them;
/// criterion 11 times everything that ran before it.
std::vector<CriterionResult> run_acceptance(Profile profile, const std::vector<int>& only = {});

}  // namespace pcf
