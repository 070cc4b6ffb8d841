#pragma once

// The registry of identities and congruence families, addressable by stable
// ids and group names.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qseries/verify.hpp"

namespace qseries::verify {

using Check = std::variant<IdentityCheck, CongruenceCheck>;

struct RegistryItem {
  std::string id;
  std::string group;
  Method method = Method::SeriesIdentity;
  std::string description;
  std::vector<Check> checks;
};

/// All items, in stable id order.
const std::vector<RegistryItem>& registry();

/// Group names accepted by select(), in registry order.
std::vector<std::string> registry_groups();

struct RunOptions {
  /// Overrides the final comparison order of every identity sub-check.
  std::optional<std::size_t> order;
  /// Replaces the built-in default order of 500 used by exact identities.
  std::optional<std::size_t> default_order;
  /// Overrides the scan length of every congruence sub-check.
  std::optional<std::size_t> count;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Runs the sub-checks of one item in order, stopping at the first failure.
VerificationReport run_item(const RegistryItem& item,
                            const RunOptions& options = {});

struct Selection {
  std::vector<const RegistryItem*> items;
  std::vector<std::string> unknown;
};

/// `filter` is a comma-separated list of ids, group names, "all", or
/// prefixes ending in '*'.
Selection select(std::string_view filter);

struct RunResult {
  std::vector<VerificationReport> reports;
  std::vector<std::string> warnings;

  bool all_passed() const;
};

/// Runs the selected items, possibly concurrently.  `on_report` is called
/// from the calling thread, in registry order, as reports become available.
RunResult run_registry(
    std::string_view filter = "all", const RunOptions& options = {},
    const std::function<void(const VerificationReport&)>& on_report = {});

}  // namespace qseries::verify
