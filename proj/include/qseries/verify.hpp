#pragma once

// Checking engine: series identities behind dissection pipelines, vanishing
// scans and coefficient congruences, each producing a VerificationReport.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qseries/qexpr.hpp"
#include "qseries/series.hpp"

namespace qseries::verify {

/// Keep the terms q^{pn+r}, divide by q^r, replace q^p by q.
struct ExtractionStep {
  std::size_t p = 1;
  std::size_t r = 0;
};

struct DissectionPipeline {
  qexpr::Expr seed;
  std::vector<ExtractionStep> steps;

  /// Seed order needed for the pipeline output to reach `final_order`.
  std::size_t seed_order_for(std::size_t final_order) const;
};

/// Evaluates the seed at seed_order_for(final_order) and applies the steps.
Series run_pipeline(const DissectionPipeline& pipeline, CoefficientRing ring,
                    std::size_t final_order);

/// extract(seed) == rhs in `ring`, to a stated order.
struct IdentityCheck {
  std::string label;
  DissectionPipeline lhs;
  qexpr::Expr rhs;
  CoefficientRing ring;
  std::size_t default_order = 500;
};

/// n -> step*n + offset
struct Progression {
  std::uint64_t step = 1;
  std::uint64_t offset = 0;

  std::uint64_t at(std::uint64_t n) const { return step * n + offset; }
};

/// B_{s,t}(lhs(n)) == multiplier * B_{s,t}(rhs(n)) (mod modulus) for
/// n < count; an absent rhs means the left side vanishes.
struct CongruenceCheck {
  std::string label;
  std::size_t s = 2;
  std::size_t t = 2;
  Progression lhs;
  std::optional<Progression> rhs;
  long multiplier = 1;
  std::uint64_t modulus = 2;
  std::size_t count = 1;

  /// Series order needed to scan `n < count`.
  std::size_t required_order(std::size_t count) const;
};

enum class Status { Pass, Fail };

enum class Method {
  SeriesIdentity,  // a displayed identity checked to a finite order
  LinkWise,        // one link of an extraction chain, seeded by the
                   // previous link's stated right-hand side
  InductionLink,   // the link an induction over m rests on
  DirectScan,      // coefficients scanned directly from B_{s,t}
};

std::string to_string(Status s);
std::string to_string(Method m);

struct Mismatch {
  std::string step;
  /// Index in the compared series, or n for a scan.
  std::size_t index = 0;
  /// For scans: the argument of B_{s,t} on the left side.
  std::optional<std::uint64_t> coefficient_index;
  std::string lhs_value;
  std::string rhs_value;
  /// Set when a side failed to evaluate.
  std::string error;
};

struct VerificationReport {
  std::string id;
  Status status = Status::Pass;
  Method method = Method::SeriesIdentity;
  /// Smallest order to which an identity sub-check was compared; 0 if none.
  std::size_t order = 0;
  /// Largest scan length among the scan sub-checks; 0 if none.
  std::size_t count = 0;
  std::size_t checks = 0;
  std::optional<Mismatch> mismatch;
  double millis = 0;

  bool passed() const { return status == Status::Pass; }
};

/// Adds `delta` to one right-hand-side coefficient before comparison.  Used
/// by sensitivity controls.
struct Perturbation {
  std::size_t index = 0;
  long delta = 1;
};

VerificationReport check_identity(
    const IdentityCheck& check,
    std::optional<std::size_t> order_override = std::nullopt,
    std::optional<Perturbation> perturbation = std::nullopt);

/// Coefficients p*n + r of `series` vanish for n < count.
VerificationReport check_vanishing(const Series& series, std::size_t p,
                                   std::size_t r, std::size_t count);

/// A perturbation here offsets the right-hand value at scan index n.
VerificationReport check_congruence(
    const CongruenceCheck& check,
    std::optional<std::size_t> count_override = std::nullopt,
    std::optional<Perturbation> perturbation = std::nullopt);

}  // namespace qseries::verify
