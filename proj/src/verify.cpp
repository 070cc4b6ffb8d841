#include "qseries/verify.hpp"

#include <algorithm>
#include <chrono>

#include "qseries/qfunctions.hpp"

namespace qseries::verify {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::string to_string(Status s) { return s == Status::Pass ? "pass" : "fail"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::SeriesIdentity: return "series identity";
    case Method::LinkWise: return "chain verified link-wise";
    case Method::InductionLink: return "induction-link verified";
    case Method::DirectScan: return "directly scanned";
  }
  return "unknown";
}

std::size_t DissectionPipeline::seed_order_for(std::size_t final_order) const {
  std::size_t order = std::max<std::size_t>(final_order, 1);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    // extract gives ceil((M - r) / p) >= order  <=>  M >= p(order-1) + r + 1
    order = it->p * (order - 1) + it->r + 1;
  }
  return order;
}

Series run_pipeline(const DissectionPipeline& pipeline, CoefficientRing ring,
                    std::size_t final_order) {
  Series s = qexpr::evaluate(
      pipeline.seed, {pipeline.seed_order_for(final_order), ring});
  for (const auto& step : pipeline.steps) s = extract(s, step.p, step.r);
  return s;
}

std::size_t CongruenceCheck::required_order(std::size_t n) const {
  if (n == 0) return 1;
  std::uint64_t top = lhs.at(n - 1);
  if (rhs) top = std::max(top, rhs->at(n - 1));
  return static_cast<std::size_t>(top) + 1;
}

VerificationReport check_identity(const IdentityCheck& check,
                                  std::optional<std::size_t> order_override,
                                  std::optional<Perturbation> perturbation) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.checks = 1;
  const std::size_t order = order_override.value_or(check.default_order);

  auto fail_with_error = [&](const std::string& side, const std::exception& e) {
    report.status = Status::Fail;
    Mismatch m;
    m.step = check.label;
    m.error = side + ": " + e.what();
    report.mismatch = std::move(m);
    report.millis = millis_since(start);
    return report;
  };

  std::optional<Series> lhs;
  try {
    lhs = run_pipeline(check.lhs, check.ring, order);
  } catch (const std::exception& e) {
    return fail_with_error("lhs", e);
  }
  std::optional<Series> rhs;
  try {
    rhs = qexpr::evaluate(check.rhs, {order, check.ring});
    if (perturbation) {
      rhs = rhs->with_adjusted(perturbation->index, perturbation->delta);
    }
  } catch (const std::exception& e) {
    return fail_with_error("rhs", e);
  }

  report.order = std::min(lhs->order(), rhs->order());
  if (auto idx = first_mismatch(*lhs, *rhs)) {
    report.status = Status::Fail;
    Mismatch m;
    m.step = check.label;
    m.index = *idx;
    m.lhs_value = lhs->coeff(*idx).get_str();
    m.rhs_value = rhs->coeff(*idx).get_str();
    report.mismatch = std::move(m);
  }
  report.millis = millis_since(start);
  return report;
}

VerificationReport check_vanishing(const Series& series, std::size_t p,
                                   std::size_t r, std::size_t count) {
  const auto start = std::chrono::steady_clock::now();
  if (p == 0 || r >= p) {
    throw SeriesError("check_vanishing: need 0 <= r < p");
  }
  const std::size_t needed = count == 0 ? 0 : p * (count - 1) + r + 1;
  if (series.order() < needed) {
    throw SeriesError("check_vanishing: series order " +
                      std::to_string(series.order()) + " is below the " +
                      std::to_string(needed) + " needed for " +
                      std::to_string(count) + " values");
  }
  VerificationReport report;
  report.method = Method::DirectScan;
  report.count = count;
  report.checks = 1;
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t idx = p * n + r;
    if (!series.coeff_is_zero(idx)) {
      report.status = Status::Fail;
      Mismatch m;
      m.index = n;
      m.coefficient_index = idx;
      m.lhs_value = series.coeff(idx).get_str();
      m.rhs_value = "0";
      report.mismatch = std::move(m);
      break;
    }
  }
  report.millis = millis_since(start);
  return report;
}

VerificationReport check_congruence(const CongruenceCheck& check,
                                    std::optional<std::size_t> count_override,
                                    std::optional<Perturbation> perturbation) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = count_override.value_or(check.count);
  const auto ring = CoefficientRing::modulo(check.modulus);
  const Series series =
      bipartition_series(check.s, check.t, check.required_order(count), ring);

  VerificationReport report;
  report.method = Method::DirectScan;
  report.count = count;
  report.checks = 1;
  const mpz_class c(check.multiplier);
  const mpz_class m(static_cast<unsigned long>(check.modulus));
  for (std::size_t n = 0; n < count; ++n) {
    const auto li = static_cast<std::size_t>(check.lhs.at(n));
    const mpz_class lv = series.coeff(li);
    mpz_class rv = 0;
    if (check.rhs) {
      rv = c * series.coeff(static_cast<std::size_t>(check.rhs->at(n)));
    }
    if (perturbation && perturbation->index == n) rv += perturbation->delta;
    mpz_fdiv_r(rv.get_mpz_t(), rv.get_mpz_t(), m.get_mpz_t());
    if (lv != rv) {
      report.status = Status::Fail;
      report.mismatch =
          Mismatch{check.label, n, li, lv.get_str(), rv.get_str(), ""};
      break;
    }
  }
  report.millis = millis_since(start);
  return report;
}

}  // namespace qseries::verify
