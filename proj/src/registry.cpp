#include "qseries/registry.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace qseries::verify {

namespace {

constexpr std::size_t kExactOrder = 500;
constexpr std::size_t kSepticOrder = 300;
constexpr std::size_t kChainOrder = 300;

IdentityCheck identity(std::string label, std::string_view seed,
                       std::vector<ExtractionStep> steps, std::string_view rhs,
                       CoefficientRing ring, std::size_t order) {
  return IdentityCheck{std::move(label),
                       DissectionPipeline{qexpr::parse(seed), std::move(steps)},
                       qexpr::parse(rhs), ring, order};
}

CongruenceCheck scan(std::string label, std::size_t s, std::size_t t,
                     Progression lhs, std::optional<Progression> rhs,
                     long multiplier, std::uint64_t modulus,
                     std::size_t count) {
  return CongruenceCheck{std::move(label), s, t, lhs, rhs, multiplier,
                         modulus, count};
}

CongruenceCheck vanishes(std::string label, std::size_t s, std::size_t t,
                         Progression lhs, std::uint64_t modulus,
                         std::size_t count) {
  return scan(std::move(label), s, t, lhs, std::nullopt, 0, modulus, count);
}

// alpha f7 f1^9 + beta q f7^5 f1^5 + gamma q^2 f7^9 f1
std::string septic_triple(int alpha, int beta, int gamma) {
  std::vector<std::string> terms;
  if (alpha != 0) terms.push_back(std::to_string(alpha) + "*f7*f1^9");
  if (beta != 0) terms.push_back(std::to_string(beta) + "*q*f7^5*f1^5");
  if (gamma != 0) terms.push_back(std::to_string(gamma) + "*q^2*f7^9*f1");
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += (i ? " + " : "") + terms[i];
  }
  return out.empty() ? "0" : out;
}

void add_classical(std::vector<RegistryItem>& items) {
  const auto Z = CoefficientRing::integers();
  RegistryItem k1{"eq-k1", "classical", Method::SeriesIdentity,
                  "f_p == f_1^p (mod p) for p in {2,3,5,7,11,13,17}", {}};
  for (int p : {2, 3, 5, 7, 11, 13, 17}) {
    const std::string ps = std::to_string(p);
    k1.checks.push_back(identity("f" + ps + " == f1^" + ps + " mod " + ps,
                                 "f" + ps, {}, "f1^" + ps,
                                 CoefficientRing::modulo(p), kExactOrder));
  }
  items.push_back(std::move(k1));

  items.push_back({"eq-j1", "classical", Method::SeriesIdentity,
                   "sum p(5n+4) q^n = 5 f5^5/f1^6",
                   {identity("p(5n+4)", "f1^-1", {{5, 4}}, "5*f5^5/f1^6", Z,
                             kExactOrder)}});
  items.push_back(
      {"eq-j2", "classical", Method::SeriesIdentity,
       "sum p(7n+5) q^n = 7 f7^3/f1^4 + 49 q f7^7/f1^8",
       {identity("p(7n+5)", "f1^-1", {{7, 5}},
                 "7*f7^3/f1^4 + 49*q*f7^7/f1^8", Z, kExactOrder)}});
}

void add_lemmas(std::vector<RegistryItem>& items) {
  const auto Z = CoefficientRing::integers();
  auto lemma = [&](std::string id, std::string_view lhs, std::string_view rhs,
                   std::size_t order, std::vector<ExtractionStep> steps = {}) {
    std::string description = std::string(lhs);
    if (!steps.empty()) {
      description = "extract(" + description + ", " +
                    std::to_string(steps[0].p) + ", " +
                    std::to_string(steps[0].r) + ")";
    }
    description += " = " + std::string(rhs);
    items.push_back({id, "lemmas", Method::SeriesIdentity, description,
                     {identity(id, lhs, std::move(steps), rhs, Z, order)}});
  };

  lemma("eq-4w", "f2^2/f1", "f6*f9^2/(f3*f18) + q*f18^2/f9", kExactOrder);
  lemma("eq-a5", "f2/f1^2",
        "f6^4*f9^6/(f3^8*f18^3) + 2*q*f6^3*f9^3/f3^7 + 4*q^2*f6^2*f18^3/f3^6",
        kExactOrder);
  lemma("eq-3k", "f1^3", "f3*a(q^3) - 3*q*f9^3", kExactOrder);
  lemma("eq-2k", "a(q)", "a(q^3) + 6*q*f9^3/f3", kExactOrder);
  lemma("eq-6k", "f1^-3",
        "a(q^3)^2*f9^3/f3^10 + 3*q*a(q^3)*f9^6/f3^11 + 9*q^2*f9^9/f3^12",
        kExactOrder);
  lemma("eq-b52", "f2^3", "f6*a(q^6) - 3*q^2*f18^3", kExactOrder);
  lemma("eq-4", "f1",
        "f49*(B(q^7)/C(q^7) - q*A(q^7)/B(q^7) - q^2 + q^5*C(q^7)/A(q^7))",
        kSepticOrder);
  lemma("eq-8p", "B^5/(A*C^4) - A^5/(B^4*C) - q^3*C^5/(A^4*B)", "3*q",
        kSepticOrder);
  lemma("eq-9p", "A*B^2/C^3 + q*A^2*C/B^3 - q^2*B*C^2/A^3",
        "f1^4/f7^4 + 8*q", kSepticOrder);
  lemma("eq-10p", "A^3/(B*C^2) - q*B^3/(A^2*C) - q^2*C^3/(A*B^2)",
        "f1^4/f7^4 + 5*q", kSepticOrder);
  lemma("eq-11p", "B^7/C^7 - q*A^7/B^7 + q^5*C^7/A^7",
        "14*q*f1^4/f7^4 + f1^8/f7^8 + 57*q^2", kSepticOrder);
  lemma("eq-15", "f1^5",
        "f7^5*(20*(A*B^2/C^3 + q*A^2*C/B^3 - q^2*B*C^2/A^3)"
        " - 10*(A^3/(B*C^2) - q*B^3/(A^2*C) - q^2*C^3/(A*B^2)) - 61*q)",
        kSepticOrder, {{7, 3}});
  lemma("lemma-1.2", "f1^5", "10*f1^4*f7 + 49*q*f7^5", kExactOrder, {{7, 3}});
  lemma("lemma-0.2", "f1^7", "f1^8/f7 + 49*q*f7^3*f1^4", kExactOrder,
        {{7, 0}});
  lemma("lemma-1.1", "f1^9", "-90*f1^8*f7 - 882*q*f1^4*f7^5 - 2401*q^2*f7^9",
        kExactOrder, {{7, 4}});
}

void add_b215(std::vector<RegistryItem>& items) {
  const auto F5 = CoefficientRing::modulo(5);
  const char* b3 = "4*f2^2*f6^3/f1";
  const char* b5 = "4*f6^2*f2^3/f3";
  const char* b6 = "3*f2^2*f6^3/f1";

  items.push_back({"b215-b1", "b215", Method::DirectScan,
                   "B_{2,15}(9n+8) == 0 (mod 5)",
                   {vanishes("B(9n+8)", 2, 15, {9, 8}, 5, 1000)}});
  items.push_back({"b215-b2", "b215", Method::DirectScan,
                   "B_{2,15}(27n+14) == 0 (mod 5)",
                   {vanishes("B(27n+14)", 2, 15, {27, 14}, 5, 1000)}});
  items.push_back(
      {"b215-b3", "b215", Method::DirectScan,
       "B_{2,15}(27n+23) == 2 B_{2,15}(3n+2) (mod 5)",
       {scan("B(27n+23) vs 2 B(3n+2)", 2, 15, {27, 23}, Progression{3, 2}, 2,
             5, 1000)}});
  items.push_back(
      {"b215-chain", "b215", Method::InductionLink,
       "3-dissection chain of f2 f15/f1^2 mod 5 down to B(27n+23) == 2 B(3n+2)",
       {identity("B(3n+2)", "f2*f15/f1^2", {{3, 2}}, b3, F5, kChainOrder),
        identity("B(9n+8) vanishes", b3, {{3, 2}}, "0", F5, kChainOrder),
        identity("B(9n+5)", b3, {{3, 1}}, b5, F5, kChainOrder),
        identity("B(27n+23)", b5, {{3, 2}}, b6, F5, kChainOrder),
        identity("B(27n+14) vanishes", b5, {{3, 1}}, "0", F5, kChainOrder),
        identity("B(27n+23) form == 2 * B(3n+2) form", b6, {}, std::string("2*") + b3, F5,
                 kChainOrder)}});

  // Family at m = 0 and m = 1: progressions 3^{2m+1}n + (7*3^{2m+1}-5)/8,
  // 3^{2m+2}n + (23*3^{2m+1}-5)/8, 3^{2m+3}n + (13*3^{2m+2}-5)/8.
  items.push_back(
      {"thm-y-m0", "b215", Method::DirectScan,
       "m = 0: B(3n+2) == B(3n+2), B(9n+8) == 0, B(27n+14) == 0",
       {scan("B(3n+2) m=0", 2, 15, {3, 2}, Progression{3, 2}, 1, 5, 1000),
        vanishes("B(9n+8) m=0", 2, 15, {9, 8}, 5, 1000),
        vanishes("B(27n+14) m=0", 2, 15, {27, 14}, 5, 1000)}});
  items.push_back(
      {"thm-y-m1", "b215", Method::DirectScan,
       "m = 1: B(27n+23) == 2 B(3n+2), B(81n+77) == 0, "
       "B(243n+131) == 0",
       {scan("B(27n+23) m=1", 2, 15, {27, 23}, Progression{3, 2}, 2, 5, 1000),
        vanishes("B(81n+77) m=1", 2, 15, {81, 77}, 5, 1000),
        vanishes("B(243n+131) m=1", 2, 15, {243, 131}, 5, 400)}});
}

void add_b711(std::vector<RegistryItem>& items) {
  const auto F11 = CoefficientRing::modulo(11);
  constexpr std::array<std::array<int, 3>, 11> kTriples{{{9, 9, 8},
                                                         {9, 5, 6},
                                                         {4, 7, 6},
                                                         {1, 5, 10},
                                                         {5, 1, 8},
                                                         {3, 6, 7},
                                                         {3, 2, 2},
                                                         {1, 4, 2},
                                                         {3, 7, 8},
                                                         {1, 7, 2},
                                                         {0, 0, 8}}};
  // B_{7,11}(7^k n + (2*7^k - 2)/3)
  std::uint64_t step = 1;
  std::uint64_t offset = 0;
  for (std::size_t k = 0; k < kTriples.size(); ++k) {
    step *= 7;
    offset = 7 * offset + 4;
    const auto& t = kTriples[k];
    const std::string rhs = septic_triple(t[0], t[1], t[2]);
    char id[32];
    std::snprintf(id, sizeof id, "b711-chain-%02zu", k + 1);
    const std::string label = "B(" + std::to_string(step) + "n+" +
                              std::to_string(offset) + ")";

    RegistryItem item{id, "b711", Method::LinkWise,
                      label + " == " + rhs + " (mod 11)", {}};
    if (k == 0) {
      item.checks.push_back(identity("f7 f11/f1^2 == f7 f1^9",
                                     "f7*f11/f1^2", {}, "f7*f1^9", F11,
                                     kChainOrder));
      item.checks.push_back(
          identity("lemma-1.1 right side mod 11",
                   "-90*f1^8*f7 - 882*q*f1^4*f7^5 - 2401*q^2*f7^9", {},
                   "9*f1^8*f7 + 9*q*f1^4*f7^5 + 8*q^2*f7^9", F11, kChainOrder));
      item.checks.push_back(
          identity(label, "f7*f11/f1^2", {{7, 4}}, rhs, F11, kChainOrder));
    } else {
      const auto& prev = kTriples[k - 1];
      item.checks.push_back(identity(label,
                                     septic_triple(prev[0], prev[1], prev[2]),
                                     {{7, 4}}, rhs, F11, kChainOrder));
    }
    items.push_back(std::move(item));
  }

  const std::string last = septic_triple(0, 0, 8);
  RegistryItem a4{"b711-a4", "b711", Method::InductionLink,
                  "B(7^11(7n+k) + (2*7^11-2)/3) == 0 (mod 11), k = 1, 5, 6",
                  {}};
  for (std::size_t k : {1, 5, 6}) {
    a4.checks.push_back(identity("residue " + std::to_string(k), last,
                                 {{7, k}}, "0", F11, kChainOrder));
  }
  items.push_back(std::move(a4));
  items.push_back(
      {"b711-a3", "b711", Method::InductionLink,
       "B(7^12 n + (2*7^12-2)/3) == 3 B(n) (mod 11)",
       {identity("residue 4", last, {{7, 4}}, "3*f7*f1^9", F11, kChainOrder)}});
}

void add_b2711(std::vector<RegistryItem>& items) {
  const auto F11 = CoefficientRing::modulo(11);
  const char* b3n = "a(q)^3*f1^3*f9 + 6*q*f9*f3^9";
  const char* b9n3 = "6*f1^9*f3 + 4*a(q)^3*f3^4 + q*f3^13/f1^3";
  const char* b27n12 = "8*a(q)^2*f1^3*f3^3";

  items.push_back(
      {"b2711-chain", "b2711", Method::LinkWise,
       "3-dissection chain of f27 f11/f1^2 mod 11 down to B(27n+12)",
       {identity("f27 f11/f1^2 == f27 f1^9", "f27*f11/f1^2", {}, "f27*f1^9",
                 F11, kChainOrder),
        identity("B(3n)", "f27*f11/f1^2", {{3, 0}}, b3n, F11, kChainOrder),
        identity("B(9n+3)", b3n, {{3, 1}}, b9n3, F11, kChainOrder),
        identity("B(27n+12)", b9n3, {{3, 1}}, b27n12, F11,
                 kChainOrder)}});
  items.push_back({"b2711-eq11", "b2711", Method::LinkWise,
                   "B_{27,11}(81n+66) == 0 (mod 11) from the B(27n+12) form",
                   {identity("B(81n+66)", b27n12, {{3, 2}}, "0", F11,
                             kChainOrder)}});
  items.push_back(
      {"b2711-eq12", "b2711", Method::InductionLink,
       "B_{27,11}(81n+39) == 9 B_{27,11}(27n+12) (mod 11)",
       {identity("B(81n+39)", b27n12, {{3, 1}},
                 std::string("9*(") + b27n12 + ")", F11, kChainOrder)}});
  items.push_back({"b2711-m4", "b2711", Method::DirectScan,
                   "B_{27,11}(81n+66) == 0 (mod 11)",
                   {vanishes("B(81n+66)", 27, 11, {81, 66}, 11, 400)}});
  items.push_back({"b2711-m5", "b2711", Method::DirectScan,
                   "B_{27,11}(243n+201) == 0 (mod 11)",
                   {vanishes("B(243n+201)", 27, 11, {243, 201}, 11, 400)}});
}

void add_b24317(std::vector<RegistryItem>& items) {
  const auto F17 = CoefficientRing::modulo(17);
  const char* g2 = "5*a(q)^3*f1^3*f3^6*f81 + 12*q*f3^15*f81";
  const char* g3 =
      "12*f1^15*f27 + 7*a(q)^3*f1^6*f3^3*f27 + 7*q*f1^3*f3^12*f27";
  const char* g4 = "13*f1^12*f3^3*f9 + 4*a(q)^3*f1^3*f3^6*f9 + 16*q*f3^15*f9";
  const char* g5 =
      "16*q*f3^15*f9 + 6*q*a(q^3)^3*f3^6*f9^4 + 8*q^4*f3^3*f9^13";

  items.push_back(
      {"b24317-chain", "b24317", Method::LinkWise,
       "3-dissection chain of f243 f17/f1^2 mod 17 down to B(27n+23)",
       {identity("f243 f17/f1^2 == f243 f1^15", "f243*f17/f1^2", {},
                 "f243*f1^15", F17, kChainOrder),
        identity("B(3n+2)", "f243*f17/f1^2", {{3, 2}}, g2, F17,
                 kChainOrder),
        identity("B(9n+5)", g2, {{3, 1}}, g3, F17, kChainOrder),
        identity("B(27n+23)", g3, {{3, 2}}, g4, F17, kChainOrder),
        identity("B(27n+23) rewritten", g4, {}, g5, F17, kChainOrder),
        identity("B(81n+23) vanishes", g5, {{3, 0}}, "0", F17,
                 kChainOrder),
        identity("B(81n+77) vanishes", g5, {{3, 2}}, "0", F17,
                 kChainOrder)}});
  items.push_back({"b24317-23", "b24317", Method::DirectScan,
                   "B_{243,17}(81n+23) == 0 (mod 17)",
                   {vanishes("B(81n+23)", 243, 17, {81, 23}, 17, 300)}});
  items.push_back({"b24317-77", "b24317", Method::DirectScan,
                   "B_{243,17}(81n+77) == 0 (mod 17)",
                   {vanishes("B(81n+77)", 243, 17, {81, 77}, 17, 300)}});
}

std::vector<RegistryItem> build_registry() {
  std::vector<RegistryItem> items;
  add_classical(items);
  add_lemmas(items);
  add_b215(items);
  add_b711(items);
  add_b2711(items);
  add_b24317(items);
  return items;
}

}  // namespace

const std::vector<RegistryItem>& registry() {
  static const std::vector<RegistryItem> items = build_registry();
  return items;
}

std::vector<std::string> registry_groups() {
  std::vector<std::string> groups;
  for (const auto& item : registry()) {
    if (std::find(groups.begin(), groups.end(), item.group) == groups.end()) {
      groups.push_back(item.group);
    }
  }
  return groups;
}

VerificationReport run_item(const RegistryItem& item,
                            const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = item.id;
  report.method = item.method;

  for (const auto& check : item.checks) {
    VerificationReport sub;
    if (const auto* id = std::get_if<IdentityCheck>(&check)) {
      std::optional<std::size_t> order = options.order;
      if (!order && options.default_order && id->default_order == kExactOrder) {
        order = options.default_order;
      }
      sub = check_identity(*id, order);
      report.order = report.order == 0 ? sub.order
                                       : std::min(report.order, sub.order);
    } else {
      const auto& cc = std::get<CongruenceCheck>(check);
      try {
        sub = check_congruence(cc, options.count);
      } catch (const std::exception& e) {
        sub.status = Status::Fail;
        sub.mismatch = Mismatch{cc.label, 0, std::nullopt, "", "", e.what()};
      }
      report.count = std::max(report.count, sub.count);
    }
    ++report.checks;
    if (!sub.passed()) {
      report.status = Status::Fail;
      report.mismatch = sub.mismatch;
      break;
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return report;
}

Selection select(std::string_view filter) {
  Selection out;
  std::set<std::string> chosen;
  const auto& items = registry();
  const auto groups = registry_groups();

  std::string token;
  std::stringstream ss{std::string(filter)};
  bool any_token = false;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    any_token = true;
    bool matched = false;
    for (const auto& item : items) {
      bool hit = token == "all" || item.id == token || item.group == token;
      if (!hit && token.back() == '*') {
        hit = item.id.compare(0, token.size() - 1, token, 0,
                              token.size() - 1) == 0;
      }
      if (hit) {
        chosen.insert(item.id);
        matched = true;
      }
    }
    if (!matched) out.unknown.push_back(token);
  }
  if (!any_token) {
    for (const auto& item : items) chosen.insert(item.id);
  }
  for (const auto& item : items) {
    if (chosen.count(item.id)) out.items.push_back(&item);
  }
  return out;
}

bool RunResult::all_passed() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.passed(); });
}

RunResult run_registry(
    std::string_view filter, const RunOptions& options,
    const std::function<void(const VerificationReport&)>& on_report) {
  RunResult result;
  Selection selection = select(filter);
  for (const auto& u : selection.unknown) {
    result.warnings.push_back("no registry item matches '" + u + "'");
  }
  const auto& items = selection.items;
  if (items.empty()) return result;

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(items.size()));

  std::vector<std::optional<VerificationReport>> slots(items.size());
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= items.size()) return;
        i = next++;
      }
      VerificationReport r = run_item(*items[i], options);
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(r);
      }
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  for (std::size_t i = 0; i < items.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return slots[i].has_value(); });
    VerificationReport r = *slots[i];
    lock.unlock();
    if (on_report) on_report(r);
    result.reports.push_back(std::move(r));
  }
  return result;
}

}  // namespace qseries::verify
