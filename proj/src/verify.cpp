#include "qschur/verify.hpp"

#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "qschur/hooks.hpp"
#include "qschur/macdonald_you.hpp"
#include "qschur/schubert.hpp"
#include "qschur/symfunc.hpp"
#include "qschur/tableaux.hpp"

namespace qschur {

namespace {

// Runs check(i) for every index, optionally across threads; failure payloads
// are collected in index order.
void for_each_indexed(long count, int jobs,
                      const std::function<std::string(long)>& check,
                      std::vector<std::string>& failures) {
  std::vector<std::string> results(count);
  if (jobs <= 1) {
    for (long i = 0; i < count; ++i) results[i] = check(i);
  } else {
    std::mutex next_mutex;
    long next = 0;
    auto worker = [&] {
      for (;;) {
        long i;
        {
          std::lock_guard<std::mutex> lk(next_mutex);
          if (next >= count) return;
          i = next++;
        }
        results[i] = check(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& r : results)
    if (!r.empty()) failures.push_back(std::move(r));
}

std::vector<Partition> sweep(const VerifyOptions& opt) {
  if (opt.has_mu) return {opt.mu};
  std::vector<Partition> mus;
  for (long w = 0; w <= opt.max_weight; ++w)
    for (const auto& mu : partitions_of(w)) mus.push_back(mu);
  return mus;
}

std::string range_text(const VerifyOptions& opt) {
  if (opt.has_mu) return "mu = " + opt.mu.to_string();
  return "all |mu| <= " + std::to_string(opt.max_weight);
}

VerificationReport per_mu_identity(
    const std::string& id, const VerifyOptions& opt,
    const std::function<std::string(const Partition&)>& check) {
  VerificationReport report;
  report.identity = id;
  report.range = range_text(opt);
  auto mus = sweep(opt);
  report.instances = static_cast<long>(mus.size());
  for_each_indexed(
      report.instances, opt.jobs, [&](long i) { return check(mus[i]); },
      report.failures);
  return report;
}

std::string check_eq12(const Partition& mu) {
  return verify_expansion_identity(mu) ? "" : "mu=" + mu.to_string();
}

std::string check_eq16(const Partition& mu) {
  if (!verify_variant_agreement(mu)) return "mu=" + mu.to_string();
  try {
    g_from_my(mu);  // also asserts 2^n-divisibility of every coefficient
  } catch (const ConsistencyError& e) {
    return "mu=" + mu.to_string() + " (" + e.what() + ")";
  }
  return "";
}

std::string check_eq20(const Partition& mu) {
  int n = frobenius(mu).rank();
  auto grow = restriction_row(mu);
  auto ab = signed_e_sum(mu, MYVariant::AB);
  auto cd = signed_e_sum(mu, MYVariant::CD);
  for (auto* side : {&ab, &cd}) {
    if (side->size() != grow.size()) return "mu=" + mu.to_string();
    for (const auto& [lam, g] : grow) {
      auto it = side->find(lam);
      if (it == side->end() || it->second != g * pow2(n))
        return "mu=" + mu.to_string() + " lambda=" + lam.to_string();
    }
  }
  return "";
}

std::string check_eq30(const Partition& mu) {
  return verify_hook_identity(mu) ? "" : "mu=" + mu.to_string();
}

std::string check_lemma3_weight(long w) {
  for (const auto& mu : partitions_of(w)) {
    Rat viaE = specialize_schur(mu);
    if (viaE != fbar_parts(mu) || viaE != hooks_ordinary(mu).bar)
      return "s specialization: mu=" + mu.to_string();
  }
  for (const auto& lam : strict_partitions_of(w)) {
    Rat viaQ = specialize_q(qfun_to_m(lam));
    if (viaQ != gbar_parts(lam) || viaQ != hooks_shifted(lam).bar)
      return "Q specialization: lambda=" + lam.to_string();
  }
  return "";
}

std::string check_nonneg(const Partition& mu) {
  for (const auto& [lam, g] : restriction_row(mu))
    if (g < 0)
      return "mu=" + mu.to_string() + " lambda=" + lam.to_string() +
             " g=" + g.str();
  for (const auto& [lam, g] : g_from_my(mu))
    if (g < 0)
      return "mu=" + mu.to_string() + " lambda=" + lam.to_string() +
             " (quadratic route) g=" + g.str();
  return "";
}

VerificationReport verify_eq24_driver(const VerifyOptions& opt) {
  VerificationReport report;
  report.identity = "eq24";
  report.range = "n = " + std::to_string(opt.n) + ", all (lambda, mu)";
  int n = opt.n;
  struct Instance {
    StrictPartition lambda;
    Partition mu;
  };
  std::vector<Instance> instances;
  for (const auto& lam : strict_partitions_in_staircase(n)) {
    long w = lam.weight() + static_cast<long>(n) * (n - 1) / 2;
    for (const auto& mu : partitions_in_box(w, n))
      instances.push_back({lam, mu});
  }
  report.instances = static_cast<long>(instances.size());
  for_each_indexed(
      report.instances, opt.jobs,
      [&](long i) -> std::string {
        const auto& inst = instances[i];
        if (verify_pushforward_duality(inst.lambda, inst.mu, n)) return "";
        return "n=" + std::to_string(n) +
               " lambda=" + inst.lambda.to_string() +
               " mu=" + inst.mu.to_string();
      },
      report.failures);
  return report;
}

VerificationReport verify_lemma3_driver(const VerifyOptions& opt) {
  VerificationReport report;
  report.identity = "lemma3";
  report.range = "all shapes of weight <= " + std::to_string(opt.max_weight);
  report.instances = opt.max_weight + 1;
  for_each_indexed(
      report.instances, opt.jobs,
      [&](long w) { return check_lemma3_weight(w); }, report.failures);
  return report;
}

VerificationReport verify_nonneg_driver(const VerifyOptions& opt) {
  VerificationReport report = per_mu_identity("nonneg", opt, check_nonneg);
  // Structure constants and pushforwards at small n are covered as well.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& lam : strict_partitions_in_staircase(n)) {
      for (const auto& [mu, c] : pushforward(lam, n).terms) {
        ++report.instances;
        if (c < 0)
          report.failures.push_back("pushforward n=" + std::to_string(n) +
                                    " lambda=" + lam.to_string() + " at " +
                                    mu.to_string());
      }
      for (const auto& nu : strict_partitions_in_staircase(n)) {
        ++report.instances;
        for (const auto& [tau, c] : lg_product(lam, nu, n).terms)
          if (c < 0)
            report.failures.push_back("product n=" + std::to_string(n) +
                                      " " + lam.to_string() + " * " +
                                      nu.to_string() + " at " +
                                      tau.to_string());
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport run_verification(const std::string& identity,
                                    const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  if (identity == "eq12") {
    report = per_mu_identity("eq12", opt, check_eq12);
  } else if (identity == "eq16") {
    report = per_mu_identity("eq16", opt, check_eq16);
  } else if (identity == "eq20") {
    report = per_mu_identity("eq20", opt, check_eq20);
  } else if (identity == "eq24") {
    report = verify_eq24_driver(opt);
  } else if (identity == "eq30") {
    report = per_mu_identity("eq30", opt, check_eq30);
  } else if (identity == "lemma3") {
    report = verify_lemma3_driver(opt);
  } else if (identity == "nonneg") {
    report = verify_nonneg_driver(opt);
  } else {
    throw InvalidInput("unknown identity: " + identity +
                       " (expected eq12|eq16|eq20|eq24|eq30|lemma3|nonneg)");
  }
  auto end = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start)
          .count();
  return report;
}

}  // namespace qschur
