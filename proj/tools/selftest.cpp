#include "selftest.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "pw/constructor.hpp"
#include "pw/evaluate.hpp"
#include "pw/pc_poly.hpp"
#include "pw/random.hpp"
#include "pw/verify.hpp"

namespace pw::tools {

namespace {

// A case returns true on success; InvariantViolation is counted separately.
using Case = std::function<bool(Rng&)>;

bool end_to_end(Rng& rng) {
    std::uniform_int_distribution<int> nd(1, 4);
    std::uniform_int_distribution<std::size_t> dd(1, 4);
    const int n = nd(rng);
    const std::size_t d = dd(rng);
    const auto f = random_multilinear(n, 0.4, rng);
    const auto a = random_trace_zero(d, rng);
    const auto w = witness_for_multilinear(f, a);
    return verify(f, w.assignment, a) && w.size() <= size_bound(d, w.trace);
}

bool hollow(Rng& rng) {
    std::uniform_int_distribution<std::size_t> dd(1, 8);
    const auto a = random_trace_zero(dd(rng), rng);
    const auto [p, h] = hollow_similarity(a);
    return h.is_hollow() && h == similarity(p, embed(a, a.size() + 1));
}

bool closed_form(Rng& rng) {
    std::uniform_int_distribution<std::size_t> kd(0, 8);
    const std::size_t k = kd(rng);
    std::uniform_int_distribution<std::size_t> jd(0, k);
    const std::size_t j = jd(rng);
    const std::vector<QMatrix> vs(j, cyclic_shift(k, 1));
    return ikom_closed_form(k, j) == iterated_commutator(vs, QMatrix::unit(k + 1, k, 0));
}

bool round_trip(Rng& rng) {
    std::uniform_int_distribution<int> nd(1, 3);
    std::uniform_int_distribution<int> md(0, 2);
    const int n = nd(rng);
    std::vector<int> om;
    for (int t = 0, m = md(rng); t < m; ++t) om.push_back(n + 1 + t);
    const auto f = random_admissible(n, OmegaSet(om), 0.3, rng);
    return extract_coefficients(expand_admissible(f), n, f.omega()) == f;
}

bool pi_rewrite(Rng& rng) {
    std::uniform_int_distribution<int> nd(2, 3);
    const int n = nd(rng);
    const auto f = random_admissible(n, OmegaSet({n + 1}), 0.3, rng);
    const auto step = reduce_step(f);
    const std::size_t s = 2;
    const auto omega2 = step.g.omega_double_prime();
    const auto us = random_commuting_family(s, omega2.size(), rng);
    WitnessAssignment w(s);
    for (int i = 1; i < n; ++i) w.set_x(i, random_matrix(s, rng));
    for (std::size_t t = 0; t < omega2.size(); ++t) w.set_u(omega2.elements()[t], us[t]);
    if (step.branch == Branch::RewriteNonzero) return evaluate(*step.rewritten, w) == evaluate(step.g, w);
    WitnessAssignment wi = w;
    wi.set_u(n, QMatrix::identity(s));
    return evaluate(step.pi_of_g, wi) == evaluate(step.g, wi);
}

SuiteResult run_suite(const std::string& name, const Case& body, std::size_t cases, std::uint64_t seed,
                      unsigned jobs) {
    SuiteResult result{name, cases, 0, 0, 0.0, {}};
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> passed{0};
    std::atomic<std::size_t> invariants{0};
    std::mutex failure_mutex;
    const auto start = std::chrono::steady_clock::now();
    auto worker = [&] {
        for (std::size_t i = next++; i < cases; i = next++) {
            Rng rng(seed + i * 0x9E3779B97F4A7C15ULL);
            try {
                if (body(rng)) {
                    ++passed;
                    continue;
                }
                std::lock_guard lock(failure_mutex);
                if (result.first_failure.empty()) result.first_failure = "case " + std::to_string(i);
            } catch (const InvariantViolation& e) {
                ++invariants;
                std::lock_guard lock(failure_mutex);
                if (result.first_failure.empty()) result.first_failure = e.what();
            } catch (const std::exception& e) {
                std::lock_guard lock(failure_mutex);
                if (result.first_failure.empty()) result.first_failure = e.what();
            }
        }
    };
    std::vector<std::jthread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    threads.clear();
    result.passed = passed;
    result.invariant_failures = invariants;
    result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::size_t cases, std::uint64_t seed, unsigned jobs) {
    if (jobs == 0) jobs = 1;
    return {
        run_suite("end-to-end witness", end_to_end, cases, seed, jobs),
        run_suite("hollow similarity", hollow, cases, seed + 1, jobs),
        run_suite("bracket closed form", closed_form, cases, seed + 2, jobs),
        run_suite("expand/extract round trip", round_trip, cases, seed + 3, jobs),
        run_suite("pi / rewrite evaluation", pi_rewrite, cases, seed + 4, jobs),
    };
}

}  // namespace pw::tools
