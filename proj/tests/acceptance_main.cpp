// Acceptance suite: every release-gating check, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include "dimer/counting.hpp"
#include "dimer/entropy.hpp"
#include "dimer/estimator.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dimer;

namespace {

class Criterion {
  public:
    void expect(bool ok, const std::string& what) {
        if (!ok && first_failure_.empty()) first_failure_ = what;
        failed_ = failed_ || !ok;
    }
    bool passed() const { return !failed_; }
    const std::string& first_failure() const { return first_failure_; }

  private:
    bool failed_ = false;
    std::string first_failure_;
};

int g_failures = 0;

void run_criterion(int number, const std::string& name,
                   const std::function<void(Criterion&)>& body) {
    Criterion criterion;
    const auto start = std::chrono::steady_clock::now();
    body(criterion);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.passed()) {
        std::printf("[PASS] criterion %d: %s (%.2fs)\n", number, name.c_str(), seconds);
    } else {
        std::printf("[FAIL] criterion %d: %s (%.2fs)\n       %s\n", number, name.c_str(),
                    seconds, criterion.first_failure().c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

// Independent summation of Catalan's constant: defining alternating series,
// midpoint of two consecutive partial sums. Error under 4e-12 at 200000
// terms since the limit is bracketed by successive partial sums.
Real catalan_oracle() {
    constexpr std::uint64_t kTerms = 200'000;
    Real sum = 0;
    for (std::uint64_t k = 0; k < kTerms; ++k) {
        const std::uint64_t odd = 2 * k + 1;
        const Real term = Real(1) / Real(odd * odd);
        sum += (k % 2 == 0) ? term : -term;
    }
    const std::uint64_t odd = 2 * kTerms + 1;
    const Real next = Real(1) / Real(odd * odd);
    const Real with_next = (kTerms % 2 == 0) ? sum + next : sum - next;
    return (sum + with_next) / 2;
}

struct PublishedEstimate {
    int dimension;
    std::size_t index;
    const char* center;
    const char* half_width;
};

constexpr PublishedEstimate kPublished[] = {
    {2, 2, "0.2957", "0.0072"},
    {3, 2, "0.4531", "0.0014"},
    {4, 4, "0.5748", "0.0006"},
    {5, 4, "0.67855", "0.0001"},
};

BSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(2, 8);
    std::uniform_int_distribution<long long> digits(0, 999'999);
    std::uniform_int_distribution<int> scale(0, 5);
    std::uniform_int_distribution<int> sign(0, 3);
    BSeries series;
    series.dimension = 1;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        std::string raw = std::to_string(digits(rng));
        const int s = scale(rng);
        while (raw.size() <= static_cast<std::size_t>(s)) raw.insert(raw.begin(), '0');
        if (s > 0) raw = raw.substr(0, raw.size() - s) + "." + raw.substr(raw.size() - s);
        if (sign(rng) == 0) raw = "-" + raw;
        series.values.push_back(Decimal::parse(raw));
    }
    return series;
}

std::string dims_of(const std::vector<int>& sides) {
    return dims_string({sides, Boundary::free});
}

}  // namespace

int main() {
    run_criterion(1, "published estimates reproduced exactly: (g, a, b) for d=2..5", [](Criterion& c) {
        for (const auto& expected : kPublished) {
            const TruncationEstimate estimate =
                optimal_truncation(builtin_series(expected.dimension), ErrorPolicy::as_is);
            std::ostringstream got;
            got << "d=" << expected.dimension << ": got g=" << estimate.chosen_index
                << " a=" << estimate.center << " b=" << estimate.half_width << ", want g="
                << expected.index << " a=" << expected.center << " b=" << expected.half_width;
            c.expect(estimate.chosen_index == expected.index &&
                         estimate.center.to_string() == expected.center &&
                         estimate.half_width.to_string() == expected.half_width,
                     got.str());
        }
    });

    run_criterion(2, "chosen indices follow the (2,2,4,4) pattern", [](Criterion& c) {
        std::vector<std::size_t> indices;
        for (int d = 2; d <= 5; ++d)
            indices.push_back(
                optimal_truncation(builtin_series(d), ErrorPolicy::as_is).chosen_index);
        std::ostringstream got;
        for (std::size_t g : indices) got << g << ' ';
        c.expect(indices == std::vector<std::size_t>{2, 2, 4, 4}, "got " + got.str());
    });

    run_criterion(3, "double-if-terminal fires for d=4,5 and not for d=2,3", [](Criterion& c) {
        for (const auto& expected : kPublished) {
            const TruncationEstimate estimate = optimal_truncation(
                builtin_series(expected.dimension), ErrorPolicy::double_if_terminal);
            const bool should_double = expected.dimension >= 4;
            const Decimal raw = Decimal::parse(expected.half_width);
            const Decimal want = should_double ? raw.doubled() : raw;
            std::ostringstream got;
            got << "d=" << expected.dimension << ": got b=" << estimate.half_width
                << " policy=" << to_string(estimate.policy_applied);
            c.expect(estimate.half_width == want &&
                         (estimate.policy_applied == PolicyApplied::doubled) == should_double,
                     got.str());
        }
    });

    run_criterion(4, "lambda2 anchor: G/pi to 9 digits, inside [0.289, 0.303]",
                  [](Criterion& c) {
        const Real lambda2 = lambda2_exact();
        const Real published("0.291560904");
        const Real oracle = catalan_oracle() / boost::math::constants::pi<Real>();
        c.expect(abs(lambda2 - published) <= Real("1e-9") * published,
                 "G/pi = " + lambda2.str(12) + " vs published 0.291560904");
        c.expect(abs(lambda2 - oracle) < Real("5e-12"),
                 "G/pi = " + lambda2.str(15) + " vs alternating-series oracle " + oracle.str(15));
        c.expect(lambda2 >= Real("0.289") && lambda2 <= Real("0.303"),
                 "G/pi outside the published interval");
    });

    run_criterion(5, "transfer matrix equals brute force on every small box", [](Criterion& c) {
        std::vector<std::vector<int>> boxes;
        for (int m = 1; m <= 6; ++m)
            for (int n = 1; n <= 6; ++n) boxes.push_back({m, n});
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int k = 1; k <= 3; ++k) boxes.push_back({a, b, k});
        boxes.push_back({2, 2, 4});
        boxes.push_back({2, 3, 4});
        for (const auto& sides : boxes) {
            const LatticeSpec spec{sides, Boundary::free};
            if (spec.volume() > kBruteForceMaxSites) continue;
            const MatchCount fast = transfer_matrix_count(spec);
            const MatchCount slow = brute_force_count(spec);
            c.expect(fast == slow, dims_of(sides) + ": transfer " + fast.str() + " vs brute " +
                                       slow.str());
        }
    });

    run_criterion(6, "product formula within 1e-9 of exact counts up to 12x12",
                  [](Criterion& c) {
        for (int m = 1; m <= 12; ++m) {
            for (int n = m; n <= 12; ++n) {
                const MatchCount exact = transfer_matrix_count({{m, n}, Boundary::free});
                for (const auto& [rows, cols] : {std::pair{m, n}, {n, m}}) {
                    const Real approx = kasteleyn_count_2d(rows, cols);
                    if (exact == 0) {
                        // The zero eigenvalue factor collapses to ~1e-100 at
                        // working precision but the remaining factors are
                        // huge; anything far below 1 confirms a zero count.
                        c.expect(approx < Real("1e-6"),
                                 dims_of({rows, cols}) + ": formula nonzero for odd grid");
                    } else {
                        const Real relative = abs(approx - Real(exact)) / Real(exact);
                        c.expect(relative < Real("1e-9"),
                                 dims_of({rows, cols}) + ": relative error " + relative.str(3));
                    }
                }
            }
        }
        const MatchCount count = transfer_matrix_count({{8, 8}, Boundary::free});
        c.expect(count == 12988816, "8x8 gave " + count.str());
    });

    run_criterion(7, "free squares: lambda strictly increases, lambda(16x16) in [0.27, 0.2916]",
                  [](Criterion& c) {
        Real previous = -1;
        Real last = 0;
        for (int n = 2; n <= 16; n += 2) {
            const LambdaSample sample = lambda_finite({{n, n}, Boundary::free});
            c.expect(sample.lambda > previous,
                     "lambda(" + std::to_string(n) + "x" + std::to_string(n) +
                         ") did not increase");
            previous = sample.lambda;
            last = sample.lambda;
            // Pin each square against the independent product formula.
            const Real approx = kasteleyn_count_2d(n, n);
            const Real relative = abs(approx - Real(sample.count)) / Real(sample.count);
            c.expect(relative < Real("1e-9"), "Kasteleyn cross-check failed at n=" +
                                                  std::to_string(n));
        }
        c.expect(last >= Real("0.27") && last <= Real("0.2916"),
                 "lambda(16x16) = " + last.str(6));
    });

    run_criterion(8, "3-D spot checks at desk scale; higher-d claims stay out of reach",
                  [](Criterion& c) {
        // lambda_3..lambda_5 cannot be checked here; what can be is that the
        // engines reproduce the table outputs (criteria 1-3) and behave on
        // 3-D boxes at desk scale.
        const MatchCount cube = transfer_matrix_count({{2, 2, 2}, Boundary::free});
        c.expect(cube == 9, "2x2x2 gave " + cube.str());

        const auto entries = lambda_scan(3, Boundary::free, 4);
        bool scanned_4x4 = false;
        for (const auto& entry : entries) {
            if (entry.status == ScanStatus::budget_exceeded)
                c.expect(false, dims_string(entry.spec) + " exceeded the default budget");
            if (entry.status != ScanStatus::ok) continue;
            if (entry.spec.sides[0] == 4 && entry.spec.sides[1] == 4) scanned_4x4 = true;
            c.expect(entry.sample->lambda > Real("0.2") && entry.sample->lambda < Real("0.46"),
                     dims_string(entry.spec) + ": lambda " +
                         entry.sample->lambda.str(6) + " outside (0.2, 0.46)");
        }
        c.expect(scanned_4x4, "scan never reached a 4x4 cross-section");
    });

    run_criterion(9, "property fuzz: estimator equivariance, counting invariants",
                  [](Criterion& c) {
        std::mt19937_64 rng(20260810);
        std::uniform_int_distribution<long long> shift_digits(-50'000, 50'000);
        std::uniform_int_distribution<long long> scale_digits(1, 900);
        for (int trial = 0; trial < 1000; ++trial) {
            const BSeries series = random_series(rng);
            const TruncationEstimate base = optimal_truncation(series, ErrorPolicy::as_is);

            const Decimal shift =
                Decimal::parse(std::to_string(shift_digits(rng))) * Decimal::parse("0.001");
            BSeries shifted = series;
            for (Decimal& v : shifted.values) v = v + shift;
            const TruncationEstimate moved = optimal_truncation(shifted, ErrorPolicy::as_is);
            c.expect(moved.chosen_index == base.chosen_index &&
                         moved.center == base.center + shift &&
                         moved.half_width == base.half_width,
                     "shift equivariance broke at trial " + std::to_string(trial));

            const Decimal factor =
                Decimal::parse(std::to_string(scale_digits(rng))) * Decimal::parse("0.01");
            BSeries scaled = series;
            for (Decimal& v : scaled.values) v = v * factor;
            const TruncationEstimate stretched = optimal_truncation(scaled, ErrorPolicy::as_is);
            c.expect(stretched.chosen_index == base.chosen_index &&
                         stretched.center == base.center * factor &&
                         stretched.half_width == base.half_width * factor,
                     "scale equivariance broke at trial " + std::to_string(trial));
        }

        std::uniform_int_distribution<int> dim(1, 3);
        std::uniform_int_distribution<int> side(1, 4);
        int done = 0;
        while (done < 200) {
            std::vector<int> sides;
            const int d = dim(rng);
            for (int i = 0; i < d; ++i) sides.push_back(side(rng));
            std::int64_t volume = 1;
            for (int s : sides) volume *= s;
            if (volume > 24) continue;
            ++done;

            std::sort(sides.begin(), sides.end());
            const MatchCount reference = transfer_matrix_count({sides, Boundary::free});
            if (volume % 2 != 0)
                c.expect(reference == 0, dims_of(sides) + ": odd box counted " +
                                             reference.str());
            std::vector<int> perm = sides;
            while (std::next_permutation(perm.begin(), perm.end())) {
                const MatchCount permuted = transfer_matrix_count({perm, Boundary::free});
                c.expect(permuted == reference, dims_of(perm) + ": permutation changed the count");
            }
        }
    });

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
