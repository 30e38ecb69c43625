#include "hypercolor/distance.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypercolor/hypgeo.hpp"

namespace hypercolor {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HYPERCOLOR_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return std::min(t, 64);
    }
    return 1;
}

BitVec vector_of_mask(const std::vector<BitVec>& basis, unsigned long long mask, int n) {
    BitVec v(n);
    for (int b = 0; mask; ++b, mask >>= 1)
        if (mask & 1) v ^= basis[b];
    return v;
}

// Minimum weight over all nonzero kernel vectors outside the rowspace,
// by Gray-code traversal of the kernel span.
void exhaustive_scan(const std::vector<BitVec>& kernel, const GF2Span& rowspace, int n,
                     unsigned long long lo, unsigned long long hi, int& best, long& steps) {
    BitVec cur = vector_of_mask(kernel, (lo - 1) ^ ((lo - 1) >> 1), n);
    for (unsigned long long i = lo; i < hi; ++i) {
        cur ^= kernel[std::countr_zero(i)];
        ++steps;
        int w = cur.popcount();
        if (w < best && !rowspace.contains(cur)) best = w;
    }
}

}  // namespace

DistanceResult exact_distance(const ColorCode& code, const DistanceBudget& budget) {
    const int n = code.n;
    if (n <= 0) throw std::invalid_argument("code with no qubits");
    GF2Span rowspace = row_span(code.H);
    auto kernel = kernel_basis(code.H);
    int dim = static_cast<int>(kernel.size());

    DistanceResult res;
    res.method = "column-scan";

    // Weight 1: a qubit on no plaquette.
    std::map<std::vector<int>, int> col_seen;
    int best2 = -1;
    for (int v = 0; v < n; ++v) {
        std::vector<int> col;
        for (int i = 0; i < code.H.rows(); ++i)
            if (code.H.get(i, v)) col.push_back(i);
        if (col.empty()) {
            BitVec e(n);
            e.set(v);
            if (!rowspace.contains(e)) {
                res.value = 1;
                res.exact = true;
                return res;
            }
        }
        auto [it, fresh] = col_seen.try_emplace(col, v);
        if (!fresh && best2 < 0) {
            // Equal columns: the only shape a weight-2 kernel vector can take.
            BitVec e(n);
            e.set(it->second);
            e.set(v);
            if (!rowspace.contains(e)) best2 = 2;
        }
    }
    res.lower_bound = 2;
    if (best2 == 2) {
        res.value = 2;
        res.exact = true;
        return res;
    }
    res.lower_bound = 3;

    if (dim == 0) {
        res.exact = true;  // kernel is trivial: no logical operators at all
        return res;
    }

    if (dim <= budget.max_exhaustive_dim && (1LL << dim) <= budget.max_steps) {
        res.method = "exhaustive";
        unsigned long long total = 1ULL << dim;
        int threads = std::min<long long>(resolve_threads(budget.threads), 16);
        threads = static_cast<int>(std::min<unsigned long long>(threads, total / 1024 + 1));
        int best = n + 1;
        if (threads <= 1) {
            long steps = 0;
            exhaustive_scan(kernel, rowspace, n, 1, total, best, steps);
            res.steps = steps;
        } else {
            std::vector<int> bests(threads, n + 1);
            std::vector<long> steps(threads, 0);
            std::vector<std::thread> pool;
            unsigned long long chunk = total / threads;
            for (int t = 0; t < threads; ++t) {
                unsigned long long lo = std::max<unsigned long long>(1, t * chunk);
                unsigned long long hi = (t + 1 == threads) ? total : (t + 1) * chunk;
                pool.emplace_back([&, t, lo, hi] {
                    exhaustive_scan(kernel, rowspace, n, lo, hi, bests[t], steps[t]);
                });
            }
            for (auto& th : pool) th.join();
            for (int t = 0; t < threads; ++t) {
                best = std::min(best, bests[t]);
                res.steps += steps[t];
            }
        }
        if (best <= n) {
            res.value = best;
            res.exact = true;
        } else {
            res.exact = true;  // whole kernel lies in the rowspace
        }
        return res;
    }

    // Weight-limited search over a systematic form of the kernel code:
    // after finishing information-weight t, every codeword of total weight
    // <= t has been seen.
    res.method = "weight-limited";
    std::vector<BitVec> gen = kernel;
    {
        int r = 0;
        for (int c = 0; c < n && r < dim; ++c) {
            int pr = -1;
            for (int i = r; i < dim; ++i)
                if (gen[i].get(c)) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(gen[r], gen[pr]);
            for (int i = 0; i < dim; ++i)
                if (i != r && gen[i].get(c)) gen[i] ^= gen[r];
            ++r;
        }
    }

    int best = n + 1;
    long steps = 0;
    bool exhausted = false;
    BitVec acc(n);
    std::function<void(int, int, int)> enumerate = [&](int start, int remaining, int) {
        if (exhausted) return;
        if (remaining == 0) {
            ++steps;
            if (steps > budget.max_steps) {
                exhausted = true;
                return;
            }
            int w = acc.popcount();
            if (w < best && !rowspace.contains(acc)) best = w;
            return;
        }
        for (int i = start; i <= dim - remaining; ++i) {
            acc ^= gen[i];
            enumerate(i + 1, remaining - 1, 0);
            acc ^= gen[i];
            if (exhausted) return;
        }
    };

    int completed_t = 0;
    for (int t = 1; t <= std::min(budget.weight_cap, dim); ++t) {
        enumerate(0, t, 0);
        if (exhausted) break;
        completed_t = t;
        if (best <= completed_t + 1) break;  // lower bound meets the best find
    }
    res.steps = steps;
    res.lower_bound = std::max(res.lower_bound, completed_t + 1);
    if (best <= n) res.value = best;
    res.exact = res.value && *res.value <= res.lower_bound;
    return res;
}

EstimateComparison estimate_vs_exact(const ColorCode& code, int p, int g,
                                     const DistanceBudget& budget) {
    EstimateComparison cmp;
    cmp.p = p;
    cmp.g = g;
    cmp.estimate = distance_estimate(p, g);
    cmp.ratio = estimate_ratio(p, g);
    cmp.exact = exact_distance(code, budget);
    cmp.agree = cmp.exact.exact && cmp.exact.value && *cmp.exact.value == cmp.estimate;
    return cmp;
}

BoundFlags bounds_check(int n, int k, int d) {
    if (n <= 0 || k <= 0 || d <= 0) throw std::invalid_argument("bounds need positive n, k, d");
    using boost::multiprecision::cpp_int;
    BoundFlags flags;
    flags.singleton_ok = (n - k >= 2 * d - 2);
    flags.singleton_saturated = (n - k == 2 * d - 2);

    cpp_int sphere = 0, binom = 1, pow3 = 1;
    int t = (d - 1) / 2;
    for (int j = 0; j <= t; ++j) {
        sphere += binom * pow3;
        binom = binom * (n - j) / (j + 1);
        pow3 *= 3;
    }
    flags.hamming_ok = (cpp_int(1) << k) * sphere <= (cpp_int(1) << n);
    return flags;
}

}  // namespace hypercolor
