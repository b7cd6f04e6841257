#include "hornlab/horn.hpp"

#include "hornlab/errors.hpp"
#include "hornlab/functional.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace hornlab {

namespace {

void validate_subset(const std::vector<int>& I, int n, int r, const char* name) {
    if (static_cast<int>(I.size()) != r) {
        throw PreconditionError(std::string("horn triple: |") + name + "| != r");
    }
    int prev = 0;
    for (int i : I) {
        if (i <= prev || i > n) {
            throw PreconditionError(std::string("horn triple: ") + name +
                                    " not strictly increasing in {1..n}");
        }
        prev = i;
    }
}

long long subset_sum(const std::vector<int>& I) {
    return std::accumulate(I.begin(), I.end(), 0LL);
}

} // namespace

HornTriple make_horn_triple(int n, int r, std::vector<int> I, std::vector<int> J,
                            std::vector<int> K) {
    if (n < 2 || r < 1 || r > n - 1) {
        throw PreconditionError("horn triple: need n >= 2 and 1 <= r <= n-1");
    }
    validate_subset(I, n, r, "I");
    validate_subset(J, n, r, "J");
    validate_subset(K, n, r, "K");
    return HornTriple{n, r, std::move(I), std::move(J), std::move(K)};
}

Partition partition_of(const std::vector<int>& I, int r) {
    validate_subset(I, I.empty() ? 0 : I.back(), r, "I");
    Partition parts(r);
    for (int s = 1; s <= r; ++s) {
        parts[r - s] = I[s - 1] - s;
    }
    return parts;
}

StepQuantile embed_subset(const std::vector<int>& I, int n) {
    const int r = static_cast<int>(I.size());
    std::vector<Rational> breaks(r), values(r);
    for (int s = 1; s <= r; ++s) {
        breaks[s - 1] = Rational(s - 1, r);
        values[s - 1] = Rational(I[s - 1] - s, n);
    }
    return StepQuantile::make(std::move(breaks), std::move(values));
}

QuantileTriple embed(const HornTriple& h) {
    return {embed_subset(h.I, h.n), embed_subset(h.J, h.n), embed_subset(h.K, h.n)};
}

bool in_U(const HornTriple& h) {
    return subset_sum(h.I) + subset_sum(h.J) ==
           subset_sum(h.K) + static_cast<long long>(h.r) * (h.r + 1) / 2;
}

bool in_T(const HornTriple& h) {
    if (!in_U(h)) {
        return false;
    }
    for (int p = 1; p < h.r; ++p) {
        const long long bound = static_cast<long long>(p) * (p + 1) / 2;
        for (const HornTriple& w : cached_T(h.r, p)) {
            long long lhs = 0;
            for (int f : w.I) {
                lhs += h.I[f - 1];
            }
            for (int g : w.J) {
                lhs += h.J[g - 1];
            }
            long long rhs = bound;
            for (int k : w.K) {
                rhs += h.K[k - 1];
            }
            if (lhs > rhs) {
                return false;
            }
        }
    }
    return true;
}

bool in_T_functional(const HornTriple& h) {
    const QuantileTriple q = embed(h);
    if (trace(q) != 0) {
        return false;
    }
    for (int p = 1; p < h.r; ++p) {
        for (const HornTriple& w : cached_T(h.r, p)) {
            if (energy(q, embed(w), Rational(p, h.r)) < 0) {
                return false;
            }
        }
    }
    return true;
}

namespace {

double binomial(int n, int r) {
    double acc = 1.0;
    for (int i = 1; i <= r; ++i) {
        acc *= static_cast<double>(n - r + i) / i;
    }
    return acc;
}

// All size-r subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> all_subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r);
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int s = r - 1;
        while (s >= 0 && cur[s] == n - (r - 1 - s)) {
            --s;
        }
        if (s < 0) {
            break;
        }
        ++cur[s];
        for (int t = s + 1; t < r; ++t) {
            cur[t] = cur[t - 1] + 1;
        }
    }
    return out;
}

} // namespace

void check_enumeration_cap(int n, int r) {
    constexpr double kCap = 1e7;
    const double c = binomial(n, r);
    if (c * c * c > kCap) {
        throw SizeCapError("enumeration refused: C(" + std::to_string(n) + "," +
                           std::to_string(r) + ")^3 exceeds the 10^7 candidate cap");
    }
}

std::vector<HornTriple> enumerate_U(int n, int r) {
    if (n < 2 || r < 1 || r > n - 1) {
        throw PreconditionError("enumerate_U: need n >= 2 and 1 <= r <= n-1");
    }
    check_enumeration_cap(n, r);
    const auto subsets = all_subsets(n, r);
    // Bucket subsets by element sum; K is then constrained to one bucket.
    std::map<long long, std::vector<std::size_t>> by_sum;
    for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        by_sum[subset_sum(subsets[idx])].push_back(idx);
    }
    const long long shift = static_cast<long long>(r) * (r + 1) / 2;
    std::vector<HornTriple> out;
    for (const auto& I : subsets) {
        const long long si = subset_sum(I);
        for (const auto& J : subsets) {
            const auto it = by_sum.find(si + subset_sum(J) - shift);
            if (it == by_sum.end()) {
                continue;
            }
            for (std::size_t k : it->second) {
                out.push_back(HornTriple{n, r, I, J, subsets[k]});
            }
        }
    }
    return out;
}

std::vector<HornTriple> enumerate_T(int n, int r) {
    std::vector<HornTriple> out;
    for (HornTriple& h : enumerate_U(n, r)) {
        if (in_T(h)) {
            out.push_back(std::move(h));
        }
    }
    return out;
}

const std::vector<HornTriple>& cached_T(int n, int r) {
    static std::map<std::pair<int, int>, std::vector<HornTriple>> cache;
    // Recursive: enumerate_T(n, r) re-enters cached_T(r, p) with r < n.
    static std::recursive_mutex mutex;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find({n, r});
    if (it == cache.end()) {
        it = cache.emplace(std::make_pair(n, r), enumerate_T(n, r)).first;
    }
    return it->second;
}

HornTriple dilate_horn(const HornTriple& h, int m) {
    if (m < 1) {
        throw PreconditionError("dilate_horn: m must be >= 1");
    }
    auto dilate_set = [m](const std::vector<int>& I) {
        std::vector<int> out;
        out.reserve(I.size() * static_cast<std::size_t>(m));
        for (int i : I) {
            for (int d = m - 1; d >= 0; --d) {
                out.push_back(m * i - d);
            }
        }
        return out;
    };
    return make_horn_triple(m * h.n, m * h.r, dilate_set(h.I), dilate_set(h.J),
                            dilate_set(h.K));
}

QuantileTriple s_triple(int r) {
    if (r < 1) {
        throw PreconditionError("s_triple: r must be >= 1");
    }
    std::vector<Rational> breaks(r), low(r), high(r);
    const Rational lift(r + 1, 2);
    for (int s = 1; s <= r; ++s) {
        breaks[s - 1] = Rational(s - 1, r);
        low[s - 1] = Rational(s);
        high[s - 1] = Rational(s) + lift;
    }
    return {StepQuantile::make(breaks, low), StepQuantile::make(breaks, low),
            StepQuantile::make(std::move(breaks), std::move(high))};
}

} // namespace hornlab
