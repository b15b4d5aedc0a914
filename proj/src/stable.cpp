#include "kron/stable.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kron {

namespace {

std::mutex g_ceiling_mutex;
int g_brute_force_ceiling = 9;

}  // namespace

void set_brute_force_ceiling(int m) {
    if (m < 0) throw std::invalid_argument("brute-force ceiling must be nonnegative");
    std::lock_guard lock(g_ceiling_mutex);
    g_brute_force_ceiling = m;
}

int brute_force_ceiling() {
    std::lock_guard lock(g_ceiling_mutex);
    return g_brute_force_ceiling;
}

Int derangement_count(int m) {
    Int total = 0;
    for (int p = 0; p <= m; ++p) {
        Int term = binomial(m, p) * factorial(m - p);
        if (p % 2) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

Int end_invariant_dim(const Partition& theta, int n) {
    Int total = 0;
    for (const Partition& alpha : partitions_of(theta.size())) {
        if (alpha.length() > n) continue;
        total += kronecker(alpha, alpha, theta);
    }
    return total;
}

Int sl_invariant_dim(const Partition& rho, int n) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, Int> memo;
    {
        std::lock_guard lock(mutex);
        auto it = memo.find({rho, n});
        if (it != memo.end()) return it->second;
    }
    Int value = end_invariant_dim(rho, n);
    for (const Partition& smaller : pieri_down(rho)) {
        if (smaller == rho) continue;
        value -= sl_invariant_dim(smaller, n);
    }
    if (value < 0) {
        throw ConsistencyError("sl_invariant_dim: negative intermediate for rho=" + rho.display() + ", n=" + std::to_string(n));
    }
    std::lock_guard lock(mutex);
    memo.emplace(std::make_pair(rho, n), value);
    return value;
}

namespace {

// One-line derangements of {0..m-1}, cached per m.
const std::vector<std::vector<int>>& derangement_list(int m) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<int>>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> list;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool fixed = false;
        for (int i = 0; i < m; ++i) {
            if (perm[static_cast<std::size_t>(i)] == i) {
                fixed = true;
                break;
            }
        }
        if (!fixed) list.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cache.emplace(m, std::move(list)).first->second;
}

// A representative permutation with the given cycle type, one cycle per part.
std::vector<int> class_representative(const Partition& mu) {
    std::vector<int> perm(static_cast<std::size_t>(mu.size()));
    int base = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) perm[static_cast<std::size_t>(base + i)] = base + (i + 1) % len;
        base += len;
    }
    return perm;
}

}  // namespace

Int fpf_character(const Partition& mu) {
    int m = mu.size();
    if (m > brute_force_ceiling()) {
        throw ResourceLimitError("fpf_character: m=" + std::to_string(m) + " exceeds brute-force ceiling " + std::to_string(brute_force_ceiling()));
    }
    std::vector<int> rep = class_representative(mu);
    long count = 0;
    for (const auto& sigma : derangement_list(m)) {
        bool commutes = true;
        for (int i = 0; i < m; ++i) {
            if (sigma[static_cast<std::size_t>(rep[static_cast<std::size_t>(i)])] != rep[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]) {
                commutes = false;
                break;
            }
        }
        if (commutes) ++count;
    }
    return Int(count);
}

Int fpf_multiplicity(const Partition& rho) {
    int m = rho.size();
    const auto& classes = partitions_of(m);
    const auto& row = character_row(rho);
    Int acc = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        acc += class_size(classes[j]) * row[j] * fpf_character(classes[j]);
    }
    Int order = factorial(m);
    if (acc < 0 || !mpz_divisible_p(acc.get_mpz_t(), order.get_mpz_t())) {
        throw ConsistencyError("fpf_multiplicity: inner product is not a nonnegative multiple of m!");
    }
    Int k;
    mpz_divexact(k.get_mpz_t(), acc.get_mpz_t(), order.get_mpz_t());
    return k;
}

Int limit_in_dn(const Partition& rho) {
    if (rho.size() <= brute_force_ceiling()) return fpf_multiplicity(rho);
    return sl_invariant_dim(rho, rho.size());
}

Int stable_trivial(int m, int n) {
    if (m == 0) return 1;
    PartitionFilter f;
    f.min_part = 2;
    f.max_part = n;
    return Int(static_cast<long>(enumerate_partitions(m, f).size()));
}

Int stable_sign(int m, int n) {
    int hi = 2 * n - 1;
    if (hi < 3) return m == 0 ? 1 : 0;
    return Int(count_distinct_odd_in_range(m, 3, hi));
}

int n2_closed_form(const Partition& rho) {
    // Nonzero exactly when, padded with zeros to three parts, all three parts
    // share one parity: all even (length <= 3) or all odd (length exactly 3).
    if (rho.length() > 3) return 0;
    int parity = rho.part(1) % 2;
    for (int i = 2; i <= 3; ++i) {
        if (rho.part(i) % 2 != parity) return 0;
    }
    return 1;
}

std::vector<StableTableRow> stable_table(int m_max) {
    if (m_max > brute_force_ceiling()) {
        throw ResourceLimitError("stable_table: m_max exceeds brute-force ceiling");
    }
    std::vector<StableTableRow> rows;
    for (int m = 0; m <= m_max; ++m) {
        StableTableRow row;
        row.m = m;
        row.derangement_total = derangement_count(m);
        Int accounted = 0;
        for (const Partition& rho : partitions_of(m)) {
            Int value = fpf_multiplicity(rho);
            accounted += value * dim_irrep(rho);
            row.values.emplace_back(rho, std::move(value));
        }
        row.consistency_ok = (accounted == row.derangement_total);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<Int> reference_stable_value(const Partition& rho) {
    static const std::map<Partition, int> table = {
        {{2}, 1},          {{1, 1}, 0},
        {{3}, 1},          {{2, 1}, 0},       {{1, 1, 1}, 0},
        {{4}, 2},          {{3, 1}, 0},       {{2, 2}, 2},       {{2, 1, 1}, 1},    {{1, 1, 1, 1}, 0},
        {{5}, 2},          {{4, 1}, 1},       {{3, 2}, 2},       {{3, 1, 1}, 3},    {{2, 2, 1}, 1},
        {{2, 1, 1, 1}, 1}, {{1, 1, 1, 1, 1}, 1},
        {{6}, 3},          {{5, 1}, 1},       {{4, 2}, 6},       {{3, 3}, 1},       {{4, 1, 1}, 4},
        {{3, 2, 1}, 4},    {{2, 2, 2}, 5},    {{3, 1, 1, 1}, 4}, {{2, 2, 1, 1}, 2}, {{2, 1, 1, 1, 1}, 2},
        {{1, 1, 1, 1, 1, 1}, 0},
    };
    auto it = table.find(rho);
    if (it == table.end()) return std::nullopt;
    return Int(it->second);
}

bool reference_table_erratum(const Partition& rho) {
    return rho == Partition{1, 1, 1} || rho == Partition{6};
}

}  // namespace kron
