#include "kron/coeffs.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace kron {

Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int m = lambda.size();
    if (mu.size() != m || nu.size() != m) {
        throw std::invalid_argument("kronecker: partitions must have equal size, got " + lambda.display() + ", " + mu.display() + ", " + nu.display());
    }
    const auto& classes = partitions_of(m);
    const auto& row_l = character_row(lambda);
    const auto& row_m = character_row(mu);
    const auto& row_n = character_row(nu);
    Int acc = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        acc += class_size(classes[j]) * row_l[j] * row_m[j] * row_n[j];
    }
    Int order = factorial(m);
    if (acc < 0 || !mpz_divisible_p(acc.get_mpz_t(), order.get_mpz_t())) {
        throw ConsistencyError("kronecker: character sum is not a nonnegative multiple of m!");
    }
    Int k;
    mpz_divexact(k.get_mpz_t(), acc.get_mpz_t(), order.get_mpz_t());
    return k;
}

Int lr(const Partition& lambda, const Partition& alpha, const Partition& beta) {
    if (alpha.size() + beta.size() != lambda.size()) return 0;
    if (!lambda.contains(alpha)) return 0;
    if (beta.empty()) return 1;  // sizes force λ = α
    int rows = lambda.length();
    int k = beta.length();
    // Cells in reverse reading order: each row right to left, top to bottom.
    std::vector<std::pair<int, int>> cells;  // (row, col), 1-based
    for (int r = 1; r <= rows; ++r) {
        for (int c = lambda.part(r); c > alpha.part(r); --c) cells.emplace_back(r, c);
    }
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows + 1), std::vector<int>(static_cast<std::size_t>(lambda.part(1) + 2), 0));
    std::vector<int> count(static_cast<std::size_t>(k + 1), 0);
    long tally = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++tally;
            return;
        }
        auto [r, c] = cells[idx];
        bool has_right = c < lambda.part(r);
        bool has_above = r > 1 && c > alpha.part(r - 1);  // c ≤ λ_{r−1} always holds
        for (int v = 1; v <= k; ++v) {
            if (count[static_cast<std::size_t>(v)] >= beta.part(v)) continue;
            // Lattice condition on the reverse reading word.
            if (v > 1 && count[static_cast<std::size_t>(v)] >= count[static_cast<std::size_t>(v - 1)]) continue;
            if (has_right && v > grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]) continue;
            if (has_above && v <= grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]) continue;
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++count[static_cast<std::size_t>(v)];
            fill(idx + 1);
            --count[static_cast<std::size_t>(v)];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    };
    fill(0);
    return Int(tally);
}

int lr_rectangle(int d, int n, const Partition& alpha, const Partition& beta) {
    auto complement = complement_in_rectangle(alpha, d, n);
    return (complement && *complement == beta) ? 1 : 0;
}

Partition rect_row_partition(const Partition& rho, int d, int n) {
    int first = d * n - rho.size();
    if (first < rho.part(1)) {
        throw std::invalid_argument("first row too short: (dn-|rho|,rho) is not a partition for rho=" + rho.display() + ", d=" + std::to_string(d) + ", n=" + std::to_string(n));
    }
    std::vector<int> parts;
    parts.push_back(first);
    for (int p : rho.parts()) parts.push_back(p);
    return Partition(std::move(parts));
}

Int rectangular_kron(const Partition& rho, int d, int n) {
    return kronecker(rect_row_partition(rho, d, n), rectangle(d, n), rectangle(d, n));
}

Int rectangular_kron(const RectangularQuery& query) {
    return rectangular_kron(query.rho, query.d, query.n);
}

std::map<Partition, Int> tensor_square_decomposition(const Partition& lambda) {
    std::map<Partition, Int> out;
    for (const Partition& nu : partitions_of(lambda.size())) out.emplace(nu, kronecker(lambda, lambda, nu));
    return out;
}

}  // namespace kron
