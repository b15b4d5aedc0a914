#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kron/coeffs.hpp"
#include "oracles.hpp"

using kron::Int;
using kron::Partition;

TEST_CASE("kronecker examples") {
    for (int n = 1; n <= 5; ++n) {
        Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
        CHECK(kron::kronecker(column, column, Partition({n})) == 1);
    }
    CHECK(kron::kronecker(Partition({2, 1}), Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(kron::kronecker(Partition({2, 2}), Partition({2, 2}), Partition({3, 1})) == 0);
    CHECK_THROWS_AS(kron::kronecker(Partition({2}), Partition({1, 1}), Partition({3})), std::invalid_argument);
}

TEST_CASE("kronecker agrees with the brute-force character oracle for m <= 4") {
    for (int m = 0; m <= 4; ++m) {
        const auto& parts = kron::partitions_of(m);
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                for (const Partition& c : parts) {
                    CHECK(kron::kronecker(a, b, c) == oracle::brute_kronecker(m, a, b, c));
                }
            }
        }
    }
}

TEST_CASE("kronecker full symmetry and conjugation covariance, m <= 5") {
    for (int m = 0; m <= 5; ++m) {
        const auto& parts = kron::partitions_of(m);
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                for (const Partition& c : parts) {
                    Int k = kron::kronecker(a, b, c);
                    CHECK(k == kron::kronecker(b, a, c));
                    CHECK(k == kron::kronecker(a, c, b));
                    CHECK(k == kron::kronecker(c, b, a));
                    CHECK(k == kron::kronecker(conjugate(a), conjugate(b), c));
                    CHECK(k == kron::kronecker(conjugate(a), b, conjugate(c)));
                }
            }
        }
    }
}

TEST_CASE("lr examples") {
    for (int m = 0; m <= 6; ++m) {
        for (const Partition& lambda : kron::partitions_of(m)) {
            CHECK(kron::lr(lambda, lambda, Partition{}) == 1);
            CHECK(kron::lr(lambda, Partition{}, lambda) == 1);
        }
    }
    CHECK(kron::lr(Partition({2, 1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(kron::lr(Partition({2, 2}), Partition({2, 1}), Partition({1})) == 1);
    CHECK(kron::lr(Partition({2, 1}), Partition({2}), Partition({2})) == 0);  // size mismatch
    // A multiplicity-2 case: c_{(4,3,2)}^{(3,2,1),(2,1)}.
    CHECK(kron::lr(Partition({4, 3, 2}), Partition({3, 2, 1}), Partition({2, 1})) == 2);
}

TEST_CASE("lr is symmetric in alpha and beta, |lambda| <= 6") {
    for (int m = 0; m <= 6; ++m) {
        for (const Partition& lambda : kron::partitions_of(m)) {
            for (int a = 0; a <= m; ++a) {
                for (const Partition& alpha : kron::enumerate_partitions(a)) {
                    for (const Partition& beta : kron::enumerate_partitions(m - a)) {
                        CHECK(kron::lr(lambda, alpha, beta) == kron::lr(lambda, beta, alpha));
                    }
                }
            }
        }
    }
}

TEST_CASE("lr agrees with a character-theoretic oracle, |lambda| <= 6") {
    // c_lambda^{alpha,beta} is the multiplicity of chi_lambda in the
    // character induced from chi_alpha x chi_beta, computed as
    // sum over pairs of classes with binomial weights.
    for (int m = 0; m <= 6; ++m) {
        for (const Partition& lambda : kron::partitions_of(m)) {
            for (int a = 0; a <= m; ++a) {
                int b = m - a;
                for (const Partition& alpha : kron::enumerate_partitions(a)) {
                    for (const Partition& beta : kron::enumerate_partitions(b)) {
                        // <chi_lambda|_{S_a x S_b}, chi_alpha x chi_beta> by Frobenius
                        // reciprocity: sum over class pairs (mu of a, nu of b) of
                        // |C_mu||C_nu|/ (a! b!) * chi_lambda(mu cup nu) chi_alpha(mu) chi_beta(nu).
                        Int acc = 0;
                        for (const Partition& mu : kron::partitions_of(a)) {
                            for (const Partition& nu : kron::partitions_of(b)) {
                                std::vector<int> merged(mu.parts());
                                merged.insert(merged.end(), nu.parts().begin(), nu.parts().end());
                                acc += kron::class_size(mu) * kron::class_size(nu) *
                                       kron::mn_character(lambda, Partition(merged)) *
                                       kron::mn_character(alpha, mu) * kron::mn_character(beta, nu);
                            }
                        }
                        Int order = kron::factorial(a) * kron::factorial(b);
                        REQUIRE(mpz_divisible_p(acc.get_mpz_t(), order.get_mpz_t()));
                        Int expected;
                        mpz_divexact(expected.get_mpz_t(), acc.get_mpz_t(), order.get_mpz_t());
                        CHECK(kron::lr(lambda, alpha, beta) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("lr_rectangle examples and agreement with lr") {
    CHECK(kron::lr_rectangle(2, 2, Partition({2, 1}), Partition({1})) == 1);
    CHECK(kron::lr_rectangle(2, 2, Partition({2, 1}), Partition({2})) == 0);
    CHECK(kron::lr_rectangle(3, 2, Partition{}, Partition({3, 3})) == 1);

    for (int d = 1; d * 1 <= 9; ++d) {
        for (int n = 1; d * n <= 9; ++n) {
            Partition rect = kron::rectangle(d, n);
            for (int a = 0; a <= d * n; ++a) {
                for (const Partition& alpha : kron::enumerate_partitions(a)) {
                    for (const Partition& beta : kron::enumerate_partitions(d * n - a)) {
                        CHECK(kron::lr(rect, alpha, beta) == kron::lr_rectangle(d, n, alpha, beta));
                    }
                }
            }
        }
    }
}

TEST_CASE("rect_row_partition validation") {
    CHECK(kron::rect_row_partition(Partition({2}), 2, 2) == Partition({2, 2}));
    CHECK(kron::rect_row_partition(Partition{}, 3, 2) == Partition({6}));
    CHECK_THROWS_AS(kron::rect_row_partition(Partition({4}), 2, 2), std::invalid_argument);
}

TEST_CASE("rectangular_kron examples") {
    CHECK(kron::rectangular_kron(Partition{}, 2, 2) == 1);
    CHECK(kron::rectangular_kron(Partition{}, 3, 2) == 1);
    CHECK(kron::rectangular_kron(Partition({2}), 2, 2) == 1);
    CHECK(kron::rectangular_kron(Partition({1}), 2, 2) == 0);
}

TEST_CASE("tensor_square_decomposition") {
    auto sign_square = kron::tensor_square_decomposition(Partition({1, 1}));
    CHECK(sign_square.at(Partition({2})) == 1);
    CHECK(sign_square.at(Partition({1, 1})) == 0);

    auto std_square = kron::tensor_square_decomposition(Partition({2, 1}));
    CHECK(std_square.at(Partition({3})) == 1);
    CHECK(std_square.at(Partition({2, 1})) == 1);
    CHECK(std_square.at(Partition({1, 1, 1})) == 1);

    for (int m = 0; m <= 6; ++m) {
        for (const Partition& lambda : kron::partitions_of(m)) {
            Int total = 0;
            for (const auto& [nu, k] : kron::tensor_square_decomposition(lambda)) {
                total += k * kron::dim_irrep(nu);
            }
            CHECK(total == kron::dim_irrep(lambda) * kron::dim_irrep(lambda));
        }
    }
}

TEST_CASE("jk nonvanishing bound, exhaustive m <= 6") {
    for (int m = 0; m <= 6; ++m) {
        const auto& parts = kron::partitions_of(m);
        for (const Partition& a : parts) {
            for (const Partition& b : parts) {
                for (const Partition& c : parts) {
                    if (kron::kronecker(a, b, c) != 0) {
                        CHECK(m - c.part(1) <= (m - a.part(1)) + (m - b.part(1)));
                    }
                }
            }
        }
    }
}

TEST_CASE("semigroup property on seeded random instances") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> size_dist(1, 5);
        int m1 = size_dist(rng);
        int m2 = size_dist(rng);
        auto pick_nonzero = [&](int m) {
            const auto& parts = kron::partitions_of(m);
            std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
            while (true) {
                Partition a = parts[pick(rng)];
                Partition b = parts[pick(rng)];
                Partition c = parts[pick(rng)];
                Int k = kron::kronecker(a, b, c);
                if (k > 0) return std::make_tuple(a, b, c, k);
            }
        };
        auto [a1, b1, c1, k1] = pick_nonzero(m1);
        auto [a2, b2, c2, k2] = pick_nonzero(m2);
        Int combined = kron::kronecker(kron::partwise_sum(a1, a2), kron::partwise_sum(b1, b2), kron::partwise_sum(c1, c2));
        CHECK(combined >= std::max(k1, k2));
    }
}
