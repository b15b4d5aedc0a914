#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kron/stable.hpp"
#include "oracles.hpp"

using kron::Int;
using kron::Partition;

TEST_CASE("derangement counts") {
    CHECK(kron::derangement_count(0) == 1);
    CHECK(kron::derangement_count(4) == 9);
    CHECK(kron::derangement_count(6) == 265);
    for (int m = 0; m <= 8; ++m) {
        CHECK(kron::derangement_count(m) == oracle::brute_derangement_count(m));
    }
}

TEST_CASE("end_invariant_dim examples") {
    CHECK(kron::end_invariant_dim(Partition({1}), 1) == 1);
    CHECK(kron::end_invariant_dim(Partition({1}), 3) == 1);
    CHECK(kron::end_invariant_dim(Partition({2}), 2) == 2);
    CHECK(kron::end_invariant_dim(Partition({1, 1}), 2) == 0);
}

TEST_CASE("sl_invariant_dim examples") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(kron::sl_invariant_dim(Partition({1}), n) == 0);
    }
    CHECK(kron::sl_invariant_dim(Partition({2}), 2) == 1);
    CHECK(kron::sl_invariant_dim(Partition({2}), 4) == 1);
    // The first suspected erratum cell: the computed value is 1, not 0.
    CHECK(kron::sl_invariant_dim(Partition({1, 1, 1}), 3) == 1);
}

TEST_CASE("fpf_character examples") {
    CHECK(kron::fpf_character(Partition({1, 1, 1})) == kron::derangement_count(3));
    CHECK(kron::fpf_character(Partition({2, 1})) == 0);
    CHECK(kron::fpf_character(Partition({3})) == 2);
    for (int m = 0; m <= 7; ++m) {
        Partition identity(std::vector<int>(static_cast<std::size_t>(m), 1));
        CHECK(kron::fpf_character(identity) == kron::derangement_count(m));
    }
}

TEST_CASE("fpf ceiling is enforced") {
    int old = kron::brute_force_ceiling();
    kron::set_brute_force_ceiling(4);
    CHECK_THROWS_AS(kron::fpf_character(Partition({5})), kron::ResourceLimitError);
    kron::set_brute_force_ceiling(old);
}

TEST_CASE("fpf_multiplicity examples") {
    CHECK(kron::fpf_multiplicity(Partition({3})) == 1);
    CHECK(kron::fpf_multiplicity(Partition({2, 1})) == 0);
    CHECK(kron::fpf_multiplicity(Partition({1, 1, 1})) == 1);
}

TEST_CASE("fpf multiplicities agree with sl invariants, m <= 6") {
    for (int m = 0; m <= 6; ++m) {
        for (const Partition& rho : kron::partitions_of(m)) {
            Int expected = kron::fpf_multiplicity(rho);
            for (int n = m; n <= m + 1; ++n) {
                CHECK(kron::sl_invariant_dim(rho, std::max(n, 1)) == expected);
            }
        }
    }
}

TEST_CASE("fpf dimension accounting, m <= 7") {
    for (int m = 0; m <= 7; ++m) {
        Int total = 0;
        for (const Partition& rho : kron::partitions_of(m)) {
            total += kron::fpf_multiplicity(rho) * kron::dim_irrep(rho);
        }
        CHECK(total == kron::derangement_count(m));
    }
}

TEST_CASE("trivial-row multiplicity equals the orbit count, m <= 8") {
    for (int m = 0; m <= 8; ++m) {
        CHECK(kron::fpf_multiplicity(Partition(m ? std::vector<int>{m} : std::vector<int>{})) ==
              oracle::derangement_cycle_type_count(m));
    }
}

TEST_CASE("limit_in_dn examples") {
    CHECK(kron::limit_in_dn(Partition({4, 2})) == 6);
    CHECK(kron::limit_in_dn(Partition({2, 2})) == 2);
    CHECK(kron::limit_in_dn(Partition({6})) == 4);  // printed table says 3; see the erratum flags
    CHECK(kron::limit_in_dn(Partition({1})) == 0);
    // Beyond the brute-force ceiling the Pieri route takes over.
    int old = kron::brute_force_ceiling();
    kron::set_brute_force_ceiling(2);
    CHECK(kron::limit_in_dn(Partition({3})) == 1);
    kron::set_brute_force_ceiling(old);
}

TEST_CASE("stable_trivial and stable_sign") {
    CHECK(kron::stable_trivial(5, 5) == 2);
    CHECK(kron::stable_trivial(3, 3) == 1);
    CHECK(kron::stable_trivial(4, 1) == 0);
    CHECK(kron::stable_sign(5, 3) == 1);
    CHECK(kron::stable_sign(6, 6) == 0);
    CHECK(kron::stable_sign(3, 2) == 1);
    for (int m = 0; m <= 6; ++m) {
        for (int n = std::max(m, 1); n <= m + 2; ++n) {
            CHECK(kron::stable_trivial(m, n) == kron::sl_invariant_dim(Partition(m ? std::vector<int>{m} : std::vector<int>{}), n));
            CHECK(kron::stable_sign(m, n) == kron::sl_invariant_dim(Partition(std::vector<int>(static_cast<std::size_t>(m), 1)), n));
        }
    }
}

TEST_CASE("sl_invariant_dim is non-decreasing in n and stabilizes at n = |rho|") {
    for (int r = 0; r <= 5; ++r) {
        for (const Partition& rho : kron::partitions_of(r)) {
            Int previous = -1;
            for (int n = 1; n <= 7; ++n) {
                Int value = kron::sl_invariant_dim(rho, n);
                CHECK(value >= previous);
                previous = value;
                if (n >= r && r >= 1) CHECK(value == kron::sl_invariant_dim(rho, r));
            }
        }
    }
}

TEST_CASE("n2_closed_form") {
    CHECK(kron::n2_closed_form(Partition({2})) == 1);
    CHECK(kron::n2_closed_form(Partition({3, 1, 1})) == 1);
    CHECK(kron::n2_closed_form(Partition({2, 1})) == 0);
    CHECK(kron::n2_closed_form(Partition({3})) == 0);
    CHECK(kron::n2_closed_form(Partition({1, 1, 1})) == 1);
    CHECK(kron::n2_closed_form(Partition{}) == 1);
    CHECK(kron::n2_closed_form(Partition({2, 2})) == 1);
    CHECK(kron::n2_closed_form(Partition({4, 2, 2})) == 1);
    CHECK(kron::n2_closed_form(Partition({3, 3})) == 0);
    CHECK(kron::n2_closed_form(Partition({2, 2, 2, 2})) == 0);
    // Matches the direct character computation wherever the coefficient exists.
    for (int m = 0; m <= 5; ++m) {
        for (const Partition& rho : kron::partitions_of(m)) {
            for (int d = 2; d <= 4; ++d) {
                if (2 * d - m < rho.part(1)) continue;
                CHECK(kron::Int(kron::n2_closed_form(rho)) == kron::rectangular_kron(rho, d, 2));
            }
        }
    }
}

TEST_CASE("p_odd identity, m <= 7") {
    for (int m = 0; m <= 7; ++m) {
        Partition sign_rep(std::vector<int>(static_cast<std::size_t>(m), 1));
        Int total = 0;
        for (const Partition& lambda : kron::partitions_of(m)) {
            total += kron::kronecker(lambda, lambda, sign_rep);
        }
        CHECK(total == kron::self_conjugate_count(m));
    }
}

TEST_CASE("stable_table rows") {
    auto rows = kron::stable_table(4);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].values.size() == 1);
    CHECK(rows[0].values[0].second == 1);
    CHECK(rows[0].derangement_total == 1);

    const auto& row2 = rows[2];
    CHECK(row2.values[0] == std::pair<Partition, Int>{Partition({2}), 1});
    CHECK(row2.values[1] == std::pair<Partition, Int>{Partition({1, 1}), 0});
    CHECK(row2.derangement_total == 1);

    const auto& row4 = rows[4];
    CHECK(row4.values[0].second == 2);   // (4)
    CHECK(row4.values[1].second == 0);   // (3,1)
    CHECK(row4.values[2].second == 2);   // (2,2)
    CHECK(row4.values[3].second == 1);   // (2,1,1)
    CHECK(row4.values[4].second == 0);   // (1,1,1,1)
    CHECK(row4.derangement_total == 9);
    for (const auto& row : rows) CHECK(row.consistency_ok);
}

TEST_CASE("reference table values and errata flags") {
    CHECK(kron::reference_stable_value(Partition({4, 2})) == Int(6));
    CHECK(kron::reference_stable_value(Partition({1, 1, 1})) == Int(0));
    CHECK(kron::reference_stable_value(Partition({6})) == Int(3));
    CHECK_FALSE(kron::reference_stable_value(Partition({7})).has_value());
    CHECK(kron::reference_table_erratum(Partition({1, 1, 1})));
    CHECK(kron::reference_table_erratum(Partition({6})));
    CHECK_FALSE(kron::reference_table_erratum(Partition({4, 2})));

    // Everything except the two erratum cells matches the printed table.
    for (const auto& row : kron::stable_table(6)) {
        for (const auto& [rho, value] : row.values) {
            auto printed = kron::reference_stable_value(rho);
            if (!printed) continue;
            if (kron::reference_table_erratum(rho)) {
                CHECK(value != *printed);
            } else {
                CHECK(value == *printed);
            }
        }
    }
}
