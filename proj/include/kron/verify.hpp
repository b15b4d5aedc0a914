#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kron/stable.hpp"

namespace kron {

// One checked identity instance.  passed holds iff lhs = rhs componentwise;
// notes carry erratum flags and rejected-precondition explanations.
struct VerificationReport {
    std::string identity;
    std::string instance;
    std::vector<Int> lhs;
    std::vector<Int> rhs;
    bool passed = false;
    std::string notes;

    nlohmann::json to_json() const;
    std::string summary_line() const;
};

VerificationReport make_report(std::string identity, std::string instance,
                               std::vector<Int> lhs, std::vector<Int> rhs,
                               std::string notes = {});

// Σ_{ν↦θ, |ν|=dn} k_{(d^n),(d^n),ν} = Σ_{α ⊂ d×n, α ⊢ |θ|} k_{α,α,θ}.
VerificationReport check_e3(const Partition& theta, int d, int n);

// Same left side against the Littlewood–Richardson expansion evaluated with
// the general LR engine; exercises the rectangle closed form as a theorem.
VerificationReport check_e4(const Partition& theta, int d, int n);

// Σ_{θ↦ρ} k_ρ(d,n) = Σ_{α ⊢ |θ|, ℓ(α) ≤ n} k_{α,α,θ}, for |θ| ≤ d.
// A precondition violation produces a rejected-instance report.
VerificationReport check_e5(const Partition& theta, int d, int n);

// k_ρ(d,n) over valid d ≤ d_max: non-decreasing, constant once
// 2d ≥ |ρ|+ρ_1 and equal there to sl_invariant_dim(ρ,n).
VerificationReport check_stabilization(const Partition& rho, int n, int d_max);

// k_ρ(d,n) = k_ρ(n,d) on each pair, non-decreasing along increasing d·n.
VerificationReport check_symmetry_monotonicity(const Partition& rho, const std::vector<std::pair<int, int>>& pairs);

// Deterministic sweep of every check plus the module invariants.  Reports
// are sorted by identity then instance; erratum flags appear in notes, not
// as failures.
std::vector<VerificationReport> run_suite(int max_m, int max_dn, unsigned seed);

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace kron
