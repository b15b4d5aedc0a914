#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kron/coeffs.hpp"

namespace kron {

// D_m = Σ_{p=0}^m (−1)^p·binom(m,p)·(m−p)!.
Int derangement_count(int m);

// dim S_θ(End_n)^{GL_n} = Σ_{α ⊢ |θ|, ℓ(α) ≤ n} k_{α,α,θ}.
Int end_invariant_dim(const Partition& theta, int n);

// dim S_ρ(sl_n)^{GL_n} by Pieri inversion of end_invariant_dim:
//   sl(ρ,n) = end(ρ,n) − Σ_{ρ↦ρ', ρ'≠ρ} sl(ρ',n).
// Memoized; a negative intermediate throws ConsistencyError.
Int sl_invariant_dim(const Partition& rho, int n);

// Number of derangements commuting with a fixed representative of the
// class μ, by brute force over S_m.  Throws ResourceLimitError above the
// brute-force ceiling.
Int fpf_character(const Partition& mu);

// Multiplicity of [ρ] in the derangement-spanned submodule of the
// conjugating representation; the stable limit of k_ρ(d,n).
Int fpf_multiplicity(const Partition& rho);

// The two-sided stable value: fpf_multiplicity within the brute-force
// ceiling, sl_invariant_dim(ρ, |ρ|) beyond it.
Int limit_in_dn(const Partition& rho);

// Number of partitions of m with parts in [2, n]; the stable value for
// ρ = (m).
Int stable_trivial(int m, int n);

// Number of partitions of m into distinct odd parts in [3, 2n−1]; the
// stable value for ρ = (1^m).
Int stable_sign(int m, int n);

// k_ρ(d,2): 1 iff ρ is empty, even of length one, or odd of length three.
int n2_closed_form(const Partition& rho);

struct StableTableRow {
    int m = 0;
    std::vector<std::pair<Partition, Int>> values;  // dec-lex by partition
    Int derangement_total;
    bool consistency_ok = false;  // Σ values·dim = D_m
};

// Rows m = 0..m_max with values from fpf_multiplicity.
std::vector<StableTableRow> stable_table(int m_max);

// The value printed in the source table for |ρ| in 2..6, including the two
// entries the artifact computes differently; absent outside that range.
std::optional<Int> reference_stable_value(const Partition& rho);

// True for the two table entries whose printed values disagree with the
// computed ones: (1,1,1) and (6).
bool reference_table_erratum(const Partition& rho);

void set_brute_force_ceiling(int m);
int brute_force_ceiling();  // default 9

}  // namespace kron
