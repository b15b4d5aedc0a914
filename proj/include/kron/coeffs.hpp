#pragma once

#include <map>

#include "kron/partition.hpp"
#include "kron/symchar.hpp"

namespace kron {

// k_{λ,μ,ν} = (1/m!)·Σ_classes class_size·χ_λ·χ_μ·χ_ν.  Symmetric in all
// three arguments; invariant under conjugating any two of them.  Throws
// std::invalid_argument on a size mismatch and ConsistencyError if the
// character sum is not a nonnegative multiple of m!.
Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

// General Littlewood–Richardson coefficient c_λ^{α,β}: the number of
// lattice-word skew tableaux of shape λ/α and content β.  Returns 0 when
// |α|+|β| ≠ |λ| or α ⊄ λ.
Int lr(const Partition& lambda, const Partition& alpha, const Partition& beta);

// Closed form for c_{(d^n)}^{α,β}: 1 iff α and β are complementary in the
// d×n rectangle, 0 otherwise.  Agrees with lr((d^n), α, β) everywhere.
int lr_rectangle(int d, int n, const Partition& alpha, const Partition& beta);

struct RectangularQuery {
    Partition rho;
    int d = 1;
    int n = 1;
};

// λ = (dn−|ρ|, ρ); throws std::invalid_argument when dn−|ρ| < ρ_1.
Partition rect_row_partition(const Partition& rho, int d, int n);

// k_ρ(d,n) = k_{(dn−|ρ|,ρ),(d^n),(d^n)} by direct character sum.
Int rectangular_kron(const Partition& rho, int d, int n);
Int rectangular_kron(const RectangularQuery& query);

// ν ↦ k_{λ,λ,ν} over all ν ⊢ |λ|; Σ_ν value·dim[ν] = dim[λ]².
std::map<Partition, Int> tensor_square_decomposition(const Partition& lambda);

}  // namespace kron
