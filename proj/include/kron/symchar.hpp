#pragma once

#include <filesystem>
#include <vector>

#include <gmpxx.h>

#include "kron/errors.hpp"
#include "kron/partition.hpp"

namespace kron {

// Exact unbounded-width integer.  Character values and m!-scale sums
// overflow fixed-width types well inside the supported range.
using Int = mpz_class;

Int factorial(int m);
Int binomial(int m, int k);

// m!/z_μ with z_μ = Π i^{m_i} m_i!.
Int class_size(const Partition& mu);

struct ConjClass {
    Partition cycle_type;
    Int size;
};

// Partitions of m in the canonical decreasing-lexicographic order used to
// index both irreps and conjugacy classes.
const std::vector<Partition>& partitions_of(int m);
std::vector<ConjClass> conjugacy_classes(int m);

// χ_λ(μ) by the Murnaghan–Nakayama recursion over border-strip removals,
// memoized on (remaining shape, remaining class suffix).  Throws
// std::invalid_argument on |λ| ≠ |μ|.
Int mn_character(const Partition& lambda, const Partition& mu);

// The full character row of λ over conjugacy_classes(|λ|), cached across
// calls.  Safe for concurrent use.
const std::vector<Int>& character_row(const Partition& lambda);

// dim[λ] by the hook-length formula (exact division asserted).
Int dim_irrep(const Partition& lambda);
// dim[λ] as χ_λ(1^m); the independent route used by tests.
Int dim_irrep_from_character(const Partition& lambda);

struct CharacterTable {
    int m = 0;
    std::vector<Partition> irreps;
    std::vector<ConjClass> classes;
    std::vector<std::vector<Int>> values;  // values[irrep][class]

    const Int& value(std::size_t irrep, std::size_t cls) const { return values[irrep][cls]; }
    bool row_orthogonality_ok() const;
    bool column_orthogonality_ok() const;
};

CharacterTable build_character_table(int m);

// Like build_character_table, but consults the persistent per-m JSON cache
// (when a cache directory is configured) and enforces the table ceiling.
// A corrupt cache entry is rebuilt with a warning on stderr.
CharacterTable character_table(int m);

// Empty path disables persistence (the default).
void set_table_cache_dir(std::filesystem::path dir);
std::filesystem::path table_cache_dir();
std::filesystem::path table_cache_file(int m);

void set_table_ceiling(int m);
int table_ceiling();  // default 30

}  // namespace kron
