#include "kron/symchar.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace kron {

namespace {

std::mutex g_config_mutex;
std::filesystem::path g_cache_dir;
int g_table_ceiling = 30;

Int exact_quotient(const Int& num, const Int& den, const char* what) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw ConsistencyError(std::string("non-exact division in ") + what);
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

Int factorial(int m) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(std::max(m, 0)));
    return f;
}

Int binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return b;
}

Int class_size(const Partition& mu) {
    // m!/z_μ, z_μ = Π i^{m_i} m_i!.
    Int z = 1;
    int run = 0;
    int prev = 0;
    for (int p : mu.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= p * run;  // accumulates i^{m_i}·m_i! one repetition at a time
    }
    return exact_quotient(factorial(mu.size()), z, "class_size");
}

const std::vector<Partition>& partitions_of(int m) {
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, enumerate_partitions(m)).first;
    return it->second;
}

std::vector<ConjClass> conjugacy_classes(int m) {
    std::vector<ConjClass> out;
    for (const Partition& mu : partitions_of(m)) out.push_back({mu, class_size(mu)});
    return out;
}

namespace {

// Beta-set encoding of a shape: strictly increasing first-column hook
// lengths.  Removing a border strip of length k moves one bead down by k;
// the strip height is the number of beads jumped over.
std::vector<int> beta_set(const Partition& lambda) {
    int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int j = 1; j <= len; ++j) beta[static_cast<std::size_t>(len - j)] = lambda.part(j) + (len - j);
    return beta;
}

Int mn_recurse(std::vector<int>& beta, int idx, const Partition& mu,
               std::map<std::pair<std::vector<int>, int>, Int>& memo) {
    if (idx >= mu.length()) return 1;
    auto key = std::make_pair(beta, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int k = mu.part(idx + 1);
    Int total = 0;
    for (std::size_t p = 0; p < beta.size(); ++p) {
        int b = beta[p];
        if (b < k) continue;
        int target = b - k;
        auto lb = std::lower_bound(beta.begin(), beta.end(), target);
        if (lb != beta.end() && *lb == target) continue;
        std::size_t dest = static_cast<std::size_t>(lb - beta.begin());
        int height = static_cast<int>(p - dest);
        std::vector<int> next = beta;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(p));
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(dest), target);
        Int sub = mn_recurse(next, idx + 1, mu, memo);
        if (height % 2) {
            total -= sub;
        } else {
            total += sub;
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("shape/class size disagreement");
    if (lambda.size() == 0) return 1;
    std::vector<int> beta = beta_set(lambda);
    std::map<std::pair<std::vector<int>, int>, Int> memo;
    return mn_recurse(beta, 0, mu, memo);
}

const std::vector<Int>& character_row(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, std::vector<Int>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(lambda);
    if (it == cache.end()) {
        std::vector<Int> row;
        for (const Partition& mu : partitions_of(lambda.size())) row.push_back(mn_character(lambda, mu));
        it = cache.emplace(lambda, std::move(row)).first;
    }
    return it->second;
}

Int dim_irrep(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    Int hooks = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            hooks *= lambda.part(i) - j + conj.part(j) - i + 1;
        }
    }
    return exact_quotient(factorial(lambda.size()), hooks, "dim_irrep");
}

Int dim_irrep_from_character(const Partition& lambda) {
    int m = lambda.size();
    return mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(m), 1)));
}

bool CharacterTable::row_orthogonality_ok() const {
    Int order = factorial(m);
    for (std::size_t a = 0; a < irreps.size(); ++a) {
        for (std::size_t b = a; b < irreps.size(); ++b) {
            Int acc = 0;
            for (std::size_t j = 0; j < classes.size(); ++j) acc += classes[j].size * values[a][j] * values[b][j];
            if (acc != (a == b ? order : Int(0))) return false;
        }
    }
    return true;
}

bool CharacterTable::column_orthogonality_ok() const {
    Int order = factorial(m);
    for (std::size_t a = 0; a < classes.size(); ++a) {
        for (std::size_t b = a; b < classes.size(); ++b) {
            Int acc = 0;
            for (std::size_t i = 0; i < irreps.size(); ++i) acc += values[i][a] * values[i][b];
            Int expected = (a == b) ? exact_quotient(order, classes[a].size, "column_orthogonality") : Int(0);
            if (acc != expected) return false;
        }
    }
    return true;
}

CharacterTable build_character_table(int m) {
    CharacterTable table;
    table.m = m;
    table.irreps = partitions_of(m);
    table.classes = conjugacy_classes(m);
    for (const Partition& lambda : table.irreps) {
        std::vector<Int> row;
        for (const ConjClass& cls : table.classes) row.push_back(mn_character(lambda, cls.cycle_type));
        table.values.push_back(std::move(row));
    }
    return table;
}

void set_table_cache_dir(std::filesystem::path dir) {
    std::lock_guard lock(g_config_mutex);
    g_cache_dir = std::move(dir);
}

std::filesystem::path table_cache_dir() {
    std::lock_guard lock(g_config_mutex);
    return g_cache_dir;
}

std::filesystem::path table_cache_file(int m) {
    return table_cache_dir() / ("chartab_m" + std::to_string(m) + ".json");
}

void set_table_ceiling(int m) {
    if (m < 0) throw std::invalid_argument("table ceiling must be nonnegative");
    std::lock_guard lock(g_config_mutex);
    g_table_ceiling = m;
}

int table_ceiling() {
    std::lock_guard lock(g_config_mutex);
    return g_table_ceiling;
}

namespace {

constexpr int kCacheSchemaVersion = 1;

nlohmann::json table_to_json(const CharacterTable& table) {
    nlohmann::json j;
    j["schema_version"] = kCacheSchemaVersion;
    j["m"] = table.m;
    nlohmann::json irreps = nlohmann::json::array();
    for (const Partition& p : table.irreps) irreps.push_back(p.parts());
    j["irreps"] = std::move(irreps);
    nlohmann::json classes = nlohmann::json::array();
    for (const ConjClass& cls : table.classes) {
        classes.push_back({{"cycle_type", cls.cycle_type.parts()}, {"class_size", cls.size.get_str()}});
    }
    j["classes"] = std::move(classes);
    nlohmann::json values = nlohmann::json::array();
    for (const auto& row : table.values) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const Int& v : row) jrow.push_back(v.get_str());
        values.push_back(std::move(jrow));
    }
    j["values"] = std::move(values);
    return j;
}

CharacterTable table_from_json(const nlohmann::json& j, int m) {
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) throw std::runtime_error("schema version mismatch");
    if (j.at("m").get<int>() != m) throw std::runtime_error("m mismatch");
    CharacterTable table;
    table.m = m;
    for (const auto& arr : j.at("irreps")) table.irreps.push_back(Partition(arr.get<std::vector<int>>()));
    for (const auto& obj : j.at("classes")) {
        ConjClass cls;
        cls.cycle_type = Partition(obj.at("cycle_type").get<std::vector<int>>());
        cls.size = Int(obj.at("class_size").get<std::string>());
        table.classes.push_back(std::move(cls));
    }
    for (const auto& jrow : j.at("values")) {
        std::vector<Int> row;
        for (const auto& v : jrow) row.emplace_back(v.get<std::string>());
        table.values.push_back(std::move(row));
    }
    // Structural and cheap integrity checks; a failure means a corrupt entry.
    const auto& expect = partitions_of(m);
    if (table.irreps != expect) throw std::runtime_error("irrep index mismatch");
    if (table.classes.size() != expect.size() || table.values.size() != expect.size()) throw std::runtime_error("shape mismatch");
    Int dim_sq_sum = 0;
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        if (table.classes[i].cycle_type != expect[i]) throw std::runtime_error("class index mismatch");
        if (table.classes[i].size != class_size(expect[i])) throw std::runtime_error("class size mismatch");
        if (table.values[i].size() != expect.size()) throw std::runtime_error("row length mismatch");
        const Int& dim = table.values[i].back();  // identity class (1^m) is last in dec-lex order
        if (dim <= 0) throw std::runtime_error("nonpositive dimension entry");
        dim_sq_sum += dim * dim;
    }
    if (dim_sq_sum != factorial(m)) throw std::runtime_error("dimension sum mismatch");
    return table;
}

void store_table(const CharacterTable& table) {
    std::filesystem::path file = table_cache_file(table.m);
    std::filesystem::create_directories(file.parent_path());
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << table_to_json(table).dump(2) << '\n';
        if (!out) throw std::runtime_error("failed to write cache file " + tmp.string());
    }
    // Rename last so no partial table is ever visible under the final name.
    std::filesystem::rename(tmp, file);
}

}  // namespace

CharacterTable character_table(int m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (m > table_ceiling()) {
        throw ResourceLimitError("character table for m=" + std::to_string(m) + " exceeds ceiling " + std::to_string(table_ceiling()));
    }
    static std::mutex build_mutex;
    std::lock_guard lock(build_mutex);
    std::filesystem::path dir = table_cache_dir();
    if (!dir.empty()) {
        std::filesystem::path file = table_cache_file(m);
        if (std::filesystem::exists(file)) {
            try {
                std::ifstream in(file);
                nlohmann::json j = nlohmann::json::parse(in);
                return table_from_json(j, m);
            } catch (const std::exception& e) {
                std::fprintf(stderr, "warning: rebuilding corrupt character table cache %s (%s)\n", file.string().c_str(), e.what());
            }
        }
        CharacterTable table = build_character_table(m);
        store_table(table);
        return table;
    }
    return build_character_table(m);
}

}  // namespace kron
