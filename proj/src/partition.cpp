#include "kron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
            throw std::invalid_argument("malformed partition part '" + std::string(token) + "' in '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i) {
        if (inner.part(i) > part(i)) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::display() const { return "(" + to_string() + ")"; }

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(lambda.part(1)));
    for (int j = 1; j <= lambda.part(1); ++j) {
        int count = 0;
        for (int p : lambda.parts()) {
            if (p >= j) ++count;
        }
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

bool interlaces(const Partition& nu, const Partition& theta) {
    int n = std::max(nu.length(), theta.length());
    for (int i = 1; i <= n; ++i) {
        if (nu.part(i) < theta.part(i)) return false;
        if (theta.part(i) < nu.part(i + 1)) return false;
    }
    return true;
}

namespace {

void sort_dec_lex(std::vector<Partition>& out) {
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
}

}  // namespace

std::vector<Partition> pieri_down(const Partition& nu) {
    // θ_i ranges over [ν_{i+1}, ν_i] independently; the result is
    // automatically weakly decreasing.
    std::vector<Partition> out;
    std::vector<int> theta;
    std::function<void(int)> rec = [&](int i) {
        if (i > nu.length()) {
            out.emplace_back(theta);
            return;
        }
        for (int t = nu.part(i); t >= nu.part(i + 1); --t) {
            theta.push_back(t);
            rec(i + 1);
            theta.pop_back();
        }
    };
    rec(1);
    sort_dec_lex(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> pieri_up(const Partition& theta, int target_size) {
    std::vector<Partition> out;
    if (target_size < theta.size()) return out;
    int rows = theta.length() + 1;
    // Choose ν_i ∈ [θ_i, θ_{i−1}] for i ≥ 2, then ν_1 = remainder.
    std::vector<int> tail;  // ν_2, ν_3, ...
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i > rows) {
            int head = target_size - used;
            if (head >= theta.part(1) && (tail.empty() || head >= tail.front())) {
                std::vector<int> parts;
                parts.push_back(head);
                parts.insert(parts.end(), tail.begin(), tail.end());
                out.emplace_back(std::move(parts));
            }
            return;
        }
        for (int v = theta.part(i - 1); v >= theta.part(i); --v) {
            if (used + v > target_size) continue;
            tail.push_back(v);
            rec(i + 1, used + v);
            tail.pop_back();
        }
    };
    rec(2, 0);
    sort_dec_lex(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Partition> complement_in_rectangle(const Partition& alpha, int d, int n) {
    if (d < 0 || n < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
    if (!alpha.fits_in_rectangle(d, n)) return std::nullopt;
    std::vector<int> beta;
    beta.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) beta.push_back(d - alpha.part(n - i + 1));
    return Partition(std::move(beta));
}

Partition rectangle(int d, int n) {
    if (d < 0 || n < 0) throw std::invalid_argument("rectangle sides must be nonnegative");
    if (d == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(n), d));
}

Partition partwise_sum(const Partition& a, const Partition& b) {
    int rows = std::max(a.length(), b.length());
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) parts.push_back(a.part(i) + b.part(i));
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int m, const PartitionFilter& filter) {
    std::vector<Partition> out;
    if (m < 0) return out;
    int min_part = filter.min_part.value_or(1);
    if (min_part < 1) min_part = 1;
    std::vector<int> current;
    // Largest-first recursion emits decreasing lexicographic order directly.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (filter.max_length && static_cast<int>(current.size()) >= *filter.max_length) return;
        for (int p = std::min(remaining, cap); p >= min_part; --p) {
            if (filter.odd_only && p % 2 == 0) continue;
            int next_cap = filter.distinct ? p - 1 : p;
            current.push_back(p);
            rec(remaining - p, next_cap);
            current.pop_back();
        }
    };
    int cap = std::min(m, filter.max_part.value_or(m));
    rec(m, cap);
    return out;
}

int count_distinct_odd_in_range(int m, int lo, int hi) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    if (lo > hi) return 0;
    if (lo % 2 == 0 || hi % 2 == 0) throw std::invalid_argument("range endpoints must be odd");
    PartitionFilter f;
    f.min_part = lo;
    f.max_part = hi;
    f.distinct = true;
    f.odd_only = true;
    return static_cast<int>(enumerate_partitions(m, f).size());
}

int self_conjugate_count(int m) {
    int count = 0;
    for (const Partition& lambda : enumerate_partitions(m)) {
        if (conjugate(lambda) == lambda) ++count;
    }
    return count;
}

}  // namespace kron
