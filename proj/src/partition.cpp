#include "crl_atlas/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crl_atlas {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("a partition needs at least one part");
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto parse_int = [&](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        if (s.empty()) throw std::invalid_argument("empty partition entry");
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed partition entry '" + std::string(s) + "'");
            v = v * 10 + (c - '0');
            if (v > 100000) throw std::invalid_argument("partition entry too large");
        }
        return v;
    };
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (auto caret = item.find('^'); caret != std::string_view::npos) {
            int value = parse_int(item.substr(0, caret));
            int times = parse_int(item.substr(caret + 1));
            if (times < 1) throw std::invalid_argument("exponent must be positive");
            parts.insert(parts.end(), static_cast<std::size_t>(times), value);
        } else {
            parts.push_back(parse_int(item));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::count_of(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::incremented() const {
    std::vector<int> p(parts_);
    for (int& x : p) ++x;
    return Partition(std::move(p));
}

Partition Partition::decremented() const {
    std::vector<int> p(parts_);
    for (int& x : p) {
        if (x == 1) throw std::invalid_argument("cannot decrement a part equal to 1");
        --x;
    }
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::compact_str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

namespace {

void enumerate_into(int remaining, int max_part, int min_part, std::optional<int> slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        if (!slots || *slots == 0) out.emplace_back(prefix);
        return;
    }
    if (slots && *slots == 0) return;
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        if (slots && static_cast<long>(p) * *slots < remaining) break;  // cannot fill with parts <= p
        prefix.push_back(p);
        enumerate_into(remaining - p, p, min_part, slots ? std::optional<int>(*slots - 1) : std::nullopt, prefix, out);
        prefix.pop_back();
    }
}

// Distinct values of a partition with their counts, increasing by value.
std::map<int, int> value_counts(const Partition& p) {
    std::map<int, int> out;
    for (int v : p.parts()) ++out[v];
    return out;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int r, int min_part, std::optional<int> length) {
    if (r < 1) throw std::invalid_argument("partitions are enumerated for r >= 1");
    if (min_part < 1) throw std::invalid_argument("min_part must be positive");
    std::vector<Partition> out;
    if (length && *length < 1) return out;
    std::vector<int> prefix;
    enumerate_into(r, r, min_part, length, prefix, out);
    return out;
}

std::int64_t count_partitions(int r, int min_part, int length) {
    // ways[n][l]: partitions of n into exactly l parts, each in [min_part, p].
    if (r < 0 || length < 0) return 0;
    std::vector<std::vector<std::int64_t>> ways(static_cast<std::size_t>(r) + 1,
                                                std::vector<std::int64_t>(static_cast<std::size_t>(length) + 1, 0));
    ways[0][0] = 1;
    for (int p = min_part; p <= r; ++p)
        for (int n = p; n <= r; ++n)
            for (int l = 1; l <= length; ++l) ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)] +=
                ways[static_cast<std::size_t>(n - p)][static_cast<std::size_t>(l - 1)];
    return ways[static_cast<std::size_t>(r)][static_cast<std::size_t>(length)];
}

std::vector<Partition> descendants(const Partition& lambda, int j) {
    if (j < 0 || j > lambda.length()) throw std::out_of_range("j must lie in [0, |lambda|]");
    const auto counts = value_counts(lambda);
    std::vector<std::pair<int, int>> groups(counts.begin(), counts.end());
    std::vector<Partition> out;
    std::vector<int> taken(groups.size(), 0);

    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int left) {
        if (g == groups.size()) {
            if (left != 0) return;
            std::vector<int> parts;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                const auto [value, count] = groups[i];
                parts.insert(parts.end(), static_cast<std::size_t>(count - taken[i]), value);
                if (value > 1) parts.insert(parts.end(), static_cast<std::size_t>(taken[i]), value - 1);
            }
            if (!parts.empty()) out.emplace_back(std::move(parts));
            return;
        }
        for (int k = 0; k <= std::min(left, groups[g].second); ++k) {
            taken[g] = k;
            rec(g + 1, left - k);
        }
        taken[g] = 0;
    };
    rec(0, j);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> children(const Partition& lambda, int j) {
    if (j < 0 || j > lambda.length() - lambda.count_of(1))
        throw std::out_of_range("j must lie in [0, |lambda| - m_1(lambda)]");
    std::vector<Partition> out;
    for (auto& p : descendants(lambda, j))
        if (p.length() == lambda.length()) out.push_back(std::move(p));
    return out;
}

std::int64_t multiplicity(const Partition& child, const Partition& lambda) {
    const int n = lambda.length();
    const int padding = n - child.length();
    if (padding < 0) return 0;
    // Padded zero parts must all be raised to 1. For each value v of the
    // child, the number k_v of its parts raised to v + 1 is forced by
    // matching the counts of lambda from the bottom up:
    //   m_v(lambda) = c_v - k_v + k_{v-1}, with k_0 = padding.
    const auto c = value_counts(child);
    const int top = std::max(child.largest(), lambda.largest()) + 1;
    std::int64_t ways = 1;
    int carried = padding;
    for (int v = 1; v <= top; ++v) {
        auto it = c.find(v);
        const int cv = it == c.end() ? 0 : it->second;
        const int kv = cv + carried - lambda.count_of(v);
        if (kv < 0 || kv > cv) return 0;
        ways *= choose(cv, kv);
        carried = kv;
    }
    return carried == 0 ? ways : 0;
}

std::vector<CountRow> count_table(Parity parity, int max_k) {
    if (max_k < 3) throw std::invalid_argument("count tables start at k = 3");
    std::vector<CountRow> rows;
    for (int k = 3; k <= max_k; ++k) {
        CountRow row;
        row.k = k;
        if (parity == Parity::odd) {
            row.d = 2 * k - 1;
            for (int i = 0; i <= k - 2; ++i) row.counts.push_back(count_partitions(row.d, 2, k - i - 1));
        } else {
            row.d = 2 * k;
            for (int i = 0; i <= k - 1; ++i) row.counts.push_back(count_partitions(row.d, 2, k - i));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace crl_atlas
