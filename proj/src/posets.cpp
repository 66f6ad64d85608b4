#include "bnchi/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bnchi {

namespace {

constexpr int kWordBits = 64;

inline bool bit(const std::vector<std::uint64_t>& set, int i) {
    return (set[static_cast<std::size_t>(i / kWordBits)] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::vector<std::uint64_t>& set, int i) {
    set[static_cast<std::size_t>(i / kWordBits)] |= std::uint64_t{1} << (i % kWordBits);
}

}  // namespace

FinitePoset::FinitePoset(int n, std::vector<std::pair<int, int>> covers)
    : n_(n), covers_(std::move(covers)) {
    if (n < 0) throw std::invalid_argument("FinitePoset: negative size");
    for (auto [lo, hi] : covers_)
        if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
            throw std::invalid_argument("FinitePoset: cover out of range");
    build_closure();
}

void FinitePoset::build_closure() {
    const std::size_t words = static_cast<std::size_t>((n_ + kWordBits - 1) / kWordBits);
    above_.assign(static_cast<std::size_t>(n_), std::vector<std::uint64_t>(words, 0));
    // Topological propagation: above_[lo] |= {hi} | above_[hi].
    std::vector<std::vector<int>> up(static_cast<std::size_t>(n_));
    for (auto [lo, hi] : covers_) up[static_cast<std::size_t>(lo)].push_back(hi);
    // Process elements from top to bottom: repeatedly take an element all of
    // whose uppers are done.
    std::vector<int> upper_unprocessed(static_cast<std::size_t>(n_), 0);
    std::vector<std::vector<int>> down(static_cast<std::size_t>(n_));
    for (auto [lo, hi] : covers_) {
        down[static_cast<std::size_t>(hi)].push_back(lo);
        upper_unprocessed[static_cast<std::size_t>(lo)] += 1;
    }
    std::vector<int> queue;
    for (int v = 0; v < n_; ++v)
        if (upper_unprocessed[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    std::size_t head = 0;
    int processed = 0;
    while (head < queue.size()) {
        const int v = queue[head++];
        ++processed;
        for (int u : up[static_cast<std::size_t>(v)]) {
            set_bit(above_[static_cast<std::size_t>(v)], u);
            for (std::size_t w = 0; w < above_[static_cast<std::size_t>(v)].size(); ++w)
                above_[static_cast<std::size_t>(v)][w] |= above_[static_cast<std::size_t>(u)][w];
        }
        for (int d : down[static_cast<std::size_t>(v)])
            if (--upper_unprocessed[static_cast<std::size_t>(d)] == 0) queue.push_back(d);
    }
    if (processed != n_) throw std::invalid_argument("FinitePoset: covers contain a cycle");
    for (int v = 0; v < n_; ++v)
        if (bit(above_[static_cast<std::size_t>(v)], v))
            throw std::invalid_argument("FinitePoset: covers contain a cycle");
}

FinitePoset FinitePoset::from_less(int n, const std::function<bool(int, int)>& less) {
    // Covers by transitive reduction: a <. b iff a < b and no c between.
    std::vector<std::vector<char>> lt(static_cast<std::size_t>(n),
                                      std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && less(a, b)) lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
            bool is_cover = true;
            for (int c = 0; c < n && is_cover; ++c)
                if (lt[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] &&
                    lt[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)])
                    is_cover = false;
            if (is_cover) covers.emplace_back(a, b);
        }
    return FinitePoset(n, std::move(covers));
}

bool FinitePoset::less(int a, int b) const {
    return bit(above_[static_cast<std::size_t>(a)], b);
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        bool any = false;
        for (const std::uint64_t w : above_[static_cast<std::size_t>(v)]) any |= w != 0;
        if (!any) out.push_back(v);
    }
    return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<char> has_lower(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
        for (int u = 0; u < n_; ++u)
            if (u != v && less(u, v)) { has_lower[static_cast<std::size_t>(v)] = 1; break; }
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (!has_lower[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<long long> FinitePoset::mobius() const {
    // mu(Z) = 1 - sum_{Y > Z} mu(Y); process elements by decreasing number
    // of elements above them so that uppers are always finished first.
    std::vector<int> above_count(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
        for (int u = 0; u < n_; ++u)
            if (less(v, u)) above_count[static_cast<std::size_t>(v)] += 1;
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return above_count[static_cast<std::size_t>(a)] < above_count[static_cast<std::size_t>(b)];
    });
    std::vector<long long> mu(static_cast<std::size_t>(n_), 0);
    for (int v : order) {
        long long acc = 1;
        for (int u = 0; u < n_; ++u)
            if (less(v, u)) acc -= mu[static_cast<std::size_t>(u)];
        mu[static_cast<std::size_t>(v)] = acc;
    }
    return mu;
}

long long FinitePoset::chi_cut_and_paste(const std::vector<long long>& chi) const {
    if (static_cast<int>(chi.size()) != n_)
        throw std::invalid_argument("chi_cut_and_paste: one chi value per element required");
    const std::vector<long long> mu = mobius();
    long long total = 0;
    for (int v = 0; v < n_; ++v)
        total += mu[static_cast<std::size_t>(v)] * chi[static_cast<std::size_t>(v)];
    return total;
}

long long FinitePoset::g_sequence_signed_sum(const CoverPartition& parts) const {
    if (n_ > 12)
        throw std::invalid_argument("g_sequence_signed_sum: guarded to posets with <= 12 elements");
    {
        std::vector<char> seen(covers_.size(), 0);
        for (int i : parts.good) seen.at(static_cast<std::size_t>(i)) += 1;
        for (int i : parts.bad) seen.at(static_cast<std::size_t>(i)) += 1;
        for (char s : seen)
            if (s != 1)
                throw std::invalid_argument("g_sequence_signed_sum: good/bad must partition covers");
    }
    std::vector<char> good(covers_.size(), 0);
    for (int i : parts.good) good[static_cast<std::size_t>(i)] = 1;

    const std::uint32_t full = n_ == 32 ? 0xffffffffu : ((std::uint32_t{1} << n_) - 1);
    // Order ideals (down-closed sets): I is an ideal iff for every cover
    // (lo,hi), hi in I implies lo in I.
    auto is_ideal = [&](std::uint32_t s) {
        for (auto [lo, hi] : covers_)
            if ((s >> hi & 1) && !(s >> lo & 1)) return false;
        return true;
    };
    // A step I -> J is valid iff J \ I has only good covers inside it.
    auto step_ok = [&](std::uint32_t diff) {
        for (std::size_t i = 0; i < covers_.size(); ++i) {
            auto [lo, hi] = covers_[i];
            if ((diff >> lo & 1) && (diff >> hi & 1) && !good[i]) return false;
        }
        return true;
    };
    std::vector<std::uint32_t> ideals;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (is_ideal(s)) ideals.push_back(s);
        if (s == full) break;
    }
    // f(I) = signed count of G-sequences from I up to the full poset.
    std::map<std::uint32_t, long long> f;
    // Ideals in decreasing popcount order so supersets are finished first.
    std::vector<std::uint32_t> order = ideals;
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });
    for (std::uint32_t s : order) {
        if (s == full) {
            f[s] = 1;
            continue;
        }
        long long acc = 0;
        for (std::uint32_t t : ideals) {
            if ((t & s) != s || t == s) continue;
            if (step_ok(t & ~s)) acc -= f[t];
        }
        f[s] = acc;
    }
    return f[0];
}

std::string FinitePoset::to_dot(const std::function<std::string(int)>& label,
                                const std::vector<std::vector<int>>& dashed_clusters) const {
    std::ostringstream os;
    os << "digraph strata {\n";
    os << "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    std::vector<char> in_cluster(static_cast<std::size_t>(n_), 0);
    int cluster_id = 0;
    for (const auto& cluster : dashed_clusters) {
        os << "  subgraph cluster_" << cluster_id++ << " {\n    style=dashed;\n";
        for (int v : cluster) {
            os << "    n" << v << " [label=\"" << label(v) << "\"];\n";
            in_cluster[static_cast<std::size_t>(v)] = 1;
        }
        os << "  }\n";
    }
    for (int v = 0; v < n_; ++v)
        if (!in_cluster[static_cast<std::size_t>(v)])
            os << "  n" << v << " [label=\"" << label(v) << "\"];\n";
    // Arrows from the larger (more generic) element down to the smaller.
    for (auto [lo, hi] : covers_) os << "  n" << hi << " -> n" << lo << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bnchi
