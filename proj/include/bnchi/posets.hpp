#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Finite posets over opaque element ids 0..n-1, the top-down Mobius
// function mu(Z) = 1 for Z maximal and mu(Z) = 1 - sum_{Y > Z} mu(Y)
// otherwise, the cut-and-paste Euler characteristic aggregator
// chi(G) = sum_Z mu(Z) chi(Z), and the signed count of G-sequences of
// order ideals for a good/bad partition of the cover relations.

namespace bnchi {

struct CoverPartition {
    // Indices into FinitePoset::covers(); good and bad must partition them.
    std::vector<int> good;
    std::vector<int> bad;
};

class FinitePoset {
  public:
    // Build from cover relations (lower, upper).  Throws on cycles.
    FinitePoset(int n, std::vector<std::pair<int, int>> covers);

    // Build from an arbitrary strict comparison; covers are recovered by
    // transitive reduction.
    static FinitePoset from_less(int n, const std::function<bool(int, int)>& less);

    int size() const { return n_; }
    bool less(int a, int b) const;  // strict
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;

    std::vector<long long> mobius() const;
    long long chi_cut_and_paste(const std::vector<long long>& chi) const;

    // Signed count over G-sequences: increasing chains of order ideals
    // emptyset = I_0 < ... < I_l = P where each difference I_i \ I_{i-1}
    // contains only good covers; each chain contributes (-1)^l.  Guarded to
    // |P| <= 12 elements.
    long long g_sequence_signed_sum(const CoverPartition& parts) const;

    // DOT rendering; edges are covers drawn from the larger element to the
    // smaller one.  Optional clusters group nodes with dashed borders.
    std::string to_dot(const std::function<std::string(int)>& label,
                       const std::vector<std::vector<int>>& dashed_clusters = {}) const;

  private:
    FinitePoset() = default;
    void build_closure();

    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<std::uint64_t>> above_;  // above_[v]: bitset of u with u > v
};

}  // namespace bnchi
