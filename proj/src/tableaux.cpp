#include "bnchi/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace bnchi {

ContentVector trim_content(ContentVector c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

long long content_weight(const ContentVector& c) {
    return std::accumulate(c.begin(), c.end(), 0LL);
}

SetValuedTableau::SetValuedTableau(SkewShape s, std::vector<LabelSet> l)
    : shape(std::move(s)), labels(std::move(l)) {
    if (labels.size() != shape.size())
        throw std::invalid_argument("SetValuedTableau: one label set per box required");
    for (const LabelSet& set : labels) {
        if (set.empty()) throw std::invalid_argument("SetValuedTableau: empty label set");
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] <= 0) throw std::invalid_argument("SetValuedTableau: labels must be positive");
            if (i > 0 && set[i - 1] >= set[i])
                throw std::invalid_argument("SetValuedTableau: label sets must be sorted and distinct");
        }
    }
}

const LabelSet& SetValuedTableau::at(Box b) const {
    const auto& boxes = shape.boxes();
    auto it = std::lower_bound(boxes.begin(), boxes.end(), b, yx_less);
    if (it == boxes.end() || !(*it == b))
        throw std::out_of_range("SetValuedTableau::at: box not in shape");
    return labels[static_cast<std::size_t>(it - boxes.begin())];
}

long long SetValuedTableau::total_labels() const {
    long long total = 0;
    for (const LabelSet& s : labels) total += static_cast<long long>(s.size());
    return total;
}

bool SetValuedTableau::all_singletons() const {
    return std::all_of(labels.begin(), labels.end(),
                       [](const LabelSet& s) { return s.size() == 1; });
}

Tableau::Tableau(SkewShape s, std::vector<int> e) : shape(std::move(s)), entries(std::move(e)) {
    if (entries.size() != shape.size())
        throw std::invalid_argument("Tableau: one entry per box required");
    for (int v : entries)
        if (v <= 0) throw std::invalid_argument("Tableau: labels must be positive");
}

int Tableau::at(Box b) const {
    const auto& boxes = shape.boxes();
    auto it = std::lower_bound(boxes.begin(), boxes.end(), b, yx_less);
    if (it == boxes.end() || !(*it == b))
        throw std::out_of_range("Tableau::at: box not in shape");
    return entries[static_cast<std::size_t>(it - boxes.begin())];
}

SetValuedTableau Tableau::as_set_valued() const {
    std::vector<LabelSet> sets;
    sets.reserve(entries.size());
    for (int v : entries) sets.push_back({v});
    return SetValuedTableau(shape, std::move(sets));
}

ContentVector content_of(const SetValuedTableau& t) {
    ContentVector c;
    for (const LabelSet& s : t.labels)
        for (int v : s) {
            if (static_cast<std::size_t>(v) > c.size()) c.resize(static_cast<std::size_t>(v), 0);
            c[static_cast<std::size_t>(v - 1)] += 1;
        }
    return c;
}

ContentVector content_of(const Tableau& t) { return content_of(t.as_set_valued()); }

ContentVector excess_of(const SetValuedTableau& t, int top_y) {
    ContentVector e;
    const auto& boxes = t.shape.boxes();
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const int row = boxes[i].y - top_y + 1;
        if (row < 1) throw std::invalid_argument("excess_of: box above row 1");
        if (static_cast<std::size_t>(row) > e.size()) e.resize(static_cast<std::size_t>(row), 0);
        e[static_cast<std::size_t>(row - 1)] += static_cast<int>(t.labels[i].size()) - 1;
    }
    return trim_content(std::move(e));
}

namespace {

// Index of the box left of / above boxes[i] within the sorted box list, or
// -1 when absent.  Precomputed once per enumeration.
struct Neighbors {
    std::vector<int> left, up;
    explicit Neighbors(const SkewShape& shape) {
        const auto& boxes = shape.boxes();
        left.assign(boxes.size(), -1);
        up.assign(boxes.size(), -1);
        auto find = [&](Box b) -> int {
            auto it = std::lower_bound(boxes.begin(), boxes.end(), b, yx_less);
            if (it == boxes.end() || !(*it == b)) return -1;
            return static_cast<int>(it - boxes.begin());
        };
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            left[i] = find({boxes[i].x - 1, boxes[i].y});
            up[i] = find({boxes[i].x, boxes[i].y - 1});
        }
    }
};

}  // namespace

bool is_semistandard_svt(const SetValuedTableau& t) {
    Neighbors nb(t.shape);
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        const LabelSet& s = t.labels[i];
        if (nb.left[i] >= 0 && t.labels[static_cast<std::size_t>(nb.left[i])].back() > s.front())
            return false;
        if (nb.up[i] >= 0 && t.labels[static_cast<std::size_t>(nb.up[i])].back() >= s.front())
            return false;
    }
    return true;
}

bool is_standard_svt(const SetValuedTableau& t, int n_labels) {
    if (!is_semistandard_svt(t)) return false;
    ContentVector c = content_of(t);
    if (static_cast<int>(c.size()) != n_labels && !(n_labels == 0 && c.empty())) return false;
    return std::all_of(c.begin(), c.end(), [](int v) { return v == 1; });
}

bool is_semistandard(const Tableau& t) { return is_semistandard_svt(t.as_set_valued()); }

bool is_reverse_row_strict(const Tableau& t) {
    Neighbors nb(t.shape);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (nb.left[i] >= 0 && t.entries[static_cast<std::size_t>(nb.left[i])] <= t.entries[i])
            return false;
        if (nb.up[i] >= 0 && t.entries[static_cast<std::size_t>(nb.up[i])] < t.entries[i])
            return false;
    }
    return true;
}

bool is_row_bounded(const Tableau& t, int top_y) {
    const auto& boxes = t.shape.boxes();
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (t.entries[i] >= boxes[i].y - top_y + 1) return false;
    return true;
}

bool is_row_weakly_bounded(const Tableau& t, int top_y) {
    const auto& boxes = t.shape.boxes();
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (t.entries[i] > boxes[i].y - top_y + 1) return false;
    return true;
}

namespace {

// Backtracking enumerator for semistandard set-valued fillings.  Boxes are
// processed in (row, column) order; per-box candidate sets are generated in
// lexicographic order of the sorted element vector, so the output order is
// deterministic.
struct SvtEnumerator {
    const SkewShape& shape;
    Neighbors nb;
    int n_labels;

    // Content mode: exact content, optional exact per-row excess.
    const ContentVector* content = nullptr;
    std::optional<ContentVector> excess;
    int top_y = 0;

    // Bounded mode: total label budget.
    long long max_total = std::numeric_limits<long long>::max();

    std::vector<int> remaining;        // per label, content mode
    long long remaining_total = 0;     // content mode
    std::vector<int> excess_left;      // per row (1-based shifted), content mode
    long long excess_left_total = 0;
    long long used_total = 0;

    std::vector<LabelSet> assigned;
    std::vector<SetValuedTableau> out;

    SvtEnumerator(const SkewShape& s, int labels) : shape(s), nb(s), n_labels(labels) {}

    int row_of(std::size_t i) const { return shape.boxes()[i].y - top_y + 1; }

    bool label_available(int v) const {
        if (content) return remaining[static_cast<std::size_t>(v - 1)] > 0;
        return true;
    }

    void run() {
        assigned.assign(shape.size(), {});
        if (content) {
            remaining.assign(content->begin(), content->end());
            remaining_total = content_weight(*content);
            if (excess) {
                excess_left.assign(excess->begin(), excess->end());
                excess_left_total = content_weight(*excess);
                if (remaining_total !=
                    static_cast<long long>(shape.size()) + excess_left_total)
                    return;  // counting identity |c| = |shape| + |e| fails
            }
        }
        fill_box(0);
    }

    void fill_box(std::size_t i) {
        if (i == shape.size()) {
            if (content && remaining_total != 0) return;
            if (excess && excess_left_total != 0) return;
            out.emplace_back(shape, assigned);
            return;
        }
        // Feasibility: every remaining box needs at least one label.
        const long long rem_boxes = static_cast<long long>(shape.size() - i);
        if (content) {
            if (remaining_total < rem_boxes) return;
            if (excess && remaining_total != rem_boxes + excess_left_total) return;
        } else {
            if (used_total + rem_boxes > max_total) return;
        }
        int lo = 1;
        if (nb.left[i] >= 0) lo = std::max(lo, assigned[static_cast<std::size_t>(nb.left[i])].back());
        if (nb.up[i] >= 0) lo = std::max(lo, assigned[static_cast<std::size_t>(nb.up[i])].back() + 1);
        LabelSet current;
        extend_set(i, lo, current);
    }

    // Grow the label set of box i with elements >= next_min; every nonempty
    // prefix that respects the row-excess budget advances to the next box.
    void extend_set(std::size_t i, int next_min, LabelSet& current) {
        if (!current.empty()) {
            bool excess_ok = true;
            if (excess) {
                const int row = row_of(i);
                const int used = static_cast<int>(current.size()) - 1;
                if (static_cast<std::size_t>(row) > excess_left.size()) {
                    excess_ok = used == 0;
                } else {
                    excess_ok = used <= excess_left[static_cast<std::size_t>(row - 1)];
                }
                // A row's excess must be exhausted by its last box.
                if (excess_ok && static_cast<std::size_t>(row) <= excess_left.size()) {
                    const bool row_ends = i + 1 == shape.size() || row_of(i + 1) != row;
                    if (row_ends && excess_left[static_cast<std::size_t>(row - 1)] != used)
                        excess_ok = false;
                }
            }
            if (excess_ok) {
                assigned[i] = current;
                const int used = static_cast<int>(current.size()) - 1;
                if (excess && static_cast<std::size_t>(row_of(i)) <= excess_left.size()) {
                    excess_left[static_cast<std::size_t>(row_of(i)) - 1] -= used;
                    excess_left_total -= used;
                }
                fill_box(i + 1);
                if (excess && static_cast<std::size_t>(row_of(i)) <= excess_left.size()) {
                    excess_left[static_cast<std::size_t>(row_of(i)) - 1] += used;
                    excess_left_total += used;
                }
                assigned[i].clear();
            }
        }
        if (!content && used_total >= max_total) return;
        for (int v = next_min; v <= n_labels; ++v) {
            if (!label_available(v)) continue;
            current.push_back(v);
            if (content) {
                remaining[static_cast<std::size_t>(v - 1)] -= 1;
                remaining_total -= 1;
            }
            used_total += 1;
            extend_set(i, v + 1, current);
            used_total -= 1;
            if (content) {
                remaining[static_cast<std::size_t>(v - 1)] += 1;
                remaining_total += 1;
            }
            current.pop_back();
        }
    }
};

// Backtracking enumerator for single-valued fillings under per-box entry
// intervals derived from neighbor constraints and a row bound.
std::vector<Tableau> enumerate_single_valued(
    const SkewShape& shape, int top_y, bool semistandard_order,
    bool bound_strict, bool bounded, int global_max_label) {
    Neighbors nb(shape);
    const auto& boxes = shape.boxes();
    std::vector<int> entry(shape.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == shape.size()) {
            out.emplace_back(shape, entry);
            return;
        }
        int lo = 1;
        int hi = bounded ? boxes[i].y - top_y + 1 - (bound_strict ? 1 : 0) : global_max_label;
        if (semistandard_order) {
            if (nb.left[i] >= 0) lo = std::max(lo, entry[static_cast<std::size_t>(nb.left[i])]);
            if (nb.up[i] >= 0) lo = std::max(lo, entry[static_cast<std::size_t>(nb.up[i])] + 1);
            if (!bounded) hi = std::min(hi, global_max_label);
        } else {
            // reverse row-strict: rows strictly decrease, columns weakly do
            if (nb.left[i] >= 0) hi = std::min(hi, entry[static_cast<std::size_t>(nb.left[i])] - 1);
            if (nb.up[i] >= 0) hi = std::min(hi, entry[static_cast<std::size_t>(nb.up[i])]);
        }
        for (int v = lo; v <= hi; ++v) {
            entry[i] = v;
            self(self, i + 1);
        }
        entry[i] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<SetValuedTableau> enumerate_standard_svt(const SkewShape& sigma, int n_labels) {
    if (n_labels < 0) throw std::invalid_argument("enumerate_standard_svt: n_labels must be >= 0");
    ContentVector ones(static_cast<std::size_t>(n_labels), 1);
    SvtEnumerator e(sigma, n_labels);
    e.content = &ones;
    e.run();
    return std::move(e.out);
}

std::vector<SetValuedTableau> enumerate_ssvt(const SkewShape& sigma, const ContentVector& content,
                                             const std::optional<ContentVector>& excess,
                                             int top_y) {
    for (const Box& b : sigma.boxes())
        if (b.y - top_y + 1 < 1)
            throw std::invalid_argument("enumerate_ssvt: shape has boxes above row 1");
    ContentVector c = trim_content(content);
    for (int v : c)
        if (v < 0) throw std::invalid_argument("enumerate_ssvt: negative content entry");
    SvtEnumerator e(sigma, static_cast<int>(c.size()));
    e.content = &c;
    e.top_y = top_y;
    if (excess) {
        ContentVector ex = trim_content(*excess);
        for (int v : ex)
            if (v < 0) throw std::invalid_argument("enumerate_ssvt: negative excess entry");
        e.excess = std::move(ex);
    }
    e.run();
    return std::move(e.out);
}

std::vector<SetValuedTableau> enumerate_ssvt_bounded(const SkewShape& sigma, int max_label,
                                                     long long max_total) {
    SvtEnumerator e(sigma, max_label);
    e.max_total = max_total;
    e.run();
    return std::move(e.out);
}

std::vector<Tableau> enumerate_semistandard(const SkewShape& shape, int max_label) {
    return enumerate_single_valued(shape, 0, true, false, false, max_label);
}

std::vector<Tableau> enumerate_reverse_row_strict_row_bounded(const SkewShape& shape, int top_y) {
    return enumerate_single_valued(shape, top_y, false, true, true, 0);
}

std::vector<Tableau> enumerate_reverse_row_strict_row_weakly_bounded(const SkewShape& shape,
                                                                     int top_y) {
    return enumerate_single_valued(shape, top_y, false, false, true, 0);
}

std::vector<Tableau> enumerate_row_weakly_bounded_semistandard(const SkewShape& shape, int top_y) {
    return enumerate_single_valued(shape, top_y, true, false, true, 0);
}

}  // namespace bnchi
