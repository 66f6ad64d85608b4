#include "bnchi/rsk.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <sstream>

namespace bnchi {

namespace {

// Working state: (y, x) -> label set, so rows are contiguous map ranges.
using State = std::map<std::pair<int, int>, LabelSet>;

State state_from(const SetValuedTableau& t) {
    State s;
    for (std::size_t i = 0; i < t.shape.size(); ++i) {
        const Box b = t.shape.boxes()[i];
        s[{b.y, b.x}] = t.labels[i];
    }
    return s;
}

SetValuedTableau svt_from(const State& s) {
    std::vector<Box> boxes;
    std::vector<LabelSet> labels;
    for (const auto& [yx, set] : s) {
        boxes.push_back({yx.second, yx.first});
        labels.push_back(set);
    }
    return SetValuedTableau(SkewShape(std::move(boxes)), std::move(labels));
}

// [first, last) iterators of row y.
std::pair<State::iterator, State::iterator> row_range(State& s, int y) {
    return {s.lower_bound({y, std::numeric_limits<int>::min()}),
            s.lower_bound({y + 1, std::numeric_limits<int>::min()})};
}

void add_label(LabelSet& set, int label) {
    auto it = std::lower_bound(set.begin(), set.end(), label);
    if (it != set.end() && *it == label)
        throw std::logic_error("rsk: label already present in target box");
    set.insert(it, label);
}

// One full RSK insertion of `label` starting at row y; returns the path.
std::vector<Box> insert_cascade(State& s, int y, int label, int src_col) {
    std::vector<Box> path;
    int prev_col = src_col;
    for (;;) {
        auto [first, last] = row_range(s, y);
        State::iterator bump = last;
        for (auto it = first; it != last; ++it) {
            if (it->second.size() != 1)
                throw std::logic_error("rsk: insertion reached a multi-labeled box");
            if (it->second[0] > label) {
                bump = it;
                break;
            }
        }
        if (bump == last) {
            int col;
            if (first == last) {
                col = prev_col;
            } else {
                col = std::prev(last)->first.second + 1;
            }
            if (col > prev_col) {
                // Insertion paths move weakly left; a terminal to the right
                // of the previous step cannot occur on valid input.
                throw std::logic_error("rsk: insertion path moved right");
            }
            s[{y, col}] = {label};
            path.push_back({col, y});
            return path;
        }
        const int bumped = bump->second[0];
        bump->second[0] = label;
        const int col = bump->first.second;
        if (col > prev_col) throw std::logic_error("rsk: insertion path moved right");
        path.push_back({col, y});
        prev_col = col;
        label = bumped;
        y += 1;
    }
}

std::string render_state(const State& s) {
    if (s.empty()) return "(empty)\n";
    int min_x = std::numeric_limits<int>::max(), max_x = std::numeric_limits<int>::min();
    int min_y = s.begin()->first.first, max_y = s.rbegin()->first.first;
    std::size_t cell = 1;
    auto text = [](const LabelSet& set) {
        std::string t;
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i) t += ',';
            t += std::to_string(set[i]);
        }
        return t;
    };
    for (const auto& [yx, set] : s) {
        min_x = std::min(min_x, yx.second);
        max_x = std::max(max_x, yx.second);
        cell = std::max(cell, text(set).size());
    }
    std::ostringstream os;
    for (int y = min_y; y <= max_y; ++y) {
        for (int x = min_x; x <= max_x; ++x) {
            auto it = s.find({y, x});
            std::string body(cell, ' ');
            char open = ' ', close = ' ';
            if (it != s.end()) {
                std::string t = text(it->second);
                body = t + std::string(cell - t.size(), ' ');
                open = '[';
                close = ']';
            }
            os << open << body << close;
        }
        os << '\n';
    }
    return os.str();
}

void push_frame(RskTrace* trace, const State& s, const std::string& note) {
    if (!trace) return;
    trace->frames.push_back(note + "\n" + render_state(s));
}

}  // namespace

std::string render(const SetValuedTableau& t) { return render_state(state_from(t)); }

std::pair<SetValuedTableau, std::vector<Box>> row_insert(const SetValuedTableau& t, int y,
                                                         int label, std::optional<int> src_col) {
    if (label <= 0) throw std::invalid_argument("row_insert: label must be positive");
    State s = state_from(t);
    for (const auto& [yx, set] : s)
        if (yx.first >= y && set.size() != 1)
            throw std::invalid_argument("row_insert: rows at and below the insertion row "
                                        "must be singly labeled");
    int src = 0;
    if (src_col) {
        src = *src_col;
    } else {
        auto [first, last] = row_range(s, y - 1);
        src = first != last ? first->first.second : 0;
        auto [rf, rl] = row_range(s, y);
        if (rf != rl) src = std::max(src, std::prev(rl)->first.second + 1);
    }
    std::vector<Box> path = insert_cascade(s, y, label, src);
    return {svt_from(s), std::move(path)};
}

void validate(const RskInput& input) {
    if (!contains_same_columns(input.lambda, input.sigma))
        throw std::invalid_argument("RskInput: lambda must contain sigma within its columns");
    auto [above, below] = above_below_split(input.lambda, input.sigma);
    if (!below.empty())
        throw std::invalid_argument("RskInput: B(lambda/sigma) must be empty");
    if (input.t_prime.shape != above)
        throw std::invalid_argument("RskInput: T' must fill A(lambda/sigma)");
    if (input.t.shape != input.lambda)
        throw std::invalid_argument("RskInput: T must fill lambda");
    if (!is_semistandard_svt(input.t))
        throw std::invalid_argument("RskInput: T must be semistandard");
    if (!input.sigma.empty()) {
        const int top = *input.sigma.top_y();
        if (!is_reverse_row_strict(input.t_prime) || !is_row_weakly_bounded(input.t_prime, top))
            throw std::invalid_argument(
                "RskInput: T' must be reverse-row-strict and row-weakly-bounded");
    }
}

void validate(const RskOutput& output) {
    if (!contains_same_columns(output.mu, output.sigma))
        throw std::invalid_argument("RskOutput: mu must contain sigma within its columns");
    auto [above, below] = above_below_split(output.mu, output.sigma);
    if (!above.empty())
        throw std::invalid_argument("RskOutput: A(mu/sigma) must be empty");
    if (output.t_double_prime.shape != below)
        throw std::invalid_argument("RskOutput: T'' must fill B(mu/sigma)");
    if (output.t_tilde.shape != output.mu)
        throw std::invalid_argument("RskOutput: T~ must fill mu");
    if (!is_semistandard_svt(output.t_tilde) || !output.t_tilde.all_singletons())
        throw std::invalid_argument("RskOutput: T~ must be semistandard with singleton boxes");
    if (!output.sigma.empty()) {
        const int top = *output.sigma.top_y();
        if (!is_reverse_row_strict(output.t_double_prime) ||
            !is_row_bounded(output.t_double_prime, top))
            throw std::invalid_argument(
                "RskOutput: T'' must be reverse-row-strict and row-bounded");
    }
}

RskOutput skew_svrsk_forward(const RskInput& input, RskTrace* trace) {
    validate(input);
    if (input.sigma.empty())
        return RskOutput{input.sigma, input.lambda, Tableau{}, input.t};

    const int top = *input.sigma.top_y();
    const int r = input.sigma.row_span();
    State state = state_from(input.t);
    std::map<std::pair<int, int>, int> tpp;  // (y,x) -> T'' label
    push_frame(trace, state, "input");

    for (int k = r; k >= 1; --k) {
        const int yk = top + k - 1;
        // Sweep labels of row k that are not the minimum of their box,
        // rightmost multi-labeled box first, its maximum label first.
        for (;;) {
            auto [first, last] = row_range(state, yk);
            State::iterator source = last;
            for (auto it = first; it != last; ++it)
                if (it->second.size() > 1) source = it;
            if (source == last) break;
            const int m = source->second.back();
            source->second.pop_back();
            std::vector<Box> path = insert_cascade(state, yk + 1, m, source->first.second);
            tpp[{path.back().y, path.back().x}] = k;
            push_frame(trace, state,
                       "step k=" + std::to_string(k) + ": swept " + std::to_string(m) +
                           " out of row " + std::to_string(k));
        }
        // Sweep the boxes T' labels with k, by increasing row.
        std::vector<Box> marked;
        for (std::size_t i = 0; i < input.t_prime.shape.size(); ++i)
            if (input.t_prime.entries[i] == k) marked.push_back(input.t_prime.shape.boxes()[i]);
        std::sort(marked.begin(), marked.end(), yx_less);
        for (std::size_t i = 1; i < marked.size(); ++i)
            if (marked[i].y == marked[i - 1].y)
                throw std::logic_error("rsk: two boxes with the same T' label share a row");
        for (const Box& b : marked) {
            auto it = state.find({b.y, b.x});
            if (it == state.end() || it->second.size() != 1)
                throw std::logic_error("rsk: T'-marked box must be present and singly labeled");
            const int label = it->second[0];
            state.erase(it);
            std::vector<Box> path = insert_cascade(state, b.y + 1, label, b.x);
            tpp[{path.back().y, path.back().x}] = k;
            push_frame(trace, state,
                       "step k=" + std::to_string(k) + ": emptied box (" + std::to_string(b.x) +
                           "," + std::to_string(b.y) + ")");
        }
    }

    RskOutput out;
    out.sigma = input.sigma;
    out.t_tilde = svt_from(state);
    out.mu = out.t_tilde.shape;
    std::vector<Box> bboxes;
    std::vector<int> bentries;
    for (const auto& [yx, label] : tpp) {
        bboxes.push_back({yx.second, yx.first});
        bentries.push_back(label);
    }
    out.t_double_prime = Tableau(SkewShape(std::move(bboxes)), std::move(bentries));
    validate(out);
    return out;
}

namespace {

// Column for a re-created box in a currently empty row: the unique column of
// sigma lying strictly above sigma's boxes there that keeps the box set
// interval-closed.
int recreate_column(const State& state, int y, const SkewShape& sigma) {
    std::vector<int> candidates;
    for (int x : sigma.columns()) {
        const auto span = sigma.column_interval(x);
        if (span->first <= y) continue;  // not above sigma in this column
        if (state.count({y, x})) continue;
        std::vector<Box> boxes;
        for (const auto& [yx, set] : state) boxes.push_back({yx.second, yx.first});
        boxes.push_back({x, y});
        if (interval_closed(boxes)) candidates.push_back(x);
    }
    if (candidates.size() != 1)
        throw std::logic_error("rsk inverse: re-created box position is not unique");
    return candidates[0];
}

}  // namespace

RskInput skew_svrsk_inverse(const RskOutput& output, RskTrace* trace) {
    validate(output);
    if (output.sigma.empty())
        return RskInput{output.sigma, output.mu, Tableau{}, output.t_tilde};

    const int top = *output.sigma.top_y();
    const int r = output.sigma.row_span();
    State state = state_from(output.t_tilde);
    std::map<std::pair<int, int>, int> tp;  // (y,x) -> T' label
    push_frame(trace, state, "output");

    for (int k = 1; k <= r; ++k) {
        std::vector<Box> marked;
        for (std::size_t i = 0; i < output.t_double_prime.shape.size(); ++i)
            if (output.t_double_prime.entries[i] == k)
                marked.push_back(output.t_double_prime.shape.boxes()[i]);
        // Bottom-up: reverse creation order of the forward pass.
        std::sort(marked.begin(), marked.end(),
                  [](Box a, Box b) { return yx_less(b, a); });
        for (const Box& b : marked) {
            auto it = state.find({b.y, b.x});
            if (it == state.end() || it->second.size() != 1)
                throw std::invalid_argument("rsk inverse: T''-marked box must be singly labeled");
            int m = it->second[0];
            state.erase(it);
            int y = b.y - 1;
            for (;;) {
                const int i = y - top + 1;
                if (i < k) throw std::logic_error("rsk inverse: cascade passed row k");
                auto [first, last] = row_range(state, y);
                if (i == k) {
                    // Merge: the label re-joins the rightmost box whose
                    // maximum is smaller, or a re-created box if none is.
                    State::iterator target = last;
                    for (auto jt = first; jt != last; ++jt)
                        if (jt->second.back() < m) target = jt;
                    if (target != last) {
                        add_label(target->second, m);
                    } else {
                        const int col = first != last ? first->first.second - 1
                                                      : recreate_column(state, y, output.sigma);
                        state[{y, col}] = {m};
                        tp[{y, col}] = k;
                    }
                    break;
                }
                // Un-bump: the rightmost singleton smaller than m gives its
                // label back; if none, the cascade re-creates a deleted box.
                State::iterator target = last;
                for (auto jt = first; jt != last; ++jt) {
                    if (jt->second.size() != 1)
                        throw std::logic_error("rsk inverse: multi-labeled box below row k");
                    if (jt->second[0] < m) target = jt;
                }
                if (target == last) {
                    const int col = first != last ? first->first.second - 1
                                                  : recreate_column(state, y, output.sigma);
                    state[{y, col}] = {m};
                    tp[{y, col}] = k;
                    break;
                }
                std::swap(m, target->second[0]);
                y -= 1;
            }
            push_frame(trace, state,
                       "step k=" + std::to_string(k) + ": returned box (" + std::to_string(b.x) +
                           "," + std::to_string(b.y) + ")");
        }
    }

    RskInput in;
    in.sigma = output.sigma;
    in.t = svt_from(state);
    in.lambda = in.t.shape;
    std::vector<Box> aboxes;
    std::vector<int> aentries;
    for (const auto& [yx, label] : tp) {
        aboxes.push_back({yx.second, yx.first});
        aentries.push_back(label);
    }
    in.t_prime = Tableau(SkewShape(std::move(aboxes)), std::move(aentries));
    validate(in);
    return in;
}

namespace {

std::vector<SkewShape> enumerate_extensions(const SkewShape& sigma, int extra_boxes, bool upward) {
    if (sigma.empty()) return {sigma};
    const std::vector<int> cols = sigma.columns();
    const int top = *sigma.top_y();
    std::vector<SkewShape> out;
    std::vector<int> ext(cols.size(), 0);
    auto emit = [&]() {
        std::vector<Box> boxes = sigma.boxes();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto span = sigma.column_interval(cols[i]);
            for (int a = 1; a <= ext[i]; ++a)
                boxes.push_back({cols[i], upward ? span->first - a : span->second + a});
        }
        if (!interval_closed(boxes)) return;
        out.push_back(SkewShape(std::move(boxes)));
    };
    auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == cols.size()) {
            emit();
            return;
        }
        const auto span = sigma.column_interval(cols[i]);
        // Upward growth stays within rows >= 1 (row-weakly-bounded fillings
        // of boxes above row 1 do not exist).
        const int cap = upward ? std::min(budget, span->first - top) : budget;
        for (int a = 0; a <= cap; ++a) {
            ext[i] = a;
            self(self, i + 1, budget - a);
        }
        ext[i] = 0;
    };
    rec(rec, 0, extra_boxes);
    return out;
}

std::string key_of(const RskOutput& o) {
    std::ostringstream os;
    for (const Box& b : o.mu.boxes()) os << b.x << ',' << b.y << ';';
    os << '|';
    for (std::size_t i = 0; i < o.t_double_prime.shape.size(); ++i) {
        const Box b = o.t_double_prime.shape.boxes()[i];
        os << b.x << ',' << b.y << ':' << o.t_double_prime.entries[i] << ';';
    }
    os << '|';
    for (std::size_t i = 0; i < o.t_tilde.shape.size(); ++i) {
        const Box b = o.t_tilde.shape.boxes()[i];
        os << b.x << ',' << b.y << ':';
        for (int v : o.t_tilde.labels[i]) os << v << '.';
        os << ';';
    }
    return os.str();
}

}  // namespace

std::vector<SkewShape> enumerate_upward_extensions(const SkewShape& sigma, int extra_boxes) {
    return enumerate_extensions(sigma, extra_boxes, true);
}

std::vector<SkewShape> enumerate_downward_extensions(const SkewShape& sigma, int extra_boxes) {
    return enumerate_extensions(sigma, extra_boxes, false);
}

BijectionReport verify_bijection_counts(const SkewShape& sigma, const ContentVector& c,
                                        const ContentVector& e) {
    BijectionReport report;
    const ContentVector excess = trim_content(e);
    const int budget = static_cast<int>(content_weight(excess));
    const int top = sigma.empty() ? 0 : *sigma.top_y();

    std::set<std::string> image;
    bool collision = false;
    long long left = 0;
    for (const SkewShape& lambda : enumerate_upward_extensions(sigma, budget)) {
        auto [above, below] = above_below_split(lambda, sigma);
        for (const Tableau& tprime : enumerate_reverse_row_strict_row_weakly_bounded(above, top)) {
            ContentVector target = excess;
            const ContentVector cp = content_of(tprime);
            bool feasible = true;
            for (std::size_t i = 0; i < cp.size(); ++i) {
                if (i >= target.size() || (target[i] -= cp[i]) < 0) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            for (const SetValuedTableau& t : enumerate_ssvt(lambda, c, target, top)) {
                ++left;
                RskOutput out = skew_svrsk_forward(RskInput{sigma, lambda, tprime, t});
                if (!image.insert(key_of(out)).second) collision = true;
            }
        }
    }
    report.left_count = left;
    report.injective = !collision;

    std::set<std::string> expected;
    long long right = 0;
    for (const SkewShape& mu : enumerate_downward_extensions(sigma, budget)) {
        auto [above, below] = above_below_split(mu, sigma);
        for (const Tableau& tpp : enumerate_reverse_row_strict_row_bounded(below, top)) {
            if (trim_content(content_of(tpp)) != excess) continue;
            const int mu_top = mu.empty() ? 0 : *mu.top_y();
            for (const SetValuedTableau& tt : enumerate_ssvt(mu, c, ContentVector{}, mu_top)) {
                ++right;
                expected.insert(key_of(RskOutput{sigma, mu, tpp, tt}));
            }
        }
    }
    report.right_count = right;
    report.surjective = image == expected && !collision;
    report.ok = report.injective && report.surjective && left == right;
    if (!report.ok) {
        std::ostringstream os;
        os << "left=" << left << " right=" << right << (collision ? " collision" : "")
           << (image == expected ? "" : " image mismatch");
        report.failure = os.str();
    }
    return report;
}

}  // namespace bnchi
