#pragma once

#include <optional>
#include <vector>

#include "bnchi/shapes.hpp"

// Set-valued tableaux on skew shapes, the validity predicates of the
// semistandard / standard / reverse-row-strict / row-bounded filling
// classes, content and excess statistics, and exhaustive enumerators.
//
// Row indexing convention for the bounded classes and for excess vectors:
// boxes are indexed by 1-based absolute rows, where the caller supplies
// top_y and row(b) = b.y - top_y + 1.  Callers working with A/B parts of
// mu/sigma pass sigma's top row so that the parts inherit sigma's indexing.

namespace bnchi {

// Sorted ascending, distinct, nonempty.
using LabelSet = std::vector<int>;

// Content vector: entry i-1 counts occurrences of label i.  Trailing zeros
// are trimmed by trim_content.
using ContentVector = std::vector<int>;

ContentVector trim_content(ContentVector c);
long long content_weight(const ContentVector& c);

struct SetValuedTableau {
    SkewShape shape;
    std::vector<LabelSet> labels;  // parallel to shape.boxes()

    SetValuedTableau() = default;
    SetValuedTableau(SkewShape s, std::vector<LabelSet> l);

    const LabelSet& at(Box b) const;
    // Total number of labels, |T|.
    long long total_labels() const;
    bool all_singletons() const;

    friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
};

// Single-valued tableau.
struct Tableau {
    SkewShape shape;
    std::vector<int> entries;  // parallel to shape.boxes()

    Tableau() = default;
    Tableau(SkewShape s, std::vector<int> e);

    int at(Box b) const;
    SetValuedTableau as_set_valued() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

ContentVector content_of(const SetValuedTableau& t);
ContentVector content_of(const Tableau& t);

// Per-row excess (labels minus boxes in each row), rows indexed 1-based
// from top_y; trailing zeros trimmed.  Rows above top_y are rejected.
ContentVector excess_of(const SetValuedTableau& t, int top_y);

// Rows weakly increase (max S <= min T) and columns strictly increase
// (max S < min T).
bool is_semistandard_svt(const SetValuedTableau& t);

// Semistandard, labels pairwise disjoint, union exactly {1..n_labels}.
bool is_standard_svt(const SetValuedTableau& t, int n_labels);

bool is_semistandard(const Tableau& t);

// Rows strictly decrease left to right, columns weakly decrease top to
// bottom.
bool is_reverse_row_strict(const Tableau& t);

// Every label in row i satisfies T(b) < i (row_bounded) or <= i
// (row_weakly_bounded); rows 1-based from top_y.
bool is_row_bounded(const Tableau& t, int top_y);
bool is_row_weakly_bounded(const Tableau& t, int top_y);

// All enumerators return deterministic, duplicate-free sequences.

// Standard set-valued tableaux of shape sigma with content {1..n_labels}.
std::vector<SetValuedTableau> enumerate_standard_svt(const SkewShape& sigma, int n_labels);

// Semistandard set-valued fillings with the given content and, unless
// excess is nullopt, the given per-row excess (rows 1-based from top_y).
std::vector<SetValuedTableau> enumerate_ssvt(const SkewShape& sigma, const ContentVector& content,
                                             const std::optional<ContentVector>& excess, int top_y);

// Semistandard set-valued fillings with labels <= max_label and at most
// max_total labels in all.
std::vector<SetValuedTableau> enumerate_ssvt_bounded(const SkewShape& sigma, int max_label,
                                                     long long max_total);

// Semistandard (single-valued) fillings with labels <= max_label.
std::vector<Tableau> enumerate_semistandard(const SkewShape& shape, int max_label);

// Fillings with rows strictly decreasing, columns weakly decreasing, and
// T(b) < row(b) respectively T(b) <= row(b).
std::vector<Tableau> enumerate_reverse_row_strict_row_bounded(const SkewShape& shape, int top_y);
std::vector<Tableau> enumerate_reverse_row_strict_row_weakly_bounded(const SkewShape& shape,
                                                                     int top_y);

// Semistandard fillings with T(b) <= row(b).
std::vector<Tableau> enumerate_row_weakly_bounded_semistandard(const SkewShape& shape, int top_y);

}  // namespace bnchi
