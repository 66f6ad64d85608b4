#pragma once

#include <map>
#include <string>
#include <vector>

#include "bnchi/shapes.hpp"
#include "bnchi/tableaux.hpp"

// The skew set-valued RSK algorithm: RSK row insertion on set-valued
// tableaux, the forward sweep that trades row excess and an auxiliary
// above-filling T' for a below-filling T'', its algorithmic inverse, and
// the bijection count check.

namespace bnchi {

struct RskInput {
    SkewShape sigma;
    SkewShape lambda;   // contains sigma within its columns, B(lambda/sigma) empty
    Tableau t_prime;    // reverse-row-strict, row-weakly-bounded on A(lambda/sigma)
    SetValuedTableau t; // semistandard set-valued on lambda

    friend bool operator==(const RskInput&, const RskInput&) = default;
};

struct RskOutput {
    SkewShape sigma;
    SkewShape mu;             // contains sigma within its columns, A(mu/sigma) empty
    Tableau t_double_prime;   // reverse-row-strict, row-bounded on B(mu/sigma)
    SetValuedTableau t_tilde; // semistandard, all boxes singly labeled, on mu

    friend bool operator==(const RskOutput&, const RskOutput&) = default;
};

// Throws std::invalid_argument when the validity predicates fail.
void validate(const RskInput& input);
void validate(const RskOutput& output);

// Rendered intermediate states, one per completed insertion, as in the
// worked runs of the algorithm.
struct RskTrace {
    std::vector<std::string> frames;
};

// RSK row insertion of a label starting at the row with the given absolute
// y coordinate.  Every box in rows >= y must be singly labeled.  src_col is
// the column the label came from, used to place a terminal box in an empty
// row; by default the leftmost box of the row above (or column 0).
// Returns the updated tableau and the insertion path (last box is the newly
// created one).
std::pair<SetValuedTableau, std::vector<Box>> row_insert(const SetValuedTableau& t, int y,
                                                         int label,
                                                         std::optional<int> src_col = {});

RskOutput skew_svrsk_forward(const RskInput& input, RskTrace* trace = nullptr);
RskInput skew_svrsk_inverse(const RskOutput& output, RskTrace* trace = nullptr);

struct BijectionReport {
    bool ok = false;
    long long left_count = 0;   // pairs (lambda, T') with T in SS_{c,e-c(T')}(lambda)
    long long right_count = 0;  // pairs (mu, T'') with T~ in SS_{c,0}(mu)
    bool injective = false;
    bool surjective = false;
    std::string failure;
};

// Enumerates both sides of the bijection for the given content and excess,
// maps every left element forward, and checks the image is exactly the
// right side with no collisions.
BijectionReport verify_bijection_counts(const SkewShape& sigma, const ContentVector& c,
                                        const ContentVector& e);

// Enumeration helpers shared with the verification suites.

// All lambda containing sigma with B(lambda/sigma) empty and A-boxes only
// in rows >= 1 (others admit no row-weakly-bounded filling), adding at most
// extra_boxes boxes.
std::vector<SkewShape> enumerate_upward_extensions(const SkewShape& sigma, int extra_boxes);
// All mu containing sigma with A(mu/sigma) empty, adding at most
// extra_boxes boxes.
std::vector<SkewShape> enumerate_downward_extensions(const SkewShape& sigma, int extra_boxes);

// ASCII rendering of a set-valued tableau in English orientation.
std::string render(const SetValuedTableau& t);

}  // namespace bnchi
