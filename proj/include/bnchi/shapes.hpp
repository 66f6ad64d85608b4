#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Skew Young diagrams with explicit (x,y)-coordinates, eastern borders of
// box sets in the strip Z x {0..r}, and the twice-pointed Brill-Noether
// data (g,r,d,alpha,beta) together with its associated skew shape sigma.
//
// Coordinates follow the English convention: x increases to the right,
// y increases downward.  Boxes may have negative coordinates.  Two boxes
// are compared by the product order: (x,y) preceq (x',y') iff x <= x' and
// y <= y'.  A skew shape is a finite box set closed under taking intervals
// in this order; rows and columns of a skew shape are therefore contiguous.

namespace bnchi {

struct Box {
    int x = 0;
    int y = 0;

    friend bool operator==(const Box&, const Box&) = default;
};

// Product order on boxes.
inline bool preceq(Box a, Box b) { return a.x <= b.x && a.y <= b.y; }

// Canonical serialization order: lexicographic by (y, x).
inline bool yx_less(Box a, Box b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }

// True iff the box set is closed under taking intervals.
bool interval_closed(const std::vector<Box>& boxes);

class SkewShape {
  public:
    SkewShape() = default;

    // Throws std::invalid_argument if the (deduplicated) set is not
    // interval-closed.
    explicit SkewShape(std::vector<Box> boxes);

    const std::vector<Box>& boxes() const { return boxes_; }
    std::size_t size() const { return boxes_.size(); }
    bool empty() const { return boxes_.empty(); }

    bool contains(Box b) const;

    // Straight shape: unique preceq-minimal box.
    bool is_straight() const;

    // Topmost row index containing a box; nullopt for the empty shape.
    std::optional<int> top_y() const;
    std::optional<int> bottom_y() const;

    // Contiguous column interval [min_x, max_x] of row y, if the row is
    // nonempty.
    std::optional<std::pair<int, int>> row_interval(int y) const;
    // Contiguous row interval [min_y, max_y] of column x.
    std::optional<std::pair<int, int>> column_interval(int x) const;

    // Distinct x-coordinates, ascending.
    std::vector<int> columns() const;

    // Number of rows spanned, top to bottom (empty rows in between count).
    int row_span() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

  private:
    std::vector<Box> boxes_;  // sorted by (y,x), unique
};

// Nonincreasing (r+1)-tuple (lambda_0 >= ... >= lambda_r), identified with
// the infinite box set {(x,y) : 0 <= y <= r, x < lambda_y}.
class Border {
  public:
    Border() = default;
    explicit Border(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int rows() const { return static_cast<int>(entries_.size()); }
    int operator[](int y) const { return entries_[static_cast<std::size_t>(y)]; }

    bool contains(Box b) const {
        return b.y >= 0 && b.y < rows() && b.x < entries_[static_cast<std::size_t>(b.y)];
    }
    // Componentwise containment of the associated box sets.
    bool subset_of(const Border& other) const;

    // Tuple with entry y increased by one; b must be an inward corner.
    Border with_added(Box b) const;
    // Tuple with entry y decreased by one; b must be an outward corner.
    Border with_removed(Box b) const;

    friend bool operator==(const Border&, const Border&) = default;
    friend bool operator<(const Border& a, const Border& b) { return a.entries_ < b.entries_; }

  private:
    std::vector<int> entries_;
};

// Inward corners (minimal boxes not in b) and outward corners (maximal
// boxes in b) within the strip Z x {0..r}.
struct BorderCorners {
    std::vector<Box> inward;
    std::vector<Box> outward;
};
BorderCorners corners(const Border& b);

// The skew shape rho/lambda = {(x,y) : 0 <= y <= r, lambda_y <= x < rho_y};
// containment of lambda in rho is not assumed.
SkewShape skew_between(const Border& rho, const Border& lam);

// Twice-pointed Brill-Noether data.  alpha and beta are nondecreasing
// (r+1)-tuples of nonnegative integers.
struct BNData {
    int g = 0;
    int r = 0;
    int d = 0;
    std::vector<int> alpha;
    std::vector<int> beta;

    BNData() = default;
    BNData(int g_, int r_, int d_, std::vector<int> alpha_, std::vector<int> beta_);

    // rho = g - (r+1)(g-d+r) - sum(alpha) - sum(beta)
    long long rho() const;
    // rho_hat = g - |sigma|; always rho >= rho_hat, with equality whenever
    // g-d+r >= 0.
    long long rho_hat() const;

    // lambda^1 = (-alpha_0, ..., -alpha_r)
    Border lambda1() const;
    // rho^g with (rho^g)_i = g-d+r + beta_{r-i}
    Border rho_g() const;
};

// sigma(g,r,d,alpha,beta) = {(x,y) : 0<=y<=r, -alpha_y <= x < g-d+r+beta_{r-y}}.
SkewShape sigma_of(const BNData& data);

// True iff sigma is a subset of mu and every box of mu lies in a column
// occupied by sigma.
bool contains_same_columns(const SkewShape& mu, const SkewShape& sigma);

// Splits mu \ sigma into the boxes above sigma and below sigma in their
// columns.  Requires contains_same_columns(mu, sigma).
std::pair<SkewShape, SkewShape> above_below_split(const SkewShape& mu, const SkewShape& sigma);

}  // namespace bnchi
