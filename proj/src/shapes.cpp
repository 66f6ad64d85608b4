#include "bnchi/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bnchi {

bool interval_closed(const std::vector<Box>& boxes) {
    std::set<std::pair<int, int>> present;
    for (const Box& b : boxes) present.emplace(b.y, b.x);
    for (const Box& a : boxes) {
        for (const Box& b : boxes) {
            if (!(preceq(a, b))) continue;
            for (int y = a.y; y <= b.y; ++y)
                for (int x = a.x; x <= b.x; ++x)
                    if (!present.count({y, x})) return false;
        }
    }
    return true;
}

SkewShape::SkewShape(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end(), yx_less);
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    if (!interval_closed(boxes_))
        throw std::invalid_argument("SkewShape: box set is not interval-closed");
}

bool SkewShape::contains(Box b) const {
    return std::binary_search(boxes_.begin(), boxes_.end(), b, yx_less);
}

bool SkewShape::is_straight() const {
    if (boxes_.empty()) return false;
    int count_minimal = 0;
    for (const Box& b : boxes_) {
        bool minimal = true;
        for (const Box& a : boxes_)
            if (!(a == b) && preceq(a, b)) { minimal = false; break; }
        if (minimal) ++count_minimal;
    }
    return count_minimal == 1;
}

std::optional<int> SkewShape::top_y() const {
    if (boxes_.empty()) return std::nullopt;
    return boxes_.front().y;
}

std::optional<int> SkewShape::bottom_y() const {
    if (boxes_.empty()) return std::nullopt;
    return boxes_.back().y;
}

std::optional<std::pair<int, int>> SkewShape::row_interval(int y) const {
    std::optional<std::pair<int, int>> result;
    for (const Box& b : boxes_) {
        if (b.y != y) continue;
        if (!result) result = {b.x, b.x};
        else {
            result->first = std::min(result->first, b.x);
            result->second = std::max(result->second, b.x);
        }
    }
    return result;
}

std::optional<std::pair<int, int>> SkewShape::column_interval(int x) const {
    std::optional<std::pair<int, int>> result;
    for (const Box& b : boxes_) {
        if (b.x != x) continue;
        if (!result) result = {b.y, b.y};
        else {
            result->first = std::min(result->first, b.y);
            result->second = std::max(result->second, b.y);
        }
    }
    return result;
}

std::vector<int> SkewShape::columns() const {
    std::set<int> xs;
    for (const Box& b : boxes_) xs.insert(b.x);
    return {xs.begin(), xs.end()};
}

int SkewShape::row_span() const {
    if (boxes_.empty()) return 0;
    return boxes_.back().y - boxes_.front().y + 1;
}

Border::Border(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] < entries_[i])
            throw std::invalid_argument("Border: entries must be nonincreasing");
}

bool Border::subset_of(const Border& other) const {
    if (rows() != other.rows())
        throw std::invalid_argument("Border::subset_of: row count mismatch");
    for (int y = 0; y < rows(); ++y)
        if ((*this)[y] > other[y]) return false;
    return true;
}

Border Border::with_added(Box b) const {
    BorderCorners c = corners(*this);
    if (std::find(c.inward.begin(), c.inward.end(), b) == c.inward.end())
        throw std::invalid_argument("Border::with_added: not an inward corner");
    std::vector<int> e = entries_;
    e[static_cast<std::size_t>(b.y)] += 1;
    return Border(std::move(e));
}

Border Border::with_removed(Box b) const {
    BorderCorners c = corners(*this);
    if (std::find(c.outward.begin(), c.outward.end(), b) == c.outward.end())
        throw std::invalid_argument("Border::with_removed: not an outward corner");
    std::vector<int> e = entries_;
    e[static_cast<std::size_t>(b.y)] -= 1;
    return Border(std::move(e));
}

BorderCorners corners(const Border& b) {
    BorderCorners result;
    const int r = b.rows() - 1;
    for (int y = 0; y <= r; ++y) {
        // (b_y, y) is minimal outside b iff no shallower row blocks it.
        if (y == 0 || b[y - 1] > b[y]) result.inward.push_back({b[y], y});
        // (b_y - 1, y) is maximal inside b iff no deeper row extends past it.
        if (y == r || b[y + 1] < b[y]) result.outward.push_back({b[y] - 1, y});
    }
    return result;
}

SkewShape skew_between(const Border& rho, const Border& lam) {
    if (rho.rows() != lam.rows())
        throw std::invalid_argument("skew_between: row count mismatch");
    std::vector<Box> boxes;
    for (int y = 0; y < rho.rows(); ++y)
        for (int x = lam[y]; x < rho[y]; ++x) boxes.push_back({x, y});
    return SkewShape(std::move(boxes));
}

BNData::BNData(int g_, int r_, int d_, std::vector<int> alpha_, std::vector<int> beta_)
    : g(g_), r(r_), d(d_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (g < 0 || r < 0 || d < 0)
        throw std::invalid_argument("BNData: g, r, d must be nonnegative");
    auto check = [&](const std::vector<int>& s, const char* name) {
        if (static_cast<int>(s.size()) != r + 1)
            throw std::invalid_argument(std::string("BNData: ") + name + " must have r+1 entries");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0)
                throw std::invalid_argument(std::string("BNData: ") + name + " must be nonnegative");
            if (i > 0 && s[i - 1] > s[i])
                throw std::invalid_argument(std::string("BNData: ") + name + " must be nondecreasing");
        }
    };
    check(alpha, "alpha");
    check(beta, "beta");
}

long long BNData::rho() const {
    long long sum = 0;
    for (int a : alpha) sum += a;
    for (int b : beta) sum += b;
    return static_cast<long long>(g) - static_cast<long long>(r + 1) * (g - d + r) - sum;
}

long long BNData::rho_hat() const {
    return static_cast<long long>(g) - static_cast<long long>(sigma_of(*this).size());
}

Border BNData::lambda1() const {
    std::vector<int> e(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) e[i] = -alpha[i];
    return Border(std::move(e));
}

Border BNData::rho_g() const {
    std::vector<int> e(beta.size());
    for (int i = 0; i <= r; ++i)
        e[static_cast<std::size_t>(i)] = g - d + r + beta[static_cast<std::size_t>(r - i)];
    return Border(std::move(e));
}

SkewShape sigma_of(const BNData& data) {
    std::vector<Box> boxes;
    for (int y = 0; y <= data.r; ++y) {
        const int lo = -data.alpha[static_cast<std::size_t>(y)];
        const int hi = data.g - data.d + data.r + data.beta[static_cast<std::size_t>(data.r - y)];
        for (int x = lo; x < hi; ++x) boxes.push_back({x, y});
    }
    return SkewShape(std::move(boxes));
}

bool contains_same_columns(const SkewShape& mu, const SkewShape& sigma) {
    for (const Box& b : sigma.boxes())
        if (!mu.contains(b)) return false;
    std::set<int> sigma_cols;
    for (const Box& b : sigma.boxes()) sigma_cols.insert(b.x);
    for (const Box& b : mu.boxes())
        if (!sigma_cols.count(b.x)) return false;
    return true;
}

std::pair<SkewShape, SkewShape> above_below_split(const SkewShape& mu, const SkewShape& sigma) {
    if (!contains_same_columns(mu, sigma))
        throw std::invalid_argument("above_below_split: mu does not contain sigma within its columns");
    std::vector<Box> above, below;
    for (const Box& b : mu.boxes()) {
        if (sigma.contains(b)) continue;
        auto span = sigma.column_interval(b.x);
        // span exists: b's column is occupied by sigma.
        if (b.y < span->first) above.push_back(b);
        else below.push_back(b);
    }
    return {SkewShape(std::move(above)), SkewShape(std::move(below))};
}

}  // namespace bnchi
