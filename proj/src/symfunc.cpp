#include "bnchi/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace bnchi {

namespace {

int x_degree(const TruncatedPolynomial::Exponents& key, int n_x) {
    return std::accumulate(key.begin(), key.begin() + n_x, 0);
}

}  // namespace

TruncatedPolynomial::TruncatedPolynomial(int n_x, int n_w, int max_deg)
    : n_x_(n_x), n_w_(n_w), max_deg_(max_deg) {
    if (n_x < 0 || n_w < 0 || max_deg < 0)
        throw std::invalid_argument("TruncatedPolynomial: negative parameters");
}

TruncatedPolynomial TruncatedPolynomial::constant(int n_x, int n_w, int max_deg, const BigInt& c) {
    TruncatedPolynomial p(n_x, n_w, max_deg);
    p.add_term(Exponents(static_cast<std::size_t>(n_x), 0),
               Exponents(static_cast<std::size_t>(n_w), 0), c);
    return p;
}

void TruncatedPolynomial::add_term(const Exponents& xexp, const Exponents& wexp, const BigInt& c) {
    if (static_cast<int>(xexp.size()) != n_x_ || static_cast<int>(wexp.size()) != n_w_)
        throw std::invalid_argument("TruncatedPolynomial::add_term: exponent arity mismatch");
    if (c == 0) return;
    if (std::accumulate(xexp.begin(), xexp.end(), 0) > max_deg_) return;
    Exponents key = xexp;
    key.insert(key.end(), wexp.begin(), wexp.end());
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt TruncatedPolynomial::coefficient(const Exponents& xexp, const Exponents& wexp) const {
    Exponents key = xexp;
    key.insert(key.end(), wexp.begin(), wexp.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
    if (n_x_ != other.n_x_ || n_w_ != other.n_w_ || max_deg_ != other.max_deg_)
        throw std::invalid_argument("TruncatedPolynomial: shape mismatch");
    for (const auto& [key, c] : other.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other) {
    if (n_x_ != other.n_x_ || n_w_ != other.n_w_ || max_deg_ != other.max_deg_)
        throw std::invalid_argument("TruncatedPolynomial: shape mismatch");
    for (const auto& [key, c] : other.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    if (a.n_x_ != b.n_x_ || a.n_w_ != b.n_w_ || a.max_deg_ != b.max_deg_)
        throw std::invalid_argument("TruncatedPolynomial: shape mismatch");
    TruncatedPolynomial out(a.n_x_, a.n_w_, a.max_deg_);
    const std::size_t arity = static_cast<std::size_t>(a.n_x_ + a.n_w_);
    for (const auto& [ka, ca] : a.terms_) {
        const int da = x_degree(ka, a.n_x_);
        for (const auto& [kb, cb] : b.terms_) {
            if (da + x_degree(kb, a.n_x_) > a.max_deg_) continue;
            TruncatedPolynomial::Exponents key(arity);
            for (std::size_t i = 0; i < arity; ++i) key[i] = ka[i] + kb[i];
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(key), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

TruncatedPolynomial TruncatedPolynomial::specialize_w_to_one() const {
    TruncatedPolynomial out(n_x_, 0, max_deg_);
    for (const auto& [key, c] : terms_) {
        Exponents xexp(key.begin(), key.begin() + n_x_);
        out.add_term(xexp, {}, c);
    }
    return out;
}

std::optional<std::string> TruncatedPolynomial::first_difference(const TruncatedPolynomial& a,
                                                                 const TruncatedPolynomial& b) {
    if (a.n_x_ != b.n_x_ || a.n_w_ != b.n_w_ || a.max_deg_ != b.max_deg_)
        return "polynomial shapes differ";
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    auto describe = [&](const Exponents& key, const BigInt& ca, const BigInt& cb) {
        std::ostringstream os;
        os << "monomial ";
        for (int i = 0; i < a.n_x_; ++i)
            if (key[static_cast<std::size_t>(i)] != 0)
                os << "x" << (i + 1) << "^" << key[static_cast<std::size_t>(i)] << " ";
        for (int i = 0; i < a.n_w_; ++i)
            if (key[static_cast<std::size_t>(a.n_x_ + i)] != 0)
                os << "w" << (i + 1) << "^" << key[static_cast<std::size_t>(a.n_x_ + i)] << " ";
        os << ": " << ca.str() << " vs " << cb.str();
        return os.str();
    };
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            return describe(ia->first, ia->second, 0);
        }
        if (ia == a.terms_.end() || ib->first < ia->first) {
            return describe(ib->first, 0, ib->second);
        }
        if (ia->second != ib->second) return describe(ia->first, ia->second, ib->second);
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

std::string TruncatedPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < n_x_; ++i) {
            const int e = key[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            os << "*x" << (i + 1);
            if (e > 1) os << "^" << e;
        }
        for (int i = 0; i < n_w_; ++i) {
            const int e = key[static_cast<std::size_t>(n_x_ + i)];
            if (e == 0) continue;
            os << "*w" << (i + 1);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

TruncatedPolynomial monomial_from_content(const ContentVector& c, int n_x, int n_w, int max_deg,
                                          const BigInt& coef, const ContentVector& wexp) {
    ContentVector ct = trim_content(c);
    ContentVector wt = trim_content(wexp);
    if (static_cast<int>(ct.size()) > n_x)
        throw std::invalid_argument("monomial_from_content: content uses labels beyond n_x");
    if (static_cast<int>(wt.size()) > n_w)
        throw std::invalid_argument("monomial_from_content: excess uses rows beyond n_w");
    TruncatedPolynomial::Exponents xe(static_cast<std::size_t>(n_x), 0);
    std::copy(ct.begin(), ct.end(), xe.begin());
    TruncatedPolynomial::Exponents we(static_cast<std::size_t>(n_w), 0);
    std::copy(wt.begin(), wt.end(), we.begin());
    TruncatedPolynomial p(n_x, n_w, max_deg);
    p.add_term(xe, we, coef);
    return p;
}

TruncatedPolynomial skew_schur(const SkewShape& mu, int n_x, int max_deg) {
    TruncatedPolynomial out(n_x, 0, max_deg);
    if (static_cast<long long>(mu.size()) > max_deg) return out;
    for (const Tableau& t : enumerate_semistandard(mu, n_x))
        out += monomial_from_content(content_of(t), n_x, 0, max_deg, 1);
    return out;
}

TruncatedPolynomial skew_grothendieck(const SkewShape& sigma, int n_x, int max_deg) {
    TruncatedPolynomial out(n_x, 0, max_deg);
    for (const SetValuedTableau& t : enumerate_ssvt_bounded(sigma, n_x, max_deg)) {
        const long long excess = t.total_labels() - static_cast<long long>(sigma.size());
        out += monomial_from_content(content_of(t), n_x, 0, max_deg,
                                     excess % 2 == 0 ? BigInt(1) : BigInt(-1));
    }
    return out;
}

TruncatedPolynomial row_refined_grothendieck(const SkewShape& sigma, int n_x, int n_w,
                                             int max_deg) {
    if (n_w < sigma.row_span())
        throw std::invalid_argument("row_refined_grothendieck: n_w smaller than the row count");
    TruncatedPolynomial out(n_x, n_w, max_deg);
    const int top = sigma.empty() ? 0 : *sigma.top_y();
    for (const SetValuedTableau& t : enumerate_ssvt_bounded(sigma, n_x, max_deg)) {
        const ContentVector e = excess_of(t, top);
        const long long total_excess = content_weight(e);
        out += monomial_from_content(content_of(t), n_x, n_w, max_deg,
                                     total_excess % 2 == 0 ? BigInt(1) : BigInt(-1), e);
    }
    return out;
}

long long expansion_coefficient(const SkewShape& sigma, const SkewShape& mu,
                                const ContentVector& e) {
    auto [above, below] = above_below_split(mu, sigma);
    const int top = sigma.empty() ? (mu.empty() ? 0 : *mu.top_y()) : *sigma.top_y();
    const ContentVector target = trim_content(e);
    long long count = 0;
    for (const Tableau& tp : enumerate_row_weakly_bounded_semistandard(above, top)) {
        const ContentVector cp = content_of(tp);
        for (const Tableau& tpp : enumerate_reverse_row_strict_row_bounded(below, top)) {
            ContentVector total = cp;
            const ContentVector cpp = content_of(tpp);
            if (cpp.size() > total.size()) total.resize(cpp.size(), 0);
            for (std::size_t i = 0; i < cpp.size(); ++i) total[i] += cpp[i];
            if (trim_content(std::move(total)) == target) ++count;
        }
    }
    return count;
}

std::vector<SkewShape> enumerate_containing_shapes(const SkewShape& sigma, int extra_boxes) {
    // Grow sigma above/below within its columns; each column's contiguous
    // span extends by (up, down) amounts, filtered by interval closure.
    const std::vector<int> cols = sigma.columns();
    std::vector<SkewShape> out;
    std::vector<std::pair<int, int>> ext(cols.size(), {0, 0});
    auto emit = [&]() {
        std::vector<Box> boxes = sigma.boxes();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto span = sigma.column_interval(cols[i]);
            for (int u = 1; u <= ext[i].first; ++u) boxes.push_back({cols[i], span->first - u});
            for (int v = 1; v <= ext[i].second; ++v) boxes.push_back({cols[i], span->second + v});
        }
        if (!interval_closed(boxes)) return;
        out.push_back(SkewShape(std::move(boxes)));
    };
    auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == cols.size()) {
            emit();
            return;
        }
        for (int up = 0; up <= budget; ++up)
            for (int down = 0; up + down <= budget; ++down) {
                ext[i] = {up, down};
                self(self, i + 1, budget - up - down);
            }
        ext[i] = {0, 0};
    };
    if (sigma.empty()) return {sigma};
    rec(rec, 0, extra_boxes);
    return out;
}

ExpansionReport verify_refined_expansion(const SkewShape& sigma, int n_x, int n_w, int max_deg) {
    ExpansionReport report;
    const TruncatedPolynomial lhs = row_refined_grothendieck(sigma, n_x, n_w, max_deg);
    TruncatedPolynomial rhs(n_x, n_w, max_deg);
    const int budget = max_deg - static_cast<int>(sigma.size());
    const int top = sigma.empty() ? 0 : *sigma.top_y();
    const std::vector<SkewShape> shapes =
        budget >= 0 ? enumerate_containing_shapes(sigma, budget) : std::vector<SkewShape>{};
    report.candidate_shapes = static_cast<long long>(shapes.size());
    for (const SkewShape& mu : shapes) {
        auto [above, below] = above_below_split(mu, sigma);
        const BigInt sign = below.size() % 2 == 0 ? 1 : -1;
        const TruncatedPolynomial schur_part = [&] {
            TruncatedPolynomial s = skew_schur(mu, n_x, max_deg);
            // lift into the (x, w) ring
            TruncatedPolynomial lifted(n_x, n_w, max_deg);
            for (const auto& [key, c] : s.terms()) {
                TruncatedPolynomial::Exponents we(static_cast<std::size_t>(n_w), 0);
                lifted.add_term(key, we, c);
            }
            return lifted;
        }();
        if (schur_part.is_zero()) continue;
        // Each pair (T', T'') contributes sign * s_mu * w^{c(T')+c(T'')}.
        for (const Tableau& tp : enumerate_row_weakly_bounded_semistandard(above, top)) {
            const ContentVector cp = content_of(tp);
            for (const Tableau& tpp : enumerate_reverse_row_strict_row_bounded(below, top)) {
                ContentVector e = cp;
                const ContentVector cpp = content_of(tpp);
                if (cpp.size() > e.size()) e.resize(cpp.size(), 0);
                for (std::size_t i = 0; i < cpp.size(); ++i) e[i] += cpp[i];
                rhs += schur_part * monomial_from_content({}, n_x, n_w, max_deg, sign, e);
            }
        }
    }
    auto diff = TruncatedPolynomial::first_difference(lhs, rhs);
    report.equal = !diff.has_value();
    if (diff) report.first_difference = *diff;
    return report;
}

CountIdentityReport verify_count_identity(const SkewShape& sigma, const ContentVector& c,
                                          const ContentVector& e) {
    CountIdentityReport report;
    const ContentVector excess = trim_content(e);
    const int top = sigma.empty() ? 0 : *sigma.top_y();
    report.lhs =
        static_cast<long long>(enumerate_ssvt(sigma, c, excess, top).size());
    long long rhs = 0;
    for (const SkewShape& mu :
         enumerate_containing_shapes(sigma, static_cast<int>(content_weight(excess)))) {
        const long long a = expansion_coefficient(sigma, mu, excess);
        if (a == 0) continue;
        auto [above, below] = above_below_split(mu, sigma);
        const int mu_top = mu.empty() ? 0 : *mu.top_y();
        const long long count =
            static_cast<long long>(enumerate_ssvt(mu, c, ContentVector{}, mu_top).size());
        rhs += (above.size() % 2 == 0 ? 1 : -1) * a * count;
    }
    report.rhs = rhs;
    report.equal = report.lhs == report.rhs;
    return report;
}

}  // namespace bnchi
