#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bnchi/shapes.hpp"
#include "bnchi/tableaux.hpp"

// Exact sparse polynomials in x_1..x_{n_x} and w_1..w_{n_w}, truncated to
// total x-degree <= max_deg, together with skew Schur functions, skew
// stable Grothendieck polynomials, their row-refined variant, and the
// expansion coefficients a_{sigma,mu,e}.
//
// Identities between symmetric functions are checked on their images in
// Z[x_1..x_{n_x}]/(x-degree > max_deg): coefficients of monomials with at
// most n_x distinct x-variables and degree at most max_deg are exact.

namespace bnchi {

using BigInt = boost::multiprecision::cpp_int;

class TruncatedPolynomial {
  public:
    // Exponent vector: n_x x-exponents followed by n_w w-exponents.
    using Exponents = std::vector<int>;

    TruncatedPolynomial(int n_x, int n_w, int max_deg);

    int n_x() const { return n_x_; }
    int n_w() const { return n_w_; }
    int max_deg() const { return max_deg_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    static TruncatedPolynomial constant(int n_x, int n_w, int max_deg, const BigInt& c);

    // Adds c * x^xexp * w^wexp, dropping it if the x-degree exceeds max_deg.
    void add_term(const Exponents& xexp, const Exponents& wexp, const BigInt& c);

    BigInt coefficient(const Exponents& xexp, const Exponents& wexp) const;

    TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
    TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
    friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        return a += b;
    }
    friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) {
        return a -= b;
    }
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

    // Substitutes every w-variable by 1, leaving a polynomial with n_w = 0.
    TruncatedPolynomial specialize_w_to_one() const;

    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

    // First differing monomial between two compatible polynomials, as a
    // printable string; nullopt when equal.
    static std::optional<std::string> first_difference(const TruncatedPolynomial& a,
                                                       const TruncatedPolynomial& b);

    std::string to_string() const;

  private:
    int n_x_;
    int n_w_;
    int max_deg_;
    std::map<Exponents, BigInt> terms_;  // key: x-exponents ++ w-exponents, no zero coefficients
};

// Monomial x^{c(T)} for a content vector; throws if the content uses labels
// beyond n_x.
TruncatedPolynomial monomial_from_content(const ContentVector& c, int n_x, int n_w, int max_deg,
                                          const BigInt& coef, const ContentVector& wexp = {});

// s_mu = sum_T x^{c(T)} over semistandard fillings with labels <= n_x.
TruncatedPolynomial skew_schur(const SkewShape& mu, int n_x, int max_deg);

// G_sigma = sum_T (-1)^{|T|-|sigma|} x^{c(T)} over semistandard set-valued
// fillings with labels <= n_x, truncated.
TruncatedPolynomial skew_grothendieck(const SkewShape& sigma, int n_x, int max_deg);

// RG_sigma(x;w) = sum_T (-1)^{|e(T)|} x^{c(T)} w^{e(T)}; requires
// n_w >= number of rows of sigma.
TruncatedPolynomial row_refined_grothendieck(const SkewShape& sigma, int n_x, int n_w, int max_deg);

// a_{sigma,mu,e}: pairs (T', T'') of a row-weakly-bounded semistandard
// tableau on A(mu/sigma) and a reverse-row-strict row-bounded tableau on
// B(mu/sigma) with c(T') + c(T'') = e.  Requires
// contains_same_columns(mu, sigma).
long long expansion_coefficient(const SkewShape& sigma, const SkewShape& mu,
                                const ContentVector& e);

// All shapes mu containing sigma within its columns with at most
// extra_boxes added boxes, in a deterministic order (sigma itself first).
std::vector<SkewShape> enumerate_containing_shapes(const SkewShape& sigma, int extra_boxes);

struct ExpansionReport {
    bool equal = false;
    long long candidate_shapes = 0;
    std::string first_difference;  // empty when equal
};

// Checks RG_sigma = sum_{mu,e} (-1)^{|B(mu/sigma)|} a_{sigma,mu,e} s_mu w^e
// within the truncation.
ExpansionReport verify_refined_expansion(const SkewShape& sigma, int n_x, int n_w, int max_deg);

struct CountIdentityReport {
    bool equal = false;
    long long lhs = 0;
    long long rhs = 0;
};

// Checks |SS_{c,e}(sigma)| = sum_mu (-1)^{|A(mu/sigma)|} a_{sigma,mu,e}
// |SS_{c,0}(mu)| by exhaustive enumeration of both sides.
CountIdentityReport verify_count_identity(const SkewShape& sigma, const ContentVector& c,
                                          const ContentVector& e);

}  // namespace bnchi
