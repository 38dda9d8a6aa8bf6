#pragma once

// Truncated formal power series in q with exact integer coefficients, and
// builders for the product and sum sides of Rogers-Ramanujan type
// identities.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrid/residue.hpp"

namespace rrid {

using Integer = boost::multiprecision::cpp_int;

/// Exact power series c_0 + c_1 q + ... + c_{order-1} q^{order-1} (mod q^order).
///
/// Binary arithmetic between series of different orders truncates to the
/// smaller order. Equality is only meaningful up to an explicit order, so
/// there is no operator==; use equal_to_order() or first_difference().
class TruncatedSeries {
public:
    /// The zero series of the given order. Throws std::invalid_argument on order 0.
    explicit TruncatedSeries(std::size_t order);
    /// Takes ownership of the coefficient list; order is its length (must be >= 1).
    explicit TruncatedSeries(std::vector<Integer> coefficients);

    static TruncatedSeries monomial(std::size_t exponent, std::size_t order, Integer coefficient = 1);

    std::size_t order() const noexcept { return coefficients_.size(); }
    const Integer &operator[](std::size_t exponent) const { return coefficients_.at(exponent); }
    std::span<const Integer> coefficients() const noexcept { return coefficients_; }

    /// Same series with a smaller truncation order.
    TruncatedSeries truncated(std::size_t order) const;

    TruncatedSeries &operator+=(const TruncatedSeries &other);
    TruncatedSeries &operator-=(const TruncatedSeries &other);
    TruncatedSeries &operator*=(const TruncatedSeries &other);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(TruncatedSeries a);

    /// In-place multiplication by 1/(1 - q^k), k >= 1. Linear time.
    TruncatedSeries &mul_geometric_inverse(std::size_t k);
    /// In-place multiplication by (1 - q^k), k >= 1. Linear time.
    TruncatedSeries &mul_one_minus_power(std::size_t k);
    /// In-place multiplication by q^k.
    TruncatedSeries &shift(std::size_t k);

    bool equal_to_order(const TruncatedSeries &other, std::size_t order) const;
    /// Smallest exponent < order where the two series differ. Throws if
    /// order exceeds either operand's truncation.
    std::optional<std::size_t> first_difference(const TruncatedSeries &other, std::size_t order) const;

    /// "c0 + c1*q + c2*q^2 + ... (mod q^ORDER)"; zero terms are omitted.
    std::string to_string() const;
    /// "[c0,c1,...,c_{order-1}]"
    std::string to_list() const;
    /// Inverse of to_list(). Throws std::invalid_argument on malformed input.
    static TruncatedSeries from_list(std::string_view text);

private:
    std::vector<Integer> coefficients_;
};

/// Raised when a sum side cannot be truncated after finitely many terms.
class NonTerminatingSum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

TruncatedSeries series_one(std::size_t order);

/// 1/(1 - q^k) = sum_{j>=0} q^{jk}.
TruncatedSeries geometric_inverse_factor(std::size_t k, std::size_t order);

/// (q)_n = prod_{s=1}^{n} (1 - q^s); 1 for n <= 0.
TruncatedSeries pochhammer(std::int64_t n, std::size_t order);

/// 1/(q)_n as a product of geometric factors; 1 for n <= 0.
TruncatedSeries pochhammer_inverse(std::int64_t n, std::size_t order);

/// (q^M; q^M)_n = prod_{s=1}^{n} (1 - q^{sM}); 1 for n <= 0.
TruncatedSeries pochhammer_base(std::int64_t base_exponent, std::int64_t n, std::size_t order);

/// prod over k < order, k in rc, of 1/(1 - q^k).
TruncatedSeries product_side(const ResidueClass &rc, std::size_t order);

using IndexMap = std::function<std::int64_t(std::int64_t)>;

struct SumOptions {
    std::int64_t first_index = 0;
    /// Number of indices scanned before giving up with NonTerminatingSum.
    std::int64_t max_terms = 100000;
};

/// sum_{n >= first_index} q^{S(n)} / (q)_{u(n)}.
///
/// Scanning stops at the first n with S(n) >= order. S must be nondecreasing
/// over the scanned range and both maps must be nonnegative there; violations
/// throw NonTerminatingSum.
TruncatedSeries sum_side_standard(const IndexMap &S, const IndexMap &u, std::size_t order,
                                  SumOptions options = {});

/// 1 + sum_{n>=1} (q^n - q^{nM}) (q^M;q^M)_{n-1} / (q)_n. Requires M >= 2.
TruncatedSeries sum_side_glaisher(std::int64_t modulus, std::size_t order);

/// 1 + sum_{n>=1} q^n prod_{j=1}^{n-1} (1 + q^j), the third expression of
/// Euler's identity.
TruncatedSeries euler_product_sum(std::size_t order);

/// alpha_n(q) = q^n (1 + q^n + ... + q^{n(M-2)}) prod_{j=1}^{n-1} (1 - q^{jM})/(1 - q^j);
/// alpha_0 = 1.
TruncatedSeries alpha_closed_form(std::int64_t modulus, std::int64_t n, std::size_t order);

/// alpha_n from the functional-equation recurrence
///   alpha_n = q^n (1 + q^n + ... + q^{n(M-2)}) * sum_{s=1}^{n} alpha_{n-s},
/// given lower = {alpha_0, ..., alpha_{n-1}}.
TruncatedSeries alpha_recurrence(std::int64_t modulus, std::int64_t n,
                                 std::span<const TruncatedSeries> lower, std::size_t order);

/// alpha_0 .. alpha_{count-1}, each computed by the recurrence.
std::vector<TruncatedSeries> alpha_sequence(std::int64_t modulus, std::int64_t count, std::size_t order);

} // namespace rrid
