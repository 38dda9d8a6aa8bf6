#include "rrid/series.hpp"

#include <algorithm>
#include <sstream>

namespace rrid {

namespace {

std::size_t checked_order(std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("series order must be positive");
    }
    return order;
}

// q^n (1 + q^n + ... + q^{n(M-2)}) = (q^n - q^{nM}) / (1 - q^n), expanded.
TruncatedSeries geometric_block(std::int64_t modulus, std::int64_t n, std::size_t order)
{
    std::vector<Integer> coefficients(checked_order(order));
    for (std::int64_t j = 1; j <= modulus - 1; ++j) {
        const auto exponent = static_cast<std::size_t>(n * j);
        if (exponent >= order) {
            break;
        }
        coefficients[exponent] += 1;
    }
    return TruncatedSeries(std::move(coefficients));
}

void check_modulus(std::int64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(checked_order(order)) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients))
{
    checked_order(coefficients_.size());
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, std::size_t order, Integer coefficient)
{
    TruncatedSeries result(order);
    if (exponent < order) {
        result.coefficients_[exponent] = std::move(coefficient);
    }
    return result;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return TruncatedSeries(std::vector<Integer>(coefficients_.begin(),
                                                coefficients_.begin() + static_cast<std::ptrdiff_t>(order)));
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &other)
{
    coefficients_.resize(std::min(order(), other.order()));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        coefficients_[i] += other.coefficients_[i];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &other)
{
    coefficients_.resize(std::min(order(), other.order()));
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        coefficients_[i] -= other.coefficients_[i];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &other)
{
    *this = *this * other;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
{
    a += b;
    return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
{
    a -= b;
    return a;
}

TruncatedSeries operator-(TruncatedSeries a)
{
    for (auto &c : a.coefficients_) {
        c = -c;
    }
    return a;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Integer> product(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (a.coefficients_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < order; ++j) {
            if (!b.coefficients_[j].is_zero()) {
                product[i + j] += a.coefficients_[i] * b.coefficients_[j];
            }
        }
    }
    return TruncatedSeries(std::move(product));
}

TruncatedSeries &TruncatedSeries::mul_geometric_inverse(std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("1/(1 - q^0) is not a power series");
    }
    for (std::size_t i = k; i < coefficients_.size(); ++i) {
        coefficients_[i] += coefficients_[i - k];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::mul_one_minus_power(std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("factor 1 - q^0 vanishes");
    }
    for (std::size_t i = coefficients_.size(); i-- > k;) {
        coefficients_[i] -= coefficients_[i - k];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::shift(std::size_t k)
{
    if (k == 0) {
        return *this;
    }
    const std::size_t n = coefficients_.size();
    for (std::size_t i = n; i-- > 0;) {
        coefficients_[i] = i >= k ? coefficients_[i - k] : Integer(0);
    }
    return *this;
}

bool TruncatedSeries::equal_to_order(const TruncatedSeries &other, std::size_t order) const
{
    return !first_difference(other, order).has_value();
}

std::optional<std::size_t> TruncatedSeries::first_difference(const TruncatedSeries &other, std::size_t order) const
{
    if (order > this->order() || order > other.order()) {
        throw std::invalid_argument("comparison order exceeds series truncation");
    }
    for (std::size_t i = 0; i < order; ++i) {
        if (coefficients_[i] != other.coefficients_[i]) {
            return i;
        }
    }
    return std::nullopt;
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const Integer &c = coefficients_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c < 0;
        const Integer magnitude = negative ? Integer(-c) : c;
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << magnitude;
            continue;
        }
        if (magnitude != 1) {
            out << magnitude << '*';
        }
        out << 'q';
        if (i > 1) {
            out << '^' << i;
        }
    }
    if (first) {
        out << '0';
    }
    out << " (mod q^" << coefficients_.size() << ')';
    return out.str();
}

std::string TruncatedSeries::to_list() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i != 0) {
            out << ',';
        }
        out << coefficients_[i];
    }
    out << ']';
    return out.str();
}

TruncatedSeries TruncatedSeries::from_list(std::string_view text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::invalid_argument("series list must be bracketed");
    }
    text = text.substr(1, text.size() - 2);
    std::vector<Integer> coefficients;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        const bool negative = !token.empty() && token.front() == '-';
        const std::string_view digits = negative ? token.substr(1) : token;
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("malformed series coefficient '" + std::string(token) + "'");
        }
        const Integer value{std::string(digits)};
        coefficients.push_back(negative ? Integer(-value) : value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return TruncatedSeries(std::move(coefficients));
}

TruncatedSeries series_one(std::size_t order)
{
    return TruncatedSeries::monomial(0, order);
}

TruncatedSeries geometric_inverse_factor(std::size_t k, std::size_t order)
{
    return series_one(order).mul_geometric_inverse(k);
}

TruncatedSeries pochhammer(std::int64_t n, std::size_t order)
{
    return pochhammer_base(1, n, order);
}

TruncatedSeries pochhammer_inverse(std::int64_t n, std::size_t order)
{
    auto result = series_one(order);
    for (std::int64_t s = 1; s <= n && static_cast<std::size_t>(s) < order; ++s) {
        result.mul_geometric_inverse(static_cast<std::size_t>(s));
    }
    return result;
}

TruncatedSeries pochhammer_base(std::int64_t base_exponent, std::int64_t n, std::size_t order)
{
    if (base_exponent < 1) {
        throw std::invalid_argument("pochhammer base exponent must be positive");
    }
    auto result = series_one(order);
    for (std::int64_t s = 1; s <= n; ++s) {
        const auto exponent = static_cast<std::size_t>(s * base_exponent);
        if (exponent >= order) {
            break;
        }
        result.mul_one_minus_power(exponent);
    }
    return result;
}

TruncatedSeries product_side(const ResidueClass &rc, std::size_t order)
{
    auto result = series_one(order);
    for (std::size_t k = 1; k < order; ++k) {
        if (rc.contains(static_cast<std::int64_t>(k))) {
            result.mul_geometric_inverse(k);
        }
    }
    return result;
}

TruncatedSeries sum_side_standard(const IndexMap &S, const IndexMap &u, std::size_t order, SumOptions options)
{
    TruncatedSeries total(order);
    std::optional<std::int64_t> previous;
    for (std::int64_t i = 0; i < options.max_terms; ++i) {
        const std::int64_t n = options.first_index + i;
        const std::int64_t exponent = S(n);
        const std::int64_t slots = u(n);
        if (exponent < 0 || slots < 0) {
            throw NonTerminatingSum("negative S(n) or u(n) at n = " + std::to_string(n));
        }
        if (previous && exponent < *previous) {
            throw NonTerminatingSum("S(n) decreases at n = " + std::to_string(n));
        }
        previous = exponent;
        if (static_cast<std::size_t>(exponent) >= order) {
            return total;
        }
        auto term = TruncatedSeries::monomial(static_cast<std::size_t>(exponent), order);
        for (std::int64_t s = 1; s <= slots && static_cast<std::size_t>(s) < order; ++s) {
            term.mul_geometric_inverse(static_cast<std::size_t>(s));
        }
        total += term;
    }
    throw NonTerminatingSum("S(n) stayed below order " + std::to_string(order) + " for "
                            + std::to_string(options.max_terms) + " terms");
}

TruncatedSeries sum_side_glaisher(std::int64_t modulus, std::size_t order)
{
    check_modulus(modulus);
    auto total = series_one(order);
    // running = (q^M;q^M)_{n-1} / (q)_n
    auto running = series_one(order);
    for (std::size_t n = 1; n < order; ++n) {
        running.mul_geometric_inverse(n);
        if (n > 1) {
            const auto exponent = static_cast<std::size_t>(modulus) * (n - 1);
            if (exponent < order) {
                running.mul_one_minus_power(exponent);
            }
        }
        // (q^n - q^{nM}) * running
        auto term = running;
        term.shift(n);
        auto high = running;
        const auto high_shift = n * static_cast<std::size_t>(modulus);
        if (high_shift < order) {
            high.shift(high_shift);
            term -= high;
        }
        total += term;
    }
    return total;
}

TruncatedSeries euler_product_sum(std::size_t order)
{
    auto total = series_one(order);
    // running = prod_{j=1}^{n-1} (1 + q^j)
    auto running = series_one(order);
    for (std::size_t n = 1; n < order; ++n) {
        if (n > 1) {
            auto shifted = running;
            shifted.shift(n - 1);
            running += shifted;
        }
        auto term = running;
        total += term.shift(n);
    }
    return total;
}

TruncatedSeries alpha_closed_form(std::int64_t modulus, std::int64_t n, std::size_t order)
{
    check_modulus(modulus);
    if (n < 0) {
        throw std::invalid_argument("alpha index must be nonnegative");
    }
    if (n == 0) {
        return series_one(order);
    }
    auto result = geometric_block(modulus, n, order);
    result *= pochhammer_base(modulus, n - 1, order);
    for (std::int64_t j = 1; j <= n - 1 && static_cast<std::size_t>(j) < order; ++j) {
        result.mul_geometric_inverse(static_cast<std::size_t>(j));
    }
    return result;
}

TruncatedSeries alpha_recurrence(std::int64_t modulus, std::int64_t n, std::span<const TruncatedSeries> lower,
                                 std::size_t order)
{
    check_modulus(modulus);
    if (n < 0) {
        throw std::invalid_argument("alpha index must be nonnegative");
    }
    if (n == 0) {
        return series_one(order);
    }
    if (lower.size() < static_cast<std::size_t>(n)) {
        throw std::invalid_argument("alpha recurrence needs alpha_0 .. alpha_{n-1}");
    }
    TruncatedSeries sum(order);
    for (std::int64_t s = 1; s <= n; ++s) {
        sum += lower[static_cast<std::size_t>(n - s)];
    }
    if (sum.order() < order) {
        throw std::invalid_argument("lower alphas have smaller order than requested");
    }
    return geometric_block(modulus, n, order) * sum;
}

std::vector<TruncatedSeries> alpha_sequence(std::int64_t modulus, std::int64_t count, std::size_t order)
{
    std::vector<TruncatedSeries> alphas;
    for (std::int64_t n = 0; n < count; ++n) {
        alphas.push_back(alpha_recurrence(modulus, n, alphas, order));
    }
    return alphas;
}

} // namespace rrid
