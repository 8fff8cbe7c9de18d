#pragma once

// Exact integer linear algebra and Laurent polynomials. No floating point.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bglink {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n, T fill = T{})
        : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
        if (n < 0)
            throw std::invalid_argument("negative matrix size");
    }

    int size() const { return n_; }
    T& operator()(int i, int j) { return data_[index(i, j)]; }
    const T& operator()(int i, int j) const { return data_[index(i, j)]; }

    SquareMatrix transposed() const {
        SquareMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<std::int64_t>;

/// Fraction-free Gaussian elimination (Bareiss). Exact for any integer matrix.
inline BigInt determinant(SquareMatrix<BigInt> a) {
    const int n = a.size();
    if (n == 0)
        return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline BigInt determinant(const IntMatrix& m) {
    SquareMatrix<BigInt> a(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            a(i, j) = m(i, j);
    return determinant(std::move(a));
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Inertia of a symmetric integer matrix by congruence diagonalization over Q.
/// A zero pivot is replaced by a later nonzero diagonal entry, or failing
/// that made nonzero by adding a row/column with a nonzero off-diagonal entry.
inline Inertia inertia(const IntMatrix& m) {
    const int n = m.size();
    SquareMatrix<BigRational> a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("inertia needs a symmetric matrix");
            a(i, j) = m(i, j);
        }

    auto swap_index = [&a, n](int x, int y) {
        for (int j = 0; j < n; ++j)
            std::swap(a(x, j), a(y, j));
        for (int i = 0; i < n; ++i)
            std::swap(a(i, x), a(i, y));
    };

    Inertia result;
    for (int k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            int r = k + 1;
            while (r < n && a(r, r) == 0)
                ++r;
            if (r < n) {
                swap_index(k, r);
            } else {
                r = k + 1;
                while (r < n && a(k, r) == 0)
                    ++r;
                if (r == n) {
                    ++result.zero;
                    continue;
                }
                // row_k += row_r, col_k += col_r: new pivot is 2 a(k,r) != 0
                for (int j = 0; j < n; ++j)
                    a(k, j) += a(r, j);
                for (int i = 0; i < n; ++i)
                    a(i, k) += a(i, r);
            }
        }
        const BigRational pivot = a(k, k);
        if (pivot > 0)
            ++result.positive;
        else
            ++result.negative;
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            const BigRational f = a(i, k) / pivot;
            for (int j = k; j < n; ++j)
                a(i, j) -= f * a(k, j);
        }
        // The trailing block is now the Schur complement, symmetric again.
        for (int i = k + 1; i < n; ++i)
            a(k, i) = 0;
    }
    return result;
}

/// Finite Laurent polynomial with integer coefficients:
/// Σ coefficients[k] · t^(low + k). The zero polynomial has no coefficients.
struct LaurentPolynomial {
    int low = 0;
    std::vector<std::int64_t> coefficients;

    bool is_zero() const { return coefficients.empty(); }
    int high() const { return low + static_cast<int>(coefficients.size()) - 1; }
    int span() const { return is_zero() ? 0 : static_cast<int>(coefficients.size()) - 1; }

    std::int64_t coefficient(int exponent) const {
        const int k = exponent - low;
        if (k < 0 || k >= static_cast<int>(coefficients.size()))
            return 0;
        return coefficients[static_cast<std::size_t>(k)];
    }

    BigInt evaluate(const BigInt& t) const {
        if (t == 0 && low < 0)
            throw std::domain_error("Laurent polynomial evaluated at 0");
        BigRational acc = 0, power = 1;
        BigRational tr(t);
        if (low >= 0)
            for (int k = 0; k < low; ++k)
                power *= tr;
        else
            for (int k = 0; k < -low; ++k)
                power /= tr;
        for (std::int64_t c : coefficients) {
            acc += power * c;
            power *= tr;
        }
        if (boost::multiprecision::denominator(acc) != 1)
            throw std::domain_error("non-integral value");
        return boost::multiprecision::numerator(acc);
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
};

inline std::int64_t to_int64(const BigInt& x) {
    if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
        throw std::overflow_error("coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(x);
}

/// Strips zero coefficients at both ends.
inline LaurentPolynomial trimmed(LaurentPolynomial p) {
    std::size_t first = 0;
    while (first < p.coefficients.size() && p.coefficients[first] == 0)
        ++first;
    if (first == p.coefficients.size())
        return {};
    std::size_t last = p.coefficients.size();
    while (p.coefficients[last - 1] == 0)
        --last;
    LaurentPolynomial out;
    out.low = p.low + static_cast<int>(first);
    out.coefficients.assign(p.coefficients.begin() + static_cast<std::ptrdiff_t>(first),
                            p.coefficients.begin() + static_cast<std::ptrdiff_t>(last));
    return out;
}

/// Normal form of a polynomial defined up to ±t^k: trimmed, shifted so the
/// lowest exponent is -floor(span/2), leading coefficient positive. For a
/// symmetric polynomial this is the centered form with Δ(t) = Δ(t^{-1}).
inline LaurentPolynomial normalized_up_to_units(LaurentPolynomial p) {
    p = trimmed(std::move(p));
    if (p.is_zero())
        return p;
    p.low = -(p.span() / 2);
    if (p.coefficients.back() < 0)
        for (auto& c : p.coefficients)
            c = -c;
    return p;
}

/// Coefficients c_0..c_deg of the unique polynomial of degree <= deg through
/// (xs[i], ys[i]), by Newton divided differences over Q.
inline std::vector<BigInt> interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
    const std::size_t n = xs.size();
    std::vector<BigRational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / BigRational(xs[i] - xs[i - level]);
    // Horner-style expansion of the Newton form into monomials.
    std::vector<BigRational> poly(n, BigRational(0));
    for (std::size_t k = n; k-- > 0;) {
        // poly = poly * (x - xs[k]) + dd[k]
        std::vector<BigRational> next(n, BigRational(0));
        for (std::size_t d = 0; d + 1 < n; ++d) {
            next[d + 1] += poly[d];
            next[d] -= poly[d] * BigRational(xs[k]);
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    std::vector<BigInt> out;
    out.reserve(n);
    for (const auto& c : poly) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("interpolated polynomial is not integral");
        out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

}  // namespace bglink
