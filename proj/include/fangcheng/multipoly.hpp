#pragma once

// Sparse multivariate polynomials over the integers, used for symbolic tableau
// runs (one indeterminate per cell of the initial tableau). Terms are kept in
// graded-lexicographic descending order with no zero coefficients, so two
// equal polynomials always have identical representations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fangcheng/ring.hpp"

namespace fangcheng {

class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Term = std::pair<Exponents, Integer>;

    MultiPoly() = default; // zero polynomial over zero variables

    static MultiPoly zero(std::size_t nvars);
    static MultiPoly constant(std::size_t nvars, Integer value);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    std::size_t var_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Maximum total degree; empty for the zero polynomial (a distinct sentinel,
    // so a degree assertion can never mistake zero for a constant).
    std::optional<std::uint64_t> degree() const;
    // True when every term has the same total degree. The zero polynomial
    // counts as homogeneous.
    bool is_homogeneous() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;

    // Exact quotient via repeated leading-term reduction in the graded-lex
    // order. Over an integral domain the leading term of an exact product
    // factors, so the reduction succeeds exactly when the divisor divides;
    // any failed monomial or coefficient division throws InexactDivision.
    MultiPoly exact_div(const MultiPoly& divisor) const;

    bool operator==(const MultiPoly& o) const = default;

    // Human-readable rendering, e.g. "v1_1*v2_2 - v1_2*v2_1". `names` may be
    // empty (falls back to x0, x1, ...) or must cover every variable.
    std::string str(const std::vector<std::string>& names = {}) const;

    // Largest coefficient bit length; used as the entry-size measure in traces.
    unsigned coeff_bit_measure() const;

private:
    void check_compatible(const MultiPoly& o) const;

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

template <>
struct RingTraits<MultiPoly> {
    static constexpr bool is_field = false;
    static constexpr const char* name = "polynomial";

    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static bool is_one(const MultiPoly& a) { return a.is_one(); }
    static MultiPoly zero_like(const MultiPoly& a) { return MultiPoly::zero(a.var_count()); }
    static MultiPoly one_like(const MultiPoly& a) {
        return MultiPoly::constant(a.var_count(), 1);
    }
    static MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
    static MultiPoly sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
        return a.exact_div(b);
    }
    static std::string str(const MultiPoly& a) { return a.str(); }
    static unsigned bit_measure(const MultiPoly& a) { return a.coeff_bit_measure(); }
};

} // namespace fangcheng
