#include "fangcheng/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fangcheng {

namespace {

std::uint64_t total_degree(const MultiPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// Graded-lex: higher total degree first, ties broken lexicographically on the
// exponent vector (earlier variables more significant).
bool graded_lex_greater(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct GradedLexGreater {
    bool operator()(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) const {
        return graded_lex_greater(a, b);
    }
};

} // namespace

MultiPoly MultiPoly::zero(std::size_t nvars) {
    MultiPoly p;
    p.nvars_ = nvars;
    return p;
}

MultiPoly MultiPoly::constant(std::size_t nvars, Integer value) {
    MultiPoly p;
    p.nvars_ = nvars;
    if (!value.is_zero())
        p.terms_.emplace_back(Exponents(nvars, 0), std::move(value));
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars)
        throw DimensionMismatch("variable index " + std::to_string(index) +
                                " out of range for " + std::to_string(nvars) + " variables");
    MultiPoly p;
    p.nvars_ = nvars;
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace_back(std::move(e), Integer(1));
    return p;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 && total_degree(terms_[0].first) == 0;
}

std::optional<std::uint64_t> MultiPoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return total_degree(terms_.front().first); // leading term has the max degree
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    std::uint64_t d = total_degree(terms_.front().first);
    return total_degree(terms_.back().first) == d;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatch("polynomials over " + std::to_string(nvars_) + " and " +
                                std::to_string(o.nvars_) + " variables");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r;
    r.nvars_ = nvars_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first == b->first) {
            Integer c = a->second + b->second;
            if (!c.is_zero())
                r.terms_.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        } else if (graded_lex_greater(a->first, b->first)) {
            r.terms_.push_back(*a++);
        } else {
            r.terms_.push_back(*b++);
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    std::map<Exponents, Integer, GradedLexGreater> acc;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t v = 0; v < nvars_; ++v)
                e[v] = ea[v] + eb[v];
            auto [it, fresh] = acc.try_emplace(std::move(e), Integer(ca * cb));
            if (!fresh)
                it->second += ca * cb;
        }
    }
    MultiPoly r;
    r.nvars_ = nvars_;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero())
            r.terms_.emplace_back(e, std::move(c));
    return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
    check_compatible(divisor);
    if (divisor.is_zero())
        throw DivideByZero();
    MultiPoly quotient = MultiPoly::zero(nvars_);
    MultiPoly rem = *this;
    const auto& [lead_e, lead_c] = divisor.terms_.front();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.terms_.front();
        Exponents qe(nvars_);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (re[v] < lead_e[v])
                throw InexactDivision(str(), divisor.str());
            qe[v] = re[v] - lead_e[v];
        }
        Integer q, r;
        boost::multiprecision::divide_qr(rc, lead_c, q, r);
        if (!r.is_zero())
            throw InexactDivision(str(), divisor.str());
        MultiPoly t;
        t.nvars_ = nvars_;
        t.terms_.emplace_back(std::move(qe), std::move(q));
        quotient = quotient + t;
        rem = rem - t * divisor;
    }
    return quotient;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer mag = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool has_vars = total_degree(e) > 0;
        bool need_star = false;
        if (mag != 1 || !has_vars) {
            out += mag.str();
            need_star = has_vars;
        }
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0)
                continue;
            if (need_star)
                out += "*";
            out += names.empty() ? ("x" + std::to_string(v)) : names.at(v);
            if (e[v] > 1)
                out += "^" + std::to_string(e[v]);
            need_star = true;
        }
    }
    return out;
}

unsigned MultiPoly::coeff_bit_measure() const {
    unsigned best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, bit_length(c));
    return best;
}

} // namespace fangcheng
