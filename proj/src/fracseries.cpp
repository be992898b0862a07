#include "fracadm/fracseries.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "fracadm/errors.hpp"
#include "fracadm/specialfn.hpp"

namespace fracadm {
namespace {

double snap_exponent(double p) {
    const double r = std::round(p);
    if (std::abs(p - r) <= kExponentTolerance) return r + 0.0; // also clears -0.0
    return p;
}

bool is_integer(double p) { return p == std::floor(p); }

// Collapse runs of values within tolerance (values must already be sorted)
// onto the first value of the run.
template <typename Get, typename Set>
void cluster_sorted(std::span<Term> terms, Get get, Set set) {
    std::size_t start = 0;
    for (std::size_t i = 1; i <= terms.size(); ++i) {
        if (i == terms.size() || get(terms[i]) - get(terms[i - 1]) > kExponentTolerance) {
            const double rep = get(terms[start]);
            for (std::size_t k = start; k < i; ++k) set(terms[k], rep);
            start = i;
        }
    }
}

double power(double v, double p) {
    if (is_integer(p)) {
        if (v == 0.0 && p < 0.0) throw DomainError("zero raised to a negative exponent");
        return std::pow(v, p);
    }
    if (v < 0.0) throw DomainError("negative base raised to a non-integer exponent");
    if (v == 0.0) {
        if (p < 0.0) throw DomainError("zero raised to a negative exponent");
        return 0.0;
    }
    return std::pow(v, p);
}

long double power(long double v, double p) {
    if (is_integer(p)) {
        if (v == 0.0L && p < 0.0) throw DomainError("zero raised to a negative exponent");
        return std::pow(v, static_cast<long double>(p));
    }
    if (v < 0.0L) throw DomainError("negative base raised to a non-integer exponent");
    if (v == 0.0L) {
        if (p < 0.0) throw DomainError("zero raised to a negative exponent");
        return 0.0L;
    }
    return std::pow(v, static_cast<long double>(p));
}

// Full precision prints the shortest form that reads back to v.
std::string format_number(double v, int digits) {
    char buf[64];
    if (digits >= 17) {
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

} // namespace

std::vector<Term> normalize(std::vector<Term> terms) {
    for (auto& t : terms) {
        t.px = snap_exponent(t.px);
        t.py = snap_exponent(t.py);
    }

    // Cluster x exponents globally, then y exponents within each x cluster, so
    // that tolerance-equal exponents become bit-equal before merging.
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.px < b.px; });
    cluster_sorted(std::span<Term>(terms), [](const Term& t) { return t.px; },
                   [](Term& t, double v) { t.px = v; });
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return a.px != b.px ? a.px < b.px : a.py < b.py;
    });
    for (std::size_t start = 0; start < terms.size();) {
        std::size_t end = start;
        while (end < terms.size() && terms[end].px == terms[start].px) ++end;
        cluster_sorted(std::span<Term>(terms.data() + start, end - start),
                       [](const Term& t) { return t.py; }, [](Term& t, double v) { t.py = v; });
        start = end;
    }

    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (const auto& t : terms) {
        if (!merged.empty() && merged.back().px == t.px && merged.back().py == t.py)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }

    double largest = 0.0;
    for (const auto& t : merged) largest = std::max(largest, std::abs(t.coeff));
    const double threshold = kDropThreshold * std::max(1.0, largest);
    std::erase_if(merged, [&](const Term& t) { return std::abs(t.coeff) <= threshold; });
    return merged;
}

Series::Series(std::initializer_list<Term> terms) : terms_(normalize(std::vector<Term>(terms))) {}

Series::Series(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

Series Series::constant(double c) { return Series{{c, 0.0, 0.0}}; }

Series Series::monomial(double coeff, double px, double py) { return Series{{coeff, px, py}}; }

double Series::min_exponent(Axis axis) const noexcept {
    if (terms_.empty()) return 0.0;
    double m = terms_.front().exponent(axis);
    for (const auto& t : terms_) m = std::min(m, t.exponent(axis));
    return m;
}

bool Series::independent_of(Axis axis) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [axis](const Term& t) { return t.exponent(axis) == 0.0; });
}

Series add(const Series& a, const Series& b) {
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return Series(std::move(terms));
}

Series scale(const Series& a, double c) {
    std::vector<Term> terms = a.terms();
    for (auto& t : terms) t.coeff *= c;
    return Series(std::move(terms));
}

Series mul(const Series& a, const Series& b, std::size_t term_cap) {
    const std::size_t n = a.size() * b.size();
    if (n > term_cap) throw TermCapExceeded(n, term_cap);
    std::vector<Term> terms;
    terms.reserve(n);
    for (const auto& s : a.terms())
        for (const auto& t : b.terms())
            terms.push_back({s.coeff * t.coeff, s.px + t.px, s.py + t.py});
    return Series(std::move(terms));
}

Series caputo_derivative(const Series& s, double order, Axis axis) {
    if (!(order > 0.0 && order <= 1.0))
        throw InvalidArgument("Caputo derivative order must lie in (0, 1], got " +
                              format_number(order, 17));
    std::vector<Term> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) {
        const double p = t.exponent(axis);
        if (p == 0.0) continue;
        Term d = t;
        d.coeff *= gamma_ratio(p + 1.0, p + 1.0 - order);
        (axis == Axis::X ? d.px : d.py) = p - order;
        out.push_back(d);
    }
    return Series(std::move(out));
}

Series rl_integral(const Series& s, double order, Axis axis) {
    if (!(order > 0.0))
        throw InvalidArgument("fractional integral order must be positive, got " +
                              format_number(order, 17));
    std::vector<Term> out;
    out.reserve(s.size());
    for (const auto& t : s.terms()) {
        const double q = t.exponent(axis);
        if (q <= -1.0)
            throw DomainError("fractional integral of a term with exponent " +
                              format_number(q, 17) + " <= -1 does not exist");
        Term i = t;
        i.coeff *= gamma_ratio(q + 1.0, q + 1.0 + order);
        (axis == Axis::X ? i.px : i.py) = q + order;
        out.push_back(i);
    }
    return Series(std::move(out));
}

double evaluate(const Series& s, double x, double y) {
    double sum = 0.0;
    for (const auto& t : s.terms()) sum += t.coeff * power(x, t.px) * power(y, t.py);
    return sum;
}

long double evaluate_extended(const Series& s, long double x, long double y) {
    long double sum = 0.0L;
    for (const auto& t : s.terms())
        sum += static_cast<long double>(t.coeff) * power(x, t.px) * power(y, t.py);
    return sum;
}

std::string to_string(const Series& s, int digits) {
    if (s.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : s.terms()) {
        const double mag = std::abs(t.coeff);
        if (first)
            out += t.coeff < 0.0 ? "-" : "";
        else
            out += t.coeff < 0.0 ? " - " : " + ";
        first = false;

        std::string body;
        auto append_var = [&](char name, double p) {
            if (p == 0.0) return;
            if (!body.empty()) body += '*';
            body += name;
            if (p != 1.0) body += "^" + format_number(p, digits);
        };
        append_var('x', t.px);
        append_var('y', t.py);

        if (body.empty())
            out += format_number(mag, digits);
        else if (mag == 1.0)
            out += body;
        else
            out += format_number(mag, digits) + "*" + body;
    }
    return out;
}

} // namespace fracadm
