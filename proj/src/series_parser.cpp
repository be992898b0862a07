#include "fracadm/series_parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>

#include "fracadm/errors.hpp"

namespace fracadm {
namespace {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    Series parse() {
        std::vector<Term> terms;
        skip_space();
        double sign = 1.0;
        if (peek() == '-' || peek() == '+') {
            sign = take() == '-' ? -1.0 : 1.0;
            skip_space();
        }
        for (;;) {
            Term t = parse_term();
            t.coeff *= sign;
            terms.push_back(t);
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("'+', '-' or end of input");
            sign = c == '-' ? -1.0 : 1.0;
            ++pos_;
            skip_space();
        }
        return Series(std::move(terms));
    }

private:
    Term parse_term() {
        Term t{1.0, 0.0, 0.0};
        bool any = false;
        if (auto n = try_number()) {
            t.coeff = *n;
            any = true;
        }
        for (;;) {
            skip_space();
            if (peek() == '*') {
                if (!any) fail("number or variable");
                ++pos_;
                skip_space();
                if (peek() != 'x' && peek() != 'y') fail("variable 'x' or 'y'");
            }
            if (peek() != 'x' && peek() != 'y') break;
            const char var = take();
            any = true;
            double power = 1.0;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                skip_space();
                if (peek() == '-') fail("non-negative exponent");
                auto n = try_number();
                if (!n) fail("exponent");
                power = *n;
            }
            (var == 'x' ? t.px : t.py) += power;
        }
        if (!any) fail("number or variable");
        return t;
    }

    std::optional<double> try_number() {
        const char c = peek();
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.')) return std::nullopt;
        double value = 0.0;
        const char* begin = text_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
        if (ec != std::errc{}) fail("number");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view s, std::size_t offset) {
    std::size_t at = offset;
    s = trim(s, at);
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) throw ParseError(at, "real number");
    return v;
}

std::vector<double> parse_axis(std::string_view spec, std::size_t offset) {
    std::vector<double> points;
    if (spec.find(':') != std::string_view::npos) {
        std::vector<std::pair<std::string_view, std::size_t>> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= spec.size(); ++i) {
            if (i == spec.size() || spec[i] == ':') {
                parts.emplace_back(spec.substr(start, i - start), offset + start);
                start = i + 1;
            }
        }
        if (parts.size() != 3) throw ParseError(offset, "range 'start:stop:step'");
        const double a = parse_real(parts[0].first, parts[0].second);
        const double b = parse_real(parts[1].first, parts[1].second);
        const double step = parse_real(parts[2].first, parts[2].second);
        if (!(step > 0.0)) throw ParseError(parts[2].second, "positive step");
        if (b < a) throw ParseError(parts[1].second, "stop >= start");
        const double slack = 1e-9 * step;
        for (long k = 0;; ++k) {
            const double v = a + static_cast<double>(k) * step;
            if (v > b + slack) break;
            points.push_back(std::min(v, b));
        }
        return points;
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == ',') {
            points.push_back(parse_real(spec.substr(start, i - start), offset + start));
            start = i + 1;
        }
    }
    return points;
}

} // namespace

Series parse_series(std::string_view text) { return SeriesParser(text).parse(); }

GridSpec parse_grid(std::string_view text) {
    GridSpec grid;
    bool have_x = false;
    bool have_y = false;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != ';') continue;
        std::size_t offset = start;
        const std::string_view part = trim(text.substr(start, i - start), offset);
        start = i + 1;
        if (part.empty()) continue;
        const std::size_t eq = part.find('=');
        if (eq == std::string_view::npos) throw ParseError(offset, "'x=' or 'y='");
        std::size_t name_offset = offset;
        const std::string_view name = trim(part.substr(0, eq), name_offset);
        const std::string_view spec = part.substr(eq + 1);
        if (name == "x") {
            if (have_x) throw ParseError(name_offset, "a single x specification");
            grid.x_points = parse_axis(spec, offset + eq + 1);
            have_x = true;
        } else if (name == "y") {
            if (have_y) throw ParseError(name_offset, "a single y specification");
            grid.y_points = parse_axis(spec, offset + eq + 1);
            for (double y : grid.y_points)
                if (y < 0.0) throw ParseError(offset + eq + 1, "non-negative y values");
            have_y = true;
        } else {
            throw ParseError(name_offset, "axis name 'x' or 'y'");
        }
    }
    if (!have_x) throw ParseError(text.size(), "x specification");
    if (!have_y) throw ParseError(text.size(), "y specification");
    return grid;
}

} // namespace fracadm
