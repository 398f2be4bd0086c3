#include "hardylt/potential_spec.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace hardylt {

namespace {

// ---- expression grammar -------------------------------------------------
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | primary ('^' factor)?
//   primary:= number | 'r' | name '(' expr (',' expr)? ')' | '(' expr ')'

using Fn = std::function<double(double)>;

class ExprParser {
public:
    ExprParser(const std::string& src, int line_no) : src_(src), line_(line_no) {}

    Fn parse() {
        Fn f = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    const std::string& src_;
    int line_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw PotentialSpecError(msg, line_, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Fn parse_expr() {
        Fn lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                Fn rhs = parse_term();
                lhs = [lhs, rhs](double r) { return lhs(r) + rhs(r); };
            } else if (accept('-')) {
                Fn rhs = parse_term();
                lhs = [lhs, rhs](double r) { return lhs(r) - rhs(r); };
            } else {
                return lhs;
            }
        }
    }

    Fn parse_term() {
        Fn lhs = parse_factor();
        for (;;) {
            if (accept('*')) {
                Fn rhs = parse_factor();
                lhs = [lhs, rhs](double r) { return lhs(r) * rhs(r); };
            } else if (accept('/')) {
                Fn rhs = parse_factor();
                lhs = [lhs, rhs](double r) { return lhs(r) / rhs(r); };
            } else {
                return lhs;
            }
        }
    }

    Fn parse_factor() {
        // negation binds looser than '^', so -x^2 means -(x^2)
        if (accept('-')) {
            Fn f = parse_factor();
            return [f](double r) { return -f(r); };
        }
        Fn base = parse_primary();
        if (accept('^')) {
            Fn exp = parse_factor(); // right associative
            return [base, exp](double r) { return std::pow(base(r), exp(r)); };
        }
        return base;
    }

    Fn parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of expression");
        const char c = src_[pos_];

        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* start = src_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(start, &end);
            if (end == start) fail("malformed number");
            pos_ += static_cast<size_t>(end - start);
            return [v](double) { return v; };
        }

        if (std::isalpha(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            const std::string name = src_.substr(start, pos_ - start);
            if (name == "r") return [](double r) { return r; };
            if (name == "exp" || name == "log") {
                expect('(');
                Fn arg = parse_expr();
                expect(')');
                if (name == "exp") return [arg](double r) { return std::exp(arg(r)); };
                return [arg](double r) { return std::log(arg(r)); };
            }
            if (name == "pow") {
                expect('(');
                Fn a = parse_expr();
                expect(',');
                Fn b = parse_expr();
                expect(')');
                return [a, b](double r) { return std::pow(a(r), b(r)); };
            }
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }

        if (accept('(')) {
            Fn f = parse_expr();
            expect(')');
            return f;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

// Auto-detect the effective support: the smallest interval outside which
// |V| <= 1e-12, found by a log scan plus edge bisection.
std::pair<double, double> detect_support(const Fn& f) {
    constexpr double kThresh = 1e-12;
    constexpr double kLo = 1e-8, kHi = 1e8;
    constexpr int kN = 20000;
    auto r_at = [&](int i) {
        return kLo * std::pow(kHi / kLo, static_cast<double>(i) / kN);
    };
    int first = -1, last = -1;
    for (int i = 0; i <= kN; ++i) {
        const double v = f(r_at(i));
        if (std::isfinite(v) && std::fabs(v) > kThresh) {
            if (first < 0) first = i;
            last = i;
        }
    }
    if (first < 0)
        throw std::runtime_error("expression potential is below 1e-12 everywhere on the scan grid");

    auto edge = [&](double inside, double outside) {
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (inside + outside);
            const double v = f(mid);
            if (std::isfinite(v) && std::fabs(v) > kThresh)
                inside = mid;
            else
                outside = mid;
        }
        return outside;
    };
    const double lo = first == 0 ? r_at(0) : edge(r_at(first), r_at(first - 1));
    const double hi = last == kN ? r_at(kN) : edge(r_at(last), r_at(last + 1));
    return {lo, hi};
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<Segment> parse_segments(const std::string& src, int line_no) {
    // [(lo,hi,value),(lo,hi,value),...]
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw PotentialSpecError(msg, line_no, static_cast<int>(pos) + 1);
    };
    auto skip_ws = [&] {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    };
    auto accept = [&](char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    };
    auto expect = [&](char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "' in segments");
    };
    auto number = [&]() -> double {
        skip_ws();
        const char* start = src.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(start, &end);
        if (end == start) fail("malformed number in segments");
        pos += static_cast<size_t>(end - start);
        return v;
    };

    std::vector<Segment> segs;
    expect('[');
    if (!accept(']')) {
        do {
            expect('(');
            Segment s{};
            s.lo = number();
            expect(',');
            s.hi = number();
            expect(',');
            s.value = number();
            expect(')');
            segs.push_back(s);
        } while (accept(','));
        expect(']');
    }
    skip_ws();
    if (pos != src.size()) fail("unexpected trailing input after segments");
    return segs;
}

Potential load_table(const std::string& path, int line_no) {
    std::ifstream in(path);
    if (!in) throw PotentialSpecError("cannot open table file '" + path + "'", line_no, 1);
    std::vector<double> rs, vs;
    std::string line;
    int file_line = 0;
    while (std::getline(in, line)) {
        ++file_line;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::string cell = t;
        for (char& c : cell)
            if (c == ',') c = ' ';
        std::istringstream row(cell);
        double r, v;
        if (!(row >> r >> v)) {
            if (file_line == 1) continue; // header row
            throw std::runtime_error("table file '" + path + "' line " +
                                     std::to_string(file_line) + ": expected two columns r,V");
        }
        rs.push_back(r);
        vs.push_back(v);
    }
    return Potential::table(std::move(rs), std::move(vs));
}

} // namespace

Potential parse_expression_potential(const std::string& expr, int line_no) {
    Fn f = ExprParser(expr, line_no).parse();
    auto [lo, hi] = detect_support(f);
    return Potential::expression(f, lo, hi, trim(expr));
}

Potential parse_potential_spec(const std::string& text, const std::string& base_dir) {
    std::map<std::string, std::pair<std::string, int>> kv; // key -> (value, line)
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw PotentialSpecError("expected 'key = value'", line_no, 1);
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key.empty()) throw PotentialSpecError("empty key", line_no, 1);
        if (kv.count(key))
            throw PotentialSpecError("duplicate key '" + key + "'", line_no, 1);
        kv[key] = {val, line_no};
    }

    auto it = kv.find("type");
    if (it == kv.end()) throw PotentialSpecError("missing 'type' key", 1, 1);
    const std::string type = it->second.first;

    auto require = [&](const char* key) -> std::pair<std::string, int> {
        auto jt = kv.find(key);
        if (jt == kv.end())
            throw PotentialSpecError(std::string("type ") + type + " requires key '" + key + "'",
                                     it->second.second, 1);
        return jt->second;
    };

    if (type == "piecewise") {
        auto [src, ln] = require("segments");
        return Potential::piecewise(parse_segments(src, ln));
    }
    if (type == "table") {
        auto [path, ln] = require("file");
        const bool absolute = !path.empty() && path[0] == '/';
        return load_table(absolute ? path : base_dir + "/" + path, ln);
    }
    if (type == "expression") {
        auto [src, ln] = require("expr");
        return parse_expression_potential(src, ln);
    }
    throw PotentialSpecError("unknown type '" + type + "'", it->second.second, 1);
}

} // namespace hardylt
