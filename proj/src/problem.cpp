#include "problem.hpp"

#include "error.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace kgfrac {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    std::vector<ElementaryTerm> parse() {
        std::vector<ElementaryTerm> terms;
        skip_ws();
        if (pos_ == s_.size()) error("empty expression");
        bool first = true;
        while (pos_ < s_.size()) {
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1.0 : 1.0;
                skip_ws();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            ElementaryTerm term = parse_term();
            term.coeff *= sign;
            terms.push_back(term);
            first = false;
            skip_ws();
        }
        return terms;
    }

private:
    ElementaryTerm parse_term() {
        ElementaryTerm term;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            term.coeff = parse_number();
            skip_ws();
            if (peek() != '*') {
                term.fn = Basis::one;
                return term;
            }
            get();
            skip_ws();
        }
        term.fn = parse_function();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            const double p = parse_number();
            if (p < 0 || std::nearbyint(p) != p) error("exponent must be a nonnegative integer");
            term.power = static_cast<int>(p);
        }
        return term;
    }

    Basis parse_function() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        if (name.empty()) error("expected a number or function");
        if (name == "x") return Basis::x;
        Basis fn;
        if (name == "sin") fn = Basis::sin;
        else if (name == "cos") fn = Basis::cos;
        else if (name == "exp") fn = Basis::exp;
        else if (name == "sech") fn = Basis::sech;
        else error("unknown function '" + std::string(name) + "'");
        skip_ws();
        expect('(');
        skip_ws();
        expect('x');
        skip_ws();
        expect(')');
        return fn;
    }

    double parse_number() {
        char* end = nullptr;
        const std::string copy(s_.substr(pos_));
        const double v = std::strtod(copy.c_str(), &end);
        const std::size_t used = static_cast<std::size_t>(end - copy.c_str());
        if (used == 0) error("expected a number");
        pos_ += used;
        return v;
    }

    void expect(char c) {
        if (peek() != c) error(std::string("expected '") + c + "'");
        ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::config, "column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Jet basis_jet(Basis fn, double x0, int order) {
    switch (fn) {
        case Basis::one: return Jet::constant(1.0, x0, order);
        case Basis::x: return jet_elem(Elementary::identity, x0, order);
        case Basis::sin: return jet_elem(Elementary::sin, x0, order);
        case Basis::cos: return jet_elem(Elementary::cos, x0, order);
        case Basis::exp: return jet_elem(Elementary::exp, x0, order);
        case Basis::sech: return jet_elem(Elementary::sech, x0, order);
    }
    fail(ErrorKind::domain, "unknown basis function");
}

double basis_value(Basis fn, double x) {
    switch (fn) {
        case Basis::one: return 1.0;
        case Basis::x: return x;
        case Basis::sin: return std::sin(x);
        case Basis::cos: return std::cos(x);
        case Basis::exp: return std::exp(x);
        case Basis::sech: return 1.0 / std::cosh(x);
    }
    return 0.0;
}

const char* basis_text(Basis fn) {
    switch (fn) {
        case Basis::one: return "1";
        case Basis::x: return "x";
        case Basis::sin: return "sin(x)";
        case Basis::cos: return "cos(x)";
        case Basis::exp: return "exp(x)";
        case Basis::sech: return "sech(x)";
    }
    return "?";
}

}  // namespace

InitialData InitialData::parse(std::string_view text) { return InitialData(ExprParser(text).parse()); }

Jet InitialData::jet(double x0, int order) const {
    Jet acc = Jet::zero(x0, order);
    for (const ElementaryTerm& t : terms_) acc += jet_pow(basis_jet(t.fn, x0, order), t.power) * t.coeff;
    return acc;
}

double InitialData::eval(double x) const {
    double acc = 0.0;
    for (const ElementaryTerm& t : terms_) acc += t.coeff * std::pow(basis_value(t.fn, x), t.power);
    return acc;
}

bool InitialData::is_zero() const noexcept {
    for (const ElementaryTerm& t : terms_)
        if (t.coeff != 0.0) return false;
    return true;
}

std::string InitialData::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const ElementaryTerm& t = terms_[i];
        const double mag = std::abs(t.coeff);
        if (i == 0)
            out += t.coeff < 0 ? "-" : "";
        else
            out += t.coeff < 0 ? " - " : " + ";
        std::snprintf(buf, sizeof buf, "%.17g", mag);
        if (t.fn == Basis::one) {
            out += buf;
            continue;
        }
        if (mag != 1.0) {
            out += buf;
            out += "*";
        }
        out += basis_text(t.fn);
        if (t.power != 1) out += "^" + std::to_string(t.power);
    }
    return out;
}

std::vector<double> Nonlinearity::coefficients() const {
    switch (kind) {
        case NonlinearityKind::none: return {};
        case NonlinearityKind::square: return {0.0, 1.0};
        case NonlinearityKind::cube: return {0.0, 0.0, 1.0};
        case NonlinearityKind::poly: return poly;
    }
    return {};
}

double Nonlinearity::eval(double u) const {
    double acc = 0.0;
    double up = u;
    for (double c : coefficients()) {
        acc += c * up;
        up *= u;
    }
    return acc;
}

double Nonlinearity::derivative(double u) const {
    double acc = 0.0;
    double up = 1.0;
    int p = 1;
    for (double c : coefficients()) {
        acc += p * c * up;
        up *= u;
        ++p;
    }
    return acc;
}

void ProblemSpec::validate() const {
    if (g.kind == NonlinearityKind::poly && g.poly.empty())
        fail(ErrorKind::config, "polynomial nonlinearity needs at least one coefficient");
    for (const SourceTerm& s : source)
        if (s.x_power < 0 || s.t_index < 0) fail(ErrorKind::config, "source exponents must be nonnegative");
    if (order.ic_count() == 1 && !g1.is_zero())
        fail(ErrorKind::config, "g1 is only meaningful for orders 1 < mu <= 2");
}

double ProblemSpec::source_value(double x, double t) const {
    double acc = 0.0;
    for (const SourceTerm& s : source) {
        const double tp = s.t_index == 0 ? 1.0 : std::pow(t, s.t_index * order.beta());
        acc += s.coeff * std::pow(x, s.x_power) * tp;
    }
    return acc;
}

std::optional<BuiltinId> builtin_from_name(std::string_view name) {
    if (name == "ex41") return BuiltinId::ex41;
    if (name == "ex42") return BuiltinId::ex42;
    if (name == "ex43") return BuiltinId::ex43;
    if (name == "ex44") return BuiltinId::ex44;
    return std::nullopt;
}

std::string_view builtin_name(BuiltinId id) {
    switch (id) {
        case BuiltinId::ex41: return "ex41";
        case BuiltinId::ex42: return "ex42";
        case BuiltinId::ex43: return "ex43";
        case BuiltinId::ex44: return "ex44";
    }
    return "?";
}

bool builtin_alpha_admissible(BuiltinId id, double alpha) {
    if (id == BuiltinId::ex44) return alpha > 1.0 && alpha <= 2.0;
    return alpha > 0.0 && alpha <= 1.0;
}

ProblemSpec builtin_problem(BuiltinId id, double alpha) {
    if (!builtin_alpha_admissible(id, alpha))
        fail(ErrorKind::config, "alpha = " + std::to_string(alpha) + " is outside the admissible range of " +
                                    std::string(builtin_name(id)));
    const InitialData one_plus_sin({{1.0, Basis::one, 1}, {1.0, Basis::sin, 1}});
    ProblemSpec p;
    p.order = FracOrder::from_mu(alpha);
    switch (id) {
        case BuiltinId::ex41:
            p.a = 1.0;
            p.b = 0.0;
            p.g0 = one_plus_sin;
            break;
        case BuiltinId::ex42:
        case BuiltinId::ex44:
            p.a = 0.0;
            p.b = -1.0;
            p.g.kind = NonlinearityKind::square;
            p.g0 = one_plus_sin;
            break;
        case BuiltinId::ex43:
            p.a = -1.0;
            p.b = 1.0;
            p.g.kind = NonlinearityKind::cube;
            p.g0 = InitialData({{-1.0, Basis::sech, 1}});
            break;
    }
    return p;
}

}  // namespace kgfrac
