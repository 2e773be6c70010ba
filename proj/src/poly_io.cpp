#include "unischubert/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "unischubert/errors.hpp"

namespace unischubert {

std::string variable_text(const Variable& v)
{
    std::ostringstream os;
    os << kind_letter(v.kind) << v.i;
    switch (v.kind) {
    case Kind::C:
    case Kind::D: os << '(' << v.j << ')'; break;
    case Kind::G:
    case Kind::H: os << '[' << v.j << ']'; break;
    case Kind::Q:
        if (v.degree != 2) os << '{' << v.degree << '}';
        break;
    default: break;
    }
    return os.str();
}

std::string variable_latex(const Variable& v)
{
    std::ostringstream os;
    os << kind_letter(v.kind) << "_{" << v.i << '}';
    if (v.kind == Kind::C || v.kind == Kind::D) os << '(' << v.j << ')';
    if (v.kind == Kind::G || v.kind == Kind::H) os << '[' << v.j << ']';
    return os.str();
}

namespace {

template <class Spell>
std::string render(const Polynomial& p, Spell spell, std::string_view times, bool latex)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        Integer mag = negative ? Integer(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (mag != 1 || m.is_one()) {
            os << mag;
            wrote = true;
        }
        for (const auto& [v, e] : m.factors()) {
            if (wrote) os << times;
            os << spell(v);
            if (e != 1) {
                if (latex)
                    os << "^{" << e << '}';
                else
                    os << '^' << e;
            }
            wrote = true;
        }
    }
    return os.str();
}

} // namespace

std::string to_text(const Polynomial& p, const VariableNamer& namer)
{
    return render(
        p,
        [&](const Variable& v) {
            if (namer) {
                auto s = namer(v);
                if (!s.empty()) return s;
            }
            return variable_text(v);
        },
        "*", false);
}

std::string to_latex(const Polynomial& p, const VariableNamer& namer)
{
    return render(
        p,
        [&](const Variable& v) {
            if (namer) {
                auto s = namer(v);
                if (!s.empty()) return s;
            }
            return variable_latex(v);
        },
        "", true);
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Polynomial parse()
    {
        auto p = expression();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const
    {
        throw DomainError("cannot parse polynomial '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + why);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    int small_int() { return std::stoi(digits()); }

    Polynomial expression()
    {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    bool starts_factor()
    {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::string_view("cdghxyq").find(c) != std::string_view::npos;
    }

    Polynomial term()
    {
        bool negate = false;
        while (peek() == '+' || peek() == '-')
            if (s_[pos_++] == '-') negate = !negate;
        Polynomial acc = power();
        for (;;) {
            if (accept('*'))
                acc = acc * power();
            else if (starts_factor())
                acc = acc * power();
            else
                break;
        }
        return negate ? -acc : acc;
    }

    Polynomial power()
    {
        Polynomial base = atom();
        if (accept('^')) return base.pow(small_int());
        return base;
    }

    Polynomial atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto p = expression();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(Integer(digits()));
        ++pos_;
        const int i = small_int();
        switch (c) {
        case 'c':
        case 'd': {
            expect('(');
            const int j = small_int();
            expect(')');
            return Polynomial(c == 'c' ? Variable::c(i, j) : Variable::d(i, j));
        }
        case 'g':
        case 'h': {
            expect('[');
            const int j = small_int();
            expect(']');
            return Polynomial(c == 'g' ? Variable::g(i, j) : Variable::h(i, j));
        }
        case 'x': return Polynomial::x(i);
        case 'y': return Polynomial::y(i);
        case 'q': {
            int degree = 2;
            if (accept('{')) {
                degree = small_int();
                expect('}');
            }
            return Polynomial::q(i, degree);
        }
        default: fail("unknown token");
        }
    }
};

Kind kind_from_letter(const std::string& s)
{
    static const std::string letters = "cdghxyq";
    if (s.size() != 1 || letters.find(s[0]) == std::string::npos) throw DomainError("unknown variable kind '" + s + "'");
    return static_cast<Kind>(letters.find(s[0]));
}

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    return Parser(text).parse();
}

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, e] : it->first.factors()) {
            nlohmann::json jv = {{"kind", std::string(1, kind_letter(v.kind))}, {"i", v.i}};
            if (v.has_second_index()) jv["j"] = v.j;
            if (v.kind == Kind::Q && v.degree != 2) jv["deg"] = v.degree;
            jv["exp"] = e;
            vars.push_back(std::move(jv));
        }
        terms.push_back({{"coeff", it->second.str()}, {"vars", std::move(vars)}});
    }
    return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
    Polynomial out;
    try {
        for (const auto& term : j.at("terms")) {
            std::vector<Monomial::Factor> factors;
            for (const auto& jv : term.at("vars")) {
                const Kind k = kind_from_letter(jv.at("kind").get<std::string>());
                const int i = jv.at("i").get<int>();
                const int second = jv.value("j", 0);
                Variable v;
                switch (k) {
                case Kind::C: v = Variable::c(i, second); break;
                case Kind::D: v = Variable::d(i, second); break;
                case Kind::G: v = Variable::g(i, second); break;
                case Kind::H: v = Variable::h(i, second); break;
                case Kind::X: v = Variable::x(i); break;
                case Kind::Y: v = Variable::y(i); break;
                case Kind::Q: v = Variable::q(i, jv.value("deg", 2)); break;
                }
                factors.emplace_back(v, jv.at("exp").get<int>());
            }
            out.add_term(Monomial(std::move(factors)), Integer(term.at("coeff").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
    }
    return out;
}

} // namespace unischubert
