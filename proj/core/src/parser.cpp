#include "jetcm/parser.hpp"

#include "jetcm/error.hpp"

#include <algorithm>
#include <cctype>

namespace jetcm {

namespace {

struct Token {
    enum class Type {
        Ident, Integer, Plus, Minus, Star, Slash, Caret,
        LParen, RParen, LBracket, RBracket, Comma, End
    };
    Type type;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& text, int line, int col) {
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](Token::Type t, std::string s) {
        out.push_back({t, std::move(s), line, col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int start_col = col;
            std::string s;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                s += text[i++];
                ++col;
            }
            while (i < text.size() && text[i] == '\'') {
                s += text[i++];
                ++col;
            }
            out.push_back({Token::Type::Ident, std::move(s), line, start_col});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int start_col = col;
            std::string s;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i++];
                ++col;
            }
            out.push_back({Token::Type::Integer, std::move(s), line, start_col});
            continue;
        }
        Token::Type t;
        switch (c) {
        case '+': t = Token::Type::Plus; break;
        case '-': t = Token::Type::Minus; break;
        case '*': t = Token::Type::Star; break;
        case '/': t = Token::Type::Slash; break;
        case '^': t = Token::Type::Caret; break;
        case '(': t = Token::Type::LParen; break;
        case ')': t = Token::Type::RParen; break;
        case '[': t = Token::Type::LBracket; break;
        case ']': t = Token::Type::RBracket; break;
        case ',': t = Token::Type::Comma; break;
        default:
            throw Error(ErrorKind::SyntaxError,
                        std::string("unexpected character '") + c + "'", line, col);
        }
        push(t, std::string(1, c));
        ++col;
        ++i;
    }
    out.push_back({Token::Type::End, "", line, col});
    return out;
}

std::pair<std::string, int> strip_primes(const std::string& name) {
    size_t end = name.size();
    while (end > 0 && name[end - 1] == '\'') --end;
    return {name.substr(0, end), static_cast<int>(name.size() - end)};
}

class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, const JetContext& ctx, NameResolution resolution)
        : toks_(std::move(tokens)), ctx_(ctx), resolution_(resolution) {}

    Expr parse_full() {
        Expr e = parse_expr();
        expect(Token::Type::End, "end of expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool match(Token::Type t) {
        if (peek().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }
    const Token& expect(Token::Type t, const std::string& what) {
        if (peek().type != t)
            throw Error(ErrorKind::SyntaxError,
                        "expected " + what + " but found '" + describe(peek()) + "'",
                        peek().line, peek().col);
        return advance();
    }
    static std::string describe(const Token& t) {
        return t.type == Token::Type::End ? "end of input" : t.text;
    }

    Expr parse_expr() {
        Expr e = parse_term();
        for (;;) {
            if (match(Token::Type::Plus)) e = e + parse_term();
            else if (match(Token::Type::Minus)) e = e - parse_term();
            else return e;
        }
    }

    Expr parse_term() {
        Expr e = parse_factor();
        for (;;) {
            if (match(Token::Type::Star)) e = e * parse_factor();
            else if (match(Token::Type::Slash)) e = e / parse_factor();
            else return e;
        }
    }

    Expr parse_factor() {
        if (match(Token::Type::Minus)) return -parse_power();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_base();
        if (match(Token::Type::Caret)) return Expr::pow(base, parse_exponent());
        return base;
    }

    Rational parse_exponent() {
        if (peek().type == Token::Type::Integer)
            return Rational(BigInt(advance().text), BigInt(1));
        const Token& open = expect(Token::Type::LParen, "an integer or parenthesized exponent");
        (void)open;
        bool neg = match(Token::Type::Minus);
        const Token& num = expect(Token::Type::Integer, "an integer");
        BigInt n(num.text);
        BigInt d(1);
        if (match(Token::Type::Slash)) {
            const Token& den = expect(Token::Type::Integer, "an integer denominator");
            d = BigInt(den.text);
            if (d == 0)
                throw Error(ErrorKind::SyntaxError, "zero denominator in exponent",
                            den.line, den.col);
        } else if (!neg) {
            throw Error(ErrorKind::SyntaxError,
                        "parenthesized exponents are fractions or negated integers",
                        peek().line, peek().col);
        }
        expect(Token::Type::RParen, "')'");
        if (neg) n = -n;
        return Rational(std::move(n), std::move(d));
    }

    Atom resolve_plain(const Token& tok) {
        const std::string& name = tok.text;
        if (auto i = ctx_.find_independent(name)) return Atom::independent(*i);
        if (auto j = ctx_.find_dependent(name))
            return Atom::dependent(*j, MultiIndex::zeros(ctx_.n()));
        if (ctx_.has_parameter(name)) return Atom::parameter(name);
        if (ctx_.function_argument(strip_primes(name).first))
            throw Error(ErrorKind::ArityError,
                        "function '" + strip_primes(name).first + "' used without its argument",
                        tok.line, tok.col);
        if (resolution_ == NameResolution::PrimeInsensitive) {
            auto [base, primes] = strip_primes(name);
            (void)primes;
            std::optional<Atom> found;
            for (int i = 0; i < ctx_.n(); ++i)
                if (strip_primes(ctx_.independents()[static_cast<size_t>(i)]).first == base)
                    found = Atom::independent(i);
            for (int j = 0; j < ctx_.m(); ++j)
                if (strip_primes(ctx_.dependents()[static_cast<size_t>(j)]).first == base) {
                    if (found)
                        throw Error(ErrorKind::UnknownSymbol, "ambiguous name: " + name,
                                    tok.line, tok.col);
                    found = Atom::dependent(j, MultiIndex::zeros(ctx_.n()));
                }
            if (found) return *found;
        }
        throw Error(ErrorKind::UnknownSymbol, "undeclared symbol: " + name, tok.line, tok.col);
    }

    int resolve_independent(const Token& tok) {
        if (auto i = ctx_.find_independent(tok.text)) return *i;
        if (resolution_ == NameResolution::PrimeInsensitive) {
            auto base = strip_primes(tok.text).first;
            std::optional<int> found;
            for (int i = 0; i < ctx_.n(); ++i)
                if (strip_primes(ctx_.independents()[static_cast<size_t>(i)]).first == base) {
                    if (found)
                        throw Error(ErrorKind::UnknownSymbol, "ambiguous name: " + tok.text,
                                    tok.line, tok.col);
                    found = i;
                }
            if (found) return *found;
        }
        throw Error(ErrorKind::ArityError,
                    "jet brackets index independent variables; '" + tok.text + "' is not one",
                    tok.line, tok.col);
    }

    Expr parse_jet(const Token& base_tok) {
        int j = -1;
        if (auto dj = ctx_.find_dependent(base_tok.text)) {
            j = *dj;
        } else if (resolution_ == NameResolution::PrimeInsensitive) {
            auto base = strip_primes(base_tok.text).first;
            for (int cand = 0; cand < ctx_.m(); ++cand)
                if (strip_primes(ctx_.dependents()[static_cast<size_t>(cand)]).first == base) {
                    if (j >= 0)
                        throw Error(ErrorKind::UnknownSymbol, "ambiguous name: " + base_tok.text,
                                    base_tok.line, base_tok.col);
                    j = cand;
                }
        }
        if (j < 0)
            throw Error(ErrorKind::ArityError,
                        "jet brackets apply to dependent variables; '" + base_tok.text +
                            "' is not one",
                        base_tok.line, base_tok.col);
        std::vector<int> alpha(static_cast<size_t>(ctx_.n()), 0);
        do {
            const Token& name = expect(Token::Type::Ident, "an independent variable");
            alpha[static_cast<size_t>(resolve_independent(name))] += 1;
        } while (match(Token::Type::Comma));
        expect(Token::Type::RBracket, "']'");
        return Expr::atom(Atom::dependent(j, MultiIndex(std::move(alpha))));
    }

    Expr parse_func(const Token& name_tok) {
        auto [base, primes] = strip_primes(name_tok.text);
        auto arg_index = ctx_.function_argument(base);
        if (!arg_index)
            throw Error(ErrorKind::UnknownSymbol, "undeclared function: " + base,
                        name_tok.line, name_tok.col);
        const Token& arg = expect(Token::Type::Ident, "the function argument");
        auto ai = ctx_.find_independent(arg.text);
        if (!ai || *ai != *arg_index)
            throw Error(ErrorKind::ArityError,
                        "function '" + base + "' takes argument '" +
                            ctx_.independents()[static_cast<size_t>(*arg_index)] + "'",
                        arg.line, arg.col);
        expect(Token::Type::RParen, "')'");
        return Expr::atom(Atom::func_deriv(base, *arg_index, primes));
    }

    Expr parse_diff() {
        expect(Token::Type::LParen, "'('");
        const Token& fname = expect(Token::Type::Ident, "a function name");
        auto arg_index = ctx_.function_argument(fname.text);
        if (!arg_index)
            throw Error(ErrorKind::UnknownSymbol, "undeclared function: " + fname.text,
                        fname.line, fname.col);
        expect(Token::Type::Comma, "','");
        const Token& arg = expect(Token::Type::Ident, "the function argument");
        auto ai = ctx_.find_independent(arg.text);
        if (!ai || *ai != *arg_index)
            throw Error(ErrorKind::ArityError,
                        "function '" + fname.text + "' takes argument '" +
                            ctx_.independents()[static_cast<size_t>(*arg_index)] + "'",
                        arg.line, arg.col);
        expect(Token::Type::Comma, "','");
        const Token& ord = expect(Token::Type::Integer, "a derivative order");
        expect(Token::Type::RParen, "')'");
        return Expr::atom(Atom::func_deriv(fname.text, *arg_index,
                                           static_cast<int>(std::stoll(ord.text))));
    }

    Expr parse_base() {
        const Token& tok = peek();
        switch (tok.type) {
        case Token::Type::Integer:
            advance();
            return Expr::constant(Rational(BigInt(tok.text), BigInt(1)));
        case Token::Type::LParen: {
            advance();
            Expr e = parse_expr();
            expect(Token::Type::RParen, "')'");
            return e;
        }
        case Token::Type::Ident: {
            advance();
            if (tok.text == "log") {
                expect(Token::Type::LParen, "'('");
                Expr arg = parse_expr();
                expect(Token::Type::RParen, "')'");
                return Expr::log(std::move(arg));
            }
            if (tok.text == "diff") return parse_diff();
            if (match(Token::Type::LBracket)) return parse_jet(tok);
            if (match(Token::Type::LParen)) return parse_func(tok);
            return Expr::atom(resolve_plain(tok));
        }
        default:
            throw Error(ErrorKind::SyntaxError,
                        "expected an expression but found '" + describe(tok) + "'",
                        tok.line, tok.col);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    const JetContext& ctx_;
    NameResolution resolution_;
};

Expr parse_expr_at(const std::string& text, const JetContext& ctx, NameResolution resolution,
                   int line, int col) {
    return ExprParser(lex(text, line, col), ctx, resolution).parse_full();
}

} // namespace

Expr parse_expr(const std::string& text, const JetContext& ctx, NameResolution resolution,
                int line) {
    return parse_expr_at(text, ctx, resolution, line, 1);
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Splits "lhs = rhs"; returns the column (0-based) of '='.
size_t find_equals(const Line& ln) {
    size_t eq = ln.text.find('=');
    if (eq == std::string::npos || ln.text.find('=', eq + 1) != std::string::npos)
        throw Error(ErrorKind::SyntaxError, "expected a single '='", ln.number,
                    static_cast<int>(eq == std::string::npos ? 1 : eq + 2));
    return eq;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    size_t i = 1;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    while (i < s.size() && s[i] == '\'') ++i;
    return i == s.size();
}

} // namespace

std::optional<int> Problem::option_int(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end()) return std::nullopt;
    try {
        size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::UnknownOption, "option '" + key + "' must be an integer");
    }
}

Ranking Problem::ranking() const {
    auto it = options.find("ranking");
    if (it == options.end()) return Ranking::default_for(context);
    return Ranking::parse(it->second, context);
}

Problem parse_problem(const std::string& text) {
    // pass 1: cut into sections
    static const std::vector<std::string> kKnown = {
        "variables", "functions", "system source", "system target",
        "mapping",   "param-mapping", "options"};
    std::map<std::string, std::vector<Line>> sections;
    std::map<std::string, int> section_line;
    std::string current;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string raw = nl == std::string::npos ? text.substr(pos)
                                                  : text.substr(pos, nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::string ln = trim(raw);
        if (ln.empty()) continue;
        if (ln.front() == '[') {
            if (ln.back() != ']')
                throw Error(ErrorKind::SyntaxError, "unterminated section header", line_no, 1);
            std::string name = trim(ln.substr(1, ln.size() - 2));
            if (std::find(kKnown.begin(), kKnown.end(), name) == kKnown.end())
                throw Error(ErrorKind::SyntaxError, "unknown section [" + name + "]", line_no, 1);
            if (sections.count(name))
                throw Error(ErrorKind::DuplicateSection, "[" + name + "]", line_no, 1);
            sections[name];
            section_line[name] = line_no;
            current = name;
            continue;
        }
        if (current.empty())
            throw Error(ErrorKind::SyntaxError, "content before the first section", line_no, 1);
        sections[current].push_back({line_no, ln});
    }

    if (!sections.count("variables"))
        throw Error(ErrorKind::MissingSection, "variables");
    if (sections.count("mapping") && sections.count("param-mapping"))
        throw Error(ErrorKind::DuplicateMapping,
                    "a problem declares [mapping] or [param-mapping], not both");

    Problem problem;

    // [variables]
    std::vector<std::string> independents, dependents, parameters;
    for (const auto& ln : sections["variables"]) {
        size_t colon = ln.text.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::SyntaxError, "expected 'kind: names'", ln.number, 1);
        std::string kind = trim(ln.text.substr(0, colon));
        std::vector<std::string> names = split_names(ln.text.substr(colon + 1));
        for (const auto& n : names)
            if (!is_identifier(n))
                throw Error(ErrorKind::SyntaxError, "invalid name '" + n + "'", ln.number, 1);
        if (kind == "independent") independents = names;
        else if (kind == "dependent") dependents = names;
        else if (kind == "parameters") parameters = names;
        else
            throw Error(ErrorKind::SyntaxError, "unknown variable kind '" + kind + "'",
                        ln.number, 1);
    }
    if (independents.empty())
        throw Error(ErrorKind::MissingSection, "variables: no independent variables declared");
    if (dependents.empty())
        throw Error(ErrorKind::MissingSection, "variables: no dependent variables declared");
    JetContext ctx(independents, dependents, parameters);

    // [functions]
    if (sections.count("functions")) {
        for (const auto& ln : sections["functions"]) {
            auto toks = lex(ln.text, ln.number, 1);
            if (toks.size() != 5 || toks[0].type != Token::Type::Ident ||
                toks[1].type != Token::Type::LParen || toks[2].type != Token::Type::Ident ||
                toks[3].type != Token::Type::RParen)
                throw Error(ErrorKind::SyntaxError, "expected 'name(argument)'", ln.number, 1);
            auto arg = ctx.find_independent(toks[2].text);
            if (!arg)
                throw Error(ErrorKind::ArityError,
                            "'" + toks[2].text + "' is not an independent variable",
                            toks[2].line, toks[2].col);
            ctx.add_function(toks[0].text, *arg);
            problem.ansatz_functions.push_back(toks[0].text);
        }
    }
    problem.context = ctx;

    // [options]
    if (sections.count("options")) {
        for (const auto& ln : sections["options"]) {
            size_t eq = find_equals(ln);
            std::string key = trim(ln.text.substr(0, eq));
            std::string value = trim(ln.text.substr(eq + 1));
            if (key != "order" && key != "trunc" && key != "ranking")
                throw Error(ErrorKind::UnknownOption, key, ln.number, 1);
            problem.options[key] = value;
        }
    }

    auto parse_equations = [&](const std::string& section, const JetContext& c,
                               NameResolution res) {
        std::vector<Equation> out;
        for (const auto& ln : sections[section]) {
            size_t eq = find_equals(ln);
            Expr lhs = parse_expr_at(ln.text.substr(0, eq), c, res, ln.number, 1);
            Expr rhs = parse_expr_at(ln.text.substr(eq + 1), c, res, ln.number,
                                     static_cast<int>(eq) + 2);
            out.push_back({std::move(lhs), std::move(rhs)});
        }
        return out;
    };

    // [mapping]
    if (sections.count("mapping")) {
        const auto& lines = sections["mapping"];
        const int n = problem.context.n();
        const int m = problem.context.m();
        if (static_cast<int>(lines.size()) != n + m)
            throw Error(ErrorKind::SyntaxError,
                        "[mapping] needs one line per target independent then one per target "
                        "dependent (" + std::to_string(n + m) + " lines)",
                        section_line["mapping"], 1);
        std::vector<std::string> target_names;
        std::vector<Expr> components;
        for (const auto& ln : lines) {
            size_t eq = find_equals(ln);
            std::string name = trim(ln.text.substr(0, eq));
            if (!is_identifier(name) || strip_primes(name).second == 0)
                throw Error(ErrorKind::SyntaxError,
                            "mapping lines declare primed target coordinates ('" + name + "')",
                            ln.number, 1);
            target_names.push_back(name);
            components.push_back(parse_expr_at(ln.text.substr(eq + 1), problem.context,
                                               NameResolution::Exact, ln.number,
                                               static_cast<int>(eq) + 2));
        }
        std::vector<std::string> t_ind(target_names.begin(), target_names.begin() + n);
        std::vector<std::string> t_dep(target_names.begin() + n, target_names.end());
        JetContext target(t_ind, t_dep, problem.context.parameters(),
                          problem.context.functions());
        Mapping mapping;
        mapping.source = problem.context;
        mapping.target = target;
        mapping.f.assign(components.begin(), components.begin() + n);
        mapping.g.assign(components.begin() + n, components.end());
        problem.mapping = std::move(mapping);
        problem.target_context = std::move(target);
    }

    // [param-mapping]
    if (sections.count("param-mapping")) {
        const auto& lines = sections["param-mapping"];
        ParamMappingSpec spec;
        std::map<std::string, Expr> entries;
        for (const auto& ln : lines) {
            size_t eq = find_equals(ln);
            std::string name = trim(ln.text.substr(0, eq));
            Expr value = parse_expr_at(ln.text.substr(eq + 1), problem.context,
                                       NameResolution::Exact, ln.number,
                                       static_cast<int>(eq) + 2);
            if (entries.count(name))
                throw Error(ErrorKind::DuplicateSection, "repeated '" + name + "'", ln.number, 1);
            entries.emplace(name, std::move(value));
        }
        if (entries.size() == 1 && entries.count("h")) {
            spec.h = entries.at("h");
        } else {
            if (problem.context.n() != 2 || problem.context.m() != 1)
                throw Error(ErrorKind::SyntaxError,
                            "[param-mapping] expects two independents and one dependent",
                            section_line["param-mapping"], 1);
            if (problem.context.parameters().empty())
                throw Error(ErrorKind::SyntaxError,
                            "[param-mapping] needs a declared parameter",
                            section_line["param-mapping"], 1);
            const std::string xb = problem.context.independents()[0] + "bar";
            const std::string yb = problem.context.independents()[1] + "bar";
            const std::string ub = problem.context.dependents()[0] + "bar";
            for (const auto& want : {xb, yb, ub})
                if (!entries.count(want))
                    throw Error(ErrorKind::SyntaxError, "[param-mapping] is missing '" + want +
                                    "' (or a single 'h = ...' line)",
                                section_line["param-mapping"], 1);
            if (entries.size() != 3)
                throw Error(ErrorKind::SyntaxError,
                            "[param-mapping] has unexpected extra lines",
                            section_line["param-mapping"], 1);
            spec.xbar = entries.at(xb);
            spec.ybar = entries.at(yb);
            spec.ubar = entries.at(ub);
        }
        problem.param_mapping = std::move(spec);
    }

    // [system source] / [system target]
    if (sections.count("system source"))
        problem.source_system = parse_equations("system source", problem.context,
                                                NameResolution::Exact);
    if (sections.count("system target")) {
        if (!problem.target_context)
            throw Error(ErrorKind::SyntaxError,
                        "[system target] needs a [mapping] that declares target coordinates",
                        section_line["system target"], 1);
        problem.target_system = parse_equations("system target", *problem.target_context,
                                                NameResolution::PrimeInsensitive);
    }

    return problem;
}

} // namespace jetcm
