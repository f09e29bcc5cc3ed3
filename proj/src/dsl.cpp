#include "lca/dsl.hpp"

#include <cctype>
#include <cstring>
#include <set>
#include <sstream>

namespace lca {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
    enum Type { IDENT, INT, PUNCT, END };
    Type type = END;
    std::string text;
    int line = 1;
    int col = 1;
};

struct ParseAbort {
    Diagnostic d;
};

[[noreturn]] void abort_at(const Token& t, const std::string& msg) {
    Diagnostic d;
    d.severity = Diagnostic::ERROR;
    d.message = msg;
    d.line = t.line;
    d.column = t.col;
    d.snippet = t.type == Token::END ? "<end of input>" : t.text;
    throw ParseAbort{d};
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (ident_start(c)) {
            size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            t.type = Token::IDENT;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.type = Token::INT;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else {
            auto starts = [&](const char* s) { return text.compare(i, strlen(s), s) == 0; };
            t.type = Token::PUNCT;
            if (starts("|->")) {
                t.text = "|->";
            } else if (starts("(+)")) {
                t.text = "(+)";
            } else if (starts("->")) {
                t.text = "->";
            } else if (std::string("{}()[];:,=~+-*/^").find(c) != std::string::npos) {
                t.text = std::string(1, c);
            } else {
                t.text = std::string(1, c);
                abort_at(t, "unexpected character");
            }
            advance(t.text.size());
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.type = Token::END;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

const std::set<std::string> kReserved = {"D", "lam", "mu", "nu", "x", "y"};

struct ExprCtx {
    const std::vector<std::string>* gens = nullptr;  // generator names, or null
    bool allow_lam = false;
    bool allow_x = false;
    const char* lam_error = "variable 'lam' is not allowed here";
    const char* x_error = "variable 'x' is not allowed here";
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SourceFile run() {
        while (peek().type != Token::END) {
            const Token& t = peek();
            if (t.type != Token::IDENT) abort_at(t, "expected a declaration keyword");
            if (t.text == "liealg")
                parse_liealg();
            else if (t.text == "confalg")
                parse_confalg();
            else if (t.text == "map")
                parse_map(false);
            else if (t.text == "modmap")
                parse_map(true);
            else
                abort_at(t, "expected 'liealg', 'confalg', 'map' or 'modmap'");
        }
        return std::move(out_);
    }

    std::vector<Diagnostic> warnings;

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    SourceFile out_;
    std::set<std::string> names_;

    const Token& peek(int ahead = 0) const {
        size_t p = pos_ + ahead;
        return p < toks_.size() ? toks_[p] : toks_.back();
    }
    const Token& get() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_punct(const char* p) const {
        return peek().type == Token::PUNCT && peek().text == p;
    }
    void expect_punct(const char* p) {
        if (!at_punct(p)) abort_at(peek(), std::string("expected '") + p + "'");
        get();
    }
    std::string expect_ident(const char* what) {
        if (peek().type != Token::IDENT) abort_at(peek(), std::string("expected ") + what);
        return get().text;
    }

    void declare(const std::string& name, const Token& at, SourceFile::Declaration::Kind kind) {
        if (names_.count(name)) abort_at(at, "duplicate name '" + name + "'");
        names_.insert(name);
        out_.order.push_back({kind, name});
    }

    std::vector<std::string> parse_namelist() {
        std::vector<std::string> names;
        std::set<std::string> seen;
        for (;;) {
            const Token& t = peek();
            std::string n = expect_ident("a name");
            if (kReserved.count(n)) abort_at(t, "'" + n + "' is a reserved variable name");
            if (!seen.insert(n).second) abort_at(t, "duplicate name '" + n + "'");
            names.push_back(n);
            if (!at_punct(",")) break;
            get();
        }
        return names;
    }

    Rational parse_number() {
        const Token& t = peek();
        if (t.type != Token::INT) abort_at(t, "expected a number");
        Rational num(get().text.c_str());
        if (at_punct("/") && peek(1).type == Token::INT) {
            get();
            Rational den(get().text.c_str());
            if (den == 0) abort_at(t, "division by zero in rational literal");
            num /= den;
        }
        return num;
    }

    int parse_exponent() {
        if (!at_punct("^")) return 1;
        get();
        const Token& t = peek();
        if (t.type != Token::INT) abort_at(t, "expected an integer exponent");
        return std::stoi(get().text);
    }

    std::optional<Var> lookup_var(const ExprCtx& ctx, const Token& t) {
        if (t.text == "D") return Var::D;
        if (t.text == "lam") {
            if (!ctx.allow_lam) abort_at(t, ctx.lam_error);
            return Var::LAM;
        }
        if (t.text == "x") {
            if (!ctx.allow_x) abort_at(t, ctx.x_error);
            return Var::X;
        }
        if (kReserved.count(t.text)) abort_at(t, "variable '" + t.text + "' is not allowed here");
        return std::nullopt;
    }

    // Coefficient polynomial: numbers, allowed variables, parentheses.
    Poly parse_polyexpr(const ExprCtx& ctx) {
        Poly sum;
        bool first = true;
        for (;;) {
            Rational sign = 1;
            if (at_punct("+")) {
                get();
            } else if (at_punct("-")) {
                get();
                sign = -1;
            } else if (!first) {
                break;
            }
            sum += parse_polyterm(ctx).scaled(sign);
            first = false;
            if (!at_punct("+") && !at_punct("-")) break;
        }
        return sum;
    }

    Poly parse_polyterm(const ExprCtx& ctx) {
        Poly prod(1L);
        bool have = false;
        for (;;) {
            const Token& t = peek();
            if (t.type == Token::INT) {
                Rational n = parse_number();
                prod = prod.scaled(n);
            } else if (t.type == Token::IDENT) {
                auto v = lookup_var(ctx, t);
                if (!v) abort_at(t, "'" + t.text + "' is not allowed inside a coefficient");
                get();
                prod *= pvar(*v).pow(parse_exponent());
            } else if (at_punct("(")) {
                get();
                Poly inner = parse_polyexpr(ctx);
                expect_punct(")");
                prod *= inner.pow(parse_exponent());
            } else if (at_punct("*")) {
                if (!have) abort_at(t, "expected a factor before '*'");
                get();
                continue;
            } else {
                if (!have) abort_at(t, "expected a polynomial factor");
                break;
            }
            have = true;
        }
        return prod;
    }

    // One additive term of a module expression: polynomial factors followed
    // by a generator name; a bare constant is only allowed when it is 0.
    void parse_modterm(const ExprCtx& ctx, const Rational& sign, ModElement& out) {
        Poly coeff(1L);
        bool have = false;
        for (;;) {
            const Token& t = peek();
            if (t.type == Token::INT) {
                coeff = coeff.scaled(parse_number());
                have = true;
            } else if (t.type == Token::IDENT) {
                auto v = lookup_var(ctx, t);
                if (v) {
                    get();
                    coeff *= pvar(*v).pow(parse_exponent());
                    have = true;
                    continue;
                }
                for (size_t g = 0; g < ctx.gens->size(); ++g)
                    if ((*ctx.gens)[g] == t.text) {
                        get();
                        out.comps[g] += coeff.scaled(sign);
                        return;
                    }
                abort_at(t, "unknown name '" + t.text + "'");
            } else if (at_punct("(")) {
                get();
                Poly inner = parse_polyexpr(ctx);
                expect_punct(")");
                coeff *= inner.pow(parse_exponent());
                have = true;
            } else if (at_punct("*")) {
                if (!have) abort_at(t, "expected a factor before '*'");
                get();
            } else {
                if (have && coeff.is_zero()) return;  // literal 0 term
                abort_at(t, "expected a generator name to close the term");
            }
        }
    }

    ModElement parse_modexpr(const ExprCtx& ctx, int rank) {
        ModElement out(rank);
        bool first = true;
        for (;;) {
            Rational sign = 1;
            if (at_punct("+")) {
                get();
            } else if (at_punct("-")) {
                get();
                sign = -1;
            } else if (!first) {
                break;
            }
            parse_modterm(ctx, sign, out);
            first = false;
            if (!at_punct("+") && !at_punct("-")) break;
        }
        return out;
    }

    void parse_liealg() {
        get();  // liealg
        const Token& name_tok = peek();
        std::string name = expect_ident("an algebra name");
        declare(name, name_tok, SourceFile::Declaration::LIEALG);
        expect_punct("{");
        const Token& kw = peek();
        if (expect_ident("'basis'") != "basis") abort_at(kw, "expected 'basis'");
        std::vector<std::string> basis = parse_namelist();
        expect_punct(";");
        int n = static_cast<int>(basis.size());
        std::vector<std::vector<QVector>> c(n, std::vector<QVector>(n, QVector(n, Rational(0))));
        std::set<std::pair<int, int>> given;
        ExprCtx ctx;
        ctx.gens = &basis;
        while (at_punct("[")) {
            const Token& open = peek();
            get();
            const Token& ta = peek();
            int ia = gen_index(basis, expect_ident("a basis name"), ta);
            expect_punct(",");
            const Token& tb = peek();
            int ib = gen_index(basis, expect_ident("a basis name"), tb);
            expect_punct("]");
            expect_punct("=");
            ModElement v = parse_modexpr(ctx, n);
            expect_punct(";");
            QVector coeffs(n, Rational(0));
            for (int k = 0; k < n; ++k) {
                if (!v.comps[k].is_constant())
                    abort_at(open, "Lie bracket coefficients must be constant");
                coeffs[k] = v.comps[k].coeff(Mono{});
            }
            if (ia == ib) {
                for (const auto& q : coeffs)
                    if (q != 0) abort_at(open, "[a, a] must be 0");
                continue;
            }
            if (given.count({ia, ib})) {
                if (c[ia][ib] != coeffs) abort_at(open, "conflicting bracket for this pair");
                continue;
            }
            c[ia][ib] = coeffs;
            for (int k = 0; k < n; ++k) c[ib][ia][k] = -coeffs[k];
            given.insert({ia, ib});
            given.insert({ib, ia});
        }
        expect_punct("}");
        try {
            out_.liealgs.emplace(name, LieAlgebra::make(basis, c));
        } catch (const Error& e) {
            abort_at(name_tok, std::string("invalid Lie algebra: ") + e.what());
        }
    }

    void parse_confalg() {
        get();  // confalg
        const Token& name_tok = peek();
        std::string name = expect_ident("an algebra name");
        declare(name, name_tok, SourceFile::Declaration::CONFALG);
        if (at_punct("=")) {
            get();
            const Token& t = peek();
            std::string first = expect_ident("'cur' or a conformal algebra name");
            if (first == "cur") {
                expect_punct("(");
                const Token& gt = peek();
                std::string gname = expect_ident("a Lie algebra name");
                auto it = out_.liealgs.find(gname);
                if (it == out_.liealgs.end()) abort_at(gt, "unknown name '" + gname + "'");
                expect_punct(")");
                expect_punct(";");
                out_.confalgs.emplace(name, make_cur(it->second));
                return;
            }
            auto left = out_.confalgs.find(first);
            if (left == out_.confalgs.end()) abort_at(t, "unknown name '" + first + "'");
            expect_punct("(+)");
            const Token& rt = peek();
            std::string second = expect_ident("a conformal algebra name");
            auto right = out_.confalgs.find(second);
            if (right == out_.confalgs.end()) abort_at(rt, "unknown name '" + second + "'");
            expect_punct(";");
            out_.confalgs.emplace(name, direct_sum(left->second, right->second));
            return;
        }
        expect_punct("{");
        const Token& kw = peek();
        if (expect_ident("'generators'") != "generators") abort_at(kw, "expected 'generators'");
        std::vector<std::string> gens = parse_namelist();
        expect_punct(";");
        int n = static_cast<int>(gens.size());
        std::vector<std::vector<ModElement>> table(n, std::vector<ModElement>(n, ModElement(n)));
        std::set<std::pair<int, int>> given;
        ExprCtx ctx;
        ctx.gens = &gens;
        ctx.allow_lam = true;
        while (peek().type == Token::IDENT && peek().text == "bracket") {
            const Token& kw2 = peek();
            get();
            expect_punct("[");
            const Token& ta = peek();
            int ia = gen_index(gens, expect_ident("a generator name"), ta);
            expect_punct("~");
            const Token& tb = peek();
            int ib = gen_index(gens, expect_ident("a generator name"), tb);
            expect_punct("]");
            expect_punct("=");
            ModElement v = parse_modexpr(ctx, n);
            expect_punct(";");
            if (!given.insert({ia, ib}).second) abort_at(kw2, "duplicate bracket for this pair");
            table[ia][ib] = std::move(v);
        }
        expect_punct("}");
        out_.confalgs.emplace(name, ConformalAlgebra(gens, table));
    }

    void parse_map(bool modmap) {
        get();  // map / modmap
        const Token& name_tok = peek();
        std::string name = expect_ident("a map name");
        declare(name, name_tok,
                modmap ? SourceFile::Declaration::MODMAP : SourceFile::Declaration::MAP);
        expect_punct(":");
        const Token& ft = peek();
        std::string from = expect_ident("a conformal algebra name");
        auto fit = out_.confalgs.find(from);
        if (fit == out_.confalgs.end()) abort_at(ft, "unknown name '" + from + "'");
        expect_punct("->");
        const Token& tt = peek();
        std::string to = expect_ident("a conformal algebra name");
        auto tit = out_.confalgs.find(to);
        if (tit == out_.confalgs.end()) abort_at(tt, "unknown name '" + to + "'");
        const ConformalAlgebra& src = fit->second;
        const ConformalAlgebra& dst = tit->second;
        if (!modmap && src.rank() != dst.rank())
            abort_at(tt, "map requires equal ranks (" + std::to_string(src.rank()) + " vs " +
                             std::to_string(dst.rank()) + ")");

        ExprCtx ctx;
        ctx.gens = &dst.gen_names();
        ctx.allow_x = !modmap;
        ctx.lam_error = "variable 'lam' is not allowed in a map body";
        if (modmap) ctx.x_error = "variable 'x' is not allowed in a modmap body";

        expect_punct("{");
        std::vector<bool> listed(src.rank(), false);
        std::vector<ModElement> cols(src.rank(), ModElement(dst.rank()));
        while (peek().type == Token::IDENT && !at_punct("}")) {
            const Token& gt = peek();
            int j = gen_index(src.gen_names(), expect_ident("a generator name"), gt);
            if (listed[j]) abort_at(gt, "duplicate mapping for '" + gt.text + "'");
            listed[j] = true;
            expect_punct("|->");
            cols[j] = parse_modexpr(ctx, dst.rank());
            expect_punct(";");
        }
        const Token& close = peek();
        expect_punct("}");
        for (int j = 0; j < src.rank(); ++j)
            if (!listed[j]) {
                Diagnostic w;
                w.severity = Diagnostic::WARNING;
                w.message = "generator '" + src.gen_names()[j] + "' not listed; mapped to 0";
                w.line = close.line;
                w.column = close.col;
                w.snippet = "}";
                warnings.push_back(std::move(w));
            }
        if (modmap) {
            ModuleMap m(dst.rank(), src.rank());
            for (int j = 0; j < src.rank(); ++j)
                for (int i = 0; i < dst.rank(); ++i) m.mat[i][j] = cols[j].comps[i];
            out_.modmaps.emplace(name, SourceFile::ModMapDecl{from, to, std::move(m)});
        } else {
            ConformalMap m(src.rank());
            for (int j = 0; j < src.rank(); ++j)
                for (int i = 0; i < dst.rank(); ++i) m.mat[i][j] = cols[j].comps[i];
            out_.maps.emplace(name, SourceFile::MapDecl{from, to, std::move(m)});
        }
    }

    int gen_index(const std::vector<std::string>& names, const std::string& n, const Token& at) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        abort_at(at, "unknown name '" + n + "'");
    }
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Sign-aware sum of rational-coefficient terms: "h - 2 e".
std::string render_combo(const QVector& coeffs, const std::vector<std::string>& names) {
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        Rational mag = coeffs[k] < 0 ? -coeffs[k] : coeffs[k];
        std::string piece = mag == 1 ? names[k] : to_string(mag) + " " + names[k];
        if (out.empty())
            out = (coeffs[k] < 0 ? "-" : "") + piece;
        else
            out += (coeffs[k] < 0 ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

std::string render_element(const ModElement& e, const std::vector<std::string>& names) {
    return e.to_string(names);
}

}  // namespace

std::string Diagnostic::to_string() const {
    std::ostringstream os;
    os << (severity == ERROR ? "error" : "warning") << " at " << line << ":" << column << ": "
       << message << " (near '" << snippet << "')";
    return os.str();
}

const ConformalAlgebra* SourceFile::confalg(const std::string& name) const {
    auto it = confalgs.find(name);
    return it == confalgs.end() ? nullptr : &it->second;
}

const SourceFile::ModMapDecl* SourceFile::modmap(const std::string& name) const {
    auto it = modmaps.find(name);
    return it == modmaps.end() ? nullptr : &it->second;
}

ParseResult parse_source(const std::string& text) {
    ParseResult res;
    try {
        Parser p(lex(text));
        SourceFile f = p.run();
        res.diagnostics = std::move(p.warnings);
        res.file = std::move(f);
    } catch (const ParseAbort& a) {
        res.diagnostics.push_back(a.d);
    }
    return res;
}

std::string render_liealg(const std::string& name, const LieAlgebra& g) {
    std::ostringstream os;
    os << "liealg " << name << " {\n";
    os << "  basis " << join(g.basis_names(), ", ") << ";\n";
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            QVector v(g.dim());
            bool nonzero = false;
            for (int k = 0; k < g.dim(); ++k) {
                v[k] = g.c(i, j, k);
                nonzero = nonzero || v[k] != 0;
            }
            if (!nonzero) continue;
            os << "  [" << g.basis_names()[i] << ", " << g.basis_names()[j] << "] = "
               << render_combo(v, g.basis_names()) << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string render_confalg(const std::string& name, const ConformalAlgebra& a) {
    std::ostringstream os;
    os << "confalg " << name << " {\n";
    os << "  generators " << join(a.gen_names(), ", ") << ";\n";
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) {
            if (a.table(i, j).is_zero()) continue;
            os << "  bracket [" << a.gen_names()[i] << " ~ " << a.gen_names()[j] << "] = "
               << render_element(a.table(i, j), a.gen_names()) << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string render_map(const std::string& name, const SourceFile::MapDecl& d,
                       const ConformalAlgebra& domain, const ConformalAlgebra& target) {
    std::ostringstream os;
    os << "map " << name << " : " << d.from << " -> " << d.to << " {\n";
    for (int j = 0; j < d.map.rank; ++j)
        os << "  " << domain.gen_names()[j] << " |-> "
           << render_element(d.map.column(j), target.gen_names()) << ";\n";
    os << "}\n";
    return os.str();
}

std::string render_modmap(const std::string& name, const SourceFile::ModMapDecl& d,
                          const ConformalAlgebra& domain, const ConformalAlgebra& target) {
    std::ostringstream os;
    os << "modmap " << name << " : " << d.from << " -> " << d.to << " {\n";
    for (int j = 0; j < d.map.in_rank; ++j) {
        ModElement col(d.map.out_rank);
        for (int i = 0; i < d.map.out_rank; ++i) col.comps[i] = d.map.mat[i][j];
        os << "  " << domain.gen_names()[j] << " |-> " << render_element(col, target.gen_names())
           << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_source(const SourceFile& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : f.order) {
        if (!first) os << "\n";
        first = false;
        switch (d.kind) {
            case SourceFile::Declaration::LIEALG:
                os << render_liealg(d.name, f.liealgs.at(d.name));
                break;
            case SourceFile::Declaration::CONFALG:
                os << render_confalg(d.name, f.confalgs.at(d.name));
                break;
            case SourceFile::Declaration::MAP: {
                const auto& m = f.maps.at(d.name);
                os << render_map(d.name, m, f.confalgs.at(m.from), f.confalgs.at(m.to));
                break;
            }
            case SourceFile::Declaration::MODMAP: {
                const auto& m = f.modmaps.at(d.name);
                os << render_modmap(d.name, m, f.confalgs.at(m.from), f.confalgs.at(m.to));
                break;
            }
        }
    }
    return os.str();
}

}  // namespace lca
