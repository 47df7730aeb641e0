#include "weakhopf/ir.hpp"

#include "weakhopf/errors.hpp"

#include <cctype>

namespace weakhopf {

void Signature::add_object(const std::string& name, std::size_t dim) {
    if (name == "K") throw Error("the name K is reserved for the unit object");
    auto it = objects_.find(name);
    if (it != objects_.end() && it->second != dim)
        throw ShapeError("object " + name + " redeclared with dimension " + std::to_string(dim));
    if (generators_.count(name)) throw Error("name '" + name + "' already used by a generator");
    objects_[name] = dim;
}

void Signature::add_generator(const std::string& name, const ObjectWord& dom, const ObjectWord& cod) {
    if (objects_.count(name)) throw Error("name '" + name + "' already used by an object");
    for (const ObjectWord* w : {&dom, &cod})
        for (const auto& f : w->factors()) add_object(f.name, f.dim);
    generators_[name] = {dom, cod};
}

std::size_t Signature::object_dim(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) throw UnknownName(name);
    return it->second;
}

const std::pair<ObjectWord, ObjectWord>& Signature::generator(const std::string& name) const {
    auto it = generators_.find(name);
    if (it == generators_.end()) throw UnknownName(name);
    return it->second;
}

ObjectWord Signature::word(const std::vector<std::string>& names) const {
    if (names.size() == 1 && names[0] == "K") return {};
    std::vector<Factor> fs;
    for (const auto& n : names) fs.push_back({n, object_dim(n)});
    return ObjectWord(std::move(fs));
}

ExprPtr Expr::gen(std::string name) {
    return std::make_shared<const Expr>(Expr{Kind::gen, std::move(name), {}, {}, nullptr, nullptr});
}
ExprPtr Expr::id(ObjectWord w) { return std::make_shared<const Expr>(Expr{Kind::id, {}, std::move(w), {}, nullptr, nullptr}); }
ExprPtr Expr::swap(ObjectWord x, ObjectWord y) {
    return std::make_shared<const Expr>(Expr{Kind::swap, {}, std::move(x), std::move(y), nullptr, nullptr});
}
ExprPtr Expr::seq(ExprPtr first, ExprPtr then) {
    return std::make_shared<const Expr>(Expr{Kind::seq, {}, {}, {}, std::move(first), std::move(then)});
}
ExprPtr Expr::par(ExprPtr left, ExprPtr right) {
    return std::make_shared<const Expr>(Expr{Kind::par, {}, {}, {}, std::move(left), std::move(right)});
}

bool same_ast(const ExprPtr& x, const ExprPtr& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case Expr::Kind::gen: return x->name == y->name;
        case Expr::Kind::id: return x->w1 == y->w1;
        case Expr::Kind::swap: return x->w1 == y->w1 && x->w2 == y->w2;
        default: return same_ast(x->a, y->a) && same_ast(x->b, y->b);
    }
}

namespace {

struct Token {
    enum class Kind { ident, semi, star, lparen, rparen, comma, bar, end };
    Kind kind;
    std::string text;
    std::size_t line, col;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
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
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Kind::ident, s.substr(i, j - i), line, col});
            col += j - i;
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case ';': k = Token::Kind::semi; break;
            case '*': k = Token::Kind::star; break;
            case '(': k = Token::Kind::lparen; break;
            case ')': k = Token::Kind::rparen; break;
            case ',': k = Token::Kind::comma; break;
            case '|': k = Token::Kind::bar; break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({k, std::string(1, c), line, col});
        ++col;
        ++i;
    }
    out.push_back({Token::Kind::end, "", line, col});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const Signature& sig) : toks_(tokenize(text)), sig_(sig) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::end) fail("expected ';', '*' or end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(msg + ", found " + found, t.line, t.col);
    }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek().kind == Token::Kind::semi) {
            ++pos_;
            e = Expr::seq(e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (peek().kind == Token::Kind::star) {
            ++pos_;
            e = Expr::par(e, factor());
        }
        return e;
    }

    std::string object_name() {
        if (peek().kind != Token::Kind::ident) fail("expected an object name");
        const Token& t = next();
        if (t.text != "K" && !sig_.has_object(t.text)) throw UnknownName(t.text);
        return t.text;
    }

    ObjectWord word_of(const std::vector<std::string>& names, const Token& at) const {
        for (const auto& n : names)
            if (n == "K" && names.size() > 1) throw SyntaxError("K cannot be combined with other objects", at.line, at.col);
        return sig_.word(names);
    }

    ExprPtr factor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::lparen) {
            ++pos_;
            ExprPtr e = expr();
            expect(Token::Kind::rparen, "')'");
            return e;
        }
        if (t.kind != Token::Kind::ident) fail("expected a generator, id(...), swap(...) or '('");
        bool call = toks_[pos_ + 1].kind == Token::Kind::lparen;
        if (t.text == "id" && call) {
            const Token& start = t;
            pos_ += 2;
            std::vector<std::string> names{object_name()};
            while (peek().kind == Token::Kind::comma) {
                ++pos_;
                names.push_back(object_name());
            }
            expect(Token::Kind::rparen, "')'");
            return Expr::id(word_of(names, start));
        }
        if (t.text == "swap" && call) {
            const Token& start = t;
            pos_ += 2;
            std::vector<std::string> left{object_name()}, right;
            bool split = false;
            while (peek().kind == Token::Kind::comma || peek().kind == Token::Kind::bar) {
                if (next().kind == Token::Kind::bar) {
                    if (split) fail("swap takes exactly two words");
                    split = true;
                }
                (split ? right : left).push_back(object_name());
            }
            expect(Token::Kind::rparen, "')'");
            if (!split) {
                if (left.size() != 2)
                    throw SyntaxError("ambiguous swap; separate the two words with '|'", start.line, start.col);
                right = {left[1]};
                left.pop_back();
            }
            return Expr::swap(word_of(left, start), word_of(right, start));
        }
        ++pos_;
        if (!sig_.has_generator(t.text)) throw UnknownName(t.text);
        return Expr::gen(t.text);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Signature& sig_;
};

std::string word_text(const ObjectWord& w) {
    if (w.empty()) return "K";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += w.factors()[i].name;
    }
    return s;
}

enum class Ctx { top, seq_right, par_left, par_right };

std::string print(const ExprPtr& e, Ctx ctx) {
    switch (e->kind) {
        case Expr::Kind::gen: return e->name;
        case Expr::Kind::id: return "id(" + word_text(e->w1) + ")";
        case Expr::Kind::swap: {
            const char* sep = e->w1.size() == 1 && e->w2.size() == 1 ? ", " : " | ";
            return "swap(" + word_text(e->w1) + sep + word_text(e->w2) + ")";
        }
        case Expr::Kind::seq: {
            std::string s = print(e->a, Ctx::top) + " ; " + print(e->b, Ctx::seq_right);
            return ctx == Ctx::top ? s : "(" + s + ")";
        }
        case Expr::Kind::par: {
            std::string s = print(e->a, Ctx::par_left) + " * " + print(e->b, Ctx::par_right);
            return ctx == Ctx::par_right ? "(" + s + ")" : s;
        }
    }
    return {};
}

MorType infer(const ExprPtr& e, const Signature& sig, const std::string& path) {
    switch (e->kind) {
        case Expr::Kind::gen: {
            const auto& g = sig.generator(e->name);
            return {g.first, g.second};
        }
        case Expr::Kind::id: return {e->w1, e->w1};
        case Expr::Kind::swap: return {e->w1 * e->w2, e->w2 * e->w1};
        case Expr::Kind::seq: {
            MorType x = infer(e->a, sig, path + ".first");
            MorType y = infer(e->b, sig, path + ".then");
            if (x.cod != y.dom) throw TypeError(y.dom.to_string(), x.cod.to_string(), path);
            return {x.dom, y.cod};
        }
        case Expr::Kind::par: {
            MorType x = infer(e->a, sig, path + ".left");
            MorType y = infer(e->b, sig, path + ".right");
            return {x.dom * y.dom, x.cod * y.cod};
        }
    }
    throw Error("bad expression node");
}

/// (pre ⊗ e ⊗ post) ∘ M
LinMap apply(const ExprPtr& e, const Env& env, const ObjectWord& pre, const ObjectWord& post, LinMap M) {
    switch (e->kind) {
        case Expr::Kind::gen: return apply_at(env.map(e->name), pre, post, M);
        case Expr::Kind::id: return M;
        case Expr::Kind::swap: return swap_at(pre, e->w1, e->w2, post, M);
        case Expr::Kind::seq: {
            LinMap x = apply(e->a, env, pre, post, std::move(M));
            return apply(e->b, env, pre, post, std::move(x));
        }
        case Expr::Kind::par: {
            // a ⊗ b = (cod a ⊗ b) ∘ (a ⊗ dom b)
            MorType ta = infer_type(e->a, env.signature());
            MorType tb = infer_type(e->b, env.signature());
            LinMap x = apply(e->a, env, pre, tb.dom * post, std::move(M));
            return apply(e->b, env, pre * ta.cod, post, std::move(x));
        }
    }
    throw Error("bad expression node");
}

}  // namespace

ExprPtr parse_expr(const std::string& text, const Signature& sig) { return Parser(text, sig).parse(); }

std::string print_expr(const ExprPtr& e) { return print(e, Ctx::top); }

MorType infer_type(const ExprPtr& e, const Signature& sig) { return infer(e, sig, "$"); }

void Env::bind(const std::string& name, const LinMap& m) {
    if (m.field() != field_) throw FieldMismatch("binding " + name + " over a different field");
    sig_.add_generator(name, m.dom(), m.cod());
    maps_[name] = m;
}

const LinMap& Env::map(const std::string& name) const {
    auto it = maps_.find(name);
    if (it == maps_.end()) throw UnknownName(name);
    return it->second;
}

LinMap evaluate(const ExprPtr& e, const Env& env) {
    MorType t = infer_type(e, env.signature());
    return apply(e, env, {}, {}, LinMap::identity(env.field(), t.dom));
}

LinMap evaluate(const std::string& text, const Env& env) { return evaluate(env.parse(text), env); }

VerdictEntry check_identity(const std::string& id, const ExprPtr& lhs, const ExprPtr& rhs, const Env& env) {
    MorType a = infer_type(lhs, env.signature());
    MorType b = infer_type(rhs, env.signature());
    if (a.dom != b.dom) throw TypeError(a.dom.to_string(), b.dom.to_string(), "rhs domain");
    if (a.cod != b.cod) throw TypeError(a.cod.to_string(), b.cod.to_string(), "rhs codomain");
    auto w = witness_of(evaluate(lhs, env), evaluate(rhs, env));
    return {id, w ? Status::fail : Status::pass, w, {}};
}

VerdictEntry check_identity(const std::string& id, const std::string& lhs, const std::string& rhs, const Env& env) {
    return check_identity(id, env.parse(lhs), env.parse(rhs), env);
}

}  // namespace weakhopf
