#pragma once

#include "weakhopf/linalg.hpp"
#include "weakhopf/report.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

/// Named objects with dimensions and named generators with their types.
class Signature {
public:
    void add_object(const std::string& name, std::size_t dim);
    void add_generator(const std::string& name, const ObjectWord& dom, const ObjectWord& cod);

    bool has_object(const std::string& name) const { return objects_.count(name) > 0; }
    bool has_generator(const std::string& name) const { return generators_.count(name) > 0; }
    std::size_t object_dim(const std::string& name) const;
    const std::pair<ObjectWord, ObjectWord>& generator(const std::string& name) const;
    /// Builds a word from object names; "K" alone is the empty word.
    ObjectWord word(const std::vector<std::string>& names) const;

    const std::map<std::string, std::size_t>& objects() const { return objects_; }
    const std::map<std::string, std::pair<ObjectWord, ObjectWord>>& generators() const { return generators_; }

private:
    std::map<std::string, std::size_t> objects_;
    std::map<std::string, std::pair<ObjectWord, ObjectWord>> generators_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { gen, id, swap, seq, par };
    Kind kind;
    std::string name;  // gen
    ObjectWord w1, w2; // id uses w1; swap uses both
    ExprPtr a, b;      // seq: a first, then b; par: a ⊗ b

    static ExprPtr gen(std::string name);
    static ExprPtr id(ObjectWord w);
    static ExprPtr swap(ObjectWord x, ObjectWord y);
    static ExprPtr seq(ExprPtr first, ExprPtr then);
    static ExprPtr par(ExprPtr left, ExprPtr right);
};

bool same_ast(const ExprPtr& x, const ExprPtr& y);

/// expr := term (";" term)* ; term := factor ("*" factor)* ;
/// factor := IDENT | id(word) | swap(word, word) | (expr).
/// In swap, multi-factor words are separated by "|": swap(H,A | H).
ExprPtr parse_expr(const std::string& text, const Signature& sig);

/// Inverse of parse_expr on left-associated trees.
std::string print_expr(const ExprPtr& e);

struct MorType {
    ObjectWord dom;
    ObjectWord cod;
};

/// Throws TypeError naming the first bad junction; paths look like "$.a.b".
MorType infer_type(const ExprPtr& e, const Signature& sig);

class Env {
public:
    explicit Env(FieldSpec field) : field_(field) {}

    /// Binds (or rebinds) a generator; its objects are registered from the map's words.
    void bind(const std::string& name, const LinMap& m);
    void add_object(const std::string& name, std::size_t dim) { sig_.add_object(name, dim); }

    const FieldSpec& field() const { return field_; }
    const Signature& signature() const { return sig_; }
    const LinMap& map(const std::string& name) const;
    bool has(const std::string& name) const { return maps_.count(name) > 0; }

    ExprPtr parse(const std::string& text) const { return parse_expr(text, sig_); }

private:
    FieldSpec field_;
    Signature sig_;
    std::map<std::string, LinMap> maps_;
};

LinMap evaluate(const ExprPtr& e, const Env& env);
LinMap evaluate(const std::string& text, const Env& env);

/// Pass iff both sides evaluate to the same matrix; throws TypeError if their types differ.
VerdictEntry check_identity(const std::string& id, const ExprPtr& lhs, const ExprPtr& rhs, const Env& env);
VerdictEntry check_identity(const std::string& id, const std::string& lhs, const std::string& rhs, const Env& env);

}  // namespace weakhopf
