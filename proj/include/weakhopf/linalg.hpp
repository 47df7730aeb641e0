#pragma once

#include "weakhopf/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

using Index = std::uint64_t;

struct Factor {
    std::string name;
    std::size_t dim = 0;

    friend bool operator==(const Factor& a, const Factor& b) { return a.name == b.name && a.dim == b.dim; }
    friend bool operator!=(const Factor& a, const Factor& b) { return !(a == b); }
};

/// Ordered tensor word X1 ⊗ ... ⊗ Xn; the empty word is the unit object K.
class ObjectWord {
public:
    ObjectWord() = default;
    ObjectWord(std::initializer_list<Factor> fs) : factors_(fs) {}
    explicit ObjectWord(std::vector<Factor> fs) : factors_(std::move(fs)) {}

    static ObjectWord of(const std::string& name, std::size_t dim) { return ObjectWord{Factor{name, dim}}; }
    static ObjectWord power(const Factor& f, std::size_t n);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    Index dim() const;

    ObjectWord operator*(const ObjectWord& o) const;

    /// "H,A" or "K" for the empty word.
    std::string to_string() const;

    friend bool operator==(const ObjectWord& a, const ObjectWord& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const ObjectWord& a, const ObjectWord& b) { return !(a == b); }

private:
    std::vector<Factor> factors_;
};

struct Entry {
    Index row;
    Scalar val;
};

/// Sorted by row, no explicit zeros.
using SparseCol = std::vector<Entry>;

/**
 * Linear map between tensor words. Rows are indexed by the codomain basis and
 * columns by the domain basis; a basis index of X1⊗...⊗Xn is read with the
 * leftmost factor most significant. Storage is column-compressed, but the
 * semantics are those of the full matrix.
 */
class LinMap {
public:
    LinMap() = default;
    LinMap(FieldSpec field, ObjectWord dom, ObjectWord cod);

    static LinMap identity(const FieldSpec& field, const ObjectWord& w);
    static LinMap from_rows(const FieldSpec& field, const ObjectWord& dom, const ObjectWord& cod,
                            const std::vector<std::vector<Scalar>>& rows);
    /// Columns are sorted and cleaned of zeros.
    static LinMap from_columns(const FieldSpec& field, const ObjectWord& dom, const ObjectWord& cod,
                               std::vector<SparseCol> cols);

    const FieldSpec& field() const { return field_; }
    const ObjectWord& dom() const { return dom_; }
    const ObjectWord& cod() const { return cod_; }
    Index rows() const { return cod_.dim(); }
    Index cols() const { return dom_.dim(); }
    std::size_t nnz() const;

    const SparseCol& column(Index c) const { return cols_[c]; }
    Scalar at(Index r, Index c) const;
    void set(Index r, Index c, const Scalar& v);
    std::vector<std::vector<Scalar>> to_rows() const;

    /// Same matrix, new words of equal dimensions.
    LinMap relabel(const ObjectWord& dom, const ObjectWord& cod) const;

    LinMap operator+(const LinMap& o) const;
    LinMap operator-(const LinMap& o) const;
    LinMap scaled(const Scalar& s) const;
    bool is_zero() const;

    friend bool operator==(const LinMap& a, const LinMap& b);
    friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

private:
    FieldSpec field_;
    ObjectWord dom_, cod_;
    std::vector<SparseCol> cols_;
};

struct Difference {
    Index row;
    Index col;
    Scalar lhs;
    Scalar rhs;
};

/// First differing entry scanning columns in ascending order, rows within a column ascending.
std::optional<Difference> first_difference(const LinMap& a, const LinMap& b);

LinMap tensor_product(const LinMap& f, const LinMap& g);
LinMap tensor_product(std::initializer_list<LinMap> fs);
/// g ∘ f
LinMap compose(const LinMap& g, const LinMap& f);
/// c_{X,Y}: X⊗Y → Y⊗X
LinMap swap_map(const FieldSpec& field, const ObjectWord& x, const ObjectWord& y);

/// (pre ⊗ F ⊗ post) ∘ M without materializing the tensor product.
LinMap apply_at(const LinMap& F, const ObjectWord& pre, const ObjectWord& post, const LinMap& M);
/// (pre ⊗ c_{X,Y} ⊗ post) ∘ M
LinMap swap_at(const ObjectWord& pre, const ObjectWord& x, const ObjectWord& y, const ObjectWord& post,
               const LinMap& M);

struct Splitting {
    std::size_t rank = 0;
    LinMap inj;   // image → V
    LinMap proj;  // V → image
};

/// inj∘proj = e and proj∘inj = id; the image basis is the set of RREF pivot columns of e.
Splitting split_idempotent(const LinMap& e, const std::string& image_name);

using SparseRow = std::vector<std::pair<Index, Scalar>>;

struct LinearEquation {
    SparseRow coeffs;
    Scalar rhs;
};

struct AffineSolution {
    enum class Kind { no_solution, unique, affine };
    Kind kind = Kind::no_solution;
    std::vector<Scalar> particular;
    std::vector<std::vector<Scalar>> nullspace;
};

/// Exact Gauss-Jordan elimination; free variables are set to zero in the particular solution.
AffineSolution solve_affine(const FieldSpec& field, std::size_t unknowns, const std::vector<LinearEquation>& eqs);

/// Unknown entry (r, c) of a map dom→cod lives at index r * dim(dom) + c.
LinMap unknowns_to_map(const FieldSpec& field, const ObjectWord& dom, const ObjectWord& cod,
                       const std::vector<Scalar>& x);

std::size_t rank(const LinMap& m);
/// Columns form the canonical basis of ker(m); dom of the result is kernel_name^dim.
LinMap kernel_basis(const LinMap& m, const std::string& kernel_name);
/// Canonical (RREF) basis of the column space, one SparseRow per basis vector.
std::vector<SparseRow> column_space(const LinMap& m);
bool same_column_space(const LinMap& a, const LinMap& b);
bool column_space_contains(const LinMap& big, const LinMap& small);
/// X with j∘X = n, if it exists (free variables zero).
std::optional<LinMap> factor_through(const LinMap& j, const LinMap& n);

}  // namespace weakhopf
