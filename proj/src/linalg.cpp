#include "weakhopf/linalg.hpp"

#include "weakhopf/errors.hpp"

#include <algorithm>
#include <map>

namespace weakhopf {

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) throw FieldMismatch("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

/// Sorts by row and sums duplicates, dropping zeros.
SparseCol normalize(std::vector<Entry> es) {
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    SparseCol out;
    out.reserve(es.size());
    for (auto& e : es) {
        if (!out.empty() && out.back().row == e.row) {
            out.back().val += e.val;
        } else {
            if (!out.empty() && out.back().val.is_zero()) out.pop_back();
            out.push_back(std::move(e));
        }
    }
    if (!out.empty() && out.back().val.is_zero()) out.pop_back();
    return out;
}

const Scalar* find_in_row(const SparseRow& r, Index col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const std::pair<Index, Scalar>& e, Index c) { return e.first < c; });
    if (it == r.end() || it->first != col) return nullptr;
    return &it->second;
}

/// a - s*b
SparseRow axpy(const SparseRow& a, const Scalar& s, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(s * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - s * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Incremental reduced row echelon form with first-nonzero-column pivoting.
class Echelon {
public:
    explicit Echelon(FieldSpec f) : field_(f) {}

    /// Returns false if the row reduced to zero.
    bool add(SparseRow r) {
        for (std::size_t k = 0; k < rows_.size() && !r.empty(); ++k) {
            if (const Scalar* v = find_in_row(r, pivots_[k])) {
                Scalar s = *v;
                r = axpy(r, s, rows_[k]);
            }
        }
        if (r.empty()) return false;
        Scalar inv = r.front().second.inverse();
        for (auto& e : r) e.second *= inv;
        pivots_.push_back(r.front().first);
        rows_.push_back(std::move(r));
        return true;
    }

    /// Back-substitutes and sorts rows by pivot column.
    void finish() {
        for (std::size_t k = rows_.size(); k-- > 0;) {
            for (std::size_t m = k + 1; m < rows_.size(); ++m) {
                if (const Scalar* v = find_in_row(rows_[k], pivots_[m])) {
                    Scalar s = *v;
                    rows_[k] = axpy(rows_[k], s, rows_[m]);
                }
            }
        }
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        std::vector<SparseRow> rows;
        std::vector<Index> pivots;
        for (auto i : order) {
            rows.push_back(std::move(rows_[i]));
            pivots.push_back(pivots_[i]);
        }
        rows_ = std::move(rows);
        pivots_ = std::move(pivots);
    }

    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    std::size_t rank() const { return rows_.size(); }

private:
    FieldSpec field_;
    std::vector<SparseRow> rows_;
    std::vector<Index> pivots_;
};

/// Nonempty rows of m, in ascending row order.
std::vector<std::pair<Index, SparseRow>> transpose_rows(const LinMap& m) {
    std::map<Index, SparseRow> rows;
    for (Index c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) rows[e.row].emplace_back(c, e.val);
    return {rows.begin(), rows.end()};
}

}  // namespace

ObjectWord ObjectWord::power(const Factor& f, std::size_t n) {
    return ObjectWord(std::vector<Factor>(n, f));
}

Index ObjectWord::dim() const {
    Index d = 1;
    for (const auto& f : factors_) d *= f.dim;
    return d;
}

ObjectWord ObjectWord::operator*(const ObjectWord& o) const {
    std::vector<Factor> fs = factors_;
    fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
    return ObjectWord(std::move(fs));
}

std::string ObjectWord::to_string() const {
    if (factors_.empty()) return "K";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ",";
        s += factors_[i].name;
    }
    return s;
}

LinMap::LinMap(FieldSpec field, ObjectWord dom, ObjectWord cod)
    : field_(field), dom_(std::move(dom)), cod_(std::move(cod)), cols_(dom_.dim()) {}

LinMap LinMap::identity(const FieldSpec& field, const ObjectWord& w) {
    LinMap m(field, w, w);
    Scalar one = Scalar::one(field);
    for (Index i = 0; i < w.dim(); ++i) m.cols_[i].push_back({i, one});
    return m;
}

LinMap LinMap::from_rows(const FieldSpec& field, const ObjectWord& dom, const ObjectWord& cod,
                         const std::vector<std::vector<Scalar>>& rows) {
    LinMap m(field, dom, cod);
    if (rows.size() != cod.dim()) throw ShapeError("expected " + std::to_string(cod.dim()) + " rows, got " +
                                                   std::to_string(rows.size()));
    for (Index r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != dom.dim())
            throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                             " entries, expected " + std::to_string(dom.dim()));
        for (Index c = 0; c < rows[r].size(); ++c) {
            require_same_field(rows[r][c].field(), field);
            if (!rows[r][c].is_zero()) m.cols_[c].push_back({r, rows[r][c]});
        }
    }
    return m;
}

LinMap LinMap::from_columns(const FieldSpec& field, const ObjectWord& dom, const ObjectWord& cod,
                            std::vector<SparseCol> cols) {
    if (cols.size() != dom.dim()) throw ShapeError("column count does not match domain");
    LinMap m(field, dom, cod);
    for (Index c = 0; c < cols.size(); ++c) {
        for (const auto& e : cols[c])
            if (e.row >= cod.dim()) throw ShapeError("row index out of range");
        m.cols_[c] = normalize(std::move(cols[c]));
    }
    return m;
}

std::size_t LinMap::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

Scalar LinMap::at(Index r, Index c) const {
    for (const auto& e : cols_.at(c))
        if (e.row == r) return e.val;
    return Scalar::zero(field_);
}

void LinMap::set(Index r, Index c, const Scalar& v) {
    if (r >= rows() || c >= cols()) throw ShapeError("index out of range");
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index x) { return e.row < x; });
    if (it != col.end() && it->row == r) {
        if (v.is_zero())
            col.erase(it);
        else
            it->val = v;
    } else if (!v.is_zero()) {
        col.insert(it, Entry{r, v});
    }
}

std::vector<std::vector<Scalar>> LinMap::to_rows() const {
    std::vector<std::vector<Scalar>> out(rows(), std::vector<Scalar>(cols(), Scalar::zero(field_)));
    for (Index c = 0; c < cols(); ++c)
        for (const auto& e : cols_[c]) out[e.row][c] = e.val;
    return out;
}

LinMap LinMap::relabel(const ObjectWord& dom, const ObjectWord& cod) const {
    if (dom.dim() != dom_.dim() || cod.dim() != cod_.dim()) throw ShapeError("relabel changes dimensions");
    LinMap m = *this;
    m.dom_ = dom;
    m.cod_ = cod;
    return m;
}

LinMap LinMap::operator+(const LinMap& o) const {
    require_same_field(field_, o.field_);
    if (dom_ != o.dom_ || cod_ != o.cod_) throw ShapeError("sum of maps with different types");
    LinMap m(field_, dom_, cod_);
    for (Index c = 0; c < cols(); ++c) {
        std::vector<Entry> es = cols_[c];
        es.insert(es.end(), o.cols_[c].begin(), o.cols_[c].end());
        m.cols_[c] = normalize(std::move(es));
    }
    return m;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + o.scaled(-Scalar::one(field_)); }

LinMap LinMap::scaled(const Scalar& s) const {
    LinMap m(field_, dom_, cod_);
    if (s.is_zero()) return m;
    for (Index c = 0; c < cols(); ++c) {
        m.cols_[c].reserve(cols_[c].size());
        for (const auto& e : cols_[c]) m.cols_[c].push_back({e.row, e.val * s});
    }
    return m;
}

bool LinMap::is_zero() const {
    for (const auto& c : cols_)
        if (!c.empty()) return false;
    return true;
}

bool operator==(const LinMap& a, const LinMap& b) {
    if (a.field_ != b.field_ || a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
    for (Index c = 0; c < a.cols(); ++c) {
        const auto& x = a.cols_[c];
        const auto& y = b.cols_[c];
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].row != y[i].row || x[i].val != y[i].val) return false;
    }
    return true;
}

std::optional<Difference> first_difference(const LinMap& a, const LinMap& b) {
    require_same_field(a.field(), b.field());
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("comparing maps of different shapes");
    Scalar zero = Scalar::zero(a.field());
    for (Index c = 0; c < a.cols(); ++c) {
        const auto& x = a.column(c);
        const auto& y = b.column(c);
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) return Difference{x[i].row, c, x[i].val, zero};
            if (i == x.size() || y[j].row < x[i].row) return Difference{y[j].row, c, zero, y[j].val};
            if (x[i].val != y[j].val) return Difference{x[i].row, c, x[i].val, y[j].val};
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

LinMap tensor_product(const LinMap& f, const LinMap& g) {
    require_same_field(f.field(), g.field());
    std::vector<SparseCol> cols(f.cols() * g.cols());
    Index gr = g.rows();
    for (Index a = 0; a < f.cols(); ++a) {
        for (Index b = 0; b < g.cols(); ++b) {
            auto& col = cols[a * g.cols() + b];
            col.reserve(f.column(a).size() * g.column(b).size());
            for (const auto& x : f.column(a))
                for (const auto& y : g.column(b)) col.push_back({x.row * gr + y.row, x.val * y.val});
        }
    }
    return LinMap::from_columns(f.field(), f.dom() * g.dom(), f.cod() * g.cod(), std::move(cols));
}

LinMap tensor_product(std::initializer_list<LinMap> fs) {
    if (fs.size() == 0) throw ShapeError("empty tensor product");
    auto it = fs.begin();
    LinMap acc = *it++;
    for (; it != fs.end(); ++it) acc = tensor_product(acc, *it);
    return acc;
}

LinMap compose(const LinMap& g, const LinMap& f) { return apply_at(g, ObjectWord(), ObjectWord(), f); }

LinMap apply_at(const LinMap& F, const ObjectWord& pre, const ObjectWord& post, const LinMap& M) {
    require_same_field(F.field(), M.field());
    ObjectWord expected = pre * F.dom() * post;
    if (expected != M.cod())
        throw ShapeError("cannot compose: codomain " + M.cod().to_string() + " does not match " + expected.to_string());
    const Index dF = F.cols(), cF = F.rows(), ps = post.dim();
    std::vector<SparseCol> cols(M.cols());
    for (Index c = 0; c < M.cols(); ++c) {
        std::vector<Entry> es;
        for (const auto& e : M.column(c)) {
            Index a = e.row / (dF * ps);
            Index rem = e.row % (dF * ps);
            Index b = rem / ps, t = rem % ps;
            for (const auto& fe : F.column(b)) es.push_back({(a * cF + fe.row) * ps + t, e.val * fe.val});
        }
        cols[c] = normalize(std::move(es));
    }
    return LinMap::from_columns(M.field(), M.dom(), pre * F.cod() * post, std::move(cols));
}

LinMap swap_at(const ObjectWord& pre, const ObjectWord& x, const ObjectWord& y, const ObjectWord& post,
               const LinMap& M) {
    ObjectWord expected = pre * x * y * post;
    if (expected != M.cod())
        throw ShapeError("cannot swap: codomain " + M.cod().to_string() + " does not match " + expected.to_string());
    const Index dx = x.dim(), dy = y.dim(), ps = post.dim();
    std::vector<SparseCol> cols(M.cols());
    for (Index c = 0; c < M.cols(); ++c) {
        std::vector<Entry> es;
        es.reserve(M.column(c).size());
        for (const auto& e : M.column(c)) {
            Index a = e.row / (dx * dy * ps);
            Index rem = e.row % (dx * dy * ps);
            Index i = rem / (dy * ps);
            rem %= dy * ps;
            Index j = rem / ps, t = rem % ps;
            es.push_back({((a * dy + j) * dx + i) * ps + t, e.val});
        }
        cols[c] = normalize(std::move(es));
    }
    return LinMap::from_columns(M.field(), M.dom(), pre * y * x * post, std::move(cols));
}

LinMap swap_map(const FieldSpec& field, const ObjectWord& x, const ObjectWord& y) {
    return swap_at(ObjectWord(), x, y, ObjectWord(), LinMap::identity(field, x * y));
}

Splitting split_idempotent(const LinMap& e, const std::string& image_name) {
    if (e.dom() != e.cod()) throw ShapeError("idempotent must be an endomorphism");
    LinMap ee = compose(e, e);
    if (auto d = first_difference(ee, e)) throw NotIdempotent(d->col);
    Echelon ech(e.field());
    for (auto& [r, row] : transpose_rows(e)) ech.add(row);
    ech.finish();
    Splitting s;
    s.rank = ech.rank();
    ObjectWord img = ObjectWord::of(image_name, s.rank);
    std::vector<SparseCol> inj_cols;
    for (Index p : ech.pivots()) inj_cols.push_back(e.column(p));
    s.inj = LinMap::from_columns(e.field(), img, e.cod(), std::move(inj_cols));
    std::vector<SparseCol> proj_cols(e.cols());
    for (Index k = 0; k < ech.rank(); ++k)
        for (const auto& [c, v] : ech.rows()[k]) proj_cols[c].push_back({k, v});
    s.proj = LinMap::from_columns(e.field(), e.dom(), img, std::move(proj_cols));
    return s;
}

AffineSolution solve_affine(const FieldSpec& field, std::size_t unknowns, const std::vector<LinearEquation>& eqs) {
    Echelon ech(field);
    for (const auto& eq : eqs) {
        SparseRow r;
        for (const auto& [i, v] : eq.coeffs) {
            if (i >= unknowns) throw ShapeError("unknown index out of range");
            require_same_field(v.field(), field);
            if (!v.is_zero()) r.emplace_back(i, v);
        }
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow merged;
        for (auto& e : r) {
            if (!merged.empty() && merged.back().first == e.first) {
                merged.back().second += e.second;
                if (merged.back().second.is_zero()) merged.pop_back();
            } else {
                merged.push_back(e);
            }
        }
        if (!eq.rhs.is_zero()) merged.emplace_back(unknowns, eq.rhs);
        ech.add(std::move(merged));
    }
    ech.finish();
    AffineSolution sol;
    for (Index p : ech.pivots())
        if (p == unknowns) return sol;
    Scalar zero = Scalar::zero(field), one = Scalar::one(field);
    sol.particular.assign(unknowns, zero);
    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t k = 0; k < ech.rank(); ++k) {
        is_pivot[ech.pivots()[k]] = true;
        if (const Scalar* v = find_in_row(ech.rows()[k], unknowns)) sol.particular[ech.pivots()[k]] = *v;
    }
    for (Index f = 0; f < unknowns; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(unknowns, zero);
        v[f] = one;
        for (std::size_t k = 0; k < ech.rank(); ++k)
            if (const Scalar* x = find_in_row(ech.rows()[k], f)) v[ech.pivots()[k]] = -*x;
        sol.nullspace.push_back(std::move(v));
    }
    sol.kind = sol.nullspace.empty() ? AffineSolution::Kind::unique : AffineSolution::Kind::affine;
    return sol;
}

LinMap unknowns_to_map(const FieldSpec& field, const ObjectWord& dom, const ObjectWord& cod,
                       const std::vector<Scalar>& x) {
    if (x.size() != dom.dim() * cod.dim()) throw ShapeError("unknown vector has wrong length");
    std::vector<SparseCol> cols(dom.dim());
    for (Index r = 0; r < cod.dim(); ++r)
        for (Index c = 0; c < dom.dim(); ++c)
            if (!x[r * dom.dim() + c].is_zero()) cols[c].push_back({r, x[r * dom.dim() + c]});
    return LinMap::from_columns(field, dom, cod, std::move(cols));
}

std::size_t rank(const LinMap& m) {
    Echelon ech(m.field());
    for (Index c = 0; c < m.cols(); ++c) {
        SparseRow r;
        for (const auto& e : m.column(c)) r.emplace_back(e.row, e.val);
        ech.add(std::move(r));
    }
    return ech.rank();
}

LinMap kernel_basis(const LinMap& m, const std::string& kernel_name) {
    std::vector<LinearEquation> eqs;
    for (auto& [r, row] : transpose_rows(m)) eqs.push_back({row, Scalar::zero(m.field())});
    AffineSolution sol = solve_affine(m.field(), m.cols(), eqs);
    std::vector<SparseCol> cols;
    for (const auto& v : sol.nullspace) {
        SparseCol col;
        for (Index i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) col.push_back({i, v[i]});
        cols.push_back(std::move(col));
    }
    ObjectWord kw = ObjectWord::of(kernel_name, cols.size());
    return LinMap::from_columns(m.field(), kw, m.dom(), std::move(cols));
}

std::vector<SparseRow> column_space(const LinMap& m) {
    Echelon ech(m.field());
    for (Index c = 0; c < m.cols(); ++c) {
        SparseRow r;
        for (const auto& e : m.column(c)) r.emplace_back(e.row, e.val);
        ech.add(std::move(r));
    }
    ech.finish();
    return ech.rows();
}

bool same_column_space(const LinMap& a, const LinMap& b) {
    if (a.rows() != b.rows()) return false;
    auto x = column_space(a), y = column_space(b);
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].size() != y[i].size()) return false;
        for (std::size_t k = 0; k < x[i].size(); ++k)
            if (x[i][k].first != y[i][k].first || x[i][k].second != y[i][k].second) return false;
    }
    return true;
}

bool column_space_contains(const LinMap& big, const LinMap& small) {
    if (big.rows() != small.rows()) return false;
    Echelon ech(big.field());
    for (Index c = 0; c < big.cols(); ++c) {
        SparseRow r;
        for (const auto& e : big.column(c)) r.emplace_back(e.row, e.val);
        ech.add(std::move(r));
    }
    for (Index c = 0; c < small.cols(); ++c) {
        SparseRow r;
        for (const auto& e : small.column(c)) r.emplace_back(e.row, e.val);
        if (ech.add(std::move(r))) return false;
    }
    return true;
}

std::optional<LinMap> factor_through(const LinMap& j, const LinMap& n) {
    require_same_field(j.field(), n.field());
    if (j.rows() != n.rows()) throw ShapeError("factor_through: codomains differ");
    const Index dj = j.cols();
    std::map<Index, SparseRow> rows;
    for (Index c = 0; c < j.cols(); ++c)
        for (const auto& e : j.column(c)) rows[e.row].emplace_back(c, e.val);
    for (Index c = 0; c < n.cols(); ++c)
        for (const auto& e : n.column(c)) rows[e.row].emplace_back(dj + c, e.val);
    Echelon ech(j.field());
    for (auto& [r, row] : rows) ech.add(std::move(row));
    ech.finish();
    std::vector<SparseCol> cols(n.cols());
    for (std::size_t k = 0; k < ech.rank(); ++k) {
        Index p = ech.pivots()[k];
        if (p >= dj) return std::nullopt;
        for (const auto& [c, v] : ech.rows()[k])
            if (c >= dj) cols[c - dj].push_back({p, v});
    }
    return LinMap::from_columns(j.field(), n.dom(), j.dom(), std::move(cols));
}

}  // namespace weakhopf
