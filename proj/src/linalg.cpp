#include "mrb/linalg.hpp"

#include "mrb/error.hpp"

#include <algorithm>
#include <numeric>

namespace mrb {

Scalar SparseVector::get(std::size_t index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, std::size_t i) { return e.first < i; });
    if (it != entries.end() && it->first == index) return it->second;
    return {};
}

SparseVector SparseVector::from_dense(const std::vector<Scalar>& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s.entries.emplace_back(i, v[i]);
    return s;
}

SparseVector SparseVector::unit(std::size_t index) {
    SparseVector s;
    s.entries.emplace_back(index, Scalar(1));
    return s;
}

std::vector<Scalar> SparseVector::to_dense(std::size_t dim) const {
    std::vector<Scalar> v(dim);
    for (const auto& [i, x] : entries) {
        if (i >= dim) throw Error(ErrorKind::ShapeMismatch, "sparse index exceeds dimension");
        v[i] = x;
    }
    return v;
}

void SparseVector::axpy(const Scalar& c, const SparseVector& other) {
    if (c.is_zero() || other.entries.empty()) return;
    std::vector<std::pair<std::size_t, Scalar>> out;
    out.reserve(entries.size() + other.entries.size());
    auto a = entries.begin(), ae = entries.end();
    auto b = other.entries.begin(), be = other.entries.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            a->second.add_product(c, b->second);
            if (!a->second.is_zero()) out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    entries = std::move(out);
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        entries.clear();
        return *this;
    }
    for (auto& e : entries) e.second *= c;
    return *this;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) s.columns_[j].entries.emplace_back(i, m(i, j));
    return s;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
    SparseMatrix s;
    s.rows_ = rows;
    s.columns_ = std::move(columns);
    for (const auto& c : s.columns_)
        if (!c.empty() && c.entries.back().first >= rows)
            throw Error(ErrorKind::ShapeMismatch, "sparse column exceeds row count");
    return s;
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix m(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, x] : columns_[j].entries) m(i, j) = x;
    return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    SparseVector r;
    for (const auto& [j, x] : v.entries) {
        if (j >= cols()) throw Error(ErrorKind::ShapeMismatch, "vector longer than matrix width");
        r.axpy(x, columns_[j]);
    }
    return r;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.nonzeros();
    return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "sparse product shape mismatch");
    SparseMatrix r(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) r.columns_[j] = a.apply(b.columns_[j]);
    return r;
}

EchelonBasis::EchelonBasis(std::size_t dim, bool track_tags) : dim_(dim), track_(track_tags), pivot_(dim, -1) {}

bool EchelonBasis::insert(SparseVector v, SparseVector tag, SparseVector* relation) {
    while (!v.empty()) {
        int p = pivot_[v.lead()];
        if (p < 0) break;
        Scalar c = -v.entries.front().second;
        v.axpy(c, rows_[static_cast<std::size_t>(p)]);
        if (track_) tag.axpy(c, tags_[static_cast<std::size_t>(p)]);
    }
    if (v.empty()) {
        if (relation) *relation = std::move(tag);
        return false;
    }
    Scalar inv = Scalar(1) / v.entries.front().second;
    v *= inv;
    if (track_) tag *= inv;
    pivot_[v.lead()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    if (track_) tags_.push_back(std::move(tag));
    return true;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    SparseVector kept;
    while (!v.empty()) {
        int p = pivot_[v.lead()];
        if (p < 0) {
            kept.entries.push_back(std::move(v.entries.front()));
            v.entries.erase(v.entries.begin());
            continue;
        }
        Scalar c = -v.entries.front().second;
        v.axpy(c, rows_[static_cast<std::size_t>(p)]);
    }
    return kept;
}

bool EchelonBasis::contains(const SparseVector& v) const {
    SparseVector w = v;
    while (!w.empty()) {
        int p = pivot_[w.lead()];
        if (p < 0) return false;
        Scalar c = -w.entries.front().second;
        w.axpy(c, rows_[static_cast<std::size_t>(p)]);
    }
    return true;
}

std::optional<SparseVector> EchelonBasis::express(SparseVector v) const {
    if (!track_) throw Error(ErrorKind::ShapeMismatch, "basis does not track tags");
    SparseVector coeffs;
    while (!v.empty()) {
        int p = pivot_[v.lead()];
        if (p < 0) return std::nullopt;
        Scalar c = v.entries.front().second;
        v.axpy(-c, rows_[static_cast<std::size_t>(p)]);
        coeffs.axpy(c, tags_[static_cast<std::size_t>(p)]);
    }
    return coeffs;
}

namespace {

std::vector<std::size_t> order_by_density(const SparseMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.column(a).nonzeros() < m.column(b).nonzeros(); });
    return order;
}

EchelonBasis column_basis(const SparseMatrix& m, bool track, std::vector<SparseVector>* kernel) {
    EchelonBasis basis(m.rows(), track);
    for (std::size_t j : order_by_density(m)) {
        if (m.column(j).empty()) {
            if (kernel) kernel->push_back(SparseVector::unit(j));
            continue;
        }
        SparseVector relation;
        bool independent = basis.insert(m.column(j), track ? SparseVector::unit(j) : SparseVector{}, kernel ? &relation : nullptr);
        if (!independent && kernel) kernel->push_back(std::move(relation));
    }
    return basis;
}

} // namespace

std::size_t rank(const SparseMatrix& m) { return column_basis(m, false, nullptr).rank(); }
std::size_t rank(const DenseMatrix& m) { return rank(SparseMatrix::from_dense(m)); }
std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }
std::size_t kernel_dim(const DenseMatrix& m) { return m.cols() - rank(m); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    std::vector<SparseVector> kernel;
    column_basis(m, true, &kernel);
    for (auto& v : kernel) std::sort(v.entries.begin(), v.entries.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return kernel;
}

std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b) {
    EchelonBasis basis = column_basis(a, true, nullptr);
    return basis.express(b);
}

std::size_t cohomology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out) {
    if (d_in.rows() != d_out.cols()) throw Error(ErrorKind::ShapeMismatch, "differentials are not composable");
    if (!(d_out * d_in).is_zero()) throw Error(ErrorKind::CompositionNonzero, "d_out * d_in is not zero");
    return kernel_dim(d_out) - rank(d_in);
}

std::size_t cohomology_dim(const DenseMatrix& d_in, const DenseMatrix& d_out) {
    return cohomology_dim(SparseMatrix::from_dense(d_in), SparseMatrix::from_dense(d_out));
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    auto sm = SparseMatrix::from_dense(m);
    EchelonBasis basis = column_basis(sm, true, nullptr);
    if (basis.rank() != n) return std::nullopt;
    DenseMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = basis.express(SparseVector::unit(j));
        for (const auto& [i, x] : col->entries) inv(i, j) = x;
    }
    return inv;
}

EchelonBasis span(std::size_t dim, const std::vector<SparseVector>& vectors) {
    EchelonBasis basis(dim);
    for (const auto& v : vectors) basis.insert(v);
    return basis;
}

} // namespace mrb
