#pragma once

#include "mrb/tensor.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mrb {

// Sorted (index, value) pairs, no explicit zeros.
struct SparseVector {
    std::vector<std::pair<std::size_t, Scalar>> entries;

    bool empty() const noexcept { return entries.empty(); }
    std::size_t nonzeros() const noexcept { return entries.size(); }
    std::size_t lead() const { return entries.front().first; }
    Scalar get(std::size_t index) const;

    static SparseVector from_dense(const std::vector<Scalar>& v);
    static SparseVector unit(std::size_t index);
    std::vector<Scalar> to_dense(std::size_t dim) const;

    // this += c * other
    void axpy(const Scalar& c, const SparseVector& other);
    SparseVector& operator*=(const Scalar& c);

    friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.entries == b.entries; }
};

// Column-major sparse matrix.
class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
    static SparseMatrix from_dense(const DenseMatrix& m);
    static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const SparseVector& column(std::size_t j) const { return columns_[j]; }
    SparseVector& column(std::size_t j) { return columns_[j]; }
    const std::vector<SparseVector>& columns() const noexcept { return columns_; }

    DenseMatrix to_dense() const;
    SparseVector apply(const SparseVector& v) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

  private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

// Incremental semi-echelon basis of a subspace of K^dim. Each stored vector has
// a distinct leading index with coefficient 1. Optionally tracks, for every stored
// vector, the combination of inserted tags that produced it.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t dim, bool track_tags = false);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    // Returns true if v was independent of the current span. When it was not and
    // `relation` is given, stores the tag combination that reduced it to zero.
    bool insert(SparseVector v, SparseVector tag = {}, SparseVector* relation = nullptr);
    bool contains(const SparseVector& v) const;
    SparseVector reduce(SparseVector v) const;

    // Reduces v to zero if possible; returns the combination of tags c with v = sum c_i tag-images.
    std::optional<SparseVector> express(SparseVector v) const;

    const std::vector<SparseVector>& vectors() const noexcept { return rows_; }

  private:
    std::size_t dim_;
    bool track_;
    std::vector<SparseVector> rows_, tags_;
    std::vector<int> pivot_;
};

std::size_t rank(const SparseMatrix& m);
std::size_t rank(const DenseMatrix& m);
std::size_t kernel_dim(const SparseMatrix& m);
std::size_t kernel_dim(const DenseMatrix& m);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);
std::optional<SparseVector> solve(const SparseMatrix& a, const SparseVector& b);

// dim ker(d_out) - rank(d_in); throws CompositionNonzero unless d_out * d_in = 0.
std::size_t cohomology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);
std::size_t cohomology_dim(const DenseMatrix& d_in, const DenseMatrix& d_out);

std::optional<DenseMatrix> inverse(const DenseMatrix& m);

// Span of a list of vectors.
EchelonBasis span(std::size_t dim, const std::vector<SparseVector>& vectors);

} // namespace mrb
