#pragma once

#include "mrb/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mrb {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);

// Multilinear map V_1 x ... x V_k -> W stored with the output axis last,
// entries in row-major (lexicographic) index order.
class DenseTensor {
  public:
    DenseTensor() = default;
    explicit DenseTensor(Shape shape);
    DenseTensor(Shape shape, std::vector<Scalar> entries);

    const Shape& shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.size(); }
    std::size_t size() const noexcept { return data_.size(); }
    std::size_t inputs() const noexcept { return shape_.empty() ? 0 : shape_.size() - 1; }
    std::size_t out_dim() const noexcept { return shape_.empty() ? 1 : shape_.back(); }

    Scalar& operator[](std::size_t flat) { return data_[flat]; }
    const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
    Scalar& at(std::initializer_list<std::size_t> index);
    const Scalar& at(std::initializer_list<std::size_t> index) const;
    std::size_t flat_index(const std::vector<std::size_t>& index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;

    std::vector<Scalar>& data() noexcept { return data_; }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    bool is_zero() const;
    std::size_t nonzeros() const;

    DenseTensor& operator+=(const DenseTensor& rhs);
    DenseTensor& operator-=(const DenseTensor& rhs);
    DenseTensor& operator*=(const Scalar& c);
    void add_scaled(const DenseTensor& rhs, const Scalar& c);
    DenseTensor operator-() const;

    friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
    friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
    friend DenseTensor operator*(DenseTensor a, const Scalar& c) { return a *= c; }
    friend DenseTensor operator*(const Scalar& c, DenseTensor a) { return a *= c; }
    friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }

  private:
    Shape shape_;
    std::vector<Scalar> data_;
};

// f(..., g(...), ...) with g's inputs spliced in at input position `slot`.
// g must have shape [inputs..., f.shape()[slot]]; a 0-ary g removes the slot.
DenseTensor compose(const DenseTensor& f, std::size_t slot, const DenseTensor& g);

// Bilinear product of two multilinear maps: m(f(...), g(...)).
DenseTensor product(const DenseTensor& m, const DenseTensor& f, const DenseTensor& g);

// Identity map V -> V as a tensor of shape [n, n].
DenseTensor identity_tensor(std::size_t n);

// Moves input `from` to position `to`, shifting the inputs in between.
DenseTensor move_input(const DenseTensor& t, std::size_t from, std::size_t to);

class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<Scalar>& data() const noexcept { return data_; }

    DenseMatrix transpose() const;
    bool is_zero() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator*(const Scalar& c, const DenseMatrix& a);
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

// Linear map source -> target; matrix is target_dim x source_dim.
struct LinearMap {
    DenseMatrix matrix;

    LinearMap() = default;
    explicit LinearMap(DenseMatrix m) : matrix(std::move(m)) {}
    static LinearMap zero(std::size_t source, std::size_t target) { return LinearMap(DenseMatrix(target, source)); }
    static LinearMap identity(std::size_t n) { return LinearMap(DenseMatrix::identity(n)); }
    static LinearMap from_tensor(const DenseTensor& t);

    std::size_t source_dim() const noexcept { return matrix.cols(); }
    std::size_t target_dim() const noexcept { return matrix.rows(); }

    // Shape [source, target], composable with compose().
    DenseTensor as_tensor() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const { return matrix.apply(v); }

    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.matrix == b.matrix; }
};

} // namespace mrb
