#include "mrb/tensor.hpp"

#include "mrb/error.hpp"

#include <numeric>
#include <string>

namespace mrb {

std::size_t shape_size(const Shape& shape) {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

DenseTensor::DenseTensor(Shape shape) : shape_(std::move(shape)), data_(shape_size(shape_)) {}

DenseTensor::DenseTensor(Shape shape, std::vector<Scalar> entries)
    : shape_(std::move(shape)), data_(std::move(entries)) {
    if (data_.size() != shape_size(shape_))
        throw Error(ErrorKind::ShapeMismatch, "tensor entry count does not match shape");
}

std::size_t DenseTensor::flat_index(const std::vector<std::size_t>& index) const {
    if (index.size() != shape_.size()) throw Error(ErrorKind::ShapeMismatch, "index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k] >= shape_[k]) throw Error(ErrorKind::ShapeMismatch, "index out of range");
        flat = flat * shape_[k] + index[k];
    }
    return flat;
}

std::vector<std::size_t> DenseTensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(shape_.size());
    for (std::size_t k = shape_.size(); k-- > 0;) {
        index[k] = flat % shape_[k];
        flat /= shape_[k];
    }
    return index;
}

Scalar& DenseTensor::at(std::initializer_list<std::size_t> index) {
    return data_[flat_index(std::vector<std::size_t>(index))];
}

const Scalar& DenseTensor::at(std::initializer_list<std::size_t> index) const {
    return data_[flat_index(std::vector<std::size_t>(index))];
}

bool DenseTensor::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t DenseTensor::nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_) n += !x.is_zero();
    return n;
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& rhs) {
    if (shape_ != rhs.shape_) throw Error(ErrorKind::ShapeMismatch, "tensor sum of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
    return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& rhs) {
    if (shape_ != rhs.shape_) throw Error(ErrorKind::ShapeMismatch, "tensor difference of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
    return *this;
}

DenseTensor& DenseTensor::operator*=(const Scalar& c) {
    if (c.is_one()) return *this;
    for (auto& x : data_)
        if (!x.is_zero()) x *= c;
    return *this;
}

void DenseTensor::add_scaled(const DenseTensor& rhs, const Scalar& c) {
    if (shape_ != rhs.shape_) throw Error(ErrorKind::ShapeMismatch, "tensor sum of different shapes");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i].add_product(rhs.data_[i], c);
}

DenseTensor DenseTensor::operator-() const {
    DenseTensor r(*this);
    for (auto& x : r.data_)
        if (!x.is_zero()) x = -x;
    return r;
}

DenseTensor compose(const DenseTensor& f, std::size_t slot, const DenseTensor& g) {
    if (slot >= f.inputs()) throw Error(ErrorKind::ShapeMismatch, "composition slot out of range");
    const Shape& fs = f.shape();
    const Shape& gs = g.shape();
    std::size_t ds = fs[slot];
    if (g.out_dim() != ds || gs.empty())
        throw Error(ErrorKind::ShapeMismatch, "composition: output of inner map does not match slot");

    std::size_t pre = 1, post_out = 1;
    for (std::size_t k = 0; k < slot; ++k) pre *= fs[k];
    for (std::size_t k = slot + 1; k < fs.size(); ++k) post_out *= fs[k];
    std::size_t gin = g.size() / ds;

    Shape rs(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(slot));
    rs.insert(rs.end(), gs.begin(), gs.end() - 1);
    rs.insert(rs.end(), fs.begin() + static_cast<std::ptrdiff_t>(slot) + 1, fs.end());
    DenseTensor r(rs);

    std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> by_out(ds);
    for (std::size_t j = 0; j < gin; ++j)
        for (std::size_t t = 0; t < ds; ++t) {
            const Scalar& v = g[j * ds + t];
            if (!v.is_zero()) by_out[t].emplace_back(j, &v);
        }

    for (std::size_t p = 0; p < pre; ++p)
        for (std::size_t t = 0; t < ds; ++t) {
            if (by_out[t].empty()) continue;
            std::size_t fbase = (p * ds + t) * post_out;
            for (std::size_t rest = 0; rest < post_out; ++rest) {
                const Scalar& fv = f[fbase + rest];
                if (fv.is_zero()) continue;
                for (const auto& [j, gv] : by_out[t]) r[(p * gin + j) * post_out + rest].add_product(fv, *gv);
            }
        }
    return r;
}

DenseTensor product(const DenseTensor& m, const DenseTensor& f, const DenseTensor& g) {
    return compose(compose(m, 1, g), 0, f);
}

DenseTensor identity_tensor(std::size_t n) {
    DenseTensor t({n, n});
    for (std::size_t i = 0; i < n; ++i) t[i * n + i] = 1;
    return t;
}

DenseTensor move_input(const DenseTensor& t, std::size_t from, std::size_t to) {
    std::size_t k = t.inputs();
    if (from >= k || to >= k) throw Error(ErrorKind::ShapeMismatch, "input position out of range");
    if (from == to) return t;
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    order.erase(order.begin() + static_cast<std::ptrdiff_t>(from));
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(to), from);
    // order[new position] = old position
    Shape rs(t.shape().size());
    for (std::size_t p = 0; p < k; ++p) rs[p] = t.shape()[order[p]];
    rs[k] = t.shape()[k];
    DenseTensor r(rs);
    std::vector<std::size_t> old_index(k + 1);
    for (std::size_t flat = 0; flat < r.size(); ++flat) {
        auto idx = r.multi_index(flat);
        for (std::size_t p = 0; p < k; ++p) old_index[order[p]] = idx[p];
        old_index[k] = idx[k];
        r[flat] = t[t.flat_index(old_index)];
    }
    return r;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "matrix entry count does not match shape");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
        for (auto v : row) data_.emplace_back(v);
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool DenseMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> DenseMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector size mismatch");
    std::vector<Scalar> r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) r[i].add_product((*this)(i, j), v[j]);
    }
    return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    DenseMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j).add_product(x, b(k, j));
        }
    return r;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    DenseMatrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    DenseMatrix r(a);
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

DenseMatrix operator*(const Scalar& c, const DenseMatrix& a) {
    DenseMatrix r(a);
    for (auto& x : r.data_) x *= c;
    return r;
}

LinearMap LinearMap::from_tensor(const DenseTensor& t) {
    if (t.rank() != 2) throw Error(ErrorKind::ShapeMismatch, "linear map tensor must have rank 2");
    std::size_t s = t.shape()[0], g = t.shape()[1];
    DenseMatrix m(g, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < g; ++j) m(j, i) = t[i * g + j];
    return LinearMap(std::move(m));
}

DenseTensor LinearMap::as_tensor() const {
    std::size_t s = source_dim(), g = target_dim();
    DenseTensor t({s, g});
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < g; ++j) t[i * g + j] = matrix(j, i);
    return t;
}

} // namespace mrb
